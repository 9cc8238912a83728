#pragma once

#include <cstdint>
#include <vector>

#include "pspec/types.hpp"

namespace pspec::numkernel {

struct SingularSpectrum {
  std::vector<double> values;  // weakly decreasing, all >= 0
  Vector left_min;             // unit left singular vector of the smallest value
  Vector right_min;            // unit right singular vector of the smallest value
};

// Full singular value decomposition data of m.  values[i] are weakly
// decreasing; the minimal pair satisfies m * right_min = values.back() * left_min.
SingularSpectrum singular_values(const ComplexDenseMatrix& m);

// Smallest singular value only (no vectors); same kernel as singular_values.
double smallest_singular_value(const ComplexDenseMatrix& m);

// Largest singular value.
double operator_norm(const ComplexDenseMatrix& m);

// Closed-form operator norm of a 2x2 matrix:
//   ||m||^2 = (tr(m* m) + sqrt(tr(m* m)^2 - 4 det(m* m))) / 2.
double norm_2x2(const ComplexDenseMatrix& m);

// All eigenvalues, algebraic multiplicity respected, unspecified order.
std::vector<Complex> eigenvalues(const ComplexDenseMatrix& m);

// Number of singular values above tol.  tol < 0 selects the default
// n * 1e-12 * s_max.
int numerical_rank(const ComplexDenseMatrix& m, double tol = -1.0);

// Largest pairwise distance under a minimum-weight perfect matching of the
// two eigenvalue multisets.  Sizes must agree.
double eigenvalue_match_distance(const std::vector<Complex>& a,
                                 const std::vector<Complex>& b);

}  // namespace pspec::numkernel
