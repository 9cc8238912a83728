#pragma once

#include <vector>

#include "pspec/jordan.hpp"
#include "pspec/types.hpp"

namespace pspec::bidiagonal {
struct PeriodicBidiagonal;
}

namespace pspec::asymptotics {

// Exact structural input: a direct sum of Jordan blocks in the given order.
// P = Q = I, so the eigenvector bundles are standard basis vectors.
JordanStructure jordan_structure_analytic(const std::vector<JordanBlockSpec>& blocks);

// Delegations for the other two analytic sources.
JordanStructure jordan_structure_analytic(const bidiagonal::PeriodicBidiagonal& spec);
JordanStructure jordan_structure_analytic(const ComplexDenseMatrix& two_by_two);

const EigenvalueStructure& structure_for(const JordanStructure& js, Complex lambda);

// kappa(V) = s_max / s_min.  Throws SingularMatrixError when
// s_min <= 1e-12 * s_max.
double condition_number_matrix(const Matrix& v);

// kappa = ||u|| ||v|| / |u* v|; throws OrthogonalPairError when
// |u* v| < 1e-14 ||u|| ||v||.
double condition_number_eigenvalue(const Vector& u, const Vector& v);

// One disk per eigenvalue of A, radius kappa(V) * eps, for diagonalizable
// A = V diag V^-1.
DiskUnionBound bauer_fike_disks(const ComplexDenseMatrix& a, const Matrix& v, double eps);

// Per-eigenvalue radii n * kappa(lambda_j) * eps; requires numerically
// distinct eigenvalues (pairwise gaps > 1e-8 ||A||).
DiskUnionBound bauer_fike_eigenvalue_disks(const ComplexDenseMatrix& a, double eps);

// ||X Y|| for the maximal-block eigenvector bundles at lambda.
double audit_coefficient(const JordanStructure& js, Complex lambda);

// One asymptotic disk (lambda, C, n) per eigenvalue; radius (C eps)^(1/n).
DiskUnionBound audit_disks(const JordanStructure& js);

// Inner-bound radius (eps (1 + eps)^(n-1))^(1/n): B(lambda, r) lies inside
// the eps-pseudospectrum of any size-n Jordan block with unit superdiagonal.
double jordan_lower_bound_radius(int n, double eps);

// lambda + the n distinct n-th roots of gamma * eps, for every gamma.
std::vector<Complex> lidskii_predictions(Complex lambda, const std::vector<Complex>& gammas,
                                         int n, double eps);

// Unit-norm rank-one E = v u* built from the top singular triple of X Y.
// Maximizes the top eigenvalue of Y E X over ||E|| <= 1, where it equals ||X Y||.
ComplexDenseMatrix worst_perturbation(const JordanStructure& js, Complex lambda);

struct FiniteRankBound {
  int rank = 0;         // m = numerical_rank(A)
  int exponent = 1;     // eps-exponent denominator m + 1
  double coefficient = 0.0;
  bool holds = false;   // containment verified at the requested eps
};

// Spectral inclusion sigma_eps(A) in sigma(A) + B(0, C eps^(1/(m+1))), with C
// calibrated by radial probing at eps = 1e-3 and the containment re-checked
// at the requested eps.
FiniteRankBound finite_rank_bound(const ComplexDenseMatrix& a, double eps);

}  // namespace pspec::asymptotics
