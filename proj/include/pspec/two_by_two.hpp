#pragma once

#include "pspec/types.hpp"

namespace pspec::two_by_two {

enum class Kind { distinct_diagonalizable, defective, scalar_multiple_of_identity };

struct Classification {
  Kind kind = Kind::scalar_multiple_of_identity;
  Complex lambda1{}, lambda2{};  // equal unless distinct_diagonalizable
  // Columns: eigenvectors (distinct case) or the Jordan pair [v1, w] with
  // (A - lambda) w = v1 (defective case).  Unused for scalar multiples.
  Matrix v;
  double theta = 0.0;  // eigenvector angle in (0, pi/2], distinct case only
};

// Discriminant-based split with tolerance 1e-10 * (1 + ||A||^2); the
// defective/scalar split compares ||A - lambda I|| to the same tolerance.
Classification classify(const ComplexDenseMatrix& a);

// C = (|a|^2 + |c|^2) / |ad - bc| for the stored basis [[a, b], [c, d]];
// invariant under admissible rescalings of the Jordan pair.
double defective_coefficient(const Classification& cls);

// Radius sqrt(C * eps + eps^2) of the exact circular pseudospectrum boundary
// around the defective eigenvalue.
double defective_radius(const Classification& cls, double eps);

// (eps^2 - |z - l1|^2)(eps^2 - |z - l2|^2) - eps^2 |l1 - l2|^2 cot^2(theta).
// Vanishes exactly on the pseudospectrum boundary; verified orientation:
// negative inside the components, positive far outside (small eps).
double boundary_residual(const Classification& cls, Complex z, double eps);

struct Radii {
  double r_max = 0.0, r_min = 0.0;
};

// Extremal boundary distances from one eigenvalue of a distinct pair with
// separation y and eigenvector angle theta:
//   r_max = (y - sqrt(y^2 + 4 eps^2 - 4 y eps csc)) / 2   (toward the other)
//   r_min = (sqrt(y^2 + 4 eps^2 + 4 y eps csc) - y) / 2   (away from it)
// evaluated in rationalized form.  Throws MergedComponentsError once the
// r_max radicand goes negative.
Radii rmax_rmin_closed_form(double y, double theta, double eps);

// First-order expansion of r_max / r_min: 1 + (2 cos(theta) cot(theta)) eps / y.
double ratio_first_order(double y, double theta, double eps);

}  // namespace pspec::two_by_two
