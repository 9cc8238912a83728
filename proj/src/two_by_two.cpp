#include "pspec/two_by_two.hpp"

#include <cmath>

#include "pspec/numkernel.hpp"

namespace pspec::two_by_two {

namespace {

void require_2x2(const ComplexDenseMatrix& a) {
  if (a.dim() != 2) throw InputError("operation requires a 2x2 matrix");
}

void require_positive_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InputError("eps must be positive and finite");
  }
}

double require_theta(double theta) {
  if (!(theta > 0.0) || !(theta <= M_PI / 2.0)) {
    throw InputError("theta must lie in (0, pi/2]");
  }
  return theta;
}

}  // namespace

Classification classify(const ComplexDenseMatrix& a) {
  require_2x2(a);
  const Matrix& m = a.mat();
  const Complex tr = m(0, 0) + m(1, 1);
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex disc = tr * tr - 4.0 * det;
  const double scale = numkernel::norm_2x2(a);
  const double tol = 1e-10 * (1.0 + scale * scale);

  Classification cls;
  if (std::abs(disc) > tol) {
    cls.kind = Kind::distinct_diagonalizable;
    const Complex root = std::sqrt(disc);
    Complex l1 = (tr + root) / 2.0, l2 = (tr - root) / 2.0;
    if (l2.real() > l1.real() ||
        (l2.real() == l1.real() && l2.imag() > l1.imag())) {
      std::swap(l1, l2);
    }
    cls.lambda1 = l1;
    cls.lambda2 = l2;
    auto eigvec = [&](Complex lam) {
      // rows of (A - lam I) are proportional; take the larger-normed kernel form
      Vector c1(2), c2(2);
      c1 << m(0, 1), lam - m(0, 0);
      c2 << lam - m(1, 1), m(1, 0);
      Vector v = c1.norm() >= c2.norm() ? c1 : c2;
      return Vector(v / v.norm());
    };
    cls.v.resize(2, 2);
    cls.v.col(0) = eigvec(l1);
    cls.v.col(1) = eigvec(l2);
    const double s = std::abs(cls.v(0, 0) * cls.v(1, 1) - cls.v(0, 1) * cls.v(1, 0));
    const double c = std::abs(cls.v.col(0).dot(cls.v.col(1)));
    cls.theta = std::atan2(s, c);
    return cls;
  }

  const Complex lam = tr / 2.0;
  cls.lambda1 = cls.lambda2 = lam;
  Matrix nil = m;
  nil.diagonal().array() -= lam;
  if (nil.norm() <= tol) {
    cls.kind = Kind::scalar_multiple_of_identity;
    return cls;
  }
  cls.kind = Kind::defective;
  // (A - lam) is nilpotent: any w with (A - lam) w != 0 gives the chain
  // v1 = (A - lam) w, (A - lam) v1 = 0.
  const int wi = nil.col(0).norm() >= nil.col(1).norm() ? 0 : 1;
  Vector w = Vector::Zero(2);
  w(wi) = 1.0;
  Vector v1 = nil * w;
  const double t = v1.norm();
  cls.v.resize(2, 2);
  cls.v.col(0) = v1 / t;
  cls.v.col(1) = w / t;
  return cls;
}

double defective_coefficient(const Classification& cls) {
  if (cls.kind != Kind::defective) {
    throw InputError("defective_coefficient requires a defective classification");
  }
  const Complex a = cls.v(0, 0), b = cls.v(0, 1), c = cls.v(1, 0), d = cls.v(1, 1);
  return (std::norm(a) + std::norm(c)) / std::abs(a * d - b * c);
}

double defective_radius(const Classification& cls, double eps) {
  require_positive_eps(eps);
  const double c = defective_coefficient(cls);
  return std::sqrt(c * eps + eps * eps);
}

double boundary_residual(const Classification& cls, Complex z, double eps) {
  require_positive_eps(eps);
  if (cls.kind != Kind::distinct_diagonalizable) {
    throw InputError("boundary_residual requires distinct eigenvalues");
  }
  const double y = std::abs(cls.lambda1 - cls.lambda2);
  const double cot = std::cos(cls.theta) / std::sin(cls.theta);
  const double d1 = std::norm(z - cls.lambda1), d2 = std::norm(z - cls.lambda2);
  return (eps * eps - d1) * (eps * eps - d2) - eps * eps * y * y * cot * cot;
}

Radii rmax_rmin_closed_form(double y, double theta, double eps) {
  require_positive_eps(eps);
  require_theta(theta);
  if (!(y > 0.0)) throw InputError("eigenvalue separation y must be positive");
  const double csc = 1.0 / std::sin(theta);
  const double rad_max = y * y + 4.0 * eps * eps - 4.0 * y * eps * csc;
  if (rad_max < 0.0) {
    throw MergedComponentsError("components merge: y^2 + 4 eps^2 - 4 y eps csc(theta) < 0");
  }
  Radii r;
  r.r_max = 2.0 * eps * (y * csc - eps) / (y + std::sqrt(rad_max));
  r.r_min = 2.0 * eps * (y * csc + eps) /
            (y + std::sqrt(y * y + 4.0 * eps * eps + 4.0 * y * eps * csc));
  return r;
}

double ratio_first_order(double y, double theta, double eps) {
  require_positive_eps(eps);
  require_theta(theta);
  if (!(y > 0.0)) throw InputError("eigenvalue separation y must be positive");
  const double cot = std::cos(theta) / std::sin(theta);
  return 1.0 + 2.0 * std::cos(theta) * cot * eps / y;
}

}  // namespace pspec::two_by_two
