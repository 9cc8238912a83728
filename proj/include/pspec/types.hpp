#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace pspec {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RowVector = Eigen::RowVectorXcd;
using RealMatrix = Eigen::MatrixXd;

// Bad user-supplied data (non-finite entries, malformed files, violated
// preconditions on inputs).  The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Work estimate above the configured budget.  CLI exit code 3.
struct ResourceBudgetError : std::runtime_error {
  explicit ResourceBudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

struct LevelNotPresentError : InputError {
  explicit LevelNotPresentError(const std::string& msg) : InputError(msg) {}
};
struct SeedOutsideLevelSetError : InputError {
  explicit SeedOutsideLevelSetError(const std::string& msg) : InputError(msg) {}
};
struct MergedComponentsError : InputError {
  explicit MergedComponentsError(const std::string& msg) : InputError(msg) {}
};
struct SingularMatrixError : InputError {
  explicit SingularMatrixError(const std::string& msg) : InputError(msg) {}
};
struct OrthogonalPairError : InputError {
  explicit OrthogonalPairError(const std::string& msg) : InputError(msg) {}
};
struct RepeatedEigenvalueError : InputError {
  explicit RepeatedEigenvalueError(const std::string& msg) : InputError(msg) {}
};
struct UnsupportedStructureError : InputError {
  explicit UnsupportedStructureError(const std::string& msg) : InputError(msg) {}
};
struct DecoupleFirstError : InputError {
  explicit DecoupleFirstError(const std::string& msg) : InputError(msg) {}
};

// Square complex matrix with all entries finite, checked once on construction.
class ComplexDenseMatrix {
 public:
  explicit ComplexDenseMatrix(Matrix m);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const Matrix& mat() const { return mat_; }
  const Complex& operator()(int i, int j) const { return mat_(i, j); }

 private:
  Matrix mat_;
};

}  // namespace pspec
