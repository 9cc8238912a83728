#include "pspec/numkernel.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>

namespace pspec {

ComplexDenseMatrix::ComplexDenseMatrix(Matrix m) : mat_(std::move(m)) {
  if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
    throw InputError("matrix must be square with dimension >= 1, got " +
                     std::to_string(mat_.rows()) + "x" + std::to_string(mat_.cols()));
  }
  if (!mat_.allFinite()) {
    throw InputError("matrix has non-finite entries");
  }
}

}  // namespace pspec

namespace pspec::numkernel {

SingularSpectrum singular_values(const ComplexDenseMatrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m.mat(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  SingularSpectrum out;
  const auto& sv = svd.singularValues();
  out.values.assign(sv.data(), sv.data() + sv.size());
  const int last = static_cast<int>(sv.size()) - 1;
  out.left_min = svd.matrixU().col(last);
  out.right_min = svd.matrixV().col(last);
  return out;
}

double smallest_singular_value(const ComplexDenseMatrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m.mat());
  return svd.singularValues()(m.dim() - 1);
}

double operator_norm(const ComplexDenseMatrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m.mat());
  return svd.singularValues()(0);
}

double norm_2x2(const ComplexDenseMatrix& m) {
  if (m.dim() != 2) throw InputError("norm_2x2 requires a 2x2 matrix");
  const Matrix& a = m.mat();
  const Matrix g = a.adjoint() * a;  // Hermitian positive semidefinite
  const double tr = g(0, 0).real() + g(1, 1).real();
  const double det = (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0)).real();
  const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
  return std::sqrt(std::max((tr + disc) / 2.0, 0.0));
}

std::vector<Complex> eigenvalues(const ComplexDenseMatrix& m) {
  if (m.dim() == 1) return {m(0, 0)};
  Eigen::ComplexEigenSolver<Matrix> es(m.mat(), /*computeEigenvectors=*/false);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("eigenvalue iteration failed to converge");
  }
  const auto& ev = es.eigenvalues();
  return std::vector<Complex>(ev.data(), ev.data() + ev.size());
}

int numerical_rank(const ComplexDenseMatrix& m, double tol) {
  Eigen::JacobiSVD<Matrix> svd(m.mat());
  const auto& sv = svd.singularValues();
  if (tol < 0) tol = m.dim() * 1e-12 * sv(0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol) ++rank;
  }
  return rank;
}

namespace {

// Exact min-sum assignment over bitmasks; fine for the desk-scale multisets
// (n <= 20) this library deals in.
double assignment_max_edge(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  const int n = static_cast<int>(a.size());
  const std::size_t states = std::size_t{1} << n;
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> cost(states, inf);
  std::vector<int> choice(states * static_cast<std::size_t>(n), -1);
  cost[0] = 0.0;
  for (std::size_t mask = 0; mask < states; ++mask) {
    if (cost[mask] == inf) continue;
    const int i = __builtin_popcountll(mask);  // next a-index to place
    if (i == n) continue;
    for (int j = 0; j < n; ++j) {
      if (mask & (std::size_t{1} << j)) continue;
      const std::size_t next = mask | (std::size_t{1} << j);
      const double c = cost[mask] + std::abs(a[i] - b[j]);
      if (c < cost[next]) {
        cost[next] = c;
        choice[next * n + i] = j;
      }
    }
  }
  // walk back through the optimal assignment to find its largest edge
  double max_edge = 0.0;
  std::size_t mask = states - 1;
  for (int i = n - 1; i >= 0; --i) {
    const int j = choice[mask * n + i];
    max_edge = std::max(max_edge, std::abs(a[i] - b[j]));
    mask &= ~(std::size_t{1} << j);
  }
  return max_edge;
}

}  // namespace

double eigenvalue_match_distance(const std::vector<Complex>& a,
                                 const std::vector<Complex>& b) {
  if (a.size() != b.size()) {
    throw InputError("eigenvalue multisets differ in size: " +
                     std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  if (a.empty()) return 0.0;
  if (a.size() > 20) {
    throw InputError("eigenvalue_match_distance supports multisets up to size 20");
  }
  return assignment_max_edge(a, b);
}

}  // namespace pspec::numkernel
