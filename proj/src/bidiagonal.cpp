#include "pspec/bidiagonal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>

#include "pspec/numkernel.hpp"

namespace pspec::bidiagonal {

namespace {

std::atomic<long> g_fallbacks{0};

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_nonzero_superdiagonal(const PeriodicBidiagonal& spec) {
  for (const Complex& b : spec.superdiag) {
    if (b == Complex(0.0, 0.0)) {
      throw DecoupleFirstError("superdiagonal has zero entries; decouple first");
    }
  }
}

// 0-based positions of the rows carrying the given diagonal value.
std::vector<int> occurrences(const PeriodicBidiagonal& spec, Complex alpha) {
  std::vector<int> occ;
  for (int i = 0; i < spec.n_total; ++i) {
    if (spec.diag_at(i) == alpha) occ.push_back(i);
  }
  return occ;
}

int validated_first_occurrence(const PeriodicBidiagonal& spec, int ell) {
  if (ell < 1 || ell > spec.period || ell > spec.n_total) {
    throw InputError("ell must index a diagonal value in 1..k");
  }
  const Complex alpha = spec.diag_period[ell - 1];
  for (int i = 0; i < ell - 1; ++i) {
    if (spec.diag_period[i] == alpha) {
      throw InputError("ell must be the first occurrence of its value in the period");
    }
  }
  return ell - 1;
}

}  // namespace

void validate(const PeriodicBidiagonal& spec) {
  if (spec.n_total < 1 || spec.period < 1) {
    throw InputError("bidiagonal spec needs N >= 1 and k >= 1");
  }
  if (static_cast<int>(spec.diag_period.size()) != spec.period) {
    throw InputError("diag_period size must equal the period k");
  }
  if (static_cast<int>(spec.superdiag.size()) != spec.n_total - 1) {
    throw InputError("superdiag size must equal N - 1");
  }
  for (const Complex& c : spec.diag_period) {
    if (!finite(c)) throw InputError("diagonal entries must be finite");
  }
  for (const Complex& c : spec.superdiag) {
    if (!finite(c)) throw InputError("superdiagonal entries must be finite");
  }
}

ComplexDenseMatrix realize(const PeriodicBidiagonal& spec) {
  validate(spec);
  Matrix m = Matrix::Zero(spec.n_total, spec.n_total);
  for (int i = 0; i < spec.n_total; ++i) m(i, i) = spec.diag_at(i);
  for (int i = 0; i + 1 < spec.n_total; ++i) m(i, i + 1) = spec.superdiag[i];
  return ComplexDenseMatrix(std::move(m));
}

std::vector<PeriodicBidiagonal> decouple(const PeriodicBidiagonal& spec) {
  validate(spec);
  std::vector<PeriodicBidiagonal> pieces;
  int start = 0;
  for (int cut = 0; cut <= spec.n_total - 1; ++cut) {
    const bool at_end = cut == spec.n_total - 1;
    if (!at_end && spec.superdiag[cut] != Complex(0.0, 0.0)) continue;
    const int len = cut - start + 1;
    PeriodicBidiagonal piece;
    piece.n_total = len;
    piece.period = len;
    for (int i = start; i <= cut; ++i) piece.diag_period.push_back(spec.diag_at(i));
    for (int i = start; i < cut; ++i) piece.superdiag.push_back(spec.superdiag[i]);
    pieces.push_back(std::move(piece));
    start = cut + 1;
  }
  return pieces;
}

Vector right_eigenvector(const PeriodicBidiagonal& spec, int ell) {
  validate(spec);
  require_nonzero_superdiagonal(spec);
  const int first = validated_first_occurrence(spec, ell);
  const Complex alpha = spec.diag_period[ell - 1];
  Vector v = Vector::Zero(spec.n_total);
  v(first) = 1.0;
  for (int i = first - 1; i >= 0; --i) {
    v(i) = v(i + 1) * spec.superdiag[i] / (alpha - spec.diag_at(i));
  }
  return v;
}

RowVector left_eigenvector(const PeriodicBidiagonal& spec, int ell, bool* fallback_used) {
  validate(spec);
  require_nonzero_superdiagonal(spec);
  validated_first_occurrence(spec, ell);
  const Complex alpha = spec.diag_period[ell - 1];
  const std::vector<int> occ = occurrences(spec, alpha);
  const int first = occ.front(), last = occ.back();
  const int n = spec.n_total;

  // scale of the anchor entry: the biorthogonality convention pins
  // u_last = (b_first ... b_{last-1}) / prod of (alpha - d_s) over the
  // strictly intermediate non-occurrence rows s.
  Complex anchor = 1.0;
  for (int s = first; s < last; ++s) anchor *= spec.superdiag[s];
  for (int s = first + 1; s < last; ++s) {
    if (spec.diag_at(s) != alpha) anchor /= (alpha - spec.diag_at(s));
  }

  RowVector u = RowVector::Zero(n);
  u(last) = anchor;
  for (int i = last + 1; i < n; ++i) {
    u(i) = u(i - 1) * spec.superdiag[i - 1] / (alpha - spec.diag_at(i));
  }
  if (fallback_used) *fallback_used = false;

  const ComplexDenseMatrix a = realize(spec);
  const double residual = (u * a.mat() - alpha * u).norm();
  const double tol = 1e-8 * numkernel::operator_norm(a) * u.norm();
  if (residual <= tol) return u;

  // Oracle route: with all b_i nonzero the left null space of (A - alpha I)
  // is one-dimensional, so the smallest singular triple recovers u up to
  // scale; keep the formula's anchor-entry scale.
  g_fallbacks.fetch_add(1);
  if (fallback_used) *fallback_used = true;
  std::fprintf(stderr,
               "[bidiagonal] left eigenvector formula residual %.3e > %.3e "
               "(N=%d k=%d ell=%d); using null-vector fallback\n",
               residual, tol, spec.n_total, spec.period, ell);
  Matrix shifted = a.mat();
  shifted.diagonal().array() -= alpha;
  const auto ss = numkernel::singular_values(ComplexDenseMatrix(std::move(shifted)));
  RowVector oracle = ss.left_min.adjoint();
  if (oracle(last) == Complex(0.0, 0.0)) {
    throw std::runtime_error("fallback left eigenvector vanishes at its anchor entry");
  }
  oracle *= anchor / oracle(last);
  return oracle;
}

EigenvectorPair eigenvector_pair(const PeriodicBidiagonal& spec, int ell) {
  EigenvectorPair pair;
  pair.eigenvalue = spec.diag_period[ell - 1];
  pair.right = right_eigenvector(spec, ell);
  pair.left = left_eigenvector(spec, ell, &pair.left_fallback_used);
  pair.block_size = static_cast<int>(occurrences(spec, pair.eigenvalue).size());
  pair.coefficient = pair.right.norm() * pair.left.norm();
  return pair;
}

asymptotics::JordanStructure jordan_structure_of(const PeriodicBidiagonal& spec) {
  validate(spec);
  require_nonzero_superdiagonal(spec);
  asymptotics::JordanStructure js;
  js.dim = spec.n_total;
  for (int ell = 1; ell <= std::min(spec.period, spec.n_total); ++ell) {
    bool is_first = true;
    for (int i = 0; i < ell - 1; ++i) {
      if (spec.diag_period[i] == spec.diag_period[ell - 1]) {
        is_first = false;
        break;
      }
    }
    if (!is_first) continue;
    const EigenvectorPair pair = eigenvector_pair(spec, ell);
    asymptotics::EigenvalueStructure st;
    st.lambda = pair.eigenvalue;
    st.block_sizes = {pair.block_size};
    st.largest_block = pair.block_size;
    st.max_block_count = 1;
    st.x = pair.right;
    st.y = pair.left;
    js.per_eigenvalue.push_back(std::move(st));
  }
  return js;
}

asymptotics::DiskUnionBound asymptotic_disks(const PeriodicBidiagonal& spec) {
  validate(spec);
  asymptotics::DiskUnionBound bound;
  for (const PeriodicBidiagonal& piece : decouple(spec)) {
    for (int ell = 1; ell <= piece.period; ++ell) {
      bool is_first = true;
      for (int i = 0; i < ell - 1; ++i) {
        if (piece.diag_period[i] == piece.diag_period[ell - 1]) {
          is_first = false;
          break;
        }
      }
      if (!is_first) continue;
      const EigenvectorPair pair = eigenvector_pair(piece, ell);
      bound.disks.push_back({pair.eigenvalue, pair.coefficient, pair.block_size,
                             asymptotics::BoundKind::audit});
    }
  }
  return bound;
}

long fallback_count() { return g_fallbacks.load(); }

}  // namespace pspec::bidiagonal
