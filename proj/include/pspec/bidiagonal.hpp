#pragma once

#include <vector>

#include "pspec/jordan.hpp"
#include "pspec/types.hpp"

namespace pspec::bidiagonal {

// Upper bidiagonal N x N matrix whose diagonal repeats a period of k values
// a_1..a_k (row i carries a_{((i-1) mod k) + 1}) under a free superdiagonal
// b_1..b_{N-1}.  A general non-periodic bidiagonal matrix is the k = N case.
struct PeriodicBidiagonal {
  int n_total = 1;                   // N
  int period = 1;                    // k
  std::vector<Complex> diag_period;  // a_1..a_k
  std::vector<Complex> superdiag;    // b_1..b_{N-1}

  // N = k * n + r with 0 < r <= k: n complete periods plus a partial one.
  int complete_periods() const { return (n_total - 1) / period; }
  int partial_len() const { return n_total - period * complete_periods(); }
  Complex diag_at(int i) const { return diag_period[i % period]; }  // 0-based row
};

void validate(const PeriodicBidiagonal& spec);

ComplexDenseMatrix realize(const PeriodicBidiagonal& spec);

// Split at zero superdiagonal entries into independent pieces, each stored
// with period = piece length (periodicity is generally lost).
std::vector<PeriodicBidiagonal> decouple(const PeriodicBidiagonal& spec);

struct EigenvectorPair {
  Complex eigenvalue{};
  Vector right;            // supported on 1..first occurrence, last entry 1
  RowVector left;          // supported on last occurrence..N
  int block_size = 1;      // number of occurrences of the eigenvalue
  double coefficient = 0;  // C = ||right|| * ||left||
  bool left_fallback_used = false;
};

// ell is the 1-based first occurrence of its value within the period.
// Requires every b_i != 0.
Vector right_eigenvector(const PeriodicBidiagonal& spec, int ell);
RowVector left_eigenvector(const PeriodicBidiagonal& spec, int ell,
                           bool* fallback_used = nullptr);
EigenvectorPair eigenvector_pair(const PeriodicBidiagonal& spec, int ell);

// One Jordan block per distinct diagonal value, of size equal to its
// occurrence count, with the closed-form eigenvector bundles.
// Requires every b_i != 0 (otherwise DecoupleFirstError).
asymptotics::JordanStructure jordan_structure_of(const PeriodicBidiagonal& spec);

// Asymptotic disks (lambda_j, C_j, n_j); zero superdiagonal entries are
// handled by decoupling and taking the union over the pieces.
asymptotics::DiskUnionBound asymptotic_disks(const PeriodicBidiagonal& spec);

// Number of left-eigenvector formula fallbacks since process start.
long fallback_count();

}  // namespace pspec::bidiagonal
