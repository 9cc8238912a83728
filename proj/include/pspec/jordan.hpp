#pragma once

#include <vector>

#include "pspec/types.hpp"

namespace pspec::asymptotics {

struct JordanBlockSpec {
  Complex eigenvalue{};
  int size = 1;
};

// Per-eigenvalue Jordan data with the biorthogonally normalized eigenvector
// bundles of the maximal blocks: x columns are right eigenvectors, y rows are
// left eigenvectors, scaled as the first columns / last rows of a similarity
// pair P, Q with Q P = I.
struct EigenvalueStructure {
  Complex lambda{};
  std::vector<int> block_sizes;  // weakly decreasing
  int largest_block = 1;         // n
  int max_block_count = 1;       // number of blocks of size n
  Matrix x;                      // dim x max_block_count
  Matrix y;                      // max_block_count x dim
};

struct JordanStructure {
  int dim = 0;
  std::vector<EigenvalueStructure> per_eigenvalue;
};

enum class BoundKind { audit, bauer_fike, jordan_lower, finite_rank };

struct DiskBound {
  Complex center{};
  double coefficient = 0.0;  // C (kappa for bauer_fike, unused for jordan_lower)
  int order = 1;             // n (block size; rank + 1 for finite_rank)
  BoundKind kind = BoundKind::audit;
};

struct DiskUnionBound {
  std::vector<DiskBound> disks;
};

// Radius of one disk at a given eps:
//   audit        (C eps)^(1/n)           outer estimate, asymptotic
//   bauer_fike   C eps                   outer bound (C = kappa)
//   jordan_lower (eps (1+eps)^(n-1))^(1/n)  inner bound, exact containment
//   finite_rank  C eps^(1/n)             outer bound, calibrated C
double disk_radius(const DiskBound& disk, double eps);

}  // namespace pspec::asymptotics
