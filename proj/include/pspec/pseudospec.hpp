#pragma once

#include <cstdint>
#include <vector>

#include "pspec/types.hpp"

namespace pspec::pseudospec {

// Closed rectangle [re_min, re_max] x [im_min, im_max] sampled on an
// nx-by-ny uniform grid that includes both endpoints.
struct Region {
  double re_min = -1.0, re_max = 1.0, im_min = -1.0, im_max = 1.0;
  int nx = 2, ny = 2;
};

struct ResolventGrid {
  Region region;
  int matrix_dim = 0;
  RealMatrix sigma_min;  // nx x ny, entry (i, j) at point(i, j)

  double re_step() const { return (region.re_max - region.re_min) / (region.nx - 1); }
  double im_step() const { return (region.im_max - region.im_min) / (region.ny - 1); }
  Complex point(int i, int j) const {
    return {region.re_min + i * re_step(), region.im_min + j * im_step()};
  }
};

struct GridOptions {
  double budget = 4e9;  // admissible nx * ny * dim^3
  int threads = 0;      // 0 = hardware concurrency
};

// 1 / s_min(zI - A); +infinity when s_min underflows below 1e-300.
double resolvent_norm(const ComplexDenseMatrix& a, Complex z);

// Strict sublevel test s_min(zI - A) < eps.
bool is_in_pseudospectrum(const ComplexDenseMatrix& a, Complex z, double eps);

// Unit vector v with ||(zI - A) v|| = s_min(zI - A).
Vector pseudoeigenvector(const ComplexDenseMatrix& a, Complex z);

ResolventGrid compute_grid(const ComplexDenseMatrix& a, const Region& region,
                           const GridOptions& opt = {});

struct Polyline {
  std::vector<Complex> vertices;
  bool closed = false;  // open polylines terminate on the region boundary
};

struct ContourSet {
  double eps = 0.0;
  std::vector<Polyline> polylines;
};

// Level set {s_min = eps} by marching squares with linear edge interpolation.
ContourSet extract_contours(const ResolventGrid& grid, double eps);

struct GridIndex {
  int i = 0, j = 0;
};

// 4-connected component of {s_min < eps} seeded at the grid point nearest
// to lambda.
std::vector<GridIndex> component_restrict(const ResolventGrid& grid, double eps,
                                          Complex lambda);

struct RadialExtents {
  double r_max = 0.0, r_min = 0.0;
  double phi_max = 0.0, phi_min = 0.0;  // extremal ray directions from lambda
};

// Distances from lambda to the component boundary: grid-edge crossings,
// then 1-D bisection on s_min along the two extremal rays down to
// reltol * radius.
RadialExtents radial_extents(const ComplexDenseMatrix& a, const ResolventGrid& grid,
                             const std::vector<GridIndex>& component, double eps,
                             Complex lambda, double reltol = 1e-6);

// Eigenvalues of A + E over `trials` draws of E: complex Gaussian direction,
// rescaled so ||E|| = u * eps with u uniform on (0, 1).  Deterministic in seed.
std::vector<Complex> sample_perturbed_eigenvalues(const ComplexDenseMatrix& a,
                                                  double eps, int trials,
                                                  std::uint64_t seed);

ComplexDenseMatrix direct_sum(const ComplexDenseMatrix& a, const ComplexDenseMatrix& b);

}  // namespace pspec::pseudospec
