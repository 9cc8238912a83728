#include "pspec/pseudospec.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <thread>
#include <unordered_map>

#include "pspec/numkernel.hpp"

namespace pspec::pseudospec {

namespace {

void require_positive_eps(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw InputError("eps must be positive and finite");
  }
}

double sigma_min_at(const ComplexDenseMatrix& a, Complex z) {
  Matrix m = -a.mat();
  m.diagonal().array() += z;
  return numkernel::smallest_singular_value(ComplexDenseMatrix(std::move(m)));
}

}  // namespace

double resolvent_norm(const ComplexDenseMatrix& a, Complex z) {
  const double s = sigma_min_at(a, z);
  if (s < 1e-300) return std::numeric_limits<double>::infinity();
  return 1.0 / s;
}

bool is_in_pseudospectrum(const ComplexDenseMatrix& a, Complex z, double eps) {
  require_positive_eps(eps);
  return sigma_min_at(a, z) < eps;
}

Vector pseudoeigenvector(const ComplexDenseMatrix& a, Complex z) {
  Matrix m = -a.mat();
  m.diagonal().array() += z;
  return numkernel::singular_values(ComplexDenseMatrix(std::move(m))).right_min;
}

ResolventGrid compute_grid(const ComplexDenseMatrix& a, const Region& region,
                           const GridOptions& opt) {
  if (!(region.re_min < region.re_max) || !(region.im_min < region.im_max) ||
      region.nx < 2 || region.ny < 2) {
    throw InputError("region must have positive extent and nx, ny >= 2");
  }
  const double n = a.dim();
  const double work = static_cast<double>(region.nx) * region.ny * n * n * n;
  if (work > opt.budget) {
    throw ResourceBudgetError("grid work " + std::to_string(work) +
                              " exceeds budget " + std::to_string(opt.budget));
  }

  ResolventGrid grid;
  grid.region = region;
  grid.matrix_dim = a.dim();
  grid.sigma_min.resize(region.nx, region.ny);

  int threads = opt.threads > 0 ? opt.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, region.ny);

  std::atomic<int> next_col{0};
  auto worker = [&]() {
    for (;;) {
      const int j = next_col.fetch_add(1);
      if (j >= region.ny) return;
      for (int i = 0; i < region.nx; ++i) {
        Matrix m = -a.mat();
        m.diagonal().array() += grid.point(i, j);
        Eigen::JacobiSVD<Matrix> svd(m);
        grid.sigma_min(i, j) = svd.singularValues()(a.dim() - 1);
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return grid;
}

namespace {

// Crossing sites live on grid edges; keying segments by edge identity makes
// the chaining exact, with no floating-point endpoint matching.
int64_t edge_key(int i, int j, bool horizontal, int nx) {
  return ((static_cast<int64_t>(j) * nx + i) << 1) | (horizontal ? 0 : 1);
}

struct ContourGraph {
  std::unordered_map<int64_t, Complex> site;                 // edge -> crossing point
  std::unordered_map<int64_t, std::vector<int64_t>> links;   // degree <= 2
};

void add_segment(ContourGraph& g, int64_t u, int64_t v) {
  g.links[u].push_back(v);
  g.links[v].push_back(u);
}

}  // namespace

ContourSet extract_contours(const ResolventGrid& grid, double eps) {
  require_positive_eps(eps);
  const auto& g = grid.sigma_min;
  const int nx = grid.region.nx, ny = grid.region.ny;
  if (!(eps > g.minCoeff()) || !(eps < g.maxCoeff())) {
    throw LevelNotPresentError("eps is outside the open range of grid values");
  }

  auto inside = [&](int i, int j) { return g(i, j) < eps; };
  ContourGraph graph;
  auto cross = [&](int i0, int j0, int i1, int j1, bool horizontal) {
    const int64_t key = edge_key(i0, j0, horizontal, nx);
    auto it = graph.site.find(key);
    if (it == graph.site.end()) {
      const double t = (eps - g(i0, j0)) / (g(i1, j1) - g(i0, j0));
      const Complex p0 = grid.point(i0, j0), p1 = grid.point(i1, j1);
      it = graph.site.emplace(key, p0 + t * (p1 - p0)).first;
    }
    return key;
  };

  for (int i = 0; i + 1 < nx; ++i) {
    for (int j = 0; j + 1 < ny; ++j) {
      const int c = (inside(i, j) ? 1 : 0) | (inside(i + 1, j) ? 2 : 0) |
                    (inside(i + 1, j + 1) ? 4 : 0) | (inside(i, j + 1) ? 8 : 0);
      if (c == 0 || c == 15) continue;
      auto B = [&] { return cross(i, j, i + 1, j, true); };
      auto T = [&] { return cross(i, j + 1, i + 1, j + 1, true); };
      auto L = [&] { return cross(i, j, i, j + 1, false); };
      auto R = [&] { return cross(i + 1, j, i + 1, j + 1, false); };
      switch (c) {
        case 1: add_segment(graph, L(), B()); break;
        case 2: add_segment(graph, B(), R()); break;
        case 3: add_segment(graph, L(), R()); break;
        case 4: add_segment(graph, R(), T()); break;
        case 6: add_segment(graph, B(), T()); break;
        case 7: add_segment(graph, L(), T()); break;
        case 8: add_segment(graph, T(), L()); break;
        case 9: add_segment(graph, B(), T()); break;
        case 11: add_segment(graph, R(), T()); break;
        case 12: add_segment(graph, L(), R()); break;
        case 13: add_segment(graph, B(), R()); break;
        case 14: add_segment(graph, L(), B()); break;
        case 5:
        case 10: {
          const double center =
              0.25 * (g(i, j) + g(i + 1, j) + g(i + 1, j + 1) + g(i, j + 1));
          const bool center_in = center < eps;
          if ((c == 5) == center_in) {
            add_segment(graph, L(), T());
            add_segment(graph, B(), R());
          } else {
            add_segment(graph, L(), B());
            add_segment(graph, R(), T());
          }
          break;
        }
        default: break;
      }
    }
  }

  ContourSet out;
  out.eps = eps;
  std::unordered_map<int64_t, bool> used;
  auto walk = [&](int64_t start) {
    Polyline line;
    int64_t prev = -1, cur = start;
    for (;;) {
      used[cur] = true;
      line.vertices.push_back(graph.site.at(cur));
      int64_t next = -1;
      for (int64_t nb : graph.links.at(cur)) {
        if (nb != prev && !used[nb]) {
          next = nb;
          break;
        }
      }
      if (next == -1) {
        // either an open end or back at the start of a cycle
        for (int64_t nb : graph.links.at(cur)) {
          if (nb == start && line.vertices.size() > 2) line.closed = true;
        }
        break;
      }
      prev = cur;
      cur = next;
    }
    return line;
  };

  // open paths first (their ends have degree 1), then remaining cycles
  for (int pass = 0; pass < 2; ++pass) {
    for (const auto& [key, nbs] : graph.links) {
      if (used[key]) continue;
      if (pass == 0 && nbs.size() != 1) continue;
      out.polylines.push_back(walk(key));
    }
  }
  std::sort(out.polylines.begin(), out.polylines.end(), [](const Polyline& a, const Polyline& b) {
    auto k = [](const Polyline& p) {
      return std::tuple(p.vertices.front().real(), p.vertices.front().imag(),
                        p.vertices.size());
    };
    return k(a) < k(b);
  });
  return out;
}

std::vector<GridIndex> component_restrict(const ResolventGrid& grid, double eps,
                                          Complex lambda) {
  require_positive_eps(eps);
  const int nx = grid.region.nx, ny = grid.region.ny;
  const int si = std::clamp(
      static_cast<int>(std::lround((lambda.real() - grid.region.re_min) / grid.re_step())),
      0, nx - 1);
  const int sj = std::clamp(
      static_cast<int>(std::lround((lambda.imag() - grid.region.im_min) / grid.im_step())),
      0, ny - 1);
  if (!(grid.sigma_min(si, sj) < eps)) {
    throw SeedOutsideLevelSetError("grid point nearest lambda is not inside the sublevel set");
  }

  std::vector<char> seen(static_cast<std::size_t>(nx) * ny, 0);
  std::vector<GridIndex> component, stack{{si, sj}};
  seen[static_cast<std::size_t>(sj) * nx + si] = 1;
  while (!stack.empty()) {
    const GridIndex p = stack.back();
    stack.pop_back();
    component.push_back(p);
    const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
    for (int d = 0; d < 4; ++d) {
      const int i = p.i + di[d], j = p.j + dj[d];
      if (i < 0 || i >= nx || j < 0 || j >= ny) continue;
      auto& flag = seen[static_cast<std::size_t>(j) * nx + i];
      if (flag || !(grid.sigma_min(i, j) < eps)) continue;
      flag = 1;
      stack.push_back({i, j});
    }
  }
  std::sort(component.begin(), component.end(), [](GridIndex a, GridIndex b) {
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  });
  return component;
}

namespace {

double refine_radius(const ComplexDenseMatrix& a, Complex lambda, double phi,
                     double r0, double cell, double eps, double reltol) {
  auto f = [&](double r) {
    return sigma_min_at(a, lambda + std::polar(r, phi)) - eps;
  };
  double lo = std::max(r0 - 0.5 * cell, r0 * 1e-3);
  double hi = r0 + 0.5 * cell;
  double span = 0.5 * cell;
  int tries = 0;
  while (f(lo) >= 0.0) {
    span *= 2.0;
    lo = std::max(r0 - span, r0 * 1e-3);
    if (++tries > 4) return r0;  // keep grid accuracy if no bracket nearby
  }
  tries = 0;
  while (f(hi) <= 0.0) {
    span = hi - r0;
    hi = r0 + 2.0 * std::max(span, 0.5 * cell);
    if (++tries > 4) return r0;
  }
  for (int it = 0; it < 200 && (hi - lo) > reltol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

RadialExtents radial_extents(const ComplexDenseMatrix& a, const ResolventGrid& grid,
                             const std::vector<GridIndex>& component, double eps,
                             Complex lambda, double reltol) {
  require_positive_eps(eps);
  if (component.empty()) throw InputError("component is empty");

  std::vector<char> in_comp(static_cast<std::size_t>(grid.region.nx) * grid.region.ny, 0);
  for (const auto& p : component) {
    in_comp[static_cast<std::size_t>(p.j) * grid.region.nx + p.i] = 1;
  }

  bool found = false;
  RadialExtents ext;
  ext.r_max = 0.0;
  ext.r_min = std::numeric_limits<double>::infinity();
  const int di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
  for (const auto& p : component) {
    for (int d = 0; d < 4; ++d) {
      const int i = p.i + di[d], j = p.j + dj[d];
      if (i < 0 || i >= grid.region.nx || j < 0 || j >= grid.region.ny) continue;
      if (grid.sigma_min(i, j) < eps) continue;
      const double g0 = grid.sigma_min(p.i, p.j), g1 = grid.sigma_min(i, j);
      const double t = (eps - g0) / (g1 - g0);
      const Complex q = grid.point(p.i, p.j) + t * (grid.point(i, j) - grid.point(p.i, p.j));
      const double r = std::abs(q - lambda);
      if (r <= 0.0) continue;
      found = true;
      if (r > ext.r_max) {
        ext.r_max = r;
        ext.phi_max = std::arg(q - lambda);
      }
      if (r < ext.r_min) {
        ext.r_min = r;
        ext.phi_min = std::arg(q - lambda);
      }
    }
  }
  if (!found) {
    throw InputError("component has no interior boundary; enlarge the region");
  }

  const double cell = std::max(grid.re_step(), grid.im_step());
  ext.r_max = refine_radius(a, lambda, ext.phi_max, ext.r_max, cell, eps, reltol);
  ext.r_min = refine_radius(a, lambda, ext.phi_min, ext.r_min, cell, eps, reltol);
  return ext;
}

std::vector<Complex> sample_perturbed_eigenvalues(const ComplexDenseMatrix& a,
                                                  double eps, int trials,
                                                  std::uint64_t seed) {
  require_positive_eps(eps);
  if (trials < 1) throw InputError("trials must be >= 1");
  const int n = a.dim();
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(trials) * n);
  for (int t = 0; t < trials; ++t) {
    Matrix e(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        e(i, j) = Complex(gauss(gen), gauss(gen));
      }
    }
    double u = unif(gen);
    if (u == 0.0) u = 0.5;
    Eigen::JacobiSVD<Matrix> svd(e);
    const double top = svd.singularValues()(0);
    if (top > 0.0) e *= (u * eps / top);
    const auto evs = numkernel::eigenvalues(ComplexDenseMatrix(a.mat() + e));
    out.insert(out.end(), evs.begin(), evs.end());
  }
  return out;
}

ComplexDenseMatrix direct_sum(const ComplexDenseMatrix& a, const ComplexDenseMatrix& b) {
  const int na = a.dim(), nb = b.dim();
  Matrix m = Matrix::Zero(na + nb, na + nb);
  m.topLeftCorner(na, na) = a.mat();
  m.bottomRightCorner(nb, nb) = b.mat();
  return ComplexDenseMatrix(std::move(m));
}

}  // namespace pspec::pseudospec
