#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "common.hpp"
#include "hypk/bessel.hpp"
#include "hypk/bounds.hpp"
#include "hypk/quadrature.hpp"
#include "hypk/report.hpp"
#include "hypk/specfun.hpp"
#include "hypk/theory.hpp"

namespace hypk::tools {

using detail::fmt;
using detail::num;
using detail::ordered_json;

namespace {

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::string gamma_label(const std::vector<double>& g) {
  std::string s;
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? ";" : "") + report::format_double(g[i]);
  return s;
}

}  // namespace

CriterionResult lemma_certification(const ValidationOptions& opt) {
  CriterionResult res;
  res.id = 1;
  res.name = criterion_name(1);
  const auto a_values = opt.quick ? detail::logspace(1e-3, 1e3, 3) : detail::logspace(1e-3, 1e3, 7);
  const auto b_values = opt.quick ? detail::logspace(1e-3, 50.0, 7) : detail::logspace(1e-3, 50.0, 25);
  const std::vector<std::vector<double>> gammas{
      {1, 1, 1, 0.1}, {1, 1, 1, 0.5}, {1, 1, 1, 1.5}, {1, 1, 1, -0.4}};

  std::string cells_csv = report::csv_join({"alpha", "beta", "gamma", "points", "sup_ratio",
                                            "inf_ratio", "refinement_delta"}) + "\n";
  bool cells_ok = true;
  double worst_refinement = 0.0;
  double global_sup = 0.0;
  double global_inf = std::numeric_limits<double>::infinity();
  auto cells = ordered_json::array();
  for (double alpha : {0.0, 1.0, 2.5}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      for (const auto& gamma : gammas) {
        const std::size_t k = gamma.size();
        std::vector<bounds::LemmaParams> grid;
        std::size_t combos = 1;
        for (std::size_t i = 0; i < k; ++i) combos *= a_values.size();
        for (std::size_t c = 0; c < combos; ++c) {
          std::vector<double> a(k);
          std::size_t rem = c;
          for (std::size_t i = 0; i < k; ++i) {
            a[i] = a_values[rem % a_values.size()];
            rem /= a_values.size();
          }
          for (double b : b_values) grid.push_back({alpha, beta, gamma, a, b});
        }
        const auto rep = bounds::lemma_certify(grid);
        const bool ok = std::isfinite(rep.sup_ratio) && std::isfinite(rep.inf_ratio) &&
                        rep.inf_ratio > 0.0 && rep.refinement_delta <= 1e-6;
        cells_ok = cells_ok && ok;
        worst_refinement = std::max(worst_refinement, rep.refinement_delta);
        global_sup = std::max(global_sup, rep.sup_ratio);
        global_inf = std::min(global_inf, rep.inf_ratio);
        cells.push_back({{"alpha", alpha},
                         {"beta", beta},
                         {"gamma", gamma},
                         {"points", grid.size()},
                         {"sup_ratio", num(rep.sup_ratio)},
                         {"inf_ratio", num(rep.inf_ratio)},
                         {"refinement_delta", num(rep.refinement_delta)},
                         {"pass", ok}});
        cells_csv += report::csv_join({report::format_double(alpha), report::format_double(beta),
                                       gamma_label(gamma), std::to_string(grid.size()),
                                       report::format_double(rep.sup_ratio),
                                       report::format_double(rep.inf_ratio),
                                       report::format_double(rep.refinement_delta)}) +
                     "\n";
      }
    }
  }

  std::string mac_csv =
      report::csv_join({"beta", "b", "integral", "macdonald", "rel_error"}) + "\n";
  double worst_mac = 0.0;
  for (double beta : {0.5, 1.0, 2.0}) {
    for (double b : b_values) {
      bounds::LemmaParams p;
      p.beta = beta;
      p.b = b;
      const double lhs = bounds::lemma_lhs(p);
      const double mac = bounds::lemma_macdonald(beta, b);
      const double err = rel_diff(lhs, mac);
      worst_mac = std::max(worst_mac, err);
      mac_csv += report::csv_join({report::format_double(beta), report::format_double(b),
                                   report::format_double(lhs), report::format_double(mac),
                                   report::format_double(err)}) +
                 "\n";
    }
  }
  const bool mac_ok = worst_mac <= 1e-8;

  res.pass = cells_ok && mac_ok;
  res.measured["cells"] = cells;
  res.measured["max_refinement_delta"] = worst_refinement;
  res.measured["global_sup_ratio"] = num(global_sup);
  res.measured["global_inf_ratio"] = num(global_inf);
  res.measured["macdonald_max_rel_error"] = worst_mac;
  res.summary = std::to_string(cells.size()) + " cells, ratios in [" + fmt("%.4g", global_inf) +
                ", " + fmt("%.4g", global_sup) + "], max refinement delta " +
                fmt("%.2e", worst_refinement) + ", Macdonald max rel error " +
                fmt("%.2e", worst_mac);
  res.artifacts.push_back({"lemma_cells.csv", cells_csv});
  res.artifacts.push_back({"lemma_macdonald.csv", mac_csv});
  return res;
}

CriterionResult laplace_identity(const ValidationOptions&) {
  CriterionResult res;
  res.id = 2;
  res.name = criterion_name(2);
  double worst = 0.0;
  auto rows = ordered_json::array();
  for (double r : {0.5, 1.0, 2.0}) {
    for (double lambda : {0.5, 1.0, 2.0}) {
      const auto c = specfun::laplace_check(r, lambda);
      worst = std::max(worst, std::abs(c.ratio - 1.0));
      rows.push_back({{"r", r}, {"lambda", lambda}, {"ratio", c.ratio}});
    }
  }
  res.pass = worst <= 1e-6;
  res.measured["grid"] = rows;
  res.measured["max_abs_ratio_error"] = worst;
  res.summary = "max |ratio - 1| = " + fmt("%.3e", worst) + " on the 3x3 (r, lambda) grid";
  return res;
}

CriterionResult bessel_oracles(const ValidationOptions&) {
  CriterionResult res;
  res.id = 3;
  res.name = criterion_name(3);

  // Bessel(-1/2) is Brownian motion killed at 0: reflection principle.
  double refl = 0.0;
  for (double t : {0.1, 1.0, 5.0})
    for (double x : {0.3, 1.0, 2.5})
      for (double y : {0.2, 1.0, 3.0}) {
        const double g = std::exp(-(x - y) * (x - y) / (2 * t)) / std::sqrt(2 * M_PI * t);
        const double oracle = -g * std::expm1(-2 * x * y / t);
        refl = std::max(refl, rel_diff(bessel::transition_density(-0.5, t, x, y), oracle));
      }

  // Total mass of the hitting-time density, in log time.
  double mass_err = 0.0;
  auto masses = ordered_json::array();
  struct Start {
    double nu, a, x;
  };
  for (Start s : {Start{-0.5, 1, 2}, Start{-1.0, 1, 2}, Start{-2.3, 0.5, 3}, Start{-0.8, 2, 2.5}}) {
    quad::Options o;
    // The inversion carries noise near 1e-9, so ask for 1e-7.
    o.abs_tol = 1e-7;
    o.rel_tol = 1e-7;
    const auto r = quad::integrate(
        [&](double u) {
          const double t = std::exp(u);
          return bessel::hitting_density(s.nu, s.a, s.x, t) * t;
        },
        -10.0, 70.0, o);
    mass_err = std::max(mass_err, r.converged ? std::abs(r.value - 1.0) : 1.0);
    masses.push_back({{"nu", s.nu}, {"a", s.a}, {"x", s.x}, {"mass", r.value}});
  }

  // Brownian first-passage density at (a, x, t) = (1, 2, 1).
  const double bm_oracle = std::exp(-0.5) / std::sqrt(2 * M_PI);
  const auto inv = bessel::hitting_density_numeric(-0.5, 1.0, 2.0, 1.0);
  const double bm_err = rel_diff(inv.value, bm_oracle);

  // Chapman-Kolmogorov.
  struct Triple {
    double nu, s, t, x, y;
  };
  double ck = 0.0;
  auto ck_rows = ordered_json::array();
  for (Triple tr : {Triple{-0.5, 0.3, 0.7, 1.0, 1.2}, Triple{-1.0, 1.0, 1.0, 2.0, 0.5},
                    Triple{-1.7, 0.5, 2.0, 1.5, 2.5}, Triple{-0.3, 2.0, 0.4, 0.8, 1.1},
                    Triple{-2.5, 0.2, 0.2, 1.0, 1.3}}) {
    const double hi = std::max(tr.x, tr.y) + 40.0 * std::sqrt(tr.s + tr.t);
    std::vector<double> brk{0.0, std::min(tr.x, tr.y), std::max(tr.x, tr.y), hi};
    if (brk[1] == brk[2]) brk.erase(brk.begin() + 2);
    quad::Options o;
    o.abs_tol = 0.0;
    o.rel_tol = 1e-11;
    const auto r = quad::integrate(
        [&](double z) {
          if (z <= 0.0) return 0.0;
          return bessel::transition_density(tr.nu, tr.s, tr.x, z) *
                 bessel::transition_density(tr.nu, tr.t, z, tr.y);
        },
        brk, o);
    const double direct = bessel::transition_density(tr.nu, tr.s + tr.t, tr.x, tr.y);
    const double e = rel_diff(r.value, direct);
    ck = std::max(ck, e);
    ck_rows.push_back({{"nu", tr.nu}, {"s", tr.s}, {"t", tr.t}, {"x", tr.x}, {"y", tr.y},
                       {"convolution", r.value}, {"direct", direct}, {"rel_error", e}});
  }

  res.pass = refl <= 1e-10 && mass_err <= 1e-4 && bm_err <= 1e-4 && ck <= 1e-6;
  res.measured["reflection_max_rel_error"] = refl;
  res.measured["hitting_masses"] = masses;
  res.measured["mass_max_abs_error"] = mass_err;
  res.measured["bm_hitting_density"] = inv.value;
  res.measured["bm_hitting_oracle"] = bm_oracle;
  res.measured["bm_rel_error"] = bm_err;
  res.measured["chapman_kolmogorov"] = ck_rows;
  res.measured["chapman_kolmogorov_max_rel_error"] = ck;
  res.summary = "reflection " + fmt("%.2e", refl) + ", mass " + fmt("%.2e", mass_err) +
                ", BM first passage " + fmt("%.2e", bm_err) + ", Chapman-Kolmogorov " +
                fmt("%.2e", ck);
  return res;
}

CriterionResult corollary_consistency(const ValidationOptions& opt) {
  CriterionResult res;
  res.id = 7;
  res.name = criterion_name(7);

  // a -> 0: slab expressions against the strip ones. The strip bottom expression
  // drops the constant 2^{mu-1/2} that the slab expression carries in the limit,
  // so that case is compared after dividing it out.
  double strip_green = 0.0;
  double strip_side = 0.0;
  double strip_bottom = 0.0;
  const double a0 = 1e-8;
  for (double mu : {0.6, 1.0, 2.0})
    for (int n : {2, 3})
      for (double b : {1.0, 2.0})
        for (auto [x1, xn, y1, yn] : {std::array<double, 4>{0.3, 0.7, 0.6, 0.2},
                                      std::array<double, 4>{0.5, 2.0, 0.45, 1.9},
                                      std::array<double, 4>{0.1, 0.05, 0.9, 3.0}}) {
          std::vector<double> xc(static_cast<std::size_t>(n), 0.25);
          std::vector<double> yc(static_cast<std::size_t>(n), -0.1);
          xc.front() = x1 * b;
          xc.back() = xn * b;
          yc.front() = y1 * b;
          yc.back() = yn * b;
          const HyperPoint x(xc), y(yc);
          strip_green = std::max(strip_green, rel_diff(bounds::green_bound_slab(mu, n, a0, b, x, y),
                                                       bounds::green_bound_strip(mu, n, b, x, y)));
          for (auto face : {BoundaryFace::SideLow, BoundaryFace::SideHigh}) {
            auto c = yc;
            c.front() = face == BoundaryFace::SideLow ? 0.0 : b;
            const HyperPoint ys(c);
            strip_side = std::max(
                strip_side, rel_diff(bounds::poisson_bound_slab(mu, n, a0, b, x, ys, face),
                                     bounds::poisson_bound_strip(mu, n, b, x, ys, face)));
          }
          auto c = yc;
          c.back() = a0;
          const HyperPoint yb(c);
          const double ratio = bounds::poisson_bound_slab(mu, n, a0, b, x, yb, BoundaryFace::Bottom) /
                               bounds::poisson_bound_strip(mu, n, b, x, yb, BoundaryFace::Bottom);
          strip_bottom = std::max(strip_bottom, std::abs(ratio / std::pow(2.0, mu - 0.5) - 1.0));
        }

  // b -> inf with both points recentred to the middle of the slab.
  double half_green = 0.0;
  double half_poisson = 0.0;
  const double big = 1e8;
  for (double mu : {0.6, 1.0, 2.0})
    for (int n : {2, 3})
      for (double a : {0.5, 1.0, 2.0})
        for (auto [x1, xn, y1, yn] : {std::array<double, 4>{0.0, 1.5, 0.3, 1.2},
                                      std::array<double, 4>{-0.7, 4.0, 0.8, 1.1},
                                      std::array<double, 4>{0.2, 1.05, 0.25, 1.1}}) {
          std::vector<double> xc(static_cast<std::size_t>(n), 0.1);
          std::vector<double> yc(static_cast<std::size_t>(n), 0.3);
          xc.front() = x1;
          xc.back() = xn * a;
          yc.front() = y1;
          yc.back() = yn * a;
          auto xs = xc, ys = yc;
          xs.front() += big / 2;
          ys.front() += big / 2;
          half_green = std::max(
              half_green, rel_diff(bounds::green_bound_slab(mu, n, a, big, HyperPoint(xs), HyperPoint(ys)),
                                   bounds::green_bound_halfspace(mu, n, a, HyperPoint(xc), HyperPoint(yc))));
          yc.back() = a;
          ys.back() = a;
          half_poisson = std::max(
              half_poisson,
              rel_diff(bounds::poisson_bound_slab(mu, n, a, big, HyperPoint(xs), HyperPoint(ys),
                                                  BoundaryFace::Bottom),
                       bounds::poisson_bound_halfspace(mu, n, a, HyperPoint(xc), HyperPoint(yc))));
        }

  // Dilation identities by simulation.
  sim::SimConfig cfg;
  cfg.n_paths = opt.quick ? 10000 : 40000;
  cfg.eps_ball = 0.05;
  auto scaling = ordered_json::array();
  double worst_z = 0.0;
  int label = 0;
  struct Case {
    DomainSpec dom;
    HyperPoint x, y;
    kernels::FaceRegion region;
  };
  const std::vector<Case> cases{
      {DomainSpec::slab(1, 1), {0.5, 1.5}, {0.35, 1.3}, {BoundaryFace::Bottom, {0.3}, {0.7}}},
      {DomainSpec::half_space(1), {0.0, 1.5}, {0.3, 1.3}, {BoundaryFace::Bottom, {-0.3}, {0.3}}}};
  for (const auto& cs : cases) {
    for (double c : {0.5, 2.0}) {
      cfg.seed = detail::run_seed(opt, 7, label++);
      const auto chk = theory::scaling_verify(cs.dom, 1.0, c, cs.x, cs.y, cs.region, cfg);
      worst_z = std::max({worst_z, std::abs(chk.green_z), std::abs(chk.poisson_z)});
      scaling.push_back({{"domain", to_string(cs.dom)},
                         {"c", c},
                         {"green", chk.green_base.value},
                         {"green_scaled", chk.green_scaled.value},
                         {"green_z", num(chk.green_z)},
                         {"poisson", chk.poisson_base.value},
                         {"poisson_scaled", chk.poisson_scaled.value},
                         {"poisson_z", num(chk.poisson_z)}});
    }
  }

  const double worst_limit =
      std::max({strip_green, strip_side, strip_bottom, half_green, half_poisson});
  res.pass = worst_limit <= 1e-4 && worst_z < 3.0;
  res.measured["strip_green_max_rel"] = strip_green;
  res.measured["strip_side_poisson_max_rel"] = strip_side;
  res.measured["strip_bottom_poisson_max_rel_after_constant"] = strip_bottom;
  res.measured["halfspace_green_max_rel"] = half_green;
  res.measured["halfspace_poisson_max_rel"] = half_poisson;
  res.measured["scaling"] = scaling;
  res.measured["scaling_max_abs_z"] = worst_z;
  res.summary = "a->0 limit " + fmt("%.2e", std::max({strip_green, strip_side, strip_bottom})) +
                ", b->inf limit " + fmt("%.2e", std::max(half_green, half_poisson)) +
                ", scaling max |z| " + fmt("%.2f", worst_z);
  return res;
}

}  // namespace hypk::tools
