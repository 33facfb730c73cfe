#include <algorithm>
#include <cmath>
#include <limits>

#include "common.hpp"
#include "hypk/bounds.hpp"
#include "hypk/kernels.hpp"
#include "hypk/parallel.hpp"
#include "hypk/report.hpp"
#include "hypk/theory.hpp"
#include "hypk_tools/stats.hpp"

namespace hypk::tools {

using detail::fmt;
using detail::num;
using detail::ordered_json;

namespace {

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double z : v) m = std::max(m, std::abs(z));
  return m;
}

/// dt that keeps the number of steps to a side exit roughly independent of the
/// slab geometry: the horizontal clock runs at rate x_n^2.
double step_for(double b, double xn) { return 2e-3 * std::min(1.0, (b / xn) * (b / xn)); }

}  // namespace

CriterionResult reduction_identity(const ValidationOptions& opt) {
  CriterionResult res;
  res.id = 4;
  res.name = criterion_name(4);
  const auto dom = DomainSpec::slab(1, 1);
  const double mu = 1.0;
  const double lambda = 1.5;
  const double eta = theory::eta(mu, lambda);
  const double eps = 0.05;

  struct Start {
    HyperPoint x;
    std::vector<HyperPoint> ys;
  };
  const std::vector<Start> starts{{{0.5, 1.5}, {{0.5, 1.2}, {0.3, 1.8}}},
                                  {{0.3, 2.0}, {{0.6, 1.5}, {0.5, 2.5}, {0.2, 3.0}}}};
  sim::SimConfig cfg;
  cfg.n_paths = opt.quick ? 20000 : 100000;
  cfg.dt = 1e-3;

  std::vector<double> zs;
  auto rows = ordered_json::array();
  int label = 0;
  for (const auto& st : starts) {
    std::vector<sim::Ball> balls;
    for (const auto& y : st.ys) balls.push_back({y, eps});
    const double xn = st.x.height();
    const std::vector<kernels::FaceRegion> regions{
        {BoundaryFace::Bottom, {0.2}, {0.5}},
        {BoundaryFace::SideLow, {1.2}, {1.8}},
        {BoundaryFace::SideHigh, {1.5, }, {3.0}}};

    cfg.seed = detail::run_seed(opt, 4, label++);
    sim::ExitOptions direct_opt{lambda, balls, 0.0};
    const auto direct = sim::simulate_exits(sim::PathKind::Hbm, dom, mu, st.x, cfg, direct_opt);
    cfg.seed = detail::run_seed(opt, 4, label++);
    sim::ExitOptions eta_opt{0.0, balls, eta - mu};
    const auto reduced = sim::simulate_exits(sim::PathKind::Hbm, dom, eta, st.x, cfg, eta_opt);

    const double factor = std::pow(xn, mu - eta);
    const auto g_direct = kernels::green_from_outcomes(direct, balls, mu, lambda);
    const auto g_eta = kernels::green_from_outcomes(reduced, balls, eta, 0.0);
    for (std::size_t j = 0; j < balls.size(); ++j) {
      const double v = factor * g_eta[j].value;
      const double se = factor * g_eta[j].std_error;
      const double z = z_score(g_direct[j].value, g_direct[j].std_error, v, se);
      zs.push_back(z);
      rows.push_back({{"kind", "green"},
                      {"x", detail::point_json(st.x)},
                      {"y", detail::point_json(balls[j].center)},
                      {"direct", g_direct[j].value},
                      {"direct_stderr", g_direct[j].std_error},
                      {"reduced", v},
                      {"reduced_stderr", se},
                      {"z", num(z)}});
    }
    for (const auto& r : regions) {
      const auto p_direct = kernels::poisson_from_outcomes(direct, r, mu, lambda);
      const auto p_eta = kernels::poisson_from_outcomes(reduced, r, eta, 0.0, eta - mu);
      const double v = factor * p_eta.value;
      const double se = factor * p_eta.std_error;
      const double z = z_score(p_direct.value, p_direct.std_error, v, se);
      zs.push_back(z);
      rows.push_back({{"kind", "poisson"},
                      {"x", detail::point_json(st.x)},
                      {"face", to_string(r.face)},
                      {"lower", r.lower},
                      {"upper", r.upper},
                      {"direct", p_direct.value},
                      {"direct_stderr", p_direct.std_error},
                      {"reduced", v},
                      {"reduced_stderr", se},
                      {"z", num(z)}});
    }
  }
  const double worst = max_abs(zs);
  res.pass = worst < 3.0;
  res.measured["paths_per_run"] = cfg.n_paths;
  res.measured["eta"] = eta;
  res.measured["comparisons"] = rows;
  res.measured["max_abs_z"] = worst;
  res.summary = std::to_string(zs.size()) + " comparisons (5 Green pairs, 6 region masses), max |z| " +
                fmt("%.2f", worst);
  return res;
}

CriterionResult path_equivalence(const ValidationOptions& opt) {
  CriterionResult res;
  res.id = 5;
  res.name = criterion_name(5);
  const auto dom = DomainSpec::slab(1, 1);
  const double mu = 1.0;
  const HyperPoint x{0.4, 1.6};
  const std::vector<sim::Ball> balls{{{0.6, 1.4}, 0.05}, {{0.5, 2.2}, 0.05}};

  sim::SimConfig cfg;
  cfg.dt = 1e-3;
  cfg.n_paths = opt.quick ? 20000 : 100000;
  cfg.seed = detail::run_seed(opt, 5, 0);
  const auto xs = sim::simulate_exits(sim::PathKind::Hbm, dom, mu, x, cfg, {0.0, balls, 0.0});
  cfg.n_paths = opt.quick ? 8000 : 40000;
  cfg.seed = detail::run_seed(opt, 5, 1);
  const auto ys =
      sim::simulate_exits(sim::PathKind::BrownBessel, dom, mu, x, cfg, {0.0, balls, -2.0});

  const auto fx = kernels::exit_fractions(xs);
  const auto fy = kernels::exit_fractions(ys);
  std::vector<double> face_z;
  auto faces = ordered_json::array();
  for (std::size_t f = 0; f < 3; ++f) {
    const double z = z_score(fx.face[f], fx.std_error[f], fy.face[f], fy.std_error[f]);
    face_z.push_back(z);
    faces.push_back({{"face", to_string(static_cast<BoundaryFace>(f))},
                     {"x_paths", fx.face[f]},
                     {"y_paths", fy.face[f]},
                     {"z", num(z)}});
  }

  // The varying coordinate of the exit point on each face.
  auto marginal = [](const std::vector<sim::PathOutcome>& outs, BoundaryFace face) {
    std::vector<double> v;
    for (const auto& o : outs)
      if (o.exit.exited && o.exit.face == face)
        v.push_back(face == BoundaryFace::Bottom ? o.exit.position[0] : o.exit.position.height());
    return v;
  };
  double min_p = 1.0;
  auto ks = ordered_json::array();
  for (auto face : {BoundaryFace::SideLow, BoundaryFace::SideHigh, BoundaryFace::Bottom}) {
    const auto r = ks_two_sample(marginal(xs, face), marginal(ys, face));
    min_p = std::min(min_p, r.p_value);
    ks.push_back({{"face", to_string(face)},
                  {"n_x", r.n1},
                  {"n_y", r.n2},
                  {"statistic", r.statistic},
                  {"p_value", r.p_value}});
  }

  const auto gx = kernels::green_from_outcomes(xs, balls, mu, 0.0);
  const auto gy = kernels::green_from_outcomes(ys, balls, mu, 0.0);
  std::vector<double> green_z;
  auto greens = ordered_json::array();
  for (std::size_t j = 0; j < balls.size(); ++j) {
    const double z = z_score(gx[j].value, gx[j].std_error, gy[j].value, gy[j].std_error);
    green_z.push_back(z);
    greens.push_back({{"y", detail::point_json(balls[j].center)},
                      {"x_paths", gx[j].value},
                      {"y_paths", gy[j].value},
                      {"z", num(z)}});
  }

  const double fz = max_abs(face_z);
  const double gz = max_abs(green_z);
  res.pass = fz < 3.0 && min_p > 0.01 && gz < 3.0;
  res.measured["face_masses"] = faces;
  res.measured["ks"] = ks;
  res.measured["green"] = greens;
  res.measured["face_max_abs_z"] = fz;
  res.measured["ks_min_p"] = min_p;
  res.measured["green_max_abs_z"] = gz;
  res.summary = "face masses max |z| " + fmt("%.2f", fz) + ", KS min p " + fmt("%.3f", min_p) +
                ", Green max |z| " + fmt("%.2f", gz);
  return res;
}

namespace {

struct Combo {
  double a, b;
};

/// One theorem's sweep: quadrature rows plus Monte Carlo rows at N and 2N paths.
struct Sweep {
  bounds::BoundReport report;
  std::vector<double> drift_z;
  std::size_t configurations = 0;
  bool all_finite = true;
};

void add_row(Sweep& sw, std::vector<double> inputs, double measured, double bound) {
  bounds::BoundRow row;
  row.inputs = std::move(inputs);
  row.measured = measured;
  row.bound_expr = bound;
  row.ratio = measured / bound;
  if (!(std::isfinite(row.ratio) && row.ratio > 0.0)) sw.all_finite = false;
  sw.report.points.push_back(std::move(row));
}

std::vector<double> row_inputs(double source, std::size_t cfg_id, double a, double b, double mu,
                               const HyperPoint& x, const HyperPoint& y) {
  std::vector<double> v{source, static_cast<double>(cfg_id), a, b, mu};
  v.insert(v.end(), x.coords().begin(), x.coords().end());
  v.insert(v.end(), y.coords().begin(), y.coords().end());
  return v;
}

std::vector<std::string> input_names(int n) {
  std::vector<std::string> names{"source", "config", "a", "b", "mu"};
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return names;
}

// source codes in the report: 0 quadrature, 1 Monte Carlo with N paths, 2 with 2N paths.

Sweep green_sweep(const ValidationOptions& opt, const std::vector<Combo>& combos,
                  const std::vector<double>& mus, std::int64_t paths, bool with_quadrature) {
  const int n = 3;
  Sweep sw;
  sw.report.input_names = input_names(n);
  int label = 100;
  std::size_t cfg_id = 0;
  for (const auto& c : combos) {
    for (double mu : mus) {
      const double a = c.a;
      const double b = c.b;
      const auto dom = DomainSpec::slab(a, b);
      const HyperPoint x{0.5 * b, 0.0, a + b};
      // near-diagonal, near the side face, near the bottom, far apart
      const std::vector<sim::Ball> balls{
          {{0.55 * b, 0.05 * b, a + 1.1 * b}, 0.03 * b},
          {{0.1 * b, 0.0, a + 0.6 * b}, 0.05 * b},
          {{0.5 * b, 0.1 * b, a + 0.1 * b}, 0.05 * b},
          {{0.8 * b, 0.6 * b, a + 2.0 * b}, 0.1 * b}};
      std::vector<double> quad(balls.size(), 0.0);
      if (with_quadrature) {
        parallel_for(
            balls.size(),
            [&](std::size_t j) { quad[j] = kernels::green_quadrature(dom, mu, x, balls[j].center); },
            1);
      }
      sim::SimConfig cfg;
      cfg.dt = step_for(b, x.height());
      cfg.n_paths = paths;
      cfg.seed = detail::run_seed(opt, 6, label++);
      const auto o1 = sim::simulate_exits(sim::PathKind::Hbm, dom, mu, x, cfg, {0.0, balls, 0.0});
      const auto e1 = kernels::green_from_outcomes(o1, balls, mu, 0.0);
      cfg.n_paths = 2 * paths;
      cfg.seed = detail::run_seed(opt, 6, label++);
      const auto o2 = sim::simulate_exits(sim::PathKind::Hbm, dom, mu, x, cfg, {0.0, balls, 0.0});
      const auto e2 = kernels::green_from_outcomes(o2, balls, mu, 0.0);
      for (std::size_t j = 0; j < balls.size(); ++j) {
        const auto& y = balls[j].center;
        const double bound = bounds::green_bound_slab(mu, n, a, b, x, y);
        ++sw.configurations;
        if (with_quadrature) add_row(sw, row_inputs(0, cfg_id, a, b, mu, x, y), quad[j], bound);
        add_row(sw, row_inputs(1, cfg_id, a, b, mu, x, y), e1[j].value, bound);
        add_row(sw, row_inputs(2, cfg_id, a, b, mu, x, y), e2[j].value, bound);
        sw.drift_z.push_back(z_score(e2[j].value / bound, e2[j].std_error / bound,
                                     e1[j].value / bound, e1[j].std_error / bound));
        ++cfg_id;
      }
    }
  }
  sw.report.finalize();
  return sw;
}

Sweep poisson_sweep(const ValidationOptions& opt, const std::vector<Combo>& combos,
                    const std::vector<double>& mus, std::int64_t paths, bool side_quadrature) {
  const int n = 2;
  Sweep sw;
  sw.report.input_names = input_names(n);
  int label = 500;
  std::size_t cfg_id = 0;
  for (const auto& c : combos) {
    for (double mu : mus) {
      const double a = c.a;
      const double b = c.b;
      const auto dom = DomainSpec::slab(a, b);
      struct Target {
        kernels::FaceRegion region;
        HyperPoint centre;
      };
      struct Start {
        HyperPoint x;
        std::vector<Target> targets;
      };
      const double w = 0.05 * b;
      const std::vector<Start> starts{
          {{0.5 * b, a + 0.6 * b},
           {{{BoundaryFace::SideLow, {a + 0.6 * b - 2 * w}, {a + 0.6 * b + 2 * w}}, {0.0, a + 0.6 * b}},
            {{BoundaryFace::SideHigh, {a + 1.5 * b - 3 * w}, {a + 1.5 * b + 3 * w}}, {b, a + 1.5 * b}},
            {{BoundaryFace::Bottom, {0.5 * b - 2 * w}, {0.5 * b + 2 * w}}, {0.5 * b, a}}}},
          {{0.1 * b, a + 0.3 * b},
           {{{BoundaryFace::SideLow, {a + 0.3 * b - w}, {a + 0.3 * b + w}}, {0.0, a + 0.3 * b}},
            {{BoundaryFace::Bottom, {0.1 * b - w}, {0.1 * b + w}}, {0.1 * b, a}}}}};
      for (const auto& st : starts) {
        const auto& x = st.x;
        std::vector<double> quad(st.targets.size(), std::numeric_limits<double>::quiet_NaN());
        parallel_for(
            st.targets.size(),
            [&](std::size_t j) {
              if (side_quadrature || st.targets[j].region.face == BoundaryFace::Bottom)
                quad[j] = kernels::poisson_quadrature(dom, mu, x, st.targets[j].centre);
            },
            1);
        sim::SimConfig cfg;
        cfg.dt = step_for(b, x.height());
        cfg.n_paths = paths;
        cfg.seed = detail::run_seed(opt, 6, label++);
        const auto o1 = sim::simulate_exits(sim::PathKind::Hbm, dom, mu, x, cfg, {});
        cfg.n_paths = 2 * paths;
        cfg.seed = detail::run_seed(opt, 6, label++);
        const auto o2 = sim::simulate_exits(sim::PathKind::Hbm, dom, mu, x, cfg, {});
        for (std::size_t j = 0; j < st.targets.size(); ++j) {
          const auto& t = st.targets[j];
          const auto e1 = kernels::poisson_from_outcomes(o1, t.region, mu, 0.0);
          const auto e2 = kernels::poisson_from_outcomes(o2, t.region, mu, 0.0);
          const double bound = bounds::poisson_bound_slab(mu, n, a, b, x, t.centre, t.region.face);
          ++sw.configurations;
          if (!std::isnan(quad[j])) add_row(sw, row_inputs(0, cfg_id, a, b, mu, x, t.centre), quad[j], bound);
          add_row(sw, row_inputs(1, cfg_id, a, b, mu, x, t.centre), e1.value, bound);
          add_row(sw, row_inputs(2, cfg_id, a, b, mu, x, t.centre), e2.value, bound);
          sw.drift_z.push_back(z_score(e2.value / bound, e2.std_error / bound, e1.value / bound,
                                       e1.std_error / bound));
          ++cfg_id;
        }
      }
    }
  }
  sw.report.finalize();
  return sw;
}

ordered_json sweep_json(const Sweep& sw, bool& pass) {
  double mean_z = 0.0;
  for (double z : sw.drift_z) mean_z += z;
  mean_z /= static_cast<double>(std::max<std::size_t>(1, sw.drift_z.size()));
  const double worst = max_abs(sw.drift_z);
  const bool interval_ok = sw.all_finite && std::isfinite(sw.report.sup_ratio) &&
                           std::isfinite(sw.report.inf_ratio) && sw.report.inf_ratio > 0.0;
  const bool drift_ok = std::abs(mean_z) <= 1.0 && worst < 4.0;
  pass = interval_ok && drift_ok && sw.configurations >= 20;
  return {{"configurations", sw.configurations},
          {"rows", sw.report.points.size()},
          {"sup_ratio", num(sw.report.sup_ratio)},
          {"inf_ratio", num(sw.report.inf_ratio)},
          {"all_ratios_finite", sw.all_finite},
          {"drift_mean_z", mean_z},
          {"drift_max_abs_z", worst},
          {"pass", pass}};
}

}  // namespace

CriterionResult theorem_certification(const ValidationOptions& opt) {
  CriterionResult res;
  res.id = 6;
  res.name = criterion_name(6);
  const std::vector<Combo> combos = opt.quick ? std::vector<Combo>{{1, 1}, {0.5, 2}}
                                              : std::vector<Combo>{{1, 1}, {0.5, 2}, {2, 0.5}};
  const std::int64_t paths = opt.quick ? 4000 : 20000;
  // n = 3 for the Green estimate, n = 2 for the Poisson estimate; (n-1)/2 is the driftless index.
  const auto green = green_sweep(opt, combos, {0.6, 1.0, 2.0}, paths, !opt.quick);
  const auto poisson = poisson_sweep(opt, combos, {0.6, 0.5, 2.0}, paths, !opt.quick);
  bool g_ok = false;
  bool p_ok = false;
  res.measured["paths"] = paths;
  res.measured["green_n3"] = sweep_json(green, g_ok);
  res.measured["poisson_n2"] = sweep_json(poisson, p_ok);
  res.pass = g_ok && p_ok;
  res.summary = "Green ratios in [" + fmt("%.3g", green.report.inf_ratio) + ", " +
                fmt("%.3g", green.report.sup_ratio) + "] over " +
                std::to_string(green.configurations) + " configurations; Poisson in [" +
                fmt("%.3g", poisson.report.inf_ratio) + ", " +
                fmt("%.3g", poisson.report.sup_ratio) + "] over " +
                std::to_string(poisson.configurations);
  res.artifacts.push_back({"theorem_green.csv", report::bound_csv(green.report)});
  res.artifacts.push_back({"theorem_poisson.csv", report::bound_csv(poisson.report)});
  return res;
}

CriterionResult dirichlet_checks(const ValidationOptions& opt) {
  CriterionResult res;
  res.id = 8;
  res.name = criterion_name(8);
  const auto dom = DomainSpec::slab(1, 1);
  sim::SimConfig cfg;
  cfg.n_paths = opt.quick ? 4000 : 20000;

  // f = 1 and lambda = 0: every path exits, u = 1.
  bool ones_ok = true;
  auto ones = ordered_json::array();
  int label = 0;
  for (const HyperPoint& x : {HyperPoint{0.5, 1.5}, HyperPoint{0.1, 1.05}, HyperPoint{0.9, 4.0}}) {
    cfg.seed = detail::run_seed(opt, 8, label++);
    const auto r = theory::dirichlet_solve(dom, 1.0, 0.0, [](const HyperPoint&) { return 1.0; }, x, cfg);
    const bool ok = std::abs(r.value - 1.0) <= 3.0 * r.std_error;
    ones_ok = ones_ok && ok;
    ones.push_back({{"x", detail::point_json(x)}, {"u", r.value}, {"stderr", r.std_error}, {"pass", ok}});
  }

  // Boundary limit: x_n^{eta-mu} u(x) -> f(z) approaching the midpoint z of the
  // side face x_1 = 0 at height 1.5.
  const double mu = 1.0;
  const double lambda = 1.5;
  const auto f = [](const HyperPoint& y) {
    const double d0 = y[0];
    const double d1 = y.height() - 1.5;
    return std::exp(-(d0 * d0 + d1 * d1));
  };
  const double fz = 1.0;
  auto approach = ordered_json::array();
  std::vector<double> errs, ses;
  for (double d : {1e-1, 1e-2, 1e-3}) {
    auto c = cfg;
    c.dt = std::min(1e-3, d * d);
    c.t_max = std::min(c.t_max, 1e7 * c.dt);
    c.seed = detail::run_seed(opt, 8, label++);
    const HyperPoint x{d, 1.5};
    const auto r = theory::dirichlet_solve(dom, mu, lambda, f, x, c);
    errs.push_back(std::abs(r.harmonic_value - fz));
    const double factor = std::pow(x.height(), theory::eta(mu, lambda) - mu);
    ses.push_back(r.std_error * factor);
    approach.push_back({{"distance", d},
                        {"scaled_u", r.harmonic_value},
                        {"stderr", ses.back()},
                        {"abs_error", errs.back()}});
  }
  bool monotone = true;
  for (std::size_t i = 1; i < errs.size(); ++i)
    monotone = monotone && errs[i] <= errs[i - 1] + 2.0 * std::hypot(ses[i], ses[i - 1]);
  const bool limit_ok = monotone && errs.back() < errs.front();

  // Generator: f = x_n^{mu+eta} satisfies (1/2) Delta_mu f = lambda f; the conjugate
  // x_n^{eta-mu} f is harmonic for (1/2) Delta_eta.
  const double e = theory::eta(mu, lambda);
  const HyperPoint x0{0.3, 1.7};
  const theory::ScalarField eig = [&](const HyperPoint& y) { return std::pow(y.height(), mu + e); };
  const theory::ScalarField conj = [&](const HyperPoint& y) {
    return std::pow(y.height(), e - mu) * std::pow(y.height(), mu + e);
  };
  auto gens = ordered_json::array();
  std::vector<double> res_eig, res_conj;
  double h = 0.02 * x0.height();
  for (int i = 0; i < 3; ++i, h /= 2) {
    res_eig.push_back(std::abs(theory::apply_generator(mu, eig, x0, h) - lambda * eig(x0)));
    res_conj.push_back(std::abs(theory::apply_generator(e, conj, x0, h)));
    gens.push_back({{"h", h}, {"eigen_residual", res_eig.back()}, {"conjugate_residual", res_conj.back()}});
  }
  bool second_order = true;
  std::vector<double> orders;
  for (const auto* v : {&res_eig, &res_conj})
    for (std::size_t i = 1; i < v->size(); ++i) {
      const double ratio = (*v)[i - 1] / (*v)[i];
      orders.push_back(ratio);
      second_order = second_order && ratio > 3.5 && ratio < 4.5;
    }

  res.pass = ones_ok && limit_ok && second_order;
  res.measured["unit_data"] = ones;
  res.measured["boundary_approach"] = approach;
  res.measured["boundary_monotone"] = monotone;
  res.measured["generator"] = gens;
  res.measured["halving_ratios"] = orders;
  res.summary = std::string("f=1 ") + (ones_ok ? "exact" : "off") + ", boundary errors " +
                fmt("%.3g", errs[0]) + " -> " + fmt("%.3g", errs[1]) + " -> " + fmt("%.3g", errs[2]) +
                ", residual halving ratios " + fmt("%.3f", orders.front()) + ".." +
                fmt("%.3f", orders.back());
  return res;
}

}  // namespace hypk::tools
