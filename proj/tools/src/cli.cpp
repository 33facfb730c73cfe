#include "hypk_tools/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "hypk/bounds.hpp"
#include "hypk/error.hpp"
#include "hypk/kernels.hpp"
#include "hypk/parallel.hpp"
#include "hypk/report.hpp"
#include "hypk/theory.hpp"
#include "json.hpp"

namespace hypk::tools {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

/// Comma-separated numbers; "lo:hi:n" expands to n log-spaced values.
std::vector<double> parse_list(const std::string& text, const char* what) {
  const std::string t = trim(text);
  if (std::count(t.begin(), t.end(), ':') == 2) {
    const auto p1 = t.find(':');
    const auto p2 = t.find(':', p1 + 1);
    const double lo = report::parse_double(trim(t.substr(0, p1)));
    const double hi = report::parse_double(trim(t.substr(p1 + 1, p2 - p1 - 1)));
    const double cnt = report::parse_double(trim(t.substr(p2 + 1)));
    require(lo > 0 && hi > 0 && cnt >= 1 && cnt == std::floor(cnt) && cnt <= 1e6,
            std::string(what) + ": logspace needs lo > 0, hi > 0 and a positive integer count");
    std::vector<double> out;
    const int n = static_cast<int>(cnt);
    for (int i = 0; i < n; ++i)
      out.push_back(n == 1 ? lo : lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    return out;
  }
  std::vector<double> out;
  if (t.empty() || t == "none") return out;
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    require(!item.empty(), std::string(what) + ": empty list entry");
    try {
      out.push_back(report::parse_double(item));
    } catch (const ValidationError&) {
      throw ValidationError(std::string(what) + ": '" + item + "' is not a number");
    }
  }
  return out;
}

HyperPoint parse_hyper_point(const std::string& text, const char* what) {
  auto c = parse_list(text, what);
  require(c.size() >= 2, std::string(what) + " needs at least two coordinates");
  require(c.back() > 0.0, std::string(what) + " must have a positive last coordinate");
  return HyperPoint(std::move(c));
}

/// Writes `contents` to prefix+suffix, or to `out` when no prefix was given.
void emit(const std::string& prefix, const std::string& suffix, const std::string& contents,
          std::ostream& out) {
  if (prefix.empty()) {
    out << contents;
    return;
  }
  const fs::path p(prefix + suffix);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  report::write_file_atomic(p, contents);
}

struct SimArgs {
  std::string domain;
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  double mu = 0.0;
  double lambda = 0.0;
  std::string x;
  std::int64_t paths = 10000;
  double dt = 1e-3;
  double t_max = 100.0;
  std::uint64_t seed = 1;
  std::string kind = "hbm";
  std::string out;
};

void add_sim_options(CLI::App* cmd, SimArgs& s) {
  cmd->add_option("--domain", s.domain, "halfspace, slab or strip")
      ->required()
      ->check(CLI::IsMember({"halfspace", "slab", "strip"}));
  cmd->add_option("--a", s.a, "horocycle level (halfspace, slab)");
  cmd->add_option("--b", s.b, "slab or strip width");
  cmd->add_option("--mu", s.mu, "index mu > 0")->required();
  cmd->add_option("--lambda", s.lambda, "discount lambda >= 0");
  cmd->add_option("--x", s.x, "start point, comma separated")->required();
  cmd->add_option("--paths", s.paths, "number of paths");
  cmd->add_option("--dt", s.dt, "time step");
  cmd->add_option("--t-max", s.t_max, "time horizon");
  cmd->add_option("--seed", s.seed, "master seed");
  cmd->add_option("--kind", s.kind, "path representation: hbm or y")
      ->check(CLI::IsMember({"hbm", "y"}));
  cmd->add_option("--out", s.out, "output prefix; writes <out>.csv and <out>.json");
}

DomainSpec make_domain(const std::string& kind, double a, double b) {
  if (kind == "halfspace") {
    require(!std::isnan(a), "--a is required for halfspace domains");
    return DomainSpec::half_space(a);
  }
  if (kind == "slab") {
    require(!std::isnan(a) && !std::isnan(b), "--a and --b are required for slab domains");
    return DomainSpec::slab(a, b);
  }
  require(!std::isnan(b), "--b is required for strip domains");
  return DomainSpec::strip(b);
}

sim::SimConfig make_config(const SimArgs& s) {
  require(s.paths > 0, "--paths must be positive");
  sim::SimConfig cfg;
  cfg.n_paths = s.paths;
  cfg.dt = s.dt;
  cfg.t_max = s.t_max;
  cfg.seed = s.seed;
  return cfg;
}

ordered_json sim_json(const char* command, const SimArgs& s, const DomainSpec& dom,
                      const HyperPoint& x) {
  return {{"command", command},
          {"domain", to_string(dom)},
          {"mu", s.mu},
          {"lambda", s.lambda},
          {"x", std::vector<double>(x.coords().begin(), x.coords().end())},
          {"kind", s.kind},
          {"paths", s.paths},
          {"dt", s.dt},
          {"t_max", s.t_max},
          {"seed", s.seed}};
}

int cmd_green(const SimArgs& s, const std::vector<std::string>& ys, double eps, std::ostream& out) {
  const auto dom = make_domain(s.domain, s.a, s.b);
  const auto x = parse_hyper_point(s.x, "--x");
  require(!ys.empty(), "at least one --y target is required");
  auto cfg = make_config(s);
  std::vector<sim::Ball> balls;
  for (const auto& y : ys) {
    const auto p = parse_hyper_point(y, "--y");
    require(p.dim() == x.dim(), "--x and --y must have the same dimension");
    require(!(p == x), "--y must differ from --x");
    const double r = std::isnan(eps) ? 0.02 * euclidean_distance(x, p) : eps;
    require(r > 0.0, "--eps must be positive");
    balls.push_back({p, r});
  }
  cfg.eps_ball = balls.front().radius;
  kernels::GreenOptions go;
  go.kind = s.kind == "y" ? sim::PathKind::BrownBessel : sim::PathKind::Hbm;
  go.weight_power = s.kind == "y" ? -2.0 : 0.0;
  const auto est = kernels::estimate_green_many(dom, s.mu, s.lambda, x, balls, cfg, go);

  std::vector<report::KernelRow> rows;
  auto js = sim_json("green", s, dom, x);
  auto arr = ordered_json::array();
  for (std::size_t j = 0; j < est.size(); ++j) {
    const auto& e = est[j];
    const auto& y = balls[j].center;
    rows.push_back({std::vector<double>(x.coords().begin(), x.coords().end()),
                    report::format_point(y.coords()), s.mu, s.lambda, e.value, e.std_error,
                    e.n_paths, s.seed});
    arr.push_back({{"y", std::vector<double>(y.coords().begin(), y.coords().end())},
                   {"radius", balls[j].radius},
                   {"value", e.value},
                   {"stderr", e.std_error},
                   {"half_ball_value", e.half_ball_value},
                   {"half_ball_stderr", e.half_ball_std_error},
                   {"ball_bias", e.ball_bias},
                   {"near_diagonal", e.near_diagonal}});
  }
  js["estimates"] = arr;
  emit(s.out, ".csv", report::kernel_csv(rows), out);
  emit(s.out, ".json", js.dump(2) + "\n", out);
  return kExitOk;
}

std::string region_label(const kernels::FaceRegion& r) {
  std::string s = to_string(r.face) + ":";
  for (std::size_t k = 0; k < r.lower.size(); ++k) {
    if (k) s += ';';
    s += report::format_double(r.lower[k]) + ".." + report::format_double(r.upper[k]);
  }
  return s;
}

int cmd_poisson(const SimArgs& s, const std::string& face, const std::string& lower,
                const std::string& upper, std::ostream& out) {
  const auto dom = make_domain(s.domain, s.a, s.b);
  const auto x = parse_hyper_point(s.x, "--x");
  kernels::FaceRegion region;
  region.face = parse_face(face);
  region.lower = parse_list(lower, "--lower");
  region.upper = parse_list(upper, "--upper");
  require(region.lower.size() + 1 == x.dim() && region.upper.size() + 1 == x.dim(),
          "--lower and --upper need n-1 values each");
  const auto cfg = make_config(s);
  kernels::PoissonOptions po;
  po.kind = s.kind == "y" ? sim::PathKind::BrownBessel : sim::PathKind::Hbm;
  const auto e = kernels::estimate_poisson(dom, s.mu, s.lambda, x, region, cfg, po);

  const std::vector<report::KernelRow> rows{
      {std::vector<double>(x.coords().begin(), x.coords().end()), region_label(region), s.mu,
       s.lambda, e.value, e.std_error, e.n_paths, s.seed}};
  auto js = sim_json("poisson", s, dom, x);
  js["region"] = {{"face", to_string(region.face)}, {"lower", region.lower}, {"upper", region.upper}};
  js["value"] = e.value;
  js["stderr"] = e.std_error;
  js["surrogate"] = e.surrogate;
  emit(s.out, ".csv", report::kernel_csv(rows), out);
  emit(s.out, ".json", js.dump(2) + "\n", out);
  return kExitOk;
}

struct BoundArgs {
  std::string theorem;
  std::string kind;
  double mu = 0.0;
  double a = std::numeric_limits<double>::quiet_NaN();
  double b = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> xs;
  std::vector<std::string> ys;
  std::string face;
  std::string out;
};

int cmd_bounds(const BoundArgs& ba, std::ostream& out) {
  require(ba.mu > 0.0 && std::isfinite(ba.mu), "--mu must be positive");
  require(!ba.xs.empty() && !ba.ys.empty(), "empty sweep grid: give at least one --x and one --y");
  std::string kind = ba.kind;
  if (ba.theorem == "4.1") kind = "green";
  if (ba.theorem == "4.2") kind = "poisson";
  require(kind == "green" || kind == "poisson",
          "--kind green|poisson is required for --theorem strip|halfspace");
  const bool green = kind == "green";
  DomainSpec dom;
  if (ba.theorem == "4.1" || ba.theorem == "4.2") {
    require(!std::isnan(ba.a) && !std::isnan(ba.b), "--a and --b are required");
    dom = DomainSpec::slab(ba.a, ba.b);
  } else if (ba.theorem == "strip") {
    require(!std::isnan(ba.b), "--b is required");
    dom = DomainSpec::strip(ba.b);
  } else {
    require(!std::isnan(ba.a), "--a is required");
    dom = DomainSpec::half_space(ba.a);
  }
  BoundaryFace face = BoundaryFace::Bottom;
  if (!green) {
    if (dom.kind == DomainKind::HalfSpace)
      require(ba.face.empty() || ba.face == "bottom", "half-spaces only have the bottom face");
    else
      face = parse_face(ba.face.empty() ? "bottom" : ba.face);
    require(!(dom.kind == DomainKind::HalfSpace),
            "no quadrature is available for half-space Poisson kernels");
    require(!(dom.kind == DomainKind::Strip && face == BoundaryFace::Bottom),
            "the strip bottom is the ideal boundary; use a side face");
  }

  std::vector<HyperPoint> xs, ys;
  for (const auto& s : ba.xs) xs.push_back(parse_hyper_point(s, "--x"));
  for (const auto& s : ba.ys) ys.push_back(parse_hyper_point(s, "--y"));
  const std::size_t n = xs.front().dim();
  for (const auto& p : xs) require(p.dim() == n, "all points must share the dimension");
  for (const auto& p : ys) require(p.dim() == n, "all points must share the dimension");
  const int ni = static_cast<int>(n);

  bounds::BoundReport rep;
  for (std::size_t i = 1; i <= n; ++i) rep.input_names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) rep.input_names.push_back("y" + std::to_string(i));
  struct Job {
    const HyperPoint* x;
    const HyperPoint* y;
  };
  std::vector<Job> jobs;
  for (const auto& x : xs)
    for (const auto& y : ys) jobs.push_back({&x, &y});
  rep.points.resize(jobs.size());
  // Quadratures are independent; rows are written by index so the order is fixed.
  parallel_for(
      jobs.size(),
      [&](std::size_t k) {
        const auto& x = *jobs[k].x;
        const auto& y = *jobs[k].y;
        auto& row = rep.points[k];
        row.inputs.assign(x.coords().begin(), x.coords().end());
        row.inputs.insert(row.inputs.end(), y.coords().begin(), y.coords().end());
        if (green && x == y) {
          row.measured = std::numeric_limits<double>::infinity();
          row.bound_expr = std::numeric_limits<double>::infinity();
          row.ratio = std::numeric_limits<double>::quiet_NaN();
          row.note = "skipped=diagonal";
          return;
        }
        if (green) {
          switch (dom.kind) {
            case DomainKind::Slab: row.bound_expr = bounds::green_bound_slab(ba.mu, ni, dom.a, dom.b, x, y); break;
            case DomainKind::Strip: row.bound_expr = bounds::green_bound_strip(ba.mu, ni, dom.b, x, y); break;
            case DomainKind::HalfSpace: row.bound_expr = bounds::green_bound_halfspace(ba.mu, ni, dom.a, x, y); break;
          }
          row.measured = kernels::green_quadrature(dom, ba.mu, x, y);
        } else {
          row.bound_expr = dom.kind == DomainKind::Slab
                               ? bounds::poisson_bound_slab(ba.mu, ni, dom.a, dom.b, x, y, face)
                               : bounds::poisson_bound_strip(ba.mu, ni, dom.b, x, y, face);
          row.measured = kernels::poisson_quadrature(dom, ba.mu, x, y);
        }
        row.ratio = row.measured / row.bound_expr;
      },
      1);
  rep.finalize();

  ordered_json js{{"command", "bounds"},
                  {"theorem", ba.theorem},
                  {"kind", kind},
                  {"domain", to_string(dom)},
                  {"mu", ba.mu},
                  {"measured_by", "quadrature"}};
  if (!green) js["face"] = to_string(face);
  const auto summary = ordered_json::parse(report::bound_summary_json(rep, "sweep"));
  for (const auto& [k, v] : summary.items())
    if (k != "label") js[k] = v;
  js["skipped"] = rep.points.size() - rep.active_rows();
  emit(ba.out, ".csv", report::bound_csv(rep), out);
  emit(ba.out, ".json", js.dump(2) + "\n", out);
  return kExitOk;
}

struct LemmaArgs {
  std::string alpha = "0";
  std::string beta = "0.5";
  std::string gamma = "none";
  std::string a_grid = "1";
  std::string b_grid = "0.001:50:25";
  std::string out;
};

int cmd_lemma(const LemmaArgs& la, std::ostream& out) {
  const auto alphas = parse_list(la.alpha, "--alpha");
  const auto betas = parse_list(la.beta, "--beta");
  const auto gamma = parse_list(la.gamma, "--gamma");
  const auto a_values = parse_list(la.a_grid, "--a-grid");
  const auto b_values = parse_list(la.b_grid, "--b-grid");
  require(!alphas.empty() && !betas.empty() && !b_values.empty(), "empty sweep grid");
  const std::size_t k = gamma.size();
  require(k == 0 || !a_values.empty(), "--a-grid is empty");
  const bool oracle = k == 0;

  bounds::BoundReport all;
  auto cells = ordered_json::array();
  for (double alpha : alphas) {
    for (double beta : betas) {
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
      for (const auto& p : grid) p.validate();
      auto rep = bounds::lemma_certify(grid);
      ordered_json cell{{"alpha", alpha},
                        {"beta", beta},
                        {"gamma", gamma},
                        {"points", grid.size()},
                        {"sup_ratio", rep.sup_ratio},
                        {"inf_ratio", rep.inf_ratio},
                        {"refinement_delta", rep.refinement_delta}};
      if (oracle) {
        // The closed form covers alpha = 0 only; other rows carry nan.
        rep.input_names.push_back("macdonald");
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const double m = alpha == 0.0 ? bounds::lemma_macdonald(beta, grid[i].b)
                                        : std::numeric_limits<double>::quiet_NaN();
          rep.points[i].inputs.push_back(m);
          if (alpha == 0.0) worst = std::max(worst, std::abs(rep.points[i].measured / m - 1.0));
        }
        if (alpha == 0.0) cell["macdonald_max_rel_error"] = worst;
      }
      cells.push_back(cell);
      if (all.input_names.empty()) all.input_names = rep.input_names;
      all.points.insert(all.points.end(), rep.points.begin(), rep.points.end());
      all.refinement_delta = std::max(all.refinement_delta, rep.refinement_delta);
    }
  }
  all.finalize();
  ordered_json js{{"command", "lemma"}, {"cells", cells}};
  emit(la.out, ".csv", report::bound_csv(all), out);
  emit(la.out, ".json", js.dump(2) + "\n", out);
  return kExitOk;
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> ids;
  for (double v : parse_list(text, "--only")) {
    require(v == std::floor(v) && v >= 1 && v <= 9, "--only takes criterion numbers 1..9");
    ids.push_back(static_cast<int>(v));
  }
  return ids;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_config(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos && eq > 0,
            "config line " + std::to_string(lineno) + " is not key=value");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.rfind("--", 0) == 0) key.erase(0, 2);
    kv.emplace_back(key, value);
  }
  return kv;
}

int run_cli(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  try {
    // Splice config entries in front of the explicit flags; a key given on the
    // command line suppresses all of its config-file occurrences.
    std::vector<std::string> args;
    std::vector<std::string> user;
    std::string config_path;
    for (std::size_t i = 0; i < raw_args.size(); ++i) {
      const auto& a = raw_args[i];
      if (a == "--config") {
        require(i + 1 < raw_args.size(), "--config needs a file name");
        config_path = raw_args[++i];
      } else if (a.rfind("--config=", 0) == 0) {
        config_path = a.substr(9);
      } else {
        user.push_back(a);
      }
    }
    args.push_back(user.empty() ? "hypk" : user.front());
    std::size_t rest = 1;
    if (user.size() > 1 && user[1].rfind("-", 0) != 0) {
      args.push_back(user[1]);
      rest = 2;
    }
    if (!config_path.empty()) {
      std::string text;
      try {
        text = report::read_file(config_path);
      } catch (const std::exception& e) {
        throw ValidationError(e.what());
      }
      for (const auto& [key, value] : parse_config(text)) {
        const std::string flag = "--" + key;
        const bool overridden = std::any_of(user.begin(), user.end(), [&](const std::string& u) {
          return u == flag || u.rfind(flag + "=", 0) == 0;
        });
        if (overridden) continue;
        if (key == "quick") {
          if (value == "true" || value == "1" || value == "yes") args.push_back(flag);
          continue;
        }
        args.push_back(flag);
        args.push_back(value);
      }
    }
    for (std::size_t i = rest; i < user.size(); ++i) args.push_back(user[i]);

    CLI::App app{"Green functions and Poisson kernels of hyperbolic Brownian motion with drift"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    SimArgs gs;
    std::vector<std::string> green_ys;
    double eps = std::numeric_limits<double>::quiet_NaN();
    auto* green = app.add_subcommand("green", "Monte Carlo lambda-Green function");
    add_sim_options(green, gs);
    green->add_option("--y", green_ys, "target point (repeatable)")->required();
    green->add_option("--eps", eps, "ball radius (default 0.02 |x - y|)");

    SimArgs ps;
    std::string face, lower, upper;
    auto* poisson = app.add_subcommand("poisson", "Monte Carlo lambda-Poisson kernel region average");
    add_sim_options(poisson, ps);
    poisson->add_option("--face", face, "side_low, side_high or bottom")->required();
    poisson->add_option("--lower", lower, "lower corner of the face region")->required();
    poisson->add_option("--upper", upper, "upper corner of the face region")->required();

    BoundArgs ba;
    auto* bnd = app.add_subcommand("bounds", "quadrature values against the two-sided estimates");
    bnd->add_option("--theorem", ba.theorem, "4.1, 4.2, strip or halfspace")
        ->required()
        ->check(CLI::IsMember({"4.1", "4.2", "strip", "halfspace"}));
    bnd->add_option("--kind", ba.kind, "green or poisson (strip and halfspace)");
    bnd->add_option("--mu", ba.mu, "index mu > 0")->required();
    bnd->add_option("--a", ba.a, "horocycle level");
    bnd->add_option("--b", ba.b, "width");
    bnd->add_option("--x", ba.xs, "start point (repeatable)");
    bnd->add_option("--y", ba.ys, "target point (repeatable)");
    bnd->add_option("--face", ba.face, "boundary face of the targets (Poisson)");
    bnd->add_option("--out", ba.out, "output prefix");

    LemmaArgs la;
    auto* lem = app.add_subcommand("lemma", "integral comparability certification");
    lem->add_option("--alpha", la.alpha, "alpha values (list)");
    lem->add_option("--beta", la.beta, "beta values (list)");
    lem->add_option("--gamma", la.gamma, "gamma_1..gamma_k (one list, 'none' for k = 0)");
    lem->add_option("--a-grid", la.a_grid, "a_i grid values, list or lo:hi:n");
    lem->add_option("--b-grid", la.b_grid, "b grid values, list or lo:hi:n");
    lem->add_option("--out", la.out, "output prefix");

    bool quick = false;
    std::uint64_t master = ValidationOptions{}.seed;
    std::string out_dir = "validation_out";
    std::string only;
    auto* val = app.add_subcommand("validate-all", "run the acceptance suite");
    val->add_flag("--quick", quick, "reduced path counts and sweep sizes");
    val->add_option("--seed", master, "master seed");
    val->add_option("--out", out_dir, "output directory");
    val->add_option("--only", only, "comma-separated criterion numbers");

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err << "hypk: " << e.what() << "\n";
      return kExitValidation;
    }

    if (green->parsed()) return cmd_green(gs, green_ys, eps, out);
    if (poisson->parsed()) return cmd_poisson(ps, face, lower, upper, out);
    if (bnd->parsed()) return cmd_bounds(ba, out);
    if (lem->parsed()) return cmd_lemma(la, out);
    ValidationOptions opt;
    opt.quick = quick;
    opt.seed = master;
    const auto r = validate_all(opt, out_dir, only.empty() ? std::vector<int>{} : parse_ids(only), out);
    return r.all_pass ? kExitOk : kExitCriterionFailed;
  } catch (const ValidationError& e) {
    err << "hypk: invalid input: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "hypk: numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << "hypk: error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace hypk::tools
