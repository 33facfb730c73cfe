#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "common.hpp"
#include "hypk/report.hpp"
#include "hypk_tools/cli.hpp"

namespace hypk::tools {

namespace fs = std::filesystem;
using detail::ordered_json;

namespace {

/// Sets an environment variable for the lifetime of the object.
class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    if (const char* old = std::getenv(name)) old_ = old;
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() {
    if (old_) ::setenv(name_, old_->c_str(), 1);
    else ::unsetenv(name_);
  }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
  std::optional<std::string> old_;
};

int run_pipeline(const fs::path& dir, std::uint64_t seed, std::ostream& err) {
  fs::create_directories(dir);
  const std::string s = std::to_string(seed);
  const std::string d = dir.string() + "/";
  const std::vector<std::vector<std::string>> commands{
      {"hypk", "green", "--domain", "slab", "--a", "1", "--b", "1", "--mu", "1", "--x", "0.5,1.5",
       "--y", "0.4,1.3", "--y", "0.6,2", "--paths", "3000", "--seed", s, "--out", d + "green"},
      {"hypk", "poisson", "--domain", "slab", "--a", "1", "--b", "1", "--mu", "1", "--lambda",
       "0.5", "--x", "0.5,1.5", "--face", "bottom", "--lower", "0.2", "--upper", "0.6", "--paths",
       "3000", "--seed", s, "--out", d + "poisson"},
      {"hypk", "bounds", "--theorem", "4.2", "--mu", "1", "--a", "1", "--b", "1", "--x", "0.5,1.5",
       "--y", "0.3,1", "--y", "0.7,1", "--face", "bottom", "--out", d + "bounds"},
      {"hypk", "lemma", "--alpha", "0,1", "--beta", "0.5", "--gamma", "1,0.5", "--a-grid",
       "0.01:100:3", "--b-grid", "0.01:10:5", "--out", d + "lemma"}};
  std::ostringstream sink;
  for (const auto& c : commands) {
    const int code = run_cli(c, sink, err);
    if (code != kExitOk) return code;
  }
  return kExitOk;
}

}  // namespace

CriterionResult determinism_check(const ValidationOptions& opt, const fs::path& scratch) {
  CriterionResult res;
  res.id = 9;
  res.name = criterion_name(9);
  std::ostringstream err;
  const auto d1 = scratch / "run1";
  const auto d2 = scratch / "run2";
  fs::remove_all(scratch);
  int c1, c2;
  {
    ScopedEnv env("HYPK_THREADS", "1");
    c1 = run_pipeline(d1, opt.seed, err);
  }
  {
    ScopedEnv env("HYPK_THREADS", "4");
    c2 = run_pipeline(d2, opt.seed, err);
  }
  bool same = c1 == kExitOk && c2 == kExitOk;
  auto files = ordered_json::array();
  std::vector<std::string> names;
  if (same) {
    for (const auto& e : fs::directory_iterator(d1)) names.push_back(e.path().filename().string());
    std::sort(names.begin(), names.end());
    for (const auto& n : names) {
      const auto a = report::read_file(d1 / n);
      const bool exists = fs::exists(d2 / n);
      const bool eq = exists && a == report::read_file(d2 / n);
      same = same && eq;
      files.push_back({{"file", n}, {"bytes", a.size()}, {"identical", eq}});
    }
    same = same && !names.empty();
  }
  fs::remove_all(scratch);
  res.pass = same;
  res.measured["files"] = files;
  if (!err.str().empty()) res.measured["errors"] = err.str();
  res.summary = std::to_string(names.size()) + " files from two runs (1 and 4 workers) " +
                (same ? "bit-identical" : "differ");
  return res;
}

ValidateAllResult validate_all(const ValidationOptions& opt, const fs::path& out_dir,
                               const std::vector<int>& only, std::ostream& log) {
  std::vector<int> ids = only;
  if (ids.empty())
    for (int i = 1; i <= 9; ++i) ids.push_back(i);
  fs::create_directories(out_dir);

  ValidateAllResult all;
  all.all_pass = true;
  auto list = ordered_json::array();
  for (int id : ids) {
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = id == 9 ? determinism_check(opt, out_dir / ".determinism")
                                : run_criterion(id, opt);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& a : r.artifacts) report::write_file_atomic(out_dir / a.name, a.contents);
    log << (r.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << r.name << "): "
        << r.summary << " [" << detail::fmt("%.1f", secs) << " s]" << std::endl;
    all.all_pass = all.all_pass && r.pass;
    list.push_back({{"id", r.id},
                    {"name", r.name},
                    {"pass", r.pass},
                    {"summary", r.summary},
                    {"measured", r.measured}});
    all.criteria.push_back(std::move(r));
  }
  ordered_json js{{"seed", opt.seed},
                  {"quick", opt.quick},
                  {"criteria", list},
                  {"all_pass", all.all_pass}};
  report::write_file_atomic(out_dir / "summary.json", js.dump(2) + "\n");
  return all;
}

}  // namespace hypk::tools
