// Acceptance gate: criteria 1-8 at full size, then criterion 9 as two complete
// quick validate-all runs compared file by file.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypk/report.hpp"
#include "hypk_tools/cli.hpp"
#include "hypk_tools/validation.hpp"

namespace fs = std::filesystem;
using namespace hypk;
using namespace hypk::tools;

namespace {

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(dir))
    if (e.is_regular_file()) files[fs::relative(e.path(), dir).string()] = report::read_file(e.path());
  return files;
}

CriterionResult reproducibility(const ValidationOptions& opt, const fs::path& out) {
  CriterionResult res;
  res.id = 9;
  res.name = criterion_name(9);
  std::vector<fs::path> dirs{out / "repro_a", out / "repro_b"};
  std::vector<int> codes;
  for (const auto& d : dirs) {
    fs::remove_all(d);
    std::ostringstream log, err;
    codes.push_back(run_cli({"hypk", "validate-all", "--quick", "--seed", std::to_string(opt.seed), "--out",
                             d.string()},
                            log, err));
  }
  const auto a = snapshot(dirs[0]);
  const auto b = snapshot(dirs[1]);
  std::size_t bytes = 0;
  bool same = a.size() == b.size() && !a.empty();
  std::string first_diff;
  for (const auto& [name, text] : a) {
    bytes += text.size();
    const auto it = b.find(name);
    if (it == b.end() || it->second != text) {
      same = false;
      if (first_diff.empty()) first_diff = name;
    }
  }
  res.pass = same && codes[0] != kExitValidation && codes[0] != kExitNumerical && codes[0] == codes[1];
  std::ostringstream s;
  s << a.size() << " files (" << bytes << " bytes) from two quick validate-all runs "
    << (same ? "identical" : "differ at " + (first_diff.empty() ? std::string("file list") : first_diff))
    << ", exit codes " << codes[0] << "/" << codes[1];
  res.summary = s.str();
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypk acceptance gate"};
  std::string out = "acceptance_out";
  ValidationOptions opt;
  app.add_option("--out", out, "scratch and artifact directory");
  app.add_option("--seed", opt.seed, "master seed");
  app.add_flag("--quick", opt.quick, "reduced sizes for criteria 1-8");
  CLI11_PARSE(app, argc, argv);

  const fs::path dir(out);
  fs::create_directories(dir);
  bool all = true;
  for (int id = 1; id <= kNumericCriteria + 1; ++id) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto r = id <= kNumericCriteria ? run_criterion(id, opt) : reproducibility(opt, dir);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& art : r.artifacts) report::write_file_atomic(dir / art.name, art.contents);
    std::printf("%s criterion %d (%s): %s [%.1f s]\n", r.pass ? "PASS" : "FAIL", id, r.name.c_str(),
                r.summary.c_str(), secs);
    std::fflush(stdout);
    all = all && r.pass;
  }
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
