#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "hypk/geometry.hpp"
#include "hypk/simulate.hpp"
#include "hypk_tools/validation.hpp"

namespace hypk::tools::detail {

using nlohmann::ordered_json;

inline std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline std::vector<double> logspace(double lo, double hi, int count) {
  std::vector<double> out;
  if (count == 1) return {lo};
  for (int i = 0; i < count; ++i)
    out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (count - 1)));
  return out;
}

/// Seed of sub-run `label` of criterion `id`.
inline std::uint64_t run_seed(const ValidationOptions& opt, int id, int label) {
  return sim::derive_seed(opt.seed, static_cast<std::uint64_t>(id) * 1000u +
                                        static_cast<std::uint64_t>(label));
}

inline ordered_json point_json(const HyperPoint& p) {
  return ordered_json(std::vector<double>(p.coords().begin(), p.coords().end()));
}

/// JSON cannot hold inf or nan; store them as strings so summaries stay loadable.
inline ordered_json num(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace hypk::tools::detail
