#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace hypk::tools {

struct ValidationOptions {
  /// Reduced path counts and sweep sizes; same checks.
  bool quick = false;
  std::uint64_t seed = 20240611;
};

/// A file produced by a criterion, written by the caller (name relative to the output directory).
struct Artifact {
  std::string name;
  std::string contents;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// One-line human summary of the measured values.
  std::string summary;
  nlohmann::ordered_json measured = nlohmann::ordered_json::object();
  std::vector<Artifact> artifacts;
};

inline constexpr int kNumericCriteria = 8;

/// Runs numeric acceptance criterion `id` (1..8). Exceptions from the library are
/// caught and turned into a failing result that names the error.
CriterionResult run_criterion(int id, const ValidationOptions& opt);

std::string criterion_name(int id);

/// Individual criteria, exposed for focused testing.
CriterionResult lemma_certification(const ValidationOptions& opt);
CriterionResult laplace_identity(const ValidationOptions& opt);
CriterionResult bessel_oracles(const ValidationOptions& opt);
CriterionResult reduction_identity(const ValidationOptions& opt);
CriterionResult path_equivalence(const ValidationOptions& opt);
CriterionResult theorem_certification(const ValidationOptions& opt);
CriterionResult corollary_consistency(const ValidationOptions& opt);
CriterionResult dirichlet_checks(const ValidationOptions& opt);

}  // namespace hypk::tools
