#include "hypk_tools/validation.hpp"

#include <exception>

#include "hypk/error.hpp"

namespace hypk::tools {

std::string criterion_name(int id) {
  switch (id) {
    case 1: return "integral comparability lemma";
    case 2: return "theta Laplace identity";
    case 3: return "Bessel oracles";
    case 4: return "drift-change reduction";
    case 5: return "X-path and Y-path equivalence";
    case 6: return "Green and Poisson estimate certification";
    case 7: return "corollary consistency";
    case 8: return "Dirichlet problem";
    case 9: return "determinism";
    default: return "unknown";
  }
}

CriterionResult run_criterion(int id, const ValidationOptions& opt) {
  try {
    switch (id) {
      case 1: return lemma_certification(opt);
      case 2: return laplace_identity(opt);
      case 3: return bessel_oracles(opt);
      case 4: return reduction_identity(opt);
      case 5: return path_equivalence(opt);
      case 6: return theorem_certification(opt);
      case 7: return corollary_consistency(opt);
      case 8: return dirichlet_checks(opt);
      default: break;
    }
  } catch (const std::exception& e) {
    CriterionResult r;
    r.id = id;
    r.name = criterion_name(id);
    r.pass = false;
    r.summary = std::string("error: ") + e.what();
    r.measured["error"] = e.what();
    return r;
  }
  throw ValidationError("criterion id must be in 1.." + std::to_string(kNumericCriteria));
}

}  // namespace hypk::tools
