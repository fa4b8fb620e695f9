#include "hamstar/verdict.hpp"

namespace hamstar {

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::HypothesisNotMet:
      return "hypothesis_not_met";
    case VerdictKind::HamPath:
      return "ham_path";
    case VerdictKind::Star:
      return "star";
    case VerdictKind::Counterexample:
      return "counterexample";
  }
  return "unknown";
}

}  // namespace hamstar
