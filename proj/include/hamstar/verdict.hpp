#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "hamstar/ham_search.hpp"
#include "hamstar/star_search.hpp"

namespace hamstar {

struct HypothesisNotMet {
  friend bool operator==(const HypothesisNotMet&, const HypothesisNotMet&) = default;
};

struct HamPath {
  VertexSequence path;
  friend bool operator==(const HamPath&, const HamPath&) = default;
};

struct Star {
  StarWitness witness;
  friend bool operator==(const Star&, const Star&) = default;
};

// A graph on which a step that the theorem guarantees did not go through.
// `graph6` makes the finding replayable.
struct Counterexample {
  std::string graph6;
  std::string failed_step;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

using Verdict = std::variant<HypothesisNotMet, HamPath, Star, Counterexample>;

enum class VerdictKind { HypothesisNotMet, HamPath, Star, Counterexample };

inline VerdictKind kind_of(const Verdict& v) { return static_cast<VerdictKind>(v.index()); }

std::string_view to_string(VerdictKind k);

}  // namespace hamstar
