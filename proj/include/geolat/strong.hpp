#pragma once

// Strong embeddings. For finite point differences the relations ≼, ≼* and ≼**
// coincide, so one witness search decides all three.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "geolat/lattice_core.hpp"

namespace geolat {

// An ordering of the new points of B over A together with the base set each
// point is added under.
struct Witness {
  std::vector<PointLabel> order;
  std::vector<LabelSet> bases;

  friend bool operator==(const Witness&, const Witness&) = default;
};

inline constexpr std::size_t kWitnessSearchLimit = 12;

// Both conditions are checked: every prefix generates a meet-subgeometry of B,
// and every step is the principal extension under the join of its base.
bool is_witness(const Geometry& a, const Geometry& b, const Witness& w);

// The two characterizations of a valid ordering, computed independently.
bool order_by_prefixes(const Geometry& a, const Geometry& b, const std::vector<PointLabel>& order);
bool order_by_steps(const Geometry& a, const Geometry& b, const std::vector<PointLabel>& order);

// Bases for an ordering that passes order_by_prefixes: the least basis of the
// generator of each step's cut. Throws NotAWitness otherwise.
Witness witness_for_order(const Geometry& a, const Geometry& b, const std::vector<PointLabel>& order);

// Lexicographically least witness ordering. `limit` caps |P(B) − P(A)|.
std::optional<Witness> find_strong_witness(const Geometry& a, const Geometry& b,
                                           std::size_t limit = kWitnessSearchLimit);

// Calls visit on every witness in lexicographic order of orderings until it
// returns false.
void all_witness_orderings(const Geometry& a, const Geometry& b, const std::function<bool(const Witness&)>& visit,
                           std::size_t limit = kWitnessSearchLimit);

bool is_strong(const Geometry& a, const Geometry& b);
bool is_strong_doublestar(const Geometry& a, const Geometry& b);

// Whether A ≼ B given A ≼ C, B ≼ C and A ⊆ B.
bool check_coherence(const Geometry& a, const Geometry& b, const Geometry& c);

enum class BaseRule {
  IndependentTriple,  // the new point is generic: least independent triple of A
  ALine,              // the line meets A in at least two points: its least two
  OneAPoint,          // one point of A plus the earliest new point on the line
  NoAPoint,           // the two earliest new points on the line
};

const char* base_rule_name(BaseRule r);

struct CanonicalWitness {
  std::vector<PointLabel> order;
  std::vector<LabelSet> bases;
  std::vector<BaseRule> rules;

  Witness witness() const { return {order, bases}; }
  friend bool operator==(const CanonicalWitness&, const CanonicalWitness&) = default;
};

// Rank 3 only. Keeps the order and rewrites each base to its canonical form.
CanonicalWitness canonicalize(const Geometry& a, const Geometry& b, const Witness& w);
Geometry build_from_canonical(const Geometry& a, const CanonicalWitness& cw);

// Plane amalgam built from the line families of both factors.
Geometry star_free_amalgam(const Geometry& a, const Geometry& b, const Geometry& c);

struct StrongPlus {
  enum class Verdict { Yes, Unknown };
  Verdict verdict = Verdict::Unknown;
  std::optional<Geometry> common;  // C with A ≼ C and B ≼ C when Yes
};

// Breadth-first over extensions of B by at most `budget` principal steps.
StrongPlus bounded_strong_plus(const Geometry& a, const Geometry& b, std::size_t budget);

struct Freeness {
  bool holds = false;
  std::vector<std::string> reasons;
};

// Whether Ca and B are free over A inside the ambient geometry.
Freeness free_over(const Geometry& ambient, const Geometry& a, const Geometry& ca, const Geometry& b);

}  // namespace geolat
