#include "geolat/strong.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "geolat/construction.hpp"
#include "geolat/extension.hpp"

namespace geolat {

namespace {

void require_subgeometry(const Geometry& a, const Geometry& b) {
  for (const auto& p : a.points()) {
    if (!b.index_of(p)) throw Error(ErrorKind::NotASubgeometry, "point " + p + " is missing from the larger geometry");
  }
  if (!(subgeometry(b, a.point_set()) == a)) {
    throw Error(ErrorKind::NotASubgeometry, "flats differ from those induced on " + a.point_set().str());
  }
}

// New points of b in the order given, as indices into b.
std::vector<std::size_t> order_indices(const Geometry& a, const Geometry& b, const std::vector<PointLabel>& order) {
  const LabelSet fresh = b.point_set().minus(a.point_set());
  if (LabelSet(order) != fresh || order.size() != fresh.size()) {
    throw Error(ErrorKind::BadOrdering, "ordering is not a permutation of " + fresh.str());
  }
  std::vector<std::size_t> out;
  for (const auto& p : order) out.push_back(*b.index_of(p));
  return out;
}

// Least basis of a flat under the index order (greedy is optimal for matroids).
Mask least_basis(const Geometry& g, Mask flat) {
  Mask basis = 0;
  int r = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Mask bit = bits::bit(i);
    if (!(flat & bit)) continue;
    if (g.set_rank(basis | bit) > r) {
      basis |= bit;
      ++r;
    }
  }
  return basis;
}

std::string set_text(const LabelSet& s) {
  std::string out = "{";
  for (const auto& p : s) {
    if (out.size() > 1) out += ", ";
    out += p;
  }
  return out + "}";
}

// Memoized search over sets of placed points, all in b's indexing.
class WitnessSearch {
 public:
  WitnessSearch(const Geometry& a, const Geometry& b, std::size_t limit) : b_(b) {
    require_subgeometry(a, b);
    base_ = b.mask_of(a.point_set());
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (!(base_ & bits::bit(i))) fresh_.push_back(i);
    }
    if (fresh_.size() > limit) {
      throw Error(ErrorKind::TooLarge, std::to_string(fresh_.size()) + " new points exceed the search limit of " +
                                           std::to_string(limit));
    }
    viable_ = a.rank() == b.rank() && prefix_ok(base_);
  }

  Mask base() const { return base_; }
  bool viable() const { return viable_; }

  std::optional<std::vector<std::size_t>> first() {
    if (!viable_ || !completes(base_)) return std::nullopt;
    std::vector<std::size_t> order;
    Mask x = base_;
    while (x != b_.full()) {
      for (std::size_t q : fresh_) {
        const Mask y = x | bits::bit(q);
        if (y != x && prefix_ok(y) && completes(y)) {
          order.push_back(q);
          x = y;
          break;
        }
      }
    }
    return order;
  }

  void each(const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (!viable_ || !completes(base_)) return;
    std::vector<std::size_t> order;
    walk(base_, order, visit);
  }

 private:
  bool walk(Mask x, std::vector<std::size_t>& order, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (x == b_.full()) return visit(order);
    for (std::size_t q : fresh_) {
      const Mask y = x | bits::bit(q);
      if (y == x || !prefix_ok(y) || !completes(y)) continue;
      order.push_back(q);
      const bool go_on = walk(y, order, visit);
      order.pop_back();
      if (!go_on) return false;
    }
    return true;
  }

  bool prefix_ok(Mask x) {
    auto it = prefix_.find(x);
    if (it != prefix_.end()) return it->second;
    const bool ok = restriction_preserves_meets(b_, x);
    prefix_.emplace(x, ok);
    return ok;
  }

  bool completes(Mask x) {
    if (x == b_.full()) return true;
    auto it = completes_.find(x);
    if (it != completes_.end()) return it->second;
    bool ok = false;
    for (std::size_t q : fresh_) {
      const Mask y = x | bits::bit(q);
      if (y != x && prefix_ok(y) && completes(y)) {
        ok = true;
        break;
      }
    }
    completes_.emplace(x, ok);
    return ok;
  }

  const Geometry& b_;
  Mask base_ = 0;
  std::vector<std::size_t> fresh_;
  bool viable_ = false;
  std::unordered_map<Mask, bool> prefix_;
  std::unordered_map<Mask, bool> completes_;
};

std::vector<PointLabel> labels_at(const Geometry& b, const std::vector<std::size_t>& idx) {
  std::vector<PointLabel> out;
  for (std::size_t i : idx) out.push_back(b.points()[i]);
  return out;
}

}  // namespace

bool order_by_prefixes(const Geometry& a, const Geometry& b, const std::vector<PointLabel>& order) {
  require_subgeometry(a, b);
  const auto idx = order_indices(a, b, order);
  if (a.rank() != b.rank()) return false;
  Mask x = b.mask_of(a.point_set());
  if (!restriction_preserves_meets(b, x)) return false;
  for (std::size_t q : idx) {
    x |= bits::bit(q);
    if (!restriction_preserves_meets(b, x)) return false;
  }
  return true;
}

bool order_by_steps(const Geometry& a, const Geometry& b, const std::vector<PointLabel>& order) {
  require_subgeometry(a, b);
  const auto idx = order_indices(a, b, order);
  Mask x = b.mask_of(a.point_set());
  Geometry current = subgeometry(b, x);
  for (std::size_t q : idx) {
    x |= bits::bit(q);
    const Geometry next = subgeometry(b, x);
    bool found = false;
    for (int r = 2; r <= current.rank() && !found; ++r) {
      for (Mask f : current.level(r)) {
        if (principal_extension(current, f, b.points()[q]) == next) {
          found = true;
          break;
        }
      }
    }
    if (!found) return false;
    current = next;
  }
  return true;
}

Witness witness_for_order(const Geometry& a, const Geometry& b, const std::vector<PointLabel>& order) {
  if (!order_by_prefixes(a, b, order)) throw Error(ErrorKind::NotAWitness, "some prefix is not a meet-subgeometry");
  Witness w{order, {}};
  Mask x = b.mask_of(a.point_set());
  for (const auto& p : order) {
    x |= b.mask_of(p);
    const PointCut pc = cut_of_point(subgeometry(b, x), p);
    const auto gen = principal_generator(pc.rest, pc.cut);
    if (pc.cut.members.empty() || !gen) throw Error(ErrorKind::NotAWitness, "point " + p + " is not added principally");
    w.bases.push_back(pc.rest.labels_of(least_basis(pc.rest, *gen)));
  }
  return w;
}

bool is_witness(const Geometry& a, const Geometry& b, const Witness& w) {
  require_subgeometry(a, b);
  order_indices(a, b, w.order);
  if (w.bases.size() != w.order.size()) {
    throw Error(ErrorKind::BadOrdering, "bases and ordering have different lengths");
  }
  if (a.rank() != b.rank()) return false;
  LabelSet available = a.point_set();
  for (std::size_t i = 0; i < w.order.size(); ++i) {
    const auto& base = w.bases[i];
    if (base.size() < 2 || static_cast<int>(base.size()) > a.rank() || !base.is_subset_of(available)) return false;
    available = available.united(LabelSet{w.order[i]});
  }
  if (!order_by_prefixes(a, b, w.order)) return false;
  Mask x = b.mask_of(a.point_set());
  Geometry current = subgeometry(b, x);
  for (std::size_t i = 0; i < w.order.size(); ++i) {
    x |= b.mask_of(w.order[i]);
    const Mask gen = current.closure(current.mask_of(w.bases[i]));
    if (current.rank_of(gen) < 2) return false;
    Geometry next = subgeometry(b, x);
    if (!(principal_extension(current, gen, w.order[i]) == next)) return false;
    current = std::move(next);
  }
  return true;
}

std::optional<Witness> find_strong_witness(const Geometry& a, const Geometry& b, std::size_t limit) {
  WitnessSearch search(a, b, limit);
  auto order = search.first();
  if (!order) return std::nullopt;
  return witness_for_order(a, b, labels_at(b, *order));
}

void all_witness_orderings(const Geometry& a, const Geometry& b, const std::function<bool(const Witness&)>& visit,
                           std::size_t limit) {
  WitnessSearch search(a, b, limit);
  search.each([&](const std::vector<std::size_t>& order) { return visit(witness_for_order(a, b, labels_at(b, order))); });
}

bool is_strong(const Geometry& a, const Geometry& b) { return find_strong_witness(a, b).has_value(); }

bool is_strong_doublestar(const Geometry& a, const Geometry& b) { return is_strong(a, b); }

bool check_coherence(const Geometry& a, const Geometry& b, const Geometry& c) {
  try {
    require_subgeometry(a, b);
  } catch (const Error& e) {
    throw Error(ErrorKind::PreconditionFailed, std::string("first geometry does not sit inside the second: ") + e.what());
  }
  if (!is_strong(a, c)) throw Error(ErrorKind::PreconditionFailed, "first geometry is not strong in the ambient");
  if (!is_strong(b, c)) throw Error(ErrorKind::PreconditionFailed, "second geometry is not strong in the ambient");
  return is_strong(a, b);
}

const char* base_rule_name(BaseRule r) {
  switch (r) {
    case BaseRule::IndependentTriple: return "independent-triple";
    case BaseRule::ALine: return "base-line";
    case BaseRule::OneAPoint: return "one-base-point";
    case BaseRule::NoAPoint: return "no-base-point";
  }
  return "?";
}

CanonicalWitness canonicalize(const Geometry& a, const Geometry& b, const Witness& w) {
  if (a.rank() != 3 || b.rank() != 3) throw Error(ErrorKind::Rank, "canonical witnesses are defined for planes");
  if (!is_witness(a, b, w)) throw Error(ErrorKind::NotAWitness, "input is not a witness");
  const Mask amask = b.mask_of(a.point_set());
  CanonicalWitness cw{w.order, {}, {}};
  for (std::size_t i = 0; i < w.order.size(); ++i) {
    const Mask line = b.closure(b.mask_of(w.bases[i]));
    Mask base = 0;
    BaseRule rule;
    if (b.rank_of(line) == 3) {
      base = least_basis(b, amask);
      rule = BaseRule::IndependentTriple;
    } else {
      std::vector<Mask> earlier;
      for (std::size_t j = 0; j < i; ++j) {
        const Mask m = b.mask_of(w.order[j]);
        if (line & m) earlier.push_back(m);
      }
      const Mask on_a = line & amask;
      const int k = bits::count(on_a);
      if (k >= 2) {
        const Mask low = on_a & (~on_a + 1);
        const Mask rest = on_a & ~low;
        base = low | (rest & (~rest + 1));
        rule = BaseRule::ALine;
      } else if (k == 1) {
        if (earlier.empty()) throw Error(ErrorKind::Internal, "line of " + w.order[i] + " has one base point only");
        base = on_a | earlier[0];
        rule = BaseRule::OneAPoint;
      } else {
        if (earlier.size() < 2) throw Error(ErrorKind::Internal, "line of " + w.order[i] + " lacks earlier points");
        base = earlier[0] | earlier[1];
        rule = BaseRule::NoAPoint;
      }
    }
    cw.bases.push_back(b.labels_of(base));
    cw.rules.push_back(rule);
  }
  if (!is_witness(a, b, cw.witness())) throw Error(ErrorKind::Internal, "canonical bases do not form a witness");
  return cw;
}

Geometry build_from_canonical(const Geometry& a, const CanonicalWitness& cw) {
  auto bad = [](const std::string& msg) { return Error(ErrorKind::InvalidCanonicalData, msg); };
  if (a.rank() != 3) throw Error(ErrorKind::Rank, "canonical witnesses are defined for planes");
  if (cw.bases.size() != cw.order.size() || cw.rules.size() != cw.order.size()) {
    throw bad("order, bases and rules have different lengths");
  }
  const LabelSet pa = a.point_set();
  Construction c{a, {}};
  for (std::size_t i = 0; i < cw.order.size(); ++i) {
    const LabelSet& base = cw.bases[i];
    const std::size_t in_a = base.intersected(pa).size();
    const std::string at = "step " + std::to_string(i) + " (" + cw.order[i] + "): ";
    switch (cw.rules[i]) {
      case BaseRule::IndependentTriple:
        if (base.size() != 3 || in_a != 3 || a.set_rank(a.mask_of(base)) != 3) {
          throw bad(at + "expected an independent triple of base points");
        }
        break;
      case BaseRule::ALine:
        if (base.size() != 2 || in_a != 2) throw bad(at + "expected two base points");
        break;
      case BaseRule::OneAPoint:
        if (base.size() != 2 || in_a != 1) throw bad(at + "expected exactly one base point");
        break;
      case BaseRule::NoAPoint:
        if (base.size() != 2 || in_a != 0) throw bad(at + "expected no base point");
        break;
    }
    c.steps.push_back({cw.order[i], base});
  }
  try {
    return run_construction(c);
  } catch (const Error& e) {
    throw bad(e.what());
  }
}

Geometry star_free_amalgam(const Geometry& a, const Geometry& b, const Geometry& c) {
  if (a.rank() != 3 || b.rank() != 3 || c.rank() != 3) throw Error(ErrorKind::Rank, "all three geometries must be planes");
  const LabelSet pc = c.point_set();
  if (a.point_set().intersected(b.point_set()) != pc || !pc.is_subset_of(a.point_set()) ||
      !(subgeometry(a, pc) == c) || !(subgeometry(b, pc) == c)) {
    throw Error(ErrorKind::Overlap, "the factors do not meet exactly in the base");
  }
  if (!is_strong(c, a) || !is_strong(c, b)) throw Error(ErrorKind::NotStrong, "the base is not strong in both factors");

  // Lines through two base points are shared; everything else is kept apart.
  std::map<LabelSet, LabelSet> shared;
  std::vector<Flat> lines;
  for (const Geometry* g : {&a, &b}) {
    for (const Flat& l : flats_of_rank(*g, 2)) {
      const LabelSet trace = l.intersected(pc);
      if (trace.size() >= 2) {
        auto& merged = shared[trace];
        merged = merged.united(l);
      } else if (l.size() >= 3) {
        lines.push_back(l);
      }
    }
  }
  for (const auto& [trace, l] : shared) {
    if (l.size() >= 3) lines.push_back(l);
  }
  const LabelSet points = a.point_set().united(b.point_set());
  Geometry d;
  try {
    d = Geometry::from_nontrivial_flats(3, points, {{2, lines}});
  } catch (const Error& e) {
    throw Error(ErrorKind::Internal, std::string("amalgam is not a plane: ") + e.what());
  }
  // Strength of the factors is rechecked when the searches fit the limit.
  if (d.size() - a.size() <= kWitnessSearchLimit && !is_strong(a, d)) {
    throw Error(ErrorKind::Internal, "first factor is not strong in the amalgam");
  }
  if (d.size() - b.size() <= kWitnessSearchLimit && !is_strong(b, d)) {
    throw Error(ErrorKind::Internal, "second factor is not strong in the amalgam");
  }
  return d;
}

StrongPlus bounded_strong_plus(const Geometry& a, const Geometry& b, std::size_t budget) {
  if (a.rank() != 3 || b.rank() != 3) throw Error(ErrorKind::PreconditionFailed, "both geometries must be planes");
  try {
    require_subgeometry(a, b);
  } catch (const Error& e) {
    throw Error(ErrorKind::PreconditionFailed, e.what());
  }
  std::vector<Geometry> frontier{b};
  std::unordered_set<Geometry, GeometryHash> seen{b};
  for (std::size_t depth = 0;; ++depth) {
    for (const Geometry& g : frontier) {
      if (is_strong(a, g) && is_strong(b, g)) return {StrongPlus::Verdict::Yes, g};
    }
    if (depth == budget) break;
    std::vector<Geometry> next;
    for (const Geometry& g : frontier) {
      const PointLabel p = suggest_label(g, "X");
      for (int r = 2; r <= g.rank(); ++r) {
        for (Mask f : g.level(r)) {
          Geometry e = principal_extension(g, f, p);
          if (seen.insert(e).second) next.push_back(std::move(e));
        }
      }
    }
    frontier = std::move(next);
  }
  return {};
}

Freeness free_over(const Geometry& ambient, const Geometry& a, const Geometry& ca, const Geometry& b) {
  auto pre = [](const std::string& msg) { return Error(ErrorKind::PreconditionFailed, msg); };
  for (const Geometry* g : {&a, &ca, &b}) {
    try {
      require_subgeometry(*g, ambient);
    } catch (const Error& e) {
      throw pre(e.what());
    }
  }
  if (ca.point_set().intersected(b.point_set()) != a.point_set()) {
    throw pre("the two sides do not meet exactly in the base");
  }
  const auto wa = find_strong_witness(a, ca);
  const auto wb = find_strong_witness(a, b);
  if (!wa || !wb) throw pre("the base is not strong in both sides");
  Construction ca_steps{a, {}};
  for (std::size_t i = 0; i < wa->order.size(); ++i) ca_steps.steps.push_back({wa->order[i], wa->bases[i]});
  Construction b_steps{a, {}};
  for (std::size_t i = 0; i < wb->order.size(); ++i) b_steps.steps.push_back({wb->order[i], wb->bases[i]});
  const Geometry amalgam = free_amalgam(ca, b, a, ca_steps, b_steps);

  const LabelSet points = ca.point_set().united(b.point_set());
  const Geometry sub = subgeometry(ambient, points);
  Freeness out;
  if (!(sub == amalgam)) {
    // Differing simple matroids of equal rank differ on some small independent set.
    const std::size_t n = sub.size();
    for (int k = 3; k <= sub.rank() && out.reasons.empty(); ++k) {
      std::vector<std::size_t> pick(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
      while (pick.size() <= n) {
        Mask s = 0;
        for (std::size_t i : pick) s |= bits::bit(i);
        const LabelSet ls = sub.labels_of(s);
        const int r_sub = sub.set_rank(s);
        const int r_free = amalgam.set_rank(amalgam.mask_of(ls));
        if (r_sub != r_free) {
          out.reasons.push_back(set_text(ls) + (r_sub < r_free ? " is dependent in the ambient but independent"
                                                               : " is independent in the ambient but dependent") +
                                " in the free amalgam");
          break;
        }
        int j = k - 1;
        while (j >= 0 && pick[static_cast<std::size_t>(j)] == n - static_cast<std::size_t>(k - j)) --j;
        if (j < 0) break;
        ++pick[static_cast<std::size_t>(j)];
        for (int t = j + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
      }
    }
    if (out.reasons.empty()) out.reasons.push_back("flats differ from the free amalgam");
  }
  if (!is_strong(sub, ambient)) {
    const Mask n = ambient.mask_of(points);
    std::vector<Mask> traces;
    for (const auto& level : sub.levels()) {
      for (Mask f : level) traces.push_back(transfer(f, sub, ambient));
    }
    bool found = false;
    for (std::size_t i = 0; i < traces.size() && !found; ++i) {
      for (std::size_t j = i + 1; j < traces.size() && !found; ++j) {
        const Mask x = ambient.closure(traces[i]);
        const Mask y = ambient.closure(traces[j]);
        if ((x & y) != ambient.closure(traces[i] & traces[j])) {
          out.reasons.push_back(ambient.labels_of(x).str() + " ∧ " + ambient.labels_of(y).str() + " = " +
                                ambient.labels_of(x & y).str() + " in the ambient, but the traces on " +
                                ambient.labels_of(n).str() + " meet in " +
                                ambient.labels_of(traces[i] & traces[j]).str());
          found = true;
        }
      }
    }
    if (!found) {
      out.reasons.push_back("the generated subgeometry is not strong in the ambient");
    }
  }
  out.holds = out.reasons.empty();
  return out;
}

}  // namespace geolat
