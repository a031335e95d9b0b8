#include "geolat/construction.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "geolat/extension.hpp"
#include "geolat/strong.hpp"

namespace geolat {

namespace {

void check_indices(const Construction& c, const IndexSet& x) {
  for (std::size_t i : x) {
    if (i >= c.steps.size()) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "step index " + std::to_string(i) + " outside 0.." + std::to_string(c.steps.size()));
    }
  }
}

// Index of the step introducing each new point.
std::map<PointLabel, std::size_t> step_of_point(const Construction& c) {
  std::map<PointLabel, std::size_t> out;
  for (std::size_t i = 0; i < c.steps.size(); ++i) out.emplace(c.steps[i].point, i);
  return out;
}

Geometry fold(const Geometry& base, const std::vector<ConstructionStep>& steps) {
  Geometry g = base;
  for (const auto& s : steps) {
    const Mask m = g.closure(g.mask_of(s.base));
    if (g.rank_of(m) < 2) {
      throw Error(ErrorKind::Internal, "base " + s.base.str() + " of " + s.point + " spans rank < 2");
    }
    g = principal_extension(g, m, s.point);
  }
  return g;
}

}  // namespace

void validate_construction(const Construction& c) {
  const int n = c.base.rank();
  std::set<PointLabel> seen(c.base.points().begin(), c.base.points().end());
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const auto& s = c.steps[i];
    const std::string at = "step " + std::to_string(i) + " (" + s.point + "): ";
    if (s.point.empty()) throw Error(ErrorKind::InvalidConstruction, at + "empty point label");
    if (seen.count(s.point)) throw Error(ErrorKind::InvalidConstruction, at + "point is not fresh");
    if (s.base.size() < 2 || static_cast<int>(s.base.size()) > n) {
      throw Error(ErrorKind::InvalidConstruction,
                  at + "base " + s.base.str() + " must have between 2 and " + std::to_string(n) + " points");
    }
    for (const auto& b : s.base) {
      if (!seen.count(b)) throw Error(ErrorKind::InvalidConstruction, at + "base point " + b + " not yet available");
    }
    seen.insert(s.point);
  }
  if (seen.size() > kMaxPoints) throw Error(ErrorKind::TooLarge, "construction exceeds 64 points");
}

Geometry run_construction(const Construction& c) {
  validate_construction(c);
  return fold(c.base, c.steps);
}

bool is_closed(const Construction& c, const IndexSet& x) {
  check_indices(c, x);
  const auto origin = step_of_point(c);
  for (std::size_t i : x) {
    for (const auto& b : c.steps[i].base) {
      auto it = origin.find(b);
      if (it != origin.end() && !x.count(it->second)) return false;
    }
  }
  return true;
}

IndexSet close_indices(const Construction& c, const IndexSet& x0) {
  check_indices(c, x0);
  const auto origin = step_of_point(c);
  IndexSet out = x0;
  std::vector<std::size_t> todo(x0.begin(), x0.end());
  while (!todo.empty()) {
    const std::size_t i = todo.back();
    todo.pop_back();
    for (const auto& b : c.steps[i].base) {
      auto it = origin.find(b);
      if (it != origin.end() && out.insert(it->second).second) todo.push_back(it->second);
    }
  }
  return out;
}

Geometry restrict_construction(const Construction& c, const IndexSet& x) {
  if (!is_closed(c, x)) throw Error(ErrorKind::NotClosed, "index set is not closed");
  validate_construction(c);
  std::vector<ConstructionStep> sub;
  LabelSet points = c.base.point_set();
  for (std::size_t i : x) {
    sub.push_back(c.steps[i]);
    points = points.united(LabelSet{c.steps[i].point});
  }
  Geometry result = fold(c.base, sub);
  if (!(result == subgeometry(fold(c.base, c.steps), points))) {
    throw Error(ErrorKind::Internal, "restricted construction differs from the generated subgeometry");
  }
  return result;
}

Geometry reorder_construction(const Construction& c, const std::vector<std::size_t>& perm) {
  validate_construction(c);
  const std::size_t n = c.steps.size();
  std::vector<bool> used(n, false);
  if (perm.size() != n) {
    throw InadmissiblePermutationError(std::min(perm.size(), n), "permutation has the wrong length");
  }
  std::set<PointLabel> available(c.base.points().begin(), c.base.points().end());
  std::vector<ConstructionStep> steps;
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || used[perm[j]]) throw InadmissiblePermutationError(j, "not a permutation");
    used[perm[j]] = true;
    const auto& s = c.steps[perm[j]];
    for (const auto& b : s.base) {
      if (!available.count(b)) {
        throw InadmissiblePermutationError(j, "base point " + b + " of " + s.point + " is not yet available");
      }
    }
    available.insert(s.point);
    steps.push_back(s);
  }
  Geometry result = fold(c.base, steps);
  if (!(result == fold(c.base, c.steps))) {
    throw Error(ErrorKind::Internal, "reordered construction differs from the original");
  }
  return result;
}

Geometry free_amalgam(const Geometry& a, const Geometry& b, const Geometry& c, const Construction& wit_a,
                      const Construction& wit_b) {
  if (a.point_set().intersected(b.point_set()) != c.point_set()) {
    throw Error(ErrorKind::Overlap, "shared points " + a.point_set().intersected(b.point_set()).str() +
                                        " differ from the base " + c.point_set().str());
  }
  if (!(wit_a.base == c) || !(run_construction(wit_a) == a)) {
    throw Error(ErrorKind::WitnessMismatch, "first witness does not build its geometry over the base");
  }
  if (!(wit_b.base == c) || !(run_construction(wit_b) == b)) {
    throw Error(ErrorKind::WitnessMismatch, "second witness does not build its geometry over the base");
  }
  Construction joint{c, wit_a.steps};
  joint.steps.insert(joint.steps.end(), wit_b.steps.begin(), wit_b.steps.end());
  Geometry result = run_construction(joint);
  if (!is_meet_subgeometry(a, result) || !is_meet_subgeometry(b, result)) {
    throw Error(ErrorKind::Internal, "factors are not meet-subgeometries of the free amalgam");
  }
  return result;
}

std::optional<Construction> in_class_Kn(const Geometry& g) {
  if (g.size() > 12) throw Error(ErrorKind::TooLarge, "membership search is limited to 12 points");
  const int n = g.rank();
  const std::size_t size = g.size();
  // Index combinations in increasing order are lexicographic on labels.
  std::vector<std::size_t> pick(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  if (static_cast<std::size_t>(n) > size) return std::nullopt;
  while (true) {
    Mask s = 0;
    for (std::size_t i : pick) s |= bits::bit(i);
    if (g.set_rank(s) == n) {
      const Geometry base = subgeometry(g, s);
      if (base == free_geometry(base.point_set())) {
        if (auto w = find_strong_witness(base, g)) {
          Construction out{base, {}};
          for (std::size_t i = 0; i < w->order.size(); ++i) out.steps.push_back({w->order[i], w->bases[i]});
          return out;
        }
      }
    }
    int k = n - 1;
    while (k >= 0 && pick[static_cast<std::size_t>(k)] == size - static_cast<std::size_t>(n - k)) --k;
    if (k < 0) return std::nullopt;
    ++pick[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < n; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::size_t ExtensionCache::intern(const Geometry& g) {
  auto [it, inserted] = ids_.emplace(g, geometries_.size());
  if (inserted) geometries_.push_back(g);
  return it->second;
}

std::size_t ExtensionCache::extend(std::size_t id, const LabelSet& base, const PointLabel& p) {
  const Geometry& g = geometries_[id];
  const Mask m = g.closure(g.mask_of(base));
  const auto key = std::make_tuple(id, m, p);
  auto it = extensions_.find(key);
  if (it != extensions_.end()) return it->second;
  if (g.rank_of(m) < 2) throw Error(ErrorKind::BadBase, "base " + base.str() + " spans rank < 2");
  const std::size_t out = intern(principal_extension(g, m, p));
  extensions_.emplace(key, out);
  return out;
}

}  // namespace geolat
