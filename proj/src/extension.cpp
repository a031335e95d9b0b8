#include "geolat/extension.hpp"

#include <algorithm>
#include <set>

namespace geolat {

bool ModularCut::contains(Mask flat) const { return std::binary_search(members.begin(), members.end(), flat); }

namespace {

std::vector<Mask> upward_closure(const Geometry& g, const std::vector<Mask>& gens) {
  std::vector<Mask> out;
  for (int r = 0; r <= g.rank(); ++r) {
    for (Mask y : g.level(r)) {
      for (Mask x : gens) {
        if (bits::subset(x, y)) {
          out.push_back(y);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Upward and modular-pair closure in place; false once a point (or ∅) enters.
bool complete_cut(const Geometry& g, std::set<Mask>& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> cur(c.begin(), c.end());
    for (Mask m : upward_closure(g, cur)) {
      if (c.insert(m).second) changed = true;
    }
    cur.assign(c.begin(), c.end());
    for (std::size_t i = 0; i < cur.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.size(); ++j) {
        const Mask m = cur[i] & cur[j];
        if (c.count(m) == 0 && g.is_modular_pair(cur[i], cur[j])) {
          c.insert(m);
          changed = true;
        }
      }
    }
    for (Mask m : c) {
      if (g.rank_of(m) <= 1) return false;
    }
  }
  return true;
}

}  // namespace

void validate_cut(const Geometry& g, const ModularCut& c) {
  if (c.members.empty()) throw Error(ErrorKind::Validation, "a modular cut contains at least the top flat");
  for (Mask x : c.members) {
    const auto r = g.rank_if_flat(x);
    if (!r) throw Error(ErrorKind::NotAFlat, g.labels_of(x).str());
    if (*r <= 1) throw Error(ErrorKind::TrivialCut, "cut contains " + g.labels_of(x).str());
  }
  for (Mask x : c.members) {
    for (int r = 0; r <= g.rank(); ++r) {
      for (Mask y : g.level(r)) {
        if (bits::subset(x, y) && !c.contains(y)) {
          throw Error(ErrorKind::NotUpwardClosed,
                      g.labels_of(x).str() + " is in the cut but " + g.labels_of(y).str() + " is not");
        }
      }
    }
  }
  for (std::size_t i = 0; i < c.members.size(); ++i) {
    for (std::size_t j = i + 1; j < c.members.size(); ++j) {
      const Mask a = c.members[i];
      const Mask b = c.members[j];
      if (!c.contains(a & b) && g.is_modular_pair(a, b)) {
        throw NotModularClosedError(g.labels_of(a), g.labels_of(b));
      }
    }
  }
}

ModularCut principal_cut(const Geometry& g, Mask a) {
  const int r = g.rank_of(a);
  if (r <= 1) throw Error(ErrorKind::TrivialCut, "principal generator " + g.labels_of(a).str() + " has rank " + std::to_string(r));
  return ModularCut{upward_closure(g, {a})};
}

ModularCut resolve_cut(const Geometry& g, const CutSpec& spec) {
  if (const auto* p = std::get_if<Principal>(&spec)) {
    return principal_cut(g, g.mask_of(p->generator));
  }
  const auto& ex = std::get<Explicit>(spec);
  ModularCut c;
  for (const auto& f : ex.members) c.members.push_back(g.mask_of(f));
  std::sort(c.members.begin(), c.members.end());
  c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
  validate_cut(g, c);
  return c;
}

ModularCut generated_cut(const Geometry& g, const std::vector<Mask>& generators) {
  for (Mask x : generators) g.rank_of(x);
  ModularCut c{upward_closure(g, generators)};
  validate_cut(g, c);
  return c;
}

ModularCut generated_cut(const Geometry& g, const std::vector<Flat>& generators) {
  std::vector<Mask> gens;
  for (const auto& f : generators) gens.push_back(g.mask_of(f));
  return generated_cut(g, gens);
}

std::optional<Mask> principal_generator(const Geometry& g, const ModularCut& c) {
  if (c.members.empty()) return std::nullopt;
  Mask a = g.full();
  for (Mask x : c.members) a &= x;
  if (!c.contains(a)) return std::nullopt;
  if (upward_closure(g, {a}) != c.members) return std::nullopt;
  return a;
}

bool is_principal(const Geometry& g, const ModularCut& c) { return principal_generator(g, c).has_value(); }

std::vector<Flat> cut_flats(const Geometry& g, const ModularCut& c) {
  std::vector<Flat> out;
  for (Mask m : c.members) out.push_back(g.labels_of(m));
  std::sort(out.begin(), out.end());
  return out;
}

PointCut cut_of_point(const Geometry& g, std::string_view p) {
  const Mask pbit = g.mask_of(p);
  const Mask rest_mask = g.full() & ~pbit;
  PointCut out{subgeometry(g, rest_mask), {}};
  for (int r = 0; r <= out.rest.rank(); ++r) {
    for (Mask x : out.rest.level(r)) {
      if (g.closure(bits::expand(x, rest_mask)) & pbit) out.cut.members.push_back(x);
    }
  }
  std::sort(out.cut.members.begin(), out.cut.members.end());
  return out;
}

std::vector<Mask> collar(const Geometry& g, const ModularCut& c) {
  std::vector<Mask> out;
  for (int r = 0; r <= g.rank(); ++r) {
    for (Mask a : g.level(r)) {
      if (c.contains(a)) continue;
      bool covered = false;
      if (r + 1 <= g.rank()) {
        for (Mask b : g.level(r + 1)) {
          if (bits::subset(a, b) && c.contains(b)) {
            covered = true;
            break;
          }
        }
      }
      if (!covered) out.push_back(a);
    }
  }
  return out;
}

namespace {

Geometry extend_unchecked(const Geometry& g, const ModularCut& c, const PointLabel& p) {
  if (p.empty()) throw Error(ErrorKind::Validation, "empty point label");
  if (g.index_of(p)) throw Error(ErrorKind::DuplicateLabel, p);
  if (g.size() + 1 > kMaxPoints) throw Error(ErrorKind::TooLarge, "point limit reached");

  std::vector<PointLabel> pts = g.points();
  const auto pos = static_cast<std::size_t>(std::lower_bound(pts.begin(), pts.end(), p) - pts.begin());
  pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(pos), p);
  const Mask pbit = bits::bit(pos);

  std::vector<std::vector<Mask>> levels(static_cast<std::size_t>(g.rank()) + 1);
  for (int r = 0; r <= g.rank(); ++r) {
    for (Mask x : g.level(r)) {
      levels[static_cast<std::size_t>(r)].push_back(bits::insert_zero(x, pos) | (c.contains(x) ? pbit : 0));
    }
  }
  for (Mask a : collar(g, c)) {
    const int r = g.rank_of(a);
    levels[static_cast<std::size_t>(r) + 1].push_back(bits::insert_zero(a, pos) | pbit);
  }
  return Geometry::from_masks(std::move(pts), std::move(levels));
}

}  // namespace

Geometry one_point_extension(const Geometry& g, const ModularCut& c, const PointLabel& p) {
  validate_cut(g, c);
  Geometry out = extend_unchecked(g, c, p);

  const LatticeReport report = is_geometric_lattice(out);
  if (!report.ok()) throw Error(ErrorKind::Validation, "extension post-check failed: " + report.str());
  const PointCut back = cut_of_point(out, p);
  if (!(back.rest == g) || !(back.cut == c)) {
    throw Error(ErrorKind::Validation, "extension post-check failed: cut of the new point differs");
  }
  return out;
}

Geometry principal_extension_unchecked(const Geometry& g, Mask a, const PointLabel& p) {
  return extend_unchecked(g, principal_cut(g, a), p);
}

Geometry principal_extension(const Geometry& g, Mask a, const PointLabel& p) {
  return one_point_extension(g, principal_cut(g, a), p);
}

Geometry principal_extension(const Geometry& g, const Flat& a, const PointLabel& p) {
  return principal_extension(g, g.mask_of(a), p);
}

std::vector<ModularCut> enumerate_modular_cuts(const Geometry& g) {
  if (g.size() > 8) throw Error(ErrorKind::TooLarge, "modular cut enumeration is limited to 8 points");
  std::vector<Mask> candidates;
  for (int r = 2; r <= g.rank(); ++r) {
    candidates.insert(candidates.end(), g.level(r).begin(), g.level(r).end());
  }
  std::set<std::vector<Mask>> seen;
  std::vector<std::vector<Mask>> frontier;
  if (g.rank() >= 2) {
    std::vector<Mask> top{g.full()};
    seen.insert(top);
    frontier.push_back(top);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Mask>> next;
    for (const auto& cut : frontier) {
      for (Mask x : candidates) {
        if (std::binary_search(cut.begin(), cut.end(), x)) continue;
        std::set<Mask> grown(cut.begin(), cut.end());
        grown.insert(x);
        if (!complete_cut(g, grown)) continue;
        std::vector<Mask> v(grown.begin(), grown.end());
        if (seen.insert(v).second) next.push_back(std::move(v));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ModularCut> out;
  for (const auto& v : seen) {
    ModularCut c{v};
    validate_cut(g, c);
    out.push_back(std::move(c));
  }
  return out;
}

PointLabel suggest_label(const Geometry& g, std::string_view prefix) {
  for (std::size_t i = 0;; ++i) {
    PointLabel candidate = std::string(prefix) + std::to_string(i);
    if (!g.index_of(candidate)) return candidate;
  }
}

}  // namespace geolat
