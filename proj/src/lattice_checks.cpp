#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "geolat/lattice_core.hpp"

namespace geolat {

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::RankBound: return "rank bound";
    case Condition::Bounded: return "bounded";
    case Condition::Graded: return "graded";
    case Condition::MeetClosed: return "meet-closed";
    case Condition::PointLattice: return "point lattice";
    case Condition::Semimodular: return "semimodular";
    case Condition::Simple: return "simple";
  }
  return "?";
}

bool LatticeReport::has(Condition c) const {
  return std::any_of(violations.begin(), violations.end(), [c](const Violation& v) { return v.condition == c; });
}

std::string LatticeReport::str() const {
  if (violations.empty()) return "ok";
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << "; ";
    out << condition_name(violations[i].condition) << ": " << violations[i].detail;
  }
  return out.str();
}

namespace {

struct Collector {
  LatticeReport report;
  std::unordered_map<int, int> seen;

  void add(Condition c, const std::string& detail) {
    // A couple of examples per condition is enough to diagnose.
    if (seen[static_cast<int>(c)]++ < 2) report.violations.push_back({c, detail});
  }
};

std::vector<std::pair<Mask, int>> all_flats(const Geometry& g) {
  std::vector<std::pair<Mask, int>> out;
  for (int r = 0; r <= g.rank(); ++r) {
    for (Mask m : g.level(r)) out.emplace_back(m, r);
  }
  return out;
}

}  // namespace

LatticeReport is_geometric_lattice(const Geometry& g) {
  Collector c;
  const int n = g.rank();
  const Mask top = g.full();
  auto name = [&g](Mask m) { return g.labels_of(m).str(); };

  if (n > kMaxRank) c.add(Condition::RankBound, "rank " + std::to_string(n) + " exceeds " + std::to_string(kMaxRank));

  if (g.level(0) != std::vector<Mask>{0}) c.add(Condition::Bounded, "rank-0 level is not {0}");
  if (g.level(n) != std::vector<Mask>{top}) c.add(Condition::Bounded, "top level is not the full point set");
  if (n == 0 && g.size() != 0) c.add(Condition::Bounded, "rank-0 geometry with points");

  const auto flats = all_flats(g);
  if (flats.size() != g.flat_count()) c.add(Condition::Graded, "a flat appears on two levels");
  for (const auto& [m, r] : flats) {
    if (!bits::subset(m, top)) c.add(Condition::Bounded, "flat " + name(m) + " leaves the point set");
  }

  if (n >= 1) {
    std::vector<Mask> singles;
    for (std::size_t i = 0; i < g.size(); ++i) singles.push_back(bits::bit(i));
    if (g.level(1) != singles) c.add(Condition::Simple, "rank-1 flats are not exactly the singletons");
  }

  bool meet_closed = true;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const auto [x, rx] = flats[i];
      const auto [y, ry] = flats[j];
      if (!g.is_flat(x & y)) {
        meet_closed = false;
        c.add(Condition::MeetClosed, name(x) + " ∩ " + name(y) + " is not a flat");
      }
      const Mask lo = (x & y) == x ? x : y;
      const Mask hi = lo == x ? y : x;
      if ((x & y) != lo || lo == hi) continue;
      const int rlo = lo == x ? rx : ry;
      const int rhi = lo == x ? ry : rx;
      if (rhi <= rlo) {
        c.add(Condition::Graded, name(lo) + " ⊂ " + name(hi) + " without rank increase");
      } else if (rhi - rlo >= 2) {
        bool between = false;
        for (Mask z : g.level(rlo + 1)) {
          if (bits::subset(lo, z) && bits::subset(z, hi) && z != hi) {
            between = true;
            break;
          }
        }
        if (!between) c.add(Condition::Graded, name(hi) + " covers " + name(lo) + " across a rank gap");
      }
    }
  }

  if (n >= 1) {
    for (const auto& [x, rx] : flats) {
      Mask atoms = 0;
      for (Mask a : g.level(1)) {
        if (bits::subset(a, x)) atoms |= a;
      }
      if (g.closure(atoms) != x) c.add(Condition::PointLattice, name(x) + " is not the join of its points");
    }
  }

  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const auto [a, ra] = flats[i];
      const auto [b, rb] = flats[j];
      const int rj = g.set_rank(a | b);
      const int rm = g.set_rank(a & b);
      if (rj + rm > ra + rb) {
        c.add(Condition::Semimodular, "r(" + name(a) + "∨" + name(b) + ") + r(" + name(a) + "∧" + name(b) +
                                          ") = " + std::to_string(rj + rm) + " > " + std::to_string(ra + rb));
        continue;
      }
      if (!meet_closed) continue;
      // Covering form: a∧b ⋖ a implies b ⋖ a∨b, in both orders.
      const int rmeet = g.set_rank(a & b);
      for (int side = 0; side < 2; ++side) {
        const int r_self = side == 0 ? ra : rb;
        const int r_other = side == 0 ? rb : ra;
        if (rmeet + 1 == r_self && rj != r_other + 1) {
          c.add(Condition::Semimodular, "covering condition fails for " + name(a) + ", " + name(b));
        }
      }
    }
  }
  return c.report;
}

bool is_semimodular(const Geometry& g) {
  const auto flats = all_flats(g);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const auto [a, ra] = flats[i];
      const auto [b, rb] = flats[j];
      if (g.set_rank(a | b) + g.set_rank(a & b) > ra + rb) return false;
    }
  }
  return true;
}

bool is_relatively_complemented(const Geometry& g) {
  const auto flats = all_flats(g);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      if (!g.is_flat(flats[i].first & flats[j].first)) return false;
    }
  }
  for (const auto& [a, ra] : flats) {
    for (const auto& [b, rb] : flats) {
      if (!bits::subset(a, b)) continue;
      for (const auto& [cc, rc] : flats) {
        if (!bits::subset(a, cc) || !bits::subset(cc, b)) continue;
        bool found = false;
        for (const auto& [d, rd] : flats) {
          if (!bits::subset(a, d) || !bits::subset(d, b)) continue;
          if ((cc & d) == a && g.closure(cc | d) == b) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

Geometry subgeometry(const Geometry& g, Mask n) {
  if (!bits::subset(n, g.full())) throw Error(ErrorKind::UnknownPoint, "generator set outside the geometry");
  std::vector<Mask> traces;
  for (int r = 0; r <= g.rank(); ++r) {
    for (Mask f : g.level(r)) traces.push_back(f & n);
  }
  std::sort(traces.begin(), traces.end());
  traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
  const int rank = g.set_rank(n);
  std::vector<std::vector<Mask>> levels(static_cast<std::size_t>(rank) + 1);
  for (Mask s : traces) {
    levels[static_cast<std::size_t>(g.set_rank(s))].push_back(bits::compress(s, n));
  }
  std::vector<PointLabel> pts;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (n & bits::bit(i)) pts.push_back(g.points()[i]);
  }
  return Geometry::from_masks(std::move(pts), std::move(levels));
}

Geometry subgeometry(const Geometry& g, const LabelSet& n) { return subgeometry(g, g.mask_of(n)); }

bool restriction_preserves_meets(const Geometry& g, Mask n) {
  std::vector<std::pair<Mask, Mask>> trace_closure;
  for (int r = 0; r <= g.rank(); ++r) {
    for (Mask f : g.level(r)) trace_closure.emplace_back(f & n, 0);
  }
  std::sort(trace_closure.begin(), trace_closure.end());
  trace_closure.erase(std::unique(trace_closure.begin(), trace_closure.end(),
                                  [](const auto& a, const auto& b) { return a.first == b.first; }),
                      trace_closure.end());
  for (auto& [s, cl] : trace_closure) cl = g.closure(s);
  auto closure_of = [&](Mask s) {
    auto it = std::lower_bound(trace_closure.begin(), trace_closure.end(), std::make_pair(s, Mask{0}),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    return it->second;
  };
  for (std::size_t i = 0; i < trace_closure.size(); ++i) {
    for (std::size_t j = i + 1; j < trace_closure.size(); ++j) {
      const Mask expected = closure_of(trace_closure[i].first & trace_closure[j].first);
      if ((trace_closure[i].second & trace_closure[j].second) != expected) return false;
    }
  }
  return true;
}

bool is_meet_subgeometry(const Geometry& sub, const Geometry& g) {
  Mask n = 0;
  for (const auto& p : sub.points()) {
    auto i = g.index_of(p);
    if (!i) throw Error(ErrorKind::NotASubgeometry, "point " + p + " is not in the ambient geometry");
    n |= bits::bit(*i);
  }
  if (!(subgeometry(g, n) == sub)) {
    throw Error(ErrorKind::NotASubgeometry, "not the subgeometry generated by its points");
  }
  return restriction_preserves_meets(g, n);
}

// ---- isomorphism ----

namespace {

std::vector<std::vector<int>> point_signatures(const Geometry& g) {
  std::vector<std::vector<int>> sig(g.size());
  const int width = static_cast<int>(g.size()) + 1;
  for (std::size_t p = 0; p < g.size(); ++p) {
    sig[p].assign(static_cast<std::size_t>((g.rank() + 1) * width), 0);
  }
  for (int r = 0; r <= g.rank(); ++r) {
    for (Mask f : g.level(r)) {
      for (std::size_t p = 0; p < g.size(); ++p) {
        if (f & bits::bit(p)) ++sig[p][static_cast<std::size_t>(r * width + bits::count(f))];
      }
    }
  }
  return sig;
}

}  // namespace

std::optional<std::map<PointLabel, PointLabel>> is_isomorphic(const Geometry& g1, const Geometry& g2,
                                                              bool fix_points) {
  if (fix_points) {
    if (!(g1 == g2)) return std::nullopt;
    std::map<PointLabel, PointLabel> id;
    for (const auto& p : g1.points()) id[p] = p;
    return id;
  }
  if (g1.size() != g2.size() || g1.rank() != g2.rank()) return std::nullopt;
  for (int r = 0; r <= g1.rank(); ++r) {
    if (g1.level(r).size() != g2.level(r).size()) return std::nullopt;
  }
  const auto s1 = point_signatures(g1);
  const auto s2 = point_signatures(g2);
  {
    auto a = s1, b = s2;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  const std::size_t n = g1.size();
  // Flats of g1 indexed by their highest point, checked once that point is placed.
  std::vector<std::vector<std::pair<Mask, int>>> by_last(n);
  for (int r = 0; r <= g1.rank(); ++r) {
    for (Mask f : g1.level(r)) {
      if (f == 0) continue;
      by_last[static_cast<std::size_t>(63 - __builtin_clzll(f))].emplace_back(f, r);
    }
  }
  std::vector<int> image(n, -1);
  Mask used = 0;
  auto map_mask = [&](Mask f) {
    Mask out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (f & bits::bit(i)) out |= bits::bit(static_cast<std::size_t>(image[i]));
    }
    return out;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t i) -> bool {
    if (i == n) return true;
    for (std::size_t j = 0; j < n; ++j) {
      if ((used & bits::bit(j)) || s1[i] != s2[j]) continue;
      image[i] = static_cast<int>(j);
      used |= bits::bit(j);
      bool ok = true;
      for (const auto& [f, r] : by_last[i]) {
        auto r2 = g2.rank_if_flat(map_mask(f));
        if (!r2 || *r2 != r) {
          ok = false;
          break;
        }
      }
      if (ok && place(i + 1)) return true;
      used &= ~bits::bit(j);
      image[i] = -1;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  std::map<PointLabel, PointLabel> out;
  for (std::size_t i = 0; i < n; ++i) out[g1.points()[i]] = g2.points()[static_cast<std::size_t>(image[i])];
  return out;
}

}  // namespace geolat
