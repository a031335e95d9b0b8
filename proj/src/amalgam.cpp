#include "geolat/amalgam.hpp"

#include <algorithm>
#include <map>

#include "geolat/gallery.hpp"

namespace geolat {

namespace {

Error precondition(const std::string& msg) { return Error(ErrorKind::PreconditionFailed, msg); }

LabelSet rename(const LabelSet& s, const PointLabel& from, const PointLabel& to) {
  std::vector<PointLabel> out;
  for (const auto& p : s) out.push_back(p == from ? to : p);
  return LabelSet(out);
}

Geometry relabelled(const Geometry& g, const PointLabel& from, const PointLabel& to) {
  std::vector<std::vector<Flat>> levels;
  for (const auto& level : g.levels()) {
    levels.emplace_back();
    for (Mask m : level) levels.back().push_back(rename(g.labels_of(m), from, to));
  }
  return Geometry::from_flats(rename(g.point_set(), from, to).items(), levels);
}

// All partial matchings between two index ranges, as lists of pairs.
void matchings(std::size_t left, std::size_t right, std::size_t i, std::vector<bool>& used,
               std::vector<std::pair<std::size_t, std::size_t>>& current,
               std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
  if (i == left) {
    out.push_back(current);
    return;
  }
  matchings(left, right, i + 1, used, current, out);
  for (std::size_t r = 0; r < right; ++r) {
    if (used[r]) continue;
    used[r] = true;
    current.push_back({i, r});
    matchings(left, right, i + 1, used, current, out);
    current.pop_back();
    used[r] = false;
  }
}

}  // namespace

AmalgamTrace amalgamate_planes_traced(const Geometry& a, const Geometry& b, const Geometry& c) {
  if (a.rank() != 3 || b.rank() != 3 || c.rank() != 3) {
    throw Error(ErrorKind::Rank, "amalgamation is implemented for planes only; rank 4 and above is an open problem");
  }
  const LabelSet pc = c.point_set();
  if (a.point_set().intersected(b.point_set()) != pc) {
    throw precondition("the factors share " + a.point_set().intersected(b.point_set()).str() + ", not " + pc.str());
  }
  if (!(subgeometry(a, pc) == c) || !(subgeometry(b, pc) == c)) {
    throw precondition("the base is not the subgeometry both factors induce on its points");
  }
  if (!is_meet_subgeometry(c, a) || !is_meet_subgeometry(c, b)) {
    throw precondition("the base is not a meet-subgeometry of both factors");
  }

  AmalgamTrace trace{a, {}};
  Mask placed = b.mask_of(pc);
  for (const PointLabel& p : b.point_set().minus(pc)) {
    const Mask pb = b.mask_of(p);
    const Geometry& d = trace.result;
    // Flats of the part of B built so far that p lies under, moved into D.
    std::vector<Mask> members;
    for (int r = 0; r <= b.rank(); ++r) {
      for (Mask x : b.level(r)) {
        const Mask trace_x = x & placed;
        if (b.closure(trace_x) != x || !(x & pb)) continue;
        members.push_back(d.closure(d.mask_of(b.labels_of(trace_x))));
      }
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    const ModularCut cut{members};
    try {
      validate_cut(d, cut);
    } catch (const Error& e) {
      throw Error(ErrorKind::Internal, "cut for " + p + " is not a modular cut: " + e.what());
    }
    trace.steps.push_back({p, d, cut_flats(d, cut)});
    trace.result = one_point_extension(d, cut, p);
    placed |= pb;
  }
  if (!is_meet_subgeometry(a, trace.result) || !is_meet_subgeometry(b, trace.result)) {
    throw Error(ErrorKind::Internal, "a factor is not a meet-subgeometry of the amalgam");
  }
  return trace;
}

Geometry amalgamate_planes(const Geometry& a, const Geometry& b, const Geometry& c) {
  return amalgamate_planes_traced(a, b, c).result;
}

LPrimeReport verify_lprime_failure() {
  const auto pair = gallery::amalgamation_failure_pair();
  LPrimeReport report;
  const Flat ac = LabelSet{"A", "C"}, be = LabelSet{"B", "E"};
  auto on_both = [&](const Geometry& g, const PointLabel& p) {
    return closure(g, ac).contains(p) && closure(g, be).contains(p);
  };
  report.a_has_both_incidences = on_both(pair.a, "P0");
  report.b_has_both_incidences = on_both(pair.b, "P1");
  report.shared_part_agrees = subgeometry(pair.a, pair.c.point_set()) == pair.c &&
                              subgeometry(pair.b, pair.c.point_set()) == pair.c;
  report.lines.push_back("first plane: A∨C = " + closure(pair.a, ac).str() + ", B∨E = " + closure(pair.a, be).str());
  report.lines.push_back("second plane: A∨C = " + closure(pair.b, ac).str() + ", B∨E = " + closure(pair.b, be).str());
  report.lines.push_back("a common plane keeping P0 and P1 apart would have two lines through both of them");

  // Candidate planes: lines sharing two common points are forced together,
  // lines with at most one common point may be matched in any partial way,
  // and P1 may or may not be identified with P0.
  for (bool identify : {false, true}) {
    LabelSet common = pair.c.point_set();
    if (identify) common = common.united(LabelSet{"P0"});
    const Geometry b = identify ? relabelled(pair.b, "P1", "P0") : pair.b;
    std::map<LabelSet, LabelSet> forced;
    std::vector<Flat> free_a, free_b;
    for (const Geometry* g : {&pair.a, &b}) {
      for (const Flat& l : flats_of_rank(*g, 2)) {
        const LabelSet t = l.intersected(common);
        if (t.size() >= 2) {
          forced[t] = forced[t].united(l);
        } else {
          (g == &pair.a ? free_a : free_b).push_back(l);
        }
      }
    }
    std::vector<bool> used(free_b.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> current;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> all;
    matchings(free_a.size(), free_b.size(), 0, used, current, all);
    for (const auto& m : all) {
      ++report.candidates;
      std::vector<Flat> lines;
      for (const auto& [t, l] : forced) lines.push_back(l);
      std::vector<bool> a_used(free_a.size(), false), b_used(free_b.size(), false);
      for (const auto& [i, j] : m) {
        lines.push_back(free_a[i].united(free_b[j]));
        a_used[i] = b_used[j] = true;
      }
      for (std::size_t i = 0; i < free_a.size(); ++i) {
        if (!a_used[i]) lines.push_back(free_a[i]);
      }
      for (std::size_t j = 0; j < free_b.size(); ++j) {
        if (!b_used[j]) lines.push_back(free_b[j]);
      }
      std::vector<Flat> nontrivial;
      for (const auto& l : lines) {
        if (l.size() >= 3) nontrivial.push_back(l);
      }
      Geometry d;
      try {
        d = Geometry::from_nontrivial_flats(3, pair.a.point_set().united(b.point_set()), {{2, nontrivial}});
      } catch (const Error&) {
        continue;
      }
      if (subgeometry(d, pair.a.point_set()) == pair.a && subgeometry(d, b.point_set()) == b) {
        ++report.valid_amalgams;
      }
    }
  }
  report.lines.push_back("candidates examined: " + std::to_string(report.candidates) +
                         ", valid common planes: " + std::to_string(report.valid_amalgams));
  return report;
}

IndependenceGadget independence_gadget(int n, const std::set<int>& j) {
  if (n < 0 || n > 4) throw Error(ErrorKind::TooLarge, "the gadget is limited to n ≤ 4");
  for (int i : j) {
    if (i < 0 || i >= n) throw Error(ErrorKind::IndexOutOfRange, "J must be a subset of 0.." + std::to_string(n - 1));
  }
  IndependenceGadget out;
  Geometry g = gallery::fg(3);
  for (int i = 0; i < n; ++i) {
    for (const char* side : {"P0_", "P1_"}) g = principal_extension(g, g.full(), side + std::to_string(i));
    out.a_lines.push_back(LabelSet{"P0_" + std::to_string(i), "P1_" + std::to_string(i)});
  }
  out.a = g;
  g = principal_extension(g, g.full(), "Q0");
  g = principal_extension(g, g.full(), "Q1");
  for (int i : j) {
    const Mask a_i = g.closure(g.mask_of(out.a_lines[static_cast<std::size_t>(i)]));
    const Mask b_line = g.closure(g.mask_of(LabelSet{"Q0", "Q1"}));
    g = one_point_extension(g, generated_cut(g, std::vector<Mask>{a_i, b_line}), "R" + std::to_string(i));
  }
  out.b = g;
  out.b_line = closure(g, LabelSet{"Q0", "Q1"});
  for (int i = 0; i < n; ++i) {
    const Flat m = meet(g, closure(g, out.a_lines[static_cast<std::size_t>(i)]), out.b_line);
    if (m.empty() == (j.count(i) > 0)) throw Error(ErrorKind::Internal, "incidence pattern differs from J");
  }
  return out;
}

}  // namespace geolat
