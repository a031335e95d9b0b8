#include "geolat/gallery.hpp"

#include <string>

namespace geolat::gallery {

namespace {

LabelSet L(std::string_view letters) { return LabelSet::chars(letters); }

Geometry plane(const LabelSet& points, const std::vector<Flat>& lines) {
  return Geometry::from_nontrivial_flats(3, points, {{2, lines}});
}

void cross_check(const Geometry& built, const Geometry& drawn, const std::string& what) {
  if (!(built == drawn)) throw Error(ErrorKind::Internal, what + ": construction and figure disagree");
}

std::string indexed(char letter, int i) { return std::string(1, letter) + std::to_string(i); }

}  // namespace

Geometry fg(int n) {
  if (n < 0 || n > kMaxRank) throw Error(ErrorKind::UnknownName, "fg takes n between 0 and 4");
  return free_geometry(L(std::string("ABCD").substr(0, static_cast<std::size_t>(n))));
}

Geometry af2() {
  Geometry g = principal_extension(fg(3), L("ABC"), "D");
  cross_check(g, plane(L("ABCD"), {}), "af2");
  return g;
}

FanoRecipe fano_recipe() {
  FanoRecipe r;
  r.stages.push_back(af2());
  const std::vector<std::pair<PointLabel, std::vector<Flat>>> steps = {
      {"E", {L("AB"), L("CD")}}, {"F", {L("AC"), L("BD")}}, {"G", {L("BC"), L("AD"), L("EF")}}};
  for (const auto& [p, gens] : steps) {
    const Geometry& g = r.stages.back();
    r.cuts.push_back(generated_cut(g, gens));
    r.stages.push_back(one_point_extension(g, r.cuts.back(), p));
  }
  return r;
}

Geometry fano() {
  Geometry g = fano_recipe().stages.back();
  cross_check(g, plane(L("ABCDEFG"), {L("ABE"), L("ACF"), L("BCG"), L("ADG"), L("BDF"), L("CDE"), L("EFG")}),
              "fano");
  return g;
}

AmalgamationFailure amalgamation_failure_pair() {
  AmalgamationFailure out;
  out.a = plane(LabelSet{"A", "B", "C", "D", "E", "F", "P0"},
                {L("ABD"), LabelSet{"A", "C", "P0"}, L("CDE"), LabelSet{"B", "E", "P0"}});
  out.b = plane(LabelSet{"A", "B", "C", "D", "E", "F", "P1"},
                {L("ABD"), LabelSet{"A", "C", "P1"}, L("CDE"), LabelSet{"B", "E", "P1"}, LabelSet{"D", "F", "P1"}});
  out.c = subgeometry(out.a, L("ABCDEF"));
  cross_check(subgeometry(out.b, L("ABCDEF")), out.c, "amalgamation_failure_pair");
  cross_check(out.c, plane(L("ABCDEF"), {L("ABD"), L("CDE")}), "amalgamation_failure_pair");
  return out;
}

SmoothnessStage smoothness_stage(int k) {
  if (k < 0 || k > 3) throw Error(ErrorKind::UnknownName, "smoothness_stage takes k between 0 and 3");
  SmoothnessStage s;
  s.b_construction.base = fg(3);
  auto& steps = s.b_construction.steps;
  std::vector<Flat> lines;
  std::vector<PointLabel> points = {"A", "B", "C", "D0"};
  std::vector<PointLabel> a_points = {"A", "B", "C"};
  steps.push_back({"D0", L("ABC")});
  for (int i = 0; i <= k; ++i) {
    const PointLabel d = indexed('D', i), e = indexed('E', i), h = indexed('H', i);
    const PointLabel next = indexed('D', i + 1), c = indexed('C', i), b = indexed('B', i);
    steps.push_back({e, L("ABC")});
    steps.push_back({h, L("ABC")});
    steps.push_back({next, LabelSet{d, e}});
    steps.push_back({c, LabelSet{e, h}});
    steps.push_back({b, LabelSet{h, next}});
    lines.push_back(LabelSet{d, e, next});
    lines.push_back(LabelSet{e, h, c});
    lines.push_back(LabelSet{h, next, b});
    points.insert(points.end(), {e, h, next, c, b});
    a_points.insert(a_points.end(), {c, b});
  }
  s.b = run_construction(s.b_construction);
  cross_check(s.b, plane(LabelSet(points), lines), "smoothness_stage");
  s.a = subgeometry(s.b, LabelSet(a_points));
  s.reverse_order.push_back(indexed('D', k + 1));
  for (int i = k; i >= 0; --i) {
    s.reverse_order.insert(s.reverse_order.end(), {indexed('H', i), indexed('E', i), indexed('D', i)});
  }
  return s;
}

Geometry lack_indep_plane() { return plane(L("ABCDEF"), {L("BCE"), L("DEF")}); }

CoherenceGadget coherence_failure_rank4() {
  CoherenceGadget g;
  g.c_construction = {fg(4),
                      {{"E", L("ABCD")},
                       {"F", L("ABCD")},
                       {"G", L("AEF")},
                       {"H", L("AEF")},
                       {"I", L("BEF")},
                       {"L", L("BEF")},
                       {"M", L("EF")},
                       {"N", L("EF")}}};
  g.c = run_construction(g.c_construction);
  g.a = subgeometry(g.c, L("ABCD"));
  cross_check(g.a, fg(4), "coherence_failure_rank4");
  g.b = subgeometry(g.c, L("ABCDGHILMN"));
  // The two planes and the line drawn in the figure.
  const Mask c_full = g.c.full();
  for (const char* flat : {"AEFGHMN", "BEFILMN", "EFMN"}) {
    const Mask m = g.c.mask_of(L(flat));
    if (!g.c.is_flat(m) || m == c_full) throw Error(ErrorKind::Internal, std::string("missing flat ") + flat);
  }
  return g;
}

Geometry meet_subgeo_figure() { return plane(L("ABCDE"), {L("BCE"), L("ADE")}); }

const Geometry& Item::part(std::string_view name) const {
  for (const auto& [n, g] : parts) {
    if (n == name) return g;
  }
  throw Error(ErrorKind::UnknownName, "no part named " + std::string(name));
}

std::vector<NameInfo> names() {
  return {{"fg", "n"},
          {"af2", std::nullopt},
          {"fano", std::nullopt},
          {"amalgamation_failure_pair", std::nullopt},
          {"smoothness_stage", "k"},
          {"lack_indep_plane", std::nullopt},
          {"coherence_failure_rank4", std::nullopt},
          {"meet_subgeo_figure", std::nullopt}};
}

Item build(std::string_view name, std::optional<int> arg) {
  bool known = false;
  for (const auto& info : names()) {
    if (info.name != name) continue;
    known = true;
    if (info.argument.has_value() != arg.has_value()) {
      throw Error(ErrorKind::UnknownName, std::string(name) + (info.argument ? " needs an argument" : " takes no argument"));
    }
  }
  if (!known) throw Error(ErrorKind::UnknownName, "no gallery entry named " + std::string(name));

  if (name == "fg") return {{{"main", fg(*arg)}}};
  if (name == "af2") return {{{"main", af2()}}};
  if (name == "fano") return {{{"main", fano()}}};
  if (name == "amalgamation_failure_pair") {
    auto p = amalgamation_failure_pair();
    return {{{"A", p.a}, {"B", p.b}, {"C", p.c}}};
  }
  if (name == "smoothness_stage") {
    auto s = smoothness_stage(*arg);
    return {{{"A", s.a}, {"B", s.b}}};
  }
  if (name == "lack_indep_plane") return {{{"main", lack_indep_plane()}}};
  if (name == "coherence_failure_rank4") {
    auto g = coherence_failure_rank4();
    return {{{"A", g.a}, {"B", g.b}, {"C", g.c}}};
  }
  return {{{"main", meet_subgeo_figure()}}};
}

}  // namespace geolat::gallery
