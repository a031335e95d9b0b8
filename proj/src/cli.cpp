#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "geolat/amalgam.hpp"
#include "geolat/cli_io.hpp"
#include "geolat/extension.hpp"
#include "geolat/gallery.hpp"
#include "geolat/strong.hpp"
#include "geolat/verify.hpp"

namespace geolat {

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

// Errors that mean the inputs are fine but the relation asked about fails.
bool is_relation_failure(ErrorKind k) {
  return k == ErrorKind::PreconditionFailed || k == ErrorKind::NotStrong || k == ErrorKind::NotAWitness ||
         k == ErrorKind::Overlap || k == ErrorKind::WitnessMismatch;
}

class Session {
 public:
  Session(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string read_text(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw Error(ErrorKind::Validation, "standard input can be read only once");
      stdin_used_ = true;
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }
    std::ifstream f(path);
    if (!f) throw Error(ErrorKind::Validation, "cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  Geometry geometry(const std::string& path) { return read_geometry(read_text(path)); }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool stdin_used_ = false;
};

// "A,B,E" names labels explicitly; "ABE" is read letter by letter unless it
// is itself a point label.
LabelSet parse_set(const Geometry& g, const std::string& text) {
  std::vector<PointLabel> items;
  if (text.find(',') != std::string::npos) {
    std::stringstream s(text);
    std::string part;
    while (std::getline(s, part, ',')) {
      if (!part.empty()) items.push_back(part);
    }
  } else if (g.index_of(text)) {
    items.push_back(text);
  } else {
    for (char c : text) items.emplace_back(1, c);
  }
  const LabelSet out(items);
  g.mask_of(out);
  return out;
}

std::string witness_line(const PointLabel& p, const LabelSet& base) { return p + " / base " + base.str(); }

Construction construction_from(const Geometry& base, const Witness& w) {
  Construction c{base, {}};
  for (std::size_t i = 0; i < w.order.size(); ++i) c.steps.push_back({w.order[i], w.bases[i]});
  return c;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite geometric lattices: extensions, strong embeddings and amalgams"};
  app.require_subcommand(1);
  Session session(in, out);
  int status = kHolds;

  std::string file, file_b, file_c, under, point, name, part, out_path, suite;
  std::vector<std::string> cut;
  std::optional<int> gallery_arg;
  bool enumerate = false, canonical = false, fix_points = false, full = false;
  std::size_t limit = kWitnessSearchLimit;
  std::uint32_t seed = verify::Options{}.seed;

  auto* check = app.add_subcommand("check", "Validate a geometry document");
  check->add_option("file", file, "Geometry document, - for stdin")->required();

  auto* extend = app.add_subcommand("extend", "Add one point under a flat or a modular cut");
  extend->add_option("file", file, "Geometry document")->required();
  auto* under_opt = extend->add_option("--under", under, "Flat generator of a principal cut");
  auto* cut_opt = extend->add_option("--cut", cut, "Generators of the modular cut");
  under_opt->excludes(cut_opt);
  extend->add_option("--point", point, "New point label")->required();
  extend->add_flag("--full", full, "Also list every flat");

  auto* amalgamate = app.add_subcommand("amalgamate", "Amalgamate two planes over a common meet-subgeometry");
  auto* free_amalgam_cmd = app.add_subcommand("free-amalgam", "Free amalgam of two strong extensions");
  auto* star_amalgam = app.add_subcommand("star-amalgam", "Free amalgam of planes by explicit union");
  for (auto* sub : {amalgamate, free_amalgam_cmd, star_amalgam}) {
    sub->add_option("a", file, "First factor")->required();
    sub->add_option("b", file_b, "Second factor")->required();
    sub->add_option("c", file_c, "Common base")->required();
  }

  auto* witness = app.add_subcommand("witness", "Find an ordering building B from A by principal extensions");
  witness->add_option("a", file, "Smaller geometry")->required();
  witness->add_option("b", file_b, "Larger geometry")->required();
  witness->add_flag("--enumerate", enumerate, "List every witness ordering");
  witness->add_flag("--canonical", canonical, "Print the canonical witness");
  witness->add_option("--limit", limit, "Largest number of new points searched");

  auto* gallery_cmd = app.add_subcommand("gallery", "Print a named example structure");
  gallery_cmd->add_option("name", name, "Entry name")->required();
  gallery_cmd->add_option("arg", gallery_arg, "Size argument for fg and smoothness_stage");
  gallery_cmd->add_option("--part", part, "Part to print for entries with several parts");
  gallery_cmd->add_option("--out", out_path, "Write to this file instead of standard output");
  gallery_cmd->add_flag("--full", full, "Also list every flat");

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram as a DOT graph");
  hasse->add_option("file", file, "Geometry document")->required();

  auto* iso = app.add_subcommand("iso", "Decide isomorphism");
  iso->add_option("a", file, "First geometry")->required();
  iso->add_option("b", file_b, "Second geometry")->required();
  iso->add_flag("--fix-points", fix_points, "Only the identity on labels is allowed");

  auto* verify_cmd = app.add_subcommand("verify-paper", "Run a named acceptance suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required();
  verify_cmd->add_option("--seed", seed, "Seed for randomized criteria");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  auto emit = [&](const std::string& text) {
    if (out_path.empty()) {
      out << text;
      return;
    }
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorKind::Validation, "cannot write " + out_path);
    f << text;
  };

  try {
    if (check->parsed()) {
      const std::string text = session.read_text(file);
      try {
        const Geometry g = read_geometry(text);
        out << "geometric lattice: rank " << g.rank() << ", " << g.size() << " points, " << g.flat_count()
            << " flats\n";
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::Parse) throw;
        out << "not a geometric lattice: " << e.what() << "\n";
        status = kFails;
      }
    } else if (extend->parsed()) {
      const Geometry g = session.geometry(file);
      if (under_opt->count() == 0 && cut_opt->count() == 0) {
        throw Error(ErrorKind::Validation, "extend needs --under or --cut");
      }
      Geometry h;
      if (under_opt->count() > 0) {
        h = principal_extension(g, closure(g, parse_set(g, under)), point);
      } else {
        std::vector<Flat> gens;
        for (const auto& c : cut) gens.push_back(closure(g, parse_set(g, c)));
        h = one_point_extension(g, generated_cut(g, gens), point);
      }
      out << write_geometry(h, full);
    } else if (amalgamate->parsed() || free_amalgam_cmd->parsed() || star_amalgam->parsed()) {
      const Geometry a = session.geometry(file);
      const Geometry b = session.geometry(file_b);
      const Geometry c = session.geometry(file_c);
      if (amalgamate->parsed()) {
        out << write_geometry(amalgamate_planes(a, b, c));
      } else if (star_amalgam->parsed()) {
        out << write_geometry(star_free_amalgam(a, b, c));
      } else {
        const auto wa = find_strong_witness(c, a);
        const auto wb = find_strong_witness(c, b);
        if (!wa || !wb) {
          out << "no free amalgam: " << (wa ? "B" : "A") << " is not a strong extension of C\n";
          status = kFails;
        } else {
          out << write_geometry(free_amalgam(a, b, c, construction_from(c, *wa), construction_from(c, *wb)));
        }
      }
    } else if (witness->parsed()) {
      const Geometry a = session.geometry(file);
      const Geometry b = session.geometry(file_b);
      if (enumerate) {
        std::size_t count = 0;
        all_witness_orderings(
            a, b,
            [&](const Witness& w) {
              std::string line;
              for (std::size_t i = 0; i < w.order.size(); ++i) {
                line += (i ? "  " : "") + w.order[i] + "{" + w.bases[i].str() + "}";
              }
              out << line << "\n";
              ++count;
              return true;
            },
            limit);
        out << count << " witness orderings\n";
        if (count == 0) status = kFails;
      } else {
        const auto w = find_strong_witness(a, b, limit);
        if (!w) {
          out << "no witness\n";
          status = kFails;
        } else if (canonical) {
          const CanonicalWitness cw = canonicalize(a, b, *w);
          for (std::size_t i = 0; i < cw.order.size(); ++i) {
            out << witness_line(cw.order[i], cw.bases[i]) << " / " << base_rule_name(cw.rules[i]) << "\n";
          }
        } else {
          for (std::size_t i = 0; i < w->order.size(); ++i) out << witness_line(w->order[i], w->bases[i]) << "\n";
        }
      }
    } else if (gallery_cmd->parsed()) {
      const gallery::Item item = gallery::build(name, gallery_arg);
      bool full_out = full;
      if (part.empty()) {
        if (item.parts.size() != 1) {
          std::string names;
          for (const auto& [n, g] : item.parts) names += " " + n;
          throw Error(ErrorKind::Validation, name + " has several parts; choose one with --part:" + names);
        }
        emit(write_geometry(item.parts.front().second, full_out));
      } else {
        emit(write_geometry(item.part(part), full_out));
      }
    } else if (hasse->parsed()) {
      out << export_hasse_dot(session.geometry(file));
    } else if (iso->parsed()) {
      const Geometry a = session.geometry(file);
      const Geometry b = session.geometry(file_b);
      const auto m = is_isomorphic(a, b, fix_points);
      if (!m) {
        out << "not isomorphic\n";
        status = kFails;
      } else {
        out << "isomorphic\n";
        for (const auto& [from, to] : *m) out << from << " -> " << to << "\n";
      }
    } else if (verify_cmd->parsed()) {
      const auto s = verify::find_suite(suite);
      if (!s) {
        std::string names;
        for (const auto& x : verify::suites()) names += " " + x.name;
        throw Error(ErrorKind::Validation, "unknown suite " + suite + "; suites:" + names);
      }
      verify::Options options;
      options.seed = seed;
      bool all = true;
      for (int id : s->criteria) {
        const auto r = verify::run_criterion(id, options);
        out << verify::format_result(r) << "\n";
        all = all && r.passed;
      }
      if (!all) status = kFails;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return is_relation_failure(e.kind()) ? kFails : kUsage;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kUsage;
  }
  return status;
}

}  // namespace geolat
