#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "vbraid/braiding.hpp"
#include "vbraid/certify.hpp"
#include "vbraid/derivations.hpp"
#include "vbraid/diagrams.hpp"
#include "vbraid/maps.hpp"
#include "vbraid/presentations.hpp"
#include "vbraid/rewrite.hpp"

namespace vbraid::cli {

namespace {

using json = nlohmann::ordered_json;

// Raised for failed verifications so the exit code can be set in one place.
struct VerificationFailure {};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

json matrix(const std::vector<std::vector<int>>& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

void print_matrix(std::ostream& out, const std::vector<std::vector<int>>& m) {
  for (const auto& row : m) {
    out << ' ';
    for (int x : row) out << ' ' << x;
    out << '\n';
  }
}

struct WordArgs {
  std::string kind = "VB";
  int n = 0;
};

void add_word_args(CLI::App* cmd, WordArgs& a) {
  cmd->add_option("--kind,-k", a.kind, "group kind: B S VB FV WB UB FU")->capture_default_str();
  cmd->add_option("-n,--strands", a.n, "number of strands")->required();
}

std::string kind_list() { return "B, S, VB, FV, WB, UB, FU"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Virtual braid toolkit: words, presentations, derivations, diagrams and braiding"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  // word
  auto* word = app.add_subcommand("word", "word algebra");
  word->require_subcommand(1);
  WordArgs wa;
  std::vector<std::string> words;
  for (auto [name, help] : {std::pair{"reduce", "free reduction"},
                            std::pair{"perm", "permutation image"},
                            std::pair{"compose", "product of two words"},
                            std::pair{"invert", "inverse word"}}) {
    auto* sub = word->add_subcommand(name, help);
    add_word_args(sub, wa);
    sub->add_option("words", words, "word(s) such as \"s1 v2 s1^-1\"")->required();
  }

  // present
  auto* present = app.add_subcommand("present", "print a presentation");
  std::string present_kind;
  int present_n = 0;
  bool reduced = false, single_welded = false, as_json = false;
  present->add_option("kind", present_kind, "group kind")->required();
  present->add_option("n", present_n, "number of strands")->required();
  auto* red_flag = present->add_flag("--reduced", reduced, "reduced presentation");
  present->add_flag("--single-welded", single_welded, "reduced over v1 and the braiding generators (WB)")
      ->excludes(red_flag);
  present->add_flag("--json", as_json, "JSON output");

  // verify
  auto* verify = app.add_subcommand("verify", "mechanical checks");
  verify->require_subcommand(1);
  int verify_n = 6;
  auto* v_lemmas = verify->add_subcommand("lemmas", "replay every built-in derivation script");
  v_lemmas->add_option("--n", verify_n, "largest strand count")->capture_default_str();
  auto* v_ident = verify->add_subcommand("identities", "palindrome and staircase identities");
  v_ident->add_option("--n", verify_n, "largest strand count")->capture_default_str();
  auto* v_red = verify->add_subcommand("reduction", "certify a reduced presentation");
  std::string red_kind;
  int red_n = 0;
  bool red_derived = false, red_verbose = false;
  std::size_t max_states = SearchBudget{}.max_states;
  v_red->add_option("kind", red_kind, "group kind")->required();
  v_red->add_option("n", red_n, "number of strands")->required();
  v_red->add_flag("--derived", red_derived, "also certify the derived detour relations");
  v_red->add_flag("--verbose", red_verbose, "print every proof");
  v_red->add_option("--max-states", max_states, "bounded search budget")->capture_default_str();
  auto* v_maps = verify->add_subcommand("maps", "arrow well-definedness and path commutativity");
  int samples = 500;
  unsigned seed = 1;
  v_maps->add_option("--n", verify_n, "strand count")->capture_default_str();
  v_maps->add_option("--samples", samples, "random words per source kind")->capture_default_str();
  v_maps->add_option("--seed", seed, "random seed")->capture_default_str();

  // braid
  auto* braid = app.add_subcommand("braid", "braid a diagram");
  std::string diagram_file, category_name;
  bool under = false;
  braid->add_option("diagram", diagram_file, "diagram file")->required();
  braid->add_option("--category", category_name, "category (default: the file's)");
  braid->add_flag("--under", under, "route pulled strands under the diagram (classical)");

  // closure
  auto* clos = app.add_subcommand("closure", "closure of a braid word as a diagram");
  std::string clos_word, out_file;
  WordArgs ca;
  clos->add_option("word", clos_word, "braid word")->required();
  add_word_args(clos, ca);
  clos->add_option("-o,--output", out_file, "output file (default stdout)");

  // invariants
  auto* inv = app.add_subcommand("invariants", "components, linking and virtual parity");
  inv->add_option("diagram", diagram_file, "diagram file")->required();
  inv->add_flag("--json", as_json, "JSON output");

  // gauss
  auto* gauss = app.add_subcommand("gauss", "Gauss code of a diagram, or parse a code");
  std::string gauss_text;
  auto* g_file = gauss->add_option("diagram", diagram_file, "diagram file");
  gauss->add_option("--parse", gauss_text, "parse and check a code")->excludes(g_file);
  gauss->add_flag("--json", as_json, "JSON output");

  // map
  auto* map = app.add_subcommand("map", "apply an arrow or a path of arrows");
  std::string map_word_text, from_kind, to_kind;
  std::vector<std::string> via;
  int map_n = 0;
  map->add_option("word", map_word_text, "word (read from stdin when absent)");
  map->add_option("--from", from_kind, "source kind")->required();
  map->add_option("--to", to_kind, "target kind")->required();
  map->add_option("--via", via, "intermediate kinds")->delimiter(',');
  map->add_option("-n,--strands", map_n, "number of strands")->required();

  // render
  auto* render = app.add_subcommand("render", "draw a diagram or the closure of a word");
  std::string render_input, format = "ascii";
  WordArgs ra;
  render->add_option("input", render_input, "diagram file or braid word")->required();
  render->add_option("--format", format, "ascii or svg")
      ->check(CLI::IsMember({"ascii", "svg"}))
      ->capture_default_str();
  render->add_option("-o,--output", out_file, "output file (default stdout)");
  render->add_option("--kind,-k", ra.kind, "kind when the input is a word")->capture_default_str();
  render->add_option("-n,--strands", ra.n, "strands when the input is a word");

  // script
  auto* script = app.add_subcommand("script", "derivation scripts");
  script->require_subcommand(1);
  auto* s_run = script->add_subcommand("run", "replay a script file with a per-step trace");
  std::string script_file;
  s_run->add_option("file", script_file, "script file")->required();
  auto* s_emit = script->add_subcommand("emit", "print built-in scripts");
  int emit_n = 4;
  std::string emit_name;
  s_emit->add_option("--n", emit_n, "strand count")->capture_default_str();
  s_emit->add_option("--name", emit_name, "only the script with this name");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    auto kind_of = [](const std::string& s) { return parse_group_kind(s); };

    if (word->parsed()) {
      const GroupKind k = kind_of(wa.kind);
      std::vector<BraidWord> ws;
      for (const auto& t : words) ws.push_back(parse_word(t, k, wa.n));
      auto* sub = word->get_subcommands().front();
      const std::string what = sub->get_name();
      auto need = [&](std::size_t count) {
        if (ws.size() != count) {
          throw ParseError("word " + what + " takes " + std::to_string(count) + " word(s)");
        }
      };
      if (what == "reduce") {
        need(1);
        out << format_word(free_reduce(ws[0])) << '\n';
      } else if (what == "perm") {
        need(1);
        const auto p = permutation_image(ws[0]);
        out << p.to_string() << '\n' << "cycles: " << p.cycle_count() << '\n';
      } else if (what == "compose") {
        need(2);
        out << format_word(compose(ws[0], ws[1])) << '\n';
      } else {
        need(1);
        out << format_word(inverse(ws[0])) << '\n';
      }
      return kOk;
    }

    if (present->parsed()) {
      const GroupKind k = kind_of(present_kind);
      Presentation p = single_welded ? reduced_presentation(k, present_n, Flavor::ReducedSingleWelded)
                       : reduced     ? reduced_presentation(k, present_n)
                                     : full_presentation(k, present_n);
      if (as_json) {
        json j;
        j["schema"] = 1;
        j["kind"] = to_string(p.kind);
        j["n"] = p.n;
        j["flavor"] = to_string(p.flavor);
        json gens = json::array();
        for (auto g : p.generators) gens.push_back(format_generator(g));
        j["generators"] = gens;
        json rels = json::array();
        for (const auto& r : p.relators) {
          rels.push_back({{"id", r.id}, {"lhs", format_word(r.lhs)}, {"rhs", format_word(r.rhs)}});
        }
        j["relators"] = rels;
        out << j.dump(2) << '\n';
      } else {
        if (single_welded) {
          for (int t = 2; t < present_n; ++t) {
            out << "# v" << t << " = " << format_word(expand_v_welded(t, present_n)) << '\n';
          }
        }
        out << format_presentation(p);
      }
      return kOk;
    }

    if (verify->parsed()) {
      if (v_lemmas->parsed()) {
        bool ok = true;
        std::size_t total = 0;
        for (int n = 2; n <= verify_n; ++n) {
          std::size_t passed = 0;
          const auto scripts = builtin_scripts(n);
          for (const auto& s : scripts) {
            const auto r = verify_script(s);
            if (r.ok) {
              ++passed;
            } else {
              ok = false;
              err << s.name << ": " << r.failure << '\n';
            }
          }
          total += scripts.size();
          out << "n=" << n << ": " << passed << "/" << scripts.size() << " scripts replayed\n";
        }
        out << (ok ? "PASS" : "FAIL") << ": " << total << " scripts\n";
        if (!ok) throw VerificationFailure{};
        return kOk;
      }
      if (v_ident->parsed()) {
        const auto r = verify_identities(verify_n);
        for (const auto& f : r.failures) err << f << '\n';
        out << (r.pass() ? "PASS" : "FAIL") << ": " << r.checked - r.failures.size() << "/"
            << r.checked << " identity instances\n";
        if (!r.pass()) throw VerificationFailure{};
        return kOk;
      }
      if (v_red->parsed()) {
        const GroupKind k = kind_of(red_kind);
        SearchBudget budget;
        budget.max_states = max_states;
        std::vector<CertificationReport> reports{certify_reduction(k, red_n, budget)};
        if (red_derived) reports.push_back(certify_derived(k, red_n, budget));
        bool ok = true;
        for (const auto& r : reports) {
          out << format_report(r);
          if (red_verbose) {
            for (const auto& e : r.entries) {
              if (e.proof) out << format_script(*e.proof);
            }
          }
          ok = ok && r.pass();
        }
        if (!ok) throw VerificationFailure{};
        return kOk;
      }
      if (v_maps->parsed()) {
        bool ok = true;
        for (const auto& a : arrow_catalog()) {
          const auto r = check_well_defined(a, verify_n);
          out << format_report(r);
          ok = ok && r.pass();
        }
        std::mt19937 rng(seed);
        std::size_t compared = 0, failed = 0;
        for (auto source : kAllKinds) {
          for (auto target : kAllKinds) {
            const auto paths = catalog_paths(source, target);
            if (paths.size() < 2) continue;
            for (int s = 0; s < samples; ++s) {
              const BraidWord w = random_word(source, verify_n, 1 + rng() % 12, rng);
              const BraidWord first = compose_path(w, paths.front());
              for (std::size_t p = 1; p < paths.size(); ++p) {
                const BraidWord other = compose_path(w, paths[p]);
                ++compared;
                bool same = free_reduce(first) == free_reduce(other);
                if (!same && target == GroupKind::S) {
                  same = permutation_image(first) == permutation_image(other);
                }
                if (!same) {
                  SearchBudget small;
                  small.max_states = 20000;
                  same = bounded_equivalence(first, other,
                                             RelationSet::named(target, verify_n, {"full"}), small)
                             .status == EquivalenceStatus::Equivalent;
                }
                if (!same) {
                  ++failed;
                  err << "paths disagree on " << format_word(w) << '\n';
                }
              }
            }
          }
        }
        out << "commutativity: " << compared - failed << "/" << compared << " path pairs agree\n";
        ok = ok && failed == 0;
        out << (ok ? "PASS" : "FAIL") << '\n';
        if (!ok) throw VerificationFailure{};
        return kOk;
      }
    }

    if (braid->parsed()) {
      const MorseDiagram d = parse_diagram(read_file(diagram_file));
      const Category c = category_name.empty() ? d.category : parse_category(category_name);
      const BraidWord b = to_braid(d, c, under ? Routing::Under : Routing::Over);
      out << format_word(b) << '\n' << "strands: " << b.strands() << '\n';
      return kOk;
    }

    if (clos->parsed()) {
      const BraidWord w = parse_word(clos_word, kind_of(ca.kind), ca.n);
      write_output(out_file, format_diagram(closure(w)), out);
      return kOk;
    }

    if (inv->parsed()) {
      const MorseDiagram d = parse_diagram(read_file(diagram_file));
      const auto r = invariants(d);
      if (as_json) {
        json j;
        j["schema"] = 1;
        j["components"] = r.component_count;
        j["lk"] = matrix(r.lk);
        j["vparity"] = matrix(r.vparity);
        out << j.dump(2) << '\n';
      } else {
        out << "components: " << r.component_count << '\n' << "lk:\n";
        print_matrix(out, r.lk);
        out << "vparity:\n";
        print_matrix(out, r.vparity);
      }
      return kOk;
    }

    if (gauss->parsed()) {
      GaussCode g;
      if (!gauss_text.empty()) {
        g = parse_gauss(gauss_text);
      } else if (!diagram_file.empty()) {
        g = gauss_code(parse_diagram(read_file(diagram_file)));
      } else {
        throw ParseError("gauss needs a diagram file or --parse <code>");
      }
      if (as_json) {
        json j;
        j["schema"] = 1;
        j["code"] = format_gauss(g);
        j["components"] = g.components.size();
        j["crossings"] = crossing_count(g);
        out << j.dump(2) << '\n';
      } else {
        out << format_gauss(g) << '\n'
            << "components: " << g.components.size() << '\n'
            << "crossings: " << crossing_count(g) << '\n';
      }
      return kOk;
    }

    if (map->parsed()) {
      if (map_word_text.empty()) {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        map_word_text = ss.str();
      }
      const GroupKind from = kind_of(from_kind), to = kind_of(to_kind);
      std::vector<GroupArrow> path;
      if (!via.empty()) {
        GroupKind at = from;
        for (const auto& v : via) {
          path.push_back({at, kind_of(v)});
          at = path.back().target;
        }
        path.push_back({at, to});
      } else {
        const auto paths = catalog_paths(from, to);
        if (paths.empty()) {
          throw ParseError("no arrow path from " + from_kind + " to " + to_kind);
        }
        path = paths.front();
      }
      for (const auto& a : path) {
        if (!in_catalog(a)) throw ParseError("no arrow " + format_arrow(a) + " in the catalog");
      }
      const BraidWord w = parse_word(map_word_text, from, map_n);
      const BraidWord m = compose_path(w, path);
      out << format_word(m) << '\n';
      if (to == GroupKind::S) out << "permutation: " << permutation_image(m).to_string() << '\n';
      return kOk;
    }

    if (render->parsed()) {
      MorseDiagram d;
      if (std::filesystem::is_regular_file(render_input)) {
        d = parse_diagram(read_file(render_input));
      } else {
        if (ra.n <= 0) {
          throw ParseError("'" + render_input + "' is not a file; give -n to read it as a word");
        }
        d = closure(parse_word(render_input, kind_of(ra.kind), ra.n));
      }
      write_output(out_file, format == "svg" ? render_svg(d) : render_ascii(d), out);
      return kOk;
    }

    if (script->parsed()) {
      if (s_run->parsed()) {
        const DerivationScript s = parse_script(read_file(script_file));
        const auto r = verify_script(s);
        out << format_replay(s, r);
        if (!r.ok) {
          err << "script " << s.name << " failed: " << r.failure << '\n';
          throw VerificationFailure{};
        }
        return kOk;
      }
      bool any = false;
      for (const auto& s : builtin_scripts(emit_n)) {
        if (!emit_name.empty() && s.name != emit_name) continue;
        if (any) out << '\n';
        out << format_script(s);
        any = true;
      }
      if (!any) throw ParseError("no built-in script matches at n=" + std::to_string(emit_n));
      return kOk;
    }
  } catch (const VerificationFailure&) {
    return kVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no command (kinds: " << kind_list() << ")\n";
  return kInputError;
}

}  // namespace vbraid::cli
