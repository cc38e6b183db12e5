// sdmap: strongly involutive self-dual maps from the command line.
// Exit codes: 0 ok, 1 domain or file error, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "sdmap/coxeter.hpp"
#include "sdmap/families.hpp"
#include "sdmap/identify.hpp"
#include "sdmap/io.hpp"
#include "sdmap/map.hpp"
#include "sdmap/orbifold.hpp"
#include "sdmap/reduction.hpp"
#include "sdmap/svg.hpp"
#include "sdmap/symmetry.hpp"

using namespace sdmap;

namespace {

Family cli_family(const std::string& s) {
  if (s != "wheel" && s != "multiwheel" && s != "hyperwheel")
    throw CLI::ValidationError("--family", "expected wheel, multiwheel or hyperwheel");
  return parse_family(s);
}

std::string squash(std::string s) {
  for (const auto& [from, to] : std::vector<std::pair<std::string, std::string>>{
           {"⊲", "<"}, {"◁", "<"}, {"⊳", ">"}, {"▷", ">"}, {"⁺", "+"}, {"^+", "+"}}) {
    for (auto p = s.find(from); p != std::string::npos; p = s.find(from)) s.replace(p, from.size(), to);
  }
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  return s;
}

/// Accepts "aut < dual" or "dual > aut", with q either substituted or left
/// as the letter.
PairingInstance find_pairing(const std::string& name, int q) {
  const std::string want = squash(name);
  for (const auto& r : pairing_catalog()) {
    const int qq = r.infinite ? q : 0;
    if (r.infinite && q < 1) continue;
    PairingInstance inst;
    try {
      inst = instantiate(r, qq);
    } catch (const std::exception&) {
      continue;
    }
    const std::string aut = inst.aut_symbol.to_string(), dual = inst.dual_symbol.to_string();
    for (const auto& cand : {aut + "<" + dual, dual + ">" + aut, r.aut_pattern + "<" + r.dual_pattern,
                             r.dual_pattern + ">" + r.aut_pattern})
      if (squash(cand) == want) return inst;
  }
  throw Error(Errc::NoCatalogMatch, "no catalog pairing named '" + name + "' for q=" + std::to_string(q));
}

void print_bool(const char* key, bool b) { std::cout << key << ": " << (b ? "true" : "false") << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"strongly involutive self-dual maps"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "build a family member");
  std::string family;
  int q = 0, l = 1;
  bool loose = false;
  std::string out, involution_out, doodle_out;
  gen->add_option("--family", family, "wheel, multiwheel or hyperwheel")->required();
  gen->add_option("--q", q)->required();
  gen->add_option("--l", l);
  gen->add_flag("--non-strict", loose, "allow parameters without a strong involution");
  gen->add_option("--out", out, "map JSON")->required();
  gen->add_option("--involution", involution_out, "write the family involution");
  gen->add_option("--doodle", doodle_out, "write the family doodle");

  // verify
  auto* ver = app.add_subcommand("verify", "check polyhedrality, self-duality and strong involutions");
  std::string in, involution_in;
  ver->add_option("--in", in)->required();
  ver->add_option("--involution", involution_in, "check this assignment instead of searching");

  // classify
  auto* cls = app.add_subcommand("classify", "the 24 self-dual pairings and the antipodal map");
  int q_min = 3, q_max = 12;
  std::string json_out;
  cls->add_option("--q-min", q_min);
  cls->add_option("--q-max", q_max);
  cls->add_option("--json", json_out);

  // identify
  auto* idn = app.add_subcommand("identify", "name the self-dual pairing of a map");
  idn->add_option("--in", in)->required();

  // expand
  auto* exp = app.add_subcommand("expand", "expand a doodle by the Dual group");
  std::string doodle_in, pairing, prefix = "expanded";
  exp->add_option("--doodle", doodle_in)->required();
  exp->add_option("--pairing", pairing)->required();
  exp->add_option("--q", q);
  exp->add_option("--out-prefix", prefix, "writes PREFIX_squares.json, PREFIX_primal.json, PREFIX_dual.json");

  // reduce
  auto* red = app.add_subcommand("reduce", "delete-contract down to an odd wheel");
  std::string trace_out;
  red->add_option("--in", in)->required();
  red->add_option("--trace", trace_out);

  // render
  auto* ren = app.add_subcommand("render", "SVG figure");
  ren->add_option("--in", in, "map JSON (Tutte layout)");
  ren->add_option("--family", family, "family member drawn on the sphere");
  ren->add_option("--q", q);
  ren->add_option("--l", l);
  ren->add_option("--out", out)->required();

  // experiment
  auto* xp = app.add_subcommand("experiment", "pairings along reductions");
  std::vector<int> qs, ls{1};
  xp->add_option("--family", family)->required();
  xp->add_option("--q", qs)->required();
  xp->add_option("--l", ls);
  xp->add_option("--json", json_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const Family f = cli_family(family);
      FamilyParams p{q, l, !loose};
      auto lm = build_family(f, p);
      write_json_file(out, map_to_json(lm.map));
      if (!involution_out.empty()) {
        auto tau = family_involution(lm);
        write_json_file(involution_out, assignment_to_json(lm.map, tau));
      }
      if (!doodle_out.empty()) write_json_file(doodle_out, doodle_to_json(doodle_for_family(f, p)));
      std::cout << family_name(f) << " q=" << q << " l=" << l << ": V=" << lm.map.vertex_count()
                << " E=" << lm.map.edge_count() << " F=" << lm.map.face_count() << "\n";
    } else if (*ver) {
      auto g = map_from_json(read_json_file(in));
      auto rep = validate_polyhedral(g);
      std::cout << "V=" << g.vertex_count() << " E=" << g.edge_count() << " F=" << g.face_count() << "\n";
      print_bool("polyhedral", rep.polyhedral());
      if (!rep.polyhedral()) return 0;
      std::cout << "aut: " << enumerate_automorphisms(g).size() << "\n";
      const bool self_dual = !enumerate_dualities(g).empty();
      print_bool("self-dual", self_dual);
      if (!self_dual) return 0;
      if (!involution_in.empty()) {
        auto tau = assignment_from_json(g, read_json_file(involution_in));
        auto r = verify_strong_involution(g, tau);
        print_bool("duality", r.is_duality);
        print_bool("condition (i)", r.cond_i);
        print_bool("condition (ii)", r.cond_ii);
        print_bool("strongly involutive", r.strong());
      } else {
        auto found = find_strong_involutions(g);
        std::cout << "strong involutions: " << found.size() << "\n";
        print_bool("strongly involutive", !found.empty());
      }
    } else if (*cls) {
      auto rows = classify_all_pairings(q_min, q_max);
      std::cout << classification_table(rows);
      if (!json_out.empty()) write_json_file(json_out, classification_to_json(rows));
    } else if (*idn) {
      auto g = map_from_json(read_json_file(in));
      auto m = identify_pairing(g);
      std::cout << "pairing: " << m.name() << "\n";
      print_bool("antipodal", m.antipodal());
    } else if (*exp) {
      auto region = region_catalog(find_pairing(pairing, q));
      auto ex = expand_doodle(doodle_from_json(read_json_file(doodle_in)), region);
      write_json_file(prefix + "_squares.json", map_to_json(ex.squares));
      write_json_file(prefix + "_primal.json", map_to_json(ex.primal));
      write_json_file(prefix + "_dual.json", map_to_json(ex.dual));
      std::cout << "primal V=" << ex.primal.vertex_count() << " E=" << ex.primal.edge_count()
                << " F=" << ex.primal.face_count() << "\n";
    } else if (*red) {
      auto t = reduce_to_wheel(map_from_json(read_json_file(in)));
      std::cout << "start: " << t.start_pairing << "\n";
      for (const auto& s : t.steps)
        std::cout << "contract " << s.contracted.first << "-" << s.contracted.second << ", delete " << s.deleted.first
                  << "-" << s.deleted.second << ": " << s.pairing << "\n";
      std::cout << "terminal: W" << t.terminal.params.q << " after " << t.steps.size() << " steps\n";
      if (!trace_out.empty()) write_json_file(trace_out, trace_to_json(t));
    } else if (*ren) {
      if (in.empty() == family.empty()) throw CLI::ValidationError("render", "give exactly one of --in, --family");
      std::string svg;
      if (!family.empty()) {
        const Family f = cli_family(family);
        FamilyParams p{q, l, true};
        if (f == Family::Wheel) p = {q, 1, true};
        auto fam = f == Family::Wheel ? Family::MultiWheel : f;
        svg = render_expansion_svg(expand_doodle(doodle_for_family(fam, p), region_for_family(fam, p)));
      } else {
        svg = render_map_svg(map_from_json(read_json_file(in)));
      }
      write_text_file(out, svg);
    } else if (*xp) {
      const Family f = cli_family(family);
      std::vector<std::pair<Family, FamilyParams>> corpus;
      for (int qq : qs)
        for (int ll : ls) corpus.push_back({f, {qq, ll, true}});
      auto rows = pairing_trace_experiment(corpus);
      Json j = Json::array();
      for (const auto& r : rows) {
        std::cout << family_name(r.family) << " q=" << r.params.q << " l=" << r.params.l << " -> W"
                  << r.terminal_q << ":";
        for (const auto& s : r.pairings) std::cout << "  " << s;
        std::cout << "\n";
        j.push_back({{"family", family_name(r.family)},
                     {"q", r.params.q},
                     {"l", r.params.l},
                     {"terminal_wheel", r.terminal_q},
                     {"pairings", r.pairings}});
      }
      if (!json_out.empty()) write_json_file(json_out, j);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
