// Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion; exit
// status is the number of failures.

#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sdmap/coxeter.hpp"
#include "sdmap/families.hpp"
#include "sdmap/identify.hpp"
#include "sdmap/orbifold.hpp"
#include "sdmap/reduction.hpp"
#include "sdmap/symmetry.hpp"
#include "test_maps.hpp"

using namespace sdmap;

namespace {

struct Criterion {
  std::ostringstream notes;
  int checks = 0, failures = 0;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++failures;
      if (failures <= 5) notes << "\n    " << what;
    }
  }
};

bool run(int n, const std::string& title, const std::function<void(Criterion&)>& body) {
  Criterion c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  const bool ok = c.failures == 0 && c.checks > 0;
  std::cout << (ok ? "PASS" : "FAIL") << "  " << n << ". " << title << " (" << c.checks - c.failures << "/"
            << c.checks << ")" << c.notes.str() << std::endl;
  return ok;
}

// Reference classification: dual pattern, a in Dual, clause, a in Aut, clause,
// antipodal.
struct TableRow {
  const char* dual;
  bool in_dual;
  int clause_dual;
  bool in_aut;
  int clause_aut;
  bool bold;
};

const TableRow kTable[24] = {
    {"[2,q]", true, 3, false, 1, true},     {"[2,q]+", false, 4, false, 2, false},
    {"[2+,2q]", true, 5, false, 1, true},   {"[2,q+]", true, 5, false, 2, true},
    {"[2+,2q+]", true, 6, false, 2, true},  {"[2]", false, 1, false, 1, false},
    {"[2]", false, 1, false, 2, false},     {"[4]", false, 1, false, 1, false},
    {"[2]+", false, 2, false, 1, false},    {"[4]+", false, 2, false, 2, false},
    {"[2,2]", true, 3, false, 4, true},     {"[2,4]", true, 3, false, 5, true},
    {"[2,2]", true, 3, true, 5, false},     {"[2,4]", true, 3, true, 3, false},
    {"[2,4]+", false, 4, false, 4, false},  {"[2+,4]", false, 5, false, 4, false},
    {"[2+,4]", false, 5, false, 6, false},  {"[2,4+]", true, 5, false, 6, true},
    {"[2,2+]", true, 5, true, 6, false},    {"[2,4+]", true, 5, true, 5, false},
    {"[2,2+]", true, 5, false, 1, true},    {"[3,4]", true, 3, false, 3, true},
    {"[3,4]+", false, 4, false, 4, false},  {"[3+,4]", true, 5, false, 4, true},
};

void criterion1(Criterion& c) {
  auto rows = classify_all_pairings(3, 12);
  c.expect(rows.size() == 24, "expected 24 rows");
  int antipodal = 0;
  for (std::size_t i = 0; i < rows.size() && i < 24; ++i) {
    const auto& r = rows[i];
    const auto& t = kTable[i];
    const std::string tag = "row " + std::to_string(i + 1) + " " + r.record.table_name();
    c.expect(r.record.dual_pattern == t.dual, tag + ": dual group");
    c.expect(r.alpha_in_dual == t.in_dual && r.clause_dual == t.clause_dual, tag + ": Dual column");
    c.expect(r.alpha_in_aut == t.in_aut && r.clause_aut == t.clause_aut, tag + ": Aut column");
    c.expect(r.antipodal == t.bold, tag + ": antipodal mark");
    c.expect(r.matrices_agree, tag + ": matrix groups disagree");
    antipodal += r.antipodal;
  }
  c.expect(antipodal == 10, "antipodal rows: " + std::to_string(antipodal));
}

void criterion2(Criterion& c) {
  std::set<std::string> symbols;
  for (const auto& r : pairing_catalog()) {
    if (!r.infinite) {
      auto inst = instantiate(r);
      symbols.insert(inst.dual_symbol.to_string());
      symbols.insert(inst.aut_symbol.to_string());
      continue;
    }
    for (int q = 1; q <= 12; ++q) {
      symbols.insert(CoxeterSymbol::parse(detail::substitute_q(r.dual_pattern, q)).to_string());
      symbols.insert(CoxeterSymbol::parse(detail::substitute_q(r.aut_pattern, q)).to_string());
    }
  }
  int disagreements = 0;
  for (const auto& s : symbols) {
    auto sym = CoxeterSymbol::parse(s);
    const bool matrix = build_group(sym).contains(-Mat3::Identity());
    if (matrix != lemma1_predicate(sym).contains) {
      ++disagreements;
      c.expect(false, s + ": matrices say " + (matrix ? "yes" : "no"));
    } else {
      c.expect(true, s);
    }
  }
  c.expect(symbols.size() >= 60, "only " + std::to_string(symbols.size()) + " symbols");
  c.expect(disagreements == 0, std::to_string(disagreements) + " disagreements");
}

Mat3 power(const Mat3& m, int k) {
  Mat3 r = Mat3::Identity();
  for (int i = 0; i < k; ++i) r = r * m;
  return r;
}

void criterion3(Criterion& c) {
  const Mat3 I = Mat3::Identity();
  for (int q = 1; q <= 12; ++q) {
    const auto sq = std::to_string(q);
    c.expect(build_group(CoxeterSymbol::dihedral(q)).order() == 2 * q, "|[" + sq + "]|");
    c.expect(build_group(CoxeterSymbol::polyhedral(2, q)).order() == 4 * q, "|[2," + sq + "]|");
    auto step = build_group(CoxeterSymbol::polyhedral(2, 2 * q, true, true));
    c.expect(step.order() == 2 * q, "|[2+," + std::to_string(2 * q) + "+]|");
    bool cyclic = false;
    for (const auto& g : step.elements()) cyclic = cyclic || matrix_order(g) == 2 * q;
    c.expect(cyclic, "[2+,2q+] cyclic for q=" + sq);

    auto d = base_reflections(CoxeterSymbol::dihedral(q));
    c.expect(approx_equal(d[0] * d[0], I) && approx_equal(d[1] * d[1], I) &&
                 approx_equal(power(d[0] * d[1], q), I),
             "[q] relations q=" + sq);
  }
  c.expect(build_group(CoxeterSymbol::polyhedral(3, 3)).order() == 24, "|[3,3]|");
  c.expect(build_group(CoxeterSymbol::polyhedral(3, 4)).order() == 48, "|[3,4]|");
  c.expect(build_group(CoxeterSymbol::polyhedral(3, 4, true)).order() == 24, "|[3+,4]|");

  std::vector<std::pair<int, int>> pq{{3, 3}, {3, 4}, {3, 5}};
  for (int q = 1; q <= 12; ++q) pq.emplace_back(2, q);
  for (auto [p, q] : pq) {
    auto g = base_reflections(CoxeterSymbol::polyhedral(p, q));
    const std::string tag = "[" + std::to_string(p) + "," + std::to_string(q) + "] relations";
    c.expect(approx_equal(g[0] * g[0], I) && approx_equal(g[1] * g[1], I) && approx_equal(g[2] * g[2], I), tag);
    c.expect(approx_equal(power(g[0] * g[1], p), I) && approx_equal(power(g[1] * g[2], q), I) &&
                 approx_equal(power(g[0] * g[2], 2), I),
             tag);
  }
  // the step in [2+,q]: rho = g2 g3, gamma = g1
  for (int q = 2; q <= 12; q += 2) {
    auto g = base_reflections(CoxeterSymbol::polyhedral(2, q));
    const Mat3 step = g[1] * g[2] * g[0];
    c.expect(approx_equal(power(step, q), I), "step order q=" + std::to_string(q));
    if ((q / 2) % 2 == 1) c.expect(approx_equal(power(step, q / 2), -I), "step^(q/2) = -I for q=" + std::to_string(q));
  }
  // [3+,4]: rho = g1 g2, gamma = g3, (rho gamma)^3 = -I
  auto o = base_reflections(CoxeterSymbol::polyhedral(3, 4));
  c.expect(approx_equal(power(o[0] * o[1] * o[2], 3), -I), "[3+,4] step cubed");
}

void criterion4(Criterion& c) {
  auto check = [&](const LabeledMap& lm, int v, int e) {
    const std::string tag = family_name(lm.family) + " q=" + std::to_string(lm.params.q) +
                            " l=" + std::to_string(lm.params.l);
    c.expect(lm.map.vertex_count() == v && lm.map.edge_count() == e, tag + ": counts");
    c.expect(validate_polyhedral(lm.map).polyhedral(), tag + ": polyhedral");
    auto rep = verify_strong_involution(lm.map, family_involution(lm));
    c.expect(rep.cond_i && rep.cond_ii && rep.is_duality, tag + ": involution");
  };
  for (int q : {4, 6, 8})
    for (int l : {1, 2, 3}) check(build_multi_hyperwheel({q, l}), 2 * q * l + 1, 4 * q * l);
  for (int q : {3, 5, 7})
    for (int l : {1, 2, 3}) check(build_multi_wheel({q, l}), q * l + 1, 2 * q * l);
  c.expect(find_strong_involutions(build_wheel(4).map).empty(), "W4 has a strong involution");
  c.expect(find_strong_involutions(build_wheel(6).map).empty(), "W6 has a strong involution");
}

void criterion5(Criterion& c) {
  auto o41 = build_multi_hyperwheel({4, 1}).map;
  auto go = dual_group(o41);
  c.expect(go.aut_count == 8, "|Aut(O_4^1)| = " + std::to_string(go.aut_count));
  c.expect(go.order() == 16, "|Dual(O_4^1)| = " + std::to_string(go.order()));
  c.expect(identify_pairing(o41).name() == "[4] < [2,4]", "O_4^1 pairing " + identify_pairing(o41).name());
  auto k4 = testing::tetrahedron();
  auto gk = dual_group(k4);
  c.expect(gk.aut_count == 24, "|Aut(K4)|");
  c.expect(gk.order() == 48, "|Dual(K4)|");
  c.expect(identify_pairing(k4).name() == "[3,3] < [3,4]", "K4 pairing " + identify_pairing(k4).name());
}

void criterion6(Criterion& c) {
  auto check = [&](Family f, int q, int l) {
    const std::string tag = family_name(f) + " q=" + std::to_string(q) + " l=" + std::to_string(l);
    FamilyParams p{q, l, true};
    auto ex = expand_doodle(doodle_for_family(f, p), region_for_family(f, p));
    c.expect(canonical_code(ex.primal) == canonical_code(build_family(f, p).map), tag + ": primal code");
    bool quads = true;
    for (FaceId fc = 0; fc < ex.squares.face_count(); ++fc) {
      auto vs = ex.squares.face_vertices(fc);
      if (vs.size() != 4) {
        quads = false;
        continue;
      }
      // (v a f b): colors alternate vertex/crossing with one primal and one dual
      int start = ex.colors[vs[0]] == PointColor::Crossing ? 1 : 0;
      const PointColor x = ex.colors[vs[start]], y = ex.colors[vs[start + 2]];
      quads = quads && ex.colors[vs[(start + 1) % 4]] == PointColor::Crossing &&
              ex.colors[vs[(start + 3) % 4]] == PointColor::Crossing &&
              ((x == PointColor::Primal && y == PointColor::Dual) || (x == PointColor::Dual && y == PointColor::Primal));
    }
    c.expect(quads, tag + ": square pattern");
  };
  for (int q : {4, 6, 8})
    for (int l : {1, 2, 3}) check(Family::HyperWheel, q, l);
  for (int q : {3, 5, 7})
    for (int l : {1, 2, 3}) check(Family::MultiWheel, q, l);
}

void criterion7(Criterion& c) {
  auto check = [&](const SphericalMap& g, const std::string& tag) {
    auto t = reduce_to_wheel(g);
    int v = g.vertex_count(), e = g.edge_count();
    bool counts = true, strong = true;
    for (const auto& m : t.maps) {
      counts = counts && m.vertex_count() == v - 1 && m.edge_count() == e - 2;
      auto si = find_strong_involutions(m);
      strong = strong && !si.empty() && verify_strong_involution(m, si.front().vertex_to_face).strong() &&
               validate_polyhedral(m).polyhedral();
      v = m.vertex_count();
      e = m.edge_count();
    }
    c.expect(counts, tag + ": counts");
    c.expect(strong, tag + ": intermediates");
    c.expect(odd_wheel_size(t.terminal.map).has_value(), tag + ": terminal not an odd wheel");
    return t;
  };
  for (int q : {4, 6, 8})
    for (int l : {1, 2, 3}) check(build_multi_hyperwheel({q, l}).map, "O q=" + std::to_string(q) + " l=" + std::to_string(l));
  for (int q : {3, 5, 7})
    for (int l : {1, 2, 3}) check(build_multi_wheel({q, l}).map, "P q=" + std::to_string(q) + " l=" + std::to_string(l));
  for (int q : {3, 5, 7, 9}) {
    auto t = check(build_wheel(q).map, "W" + std::to_string(q));
    c.expect(t.steps.empty(), "W" + std::to_string(q) + " takes steps");
  }
}

void criterion8(Criterion& c) {
  auto maps = testing::corpus();
  c.expect(maps.size() >= 20, "corpus size");
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const auto& g = maps[i];
    const std::string tag = "map " + std::to_string(i);
    c.expect(g.vertex_count() - g.edge_count() + g.face_count() == 2, tag + ": Euler");
    auto dd = dual_map(dual_map(g));
    c.expect(is_isomorphic(dd, g, OrientationClass::PreservingOnly).has_value(), tag + ": double dual");
  }
  for (auto cls : {OrientationClass::Full, OrientationClass::PreservingOnly}) {
    std::vector<CanonicalCode> codes;
    for (const auto& g : maps) codes.push_back(canonical_code(g, cls));
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = 0; j < maps.size(); ++j)
        c.expect((codes[i] == codes[j]) == is_isomorphic(maps[i], maps[j], cls).has_value(),
                 "code/isomorphism mismatch " + std::to_string(i) + "," + std::to_string(j));
  }
}

}  // namespace

int main() {
  int failed = 0;
  failed += !run(1, "classification table", criterion1);
  failed += !run(2, "lemma predicate against matrix groups", criterion2);
  failed += !run(3, "group orders and relations", criterion3);
  failed += !run(4, "family verification", criterion4);
  failed += !run(5, "symmetry counts and pairings", criterion5);
  failed += !run(6, "doodle round trip", criterion6);
  failed += !run(7, "reduction to odd wheels", criterion7);
  failed += !run(8, "map core properties", criterion8);
  std::cout << (failed ? "FAILED " : "all ") << (failed ? std::to_string(failed) + " criteria" : "criteria pass")
            << std::endl;
  return failed;
}
