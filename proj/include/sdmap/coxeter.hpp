#pragma once

// Finite spherical reflection groups [q], [p,q] and their index-2
// subgroups as 3x3 matrix groups, plus the catalog of the 24 self-dual
// pairings Dual > Aut.
//
// Mirror frame. For [q]: b is the plane y = 0 and c(q) the vertical plane
// at angle pi/q from it. For [2,q]: gamma1 = a (the equator z = 0),
// gamma2 = b, gamma3 = c(q). For [3,3] and [3,4] the mirrors are planes of
// the cube centered at the origin. Subgroups:
//   [p,q]+  = <g1 g2, g2 g3>     [p+,q]  = <g1 g2, g3>
//   [p,q+]  = <g1, g2 g3>        [p+,q+] = <g1 g2 g3>

#include <Eigen/Dense>
#include <array>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "sdmap/error.hpp"

namespace sdmap {

struct CoxeterEntry {
  int n = 1;
  bool plus = false;
  friend bool operator==(const CoxeterEntry&, const CoxeterEntry&) = default;
};

struct CoxeterSymbol {
  std::vector<CoxeterEntry> entries;
  bool global_plus = false;

  friend bool operator==(const CoxeterSymbol&, const CoxeterSymbol&) = default;

  int rank() const { return static_cast<int>(entries.size()); }
  int p() const { return entries.front().n; }
  int q() const { return entries.back().n; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(entries[i].n);
      if (entries[i].plus) s += "+";
    }
    s += "]";
    if (global_plus) s += "+";
    return s;
  }

  static CoxeterSymbol dihedral(int q, bool plus = false) { return {{{q, false}}, plus}; }
  static CoxeterSymbol polyhedral(int p, int q, bool p_plus = false, bool q_plus = false,
                                  bool plus = false) {
    return {{{p, p_plus}, {q, q_plus}}, plus};
  }

  /// Accepts "[4]", "[2,4]+", "[2+,6]", "[2,4+]", "[2^+,4^+]" and the
  /// superscript-plus character.
  static CoxeterSymbol parse(const std::string& text);
};

/// Throws InvalidSymbol unless s is one of the finite groups handled here.
inline void validate_symbol(const CoxeterSymbol& s) {
  auto bad = [&](const std::string& why) { throw Error(Errc::InvalidSymbol, s.to_string() + ": " + why); };
  if (s.rank() < 1 || s.rank() > 2) bad("expected one or two entries");
  for (const auto& e : s.entries)
    if (e.n < 1) bad("entries must be positive");
  if (s.rank() == 1) {
    if (s.entries[0].plus) bad("use [q]+ for the rotation subgroup");
    return;
  }
  const int p = s.p(), q = s.q();
  const bool pp = s.entries[0].plus, qp = s.entries[1].plus;
  if (!(p == 2 || (p == 3 && (q == 3 || q == 4 || q == 5)))) bad("not a finite spherical group");
  if (s.global_plus && (pp || qp)) bad("mixed plus markers");
  if (pp && q % 2 != 0) bad("[p+,q] needs q even");
  if (qp && p % 2 != 0) bad("[p,q+] needs p even");
}

inline CoxeterSymbol CoxeterSymbol::parse(const std::string& raw) {
  std::string t;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    unsigned char ch = static_cast<unsigned char>(raw[i]);
    if (ch == ' ' || ch == '^') continue;
    // U+207A SUPERSCRIPT PLUS SIGN
    if (ch == 0xE2 && i + 2 < raw.size() && static_cast<unsigned char>(raw[i + 1]) == 0x81 &&
        static_cast<unsigned char>(raw[i + 2]) == 0xBA) {
      t += '+';
      i += 2;
      continue;
    }
    t += raw[i];
  }
  auto fail = [&] { throw Error(Errc::InvalidSymbol, "cannot parse '" + raw + "'"); };
  if (t.size() < 3 || t[0] != '[') fail();
  auto close = t.find(']');
  if (close == std::string::npos) fail();
  CoxeterSymbol s;
  std::string tail = t.substr(close + 1);
  if (tail == "+") s.global_plus = true;
  else if (!tail.empty()) fail();
  std::string body = t.substr(1, close - 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    auto comma = body.find(',', pos);
    std::string part = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    CoxeterEntry e;
    if (!part.empty() && part.back() == '+') {
      e.plus = true;
      part.pop_back();
    }
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos || part.size() > 6) fail();
    e.n = std::stoi(part);
    s.entries.push_back(e);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  validate_symbol(s);
  return s;
}

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;

struct Isometry {
  Mat3 matrix = Mat3::Identity();
  int det() const { return matrix.determinant() > 0 ? 1 : -1; }
};

inline Mat3 reflection(const Vec3& normal) {
  Vec3 n = normal.normalized();
  return Mat3::Identity() - 2 * n * n.transpose();
}

inline bool approx_equal(const Mat3& a, const Mat3& b, double tol = 1e-6) {
  return (a - b).cwiseAbs().maxCoeff() < tol;
}

/// Smallest k >= 1 with m^k = I (0 if none up to the cap).
inline int matrix_order(const Mat3& m, int cap = 1000) {
  Mat3 p = m;
  for (int k = 1; k <= cap; ++k) {
    if (approx_equal(p, Mat3::Identity())) return k;
    p = p * m;
  }
  return 0;
}

/// Whether the isometry fixes a point of the sphere: rotations fix their
/// axis, and among orientation-reversing ones exactly the reflections do.
inline bool fixes_sphere_point(const Mat3& m) {
  return m.determinant() > 0 || std::abs(m.trace() - 1) < 1e-6;
}

class IsometryGroup {
 public:
  static constexpr int kMaxOrder = 500;

  IsometryGroup() { add(Mat3::Identity()); }

  /// Closure of the generators.
  static IsometryGroup generate(const std::vector<Mat3>& gens) {
    IsometryGroup g;
    g.generators_ = gens;
    for (std::size_t i = 0; i < g.elements_.size(); ++i) {
      for (const auto& s : gens) {
        Mat3 m = g.elements_[i] * s;
        if (!g.contains(m)) {
          if (g.order() >= kMaxOrder)
            throw Error(Errc::ClosureOverflow, "group exceeds " + std::to_string(kMaxOrder) + " elements");
          g.add(m);
        }
      }
    }
    return g;
  }

  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Mat3>& elements() const { return elements_; }
  const std::vector<Mat3>& generators() const { return generators_; }
  std::optional<CoxeterSymbol> symbol;

  std::optional<int> index_of(const Mat3& m) const {
    auto it = index_.find(key(m));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const Mat3& m) const { return index_of(m).has_value(); }

  bool contains_all(const IsometryGroup& sub) const {
    for (const auto& m : sub.elements())
      if (!contains(m)) return false;
    return true;
  }

 private:
  using Key = std::array<long long, 9>;
  static Key key(const Mat3& m) {
    Key k{};
    for (int i = 0; i < 9; ++i) {
      k[i] = std::llround(m(i / 3, i % 3) * 1e6);
    }
    return k;
  }
  void add(const Mat3& m) {
    index_[key(m)] = order();
    elements_.push_back(m);
  }

  std::vector<Mat3> elements_;
  std::vector<Mat3> generators_;
  std::map<Key, int> index_;
};

namespace detail {

inline Vec3 c_normal(int n) {
  const double t = std::numbers::pi / n;
  return {-std::sin(t), std::cos(t), 0};
}

}  // namespace detail

/// The base reflections of the full group behind a symbol: two for [q]
/// (b, c(q)), three for [p,q].
inline std::vector<Mat3> base_reflections(const CoxeterSymbol& s) {
  validate_symbol(s);
  if (s.rank() == 1) return {reflection({0, 1, 0}), reflection(detail::c_normal(s.q()))};
  const int p = s.p(), q = s.q();
  if (p == 2) return {reflection({0, 0, 1}), reflection({0, 1, 0}), reflection(detail::c_normal(q))};
  if (q == 3) return {reflection({1, -1, 0}), reflection({0, 1, -1}), reflection({1, 1, 0})};
  if (q == 4) return {reflection({1, -1, 0}), reflection({0, 1, -1}), reflection({0, 0, 1})};
  // [3,5]: n1 = x, n3 = y, n2 at angles pi/p and pi/q from them
  const double cp = std::cos(std::numbers::pi / p), cq = std::cos(std::numbers::pi / q);
  return {reflection({1, 0, 0}), reflection({-cp, -cq, std::sqrt(1 - cp * cp - cq * cq)}),
          reflection({0, 1, 0})};
}

/// Subgroup generators in terms of the base reflections.
inline std::vector<Mat3> symbol_generators(const CoxeterSymbol& s) {
  auto r = base_reflections(s);
  if (s.rank() == 1) {
    if (s.global_plus) return {r[0] * r[1]};
    return r;
  }
  const bool pp = s.entries[0].plus, qp = s.entries[1].plus;
  if (s.global_plus) return {r[0] * r[1], r[1] * r[2]};
  if (pp && qp) return {r[0] * r[1] * r[2]};
  if (pp) return {r[0] * r[1], r[2]};
  if (qp) return {r[0], r[1] * r[2]};
  return r;
}

inline IsometryGroup build_group(const CoxeterSymbol& s) {
  auto g = IsometryGroup::generate(symbol_generators(s));
  g.symbol = s;
  return g;
}

inline bool contains_antipodal(const IsometryGroup& g) { return g.contains(-Mat3::Identity()); }

struct LemmaVerdict {
  bool contains = false;
  int clause = 0;
};

/// Closed-form decision whether -I lies in the group of a symbol.
inline LemmaVerdict lemma1_predicate(const CoxeterSymbol& s) {
  validate_symbol(s);
  // [1]+ is the trivial group and is cited under the first clause
  if (s.rank() == 1) return {false, s.global_plus && s.entries[0].n != 1 ? 2 : 1};
  const int p = s.p(), q = s.q();
  const bool pp = s.entries[0].plus, qp = s.entries[1].plus;
  const bool oh = p == 3 && q == 4;
  const bool two_odd_half = p == 2 && q % 2 == 0 && (q / 2) % 2 == 1;
  if (s.global_plus) return {false, 4};
  if (pp && qp) return {two_odd_half, 6};
  if (pp) return {oh || two_odd_half, 5};
  // [2,q+] contains a * (half-turn about the axis) when q is even
  if (qp) return {p == 2 && q % 2 == 0, 5};
  // the icosahedral group contains -I as well
  return {oh || (p == 3 && q == 5) || (p == 2 && q % 2 == 0), 3};
}

// ---------------------------------------------------------------------------
// Pairing catalog

enum class Parity { None, Even, Odd };

inline std::string parity_name(Parity p) {
  switch (p) {
    case Parity::None: return "";
    case Parity::Even: return "q even";
    case Parity::Odd: return "q odd";
  }
  return "";
}

inline bool parity_ok(Parity p, int q) {
  return p == Parity::None || (p == Parity::Even ? q % 2 == 0 : q % 2 != 0);
}

/// One of the 24 pairings. Infinite classes carry a parameter q; their
/// symbols are produced by dual_at / aut_at.
struct PairingRecord {
  int id = 0;
  std::string dual_pattern;  // e.g. "[2+,2q]"
  std::string aut_pattern;   // e.g. "[q]"
  bool infinite = false;
  Parity parity = Parity::None;  // the parameter range in which the row is antipodal

  std::string name() const {
    return aut_pattern + " < " + dual_pattern;
  }
  std::string table_name() const {
    std::string s = dual_pattern + " > " + aut_pattern;
    if (parity != Parity::None) s += ", " + parity_name(parity);
    return s;
  }
};

struct PairingInstance {
  PairingRecord record;
  int q = 0;  // 0 for special pairings
  CoxeterSymbol dual_symbol, aut_symbol;
  IsometryGroup dual_group, aut_group;

  std::string name() const { return aut_symbol.to_string() + " < " + dual_symbol.to_string(); }
  bool antipodal() const { return contains_antipodal(dual_group) && !contains_antipodal(aut_group); }
};

namespace detail {

inline std::string substitute_q(const std::string& pattern, int q) {
  std::string out;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != 'q') {
      out += pattern[i];
      continue;
    }
    // "2q" is read as a product
    if (!out.empty() && out.back() == '2' && (out.size() < 2 || !std::isdigit(out[out.size() - 2]))) {
      out.pop_back();
      out += std::to_string(2 * q);
    } else {
      out += std::to_string(q);
    }
  }
  return out;
}

}  // namespace detail

inline const std::vector<PairingRecord>& pairing_catalog() {
  static const std::vector<PairingRecord> cat = [] {
    std::vector<PairingRecord> c;
    auto add = [&](std::string d, std::string a, bool inf, Parity par) {
      c.push_back({static_cast<int>(c.size()) + 1, std::move(d), std::move(a), inf, par});
    };
    add("[2,q]", "[q]", true, Parity::Even);
    add("[2,q]+", "[q]+", true, Parity::None);
    add("[2+,2q]", "[q]", true, Parity::Odd);
    add("[2,q+]", "[q]+", true, Parity::Even);
    add("[2+,2q+]", "[q]+", true, Parity::Odd);
    for (auto [d, a] : std::vector<std::pair<std::string, std::string>>{
             {"[2]", "[1]"},           {"[2]", "[2]+"},          {"[4]", "[2]"},
             {"[2]+", "[1]+"},         {"[4]+", "[2]+"},         {"[2,2]", "[2,2]+"},
             {"[2,4]", "[2+,4]"},      {"[2,2]", "[2,2+]"},      {"[2,4]", "[2,2]"},
             {"[2,4]+", "[2,2]+"},     {"[2+,4]", "[2,2]+"},     {"[2+,4]", "[2+,4+]"},
             {"[2,4+]", "[2+,4+]"},    {"[2,2+]", "[2+,2+]"},    {"[2,4+]", "[2,2+]"},
             {"[2,2+]", "[1]"},        {"[3,4]", "[3,3]"},       {"[3,4]+", "[3,3]+"},
             {"[3+,4]", "[3,3]+"}})
      add(d, a, false, Parity::None);
    return c;
  }();
  return cat;
}

namespace detail {

/// Generators of the Aut subgroup, written in the generators of the Dual
/// group's symbol (g = symbol_generators(dual)).
inline std::vector<Mat3> aut_generators(const PairingRecord& r, int q, const CoxeterSymbol& dual,
                                        const CoxeterSymbol& aut) {
  auto g = symbol_generators(dual);
  const Mat3 I = Mat3::Identity();
  switch (r.id) {
    case 1: return {g[1], g[2]};                         // [2,q] = <a,b,c>: [q] = <b,c>
    case 2: return {g[1]};                               // [2,q]+ = <ab,bc>: [q]+ = <bc>
    case 3: return {g[1], g[0] * g[1] * g[0]};           // [2+,2q] = <ab,c>: mirrors c and (ab)c(ab)
    case 4: return {g[1]};                               // [2,q+] = <a,bc>: <bc>
    case 5: return {g[0] * g[0]};                        // [2+,2q+] = <abc>: squares
    case 6: return {g[0]};                               // [2] = <b,c>: <b>
    case 7: return {g[0] * g[1]};                        // [2]+ inside [2]
    case 8: return {g[0], g[1] * g[0] * g[1]};           // [4]: mirrors b and cbc at pi/2
    case 9: return {I};                                  // [1]+ inside [2]+
    case 10: return {g[0] * g[0]};                       // [2]+ inside [4]+
    case 11: return {g[0] * g[1], g[1] * g[2]};          // [2,2]+ = <ab,bc>
    case 12: return {g[0] * g[1], g[2]};                 // [2+,4] = <ab,c>
    case 13: return {g[0], g[1] * g[2]};                 // [2,2+] = <a,bc>
    case 14: return {g[0], g[1], g[2] * g[1] * g[2]};    // [2,2] = <a,b,cbc>
    case 15: return {g[0], g[1] * g[1]};                 // [2,4]+ = <ab,bc>: [2,2]+ = <ab,(bc)^2>
    case 16: return {g[0], g[1] * g[0] * g[1]};          // [2+,4] = <ab,c>: <ab, c(ab)c>
    case 17: return {g[0] * g[1]};                       // [2+,4] = <ab,c>: <abc>
    case 18: return {g[0] * g[1]};                       // [2,4+] = <a,bc>: <abc>
    case 19: return {g[0] * g[1]};                       // [2,2+] = <a,bc>: <abc> = {I,-I}
    case 20: return {g[0], g[1] * g[1]};                 // [2,4+] = <a,bc>: <a,(bc)^2>
    case 21: return {g[0]};                              // [2,2+] = <a,bc>: <a>
    default: break;
  }
  // 22..24: the [3,3] family in the same cube frame
  (void)q;
  return symbol_generators(aut);
}

}  // namespace detail

inline PairingInstance instantiate(const PairingRecord& r, int q = 0) {
  if (r.infinite && q < 1) throw Error(Errc::BadParams, "infinite pairing class needs q >= 1");
  PairingInstance inst;
  inst.record = r;
  inst.q = r.infinite ? q : 0;
  inst.dual_symbol = CoxeterSymbol::parse(r.infinite ? detail::substitute_q(r.dual_pattern, q) : r.dual_pattern);
  inst.aut_symbol = CoxeterSymbol::parse(r.infinite ? detail::substitute_q(r.aut_pattern, q) : r.aut_pattern);
  inst.dual_group = build_group(inst.dual_symbol);
  inst.aut_group = IsometryGroup::generate(detail::aut_generators(r, q, inst.dual_symbol, inst.aut_symbol));
  inst.aut_group.symbol = inst.aut_symbol;
  if (!inst.dual_group.contains_all(inst.aut_group) || 2 * inst.aut_group.order() != inst.dual_group.order())
    throw std::logic_error("pairing " + inst.name() + " is not an index-2 subgroup pair");
  return inst;
}

/// Every catalog instance: specials once, infinite classes for q in [q_min, q_max].
inline std::vector<PairingInstance> catalog_instances(int q_min, int q_max) {
  std::vector<PairingInstance> out;
  for (const auto& r : pairing_catalog()) {
    if (!r.infinite) {
      out.push_back(instantiate(r));
      continue;
    }
    for (int q = q_min; q <= q_max; ++q) out.push_back(instantiate(r, q));
  }
  return out;
}

struct ClassificationRow {
  PairingRecord record;
  bool alpha_in_dual = false;
  bool alpha_in_aut = false;
  int clause_dual = 0;
  int clause_aut = 0;
  bool antipodal = false;
  std::vector<int> checked_q;  // parameters verified against the matrix groups
  bool matrices_agree = true;
};

/// Evaluates one row. For infinite classes the flags are those of any q in
/// range satisfying the row's parity; every q in range is checked against
/// the matrix groups.
inline ClassificationRow classify_row(const PairingRecord& r, int q_min, int q_max) {
  ClassificationRow row;
  row.record = r;
  auto check = [&](const PairingInstance& inst, bool record_flags) {
    auto ld = lemma1_predicate(inst.dual_symbol), la = lemma1_predicate(inst.aut_symbol);
    if (ld.contains != contains_antipodal(inst.dual_group) || la.contains != contains_antipodal(inst.aut_group))
      row.matrices_agree = false;
    if (record_flags) {
      row.alpha_in_dual = ld.contains;
      row.alpha_in_aut = la.contains;
      row.clause_dual = ld.clause;
      row.clause_aut = la.clause;
    }
  };
  if (!r.infinite) {
    check(instantiate(r), true);
  } else {
    bool recorded = false;
    for (int q = q_min; q <= q_max; ++q) {
      auto inst = instantiate(r, q);
      const bool in_parity = parity_ok(r.parity, q);
      check(inst, in_parity && !recorded);
      recorded = recorded || in_parity;
      row.checked_q.push_back(q);
    }
    if (!recorded) throw Error(Errc::BadParams, "q range has no value of the required parity");
  }
  row.antipodal = row.alpha_in_dual && !row.alpha_in_aut;
  return row;
}

inline std::vector<ClassificationRow> classify_all_pairings(int q_min = 3, int q_max = 12) {
  if (q_min < 1 || q_max < q_min) throw Error(Errc::BadParams, "bad q range");
  std::vector<ClassificationRow> rows;
  for (const auto& r : pairing_catalog()) rows.push_back(classify_row(r, q_min, q_max));
  return rows;
}

}  // namespace sdmap
