#pragma once

// Wheels, q-multi wheels P(q,l) and q-multi hyperwheels O(q,l).
//
// Vertex names follow a_i^j / b_i^j / c with i in 1..q (taken mod q) and
// j the level. Rotations are read off a planar drawing with the cusp c at
// the center and level cycles as concentric rings, ring index i increasing
// counterclockwise.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sdmap/error.hpp"
#include "sdmap/map.hpp"

namespace sdmap {

enum class Family { Wheel, MultiWheel, HyperWheel };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::Wheel: return "wheel";
    case Family::MultiWheel: return "multiwheel";
    case Family::HyperWheel: return "hyperwheel";
  }
  return "?";
}

inline Family parse_family(const std::string& s) {
  if (s == "wheel") return Family::Wheel;
  if (s == "multiwheel") return Family::MultiWheel;
  if (s == "hyperwheel") return Family::HyperWheel;
  throw Error(Errc::BadParams, "unknown family '" + s + "'");
}

struct FamilyParams {
  int q = 3;
  int l = 1;
  bool strict = true;
};

struct LabeledMap {
  SphericalMap map;
  Family family = Family::Wheel;
  FamilyParams params;

  VertexId vertex(const std::string& name) const {
    if (auto v = map.find_label(name)) return *v;
    throw Error(Errc::UnknownVertex, name);
  }
};

/// Subscript arithmetic into 1..q.
inline int wrap_index(int i, int q) { return ((i - 1) % q + q) % q + 1; }

inline std::string vertex_name(char role, int i, int j) {
  return std::string(1, role) + "_" + std::to_string(i) + "^" + std::to_string(j);
}

/// Vertex -> face assignment by vertex names; each face is given by its
/// vertex labels (any order).
using LabeledAssignment = std::map<std::string, std::vector<std::string>>;

namespace detail {

class NameIndex {
 public:
  int add(const std::string& name) {
    ids_[name] = static_cast<int>(names_.size());
    names_.push_back(name);
    return ids_[name];
  }
  int operator()(const std::string& name) const { return ids_.at(name); }
  std::vector<std::string> names() const { return names_; }
  int size() const { return static_cast<int>(names_.size()); }

 private:
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
};

}  // namespace detail

inline LabeledMap build_multi_wheel(FamilyParams params) {
  const int q = params.q, l = params.l;
  if (q < 3 || l < 1) throw Error(Errc::BadParams, "multi wheel needs q >= 3 and l >= 1");
  if (params.strict && q % 2 == 0)
    throw Error(Errc::BadParams, "strict multi wheel needs odd q, got " + std::to_string(q));

  detail::NameIndex id;
  for (int j = 1; j <= l; ++j)
    for (int i = 1; i <= q; ++i) id.add(vertex_name('a', i, j));
  id.add("c");
  auto a = [&](int i, int j) { return j == 0 ? id("c") : id(vertex_name('a', wrap_index(i, q), j)); };

  std::vector<std::vector<VertexId>> nb(id.size());
  for (int i = 1; i <= q; ++i) nb[id("c")].push_back(a(i, 1));
  for (int j = 1; j <= l; ++j) {
    for (int i = 1; i <= q; ++i) {
      auto& r = nb[a(i, j)];
      if (j < l) r.push_back(a(i, j + 1));
      r.push_back(a(i + 1, j));
      r.push_back(a(i, j - 1));
      r.push_back(a(i - 1, j));
    }
  }
  LabeledMap out{from_neighbor_lists(nb, id.names()), Family::MultiWheel, params};
  return out;
}

/// The q-wheel: P(q,1).
inline LabeledMap build_wheel(int q) {
  if (q < 3) throw Error(Errc::QTooSmall, "wheel needs q >= 3, got " + std::to_string(q));
  LabeledMap w = build_multi_wheel({q, 1, false});
  w.family = Family::Wheel;
  return w;
}

/// O(q,l): a-cycles on levels 1..l, b-cycles on levels 2..l, the alternating
/// rim a_1^1 b_1^1 ... a_q^1 b_q^1, a-spokes between consecutive a-levels,
/// b-spokes b^j b^{j+1} for j = 1..l with b^{l+1} = c.
inline LabeledMap build_multi_hyperwheel(FamilyParams params) {
  const int q = params.q, l = params.l;
  if (q < 3 || l < 1) throw Error(Errc::BadParams, "multi hyperwheel needs q >= 3 and l >= 1");
  if (params.strict && (q % 2 != 0 || q < 4))
    throw Error(Errc::BadParams, "strict multi hyperwheel needs even q >= 4, got " + std::to_string(q));

  detail::NameIndex id;
  for (int j = 1; j <= l; ++j)
    for (int i = 1; i <= q; ++i) id.add(vertex_name('a', i, j));
  for (int j = 1; j <= l; ++j)
    for (int i = 1; i <= q; ++i) id.add(vertex_name('b', i, j));
  id.add("c");
  auto a = [&](int i, int j) { return id(vertex_name('a', wrap_index(i, q), j)); };
  auto b = [&](int i, int j) { return j == l + 1 ? id("c") : id(vertex_name('b', wrap_index(i, q), j)); };

  std::vector<std::vector<VertexId>> nb(id.size());
  for (int i = 1; i <= q; ++i) nb[id("c")].push_back(b(i, l));
  for (int i = 1; i <= q; ++i) {
    // rim b-vertex sits between a_i^1 and a_{i+1}^1, just inside the a^1 chord
    nb[b(i, 1)] = {a(i + 1, 1), b(i, 2), a(i, 1)};
    for (int j = 2; j <= l; ++j) nb[b(i, j)] = {b(i, j - 1), b(i + 1, j), b(i, j + 1), b(i - 1, j)};

    auto& r = nb[a(i, 1)];
    if (l >= 2) r.push_back(a(i, 2));
    r.insert(r.end(), {a(i + 1, 1), b(i, 1), b(i - 1, 1), a(i - 1, 1)});
    for (int j = 2; j <= l; ++j) {
      auto& s = nb[a(i, j)];
      if (j < l) s.push_back(a(i, j + 1));
      s.insert(s.end(), {a(i + 1, j), a(i, j - 1), a(i - 1, j)});
    }
  }
  LabeledMap out{from_neighbor_lists(nb, id.names()), Family::HyperWheel, params};
  return out;
}

/// Vertex -> face assignment of the multi wheel involution (q odd):
/// a_i^j -> quad between levels l-j and l-j+1 at positions i+k, i-k;
/// a_i^l -> triangle (a_{i+k}^1 a_{i-k}^1 c); c -> outer cycle.
inline LabeledAssignment multiwheel_involution(FamilyParams params) {
  const int q = params.q, l = params.l;
  if (q < 3 || q % 2 == 0 || l < 1)
    throw Error(Errc::BadParams, "multi wheel involution needs odd q >= 3, got " + std::to_string(q));
  const int k = (q - 1) / 2;
  auto a = [&](int i, int j) { return j == 0 ? std::string("c") : vertex_name('a', wrap_index(i, q), j); };
  LabeledAssignment out;
  for (int i = 1; i <= q; ++i) {
    for (int j = 1; j < l; ++j)
      out[a(i, j)] = {a(i + k, l - j), a(i + k, l - j + 1), a(i - k, l - j), a(i - k, l - j + 1)};
    out[a(i, l)] = {a(i + k, 1), a(i - k, 1), "c"};
  }
  for (int i = 1; i <= q; ++i) out["c"].push_back(a(i, l));
  return out;
}

/// Vertex -> face assignment of the multi hyperwheel involution (q = 2k).
/// Cases for a^1, a^j, a^l, c as usual; b-vertices go to the face across
/// positions i+k, i+k+1. With b^{l+1} = c, the a^1 face for l = 1 is the
/// quadrilateral (c b_{i+k-1}^1 a_{i+k}^1 b_{i+k}^1).
inline LabeledAssignment hyperwheel_involution(FamilyParams params) {
  const int q = params.q, l = params.l;
  if (q < 4 || q % 2 != 0 || l < 1)
    throw Error(Errc::BadParams, "multi hyperwheel involution needs even q >= 4, got " + std::to_string(q));
  const int k = q / 2;
  auto a = [&](int i, int j) { return vertex_name('a', wrap_index(i, q), j); };
  auto b = [&](int i, int j) { return j == l + 1 ? std::string("c") : vertex_name('b', wrap_index(i, q), j); };
  LabeledAssignment out;
  for (int i = 1; i <= q; ++i) {
    const int m = i + k;
    if (l == 1) {
      out[a(i, 1)] = {"c", b(m - 1, 1), a(m, 1), b(m, 1)};
    } else {
      out[a(i, 1)] = {b(m, 2), b(m - 1, 2), b(m - 1, 1), a(m, 1), b(m, 1)};
      for (int j = 2; j < l; ++j) out[a(i, j)] = {b(m, j), b(m - 1, j), b(m - 1, j + 1), b(m, j + 1)};
      out[a(i, l)] = {b(m, l), b(m - 1, l), "c"};
    }
    out[b(i, 1)] = {a(m, 1), b(m, 1), a(m + 1, 1)};
    for (int j = 2; j <= l; ++j) out[b(i, j)] = {a(m, j - 1), a(m + 1, j - 1), a(m + 1, j), a(m, j)};
  }
  for (int i = 1; i <= q; ++i) out["c"].push_back(a(i, l));
  return out;
}

/// Resolves each listed vertex set to the face of g with exactly that
/// vertex set.
inline std::vector<FaceId> resolve_assignment(const SphericalMap& g, const LabeledAssignment& assignment) {
  std::map<std::vector<VertexId>, FaceId> by_set;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    auto vs = g.face_vertices(f);
    std::sort(vs.begin(), vs.end());
    by_set[vs] = f;
  }
  std::vector<FaceId> tau(g.vertex_count(), -1);
  for (const auto& [name, face] : assignment) {
    auto v = g.find_label(name);
    if (!v) throw Error(Errc::UnknownVertex, name);
    std::vector<VertexId> vs;
    for (const auto& u : face) {
      auto id = g.find_label(u);
      if (!id) throw Error(Errc::UnknownVertex, u);
      vs.push_back(*id);
    }
    std::sort(vs.begin(), vs.end());
    auto it = by_set.find(vs);
    if (it == by_set.end()) {
      std::string list;
      for (const auto& u : face) list += " " + u;
      throw Error(Errc::FaceNotFound, name + " ->" + list);
    }
    tau[*v] = it->second;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (tau[v] < 0) throw Error(Errc::UnknownVertex, "no face assigned to " + g.label(v));
  return tau;
}

/// Inverse of resolve_assignment: each vertex label to its face's vertex labels.
inline LabeledAssignment label_assignment(const SphericalMap& g, const std::vector<FaceId>& tau) {
  LabeledAssignment out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& face = out[g.label(v)];
    for (VertexId u : g.face_vertices(tau[v])) face.push_back(g.label(u));
  }
  return out;
}

/// The formula involution of a family instance, resolved to faces.
inline std::vector<FaceId> family_involution(const LabeledMap& lm) {
  switch (lm.family) {
    case Family::HyperWheel: return resolve_assignment(lm.map, hyperwheel_involution(lm.params));
    case Family::MultiWheel:
    case Family::Wheel: return resolve_assignment(lm.map, multiwheel_involution(lm.params));
  }
  throw Error(Errc::BadParams, "unknown family");
}

/// Builds any family member.
inline LabeledMap build_family(Family f, FamilyParams params) {
  switch (f) {
    case Family::Wheel: return build_wheel(params.q);
    case Family::MultiWheel: return build_multi_wheel(params);
    case Family::HyperWheel: return build_multi_hyperwheel(params);
  }
  throw Error(Errc::BadParams, "unknown family");
}

}  // namespace sdmap
