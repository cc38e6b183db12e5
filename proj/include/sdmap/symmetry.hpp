#pragma once

// Automorphisms, duality isomorphisms and strong involutions of polyhedral
// maps, all enumerated as dart maps by flag propagation from dart 0.
//
// Every symmetry also carries its action on cells. Cells are indexed
// vertices [0, V), edges [V, V+E), faces [V+E, V+E+F); a duality sends
// vertices to faces and faces to vertices, so automorphisms and dualities
// compose as plain permutations of this index space.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "sdmap/error.hpp"
#include "sdmap/map.hpp"

namespace sdmap {

enum class SymmetryKind { Automorphism, Duality };
enum class Orientation { Preserving, Reversing };

struct CellIndex {
  int v = 0, e = 0, f = 0;
  explicit CellIndex(const SphericalMap& g) : v(g.vertex_count()), e(g.edge_count()), f(g.face_count()) {}
  int vertex(VertexId x) const { return x; }
  int edge(int x) const { return v + x; }
  int face(FaceId x) const { return v + e + x; }
  int size() const { return v + e + f; }
  bool is_vertex(int c) const { return c < v; }
  bool is_edge(int c) const { return c >= v && c < v + e; }
  bool is_face(int c) const { return c >= v + e; }
};

struct MapSymmetry {
  std::vector<DartId> dart_image;
  SymmetryKind kind = SymmetryKind::Automorphism;
  Orientation orientation = Orientation::Preserving;
  /// Permutation of V u E u F (see CellIndex).
  std::vector<int> cells;
};

namespace detail {

inline std::vector<int> cell_action(const SphericalMap& g, const std::vector<DartId>& image,
                                    SymmetryKind kind, Orientation orient) {
  CellIndex idx(g);
  std::vector<int> out(idx.size(), -1);
  const bool rev = orient == Orientation::Reversing;
  for (DartId d = 0; d < g.dart_count(); ++d) {
    DartId t = image[d];
    out[idx.edge(SphericalMap::edge_of(d))] = idx.edge(SphericalMap::edge_of(t));
    if (kind == SymmetryKind::Automorphism) {
      out[idx.vertex(g.origin(d))] = idx.vertex(g.origin(t));
      out[idx.face(g.face_of(d))] = idx.face(g.face_of(rev ? SphericalMap::twin(t) : t));
    } else {
      // t is a dart of the dual, which shares ids with g
      out[idx.vertex(g.origin(d))] = idx.face(g.face_of(t));
      out[idx.face(g.face_of(d))] = idx.vertex(rev ? g.origin(t) : g.head(t));
    }
  }
  return out;
}

inline void require_polyhedral(const SphericalMap& g) {
  auto rep = validate_polyhedral(g);
  if (!rep.polyhedral())
    throw Error(Errc::NotPolyhedral, std::string("map is not ") + (rep.simple ? "3-connected" : "simple"));
}

template <typename NextFn, typename PrevFn>
std::vector<MapSymmetry> enumerate_maps_to(const SphericalMap& g, int target_darts, NextFn next,
                                           PrevFn prev, const std::vector<int>& target_degree,
                                           SymmetryKind kind) {
  std::vector<MapSymmetry> out;
  const int base_degree = g.degree(g.origin(0));
  for (DartId t = 0; t < target_darts; ++t) {
    if (target_degree[t] != base_degree) continue;
    for (int rev = 0; rev < 2; ++rev) {
      auto image = propagate_dart_map(g, target_darts, next, prev, 0, t, rev != 0);
      if (!image) continue;
      MapSymmetry s;
      s.dart_image = std::move(*image);
      s.kind = kind;
      s.orientation = rev ? Orientation::Reversing : Orientation::Preserving;
      s.cells = cell_action(g, s.dart_image, kind, s.orientation);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace detail

/// All automorphisms (both orientations), ordered by the image of dart 0 and
/// then orientation.
inline std::vector<MapSymmetry> enumerate_automorphisms(const SphericalMap& g) {
  detail::require_polyhedral(g);
  std::vector<int> deg(g.dart_count());
  for (DartId d = 0; d < g.dart_count(); ++d) deg[d] = g.degree(g.origin(d));
  return detail::enumerate_maps_to(
      g, g.dart_count(), [&g](DartId d) { return g.next_at_vertex(d); },
      [&g](DartId d) { return g.prev_at_vertex(d); }, deg, SymmetryKind::Automorphism);
}

/// All isomorphisms g -> dual(g); empty iff g is not self-dual.
inline std::vector<MapSymmetry> enumerate_dualities(const SphericalMap& g) {
  detail::require_polyhedral(g);
  if (g.vertex_count() != g.face_count()) return {};
  // dual rotation at a face is the face orbit; dual degree = face degree
  std::vector<int> deg(g.dart_count());
  for (DartId d = 0; d < g.dart_count(); ++d) deg[d] = g.face_degree(g.face_of(d));
  auto next = [&g](DartId d) { return g.next_in_face(d); };
  auto prev = [&g](DartId d) {
    // inverse of next_in_face: next_at_vertex(twin(d))
    return g.next_at_vertex(SphericalMap::twin(d));
  };
  return detail::enumerate_maps_to(g, g.dart_count(), next, prev, deg, SymmetryKind::Duality);
}

inline std::vector<int> compose(const std::vector<int>& outer, const std::vector<int>& inner) {
  std::vector<int> out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

inline bool is_identity(const std::vector<int>& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

inline int permutation_order(const std::vector<int>& p) {
  std::vector<int> cur = p;
  int k = 1;
  while (!is_identity(cur)) {
    cur = compose(p, cur);
    ++k;
  }
  return k;
}

/// Dual(G) = Aut(G) u Iso(G).
struct DualityGroup {
  std::vector<MapSymmetry> elements;  // automorphisms first, then dualities
  int aut_count = 0;
  int iso_count = 0;
  int order() const { return aut_count + iso_count; }
};

/// Builds Dual(G) and checks closure under composition and the index-2
/// property. Throws NotSelfDual when Iso(G) is empty.
inline DualityGroup dual_group(const SphericalMap& g) {
  DualityGroup grp;
  grp.elements = enumerate_automorphisms(g);
  grp.aut_count = static_cast<int>(grp.elements.size());
  auto iso = enumerate_dualities(g);
  if (iso.empty()) throw Error(Errc::NotSelfDual, "no isomorphism to the dual map");
  grp.iso_count = static_cast<int>(iso.size());
  for (auto& s : iso) grp.elements.push_back(std::move(s));

  if (grp.iso_count != grp.aut_count)
    throw std::logic_error("Aut(G) is not of index 2 in Dual(G)");
  std::map<std::vector<int>, SymmetryKind> kind_of;
  for (const auto& s : grp.elements) kind_of.emplace(s.cells, s.kind);
  if (static_cast<int>(kind_of.size()) != grp.order())
    throw std::logic_error("distinct symmetries with equal cell action");
  for (const auto& x : grp.elements) {
    for (const auto& y : grp.elements) {
      auto it = kind_of.find(compose(x.cells, y.cells));
      if (it == kind_of.end()) throw std::logic_error("Dual(G) not closed under composition");
      const bool expect_aut = x.kind == y.kind;
      if ((it->second == SymmetryKind::Automorphism) != expect_aut)
        throw std::logic_error("composition kind table violated");
    }
  }
  return grp;
}

struct StrongInvolutionReport {
  bool is_duality = false;
  bool cond_i = false;
  bool cond_ii = false;
  bool is_involution = false;
  bool strong() const { return is_duality && cond_i && cond_ii; }
};

struct StrongInvolution {
  std::vector<FaceId> vertex_to_face;
  MapSymmetry underlying;
};

namespace detail {

inline void check_assignment(const SphericalMap& g, const std::vector<FaceId>& tau) {
  if (static_cast<int>(tau.size()) != g.vertex_count())
    throw Error(Errc::UnknownVertex, "assignment covers " + std::to_string(tau.size()) + " of " +
                                         std::to_string(g.vertex_count()) + " vertices");
  for (FaceId f : tau)
    if (f < 0 || f >= g.face_count()) throw Error(Errc::UnknownFace, "face id " + std::to_string(f));
}

inline bool condition_i(const SphericalMap& g, const std::vector<FaceId>& tau) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    for (VertexId u : g.face_vertices(tau[v]))
      if (!g.face_contains(tau[u], v)) return false;
  return true;
}

inline bool condition_ii(const SphericalMap& g, const std::vector<FaceId>& tau) {
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.face_contains(tau[v], v)) return false;
  return true;
}

}  // namespace detail

/// Checks a vertex -> face assignment directly against the definitions. The
/// duality test is adjacency preservation of tau as a map G -> G*, and the
/// involution test extends tau to edges and faces and squares it.
inline StrongInvolutionReport verify_strong_involution(const SphericalMap& g,
                                                       const std::vector<FaceId>& tau) {
  detail::check_assignment(g, tau);
  StrongInvolutionReport rep;
  rep.cond_i = detail::condition_i(g, tau);
  rep.cond_ii = detail::condition_ii(g, tau);

  const int n = g.vertex_count();
  std::vector<char> hit(g.face_count(), 0);
  bool bijective = n == g.face_count();
  for (FaceId f : tau) {
    if (hit[f]) bijective = false;
    hit[f] = 1;
  }
  // faces sharing an edge -> that edge
  std::map<std::pair<FaceId, FaceId>, int> shared;
  for (DartId d = 0; d < g.dart_count(); d += 2) {
    FaceId x = g.face_of(d), y = g.face_of(d + 1);
    shared[{std::min(x, y), std::max(x, y)}] = d / 2;
  }
  std::vector<int> edge_image(g.edge_count(), -1);
  rep.is_duality = bijective;
  if (bijective) {
    for (DartId d = 0; d < g.dart_count() && rep.is_duality; d += 2) {
      FaceId x = tau[g.origin(d)], y = tau[g.head(d)];
      auto it = shared.find({std::min(x, y), std::max(x, y)});
      if (it == shared.end()) rep.is_duality = false;
      else edge_image[d / 2] = it->second;
    }
  }
  if (!rep.is_duality) return rep;

  // face F -> the vertex whose incident faces are tau(F)
  std::map<std::vector<FaceId>, VertexId> by_star;
  for (VertexId w = 0; w < n; ++w) {
    std::vector<FaceId> star;
    for (DartId d : g.rotation(w)) star.push_back(g.face_of(d));
    std::sort(star.begin(), star.end());
    by_star[star] = w;
  }
  std::vector<VertexId> face_image(g.face_count(), -1);
  for (FaceId f = 0; f < g.face_count(); ++f) {
    std::vector<FaceId> img;
    for (VertexId v : g.face_vertices(f)) img.push_back(tau[v]);
    std::sort(img.begin(), img.end());
    auto it = by_star.find(img);
    if (it == by_star.end()) {
      rep.is_duality = false;
      return rep;
    }
    face_image[f] = it->second;
  }
  bool inv = true;
  for (VertexId v = 0; v < n; ++v) inv = inv && face_image[tau[v]] == v;
  for (int e = 0; e < g.edge_count(); ++e) inv = inv && edge_image[edge_image[e]] == e;
  for (FaceId f = 0; f < g.face_count(); ++f) inv = inv && tau[face_image[f]] == f;
  rep.is_involution = inv;
  return rep;
}

/// Vertex part of a duality as a vertex -> face assignment.
inline std::vector<FaceId> vertex_assignment(const SphericalMap& g, const MapSymmetry& duality) {
  CellIndex idx(g);
  std::vector<FaceId> tau(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) tau[v] = duality.cells[v] - idx.v - idx.e;
  return tau;
}

/// Dualities satisfying conditions (i) and (ii), in enumeration order.
inline std::vector<StrongInvolution> find_strong_involutions(const SphericalMap& g) {
  std::vector<StrongInvolution> out;
  for (auto& s : enumerate_dualities(g)) {
    auto tau = vertex_assignment(g, s);
    if (detail::condition_i(g, tau) && detail::condition_ii(g, tau))
      out.push_back({std::move(tau), std::move(s)});
  }
  return out;
}

/// Fingerprint of a group pair Dual > Aut, shared by combinatorial and
/// matrix groups. Profile entries are (order, det sign, is_duality, fixes a
/// point of the sphere).
struct PairingSignature {
  int dual_order = 0;
  int aut_order = 0;
  std::vector<std::tuple<int, int, int, int>> element_profile;  // sorted
  bool central_free_involution = false;  // a fixed-point-free involution outside Aut

  friend bool operator==(const PairingSignature& a, const PairingSignature& b) {
    return a.dual_order == b.dual_order && a.aut_order == b.aut_order &&
           a.element_profile == b.element_profile &&
           a.central_free_involution == b.central_free_involution;
  }
  friend bool operator<(const PairingSignature& a, const PairingSignature& b) {
    return std::tie(a.dual_order, a.aut_order, a.element_profile, a.central_free_involution) <
           std::tie(b.dual_order, b.aut_order, b.element_profile, b.central_free_involution);
  }
};

/// Whether a symmetry fixes some cell of the graph of squares (a vertex,
/// edge or face of G, or a corner (v, f)); this is exactly when its
/// isometric realization fixes a point of the sphere.
inline bool fixes_some_cell(const SphericalMap& g, const MapSymmetry& s) {
  for (std::size_t c = 0; c < s.cells.size(); ++c)
    if (s.cells[c] == static_cast<int>(c)) return true;
  if (s.kind == SymmetryKind::Automorphism) return false;
  CellIndex idx(g);
  for (DartId d = 0; d < g.dart_count(); ++d) {
    int v = idx.vertex(g.origin(d)), f = idx.face(g.face_of(d));
    if (s.cells[v] == f && s.cells[f] == v) return true;
  }
  return false;
}

inline PairingSignature pairing_signature(const SphericalMap& g, const DualityGroup& grp) {
  PairingSignature sig;
  sig.dual_order = grp.order();
  sig.aut_order = grp.aut_count;
  for (const auto& s : grp.elements) {
    const int order = permutation_order(s.cells);
    const bool iso = s.kind == SymmetryKind::Duality;
    const bool fixes = fixes_some_cell(g, s);
    sig.element_profile.emplace_back(order, s.orientation == Orientation::Preserving ? 1 : -1,
                                     iso ? 1 : 0, fixes ? 1 : 0);
    if (iso && order == 2 && !fixes) {
      bool central = true;
      for (const auto& t : grp.elements)
        if (compose(s.cells, t.cells) != compose(t.cells, s.cells)) {
          central = false;
          break;
        }
      if (central) sig.central_free_involution = true;
    }
  }
  std::sort(sig.element_profile.begin(), sig.element_profile.end());
  return sig;
}

}  // namespace sdmap
