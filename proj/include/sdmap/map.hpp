#pragma once

// Rotation-system representation of maps on the 2-sphere.
//
// Darts are dense integers; edge i owns darts 2i and 2i+1 and twin(d) = d ^ 1.
// rotation(v) lists the darts leaving v counterclockwise as seen from outside
// the sphere. Faces are the orbits of
//
//     next_in_face(d) = twin(prev_at_vertex(d)),
//
// so the face of d is the one on its clockwise side at origin(d), and an
// orbit lists the boundary darts counterclockwise around the face. The dual
// map reuses dart ids, with rotation(f) = the face orbit of f.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sdmap/error.hpp"

namespace sdmap {

using DartId = int;
using VertexId = int;
using FaceId = int;

enum class OrientationClass { PreservingOnly, Full };

class SphericalMap {
 public:
  SphericalMap() = default;

  /// Builds and validates a genus-0 map. Throws NonInvolutiveTwin,
  /// InvalidRotation, DisconnectedMap or EulerViolation.
  static SphericalMap from_rotation_system(int vertex_count,
                                           std::vector<std::vector<DartId>> rotations,
                                           std::vector<std::string> labels = {}) {
    SphericalMap m;
    m.build(vertex_count, std::move(rotations), std::move(labels));
    return m;
  }

  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int dart_count() const { return static_cast<int>(origin_.size()); }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  static DartId twin(DartId d) { return d ^ 1; }
  static int edge_of(DartId d) { return d >> 1; }

  VertexId origin(DartId d) const { return origin_[d]; }
  VertexId head(DartId d) const { return origin_[twin(d)]; }
  FaceId face_of(DartId d) const { return face_of_[d]; }

  DartId next_at_vertex(DartId d) const {
    const auto& rot = rotations_[origin_[d]];
    return rot[(pos_[d] + 1) % rot.size()];
  }
  DartId prev_at_vertex(DartId d) const {
    const auto& rot = rotations_[origin_[d]];
    return rot[(pos_[d] + rot.size() - 1) % rot.size()];
  }
  DartId next_in_face(DartId d) const { return twin(prev_at_vertex(d)); }

  const std::vector<DartId>& rotation(VertexId v) const { return rotations_[v]; }
  const std::vector<std::vector<DartId>>& rotations() const { return rotations_; }
  const std::vector<DartId>& face_darts(FaceId f) const { return faces_[f]; }

  int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
  int face_degree(FaceId f) const { return static_cast<int>(faces_[f].size()); }

  /// Vertices on the boundary of f, in face-orbit order.
  std::vector<VertexId> face_vertices(FaceId f) const {
    std::vector<VertexId> out;
    out.reserve(faces_[f].size());
    for (DartId d : faces_[f]) out.push_back(origin_[d]);
    return out;
  }

  bool face_contains(FaceId f, VertexId v) const {
    for (DartId d : faces_[f])
      if (origin_[d] == v) return true;
    return false;
  }

  /// Set only on maps produced by dual_map(): the vertex cycle of the primal
  /// face that dual vertex v stands for.
  const std::vector<VertexId>& primal_cycle(VertexId v) const {
    static const std::vector<VertexId> kEmpty;
    return primal_cycles_.empty() ? kEmpty : primal_cycles_[v];
  }
  bool has_primal_cycles() const { return !primal_cycles_.empty(); }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(VertexId v) const { return labels_[v]; }
  std::optional<VertexId> find_label(const std::string& name) const {
    for (VertexId v = 0; v < vertex_count(); ++v)
      if (labels_[v] == name) return v;
    return std::nullopt;
  }

  std::vector<VertexId> neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (DartId d : rotations_[v]) out.push_back(head(d));
    return out;
  }

  /// Dart from u to v, if the edge exists.
  std::optional<DartId> dart_between(VertexId u, VertexId v) const {
    for (DartId d : rotations_[u])
      if (head(d) == v) return d;
    return std::nullopt;
  }

 private:
  friend SphericalMap dual_map(const SphericalMap& g);

  void build(int vertex_count, std::vector<std::vector<DartId>> rotations,
             std::vector<std::string> labels) {
    if (vertex_count < 1 || static_cast<int>(rotations.size()) != vertex_count)
      throw Error(Errc::InvalidRotation, "rotation count must equal vertex count");
    std::size_t darts = 0;
    for (const auto& r : rotations) darts += r.size();
    if (darts == 0 || darts % 2 != 0)
      throw Error(Errc::NonInvolutiveTwin, "dart count must be even and positive");

    origin_.assign(darts, -1);
    pos_.assign(darts, -1);
    for (VertexId v = 0; v < vertex_count; ++v) {
      if (rotations[v].empty())
        throw Error(Errc::DisconnectedMap, "vertex " + std::to_string(v) + " is isolated");
      for (std::size_t i = 0; i < rotations[v].size(); ++i) {
        DartId d = rotations[v][i];
        if (d < 0 || static_cast<std::size_t>(d) >= darts)
          throw Error(Errc::NonInvolutiveTwin,
                      "dart " + std::to_string(d) + " has no twin in 0.." + std::to_string(darts - 1));
        if (origin_[d] != -1)
          throw Error(Errc::InvalidRotation, "dart " + std::to_string(d) + " appears twice");
        origin_[d] = v;
        pos_[d] = static_cast<int>(i);
      }
    }
    rotations_ = std::move(rotations);

    if (labels.empty()) {
      labels.reserve(vertex_count);
      for (VertexId v = 0; v < vertex_count; ++v) labels.push_back("v" + std::to_string(v));
    } else if (static_cast<int>(labels.size()) != vertex_count) {
      throw Error(Errc::InvalidRotation, "label count must equal vertex count");
    }
    labels_ = std::move(labels);

    // connectivity through twins
    std::vector<char> seen(vertex_count, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (DartId d : rotations_[v]) {
        VertexId w = head(d);
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    if (reached != vertex_count) throw Error(Errc::DisconnectedMap, "map is not connected");

    face_of_.assign(darts, -1);
    faces_.clear();
    for (DartId d0 = 0; d0 < static_cast<DartId>(darts); ++d0) {
      if (face_of_[d0] != -1) continue;
      std::vector<DartId> orbit;
      DartId d = d0;
      do {
        face_of_[d] = static_cast<FaceId>(faces_.size());
        orbit.push_back(d);
        d = next_in_face(d);
      } while (d != d0);
      faces_.push_back(std::move(orbit));
    }

    if (vertex_count - edge_count() + face_count() != 2)
      throw Error(Errc::EulerViolation,
                  "V - E + F = " + std::to_string(vertex_count - edge_count() + face_count()) +
                      ", expected 2");
  }

  std::vector<std::vector<DartId>> rotations_;
  std::vector<VertexId> origin_;
  std::vector<int> pos_;
  std::vector<FaceId> face_of_;
  std::vector<std::vector<DartId>> faces_;
  std::vector<std::string> labels_;
  std::vector<std::vector<VertexId>> primal_cycles_;
};

/// Builds a simple map from counterclockwise neighbor lists. Edge ids follow
/// first appearance scanning vertices in order; dart 2e leaves the lower
/// vertex id. Throws InvalidRotation on asymmetric adjacency, loops, or
/// parallel edges.
inline SphericalMap from_neighbor_lists(const std::vector<std::vector<VertexId>>& ccw_neighbors,
                                        std::vector<std::string> labels = {}) {
  const int n = static_cast<int>(ccw_neighbors.size());
  std::vector<std::vector<DartId>> rot(n);
  std::vector<std::pair<VertexId, VertexId>> edges;
  // (min, max) -> edge id via sorted lookup per vertex
  std::vector<std::vector<std::pair<VertexId, int>>> edge_at(n);
  auto label_of = [&](VertexId v) { return labels.empty() ? std::to_string(v) : labels[v]; };
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : ccw_neighbors[u]) {
      if (v < 0 || v >= n)
        throw Error(Errc::InvalidRotation, "neighbor id out of range at " + label_of(u));
      if (v == u) throw Error(Errc::InvalidRotation, "loop at " + label_of(u));
      VertexId a = std::min(u, v), b = std::max(u, v);
      int id = -1;
      for (auto [w, e] : edge_at[a])
        if (w == b) id = e;
      if (id == -1) {
        id = static_cast<int>(edges.size());
        edges.emplace_back(a, b);
        edge_at[a].emplace_back(b, id);
      }
      rot[u].push_back(u == a ? 2 * id : 2 * id + 1);
    }
  }
  std::vector<int> uses(2 * edges.size(), 0);
  for (const auto& r : rot)
    for (DartId d : r) ++uses[d];
  for (std::size_t d = 0; d < uses.size(); ++d) {
    if (uses[d] == 1) continue;
    auto [a, b] = edges[d / 2];
    VertexId from = d % 2 == 0 ? a : b, to = d % 2 == 0 ? b : a;
    if (uses[d] == 0)
      throw Error(Errc::InvalidRotation, "asymmetric adjacency: " + label_of(to) + " lists " +
                                             label_of(from) + " but not conversely");
    throw Error(Errc::InvalidRotation,
                "parallel edges between " + label_of(from) + " and " + label_of(to));
  }
  return SphericalMap::from_rotation_system(n, std::move(rot), std::move(labels));
}

/// One dual vertex per face of g; dart ids are shared with g.
inline SphericalMap dual_map(const SphericalMap& g) {
  std::vector<std::vector<DartId>> rot(g.face_count());
  std::vector<std::string> labels;
  std::vector<std::vector<VertexId>> cycles;
  for (FaceId f = 0; f < g.face_count(); ++f) {
    rot[f] = g.face_darts(f);
    cycles.push_back(g.face_vertices(f));
    std::string name = "(";
    for (std::size_t i = 0; i < cycles.back().size(); ++i) {
      if (i) name += ' ';
      name += g.label(cycles.back()[i]);
    }
    labels.push_back(name + ")");
  }
  SphericalMap d = SphericalMap::from_rotation_system(g.face_count(), std::move(rot), std::move(labels));
  d.primal_cycles_ = std::move(cycles);
  return d;
}

struct PolyhedralReport {
  bool simple = false;
  bool three_connected = false;
  bool polyhedral() const { return simple && three_connected; }
};

namespace detail {

// Articulation-point test on the simple graph induced by removing `removed`.
inline bool has_cut_vertex_without(const std::vector<std::vector<VertexId>>& adj, VertexId removed) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  VertexId root = removed == 0 ? 1 : 0;
  if (root >= n) return false;
  bool cut = false;
  int visited = 0;

  // iterative DFS: (vertex, parent, next neighbor index)
  struct Frame {
    VertexId v, parent;
    std::size_t next;
    int children;
  };
  std::vector<Frame> stack;
  disc[root] = low[root] = timer++;
  ++visited;
  stack.push_back({root, -1, 0, 0});
  while (!stack.empty()) {
    Frame& fr = stack.back();
    if (fr.next < adj[fr.v].size()) {
      VertexId w = adj[fr.v][fr.next++];
      if (w == removed || w == fr.parent) continue;
      if (disc[w] == -1) {
        disc[w] = low[w] = timer++;
        ++visited;
        ++fr.children;
        stack.push_back({w, fr.v, 0, 0});
      } else {
        low[fr.v] = std::min(low[fr.v], disc[w]);
      }
    } else {
      Frame done = fr;
      stack.pop_back();
      if (!stack.empty()) {
        Frame& parent = stack.back();
        low[parent.v] = std::min(low[parent.v], low[done.v]);
        if (parent.parent != -1 && low[done.v] >= disc[parent.v]) cut = true;
      } else if (done.children > 1) {
        cut = true;
      }
    }
  }
  const int expected = removed >= 0 ? n - 1 : n;
  return cut || visited != expected;
}

}  // namespace detail

/// Exact simplicity and 3-connectivity. 3-connectivity removes each vertex in
/// turn and looks for an articulation point in the rest: O(V (V + E)).
inline PolyhedralReport validate_polyhedral(const SphericalMap& g) {
  PolyhedralReport report;
  const int n = g.vertex_count();
  report.simple = true;
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    adj[v] = g.neighbors(v);
    std::vector<VertexId> sorted = adj[v];
    std::sort(sorted.begin(), sorted.end());
    if (std::find(sorted.begin(), sorted.end(), v) != sorted.end()) report.simple = false;
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) report.simple = false;
  }
  if (n < 4) {
    report.three_connected = false;
    return report;
  }
  report.three_connected = true;
  for (VertexId x = 0; x < n && report.three_connected; ++x)
    if (detail::has_cut_vertex_without(adj, x)) report.three_connected = false;
  return report;
}

/// Isomorphism-invariant code: darts numbered in BFS order from a start dart,
/// exploring twin and then the rotation successor (predecessor when mirrored).
/// The code is the lexicographic minimum over all start darts and, for Full,
/// both orientations.
struct CanonicalCode {
  std::vector<int> code;
  OrientationClass orientation_class = OrientationClass::Full;

  friend bool operator==(const CanonicalCode& a, const CanonicalCode& b) {
    return a.orientation_class == b.orientation_class && a.code == b.code;
  }
  friend bool operator<(const CanonicalCode& a, const CanonicalCode& b) { return a.code < b.code; }
};

namespace detail {

inline std::vector<int> traversal_code(const SphericalMap& g, DartId start, bool mirrored,
                                       const std::vector<int>* best) {
  const int n = g.dart_count();
  std::vector<int> number(n, -1);
  std::vector<DartId> order;
  order.reserve(n);
  std::vector<int> code;
  code.reserve(2 * n + 2);
  code.push_back(g.vertex_count());
  code.push_back(g.edge_count());
  number[start] = 0;
  order.push_back(start);
  // 0 while equal to *best so far, -1 once strictly smaller
  int cmp = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    DartId d = order[i];
    DartId step[2] = {SphericalMap::twin(d), mirrored ? g.prev_at_vertex(d) : g.next_at_vertex(d)};
    for (DartId e : step) {
      if (number[e] == -1) {
        number[e] = static_cast<int>(order.size());
        order.push_back(e);
      }
      code.push_back(number[e]);
      if (best && cmp == 0) {
        std::size_t k = code.size() - 1;
        if (code[k] > (*best)[k]) return {};
        if (code[k] < (*best)[k]) cmp = -1;
      }
    }
  }
  return code;
}

}  // namespace detail

inline CanonicalCode canonical_code(const SphericalMap& g,
                                    OrientationClass cls = OrientationClass::Full) {
  CanonicalCode result;
  result.orientation_class = cls;
  bool have = false;
  for (int mirror = 0; mirror < (cls == OrientationClass::Full ? 2 : 1); ++mirror) {
    for (DartId s = 0; s < g.dart_count(); ++s) {
      auto c = detail::traversal_code(g, s, mirror != 0, have ? &result.code : nullptr);
      if (c.empty()) continue;
      if (!have || c < result.code) {
        result.code = std::move(c);
        have = true;
      }
    }
  }
  return result;
}

/// Extends base -> target to a dart bijection g -> h that commutes with twin
/// and maps rotations of g to rotations of h (reversed when `reversing`).
/// `h_rotation_next(d)` supplies h's rotation successor.
template <typename NextFn, typename PrevFn>
std::optional<std::vector<DartId>> propagate_dart_map(const SphericalMap& g, int h_darts,
                                                      NextFn&& h_next, PrevFn&& h_prev,
                                                      DartId base, DartId target, bool reversing) {
  const int n = g.dart_count();
  if (n != h_darts) return std::nullopt;
  std::vector<DartId> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<DartId> queue{base};
  image[base] = target;
  used[target] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    DartId d = queue[i];
    DartId t = image[d];
    std::pair<DartId, DartId> steps[2] = {
        {SphericalMap::twin(d), SphericalMap::twin(t)},
        {g.next_at_vertex(d), reversing ? h_prev(t) : h_next(t)}};
    for (auto [src, dst] : steps) {
      if (image[src] == -1) {
        if (used[dst]) return std::nullopt;
        image[src] = dst;
        used[dst] = 1;
        queue.push_back(src);
      } else if (image[src] != dst) {
        return std::nullopt;
      }
    }
  }
  if (static_cast<int>(queue.size()) != n) return std::nullopt;
  return image;
}

/// Dart bijection g -> h commuting with twin and rotation (or reversed
/// rotation, allowed only for OrientationClass::Full).
inline std::optional<std::vector<DartId>> is_isomorphic(const SphericalMap& g, const SphericalMap& h,
                                                        OrientationClass cls = OrientationClass::Full) {
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() ||
      g.face_count() != h.face_count())
    return std::nullopt;
  auto next = [&h](DartId d) { return h.next_at_vertex(d); };
  auto prev = [&h](DartId d) { return h.prev_at_vertex(d); };
  for (int reversing = 0; reversing < (cls == OrientationClass::Full ? 2 : 1); ++reversing)
    for (DartId t = 0; t < h.dart_count(); ++t)
      if (g.degree(g.origin(0)) == h.degree(h.origin(t)))
        if (auto m = propagate_dart_map(g, h.dart_count(), next, prev, 0, t, reversing != 0)) return m;
  return std::nullopt;
}

/// Same map with every rotation reversed.
inline SphericalMap mirror_image(const SphericalMap& g) {
  auto rot = g.rotations();
  for (auto& r : rot) std::reverse(r.begin(), r.end());
  return SphericalMap::from_rotation_system(g.vertex_count(), std::move(rot), g.labels());
}

/// Applies a relabeling of dart ids that keeps twin pairs together:
/// edge e -> edge_perm[e], and flips the dart pair of edges in `flip`.
inline SphericalMap relabel_darts(const SphericalMap& g, const std::vector<int>& edge_perm,
                                  const std::vector<char>& flip,
                                  const std::vector<VertexId>& vertex_perm) {
  auto map_dart = [&](DartId d) {
    int e = SphericalMap::edge_of(d);
    int side = (d & 1) ^ (flip.empty() ? 0 : flip[e]);
    return 2 * edge_perm[e] + side;
  };
  std::vector<std::vector<DartId>> rot(g.vertex_count());
  std::vector<std::string> labels(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& r = rot[vertex_perm[v]];
    for (DartId d : g.rotation(v)) r.push_back(map_dart(d));
    labels[vertex_perm[v]] = g.label(v);
  }
  return SphericalMap::from_rotation_system(g.vertex_count(), std::move(rot), std::move(labels));
}

}  // namespace sdmap
