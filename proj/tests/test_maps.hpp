#pragma once

// Map fixtures for tests: convex polyhedra from coordinates and stellar
// face insertion for asymmetric maps.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <numeric>
#include <random>

#include "sdmap/families.hpp"
#include "sdmap/map.hpp"

namespace sdmap::testing {

using Vec3 = Eigen::Vector3d;

/// Rotation at each vertex = neighbors sorted counterclockwise around the
/// outward direction (the polyhedron must be centered at the origin).
inline SphericalMap convex_map(const std::vector<Vec3>& pts, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(pts.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<VertexId>> ccw(n);
  for (int v = 0; v < n; ++v) {
    Vec3 normal = pts[v].normalized();
    Vec3 e1 = (pts[adj[v][0]] - pts[v]);
    e1 = (e1 - e1.dot(normal) * normal).normalized();
    Vec3 e2 = normal.cross(e1);
    std::vector<std::pair<double, int>> order;
    for (int w : adj[v]) {
      Vec3 d = pts[w] - pts[v];
      order.emplace_back(std::atan2(d.dot(e2), d.dot(e1)), w);
    }
    std::sort(order.begin(), order.end());
    for (auto [ang, w] : order) ccw[v].push_back(w);
  }
  return from_neighbor_lists(ccw);
}

inline std::vector<std::pair<int, int>> min_distance_edges(const std::vector<Vec3>& pts) {
  double best = 1e300;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, (pts[i] - pts[j]).norm());
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if ((pts[i] - pts[j]).norm() < best * (1 + 1e-6)) out.emplace_back(int(i), int(j));
  return out;
}

inline SphericalMap tetrahedron() {
  std::vector<Vec3> p{{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  return convex_map(p, min_distance_edges(p));
}

inline SphericalMap cube() {
  std::vector<Vec3> p;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) p.emplace_back(x, y, z);
  return convex_map(p, min_distance_edges(p));
}

inline SphericalMap octahedron() {
  std::vector<Vec3> p{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return convex_map(p, min_distance_edges(p));
}

inline SphericalMap icosahedron() {
  const double t = (1 + std::sqrt(5.0)) / 2;
  std::vector<Vec3> p;
  for (double a : {-1.0, 1.0})
    for (double b : {-t, t}) {
      p.emplace_back(0, a, b);
      p.emplace_back(a, b, 0);
      p.emplace_back(b, 0, a);
    }
  return convex_map(p, min_distance_edges(p));
}

inline SphericalMap prism(int n) {
  std::vector<Vec3> p;
  std::vector<std::pair<int, int>> e;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < n; ++i) {
      double a = 2 * std::numbers::pi * i / n;
      p.emplace_back(std::cos(a), std::sin(a), k ? 0.7 : -0.7);
    }
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(n + i, n + (i + 1) % n);
    e.emplace_back(i, n + i);
  }
  return convex_map(p, e);
}

inline SphericalMap antiprism(int n) {
  std::vector<Vec3> p;
  std::vector<std::pair<int, int>> e;
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < n; ++i) {
      double a = 2 * std::numbers::pi * (i + 0.5 * k) / n;
      p.emplace_back(std::cos(a), std::sin(a), k ? 0.6 : -0.6);
    }
  for (int i = 0; i < n; ++i) {
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(n + i, n + (i + 1) % n);
    e.emplace_back(i, n + i);
    e.emplace_back(n + i, (i + 1) % n);
  }
  return convex_map(p, e);
}

inline SphericalMap pyramid(int n) {
  std::vector<Vec3> p;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    double a = 2 * std::numbers::pi * i / n;
    p.emplace_back(std::cos(a), std::sin(a), -0.3);
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n);
  }
  p.emplace_back(0, 0, 1);
  return convex_map(p, e);
}

inline SphericalMap bipyramid(int n) {
  std::vector<Vec3> p;
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) {
    double a = 2 * std::numbers::pi * i / n;
    p.emplace_back(std::cos(a), std::sin(a), 0);
    e.emplace_back(i, (i + 1) % n);
    e.emplace_back(i, n);
    e.emplace_back(i, n + 1);
  }
  p.emplace_back(0, 0, 1);
  p.emplace_back(0, 0, -1);
  return convex_map(p, e);
}

/// Inserts a new vertex into face f joined to every boundary vertex.
inline SphericalMap stellate(const SphericalMap& g, FaceId f) {
  const int n = g.vertex_count();
  std::vector<std::vector<VertexId>> ccw(n + 1);
  for (VertexId v = 0; v < n; ++v) {
    for (DartId d : g.rotation(v)) {
      // face f lies between prev_at_vertex(d) and d at origin(d)
      if (g.face_of(d) == f) ccw[v].push_back(n);
      ccw[v].push_back(g.head(d));
    }
  }
  for (DartId d : g.face_darts(f)) ccw[n].push_back(g.origin(d));
  auto labels = g.labels();
  labels.push_back("v" + std::to_string(n));
  return from_neighbor_lists(ccw, labels);
}

/// A triangulation with trivial automorphism group (hence chiral).
inline SphericalMap asymmetric_triangulation() {
  SphericalMap g = stellate(octahedron(), 0);
  g = stellate(g, 0);
  g = stellate(g, 0);
  return stellate(g, 1);
}

inline SphericalMap random_relabeling(const SphericalMap& g, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> edges(g.edge_count());
  std::iota(edges.begin(), edges.end(), 0);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<char> flip(g.edge_count());
  for (auto& f : flip) f = static_cast<char>(rng() % 2);
  std::vector<VertexId> verts(g.vertex_count());
  std::iota(verts.begin(), verts.end(), 0);
  std::shuffle(verts.begin(), verts.end(), rng);
  return relabel_darts(g, edges, flip, verts);
}

/// Mixed corpus: platonic solids, prisms, pyramids, family members,
/// chiral and relabeled maps.
inline std::vector<SphericalMap> corpus() {
  std::vector<SphericalMap> c{tetrahedron(), cube(), octahedron(), icosahedron()};
  for (int n = 3; n <= 6; ++n) c.push_back(prism(n));
  for (int n = 3; n <= 5; ++n) c.push_back(antiprism(n));
  for (int n = 3; n <= 7; ++n) c.push_back(pyramid(n));
  for (int n = 3; n <= 5; ++n) c.push_back(bipyramid(n));
  for (int q = 3; q <= 7; ++q) c.push_back(build_wheel(q).map);
  c.push_back(build_multi_hyperwheel({4, 1}).map);
  c.push_back(build_multi_hyperwheel({4, 2}).map);
  c.push_back(build_multi_wheel({3, 2}).map);
  c.push_back(build_multi_wheel({5, 2}).map);
  c.push_back(dual_map(prism(5)));
  c.push_back(asymmetric_triangulation());
  c.push_back(mirror_image(asymmetric_triangulation()));
  c.push_back(random_relabeling(cube(), 7));
  c.push_back(stellate(cube(), 0));
  c.push_back(stellate(octahedron(), 3));
  return c;
}

}  // namespace sdmap::testing
