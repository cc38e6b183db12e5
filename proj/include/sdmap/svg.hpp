#pragma once

// SVG figures. Sphere drawings use stereographic projection from the north
// pole; maps without coordinates get a Tutte barycentric layout.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sdmap/map.hpp"
#include "sdmap/orbifold.hpp"

namespace sdmap {

namespace detail {

struct Canvas {
  double scale = 120;
  std::ostringstream body;

  static std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
  }
  std::string pt(double x, double y) const { return num(500 + scale * x) + "," + num(500 - scale * y); }

  void polyline(const std::vector<Eigen::Vector2d>& ps, const char* cls) {
    if (ps.size() < 2) return;
    body << "<polyline class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < ps.size(); ++i) body << (i ? " " : "") << pt(ps[i].x(), ps[i].y());
    body << "\"/>\n";
  }
  void dot(const Eigen::Vector2d& p, const char* cls, double r) {
    auto s = pt(p.x(), p.y());
    auto comma = s.find(',');
    body << "<circle class=\"" << cls << "\" cx=\"" << s.substr(0, comma) << "\" cy=\"" << s.substr(comma + 1)
         << "\" r=\"" << num(r) << "\"/>\n";
  }

  std::string finish() const {
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\" width=\"1000\" height=\"1000\">\n"
       << "<style>\n"
       << ".primal{fill:none;stroke:#000;stroke-width:2.5}\n"
       << ".dual{fill:none;stroke:#888;stroke-width:1.5;stroke-dasharray:6 4}\n"
       << ".vprimal{fill:#fff;stroke:#000;stroke-width:2}\n"
       << ".vdual{fill:#fff;stroke:#888;stroke-width:1.5}\n"
       << ".crossing{fill:#000}\n"
       << "</style>\n"
       << "<rect width=\"1000\" height=\"1000\" fill=\"#fff\"/>\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

/// Stereographic projection from the north pole; nullopt near the pole.
inline std::optional<Eigen::Vector2d> project(const Vec3& p) {
  if (p.z() > 1 - 1e-6) return std::nullopt;
  return Eigen::Vector2d(p.x() / (1 - p.z()), p.y() / (1 - p.z()));
}

/// Projected samples of the geodesic a -> b, stopping near the pole.
inline std::vector<Eigen::Vector2d> project_arc(const Vec3& a, const Vec3& b, double limit) {
  std::vector<Eigen::Vector2d> out;
  const double ang = std::acos(std::clamp(a.dot(b), -1.0, 1.0));
  const int n = std::max(2, static_cast<int>(ang / 0.02));
  for (int i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) / n;
    Vec3 p = std::abs(std::sin(ang)) < 1e-12 ? a
                                             : Vec3((std::sin((1 - t) * ang) * a + std::sin(t * ang) * b) / std::sin(ang));
    auto q = project(p);
    if (!q || q->norm() > limit) break;
    out.push_back(*q);
  }
  return out;
}

}  // namespace detail

/// The graph of squares of an expansion: primal and dual half-edges meeting
/// at crossing dots.
inline std::string render_expansion_svg(const ExpandedDoodle& ex) {
  detail::Canvas c;
  const double limit = 4.0;
  const auto& sq = ex.squares;
  for (DartId d = 0; d < sq.dart_count(); d += 2) {
    VertexId a = sq.origin(d), b = sq.head(d);
    if (ex.colors[a] == PointColor::Crossing) std::swap(a, b);
    auto arc = detail::project_arc(ex.positions[a], ex.positions[b], limit);
    if (ex.colors[a] == PointColor::Primal) {
      c.polyline(arc, "primal");
    } else {
      // draw from the crossing so arcs to the pole still show
      auto back = detail::project_arc(ex.positions[b], ex.positions[a], limit);
      c.polyline(back, "dual");
    }
  }
  for (std::size_t v = 0; v < ex.positions.size(); ++v) {
    auto p = detail::project(ex.positions[v]);
    if (!p || p->norm() > limit) continue;
    switch (ex.colors[v]) {
      case PointColor::Primal: c.dot(*p, "vprimal", 7); break;
      case PointColor::Dual: c.dot(*p, "vdual", 5); break;
      case PointColor::Crossing: c.dot(*p, "crossing", 3); break;
    }
  }
  return c.finish();
}

/// Tutte layout with the largest face outside; dual vertices at face
/// centroids, the outer face's dual vertex omitted.
inline std::string render_map_svg(const SphericalMap& g) {
  FaceId outer = 0;
  for (FaceId f = 1; f < g.face_count(); ++f)
    if (g.face_degree(f) > g.face_degree(outer)) outer = f;
  const auto boundary = g.face_vertices(outer);
  const int n = g.vertex_count();
  std::vector<int> fixed(n, -1);
  for (std::size_t i = 0; i < boundary.size(); ++i) fixed[boundary[i]] = static_cast<int>(i);

  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(n, 2);
  const double pi = std::numbers::pi;
  for (VertexId v = 0; v < n; ++v) {
    A(v, v) = 1;
    if (fixed[v] >= 0) {
      // boundary face vertices run clockwise seen from inside the outer face
      const double t = -2 * pi * fixed[v] / static_cast<double>(boundary.size());
      rhs(v, 0) = 3.8 * std::cos(t);
      rhs(v, 1) = 3.8 * std::sin(t);
      continue;
    }
    const auto nb = g.neighbors(v);
    for (VertexId w : nb) A(v, w) -= 1.0 / static_cast<double>(nb.size());
  }
  Eigen::MatrixXd xy = A.partialPivLu().solve(rhs);
  auto at = [&](VertexId v) { return Eigen::Vector2d(xy(v, 0), xy(v, 1)); };

  detail::Canvas c;
  std::vector<Eigen::Vector2d> centroid(g.face_count(), Eigen::Vector2d::Zero());
  for (FaceId f = 0; f < g.face_count(); ++f) {
    for (VertexId v : g.face_vertices(f)) centroid[f] += at(v);
    centroid[f] /= static_cast<double>(g.face_degree(f));
  }
  for (DartId d = 0; d < g.dart_count(); d += 2) {
    const Eigen::Vector2d a = at(g.origin(d)), b = at(g.head(d)), mid = (a + b) / 2;
    c.polyline({a, b}, "primal");
    for (DartId s : {d, SphericalMap::twin(d)}) {
      const FaceId f = g.face_of(s);
      if (f != outer) c.polyline({centroid[f], mid}, "dual");
    }
  }
  for (DartId d = 0; d < g.dart_count(); d += 2) c.dot((at(g.origin(d)) + at(g.head(d))) / 2, "crossing", 3);
  for (VertexId v = 0; v < n; ++v) c.dot(at(v), "vprimal", 7);
  for (FaceId f = 0; f < g.face_count(); ++f)
    if (f != outer) c.dot(centroid[f], "vdual", 5);
  return c.finish();
}

}  // namespace sdmap
