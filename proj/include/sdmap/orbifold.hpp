#pragma once

// Fundamental regions of the ten antipodal pairings, colored doodles and
// their expansion to the graph of squares by the Dual group.
//
// Regions are unions of convex spherical polygons, each given by inward
// half-space normals (x in cell iff n . x >= 0 for every n). R1 is a
// fundamental region of Aut (Gamma) and R2 one of Dual (Delta), R2 in R1.

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "sdmap/coxeter.hpp"
#include "sdmap/error.hpp"
#include "sdmap/families.hpp"
#include "sdmap/map.hpp"

namespace sdmap {

struct ConvexCell {
  std::vector<Vec3> normals;

  bool contains(const Vec3& x, double tol = 1e-9) const {
    for (const auto& n : normals)
      if (n.dot(x) < -tol) return false;
    return true;
  }

  ConvexCell transformed(const Mat3& g) const {
    ConvexCell c;
    for (const auto& n : normals) c.normals.push_back(g * n);
    return c;
  }

  /// Gauss-Bonnet: sum of interior angles minus (k - 2) pi.
  double area() const {
    std::vector<Vec3> ns;
    for (const auto& n : normals) {
      Vec3 u = n.normalized();
      bool dup = false;
      for (const auto& m : ns) dup = dup || (u - m).norm() < 1e-12;
      if (!dup) ns.push_back(u);
    }
    if (ns.empty()) return 4 * std::numbers::pi;
    std::vector<Vec3> verts;
    for (std::size_t i = 0; i < ns.size(); ++i)
      for (std::size_t j = i + 1; j < ns.size(); ++j) {
        Vec3 c = ns[i].cross(ns[j]);
        if (c.norm() < 1e-12) continue;
        for (double s : {1.0, -1.0}) {
          Vec3 v = s * c.normalized();
          if (!contains(v, 1e-12)) continue;
          bool dup = false;
          for (const auto& w : verts) dup = dup || (v - w).norm() < 1e-9;
          if (!dup) verts.push_back(v);
        }
      }
    if (verts.empty()) return ns.size() == 1 ? 2 * std::numbers::pi : 0.0;
    double sum = 0;
    for (const auto& v : verts) {
      double span = 0;
      std::vector<Vec3> active;
      for (const auto& n : ns)
        if (std::abs(n.dot(v)) < 1e-9) active.push_back(n);
      for (std::size_t i = 0; i < active.size(); ++i)
        for (std::size_t j = i + 1; j < active.size(); ++j)
          span = std::max(span, std::acos(std::clamp(active[i].dot(active[j]), -1.0, 1.0)));
      sum += std::numbers::pi - span;
    }
    return sum - (static_cast<double>(verts.size()) - 2) * std::numbers::pi;
  }
};

struct SphericalRegion {
  std::vector<ConvexCell> cells;

  bool contains(const Vec3& x, double tol = 1e-9) const {
    for (const auto& c : cells)
      if (c.contains(x, tol)) return true;
    return false;
  }
  double area() const {
    double a = 0;
    for (const auto& c : cells) a += c.area();
    return a;
  }
};

enum class MarkKind { AutMirror, IsoMirror, RotationCenter, RotatoryReflection };

inline std::string mark_name(MarkKind k) {
  switch (k) {
    case MarkKind::AutMirror: return "aut-mirror";
    case MarkKind::IsoMirror: return "iso-mirror";
    case MarkKind::RotationCenter: return "rotation-center";
    case MarkKind::RotatoryReflection: return "rotatory-reflection";
  }
  return "?";
}

/// A generator drawn on the orbifold: mirror normal, or rotation axis with
/// its angle.
struct RegionMark {
  MarkKind kind = MarkKind::AutMirror;
  Vec3 direction = Vec3::UnitZ();
  double angle = 0;
  bool in_aut = true;
};

struct FundamentalRegion {
  PairingInstance pairing;
  SphericalRegion r1;  // for Aut
  SphericalRegion r2;  // for Dual
  std::vector<Mat3> aut_generators;
  std::vector<Mat3> iso_generators;
  std::vector<RegionMark> marks;

  const IsometryGroup& aut_group() const { return pairing.aut_group; }
  const IsometryGroup& dual_group() const { return pairing.dual_group; }
};

namespace detail {

inline RegionMark classify_isometry(const Mat3& g, bool in_aut) {
  RegionMark m;
  m.in_aut = in_aut;
  Eigen::EigenSolver<Mat3> es(g);
  auto axis_for = [&](double eigen) {
    Vec3 best = Vec3::UnitZ();
    double err = 1e300;
    for (int i = 0; i < 3; ++i) {
      double e = std::abs(es.eigenvalues()[i] - std::complex<double>(eigen, 0));
      if (e < err) {
        err = e;
        best = es.eigenvectors().col(i).real().normalized();
      }
    }
    return best;
  };
  if (g.determinant() > 0) {
    m.kind = MarkKind::RotationCenter;
    m.direction = axis_for(1);
    m.angle = std::acos(std::clamp((g.trace() - 1) / 2, -1.0, 1.0));
  } else if (std::abs(g.trace() - 1) < 1e-6) {
    m.kind = in_aut ? MarkKind::AutMirror : MarkKind::IsoMirror;
    m.direction = axis_for(-1);
  } else {
    m.kind = MarkKind::RotatoryReflection;
    m.direction = axis_for(-1);
    // g = rotation(theta) * reflection, trace = 2 cos theta - 1
    m.angle = std::acos(std::clamp((g.trace() + 1) / 2, -1.0, 1.0));
  }
  return m;
}

inline ConvexCell lune(double from, double to) {
  // from <= phi <= to, width below pi
  return {{Vec3(-std::sin(from), std::cos(from), 0), Vec3(std::sin(to), -std::cos(to), 0)}};
}

inline ConvexCell with(ConvexCell c, const Vec3& n) {
  c.normals.push_back(n);
  return c;
}

}  // namespace detail

/// The fundamental regions of an antipodal pairing instance.
inline FundamentalRegion region_catalog(const PairingInstance& inst) {
  if (!inst.antipodal())
    throw Error(Errc::NotAntipodalPairing, inst.name() + " is not an antipodal pairing");
  const double pi = std::numbers::pi;
  const int q = inst.q;
  const Vec3 up = Vec3::UnitZ();
  FundamentalRegion fr;
  fr.pairing = inst;
  switch (inst.record.id) {
    case 1: {  // [q] < [2,q]
      auto l = detail::lune(0, pi / q);
      fr.r1.cells = {l};
      fr.r2.cells = {detail::with(l, up)};
      break;
    }
    case 3: {  // [q] < [2+,2q]
      auto l = detail::lune(-pi / (2 * q), pi / (2 * q));
      fr.r1.cells = {l};
      fr.r2.cells = {detail::with(l, up)};
      break;
    }
    case 4: {  // [q]+ < [2,q+]
      ConvexCell l = q == 2 ? ConvexCell{{Vec3::UnitY()}} : detail::lune(0, 2 * pi / q);
      fr.r1.cells = {l};
      fr.r2.cells = {detail::with(l, up)};
      break;
    }
    case 5: {  // [q]+ < [2+,2q+], Delta = <tau>
      auto half = detail::lune(0, pi / q);
      const Mat3 tau = inst.dual_group.generators().front();
      fr.r2.cells = {half};
      fr.r1.cells = {half, half.transformed(tau)};
      break;
    }
    case 11: {  // [2,2]+ < [2,2]
      fr.r1.cells = {{{Vec3(1, 1, 0), Vec3(0, 1, 1), Vec3(1, 0, 1)}}};
      fr.r2.cells = {{{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()}}};
      break;
    }
    case 12: {  // [2+,4] < [2,4]
      fr.r1.cells = {detail::with(detail::lune(-pi / 4, pi / 4), up)};
      fr.r2.cells = {detail::with(detail::lune(0, pi / 4), up)};
      break;
    }
    case 18: {  // [2+,4+] < [2,4+]
      auto l = detail::lune(0, pi / 2);
      fr.r1.cells = {l};
      fr.r2.cells = {detail::with(l, up)};
      break;
    }
    case 21: {  // [1] < [2,2+]
      fr.r1.cells = {{{up}}};
      fr.r2.cells = {{{up, Vec3::UnitY()}}};
      break;
    }
    case 22: {  // [3,3] < [3,4]
      fr.r1.cells = {{{Vec3(1, -1, 0), Vec3(0, 1, -1), Vec3(0, 1, 1)}}};
      fr.r2.cells = {{{Vec3(1, -1, 0), Vec3(0, 1, -1), Vec3(0, 0, 1)}}};
      break;
    }
    case 24: {  // [3,3]+ < [3+,4]
      fr.r1.cells = {{{Vec3(0, -1, 1), Vec3(0, 1, 1), Vec3(1, -1, 0), Vec3(1, 1, 0)}}};
      fr.r2.cells = {{{Vec3(0, 1, 0), Vec3(0, -1, 1), Vec3(1, -1, 0)}}};
      break;
    }
    default:
      throw Error(Errc::NotAntipodalPairing, inst.name() + " has no region in the catalog");
  }
  fr.aut_generators = inst.aut_group.generators();
  for (const auto& g : inst.dual_group.generators())
    if (!inst.aut_group.contains(g)) fr.iso_generators.push_back(g);
  if (fr.iso_generators.empty())
    for (const auto& g : inst.dual_group.elements())
      if (!inst.aut_group.contains(g)) {
        fr.iso_generators.push_back(g);
        break;
      }
  for (const auto& g : fr.aut_generators)
    if (!approx_equal(g, Mat3::Identity())) fr.marks.push_back(detail::classify_isometry(g, true));
  for (const auto& g : fr.iso_generators) fr.marks.push_back(detail::classify_isometry(g, false));
  return fr;
}

/// The ten antipodal pairings as (catalog record, parity-correct q) pairs.
inline std::vector<PairingInstance> antipodal_instances(int q_even, int q_odd) {
  std::vector<PairingInstance> out;
  for (const auto& r : pairing_catalog()) {
    if (!r.infinite) {
      auto inst = instantiate(r);
      if (inst.antipodal()) out.push_back(std::move(inst));
      continue;
    }
    const int q = r.parity == Parity::Odd ? q_odd : q_even;
    auto inst = instantiate(r, q);
    if (inst.antipodal()) out.push_back(std::move(inst));
  }
  return out;
}

struct TilingReport {
  double area_total = 0;  // area x group order
  int samples = 0;
  int skipped = 0;  // too close to a copy's boundary
  int bad = 0;      // covered zero or several times
  bool ok(double tol = 1e-6) const { return std::abs(area_total - 4 * std::numbers::pi) < tol && bad == 0; }
};

/// Area check plus a sampled cover-exactly-once check of the orbit of R.
inline TilingReport check_tiling(const SphericalRegion& r, const IsometryGroup& g, int samples = 2000,
                                 unsigned seed = 12345) {
  TilingReport rep;
  rep.area_total = r.area() * g.order();
  std::mt19937 rng(seed);
  std::normal_distribution<double> nd;
  std::vector<Mat3> inverses;
  for (const auto& m : g.elements()) inverses.push_back(m.transpose());
  for (int s = 0; s < samples; ++s) {
    Vec3 p(nd(rng), nd(rng), nd(rng));
    p.normalize();
    int inside = 0;
    bool near = false;
    for (const auto& inv : inverses) {
      Vec3 x = inv * p;
      for (const auto& c : r.cells) {
        double m = 1e300;
        for (const auto& n : c.normals) m = std::min(m, n.normalized().dot(x));
        if (m > 1e-7) ++inside;
        else if (m > -1e-7) near = true;
      }
    }
    ++rep.samples;
    if (near) {
      ++rep.skipped;
      continue;
    }
    if (inside != 1) ++rep.bad;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Doodles

enum class PointColor { Primal, Dual, Crossing };

inline std::string color_name(PointColor c) {
  switch (c) {
    case PointColor::Primal: return "primal";
    case PointColor::Dual: return "dual";
    case PointColor::Crossing: return "crossing";
  }
  return "?";
}

inline PointColor parse_color(const std::string& s) {
  if (s == "primal") return PointColor::Primal;
  if (s == "dual") return PointColor::Dual;
  if (s == "crossing") return PointColor::Crossing;
  throw Error(Errc::FormatError, "unknown color '" + s + "'");
}

inline PointColor swap_color(PointColor c) {
  if (c == PointColor::Primal) return PointColor::Dual;
  if (c == PointColor::Dual) return PointColor::Primal;
  return c;
}

struct DoodlePoint {
  std::string label;
  Vec3 position;
  PointColor color = PointColor::Primal;
  std::string wall;  // e.g. "wall0,wall2"; empty for interior points
};

/// A drawing inside R1: geodesic arcs between labeled points.
struct ColoredDoodle {
  std::vector<DoodlePoint> points;
  std::vector<std::pair<int, int>> arcs;

  int add(std::string label, const Vec3& p, PointColor c) {
    points.push_back({std::move(label), p.normalized(), c, ""});
    return static_cast<int>(points.size()) - 1;
  }
  void join(int a, int b) { arcs.emplace_back(a, b); }

  std::optional<int> find(const std::string& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].label == label) return static_cast<int>(i);
    return std::nullopt;
  }
};

/// Writes wall tags: indices of the R1 half-spaces a point lies on.
inline void tag_walls(ColoredDoodle& d, const FundamentalRegion& fr) {
  for (auto& p : d.points) {
    p.wall.clear();
    int idx = 0;
    for (const auto& c : fr.r1.cells)
      for (const auto& n : c.normals) {
        if (std::abs(n.normalized().dot(p.position)) < 1e-9) {
          if (!p.wall.empty()) p.wall += ",";
          p.wall += "wall" + std::to_string(idx);
        }
        ++idx;
      }
  }
}

inline Vec3 sphere_point(double phi, double lat) {
  return {std::cos(lat) * std::cos(phi), std::cos(lat) * std::sin(phi), std::sin(lat)};
}

/// The pairing a family's doodle is drawn for.
inline PairingInstance family_pairing(Family f, const FamilyParams& params) {
  const auto& cat = pairing_catalog();
  switch (f) {
    case Family::HyperWheel:
      if (params.q < 4 || params.q % 2 != 0)
        throw Error(Errc::BadParams, "hyperwheel doodles need even q >= 4");
      return instantiate(cat[0], params.q);  // [q] < [2,q]
    case Family::MultiWheel:
    case Family::Wheel:
      if (params.q < 3 || params.q % 2 == 0) throw Error(Errc::BadParams, "multi wheel doodles need odd q >= 3");
      return instantiate(cat[2], params.q);  // [q] < [2+,2q]
  }
  throw Error(Errc::BadParams, "unknown family");
}

inline FundamentalRegion region_for_family(Family f, const FamilyParams& params) {
  return region_catalog(family_pairing(f, params));
}

namespace detail {

/// Hyperwheel: a-column on phi = 0, b-column on phi = pi/q, cusp at the
/// south pole; the southern half is the mirror image of the northern half
/// in the equator with colors swapped.
inline ColoredDoodle hyperwheel_doodle(int q, int l) {
  const double pi = std::numbers::pi, w = pi / q, s = (pi / 2) / (2 * l + 1);
  auto beta = [&](int j) { return (2 * j - 1) * s; };
  auto theta = [&](int j) { return 2 * j * s; };
  ColoredDoodle d;
  std::vector<int> A(l + 2), B(l + 2), X(l + 1), Y(l + 1);
  for (int j = 1; j <= l; ++j) A[j] = d.add("a^" + std::to_string(j), sphere_point(0, theta(j)), PointColor::Primal);
  for (int j = 1; j <= l; ++j) B[j] = d.add("b*^" + std::to_string(j), sphere_point(w, beta(j)), PointColor::Dual);
  const int N = d.add("c*", Vec3::UnitZ(), PointColor::Dual);
  for (int j = 1; j < l; ++j) X[j] = d.add("x^" + std::to_string(j), sphere_point(0, beta(j + 1)), PointColor::Crossing);
  for (int j = 1; j <= l; ++j) Y[j] = d.add("y^" + std::to_string(j), sphere_point(w, theta(j)), PointColor::Crossing);
  const int E = d.add("e", sphere_point(w / 2, 0), PointColor::Crossing);
  for (int j = 1; j < l; ++j) {
    d.join(A[j], X[j]);
    d.join(X[j], A[j + 1]);
    d.join(B[j + 1], X[j]);
  }
  for (int j = 1; j <= l; ++j) {
    d.join(A[j], Y[j]);
    d.join(B[j], Y[j]);
    d.join(Y[j], j < l ? B[j + 1] : N);
  }
  d.join(A[1], E);
  d.join(B[1], E);

  // southern half
  const std::size_t north_points = d.points.size(), north_arcs = d.arcs.size();
  std::vector<int> image(north_points);
  for (std::size_t i = 0; i < north_points; ++i) {
    const auto p = d.points[i];
    if (std::abs(p.position.z()) < 1e-12) {
      image[i] = static_cast<int>(i);
      continue;
    }
    std::string lab = p.label;
    if (lab == "c*") lab = "c";
    else if (lab.rfind("b*", 0) == 0) lab = "b" + lab.substr(2);
    else if (lab.rfind("a^", 0) == 0) lab = "a*" + lab.substr(1);
    else lab += "'";
    image[i] = d.add(lab, Vec3(p.position.x(), p.position.y(), -p.position.z()), swap_color(p.color));
  }
  for (std::size_t k = 0; k < north_arcs; ++k) d.join(image[d.arcs[k].first], image[d.arcs[k].second]);
  return d;
}

/// Multi wheel: primal column on phi = pi/(2q) from the cusp (south pole),
/// dual column on phi = -pi/(2q) up to the north pole; the half-turn about
/// the x-axis exchanges them.
inline ColoredDoodle multiwheel_doodle(int q, int l) {
  const double pi = std::numbers::pi, wp = pi / (2 * q), h = pi / (l + 0.5);
  auto lambda = [&](int j) { return -pi / 2 + j * h; };
  auto mu = [&](int m) { return lambda(m) + h / 2; };
  ColoredDoodle d;
  std::vector<int> a(l + 1), D(l + 1), X(l), Y(l + 1);
  a[0] = d.add("c", -Vec3::UnitZ(), PointColor::Primal);
  for (int j = 1; j <= l; ++j) a[j] = d.add("a^" + std::to_string(j), sphere_point(wp, lambda(j)), PointColor::Primal);
  for (int m = 0; m < l; ++m) D[m] = d.add("d^" + std::to_string(m), sphere_point(-wp, mu(m)), PointColor::Dual);
  D[l] = d.add("c*", Vec3::UnitZ(), PointColor::Dual);
  for (int j = 0; j < l; ++j) X[j] = d.add("x^" + std::to_string(j), sphere_point(wp, mu(j)), PointColor::Crossing);
  for (int j = 1; j <= l; ++j) Y[j] = d.add("y^" + std::to_string(j), sphere_point(-wp, lambda(j)), PointColor::Crossing);
  for (int j = 0; j < l; ++j) {
    d.join(a[j], X[j]);
    d.join(X[j], a[j + 1]);
    d.join(D[j], X[j]);
  }
  for (int j = 1; j <= l; ++j) {
    d.join(D[j - 1], Y[j]);
    d.join(Y[j], D[j]);
    d.join(a[j], Y[j]);
  }
  return d;
}

}  // namespace detail

inline ColoredDoodle doodle_for_family(Family f, const FamilyParams& params) {
  auto fr = region_for_family(f, params);
  if (params.l < 1) throw Error(Errc::BadParams, "l must be >= 1");
  if (f == Family::Wheel && params.l != 1) throw Error(Errc::BadParams, "a wheel has one level");
  ColoredDoodle d = f == Family::HyperWheel ? detail::hyperwheel_doodle(params.q, params.l)
                                            : detail::multiwheel_doodle(params.q, params.l);
  tag_walls(d, fr);
  return d;
}

// ---------------------------------------------------------------------------
// Expansion

struct ExpandedDoodle {
  SphericalMap squares;  // graph of squares
  std::vector<PointColor> colors;
  std::vector<Vec3> positions;

  SphericalMap primal;
  std::vector<Vec3> primal_positions;
  std::vector<Vec3> primal_face_positions;  // dual point inside each primal face
  SphericalMap dual;
  std::vector<Vec3> dual_positions;
};

namespace detail {

/// Counterclockwise (seen from outside) order of neighbor positions around p.
inline std::vector<int> ccw_order(const Vec3& p, const std::vector<Vec3>& targets) {
  Vec3 e1 = Vec3::UnitX() - p.x() * p;
  if (e1.norm() < 0.5) e1 = Vec3::UnitY() - p.y() * p;
  e1.normalize();
  Vec3 e2 = p.cross(e1);
  std::vector<std::pair<double, int>> ang;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    Vec3 t = targets[i] - targets[i].dot(p) * p;
    ang.emplace_back(std::atan2(t.dot(e2), t.dot(e1)), static_cast<int>(i));
  }
  std::sort(ang.begin(), ang.end());
  std::vector<int> out;
  for (auto [a, i] : ang) out.push_back(i);
  return out;
}

/// Submap on one color class: each crossing joins its two neighbors of
/// that color.
inline SphericalMap color_submap(const SphericalMap& sq, const std::vector<PointColor>& colors, PointColor want,
                                 std::vector<int>& new_id, std::vector<int>& old_id) {
  const int n = sq.vertex_count();
  new_id.assign(n, -1);
  old_id.clear();
  std::vector<std::string> labels;
  for (int v = 0; v < n; ++v)
    if (colors[v] == want) {
      new_id[v] = static_cast<int>(old_id.size());
      old_id.push_back(v);
      labels.push_back(sq.label(v));
    }
  auto other = [&](VertexId x, VertexId from) {
    for (VertexId w : sq.neighbors(x))
      if (w != from && colors[w] == want) return w;
    throw Error(Errc::MergeAmbiguity, "crossing " + sq.label(x) + " lacks a second " + color_name(want) + " neighbor");
  };
  std::vector<std::vector<VertexId>> ccw(old_id.size());
  for (std::size_t i = 0; i < old_id.size(); ++i) {
    for (VertexId x : sq.neighbors(old_id[i])) {
      if (colors[x] != PointColor::Crossing)
        throw Error(Errc::MergeAmbiguity, "vertex " + sq.label(old_id[i]) + " touches a non-crossing point");
      ccw[i].push_back(new_id[other(x, old_id[i])]);
    }
  }
  return from_neighbor_lists(ccw, labels);
}

}  // namespace detail

inline constexpr double kMergeTolerance = 3e-7;

/// Places g . doodle for every g in Dual (Aut keeps colors, Iso swaps
/// primal and dual), merges coincident points and arcs, and reads off the
/// graph of squares and its primal and dual maps.
inline ExpandedDoodle expand_doodle(const ColoredDoodle& doodle, const FundamentalRegion& region) {
  if (doodle.points.empty()) throw Error(Errc::EmptyDoodle, "doodle has no points");
  for (const auto& p : doodle.points) {
    if (std::abs(p.position.norm() - 1) > 1e-9)
      throw Error(Errc::PointOutsideRegion, p.label + " is not on the unit sphere");
    if (!region.r1.contains(p.position))
      throw Error(Errc::PointOutsideRegion, p.label + " lies outside the fundamental region");
  }
  for (auto [u, v] : doodle.arcs)
    if (u < 0 || v < 0 || u >= static_cast<int>(doodle.points.size()) || v >= static_cast<int>(doodle.points.size()) ||
        u == v)
      throw Error(Errc::FormatError, "bad arc endpoints");

  ExpandedDoodle out;
  std::vector<std::string> labels;
  std::map<std::array<long long, 3>, std::vector<int>> grid;
  auto cell_of = [](const Vec3& p) {
    return std::array<long long, 3>{std::llround(p.x() * 1e5), std::llround(p.y() * 1e5), std::llround(p.z() * 1e5)};
  };
  auto place = [&](const Vec3& p, PointColor c, const std::string& label) {
    auto base = cell_of(p);
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy)
        for (long long dz = -1; dz <= 1; ++dz) {
          auto it = grid.find({base[0] + dx, base[1] + dy, base[2] + dz});
          if (it == grid.end()) continue;
          for (int id : it->second) {
            if ((out.positions[id] - p).norm() > kMergeTolerance) continue;
            if (out.colors[id] != c)
              throw Error(Errc::MergeAmbiguity, label + " lands on " + labels[id] + " with a different color");
            return id;
          }
        }
    const int id = static_cast<int>(out.positions.size());
    out.positions.push_back(p);
    out.colors.push_back(c);
    labels.push_back(label);
    grid[base].push_back(id);
    return id;
  };

  const auto& elems = region.dual_group().elements();
  std::set<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    const bool aut = region.aut_group().contains(elems[k]);
    std::vector<int> id(doodle.points.size());
    for (std::size_t i = 0; i < doodle.points.size(); ++i) {
      const auto& p = doodle.points[i];
      id[i] = place(elems[k] * p.position, aut ? p.color : swap_color(p.color), p.label + "@" + std::to_string(k));
    }
    for (auto [u, v] : doodle.arcs) {
      int a = id[u], b = id[v];
      if (a == b) throw Error(Errc::MergeAmbiguity, "arc collapses under the group action");
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }

  const int n = static_cast<int>(out.positions.size());
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::vector<VertexId>> ccw(n);
  for (int v = 0; v < n; ++v) {
    std::vector<Vec3> targets;
    for (VertexId w : adj[v]) targets.push_back(out.positions[w]);
    for (int i : detail::ccw_order(out.positions[v], targets)) ccw[v].push_back(adj[v][i]);
  }
  out.squares = from_neighbor_lists(ccw, labels);

  std::vector<int> new_id, old_id;
  out.primal = detail::color_submap(out.squares, out.colors, PointColor::Primal, new_id, old_id);
  for (int v : old_id) out.primal_positions.push_back(out.positions[v]);
  // the square between consecutive crossings x_prev, x at v holds the face
  // on the clockwise side of the primal dart through x
  out.primal_face_positions.assign(out.primal.face_count(), Vec3::Zero());
  for (std::size_t i = 0; i < old_id.size(); ++i) {
    const VertexId v = old_id[i];
    const auto& rot = out.squares.rotation(v);
    for (std::size_t k = 0; k < rot.size(); ++k) {
      const VertexId x = out.squares.head(rot[k]);
      const VertexId xp = out.squares.head(rot[(k + rot.size() - 1) % rot.size()]);
      std::optional<VertexId> f;
      for (VertexId w : out.squares.neighbors(x))
        if (out.colors[w] == PointColor::Dual && out.squares.dart_between(xp, w)) f = w;
      if (!f) throw Error(Errc::MergeAmbiguity, "no dual point between consecutive crossings");
      // primal dart from v towards the far end of x
      VertexId far = -1;
      for (VertexId w : out.squares.neighbors(x))
        if (w != v && out.colors[w] == PointColor::Primal) far = w;
      auto d = out.primal.dart_between(static_cast<VertexId>(i), new_id[far]);
      out.primal_face_positions[out.primal.face_of(*d)] = out.positions[*f];
    }
  }
  std::vector<int> dnew, dold;
  out.dual = detail::color_submap(out.squares, out.colors, PointColor::Dual, dnew, dold);
  for (int v : dold) out.dual_positions.push_back(out.positions[v]);
  return out;
}

/// Sphere positions for the vertices and faces of a family member, realizing
/// its pairing by isometries.
struct SphereEmbedding {
  PairingInstance pairing;
  std::vector<Vec3> vertex_positions;
  std::vector<Vec3> face_positions;
};

inline SphereEmbedding embed_on_sphere(const LabeledMap& lm) {
  if (!lm.params.strict && lm.family != Family::Wheel)
    throw Error(Errc::UnsupportedMap, "only strict family members are embedded");
  Family f = lm.family;
  FamilyParams params = lm.params;
  std::optional<FundamentalRegion> fr;
  try {
    fr = region_for_family(f, params);
  } catch (const Error& e) {
    throw Error(Errc::UnsupportedMap, e.what());
  }
  auto ex = expand_doodle(doodle_for_family(f == Family::Wheel ? Family::MultiWheel : f, params), *fr);
  auto w = is_isomorphic(ex.primal, lm.map, OrientationClass::PreservingOnly);
  if (!w) throw std::logic_error("expanded doodle does not reproduce the family member");
  SphereEmbedding emb;
  emb.pairing = fr->pairing;
  emb.vertex_positions.assign(lm.map.vertex_count(), Vec3::Zero());
  emb.face_positions.assign(lm.map.face_count(), Vec3::Zero());
  for (DartId d = 0; d < ex.primal.dart_count(); ++d) {
    const DartId t = (*w)[d];
    emb.vertex_positions[lm.map.origin(t)] = ex.primal_positions[ex.primal.origin(d)];
    emb.face_positions[lm.map.face_of(t)] = ex.primal_face_positions[ex.primal.face_of(d)];
  }
  return emb;
}

/// Whether an isometry maps the primal vertex positions onto the dual ones.
inline bool swaps_colors(const SphereEmbedding& emb, const Mat3& g, double tol = 1e-6) {
  for (const auto& p : emb.vertex_positions) {
    Vec3 x = g * p;
    bool hit = false;
    for (const auto& f : emb.face_positions) hit = hit || (x - f).norm() < tol;
    if (!hit) return false;
  }
  return true;
}

}  // namespace sdmap
