#include "sdmap/orbifold.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace sdmap {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(Region, CellAreas) {
  EXPECT_NEAR(ConvexCell{{Vec3::UnitZ()}}.area(), 2 * kPi, 1e-12);
  EXPECT_NEAR((ConvexCell{{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ()}}.area()), kPi / 2, 1e-12);
  EXPECT_NEAR(detail::lune(0, kPi / 3).area(), 2 * kPi / 3, 1e-12);
  // redundant constraint through a vertex
  EXPECT_NEAR((ConvexCell{{Vec3::UnitX(), Vec3::UnitY(), Vec3::UnitZ(), Vec3(1, 1, 0)}}.area()), kPi / 2, 1e-12);
}

TEST(Region, TenAntipodalPairings) {
  auto all = antipodal_instances(4, 3);
  ASSERT_EQ(all.size(), 10u);
  for (const auto& inst : all) {
    auto fr = region_catalog(inst);
    auto t1 = check_tiling(fr.r1, fr.aut_group());
    auto t2 = check_tiling(fr.r2, fr.dual_group());
    EXPECT_NEAR(t1.area_total, 4 * kPi, 1e-6) << inst.name();
    EXPECT_NEAR(t2.area_total, 4 * kPi, 1e-6) << inst.name();
    EXPECT_EQ(t1.bad, 0) << inst.name();
    EXPECT_EQ(t2.bad, 0) << inst.name();
    EXPECT_LT(t1.skipped, t1.samples / 10) << inst.name();
  }
}

TEST(Region, LargerQ) {
  for (int qe : {2, 6, 8})
    for (int qo : {5, 7})
      for (const auto& inst : antipodal_instances(qe, qo)) {
        auto fr = region_catalog(inst);
        EXPECT_TRUE(check_tiling(fr.r1, fr.aut_group(), 500).ok()) << inst.name();
        EXPECT_TRUE(check_tiling(fr.r2, fr.dual_group(), 500).ok()) << inst.name();
      }
}

TEST(Region, R2InsideR1) {
  for (const auto& inst : antipodal_instances(6, 5)) {
    auto fr = region_catalog(inst);
    std::mt19937 rng(7);
    std::normal_distribution<double> nd;
    for (int i = 0; i < 500; ++i) {
      Vec3 p(nd(rng), nd(rng), nd(rng));
      p.normalize();
      if (fr.r2.contains(p, 0)) {
        EXPECT_TRUE(fr.r1.contains(p, 1e-12)) << inst.name();
      }
    }
  }
}

TEST(Region, GeneratorsRegenerateDual) {
  for (const auto& inst : antipodal_instances(4, 3)) {
    auto fr = region_catalog(inst);
    ASSERT_FALSE(fr.iso_generators.empty());
    std::vector<Mat3> gens = fr.aut_generators;
    gens.insert(gens.end(), fr.iso_generators.begin(), fr.iso_generators.end());
    EXPECT_EQ(IsometryGroup::generate(gens).order(), fr.dual_group().order()) << inst.name();
    for (const auto& g : fr.iso_generators) EXPECT_FALSE(fr.aut_group().contains(g));
  }
}

TEST(Region, HyperwheelMarks) {
  auto fr = region_catalog(instantiate(pairing_catalog()[0], 4));
  int aut_mirrors = 0, iso_mirrors = 0;
  for (const auto& m : fr.marks) {
    aut_mirrors += m.kind == MarkKind::AutMirror;
    iso_mirrors += m.kind == MarkKind::IsoMirror;
  }
  EXPECT_EQ(aut_mirrors, 2);
  EXPECT_EQ(iso_mirrors, 1);
}

TEST(Region, NonAntipodalRejected) {
  try {
    region_catalog(instantiate(pairing_catalog()[1], 4));  // [q]+ < [2,q]+
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAntipodalPairing);
  }
}

void expect_roundtrip(Family f, int q, int l) {
  SCOPED_TRACE(family_name(f) + " q=" + std::to_string(q) + " l=" + std::to_string(l));
  FamilyParams p{q, l, true};
  auto fr = region_for_family(f, p);
  auto ex = expand_doodle(doodle_for_family(f, p), fr);
  auto lm = build_family(f, p);
  EXPECT_EQ(canonical_code(ex.primal), canonical_code(lm.map));
  EXPECT_EQ(canonical_code(ex.dual), canonical_code(dual_map(lm.map)));
  // graph of squares: every face is primal, crossing, dual, crossing
  for (FaceId fc = 0; fc < ex.squares.face_count(); ++fc) {
    auto vs = ex.squares.face_vertices(fc);
    ASSERT_EQ(vs.size(), 4u);
    int x = 0;
    for (auto v : vs) x += ex.colors[v] == PointColor::Crossing;
    EXPECT_EQ(x, 2);
  }
  // iso generators carry primal points onto dual points
  for (const auto& g : fr.iso_generators)
    for (const auto& pp : ex.primal_positions) {
      Vec3 y = g * pp;
      bool hit = false;
      for (const auto& d : ex.dual_positions) hit = hit || (y - d).norm() < 1e-6;
      EXPECT_TRUE(hit);
    }
}

TEST(Expand, HyperwheelRoundTrip) {
  for (int q : {4, 6})
    for (int l : {1, 2, 3}) expect_roundtrip(Family::HyperWheel, q, l);
}

TEST(Expand, MultiwheelRoundTrip) {
  for (int q : {3, 5, 7})
    for (int l : {1, 2, 3}) expect_roundtrip(Family::MultiWheel, q, l);
}

TEST(Expand, DoodlePointsOnWalls) {
  auto d = doodle_for_family(Family::HyperWheel, {4, 2, true});
  auto c = d.find("c");
  ASSERT_TRUE(c);
  EXPECT_FALSE(d.points[*c].wall.empty());
  auto e = d.find("e");
  ASSERT_TRUE(e);
  EXPECT_TRUE(d.points[*e].wall.empty());
}

TEST(Expand, Errors) {
  auto fr = region_for_family(Family::HyperWheel, {4, 1, true});
  try {
    expand_doodle(ColoredDoodle{}, fr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyDoodle);
  }
  ColoredDoodle out;
  out.add("p", sphere_point(2.0, 0.1), PointColor::Primal);
  try {
    expand_doodle(out, fr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PointOutsideRegion);
  }
  // a primal point on the equator meets its own dual image
  ColoredDoodle clash;
  clash.add("p", sphere_point(0.3, 0), PointColor::Primal);
  try {
    expand_doodle(clash, fr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::MergeAmbiguity);
  }
  try {
    doodle_for_family(Family::HyperWheel, {5, 1, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BadParams);
  }
}

TEST(Embed, EquatorReflectionForHyperwheel) {
  auto emb = embed_on_sphere(build_multi_hyperwheel({4, 1}));
  Mat3 eq = reflection(Vec3::UnitZ());
  EXPECT_TRUE(swaps_colors(emb, eq));
}

TEST(Embed, HalfTurnForMultiwheel) {
  auto emb = embed_on_sphere(build_multi_wheel({3, 1}));
  EXPECT_FALSE(swaps_colors(emb, reflection(Vec3::UnitZ())));
  Mat3 half = Vec3(1, -1, -1).asDiagonal();
  EXPECT_TRUE(swaps_colors(emb, half));
}

TEST(Embed, Unsupported) {
  try {
    embed_on_sphere(build_multi_wheel({4, 2, false}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnsupportedMap);
  }
}

}  // namespace
}  // namespace sdmap
