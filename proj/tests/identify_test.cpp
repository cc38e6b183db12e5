#include "sdmap/identify.hpp"

#include <gtest/gtest.h>

#include "sdmap/families.hpp"
#include "test_maps.hpp"

namespace sdmap {
namespace {

TEST(IdentifyPairing, Hyperwheel) {
  EXPECT_EQ(identify_pairing(build_multi_hyperwheel({4, 1}).map).name(), "[4] < [2,4]");
  EXPECT_EQ(identify_pairing(build_multi_hyperwheel({6, 2}).map).name(), "[6] < [2,6]");
}

TEST(IdentifyPairing, OddWheels) {
  EXPECT_EQ(identify_pairing(build_wheel(5).map).name(), "[5] < [2+,10]");
  EXPECT_EQ(identify_pairing(build_multi_wheel({3, 2}).map).name(), "[3] < [2+,6]");
}

TEST(IdentifyPairing, Tetrahedron) {
  auto m = identify_pairing(testing::tetrahedron());
  EXPECT_EQ(m.name(), "[3,3] < [3,4]");
  EXPECT_TRUE(m.antipodal());
}

TEST(IdentifyPairing, EvenWheelIsNotAntipodal) {
  auto m = identify_pairing(build_wheel(4).map);
  EXPECT_EQ(m.name(), "[4] < [2+,8]");
  EXPECT_FALSE(m.antipodal());
}

TEST(IdentifyPairing, Errors) {
  try {
    identify_pairing(testing::cube());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotSelfDual);
  }
  PairingSignature bogus;
  bogus.dual_order = 14;
  bogus.aut_order = 7;
  try {
    identify_pairing(bogus);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NoCatalogMatch);
  }
}

TEST(IdentifyPairing, DegenerateInstancesDefer) {
  // the q = 1 member of [2,q] > [q] looks exactly like [2] > [1]
  auto inst = instantiate(pairing_catalog()[0], 1);
  auto m = identify_pairing(pairing_signature(inst));
  EXPECT_EQ(m.name(), "[1] < [2]");
  ASSERT_EQ(m.also_matched.size(), 1u);
}

TEST(IdentifyPairing, EveryCatalogInstanceRecognized) {
  for (const auto& inst : catalog_instances(2, 12)) {
    auto m = identify_pairing(pairing_signature(inst));
    EXPECT_EQ(m.name(), inst.name());
  }
}

TEST(IdentifyPairing, StrongInvolutionIffAntipodal) {
  std::vector<SphericalMap> corpus{testing::tetrahedron()};
  for (int q = 3; q <= 8; ++q) corpus.push_back(build_wheel(q).map);
  for (int q : {4, 6, 8})
    for (int l = 1; l <= 2; ++l) corpus.push_back(build_multi_hyperwheel({q, l}).map);
  for (int q : {3, 5, 7})
    for (int l = 1; l <= 3; ++l) corpus.push_back(build_multi_wheel({q, l}).map);
  corpus.push_back(build_multi_wheel({4, 2, false}).map);
  corpus.push_back(build_multi_hyperwheel({5, 1, false}).map);
  for (const auto& g : corpus) {
    bool si = !find_strong_involutions(g).empty();
    auto m = identify_pairing(g);
    EXPECT_EQ(si, m.antipodal()) << m.name() << " V=" << g.vertex_count();
  }
}

}  // namespace
}  // namespace sdmap
