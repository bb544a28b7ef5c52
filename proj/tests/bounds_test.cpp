#include <gtest/gtest.h>

#include "mnt/bounds.hpp"
#include "mnt/classify.hpp"

namespace mnt {
namespace {

TEST(Bounds, ThreeHalves) {
  // ceil((3n - 2) / 2) computed directly.
  for (int n = 2; n <= 100; ++n) {
    const int num = 3 * n - 2;
    EXPECT_EQ(three_halves_bound(n), num / 2 + (num % 2 != 0)) << n;
  }
  EXPECT_EQ(three_halves_bound(10), 14);
  EXPECT_EQ(three_halves_bound(11), 16);
  EXPECT_EQ(three_halves_bound(12), 17);
  EXPECT_EQ(three_halves_bound(13), 19);
}

TEST(Bounds, LowerBoundTable) {
  const int expected[] = {0, 1, 2, 4, 6, 8, 10, 12};
  for (int n = 2; n <= 9; ++n) EXPECT_EQ(lower_bound_g(n), expected[n - 2]) << n;
  EXPECT_EQ(lower_bound_g(10), 14);
  EXPECT_EQ(lower_bound_g(54), 80);
  EXPECT_THROW(lower_bound_g(1), std::invalid_argument);
}

TEST(Bounds, UpperBoundsAreVerifiedConstructions) {
  for (int n = 2; n <= 20; ++n) {
    const auto ub = best_known_upper_g(n);
    ASSERT_TRUE(ub.has_value()) << n;
    EXPECT_TRUE(ub->verified_mnt);
    EXPECT_EQ(ub->witness.order(), n);
    EXPECT_EQ(ub->witness.size(), ub->edges);
    EXPECT_EQ(build(ub->spec), ub->witness);
    EXPECT_EQ(is_mnt(ub->witness).mnt, true) << n;
    EXPECT_LE(lower_bound_g(n), ub->edges) << n;
  }
  EXPECT_FALSE(best_known_upper_g(33).has_value());
}

TEST(Bounds, SpecificConstructions) {
  EXPECT_EQ(best_known_upper_g(8)->spec.describe(), "zelinka2(3,[2,2,1])");
  EXPECT_EQ(best_known_upper_g(10)->edges, 15);
  EXPECT_EQ(best_known_upper_g(10)->spec.describe(), "zelinka2(4,[2,2,2])");
  EXPECT_EQ(best_known_upper_g(11)->edges, 19);
  EXPECT_EQ(best_known_upper_g(12)->edges, 17);
  EXPECT_EQ(best_known_upper_g(12)->spec.family, Family::dkw);
  EXPECT_EQ(best_known_upper_g(13)->edges, 19);
  EXPECT_EQ(best_known_upper_g(2)->spec.describe(), "disjoint_cliques(1,1)");
}

TEST(Bounds, StatusTable) {
  for (int n = 2; n <= 13; ++n) {
    const auto st = g_status(n);
    const bool open = n == 10 || n == 11;
    EXPECT_EQ(st.status, open ? Status::open : Status::known) << n;
    ASSERT_TRUE(st.upper.has_value());
    EXPECT_EQ(st.upper == st.lower, !open);
    EXPECT_FALSE(st.externally_sourced);
    ASSERT_TRUE(st.construction.has_value());
    EXPECT_FALSE(st.provenance.empty());
  }
  EXPECT_EQ(g_status(10).lower, 14);
  EXPECT_EQ(g_status(11).lower, 16);
}

TEST(Bounds, ExternalOrdersAreLabelled) {
  for (int n : {22, 23, 30, 54, 60}) {
    const auto st = g_status(n);
    EXPECT_EQ(st.status, Status::known) << n;
    EXPECT_TRUE(st.externally_sourced) << n;
    EXPECT_EQ(st.upper, st.lower);
    EXPECT_NE(st.provenance.back().find("literature"), std::string::npos);
  }
  const auto st14 = g_status(14);
  EXPECT_FALSE(st14.externally_sourced);
  EXPECT_EQ(st14.status, Status::open);
  EXPECT_EQ(to_string(Status::open), "open");
}

}  // namespace
}  // namespace mnt
