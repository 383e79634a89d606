#include <gtest/gtest.h>

#include "skl/cones.hpp"

using namespace skl;

namespace {

long choose(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

TEST(PlaneCurve, H1Examples) {
  EXPECT_EQ(h1_plane_curve(3, 1), 0);
  EXPECT_EQ(h1_plane_curve(4, 1), 1);
  EXPECT_EQ(h1_plane_curve(3, 0), 1);
}

TEST(PlaneCurve, RiemannRochProperty) {
  // h0 - h1 = m*delta + 1 - g, and h1 = C(delta - m - 1, 2) for m >= 0.
  for (int delta = 1; delta <= 9; ++delta) {
    long g = (delta - 1) * (delta - 2) / 2;
    for (long m = 0; m <= 12; ++m) {
      EXPECT_EQ(h1_plane_curve(delta, m), choose(delta - m - 1, 2)) << delta << " " << m;
      long h0 = choose(m + 2, 2) - choose(m - delta + 2, 2);
      EXPECT_EQ(h0 - h1_plane_curve(delta, m), m * delta + 1 - g);
    }
  }
}

TEST(Cone, B01AndPg) {
  EXPECT_EQ(cone_b01(3), 0);
  EXPECT_EQ(cone_pg(3), 1);
  EXPECT_EQ(cone_b01(4), 1);
  EXPECT_EQ(cone_pg(4), 4);
  EXPECT_EQ(cone_b01(1), 0);
  EXPECT_EQ(cone_pg(1), 0);
  for (int delta = 1; delta <= 12; ++delta) {
    EXPECT_EQ(cone_pg(delta), choose(delta, 3));
    EXPECT_EQ(cone_pg(delta) - cone_b01(delta), choose(delta - 1, 2));
    EXPECT_EQ(cone_b01(delta) == 0, delta <= 3);
  }
  EXPECT_THROW(cone_b01(0), Error);
}

TEST(Bott, Examples) {
  EXPECT_TRUE(bott_nonvanishing(2, 3, 0).is_zero());
  EXPECT_EQ(bott_nonvanishing(2, 4, 0).state, VanishingEntry::State::NonZero);
  EXPECT_TRUE(bott_nonvanishing(3, 2, 1).is_zero());
  EXPECT_EQ(bott_nonvanishing(3, 2, 1).rule, "bott-vanishing");
  for (auto [n, d, p] : {std::tuple{2, 3, 2}, {2, 3, -1}, {0, 3, 0}, {2, 0, 0}}) {
    try {
      bott_nonvanishing(n, d, p);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::OutOfRange);
    }
  }
}

TEST(Bott, CriterionSweep) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d)
      for (int p = 0; p <= n - 1; ++p) EXPECT_EQ(bott_nonvanishing(n, d, p).is_zero(), (p + 1) * d <= n + 1);
}

TEST(ConeTable, PlaneCurves) {
  auto t4 = cone_dubois_table(ConeSpec(2, 4));
  ASSERT_EQ(t4.rows().size(), 1u);
  ASSERT_EQ(t4.rows()[0].size(), 3u);
  EXPECT_EQ(t4.at(0, 1).state, VanishingEntry::State::Value);
  EXPECT_EQ(t4.at(0, 1).value, 1);
  EXPECT_EQ(t4.at(1, 1).value, 1);
  EXPECT_TRUE(t4.at(2, 1).is_zero());

  auto t3 = cone_dubois_table(ConeSpec(2, 3));
  for (int p = 0; p <= 2; ++p) EXPECT_TRUE(t3.at(p, 1).is_zero());
}

TEST(ConeTable, QuadricFourfold) {
  auto t = cone_dubois_table(ConeSpec(4, 2));
  EXPECT_EQ(t.rows().size(), 3u);
  EXPECT_EQ(t.rows()[0].size(), 5u);
  // pattern entries for p = 0, 1 vanish; p = 2 fails 3*2 <= 5
  EXPECT_TRUE(t.at(0, 3).is_zero());
  EXPECT_TRUE(t.at(1, 3).is_zero());
  EXPECT_TRUE(t.at(1, 2).is_zero());
  EXPECT_TRUE(t.at(2, 2).is_zero());
  EXPECT_EQ(t.at(2, 1).state, VanishingEntry::State::NonZero);
  EXPECT_EQ(t.at(3, 1).state, VanishingEntry::State::NonZero);
  EXPECT_TRUE(t.satisfies_zero_pattern());
}

TEST(ConeTable, ZeroPatternProperty) {
  for (int n = 1; n <= 6; ++n)
    for (int d = 1; d <= 6; ++d) {
      auto t = cone_dubois_table(ConeSpec(n, d));
      EXPECT_EQ(t.rows().size(), static_cast<std::size_t>(n - 1));
      EXPECT_TRUE(t.satisfies_zero_pattern());
      for (int q = 1; q < n; ++q)
        for (int p = 0; p <= n; ++p) {
          bool pattern = (p + q == n - 1) || (p + q == n && p >= 1);
          if (!pattern) {
            EXPECT_TRUE(t.at(p, q).is_zero()) << n << d << p << q;
          }
        }
      if (n == 2) {
        EXPECT_EQ(t.at(0, 1).is_zero(), cone_b01(d) == 0);
      }
    }
}

TEST(Ladder, Examples) {
  auto l23 = homog_k_ladder(2, 3);
  ASSERT_EQ(l23.rows.size(), 1u);
  EXPECT_TRUE(l23.rows[0].pre_dubois);
  EXPECT_EQ(l23.max_regular_index, 0);
  EXPECT_EQ(ladder_verdict(l23), "Du Bois, K_0-regular");

  auto l24 = homog_k_ladder(2, 4);
  EXPECT_FALSE(l24.rows[0].k_regular);
  EXPECT_FALSE(l24.max_regular_index);
  EXPECT_EQ(ladder_verdict(l24), "not Du Bois, not K_0-regular");

  auto l52 = homog_k_ladder(5, 2);
  ASSERT_EQ(l52.rows.size(), 4u);
  for (int p = 0; p < 4; ++p) EXPECT_EQ(l52.rows[p].k_regular, p <= 2);
  EXPECT_EQ(l52.max_regular_index, 1);

  EXPECT_TRUE(homog_k_ladder(3, 1).smooth);
  EXPECT_EQ(ladder_verdict(homog_k_ladder(3, 1)), "smooth");
}

TEST(Ladder, MonotoneAndMatchesB01) {
  for (int d = 1; d <= 7; ++d)
    for (int delta = 1; delta <= 7; ++delta) {
      auto l = homog_k_ladder(d, delta);
      for (std::size_t i = 1; i < l.rows.size(); ++i) {
        if (l.rows[i].k_regular) {
          EXPECT_TRUE(l.rows[i - 1].k_regular);
        }
      }
      for (const auto& r : l.rows) EXPECT_EQ(r.k_index, -d + 2 + 2 * r.p);
      if (d == 2) {
        EXPECT_EQ(l.rows[0].k_regular, cone_b01(delta) == 0);
      }
    }
}
