#include <gtest/gtest.h>

#include <set>

#include "emu/preference.hpp"
#include "generators.hpp"

namespace emu {
namespace {

Rational q(long n, unsigned long d = 1) { return frac(n, d); }

class PreferenceTest : public ::testing::Test {
 protected:
  SpacePtr ab = OutcomeSpace::create({"a", "b"});
  SpacePtr abc = OutcomeSpace::create({"a", "b", "c"});

  Lottery e(const SpacePtr& s, const char* z) { return Lottery::point_mass(s, z); }

  PreferenceDataset chain() {
    return {abc, {{e(abc, "a"), e(abc, "b")}, {e(abc, "b"), e(abc, "c")}}};
  }

  static std::set<Vec> values(const std::vector<Utility>& us) {
    std::set<Vec> out;
    for (const auto& u : us) out.insert(u.values());
    return out;
  }
};

TEST_F(PreferenceTest, BuildConeExamples) {
  EXPECT_TRUE(build_cone({ab, {}}).is_zero());
  const auto ray = build_cone({ab, {{e(ab, "a"), e(ab, "b")}}});
  EXPECT_EQ(ray.generators(), (std::vector<IntVec>{{1, -1}}));

  const auto c = build_cone(chain());
  EXPECT_EQ(c.generators(), (std::vector<IntVec>{{0, 1, -1}, {1, -1, 0}}));
  const auto cert = membership(c, {1, 0, -1});
  ASSERT_EQ(cert.verdict, Verdict::in);
  ASSERT_EQ(cert.combination.size(), 2u);
  EXPECT_EQ(cert.combination[0].second, 1);
  EXPECT_EQ(cert.combination[1].second, 1);
}

TEST_F(PreferenceTest, ExtractionExamples) {
  const auto r1 = extract_representation({ab, {{e(ab, "a"), e(ab, "b")}}}, "b");
  EXPECT_EQ(values(r1.utilities), (std::set<Vec>{{1, 0}}));

  const auto r2 = extract_representation(chain(), "c");
  ASSERT_EQ(r2.utilities.size(), 2u);
  EXPECT_EQ(r2.utilities[0].values(), (Vec{1, 0, 0}));
  EXPECT_EQ(r2.utilities[1].values(), (Vec{1, 1, 0}));

  const auto r3 = extract_representation({ab, {}}, "b");
  EXPECT_EQ(values(r3.utilities), (std::set<Vec>{{1, 0}, {-1, 0}}));
}

TEST_F(PreferenceTest, TotalRelationYieldsZeroUtility) {
  // Both directions between e_a and e_b: everything is indifferent.
  const auto r = extract_representation({ab, {{e(ab, "a"), e(ab, "b")}, {e(ab, "b"), e(ab, "a")}}}, "a");
  ASSERT_EQ(r.utilities.size(), 1u);
  EXPECT_EQ(r.utilities[0].values(), (Vec{0, 0}));
  EXPECT_EQ(query(r, e(ab, "a"), e(ab, "b")).classification, Classification::indifferent);
}

TEST_F(PreferenceTest, QueryExamples) {
  const auto chain_rep = extract_representation(chain(), "c");
  const Lottery p = Lottery::from_dense(abc, {q(1, 3), q(1, 3), q(1, 3)});
  EXPECT_EQ(query(chain_rep, p, p).classification, Classification::indifferent);

  const auto r = extract_representation({ab, {{e(ab, "a"), e(ab, "b")}}}, "b");
  const auto v = query(r, Lottery::from_dense(ab, {q(1, 2), q(1, 2)}), e(ab, "b"));
  EXPECT_EQ(v.classification, Classification::entailed_only);
  ASSERT_EQ(v.forward.combination.size(), 1u);
  EXPECT_EQ(r.cone.generators()[v.forward.combination[0].first], (IntVec{1, -1}));
  EXPECT_EQ(v.forward.combination[0].second, q(1, 2));
  EXPECT_EQ(v.backward.verdict, Verdict::out);

  const auto r3 = extract_representation({abc, {{e(abc, "a"), e(abc, "b")}}}, "c");
  const auto inc = query(r3, e(abc, "a"), e(abc, "c"));
  EXPECT_EQ(inc.classification, Classification::incomparable);
  const Vec x{1, 0, -1};
  EXPECT_TRUE(verify_certificate(r3.cone, x, inc.forward));
  EXPECT_TRUE(verify_certificate(r3.cone, {-1, 0, 1}, inc.backward));

  EXPECT_THROW(query(r3, e(ab, "a"), e(ab, "b")), Error);
}

TEST_F(PreferenceTest, TransitivityChainClassification) {
  const auto r = extract_representation(chain(), "c");
  EXPECT_EQ(query(r, e(abc, "a"), e(abc, "c")).classification, Classification::entailed_only);
  EXPECT_EQ(query(r, e(abc, "c"), e(abc, "a")).classification, Classification::reverse_only);
}

TEST_F(PreferenceTest, UniquenessExamples) {
  EXPECT_TRUE(check_uniqueness({Utility(ab, {1, 0})}, {Utility(ab, {2, 0})}));
  EXPECT_TRUE(check_uniqueness({Utility(ab, {1, 0})}, {Utility(ab, {1, 0}), Utility(ab, {3, 2})}));
  EXPECT_FALSE(check_uniqueness({Utility(ab, {1, 0})}, {Utility(ab, {0, 1})}));
  EXPECT_THROW(check_uniqueness({}, {Utility(ab, {1, 0})}), Error);
}

TEST_F(PreferenceTest, MonotoneExamples) {
  const MonotoneStructure ab_order{{{"a", "b"}}};
  const auto extended = monotone_extend({ab, {}}, ab_order);
  ASSERT_EQ(extended.statements.size(), 1u);
  EXPECT_EQ(extended.statements[0].p, e(ab, "a"));
  EXPECT_EQ(extended.statements[0].q, e(ab, "b"));

  const MonotoneStructure chain_order{{{"a", "b"}, {"b", "c"}}};
  const auto rep = extract_representation(monotone_extend({abc, {}}, chain_order), "c");
  EXPECT_EQ(query(rep, e(abc, "a"), e(abc, "c")).classification, Classification::entailed_only);

  const PreferenceDataset d = chain();
  EXPECT_EQ(monotone_extend(d, {}).statements.size(), d.statements.size());
  EXPECT_THROW(monotone_extend(d, {{{"a", "zz"}}}), Error);

  EXPECT_TRUE(check_increasing(Utility(abc, {2, 1, 0}), chain_order));
  EXPECT_FALSE(check_increasing(Utility(ab, {0, 1}), ab_order));
  EXPECT_TRUE(check_increasing(Utility(ab, {1, 1}), ab_order));
  EXPECT_EQ(first_violation(Utility(ab, {0, 1}), ab_order), std::make_pair(std::string("a"), std::string("b")));
}

TEST_F(PreferenceTest, IndependenceClosureExamples) {
  const PreferenceDataset d{abc, {{e(abc, "a"), e(abc, "b")}}};
  EXPECT_TRUE(check_independence_closure(d, 100, 1));
  EXPECT_TRUE(check_independence_closure({abc, {}}, 20, 2));

  // Mixing with r = e_c at alpha = 1/2 keeps the pair entailed, both ways.
  const auto cone = build_cone(d);
  const Lottery left = mix(q(1, 2), e(abc, "a"), e(abc, "c"));
  const Lottery right = mix(q(1, 2), e(abc, "b"), e(abc, "c"));
  EXPECT_TRUE(contains(cone, (left.measure() - right.measure()).dense()));
  EXPECT_TRUE(contains(cone, Vec{1, -1, 0}));
}

TEST_F(PreferenceTest, RandomDatasetProperties) {
  Rng rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    const auto space = gen::space(static_cast<std::size_t>(uniform_int(rng, 2, 4)));
    const auto d = gen::dataset(space, static_cast<std::size_t>(uniform_int(rng, 0, 4)), rng);
    const auto r = extract_representation(d, space->labels().back());
    ASSERT_FALSE(r.utilities.empty());

    for (const auto& s : d.statements) {
      EXPECT_NE(query(r, s.p, s.q).classification, Classification::reverse_only);
      EXPECT_TRUE(contains(r.cone, (s.p.measure() - s.q.measure()).dense()));
      for (const auto& u : r.utilities) EXPECT_GE(expectation(s.p, u), expectation(s.q, u));
    }
    for (int k = 0; k < 8; ++k) {
      const Lottery p = random_lottery(space, 6, rng);
      const Lottery p2 = random_lottery(space, 6, rng);
      const Lottery p3 = random_lottery(space, 6, rng);
      EXPECT_EQ(query(r, p, p).classification, Classification::indifferent);
      EXPECT_EQ(query(r, p, p2).classification, classify_by_utilities(r, p, p2));

      auto entailed = [&](const Lottery& x, const Lottery& y) {
        const auto c = query(r, x, y).classification;
        return c == Classification::entailed_only || c == Classification::indifferent;
      };
      if (entailed(p, p2) && entailed(p2, p3)) {
        EXPECT_TRUE(entailed(p, p3));
      }

      const Vec diff = (p.measure() - p2.measure()).dense();
      Vec scaled = diff;
      const Rational alpha = frac(uniform_int(rng, 1, 9), 4);
      for (auto& v : scaled) v *= alpha;
      EXPECT_EQ(contains(r.cone, diff), contains(r.cone, scaled));
    }
    const auto other = extract_representation(d, space->labels().front());
    EXPECT_TRUE(check_uniqueness(r.utilities, other.utilities));
  }
}

}  // namespace
}  // namespace emu
