#include <gtest/gtest.h>

#include "argclinic/io/aba_text.hpp"
#include "argclinic/oracle/brute_force.hpp"
#include "fixtures.hpp"

using namespace argclinic;
using aba::Sentence;

TEST(ExactSupports, FindsSupportsThroughRepeatedSentences) {
  // {a, c} supports p only through a derivation that uses p twice
  auto f = io::load_aba_text("assumption(a). assumption(c). rule(p, [p, c]). rule(p, [a]).").base;
  oracle::ExactSupports exact(f);
  const auto a = f.make_set({"a"}).bits();
  const auto ac = f.make_set({"a", "c"}).bits();
  EXPECT_TRUE(exact.holds(Sentence("p"), a));
  EXPECT_TRUE(exact.holds(Sentence("p"), ac));
  EXPECT_FALSE(exact.holds(Sentence("p"), f.make_set({"c"}).bits()));
}

TEST(BruteForce, AspirinUnderPreference) {
  auto f = io::load_aba_text(fixture::read_data("aspirin.aba")).base;
  oracle::BruteForce bf(f);
  const auto r1 = f.make_set({"r1"}).bits();
  const auto r2 = f.make_set({"r2"}).bits();
  EXPECT_TRUE(bf.attacks(r1, r2));
  EXPECT_FALSE(bf.attacks(r2, r1));
  EXPECT_TRUE(bf.admissible(r1));
  EXPECT_FALSE(bf.admissible(r2));
  EXPECT_EQ(bf.preferred(), aba::Family{f.make_set({"r1"})});
}

TEST(BruteForce, ConclusionsByForwardChaining) {
  auto f = io::load_aba_text(fixture::read_data("aspirin.aba")).base;
  oracle::BruteForce bf(f);
  const auto engine = aba::conclusions(f, f.make_set({"r2"}));
  EXPECT_EQ(bf.conclusions(f.make_set({"r2"}).bits()), engine);
}

TEST(BruteForce, RejectsLargeFrameworks) {
  std::string text;
  for (int i = 0; i < 16; ++i) text += "assumption(a" + std::to_string(i) + ").\n";
  auto f = io::load_aba_text(text).base;
  try {
    oracle::BruteForce bf(f);
    FAIL() << "expected OracleSizeExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OracleSizeExceeded);
  }
}

TEST(LiteralGoalOrder, CaseStudy) {
  const Sentence fat("Decrease Fatigue"), temp("¬Increase Body Temperature"),
      bp("¬Increase Blood Pressure"), pain("Decrease Pain");
  const aba::PriorityPreorder p({fat, temp, bp, pain}, {{fat, temp}, {temp, fat}, {fat, bp}, {bp, pain}});
  const std::set<Sentence> g38{fat, bp, pain};
  const std::set<Sentence> g48{fat, temp, pain};
  EXPECT_TRUE(oracle::literal_goal_leq(g48, g38, p));
  EXPECT_FALSE(oracle::literal_goal_leq(g38, g48, p));
}

TEST(BruteForceTopGoals, AspirinPriority) {
  auto loaded = io::load_aba_text(
      "assumption(r1). assumption(r2).\n"
      "rule(c1, [r2]). rule(c2, [r1]). contrary(r1, c1). contrary(r2, c2).\n"
      "rule(g1, [r1]). rule(g2, [r2]). goal(g1). goal(g2). priority(g1, g2).");
  aba::GoalFramework fg{loaded.base, *loaded.priority};
  const auto top = oracle::brute_force_top_goals(fg);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_EQ(top[0].sources, aba::Family{fg.base.make_set({"r2"})});
  EXPECT_EQ(top, aba::top_goal_extensions(fg));
}
