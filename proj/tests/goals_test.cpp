#include <gtest/gtest.h>

#include "argclinic/aba/goals.hpp"
#include "argclinic/io/aba_text.hpp"
#include "argclinic/tmr/mapper.hpp"
#include "fixtures.hpp"

using namespace argclinic;
using aba::Sentence;

namespace {

std::set<Sentence> goals(std::initializer_list<const char*> items) {
  std::set<Sentence> out;
  for (auto s : items) out.emplace(s);
  return out;
}

aba::PriorityPreorder patient_a_priority() {
  const Sentence fat("Decrease Fatigue");
  const Sentence temp("¬Increase Body Temperature");
  const Sentence bp("¬Increase Blood Pressure");
  const Sentence pain("Decrease Pain");
  return aba::PriorityPreorder({fat, temp, bp, pain},
                               {{fat, temp}, {temp, fat}, {fat, bp}, {bp, pain}});
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::SchemaError;
}

}  // namespace

TEST(Priority, PatientAIsTotalWithOneTie) {
  const auto p = patient_a_priority();
  EXPECT_EQ(p.goals().size(), 4u);
  EXPECT_TRUE(p.leq(Sentence("Decrease Fatigue"), Sentence("¬Increase Body Temperature")));
  EXPECT_TRUE(p.leq(Sentence("¬Increase Body Temperature"), Sentence("Decrease Fatigue")));
  EXPECT_TRUE(p.strict(Sentence("¬Increase Body Temperature"), Sentence("Decrease Pain")));
  EXPECT_FALSE(p.leq(Sentence("Decrease Pain"), Sentence("Decrease Fatigue")));
}

TEST(Priority, RejectsPartialOrders) {
  const Sentence a("a"), b("b"), c("c");
  EXPECT_EQ(kind_of([&] { aba::PriorityPreorder({a, b, c}, {{a, b}}); }),
            ErrorKind::PriorityNotTotal);
  EXPECT_EQ(kind_of([&] { aba::PriorityPreorder({a}, {{a, b}}); }),
            ErrorKind::PriorityMentionsNonGoal);
}

TEST(Priority, EmptyAndSingletonGoalSets) {
  EXPECT_TRUE(aba::PriorityPreorder({}, {}).goals().empty());
  EXPECT_EQ(aba::PriorityPreorder({Sentence("g")}, {}).goals().size(), 1u);
}

TEST(ValidateAbapg, GoalNeedsAHeadingRule) {
  auto base = io::load_aba_text("assumption(a). rule(p, [a]).").base;
  EXPECT_EQ(kind_of([&] { aba::validate_abapg(base, {Sentence("q")}, {}); }),
            ErrorKind::GoalWithoutRule);
  EXPECT_NO_THROW(aba::validate_abapg(base, {Sentence("p")}, {}));
}

TEST(GoalOrder, CaseStudyDominance) {
  const auto p = patient_a_priority();
  const auto g38 = goals({"Decrease Fatigue", "¬Increase Blood Pressure", "Decrease Pain"});
  const auto g48 = goals({"Decrease Fatigue", "¬Increase Body Temperature", "Decrease Pain"});
  EXPECT_TRUE(aba::goal_order_leq(g48, g38, p));
  EXPECT_FALSE(aba::goal_order_leq(g38, g48, p));
}

TEST(GoalOrder, EqualSetsAreEquivalent) {
  const auto p = patient_a_priority();
  const auto g = goals({"Decrease Pain"});
  EXPECT_TRUE(aba::goal_order_leq(g, g, p));
  EXPECT_TRUE(aba::goal_order_leq(goals({}), goals({}), p));
}

TEST(GoalOrder, SubsetIsBelowSuperset) {
  const auto p = patient_a_priority();
  EXPECT_TRUE(aba::goal_order_leq(goals({}), goals({"Decrease Fatigue"}), p));
  EXPECT_FALSE(aba::goal_order_leq(goals({"Decrease Fatigue"}), goals({}), p));
}

TEST(GoalOrder, TiesMakeDifferentSetsEquivalent) {
  const auto p = patient_a_priority();
  EXPECT_TRUE(aba::goal_order_leq(goals({"Decrease Fatigue"}), goals({"¬Increase Body Temperature"}), p));
  EXPECT_TRUE(aba::goal_order_leq(goals({"¬Increase Body Temperature"}), goals({"Decrease Fatigue"}), p));
}

TEST(GoalOrder, NotTransitiveUnderTies) {
  // x ~ y above z
  const Sentence x("x"), y("y"), z("z");
  const aba::PriorityPreorder p({x, y, z}, {{x, y}, {y, x}, {z, x}});
  const auto a = goals({"x", "z"});
  const auto b = goals({"y"});
  const auto c = goals({"x"});
  EXPECT_TRUE(aba::goal_order_leq(a, b, p));
  EXPECT_TRUE(aba::goal_order_leq(b, c, p));
  EXPECT_FALSE(aba::goal_order_leq(a, c, p));
}

TEST(GoalExtensions, GroupSourcesWithEqualGoals) {
  auto loaded = io::load_aba_text(
      "assumption(a). assumption(b).\n"
      "contrary(a, ca). contrary(b, cb). rule(ca, [b]). rule(cb, [a]).\n"
      "rule(g, [a]). rule(g, [b]). goal(g).");
  aba::GoalFramework fg{loaded.base, *loaded.priority};
  const auto pref = aba::preferred_extensions(fg.base);
  const auto ext = aba::goal_extensions(fg, pref);
  ASSERT_EQ(ext.size(), 1u);
  EXPECT_EQ(ext[0].sources.size(), 2u);
  EXPECT_EQ(ext[0].achieved, goals({"g"}));
  EXPECT_EQ(aba::top_goal_extensions(fg), ext);
}

TEST(GoalExtensions, AspirinPriorityScenario) {
  const auto b = fixture::load_bundle("aspirin_priority.json");
  const auto s = tmr::resolve(b.recommendations, b.interactions, b.context);
  const auto& f = s.patient.framework.base;
  ASSERT_EQ(s.goal_extensions.size(), 2u);
  ASSERT_EQ(s.top.size(), 1u);
  EXPECT_EQ(s.top[0].sources, aba::Family{f.make_set({"r2"})});
  EXPECT_EQ(s.top[0].achieved, goals({"¬Increase Gastrointestinal Bleeding"}));
}

TEST(GoalExtensions, NoGoalsMeansOneEmptyExtension) {
  auto loaded = io::load_aba_text("assumption(a). rule(p, [a]).");
  aba::GoalFramework fg{loaded.base, aba::PriorityPreorder({}, {})};
  const auto top = aba::top_goal_extensions(fg);
  ASSERT_EQ(top.size(), 1u);
  EXPECT_TRUE(top[0].achieved.empty());
}
