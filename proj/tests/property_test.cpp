#include <gtest/gtest.h>

#include "argclinic/aba/goals.hpp"
#include "argclinic/aba/semantics.hpp"
#include "argclinic/io/aba_text.hpp"
#include "argclinic/io/bundle.hpp"
#include "argclinic/oracle/brute_force.hpp"
#include "argclinic/random.hpp"
#include "argclinic/tmr/mapper.hpp"

using namespace argclinic;
using aba::AssumptionSet;
using aba::Sentence;

namespace {

gen::FrameworkParams small() {
  gen::FrameworkParams p;
  p.max_assumptions = 5;
  p.max_rules = 10;
  return p;
}

std::uint64_t all_subsets(const aba::Framework& f) { return std::uint64_t{1} << f.assumption_count(); }

std::vector<Sentence> goal_names(std::size_t n) {
  std::vector<Sentence> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("g" + std::to_string(i));
  return out;
}

std::set<Sentence> random_subset(gen::Rng& rng, const std::vector<Sentence>& items) {
  std::set<Sentence> out;
  for (const auto& s : items) {
    if (gen::coin(rng)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST(Property, PreferredMatchesOracle) {
  gen::Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    const auto f = aba::validate_framework(gen::random_framework(rng));
    ASSERT_EQ(aba::preferred_extensions(f), oracle::brute_force_preferred(f)) << io::serialize_aba_text(f);
  }
}

TEST(Property, TopGoalsMatchOracle) {
  gen::Rng rng(102);
  for (int k = 0; k < 100; ++k) {
    const auto fg = gen::random_goal_framework(rng);
    ASSERT_EQ(aba::top_goal_extensions(fg), oracle::brute_force_top_goals(fg)) << io::serialize_aba_text(fg);
  }
}

TEST(Property, AttacksMatchOracle) {
  gen::Rng rng(103);
  for (int k = 0; k < 50; ++k) {
    const auto f = aba::validate_framework(gen::random_framework(rng, small()));
    const oracle::BruteForce bf(f);
    for (std::uint64_t a = 0; a < all_subsets(f); ++a) {
      for (std::uint64_t b = 0; b < all_subsets(f); ++b) {
        ASSERT_EQ(aba::attacks(f, AssumptionSet(a), AssumptionSet(b)), bf.attacks(a, b))
            << io::serialize_aba_text(f) << a << " " << b;
      }
    }
  }
}

TEST(Property, DefenceReducesToCanonicalAttackers) {
  gen::Rng rng(104);
  for (int k = 0; k < 50; ++k) {
    const auto f = aba::validate_framework(gen::random_framework(rng, small()));
    for (std::uint64_t t = 0; t < all_subsets(f); ++t) {
      for (std::uint64_t a = 0; a < all_subsets(f); ++a) {
        bool literal = true;
        for (std::uint64_t b = 0; b < all_subsets(f) && literal; ++b) {
          if (aba::attacks(f, AssumptionSet(b), AssumptionSet(t)) &&
              !aba::attacks(f, AssumptionSet(a), AssumptionSet(b))) {
            literal = false;
          }
        }
        ASSERT_EQ(aba::defends(f, AssumptionSet(a), AssumptionSet(t)), literal)
            << io::serialize_aba_text(f) << "A=" << a << " T=" << t;
      }
    }
  }
}

TEST(Property, AttacksAreMonotone) {
  gen::Rng rng(105);
  for (int k = 0; k < 50; ++k) {
    const auto f = aba::validate_framework(gen::random_framework(rng, small()));
    for (std::uint64_t a = 0; a < all_subsets(f); ++a) {
      for (std::uint64_t b = 0; b < all_subsets(f); ++b) {
        if (!aba::attacks(f, AssumptionSet(a), AssumptionSet(b))) continue;
        const auto x = AssumptionSet(gen::uniform(rng, 0, all_subsets(f) - 1));
        ASSERT_TRUE(aba::attacks(f, AssumptionSet(a) | x, AssumptionSet(b)));
        ASSERT_TRUE(aba::attacks(f, AssumptionSet(a), AssumptionSet(b) | x));
      }
    }
  }
}

TEST(Property, WithoutPreferencesOnlyNormalAttacks) {
  gen::Rng rng(106);
  auto params = small();
  params.preferences = false;
  for (int k = 0; k < 50; ++k) {
    const auto f = aba::validate_framework(gen::random_framework(rng, params));
    ASSERT_TRUE(f.preference().only_reflexive());
    for (std::uint64_t a = 0; a < all_subsets(f); ++a) {
      for (std::uint64_t b = 0; b < all_subsets(f); ++b) {
        ASSERT_FALSE(aba::reverse_attack(f, AssumptionSet(a), AssumptionSet(b)));
      }
    }
  }
}

TEST(Property, ConclusionsMatchForwardChaining) {
  gen::Rng rng(107);
  for (int k = 0; k < 100; ++k) {
    const auto f = aba::validate_framework(gen::random_framework(rng, small()));
    const oracle::BruteForce bf(f);
    for (std::uint64_t a = 0; a < all_subsets(f); ++a) {
      ASSERT_EQ(aba::conclusions(f, AssumptionSet(a)), bf.conclusions(a));
    }
  }
}

TEST(Property, UnattackedAssumptionJoinsEveryExtension) {
  gen::Rng rng(108);
  for (int k = 0; k < 100; ++k) {
    auto raw = gen::random_framework(rng);
    const auto before = aba::preferred_extensions(aba::validate_framework(raw));
    raw.assumptions.emplace_back("zz");
    const auto f = aba::validate_framework(raw);
    const auto z = *f.index_of(Sentence("zz"));
    const auto after = aba::preferred_extensions(f);
    ASSERT_EQ(after.size(), before.size());
    for (std::size_t i = 0; i < after.size(); ++i) {
      ASSERT_TRUE(after[i].contains(z));
      ASSERT_EQ(after[i] - AssumptionSet::singleton(z), before[i]);
    }
  }
}

TEST(Property, PreferredExtensionsAreAdmissibleAndIncomparable) {
  gen::Rng rng(109);
  for (int k = 0; k < 100; ++k) {
    const auto f = aba::validate_framework(gen::random_framework(rng));
    const auto pref = aba::preferred_extensions(f);
    ASSERT_FALSE(pref.empty());
    for (auto e : pref) {
      ASSERT_TRUE(aba::is_admissible(f, e));
      for (auto other : pref) {
        if (other != e) {
          ASSERT_FALSE(e.subset_of(other));
        }
      }
    }
  }
}

TEST(Property, GoalOrderReflexiveAndTotal) {
  gen::Rng rng(110);
  for (int k = 0; k < 300; ++k) {
    const auto goals = goal_names(gen::uniform(rng, 1, 6));
    const aba::PriorityPreorder p(goals, gen::random_total_preorder(rng, goals, gen::uniform(rng, 1, 4)));
    const auto a = random_subset(rng, goals);
    const auto b = random_subset(rng, goals);
    ASSERT_TRUE(aba::goal_order_leq(a, a, p));
    ASSERT_TRUE(aba::goal_order_leq(a, b, p) || aba::goal_order_leq(b, a, p));
    ASSERT_EQ(aba::goal_order_leq(a, b, p), oracle::literal_goal_leq(a, b, p));
  }
}

TEST(Property, GoalOrderTransitiveUnderStrictPriority) {
  gen::Rng rng(111);
  for (int k = 0; k < 300; ++k) {
    auto goals = goal_names(gen::uniform(rng, 1, 6));
    std::shuffle(goals.begin(), goals.end(), rng);
    std::vector<std::pair<Sentence, Sentence>> chain;
    for (std::size_t i = 0; i + 1 < goals.size(); ++i) chain.emplace_back(goals[i], goals[i + 1]);
    const aba::PriorityPreorder p(goals, chain);
    const auto a = random_subset(rng, goals);
    const auto b = random_subset(rng, goals);
    const auto c = random_subset(rng, goals);
    if (aba::goal_order_leq(a, b, p) && aba::goal_order_leq(b, c, p)) {
      ASSERT_TRUE(aba::goal_order_leq(a, c, p));
    }
  }
}

TEST(Property, TopGoalExtensionsReachTheHighestLevel) {
  gen::Rng rng(112);
  for (int k = 0; k < 200; ++k) {
    const auto fg = gen::random_goal_framework(rng);
    const auto all = aba::goal_extensions(fg, aba::preferred_extensions(fg.base));
    const auto top = aba::maximal_goal_extensions(all, fg.priority);
    std::set<Sentence> reached;
    for (const auto& g : all) reached.insert(g.achieved.begin(), g.achieved.end());
    if (reached.empty()) continue;
    ASSERT_FALSE(top.empty());
    Sentence best = *reached.begin();
    for (const auto& g : reached) {
      if (fg.priority.strict(best, g)) best = g;
    }
    for (const auto& t : top) {
      const bool hit = std::any_of(t.achieved.begin(), t.achieved.end(), [&](const Sentence& g) {
        return fg.priority.leq(best, g);
      });
      ASSERT_TRUE(hit) << io::serialize_aba_text(fg);
    }
  }
}

TEST(Property, LandmarksRoundTrip) {
  gen::Rng rng(113);
  for (const char* name : {"must", "should", "may", "should_not", "must_not"}) {
    const auto ds = tmr::DeonticStrength::from_landmark(name);
    ASSERT_EQ(tmr::DeonticStrength::from_double(ds.value()), ds);
  }
  for (int k = 0; k < 500; ++k) {
    const auto den = static_cast<std::int64_t>(gen::uniform(rng, 1, 1000));
    const auto num = static_cast<std::int64_t>(gen::uniform(rng, 0, 2 * den)) - den;
    const auto ds = tmr::DeonticStrength::from_ratio(num, den);
    ASSERT_EQ(tmr::DeonticStrength::from_double(ds.value()), ds) << num << "/" << den;
  }
}

TEST(Property, ContradictionFreeIsAntitone) {
  gen::Rng rng(114);
  for (int k = 0; k < 200; ++k) {
    const auto b = gen::random_bundle(rng);
    std::set<std::string> names;
    for (const auto& r : b.recommendations) {
      if (gen::coin(rng)) names.insert(r.name);
    }
    if (!tmr::contradiction_free(names, b.interactions)) continue;
    for (const auto& n : std::set<std::string>(names)) {
      auto smaller = names;
      smaller.erase(n);
      ASSERT_TRUE(tmr::contradiction_free(smaller, b.interactions));
    }
  }
}

TEST(Property, MapperOutputIsFlatAndInjective) {
  gen::Rng rng(115);
  for (int k = 0; k < 200; ++k) {
    const auto b = gen::random_bundle(rng);
    const auto pf = tmr::build_patient_framework(b.recommendations, b.interactions, b.context);
    const auto& f = pf.framework.base;
    for (const auto& r : f.rules()) ASSERT_FALSE(f.is_assumption(r.head));
    std::set<std::string> symbols;
    for (const auto& [key, symbol] : pf.report.symbols) ASSERT_TRUE(symbols.insert(symbol).second);
    std::size_t diamonds = 0;
    for (const auto& i : b.interactions) diamonds += i.modal == tmr::Modal::Possible;
    ASSERT_EQ(f.assumption_count(), b.recommendations.size() + diamonds);
    const auto& r = pf.report;
    ASSERT_EQ(r.action_pos + r.action_neg + r.effect_pos + r.effect_neg + r.state_facts +
                  r.contradiction_pos + r.contradiction_neg + r.interaction_facts,
              f.rules().size());
  }
}

TEST(Property, BundlesRoundTrip) {
  gen::Rng rng(116);
  for (int k = 0; k < 100; ++k) {
    const auto b = gen::random_bundle(rng);
    ASSERT_EQ(io::parse_bundle(io::serialize_bundle(b)), b) << io::serialize_bundle(b);
  }
}

TEST(Property, TextRoundTrip) {
  gen::Rng rng(117);
  for (int k = 0; k < 100; ++k) {
    const auto fg = gen::random_goal_framework(rng);
    const auto text = io::serialize_aba_text(fg);
    const auto loaded = io::load_aba_text(text);
    ASSERT_EQ(loaded.base, fg.base) << text;
    ASSERT_EQ(loaded.priority.value_or(aba::PriorityPreorder{}), fg.priority) << text;
    ASSERT_EQ(io::serialize_aba_text(loaded.base, loaded.priority ? &*loaded.priority : nullptr), text);
  }
}
