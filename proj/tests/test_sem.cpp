#include <gtest/gtest.h>

#include <random>
#include <set>
#include <tuple>

#include "recogs/sem.hpp"
#include "recogs/sem_oracle.hpp"
#include "support/lf_gen.hpp"

using namespace recogs;

namespace {

LogicalForm recogs_lf(const std::string& compact) { return parse_lf(tokenize_compact(compact), Dialect::ReCOGS); }

// Witness check done by hand: rename predicted, compare conjunct sets.
bool witness_holds(const LogicalForm& pred, const LogicalForm& gold, const VariableRenaming& m) {
  auto mapped = reindex(pred, m);
  std::set<std::tuple<std::string, bool, std::string>> a, b;
  auto key = [](const Predication& p) {
    std::string args;
    for (const auto& t : p.args) args += (t.is_variable() ? std::to_string(t.var_id()) : "'" + t.name()) + ",";
    return std::make_tuple(p.path_string(), p.definite, args);
  };
  mapped.for_each_conjunct([&](const Predication& p) { a.insert(key(p)); });
  gold.for_each_conjunct([&](const Predication& p) { b.insert(key(p)); });
  return a == b;
}

}  // namespace

TEST(ExactMatch, NormalizesWhitespaceRuns) {
  EXPECT_TRUE(exact_match("a ( 1 )", "a ( 1 )"));
  EXPECT_TRUE(exact_match("a ( 1 )  ", "a ( 1 )"));
  EXPECT_TRUE(exact_match("a  (\t1 )", "a ( 1 )"));
  EXPECT_FALSE(exact_match("table ( 46 ) AND sturdy ( 46 )", "table ( 1 ) AND sturdy ( 1 )"));
}

TEST(ExactMatch, NormalizationOracle) {
  auto collapse = [](const std::string& s) {
    std::string out;
    bool space = false;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = true;
        continue;
      }
      if (space && !out.empty()) out += ' ';
      space = false;
      out += c;
    }
    return out;
  };
  for (std::string s : {"x  y", " x y ", "x\ty", "x y  "})
    EXPECT_EQ(exact_match(s, "x y"), collapse(s) == "x y") << s;
}

TEST(SemMatch, TableSturdyPositive) {
  auto r = sem_match(recogs_lf("table(46) AND sturdy(46)"), recogs_lf("table(1) AND sturdy(1)"));
  ASSERT_TRUE(r.matched);
  EXPECT_EQ(r.reason, MismatchReason::None);
  EXPECT_EQ(*r.mapping, (VariableRenaming{{46, 1}}));
}

TEST(SemMatch, TableSturdyNegative) {
  auto r = sem_match(recogs_lf("table(46) AND sturdy(7)"), recogs_lf("table(1) AND sturdy(1)"));
  EXPECT_FALSE(r.matched);
  EXPECT_FALSE(r.mapping.has_value());
  EXPECT_EQ(r.reason, MismatchReason::NoBijection);
}

TEST(SemMatch, ReflexiveWithIdentity) {
  auto lf = recogs_lf("zebra(47) ; need(13) AND agent(13,47) AND xcomp(13,48) AND walk(48) AND agent(48,47)");
  auto r = sem_match(lf, lf);
  ASSERT_TRUE(r.matched);
  EXPECT_EQ(*r.mapping, VariableRenaming::identity(variables_of(lf)));
}

TEST(SemMatch, DuplicateConjunctCollapses) {
  auto gold = recogs_lf("walk(1) AND walk(1)");
  auto pred = recogs_lf("walk(1)");
  EXPECT_TRUE(sem_match(pred, gold).matched);
  EXPECT_TRUE(sem_match_oracle(pred, gold));
}

TEST(SemMatch, DefinitenessIsPartOfIdentity) {
  EXPECT_FALSE(sem_match(recogs_lf("*cake(1) ; eat(2) AND theme(2,1)"), recogs_lf("cake(1) ; eat(2) AND theme(2,1)"))
                   .matched);
}

TEST(SemMatch, SemicolonAndAndArePooled) {
  EXPECT_TRUE(sem_match(recogs_lf("cake(1) ; eat(2) AND theme(2,1)"), recogs_lf("cake(1) AND eat(2) AND theme(2,1)"))
                  .matched);
}

TEST(SemMatch, ConstantsMatchLiterally) {
  auto a = parse_lf("eat . agent ( x _ 1 , Emma )", Dialect::COGS);
  auto b = parse_lf("eat . agent ( x _ 4 , Emma )", Dialect::COGS);
  auto c = parse_lf("eat . agent ( x _ 4 , Liam )", Dialect::COGS);
  EXPECT_TRUE(sem_match(a, b).matched);
  EXPECT_EQ(sem_match(a, c).reason, MismatchReason::ConjunctSetDiffers);
}

TEST(SemMatch, DifferentPredicatesReportSetDifference) {
  EXPECT_EQ(sem_match(recogs_lf("dog(1)"), recogs_lf("cat(1)")).reason, MismatchReason::ConjunctSetDiffers);
}

TEST(SemMatch, BadPredictionIsParseError) {
  auto r = sem_match("dog ( 1", "dog ( 1 )", Dialect::ReCOGS);
  EXPECT_FALSE(r.matched);
  EXPECT_EQ(r.reason, MismatchReason::ParseError);
}

TEST(SemMatch, BadGoldThrows) { EXPECT_THROW(sem_match("dog ( 1 )", "dog ( 1", Dialect::ReCOGS), GoldMalformed); }

TEST(SemMatch, NeedsBijectionNotJustInjection) {
  // two predicted variables cannot collapse onto one gold variable
  EXPECT_FALSE(sem_match(recogs_lf("dog(1) AND dog(2)"), recogs_lf("dog(1)")).matched);
  EXPECT_FALSE(sem_match(recogs_lf("dog(1)"), recogs_lf("dog(1) AND dog(2)")).matched);
}

TEST(SemMatch, SymmetricCycleNeedsBacktracking) {
  auto a = recogs_lf("dog(1) ; dog(2) ; dog(3) AND agent(1,2) AND agent(2,3) AND agent(3,1)");
  auto b = recogs_lf("dog(7) ; dog(8) ; dog(9) AND agent(8,7) AND agent(7,9) AND agent(9,8)");
  auto c = recogs_lf("dog(7) ; dog(8) ; dog(9) AND agent(8,7) AND agent(7,8) AND agent(9,9)");
  EXPECT_TRUE(sem_match(a, b).matched);
  EXPECT_FALSE(sem_match(a, c).matched);
}

TEST(SemOracle, TableSturdyPairs) {
  EXPECT_TRUE(sem_match_oracle(recogs_lf("table(46) AND sturdy(46)"), recogs_lf("table(1) AND sturdy(1)")));
  EXPECT_FALSE(sem_match_oracle(recogs_lf("table(46) AND sturdy(7)"), recogs_lf("table(1) AND sturdy(1)")));
}

TEST(SemOracle, ConstantOnlyForms) {
  auto p = parse_lf("Paula", Dialect::COGS);
  EXPECT_TRUE(sem_match_oracle(p, p));
  EXPECT_TRUE(sem_match(p, p).matched);
}

TEST(SemOracle, RejectsTooManyVariables) {
  std::string s;
  for (int i = 0; i < 9; ++i) s += (i ? " AND " : "") + std::string("dog ( ") + std::to_string(i) + " )";
  auto lf = parse_lf(s, Dialect::ReCOGS);
  EXPECT_THROW(sem_match_oracle(lf, lf), TooManyVariables);
}

TEST(SemProperties, AgreesWithOracleOnRandomPairs) {
  std::mt19937_64 rng(2024);
  std::size_t positives = 0;
  for (int i = 0; i < 2000; ++i) {
    auto nvars = 1 + rng() % 6;
    auto lf = lf_gen::random_lf(rng, nvars, 1 + rng() % 8);
    auto other = (i % 2) ? lf_gen::positive(rng, lf) : lf_gen::positive(rng, lf_gen::corrupt(rng, lf));
    auto r = sem_match(other, lf);
    ASSERT_EQ(r.matched, sem_match_oracle(other, lf)) << render_lf(other) << " vs " << render_lf(lf);
    if (r.matched) {
      ++positives;
      EXPECT_TRUE(witness_holds(other, lf, *r.mapping));
    }
  }
  EXPECT_GT(positives, 900u);
}

TEST(SemProperties, SymmetricAndShuffleInvariant) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 500; ++i) {
    auto a = lf_gen::random_lf(rng, 1 + rng() % 5, 1 + rng() % 6);
    auto b = (i % 3) ? lf_gen::positive(rng, a) : lf_gen::corrupt(rng, a);
    EXPECT_EQ(sem_match(a, b).matched, sem_match(b, a).matched);
    auto shuffled = b;
    std::shuffle(shuffled.main.begin(), shuffled.main.end(), rng);
    EXPECT_EQ(sem_match(a, b).matched, sem_match(a, shuffled).matched);
  }
}

TEST(SemProperties, TransitiveOnPositiveChains) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto a = lf_gen::random_lf(rng, 1 + rng() % 6, 1 + rng() % 6);
    auto b = lf_gen::positive(rng, a);
    auto c = (i % 2) ? lf_gen::positive(rng, b) : lf_gen::corrupt(rng, b);
    if (sem_match(a, b).matched && sem_match(b, c).matched) {
      EXPECT_TRUE(sem_match(a, c).matched);
    }
    EXPECT_EQ(sem_match(a, c).matched, sem_match_oracle(a, c));
  }
}

TEST(SemProperties, ExactImpliesSem) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    auto a = lf_gen::random_lf(rng, 1 + rng() % 4, 1 + rng() % 4);
    auto s = render_lf(a);
    EXPECT_TRUE(sem_match(s, s, Dialect::ReCOGS).matched);
  }
}
