#include <gtest/gtest.h>

#include "recogs/augment.hpp"
#include "recogs/lexicon.hpp"
#include "support/mini_cogs.hpp"

using namespace recogs;

TEST(Participle, RegularMorphology) {
  EXPECT_EQ(participle_of("paint"), "painting");
  EXPECT_EQ(participle_of("bake"), "baking");
  EXPECT_EQ(participle_of("run"), "running");
  EXPECT_EQ(participle_of("tie"), "tying");
  EXPECT_EQ(participle_of("see"), "seeing");
  EXPECT_EQ(participle_of("hold"), "holding");
  EXPECT_EQ(participle_of("roll"), "rolling");
  EXPECT_EQ(participle_of("snooze"), "snoozing");
  EXPECT_EQ(participle_of("mix"), "mixing");
  EXPECT_EQ(participle_of("quiz"), "quizzing");
  EXPECT_EQ(participle_of("picnic"), "picnicking");
  EXPECT_EQ(participle_of("be"), "being");
  EXPECT_EQ(participle_of("play"), "playing");
  EXPECT_EQ(participle_of("nap"), "napping");
  EXPECT_EQ(participle_of("sleep"), "sleeping");
}

TEST(ParticipleLexicon, ShippedFileCoversFixtureVerbs) {
  auto lex = ParticipleLexicon::load(RECOGS_LEXICON_PATH);
  EXPECT_GT(lex.size(), 50u);
  for (const auto& [lemma, part] : lex.entries()) {
    EXPECT_EQ(part.find(' '), std::string::npos);
    EXPECT_EQ(part.substr(part.size() - 3), "ing") << lemma;
  }
  auto c = mini_cogs::generate_corpus(2, {300, 1, 1, 1});
  for (const auto& v : verb_inventory(c[Split::Train])) EXPECT_NE(lex.find(v), nullptr) << v;
  EXPECT_EQ(*lex.find("paint"), "painting");
}

TEST(ParticipleLexicon, CompleteKeepsExistingEntries) {
  ParticipleLexicon lex;
  lex.add("prefer", "preferring");
  lex.complete({"prefer", "walk"});
  EXPECT_EQ(*lex.find("prefer"), "preferring");
  EXPECT_EQ(*lex.find("walk"), "walking");
  EXPECT_THROW(lex.add("a", "two words"), InvalidConfig);
}
