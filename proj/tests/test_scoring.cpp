#include <gtest/gtest.h>

#include <random>

#include "recogs/build.hpp"
#include "recogs/scoring.hpp"
#include "support/mini_cogs.hpp"

using namespace recogs;

namespace {

std::vector<Row> gold_rows(std::size_t n) {
  auto corpus = mini_cogs::generate_corpus(17, {200, 10, 10, n});
  AugmentConfig cfg;
  auto built = build_recogs(corpus, cfg);
  std::vector<Row> rows;
  std::size_t line = 0;
  for (const auto& ex : built.corpus[Split::Gen])
    rows.push_back(Row{ex.sentence_text(), render_lf(ex.lf), ex.gen_type, ++line});
  return rows;
}

std::vector<Prediction> as_predictions(const std::vector<Row>& rows) {
  std::vector<Prediction> out;
  for (const auto& r : rows) out.push_back(Prediction{std::nullopt, r.lf});
  return out;
}

// Swaps the two variables of the first binary conjunct with distinct args.
// Returns false when the LF has no such conjunct.
bool swap_in_one_conjunct(std::string& text) {
  auto lf = parse_lf(text, Dialect::ReCOGS);
  for (auto& p : lf.main) {
    if (p.args.size() == 2 && p.args[0] != p.args[1]) {
      std::swap(p.args[0], p.args[1]);
      text = render_lf(lf);
      return true;
    }
  }
  return false;
}

}  // namespace

TEST(ScoreCorpus, IdenticalIsPerfect) {
  auto gold = gold_rows(60);
  for (auto m : {Metric::Exact, Metric::Sem}) {
    auto t = score_corpus(as_predictions(gold), gold, m, Dialect::ReCOGS);
    EXPECT_EQ(t.overall.matched, gold.size());
    EXPECT_DOUBLE_EQ(t.overall.accuracy(), 100.0);
    EXPECT_NE(t.to_text().find("100.0%"), std::string::npos);
  }
}

TEST(ScoreCorpus, ReindexedGoldIsSemOnly) {
  auto gold = gold_rows(60);
  auto preds = as_predictions(gold);
  for (std::size_t i = 0; i < preds.size(); ++i) {
    auto lf = parse_lf(preds[i].lf, Dialect::ReCOGS);
    auto vars = variables_of(lf);
    ASSERT_FALSE(vars.empty());
    std::map<VarId, VarId> m;
    for (std::size_t k = 0; k < vars.size(); ++k) m[vars[k]] = 5000 + k;  // outside the build range
    preds[i].lf = render_lf(reindex(lf, VariableRenaming(m)));
    ASSERT_NE(preds[i].lf, gold[i].lf);
  }
  EXPECT_DOUBLE_EQ(score_corpus(preds, gold, Metric::Sem, Dialect::ReCOGS).overall.accuracy(), 100.0);
  EXPECT_DOUBLE_EQ(score_corpus(preds, gold, Metric::Exact, Dialect::ReCOGS).overall.accuracy(), 0.0);
}

TEST(ScoreCorpus, HalfCorruptedIsFifty) {
  auto gold = gold_rows(80);
  auto preds = as_predictions(gold);
  std::size_t edits = 0;
  for (std::size_t i = 0; i < preds.size(); i += 2) edits += swap_in_one_conjunct(preds[i].lf);
  ASSERT_EQ(edits, preds.size() / 2);
  auto t = score_corpus(preds, gold, Metric::Sem, Dialect::ReCOGS);
  EXPECT_EQ(t.overall.total - t.overall.matched, edits);
  EXPECT_DOUBLE_EQ(t.overall.accuracy(), 50.0);
}

TEST(ScoreCorpus, GroupsByGenType) {
  auto gold = gold_rows(30);
  auto t = score_corpus(as_predictions(gold), gold, Metric::Exact, Dialect::ReCOGS);
  std::size_t sum = 0;
  for (const auto& [k, v] : t.by_gen_type) sum += v.total;
  EXPECT_EQ(sum, gold.size());
  EXPECT_EQ(t.by_gen_type.size(), 3u);
  EXPECT_EQ(t.to_tsv().substr(0, 29), "group\tmatched\ttotal\taccuracy\n");
}

TEST(ScoreCorpus, LengthMismatch) {
  auto gold = gold_rows(10);
  auto preds = as_predictions(gold);
  preds.pop_back();
  EXPECT_THROW(score_corpus(preds, gold, Metric::Sem, Dialect::ReCOGS), LengthMismatch);
}

TEST(ScoreCorpus, BadTag) {
  auto gold = gold_rows(4);
  gold[2].tag = "bad tag!";
  EXPECT_THROW(score_corpus(as_predictions(gold), gold, Metric::Sem, Dialect::ReCOGS), UnknownSplitTag);
}

TEST(ScoreCorpus, KeyedPredictionsAnyOrder) {
  auto gold = gold_rows(6);
  std::string file;
  for (std::size_t i = gold.size(); i-- > 0;) file += std::to_string(i) + "\t" + gold[i].sentence + "\t" + gold[i].lf + "\n";
  auto preds = parse_predictions(file);
  ASSERT_TRUE(preds[0].id.has_value());
  EXPECT_DOUBLE_EQ(score_corpus(preds, gold, Metric::Exact, Dialect::ReCOGS).overall.accuracy(), 100.0);
  preds[1].id = preds[0].id;
  EXPECT_THROW(score_corpus(preds, gold, Metric::Exact, Dialect::ReCOGS), LengthMismatch);
}

TEST(ScoreCorpus, CorpusRowsAsPredictions) {
  auto gold = gold_rows(5);
  std::string file;
  for (const auto& r : gold) file += r.sentence + "\t" + r.lf + "\t" + r.tag + "\n";
  auto preds = parse_predictions(file);
  ASSERT_EQ(preds.size(), gold.size());
  EXPECT_FALSE(preds[0].id.has_value());
  EXPECT_EQ(preds[3].lf, gold[3].lf);
}

TEST(ScoreCorpus, UnparseablePredictionCountsAsMiss) {
  auto gold = gold_rows(4);
  auto preds = as_predictions(gold);
  preds[0].lf = "garbage (";
  EXPECT_EQ(score_corpus(preds, gold, Metric::Sem, Dialect::ReCOGS).overall.matched, 3u);
}

TEST(ParseMetric, Names) {
  EXPECT_EQ(parse_metric("sem"), Metric::Sem);
  EXPECT_EQ(parse_metric("exact"), Metric::Exact);
  EXPECT_THROW(parse_metric("f1"), InvalidConfig);
}
