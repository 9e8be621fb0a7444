// recogs/scoring.hpp - corpus-level accuracy under exact match or SEM.
#pragma once

#include <cctype>
#include <charconv>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "recogs/corpus.hpp"
#include "recogs/errors.hpp"
#include "recogs/sem.hpp"

namespace recogs {

enum class Metric { Exact, Sem };

inline Metric parse_metric(std::string_view s) {
  if (s == "exact") return Metric::Exact;
  if (s == "sem") return Metric::Sem;
  throw InvalidConfig("unknown metric '" + std::string(s) + "' (expected exact or sem)");
}

struct Tally {
  std::size_t matched = 0, total = 0;
  double accuracy() const { return total ? 100.0 * static_cast<double>(matched) / static_cast<double>(total) : 0.0; }
};

struct ScoreTable {
  Tally overall;
  std::map<std::string, Tally> by_gen_type;

  std::string to_tsv() const {
    std::string out = "group\tmatched\ttotal\taccuracy\n";
    auto line = [&](const std::string& g, const Tally& t) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.1f", t.accuracy());
      out += g + '\t' + std::to_string(t.matched) + '\t' + std::to_string(t.total) + '\t' + buf + '\n';
    };
    line("overall", overall);
    for (const auto& [g, t] : by_gen_type) line(g, t);
    return out;
  }

  std::string to_text() const {
    std::string out;
    auto line = [&](const std::string& g, const Tally& t) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-40s %6.1f%%  (%zu/%zu)\n", g.c_str(), t.accuracy(), t.matched, t.total);
      out += buf;
    };
    line("overall", overall);
    for (const auto& [g, t] : by_gen_type) line("  " + g, t);
    return out;
  }
};

/// Prediction lines are either a bare LF, or `id <TAB> sentence <TAB> LF`
/// where id is the 0-based gold row, or a corpus row `sentence <TAB> LF <TAB> tag`.
/// Keyed files may list rows in any order.
struct Prediction {
  std::optional<std::size_t> id;
  std::string lf;
};

inline std::vector<Prediction> parse_predictions(std::string_view bytes) {
  std::vector<Prediction> out;
  std::size_t start = 0, line_no = 0;
  while (start < bytes.size()) {
    auto nl = bytes.find('\n', start);
    auto line = bytes.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? bytes.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    auto t1 = line.find('\t');
    if (t1 == std::string_view::npos) {
      out.push_back(Prediction{std::nullopt, std::string(line)});
      continue;
    }
    auto t2 = line.find('\t', t1 + 1);
    if (t2 == std::string_view::npos || line.find('\t', t2 + 1) != std::string_view::npos)
      throw BadColumnCount(line_no, t2 == std::string_view::npos ? 2 : 4);
    std::size_t id = 0;
    auto idtxt = line.substr(0, t1);
    auto [p, ec] = std::from_chars(idtxt.data(), idtxt.data() + idtxt.size(), id);
    if (ec != std::errc{} || p != idtxt.data() + idtxt.size()) {
      // corpus row: sentence, LF, tag
      out.push_back(Prediction{std::nullopt, std::string(line.substr(t1 + 1, t2 - t1 - 1))});
      continue;
    }
    out.push_back(Prediction{id, std::string(line.substr(t2 + 1))});
  }
  return out;
}

inline bool is_valid_tag(std::string_view tag) {
  if (tag.empty()) return false;
  for (char c : tag)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-')) return false;
  return true;
}

/// Scores predictions against gold rows (raw TSV rows, so unparsed gold
/// strings are compared verbatim under exact match).
inline ScoreTable score_corpus(const std::vector<Prediction>& predictions, const std::vector<Row>& gold, Metric metric,
                               Dialect dialect) {
  bool keyed = !predictions.empty() && predictions.front().id.has_value();
  for (const auto& p : predictions)
    if (p.id.has_value() != keyed) throw InvalidConfig("prediction file mixes keyed and unkeyed lines");
  if (predictions.size() != gold.size())
    throw LengthMismatch(std::to_string(predictions.size()) + " predictions for " + std::to_string(gold.size()) +
                         " gold rows");
  std::vector<const Prediction*> aligned(gold.size(), nullptr);
  for (std::size_t i = 0; i < predictions.size(); ++i) {
    std::size_t at = keyed ? *predictions[i].id : i;
    if (at >= gold.size()) throw LengthMismatch("prediction id " + std::to_string(at) + " is past the gold file");
    if (aligned[at]) throw LengthMismatch("duplicate prediction for id " + std::to_string(at));
    aligned[at] = &predictions[i];
  }

  ScoreTable table;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto& g = gold[i];
    if (!is_valid_tag(g.tag)) throw UnknownSplitTag("line " + std::to_string(g.line) + ": bad tag '" + g.tag + "'");
    bool ok = metric == Metric::Exact ? exact_match(aligned[i]->lf, g.lf)
                                      : sem_match(aligned[i]->lf, g.lf, dialect).matched;
    auto& t = table.by_gen_type[g.tag];
    ++t.total;
    ++table.overall.total;
    if (ok) {
      ++t.matched;
      ++table.overall.matched;
    }
  }
  return table;
}

}  // namespace recogs
