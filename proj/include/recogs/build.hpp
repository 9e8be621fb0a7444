// recogs/build.hpp - end-to-end ReCOGS construction from a COGS corpus.
#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "recogs/augment.hpp"
#include "recogs/corpus.hpp"
#include "recogs/errors.hpp"
#include "recogs/lexicon.hpp"
#include "recogs/parallel.hpp"
#include "recogs/random.hpp"
#include "recogs/transforms.hpp"

namespace recogs {

inline constexpr std::string_view kToolVersion = "1.0.0";

struct AugmentConfig {
  std::uint64_t seed = 42;
  std::size_t concat_count = 3072;  ///< concatenated examples per index set
  double prepose_fraction = 0.05;
  double filler_fraction = 0.05;
  int filler_min = 1, filler_max = 3;
  double pv_fraction = 0.0;  ///< 0.15 reproduces the participial-phrase experiment
  int pv_max_chain = 2;
  bool pv_easy = false;
  std::size_t versions = 5;
  VarId var_lo = 0, var_hi = 1000;  ///< random ids drawn from [var_lo, var_hi)
  bool positional = false;          ///< keep positional names (ReCOGS_POS)
  RecogsOptions recogs{};
  unsigned threads = 1;

  void validate() const {
    auto frac = [](double f, const char* name) {
      if (!(f >= 0.0 && f <= 1.0)) throw InvalidConfig(std::string(name) + " must lie in [0, 1]");
    };
    frac(prepose_fraction, "prepose_fraction");
    frac(filler_fraction, "filler_fraction");
    frac(pv_fraction, "pv_fraction");
    if (versions < 1) throw InvalidConfig("versions must be >= 1");
    if (filler_min < 0 || filler_max < filler_min) throw InvalidConfig("filler range must satisfy 0 <= min <= max");
    if (pv_max_chain < 1) throw InvalidConfig("pv_max_chain must be >= 1");
    if (var_hi <= var_lo) throw InvalidConfig("variable id range is empty");
  }

  std::string describe() const {
    std::ostringstream os;
    os << "seed=" << seed << "\nconcat_per_version=" << concat_count << "\nversions=" << versions
       << "\nprepose_fraction=" << prepose_fraction << "\nfiller_fraction=" << filler_fraction
       << "\nfiller_range=" << filler_min << "-" << filler_max << "\npv_fraction=" << pv_fraction
       << "\npv_max_chain=" << pv_max_chain << "\npv_easy=" << (pv_easy ? 1 : 0) << "\nvariable_id_range=" << var_lo
       << "-" << var_hi << "\npositional=" << (positional ? 1 : 0)
       << "\nsplit_nominal_modifiers=" << (recogs.split_nominal_modifiers ? 1 : 0) << "\n";
    return os.str();
  }
};

struct BuildReport {
  std::uint64_t seed = 0;
  std::array<std::size_t, 4> input_counts{};
  std::array<std::size_t, 4> output_counts{};
  std::size_t train_candidates = 0;  ///< before dedup
  std::size_t concat_emitted = 0;
  std::size_t dedup_removed = 0;
  std::size_t leakage_removed = 0;
  /// (version, original train index) of each edited example
  std::vector<std::pair<std::size_t, std::size_t>> prepose_mask, filler_mask, pv_mask;

  std::string to_text(const AugmentConfig& cfg) const {
    std::ostringstream os;
    os << "tool_version=" << kToolVersion << "\n" << cfg.describe();
    for (auto s : kAllSplits) {
      os << "input_" << to_string(s) << "=" << input_counts[static_cast<std::size_t>(s)] << "\n";
      os << "output_" << to_string(s) << "=" << output_counts[static_cast<std::size_t>(s)] << "\n";
    }
    os << "train_candidates=" << train_candidates << "\nconcat_emitted=" << concat_emitted
       << "\ndedup_removed=" << dedup_removed << "\nleakage_removed=" << leakage_removed
       << "\nprepose_applied=" << prepose_mask.size() << "\nfiller_applied=" << filler_mask.size()
       << "\npv_applied=" << pv_mask.size() << "\n";
    auto mask = [&](const char* key, const auto& m) {
      os << key << "=";
      for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i].first << ":" << m[i].second;
      os << "\n";
    };
    mask("prepose_mask", prepose_mask);
    mask("filler_mask", filler_mask);
    mask("pv_mask", pv_mask);
    return os.str();
  }
};

/// Converts one positional COGS example to ReCOGS, drawing a fresh id set
/// from `rng` unless `cfg.positional`.
inline Example convert_example(const Example& ex, const AugmentConfig& cfg, Rng& rng) {
  Example out;
  out.sentence = ex.sentence;
  out.split = ex.split;
  out.gen_type = ex.gen_type;
  out.lf = to_recogs(ex.lf, ex.sentence, std::nullopt, cfg.recogs);
  if (!cfg.positional) {
    auto vars = variables_of(out.lf);
    out.lf = reindex(out.lf, random_renaming(vars, cfg.var_lo, cfg.var_hi, rng));
  }
  return out;
}

struct BuildResult {
  Corpus corpus;
  BuildReport report;
};

namespace detail {

struct TrainSlot {
  Example ex;
  bool preposed = false, filled = false, pv = false;
};

inline std::string pair_key(const Example& ex) { return ex.sentence_text() + '\t' + render_lf(ex.lf); }

}  // namespace detail

/// Builds ReCOGS from a COGS corpus. Eval splits are converted one-to-one;
/// train gets `versions` renamed copies of every example (with preposing,
/// fillers and optional PV phrases applied at the configured rates), plus
/// `concat_count` concatenations per version, deduplicated on the exact
/// (sentence, LF) pair and purged of anything equal to an eval pair.
inline BuildResult build_recogs(const Corpus& cogs, const AugmentConfig& cfg,
                                const ParticipleLexicon* lexicon = nullptr) {
  cfg.validate();
  BuildResult res;
  auto& report = res.report;
  report.seed = cfg.seed;
  for (auto s : kAllSplits) report.input_counts[static_cast<std::size_t>(s)] = cogs[s].size();

  // evaluation splits: one conversion each
  std::unordered_set<std::string> eval_keys;
  for (auto s : {Split::Dev, Split::Test, Split::Gen}) {
    const auto& in = cogs[s];
    std::vector<Example> out(in.size());
    parallel_for(in.size(), cfg.threads, [&](std::size_t i) {
      auto rng = Rng::stream(cfg.seed, "eval", {static_cast<std::uint64_t>(s), i});
      out[i] = convert_example(in[i], cfg, rng);
    });
    for (const auto& ex : out) eval_keys.insert(detail::pair_key(ex));
    res.corpus[s] = std::move(out);
  }

  const auto& train = cogs[Split::Train];
  std::vector<std::string> nouns;
  ParticipleLexicon lex;
  if (cfg.pv_fraction > 0) {
    nouns = noun_inventory(train);
    if (lexicon) lex = *lexicon;
    lex.complete(verb_inventory(train));
  }
  std::vector<std::size_t> concat_pool;
  for (std::size_t i = 0; i < train.size(); ++i)
    if (!train[i].lf.is_primitive()) concat_pool.push_back(i);
  const std::size_t k = concat_pool.empty() ? 0 : cfg.concat_count;

  std::vector<Example> candidates;
  candidates.reserve(cfg.versions * (train.size() + k));
  for (std::size_t v = 0; v < cfg.versions; ++v) {
    std::vector<detail::TrainSlot> slots(train.size());
    parallel_for(train.size(), cfg.threads, [&](std::size_t i) {
      auto rng = Rng::stream(cfg.seed, "train", {i, v});
      auto& slot = slots[i];
      Example ex = train[i];
      if (!ex.lf.is_primitive()) {
        if (cfg.prepose_fraction > 0) {
          auto spans = preposable_objects(ex);
          if (!spans.empty() && rng.bernoulli(cfg.prepose_fraction)) {
            ex = prepose_object(ex, rng.pick(spans));
            slot.preposed = true;
          }
        }
        if (cfg.filler_fraction > 0 && has_pp_modifier(ex.lf) && rng.bernoulli(cfg.filler_fraction)) {
          ex = insert_fillers(ex, cfg.filler_min, cfg.filler_max, rng);
          slot.filled = true;
        }
        if (cfg.pv_fraction > 0 && !pv_heads(ex).empty() && rng.bernoulli(cfg.pv_fraction)) {
          ex = add_participial_phrase(ex, lex, nouns, cfg.pv_easy, cfg.pv_max_chain, rng);
          slot.pv = true;
        }
      }
      slot.ex = convert_example(ex, cfg, rng);
    });
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slots[i].preposed) report.prepose_mask.emplace_back(v, i);
      if (slots[i].filled) report.filler_mask.emplace_back(v, i);
      if (slots[i].pv) report.pv_mask.emplace_back(v, i);
      candidates.push_back(std::move(slots[i].ex));
    }

    std::vector<Example> concats(k);
    parallel_for(k, cfg.threads, [&](std::size_t j) {
      auto rng = Rng::stream(cfg.seed, "concat", {j, v});
      const auto& a = train[rng.pick(concat_pool)];
      const auto& b = train[rng.pick(concat_pool)];
      concats[j] = convert_example(concat_examples(a, b), cfg, rng);
    });
    report.concat_emitted += concats.size();
    for (auto& ex : concats) candidates.push_back(std::move(ex));
  }
  report.train_candidates = candidates.size();

  std::unordered_set<std::string> seen;
  auto& out_train = res.corpus[Split::Train];
  out_train.reserve(candidates.size());
  for (auto& ex : candidates) {
    auto key = detail::pair_key(ex);
    if (!seen.insert(key).second) {
      ++report.dedup_removed;
      continue;
    }
    if (eval_keys.count(key)) {
      ++report.leakage_removed;
      continue;
    }
    ex.split = Split::Train;
    out_train.push_back(std::move(ex));
  }
  for (auto s : kAllSplits) report.output_counts[static_cast<std::size_t>(s)] = res.corpus[s].size();
  return res;
}

}  // namespace recogs
