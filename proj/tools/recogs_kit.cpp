// recogs-kit: command-line front end for ingestion, statistics, LF
// transforms, ReCOGS generation and scoring.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recogs/recogs.hpp"

using namespace recogs;
namespace fs = std::filesystem;

namespace {

/// Key=value reproducibility record written next to every output.
class Manifest {
 public:
  explicit Manifest(std::string command) {
    add("tool_version", std::string(kToolVersion));
    add("command", std::move(command));
  }
  void add(const std::string& key, const std::string& value) { text_ += key + "=" + value + "\n"; }
  void add_block(const std::string& block) { text_ += block; }
  void input(const fs::path& p, const std::string& sha) { add("input " + p.string(), "sha256:" + sha); }
  void output(const fs::path& p, std::string_view bytes) { add("output " + p.string(), "sha256:" + sha256_hex(bytes)); }
  void write(const fs::path& dir) const { write_file(dir / "manifest.txt", text_); }

 private:
  std::string text_;
};

std::string argv_line(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) out += (i ? " " : "") + std::string(argv[i]);
  return out;
}

void write_tracked(Manifest& m, const fs::path& p, const std::string& bytes) {
  write_file(p, bytes);
  m.output(p, bytes);
}

Dialect parse_dialect(const std::string& s) {
  if (s == "cogs") return Dialect::COGS;
  if (s == "recogs") return Dialect::ReCOGS;
  throw InvalidConfig("unknown dialect '" + s + "' (expected cogs or recogs)");
}

// ---------------------------------------------------------------------------

struct StatsOpts {
  std::string input, output, split = "train";
  std::size_t top = 50;
};

int cmd_stats(const StatsOpts& o, const std::string& cmdline) {
  auto corpus = ingest_directory(o.input);
  auto split = parse_split(o.split);
  Manifest m(cmdline);
  for (const auto& e : corpus.manifest) m.input(e.path, e.sha256);

  std::printf("rows");
  for (auto s : kAllSplits) std::printf(" %s=%zu", std::string(to_string(s)).c_str(), corpus[s].size());
  std::printf("\n");

  auto bigrams = stats_bigrams(corpus, split);
  std::string big = "first\tsecond\tcount\n";
  for (const auto& b : bigrams) big += b.first + '\t' + b.second + '\t' + std::to_string(b.count) + '\n';
  std::printf("top LF bigrams in %s:\n", o.split.c_str());
  for (std::size_t i = 0; i < std::min(o.top, bigrams.size()); ++i)
    std::printf("  %-12s %-12s %llu\n", bigrams[i].first.c_str(), bigrams[i].second.c_str(),
                static_cast<unsigned long long>(bigrams[i].count));

  auto lengths = stats_lengths(corpus);
  std::string hist = "split\tkind\tlength\tcount\n";
  for (auto s : kAllSplits) {
    const auto& st = lengths[static_cast<std::size_t>(s)];
    for (auto [len, n] : st.sentence_hist)
      hist += std::string(to_string(s)) + "\tsentence\t" + std::to_string(len) + '\t' + std::to_string(n) + '\n';
    for (auto [len, n] : st.lf_hist)
      hist += std::string(to_string(s)) + "\tlf\t" + std::to_string(len) + '\t' + std::to_string(n) + '\n';
  }
  const auto& tr = lengths[0];
  const auto& gen = lengths[3];
  std::printf("train max length: sentence %zu, LF %zu\n", tr.max_sentence, tr.max_lf);
  std::printf("gen   min length: sentence %zu, LF %zu; max: sentence %zu, LF %zu\n", gen.min_sentence, gen.min_lf,
              gen.max_sentence, gen.max_lf);

  if (!o.output.empty()) {
    fs::path out = o.output;
    write_tracked(m, out / ("bigrams_" + o.split + ".tsv"), big);
    write_tracked(m, out / "lengths.tsv", hist);
    m.write(out);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct TransformOpts {
  std::string lf, input, output, remove;
  bool to_recogs = false, positional = false, split_modifiers = false;
  std::uint64_t seed = 42;
};

int cmd_transform(const TransformOpts& o, const std::string& cmdline) {
  auto set = TokenRemovalSet::parse(o.remove);
  if (!o.lf.empty()) {
    if (o.to_recogs) throw InvalidConfig("--to-recogs needs a sentence; use --input/--output");
    std::printf("%s\n", remove_tokens(o.lf, set).c_str());
    return 0;
  }
  if (o.input.empty() || o.output.empty()) throw InvalidConfig("transform needs --lf, or --input and --output");
  if (o.to_recogs && !set.empty()) throw InvalidConfig("--remove applies to COGS LFs; drop it with --to-recogs");

  auto corpus = ingest_directory(o.input);
  Manifest m(cmdline);
  for (const auto& e : corpus.manifest) m.input(e.path, e.sha256);
  m.add("remove", set.to_string());
  m.add("to_recogs", o.to_recogs ? "1" : "0");
  m.add("positional", o.positional ? "1" : "0");
  m.add("seed", std::to_string(o.seed));
  RecogsOptions ro;
  ro.split_nominal_modifiers = o.split_modifiers;
  const unsigned threads = threads_from_env();
  for (auto s : kAllSplits) {
    const auto& exs = corpus[s];
    if (exs.empty()) continue;
    std::vector<std::string> lines(exs.size());
    parallel_for(exs.size(), threads, [&](std::size_t i) {
      const auto& ex = exs[i];
      std::string lf;
      if (o.to_recogs) {
        auto r = to_recogs(ex.lf, ex.sentence, std::nullopt, ro);
        if (!o.positional) {
          auto rng = Rng::stream(o.seed, "transform", {static_cast<std::uint64_t>(s), i});
          r = reindex(r, random_renaming(variables_of(r), 0, 1000, rng));
        }
        lf = render_lf(r);
      } else {
        lf = render_lf(ex.lf, RenderStyle{set, false});
      }
      lines[i] = ex.sentence_text() + '\t' + lf + '\t' + ex.gen_type + '\n';
    });
    std::string bytes;
    for (auto& l : lines) bytes += l;
    write_tracked(m, fs::path(o.output) / (std::string(to_string(s)) + ".tsv"), bytes);
  }
  m.write(o.output);
  std::printf("wrote %s\n", o.output.c_str());
  return 0;
}

// ---------------------------------------------------------------------------

struct GenerateOpts {
  std::string input, output, lexicon;
  AugmentConfig cfg;
};

int cmd_generate(GenerateOpts o, const std::string& cmdline) {
  o.cfg.threads = threads_from_env();
  o.cfg.validate();
  auto corpus = ingest_directory(o.input);
  std::optional<ParticipleLexicon> lex;
  Manifest m(cmdline);
  for (const auto& e : corpus.manifest) m.input(e.path, e.sha256);
  if (!o.lexicon.empty()) {
    lex = ParticipleLexicon::load(o.lexicon);
    m.input(o.lexicon, sha256_hex(read_file(o.lexicon)));
  }
  auto built = build_recogs(corpus, o.cfg, lex ? &*lex : nullptr);
  fs::path out = o.output;
  for (auto s : kAllSplits)
    write_tracked(m, out / (std::string(to_string(s)) + ".tsv"), render_split(built.corpus[s]));
  auto report = built.report.to_text(o.cfg);
  write_tracked(m, out / "build_report.txt", report);
  m.add_block(o.cfg.describe());
  m.write(out);
  std::printf("train=%zu dev=%zu test=%zu gen=%zu (dedup removed %zu, leakage removed %zu)\n",
              built.corpus[Split::Train].size(), built.corpus[Split::Dev].size(), built.corpus[Split::Test].size(),
              built.corpus[Split::Gen].size(), built.report.dedup_removed, built.report.leakage_removed);
  return 0;
}

// ---------------------------------------------------------------------------

struct ScoreOpts {
  std::string gold, predictions, output, metric = "sem", dialect = "recogs";
};

int cmd_score(const ScoreOpts& o, const std::string& cmdline) {
  auto metric = parse_metric(o.metric);
  auto dialect = parse_dialect(o.dialect);
  auto gold_bytes = read_file(o.gold);
  auto pred_bytes = read_file(o.predictions);
  auto table = score_corpus(parse_predictions(pred_bytes), parse_rows(gold_bytes), metric, dialect);
  std::printf("%s", table.to_text().c_str());
  if (!o.output.empty()) {
    Manifest m(cmdline);
    m.input(o.gold, sha256_hex(gold_bytes));
    m.input(o.predictions, sha256_hex(pred_bytes));
    m.add("metric", o.metric);
    m.add("dialect", o.dialect);
    write_tracked(m, fs::path(o.output) / "scores.tsv", table.to_tsv());
    m.write(o.output);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recogs-kit: COGS/ReCOGS logical-form toolkit"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  StatsOpts stats;
  auto* s = app.add_subcommand("stats", "LF bigram counts and length histograms");
  s->add_option("--input", stats.input, "directory with train/dev/test/gen.tsv")->required();
  s->add_option("--output", stats.output, "directory for bigram/length TSVs and manifest");
  s->add_option("--split", stats.split, "split for bigram counts")->capture_default_str();
  s->add_option("--top", stats.top, "bigrams to print")->capture_default_str();

  TransformOpts tr;
  auto* t = app.add_subcommand("transform", "remove redundant LF tokens or convert to ReCOGS");
  t->add_option("--lf", tr.lf, "single COGS LF string (result printed)");
  t->add_option("--input", tr.input, "input corpus directory");
  t->add_option("--output", tr.output, "output corpus directory");
  t->add_option("--remove", tr.remove, "token removal set, e.g. \"x,_\" or \"x,_,(,),,\"");
  t->add_flag("--to-recogs", tr.to_recogs, "convert each example to ReCOGS");
  t->add_flag("--positional", tr.positional, "keep positional variable ids (with --to-recogs)");
  t->add_flag("--split-nominal-modifiers", tr.split_modifiers, "split nmod/acl predicates in ReCOGS");
  t->add_option("--seed", tr.seed, "seed for variable renaming")->capture_default_str();

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "build ReCOGS from a COGS corpus");
  g->add_option("--input", gen.input, "COGS corpus directory")->required();
  g->add_option("--output", gen.output, "output directory")->required();
  g->add_option("--seed", gen.cfg.seed, "random seed")->capture_default_str();
  g->add_option("--k", gen.cfg.concat_count, "concatenated examples per version")->capture_default_str();
  g->add_option("--versions", gen.cfg.versions, "renamed copies of each train example")->capture_default_str();
  g->add_option("--prepose-frac", gen.cfg.prepose_fraction, "fraction of examples preposed")->capture_default_str();
  g->add_option("--filler-frac", gen.cfg.filler_fraction, "fraction of examples given fillers")->capture_default_str();
  g->add_option("--filler-min", gen.cfg.filler_min, "fewest fillers per edited example")->capture_default_str();
  g->add_option("--filler-max", gen.cfg.filler_max, "most fillers per edited example")->capture_default_str();
  g->add_option("--pv-frac", gen.cfg.pv_fraction, "fraction of examples given participial phrases")
      ->capture_default_str();
  g->add_option("--pv-max-chain", gen.cfg.pv_max_chain, "longest participial chain")->capture_default_str();
  g->add_flag("--pv-easy", gen.cfg.pv_easy, "use nmod instead of acl for participial phrases");
  g->add_option("--var-lo", gen.cfg.var_lo, "smallest random variable id")->capture_default_str();
  g->add_option("--var-hi", gen.cfg.var_hi, "random variable ids are below this")->capture_default_str();
  g->add_flag("--positional", gen.cfg.positional, "keep positional variable ids");
  g->add_flag("--split-nominal-modifiers", gen.cfg.recogs.split_nominal_modifiers, "split nmod/acl predicates");
  g->add_option("--lexicon", gen.lexicon, "participle lexicon TSV (lemma, participle)");

  ScoreOpts sc;
  auto* c = app.add_subcommand("score", "accuracy of predictions against a gold TSV");
  c->add_option("--gold", sc.gold, "gold TSV (sentence, LF, tag)")->required();
  c->add_option("--predictions", sc.predictions, "one LF per line, id<TAB>sentence<TAB>LF, or a corpus TSV")->required();
  c->add_option("--metric", sc.metric, "exact or sem")->capture_default_str();
  c->add_option("--dialect", sc.dialect, "cogs or recogs")->capture_default_str();
  c->add_option("--output", sc.output, "directory for scores.tsv and manifest");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  const auto cmdline = argv_line(argc, argv);
  try {
    if (*s) return cmd_stats(stats, cmdline);
    if (*t) return cmd_transform(tr, cmdline);
    if (*g) return cmd_generate(gen, cmdline);
    if (*c) return cmd_score(sc, cmdline);
  } catch (const Error& e) {
    std::fprintf(stderr, "error kind=%s message=\"%s\"\n", e.kind().c_str(), e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error kind=Internal message=\"%s\"\n", e.what());
    return 3;
  }
  return 1;
}
