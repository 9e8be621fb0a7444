// recogs/corpus.hpp - examples, splits and the 3-column TSV persistence format.
//
//   sentence <TAB> logical form <TAB> generalization tag
//
// One file per split (train.tsv, dev.tsv, test.tsv, gen.tsv), mirroring the
// upstream COGS distribution. Every load and save records a SHA-256 manifest.
#pragma once

#include <openssl/evp.h>

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "recogs/errors.hpp"
#include "recogs/lf.hpp"

namespace recogs {

enum class Split : std::uint8_t { Train, Dev, Test, Gen };

inline constexpr std::array<Split, 4> kAllSplits{Split::Train, Split::Dev, Split::Test, Split::Gen};

inline std::string_view to_string(Split s) {
  switch (s) {
    case Split::Train: return "train";
    case Split::Dev: return "dev";
    case Split::Test: return "test";
    case Split::Gen: return "gen";
  }
  return "?";
}

inline Split parse_split(std::string_view s) {
  for (auto sp : kAllSplits)
    if (to_string(sp) == s) return sp;
  throw UnknownSplit("unknown split '" + std::string(s) + "' (expected train, dev, test or gen)");
}

struct Example {
  std::vector<std::string> sentence;
  LogicalForm lf;
  Split split = Split::Train;
  std::string gen_type;

  std::string sentence_text() const { return join_tokens(sentence); }
};

inline std::vector<std::string> split_sentence(std::string_view text) {
  std::vector<std::string> out;
  for (auto t : split_spaces(text)) out.emplace_back(t);
  return out;
}

/// SHA-256 of a byte string, lowercase hex.
inline std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw IoError("SHA-256 computation failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw IoError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p, std::string_view bytes) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw IoError("cannot write " + p.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + p.string());
}

struct ManifestEntry {
  std::string path;
  std::string sha256;
  std::size_t rows = 0;
};

struct Corpus {
  std::array<std::vector<Example>, 4> splits;
  std::vector<ManifestEntry> manifest;

  std::vector<Example>& operator[](Split s) { return splits[static_cast<std::size_t>(s)]; }
  const std::vector<Example>& operator[](Split s) const { return splits[static_cast<std::size_t>(s)]; }

  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& s : splits) n += s.size();
    return n;
  }
};

/// One raw TSV row, before LF parsing.
struct Row {
  std::string sentence, lf, tag;
  std::size_t line = 0;  ///< 1-based
};

inline std::vector<Row> parse_rows(std::string_view bytes) {
  std::vector<Row> rows;
  std::size_t line_no = 0, start = 0;
  while (start < bytes.size()) {
    auto nl = bytes.find('\n', start);
    auto line = bytes.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
    start = nl == std::string_view::npos ? bytes.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    std::size_t c0 = 0;
    while (true) {
      auto tab = line.find('\t', c0);
      cols.push_back(line.substr(c0, tab == std::string_view::npos ? std::string_view::npos : tab - c0));
      if (tab == std::string_view::npos) break;
      c0 = tab + 1;
    }
    if (cols.size() != 3) throw BadColumnCount(line_no, cols.size());
    rows.push_back(Row{std::string(cols[0]), std::string(cols[1]), std::string(cols[2]), line_no});
  }
  return rows;
}

inline std::vector<Example> parse_examples(const std::vector<Row>& rows, Split split, Dialect dialect,
                                           const std::string& source = "") {
  std::vector<Example> out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    Example ex;
    ex.sentence = split_sentence(r.sentence);
    if (ex.sentence.empty()) throw MalformedLF(0, source + ":" + std::to_string(r.line) + ": empty sentence");
    try {
      ex.lf = parse_lf(r.lf, dialect);
    } catch (const MalformedLF& e) {
      throw MalformedLF(e.position(), source + ":" + std::to_string(r.line) + ": " + e.what());
    }
    ex.split = split;
    ex.gen_type = r.tag;
    out.push_back(std::move(ex));
  }
  return out;
}

/// Loads explicit files; the split is taken from each file's stem.
inline Corpus ingest(const std::vector<std::filesystem::path>& paths, Dialect dialect = Dialect::COGS) {
  Corpus c;
  for (const auto& p : paths) {
    Split split = parse_split(p.stem().string());
    auto bytes = read_file(p);
    auto rows = parse_rows(bytes);
    auto exs = parse_examples(rows, split, dialect, p.filename().string());
    c.manifest.push_back(ManifestEntry{p.string(), sha256_hex(bytes), rows.size()});
    auto& dst = c[split];
    dst.insert(dst.end(), std::make_move_iterator(exs.begin()), std::make_move_iterator(exs.end()));
  }
  return c;
}

/// Loads whichever of train/dev/test/gen.tsv exist under `dir`.
inline Corpus ingest_directory(const std::filesystem::path& dir, Dialect dialect = Dialect::COGS) {
  if (!std::filesystem::is_directory(dir)) throw IoError(dir.string() + " is not a directory");
  std::vector<std::filesystem::path> paths;
  for (auto s : kAllSplits) {
    auto p = dir / (std::string(to_string(s)) + ".tsv");
    if (std::filesystem::exists(p)) paths.push_back(p);
  }
  if (paths.empty()) throw IoError("no split files (train/dev/test/gen.tsv) in " + dir.string());
  return ingest(paths, dialect);
}

inline std::string render_row(const Example& ex) {
  return ex.sentence_text() + '\t' + render_lf(ex.lf) + '\t' + ex.gen_type + '\n';
}

inline std::string render_split(const std::vector<Example>& exs) {
  std::string out;
  for (const auto& ex : exs) out += render_row(ex);
  return out;
}

/// Writes one TSV per non-empty split and returns the manifest of what was written.
inline std::vector<ManifestEntry> write_corpus(const Corpus& c, const std::filesystem::path& dir) {
  std::vector<ManifestEntry> out;
  for (auto s : kAllSplits) {
    if (c[s].empty()) continue;
    auto p = dir / (std::string(to_string(s)) + ".tsv");
    auto bytes = render_split(c[s]);
    write_file(p, bytes);
    out.push_back(ManifestEntry{p.string(), sha256_hex(bytes), c[s].size()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Statistics
// ---------------------------------------------------------------------------

struct BigramCount {
  std::string first, second;
  std::uint64_t count = 0;
};

/// Token-bigram frequencies over all rendered LFs of a split, most frequent
/// first (ties broken lexicographically).
inline std::vector<BigramCount> stats_bigrams(const Corpus& c, Split split) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  for (const auto& ex : c[split]) {
    auto toks = render_tokens(ex.lf);
    for (std::size_t i = 0; i + 1 < toks.size(); ++i) ++counts[{toks[i], toks[i + 1]}];
  }
  std::vector<BigramCount> out;
  out.reserve(counts.size());
  for (auto& [k, n] : counts) out.push_back(BigramCount{k.first, k.second, n});
  std::stable_sort(out.begin(), out.end(), [](const BigramCount& a, const BigramCount& b) { return a.count > b.count; });
  return out;
}

inline std::uint64_t bigram_count(const std::vector<BigramCount>& table, std::string_view a, std::string_view b) {
  for (const auto& e : table)
    if (e.first == a && e.second == b) return e.count;
  return 0;
}

struct LengthStats {
  std::map<std::size_t, std::uint64_t> sentence_hist;  ///< token length -> count (unit bins)
  std::map<std::size_t, std::uint64_t> lf_hist;
  std::size_t max_sentence = 0, max_lf = 0;
  std::size_t min_sentence = 0, min_lf = 0;
};

inline std::array<LengthStats, 4> stats_lengths(const Corpus& c) {
  std::array<LengthStats, 4> out;
  for (auto s : kAllSplits) {
    auto& st = out[static_cast<std::size_t>(s)];
    bool first = true;
    for (const auto& ex : c[s]) {
      std::size_t sl = ex.sentence.size(), ll = render_tokens(ex.lf).size();
      ++st.sentence_hist[sl];
      ++st.lf_hist[ll];
      if (first) {
        st.min_sentence = st.max_sentence = sl;
        st.min_lf = st.max_lf = ll;
        first = false;
      }
      st.max_sentence = std::max(st.max_sentence, sl);
      st.max_lf = std::max(st.max_lf, ll);
      st.min_sentence = std::min(st.min_sentence, sl);
      st.min_lf = std::min(st.min_lf, ll);
    }
  }
  return out;
}

}  // namespace recogs
