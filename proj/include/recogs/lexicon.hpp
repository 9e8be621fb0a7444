// recogs/lexicon.hpp - verb lemma -> present participle table.
#pragma once

#include <cctype>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "recogs/corpus.hpp"
#include "recogs/errors.hpp"

namespace recogs {

namespace detail {

inline bool is_vowel_at(std::string_view w, std::size_t i) {
  char c = static_cast<char>(std::tolower(static_cast<unsigned char>(w[i])));
  if (c == 'u' && i > 0 && std::tolower(static_cast<unsigned char>(w[i - 1])) == 'q') return false;
  if (c == 'y') return i > 0 && !is_vowel_at(w, i - 1);
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

inline std::size_t vowel_groups(std::string_view w) {
  std::size_t groups = 0;
  bool in = false;
  for (std::size_t i = 0; i < w.size(); ++i) {
    bool v = is_vowel_at(w, i);
    if (v && !in) ++groups;
    in = v;
  }
  return groups;
}

}  // namespace detail

/// Regular English -ing formation: `ie` -> `ying`, silent-e drop, final
/// consonant doubling for one-syllable CVC stems, `c` -> `ck`. Stress-driven
/// doubling in longer stems (`prefer` -> `preferring`) is not predictable
/// from spelling and belongs in the shipped exception table.
inline std::string participle_of(std::string_view lemma) {
  std::string w(lemma);
  auto n = w.size();
  if (n == 0) return w;
  auto ends = [&](std::string_view s) { return n >= s.size() && std::string_view(w).substr(n - s.size()) == s; };
  if (w == "be") return "being";
  if (ends("ie")) return w.substr(0, n - 2) + "ying";
  if (ends("ee") || ends("ye") || ends("oe")) return w + "ing";
  if (n > 2 && ends("e")) return w.substr(0, n - 1) + "ing";
  if (ends("c")) return w + "king";
  if (n >= 3 && detail::vowel_groups(w) == 1) {
    bool cvc = !detail::is_vowel_at(w, n - 1) && detail::is_vowel_at(w, n - 2) && !detail::is_vowel_at(w, n - 3);
    char last = w[n - 1];
    if (cvc && last != 'w' && last != 'x' && last != 'y') return w + last + "ing";
  }
  return w + "ing";
}

class ParticipleLexicon {
 public:
  ParticipleLexicon() = default;

  /// Two-column TSV: lemma <TAB> participle. Blank lines and `#` comments skipped.
  static ParticipleLexicon load(const std::filesystem::path& path) {
    ParticipleLexicon lex;
    auto bytes = read_file(path);
    std::size_t start = 0, line_no = 0;
    while (start < bytes.size()) {
      auto nl = bytes.find('\n', start);
      std::string line = bytes.substr(start, nl == std::string::npos ? std::string::npos : nl - start);
      start = nl == std::string::npos ? bytes.size() : nl + 1;
      ++line_no;
      if (line.empty() || line[0] == '#') continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
        throw BadColumnCount(line_no, tab == std::string::npos ? 1 : 3);
      lex.add(line.substr(0, tab), line.substr(tab + 1));
    }
    return lex;
  }

  static ParticipleLexicon from_lemmas(const std::vector<std::string>& lemmas) {
    ParticipleLexicon lex;
    for (const auto& l : lemmas) lex.add(l, participle_of(l));
    return lex;
  }

  /// Adds an entry; an existing lemma keeps its first participle.
  void add(std::string lemma, std::string participle) {
    if (lemma.empty() || participle.empty() || participle.find(' ') != std::string::npos)
      throw InvalidConfig("participle entry must be two single tokens: '" + lemma + "' -> '" + participle + "'");
    entries_.emplace(std::move(lemma), std::move(participle));
  }

  /// Fills in any missing lemma by regular morphology.
  void complete(const std::vector<std::string>& lemmas) {
    for (const auto& l : lemmas)
      if (!entries_.count(l)) add(l, participle_of(l));
  }

  const std::string* find(std::string_view lemma) const {
    auto it = entries_.find(std::string(lemma));
    return it == entries_.end() ? nullptr : &it->second;
  }

  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace recogs
