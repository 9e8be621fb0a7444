// Test fixture: a small COGS-style grammar that emits (sentence, LF, tag)
// rows in the upstream TSV layout. It covers every LF construct the real
// corpus uses (definite/indefinite NPs, proper-noun constants, PP chains,
// CP embedding, xcomp control, datives, passives, lambda primitives) so
// corpus-scale properties can be checked without the real data files.
#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "recogs/corpus.hpp"

namespace mini_cogs {

struct Verb {
  const char* lemma;
  const char* past;
  const char* participle;
};

inline const std::vector<std::string> kProper{"Emma", "Liam", "Noah", "Mia", "Olivia", "Lina",
                                              "John", "James", "Ava", "Charlotte"};
inline const std::vector<std::string> kNouns{"cake",  "table", "boy",    "girl",   "cat",      "dog",   "box",
                                             "tent",  "ball",  "bottle", "floor",  "leaf",     "zebra", "rose",
                                             "baby",  "donut", "bed",    "cookie", "hedgehog", "shelf", "plate"};
inline const std::vector<std::string> kPreps{"on", "in", "beside"};
inline const std::vector<Verb> kTransitive{{"eat", "ate", "eaten"},      {"see", "saw", "seen"},
                                           {"hold", "held", "held"},     {"paint", "painted", "painted"},
                                           {"help", "helped", "helped"}, {"like", "liked", "liked"},
                                           {"find", "found", "found"}};
inline const std::vector<Verb> kUnaccusative{{"roll", "rolled", "rolled"},
                                             {"burn", "burned", "burned"},
                                             {"freeze", "froze", "frozen"},
                                             {"break", "broke", "broken"},
                                             {"shatter", "shattered", "shattered"}};
inline const std::vector<Verb> kUnergative{{"sleep", "slept", "slept"},
                                           {"walk", "walked", "walked"},
                                           {"smile", "smiled", "smiled"},
                                           {"run", "ran", "run"}};
inline const std::vector<Verb> kDative{{"give", "gave", "given"}, {"lend", "lended", "lended"}, {"send", "sent", "sent"}};
inline const std::vector<Verb> kCp{{"say", "said", "said"}, {"know", "knew", "known"}, {"hope", "hoped", "hoped"}};
inline const std::vector<Verb> kXcomp{{"want", "wanted", "wanted"}, {"need", "needed", "needed"}, {"try", "tried", "tried"}};

struct Conj {
  bool definite = false;
  std::string path;              // dot-joined
  std::vector<std::string> args; // "x _ N" or constant
};

class Builder {
 public:
  explicit Builder(std::mt19937_64& rng) : rng_(rng) {}

  std::vector<std::string> toks;
  std::vector<Conj> conjs;

  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng_)];
  }
  bool coin(double p = 0.5) { return std::uniform_real_distribution<double>(0, 1)(rng_) < p; }
  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  static std::string var(std::size_t pos) { return "x _ " + std::to_string(pos); }

  /// Emits an NP and returns its argument string. `pp_depth` PP modifiers are
  /// chained onto a common-noun head.
  std::string np(bool allow_proper, int pp_depth) {
    if (allow_proper && pp_depth == 0 && coin(0.4)) {
      toks.push_back(pick(kProper));
      return toks.back();
    }
    bool definite = coin();
    std::string det = definite ? "the" : "a";
    if (toks.empty()) det[0] = static_cast<char>(std::toupper(det[0]));
    toks.push_back(det);
    std::size_t head = toks.size();
    std::string noun = pick(kNouns);
    toks.push_back(noun);
    conjs.push_back(Conj{definite, noun, {var(head)}});
    std::size_t cur = head;
    std::string cur_noun = noun;
    for (int d = 0; d < pp_depth; ++d) {
      std::string prep = pick(kPreps);
      toks.push_back(prep);
      bool def2 = coin();
      toks.push_back(def2 ? "the" : "a");
      std::size_t pos = toks.size();
      std::string n2 = pick(kNouns);
      toks.push_back(n2);
      conjs.push_back(Conj{def2, n2, {var(pos)}});
      conjs.push_back(Conj{false, cur_noun + ".nmod." + prep, {var(cur), var(pos)}});
      cur = pos;
      cur_noun = n2;
    }
    return var(head);
  }

  void role(const std::string& verb, const char* r, std::size_t event, const std::string& arg) {
    conjs.push_back(Conj{false, verb + "." + r, {var(event), arg}});
  }

  /// Emits a clause and returns its event position.
  std::size_t clause(int cp_depth, int subj_pp, int obj_pp, bool proper_ok = true) {
    if (cp_depth > 0) {
      auto subj = np(proper_ok, subj_pp);
      const auto& v = pick(kCp);
      std::size_t e = toks.size();
      toks.push_back(v.past);
      toks.push_back("that");
      role(v.lemma, "agent", e, subj);
      auto inner = clause(cp_depth - 1, 0, obj_pp, proper_ok);
      role(v.lemma, "ccomp", e, var(inner));
      return e;
    }
    switch (between(0, 6)) {
      case 0: {  // unergative
        auto subj = np(proper_ok, subj_pp);
        const auto& v = pick(kUnergative);
        std::size_t e = toks.size();
        toks.push_back(v.past);
        role(v.lemma, "agent", e, subj);
        return e;
      }
      case 1: {  // unaccusative
        auto subj = np(proper_ok, subj_pp);
        const auto& v = pick(kUnaccusative);
        std::size_t e = toks.size();
        toks.push_back(v.past);
        role(v.lemma, "theme", e, subj);
        return e;
      }
      case 2: {  // passive transitive
        auto subj = np(proper_ok, subj_pp);
        const auto& v = pick(kTransitive);
        toks.push_back("was");
        std::size_t e = toks.size();
        toks.push_back(v.participle);
        role(v.lemma, "theme", e, subj);
        if (coin()) {
          toks.push_back("by");
          auto agent = np(proper_ok, 0);
          role(v.lemma, "agent", e, agent);
        }
        return e;
      }
      case 3: {  // dative
        auto subj = np(proper_ok, subj_pp);
        const auto& v = pick(kDative);
        std::size_t e = toks.size();
        toks.push_back(v.past);
        role(v.lemma, "agent", e, subj);
        if (coin()) {
          auto rec = np(proper_ok, 0);
          auto th = np(proper_ok, obj_pp);
          role(v.lemma, "recipient", e, rec);
          role(v.lemma, "theme", e, th);
        } else {
          auto th = np(proper_ok, 0);
          toks.push_back("to");
          auto rec = np(proper_ok, obj_pp);
          role(v.lemma, "theme", e, th);
          role(v.lemma, "recipient", e, rec);
        }
        return e;
      }
      case 4: {  // passive dative: "X was lended the box"
        auto subj = np(proper_ok, subj_pp);
        const auto& v = pick(kDative);
        toks.push_back("was");
        std::size_t e = toks.size();
        toks.push_back(v.participle);
        auto th = np(proper_ok, obj_pp);
        role(v.lemma, "theme", e, th);
        role(v.lemma, "recipient", e, subj);
        return e;
      }
      case 5: {  // xcomp control
        auto subj = np(proper_ok, subj_pp);
        const auto& v = pick(kXcomp);
        std::size_t e = toks.size();
        toks.push_back(v.past);
        toks.push_back("to");
        const auto& inf = pick(kUnergative);
        std::size_t e2 = toks.size();
        toks.push_back(inf.lemma);
        role(v.lemma, "agent", e, subj);
        role(v.lemma, "xcomp", e, var(e2));
        role(inf.lemma, "agent", e2, subj);
        return e;
      }
      default: {  // active transitive
        auto subj = np(proper_ok, subj_pp);
        const auto& v = pick(kTransitive);
        std::size_t e = toks.size();
        toks.push_back(v.past);
        auto obj = np(proper_ok, obj_pp);
        role(v.lemma, "agent", e, subj);
        role(v.lemma, "theme", e, obj);
        return e;
      }
    }
  }

  static std::size_t first_var(const Conj& c) {
    const auto& a = c.args[0];
    if (a.rfind("x _ ", 0) != 0) return static_cast<std::size_t>(-1);
    return std::stoul(a.substr(4));
  }

  std::string render_lf() const {
    std::vector<Conj> pre, main;
    for (const auto& c : conjs) (c.definite ? pre : main).push_back(c);
    std::stable_sort(pre.begin(), pre.end(), [](const Conj& a, const Conj& b) { return first_var(a) < first_var(b); });
    std::stable_sort(main.begin(), main.end(), [](const Conj& a, const Conj& b) {
      if (first_var(a) != first_var(b)) return first_var(a) < first_var(b);
      return a.args.size() < b.args.size();
    });
    auto conj_text = [](const Conj& c) {
      std::string s = c.definite ? "* " : "";
      std::string path = c.path;
      std::string spaced;
      for (char ch : path) {
        if (ch == '.') spaced += " . ";
        else spaced += ch;
      }
      s += spaced + " ( " + c.args[0];
      if (c.args.size() > 1) s += " , " + c.args[1];
      return s + " )";
    };
    std::string out;
    for (const auto& c : pre) out += conj_text(c) + " ; ";
    for (std::size_t i = 0; i < main.size(); ++i) {
      if (i) out += " AND ";
      out += conj_text(main[i]);
    }
    return out;
  }

 private:
  std::mt19937_64& rng_;
};

struct Sizes {
  std::size_t train = 2000, dev = 200, test = 200, gen = 1000;
};

/// Resamples until the requested PP depth is actually realised (intransitive
/// frames have no object to carry it).
inline recogs::Row make_row(std::mt19937_64& rng, int cp, int subj_pp, int obj_pp, const std::string& tag) {
  while (true) {
    Builder b(rng);
    b.clause(cp, subj_pp, obj_pp);
    b.toks.push_back(".");
    int nmods = 0;
    for (const auto& c : b.conjs) nmods += c.path.find(".nmod.") != std::string::npos;
    if (nmods < subj_pp + obj_pp) continue;
    return recogs::Row{recogs::join_tokens(b.toks), b.render_lf(), tag, 0};
  }
}

inline std::vector<recogs::Row> primitive_rows() {
  return {
      {"Paula", "Paula", "primitive", 0},
      {"cake", "LAMBDA a . cake ( a )", "primitive", 0},
      {"hedgehog", "LAMBDA a . hedgehog ( a )", "primitive", 0},
      {"paint", "LAMBDA a . LAMBDA b . LAMBDA e . paint . agent ( e , b ) AND paint . theme ( e , a )", "primitive", 0},
      {"walk", "LAMBDA a . LAMBDA e . walk . agent ( e , a )", "primitive", 0},
      {"shatter", "LAMBDA a . LAMBDA e . shatter . theme ( e , a )", "primitive", 0},
  };
}

/// Raw rows per split. Train keeps CP/PP depth <= 2 and PPs on objects only;
/// gen holds subject PPs and deeper recursion.
inline std::array<std::vector<recogs::Row>, 4> generate_rows(std::uint64_t seed, Sizes sizes = {}) {
  std::mt19937_64 rng(seed);
  std::array<std::vector<recogs::Row>, 4> out;
  auto in_dist = [&](std::vector<recogs::Row>& dst, std::size_t n) {
    std::uniform_int_distribution<int> depth(0, 2);
    for (std::size_t i = 0; i < n; ++i) {
      int cp = std::uniform_int_distribution<int>(0, 4)(rng) == 0 ? depth(rng) : 0;
      int pp = std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? depth(rng) : 0;
      dst.push_back(make_row(rng, cp, 0, pp, "in_distribution"));
    }
  };
  auto& train = out[0];
  for (auto& r : primitive_rows()) train.push_back(r);
  in_dist(train, sizes.train - train.size());
  in_dist(out[1], sizes.dev);
  in_dist(out[2], sizes.test);
  auto& gen = out[3];
  std::uniform_int_distribution<int> deep(3, 4);
  for (std::size_t i = 0; i < sizes.gen; ++i) {
    switch (i % 3) {
      case 0: gen.push_back(make_row(rng, 0, 1, 0, "obj_pp_to_subj_pp")); break;
      case 1: gen.push_back(make_row(rng, deep(rng), 0, 0, "cp_recursion")); break;
      default: gen.push_back(make_row(rng, 0, 0, deep(rng), "pp_recursion")); break;
    }
  }
  std::size_t line = 0;
  for (auto& split : out) {
    line = 0;
    for (auto& r : split) r.line = ++line;
  }
  return out;
}

inline recogs::Corpus generate_corpus(std::uint64_t seed, Sizes sizes = {}) {
  auto rows = generate_rows(seed, sizes);
  recogs::Corpus c;
  for (auto s : recogs::kAllSplits)
    c[s] = recogs::parse_examples(rows[static_cast<std::size_t>(s)], s, recogs::Dialect::COGS);
  return c;
}

inline std::string rows_to_tsv(const std::vector<recogs::Row>& rows) {
  std::string out;
  for (const auto& r : rows) out += r.sentence + '\t' + r.lf + '\t' + r.tag + '\n';
  return out;
}

}  // namespace mini_cogs
