// recogs/augment.hpp - sentence-level augmentations over COGS examples.
//
// All operations work on COGS-dialect examples with positional variable
// names (variable id == 0-based word position). Each one edits the token
// list, renames every variable to its new word position and restores the
// COGS conjunct order. None of them adds or removes a claim except the
// participial phrase, which adds exactly the new noun and its modifier link.
#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "recogs/corpus.hpp"
#include "recogs/errors.hpp"
#include "recogs/lexicon.hpp"
#include "recogs/lf.hpp"
#include "recogs/random.hpp"
#include "recogs/transforms.hpp"

namespace recogs {

inline constexpr std::string_view kFillerWord = "um";

inline bool is_article(std::string_view tok) {
  return tok == "a" || tok == "the" || tok == "A" || tok == "The";
}

/// Restores COGS order: preposed definites by variable, main conjuncts
/// stably by first-argument variable with a noun's own predication ahead of
/// its modifiers.
inline void sort_cogs_conjuncts(LogicalForm& lf) {
  auto first_var = [](const Predication& p) -> VarId {
    if (!p.args.empty() && p.args[0].is_variable()) return p.args[0].var_id();
    return static_cast<VarId>(-1);
  };
  std::stable_sort(lf.preposed.begin(), lf.preposed.end(),
                   [&](const Predication& a, const Predication& b) { return first_var(a) < first_var(b); });
  std::stable_sort(lf.main.begin(), lf.main.end(), [&](const Predication& a, const Predication& b) {
    auto ka = first_var(a), kb = first_var(b);
    if (ka != kb) return ka < kb;
    return a.args.size() < b.args.size();
  });
}

namespace detail {

inline void require_positional(const Example& ex, const char* op) {
  if (ex.lf.dialect != Dialect::COGS)
    throw DialectMismatch(std::string(op) + " expects a COGS-dialect example");
}

inline std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

inline std::string decapitalize_article(const std::string& s) {
  if (s == "A") return "a";
  if (s == "The") return "the";
  return s;
}

/// Renames every variable through `position_map` (old word index -> new
/// word index) and re-sorts.
inline LogicalForm move_positions(const LogicalForm& lf, const std::vector<VarId>& position_map) {
  std::map<VarId, VarId> m;
  for (auto v : variables_of(lf)) {
    if (v >= position_map.size()) throw IncompleteRenaming("variable " + std::to_string(v) + " is past the sentence end");
    m.emplace(v, position_map[v]);
  }
  auto out = reindex(lf, VariableRenaming(std::move(m)));
  sort_cogs_conjuncts(out);
  return out;
}

inline bool is_role(const Predication& p, std::initializer_list<std::string_view> roles) {
  if (p.path.size() != 2 || p.args.size() != 2) return false;
  return std::find(roles.begin(), roles.end(), p.path[1]) != roles.end();
}

inline bool is_modifier(const Predication& p) {
  return p.path.size() == 3 && p.args.size() == 2 && (p.path[1] == "nmod" || p.path[1] == "acl") &&
         p.args[0].is_variable() && p.args[1].is_variable();
}

/// Nouns reachable from `head` through nmod/acl links, including `head`.
inline std::set<VarId> modifier_closure(const LogicalForm& lf, VarId head) {
  std::set<VarId> seen{head};
  bool grew = true;
  while (grew) {
    grew = false;
    lf.for_each_conjunct([&](const Predication& p) {
      if (is_modifier(p) && seen.count(p.args[0].var_id()) && seen.insert(p.args[1].var_id()).second) grew = true;
    });
  }
  return seen;
}

inline bool has_unary_noun(const LogicalForm& lf, VarId v) {
  bool found = false;
  lf.for_each_conjunct([&](const Predication& p) {
    if (p.path.size() == 1 && p.args.size() == 1 && p.args[0].is_variable() && p.args[0].var_id() == v) found = true;
  });
  return found;
}

}  // namespace detail

inline bool has_pp_modifier(const LogicalForm& lf) {
  bool found = false;
  lf.for_each_conjunct([&](const Predication& p) {
    if (p.path.size() == 3 && p.path[1] == "nmod") found = true;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Concatenation
// ---------------------------------------------------------------------------

/// Glues b after a: sentences are joined, b's variables shift by a's length,
/// preposed and main segments are appended segment-wise.
inline Example concat_examples(const Example& a, const Example& b) {
  detail::require_positional(a, "concat_examples");
  detail::require_positional(b, "concat_examples");
  if (a.lf.is_primitive() || b.lf.is_primitive())
    throw PrimitiveOperand("cannot concatenate a primitive example");
  auto bvars = variables_of(b.lf);
  auto shifted = reindex(b.lf, VariableRenaming::shift(bvars, a.sentence.size()));

  Example out;
  out.split = a.split;
  out.gen_type = "concat";
  out.sentence = a.sentence;
  out.sentence.insert(out.sentence.end(), b.sentence.begin(), b.sentence.end());
  out.lf = a.lf;
  out.lf.preposed.insert(out.lf.preposed.end(), shifted.preposed.begin(), shifted.preposed.end());
  out.lf.main.insert(out.lf.main.end(), shifted.main.begin(), shifted.main.end());
  return out;
}

// ---------------------------------------------------------------------------
// Preposing
// ---------------------------------------------------------------------------

struct ObjectSpan {
  VarId head = 0;
  std::size_t first = 0, last = 0;  ///< inclusive token range of the NP
};

/// Post-verbal theme/recipient NPs that carry at least one PP modifier.
inline std::vector<ObjectSpan> preposable_objects(const Example& ex) {
  std::vector<ObjectSpan> out;
  std::set<VarId> seen;
  ex.lf.for_each_conjunct([&](const Predication& p) {
    if (!detail::is_role(p, {"theme", "recipient"}) || !p.args[0].is_variable() || !p.args[1].is_variable()) return;
    VarId event = p.args[0].var_id(), head = p.args[1].var_id();
    if (head <= event || head == 0 || head >= ex.sentence.size() || seen.count(head)) return;
    bool has_pp = false;
    ex.lf.for_each_conjunct([&](const Predication& q) {
      if (q.path.size() == 3 && q.path[1] == "nmod" && q.args[0].is_variable() && q.args[0].var_id() == head)
        has_pp = true;
    });
    if (!has_pp || !is_article(ex.sentence[head - 1])) return;
    auto closure = detail::modifier_closure(ex.lf, head);
    std::size_t last = static_cast<std::size_t>(*closure.rbegin());
    if (last + 1 >= ex.sentence.size()) return;
    seen.insert(head);
    out.push_back(ObjectSpan{head, static_cast<std::size_t>(head - 1), last});
  });
  return out;
}

/// Moves the object NP (determiner through its last PP noun) to the front.
inline Example prepose_object(const Example& ex, const ObjectSpan& span) {
  detail::require_positional(ex, "prepose_object");
  const auto n = ex.sentence.size();
  std::vector<VarId> pos(n);
  std::vector<std::string> toks;
  toks.reserve(n);
  for (std::size_t i = span.first; i <= span.last; ++i) {
    pos[i] = toks.size();
    toks.push_back(ex.sentence[i]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= span.first && i <= span.last) continue;
    pos[i] = toks.size();
    toks.push_back(i == 0 ? detail::decapitalize_article(ex.sentence[i]) : ex.sentence[i]);
  }
  toks[0] = detail::capitalize(toks[0]);

  Example out = ex;
  out.sentence = std::move(toks);
  out.lf = detail::move_positions(ex.lf, pos);
  return out;
}

inline Example prepose_object(const Example& ex, Rng& rng) {
  auto spans = preposable_objects(ex);
  if (spans.empty()) throw NoEligibleObject("no post-verbal object with a PP modifier");
  return prepose_object(ex, rng.pick(spans));
}

// ---------------------------------------------------------------------------
// Filler words
// ---------------------------------------------------------------------------

/// Gaps where a filler may go: gap g sits before token g. Gap 0 is excluded
/// and no gap separates an article from what follows it.
inline std::vector<std::size_t> filler_gaps(const Example& ex) {
  std::vector<std::size_t> gaps;
  for (std::size_t g = 1; g < ex.sentence.size(); ++g)
    if (!is_article(ex.sentence[g - 1])) gaps.push_back(g);
  return gaps;
}

/// Inserts one `um` at each listed gap (repeats allowed).
inline Example insert_fillers(const Example& ex, std::vector<std::size_t> gaps) {
  detail::require_positional(ex, "insert_fillers");
  if (gaps.empty()) return ex;
  const auto n = ex.sentence.size();
  for (auto g : gaps)
    if (g == 0 || g >= n || is_article(ex.sentence[g - 1]))
      throw InvalidConfig("illegal filler position " + std::to_string(g));
  std::sort(gaps.begin(), gaps.end());

  std::vector<VarId> pos(n);
  std::vector<std::string> toks;
  toks.reserve(n + gaps.size());
  std::size_t gi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (gi < gaps.size() && gaps[gi] == i) {
      toks.emplace_back(kFillerWord);
      ++gi;
    }
    pos[i] = toks.size();
    toks.push_back(ex.sentence[i]);
  }
  Example out = ex;
  out.sentence = std::move(toks);
  out.lf = detail::move_positions(ex.lf, pos);
  return out;
}

inline Example insert_fillers(const Example& ex, int min_count, int max_count, Rng& rng) {
  auto legal = filler_gaps(ex);
  if (legal.empty() || max_count <= 0) return ex;
  auto count = static_cast<std::size_t>(rng.between(std::max(min_count, 0), max_count));
  std::vector<std::size_t> gaps;
  for (std::size_t i = 0; i < count; ++i) gaps.push_back(rng.pick(legal));
  return insert_fillers(ex, std::move(gaps));
}

// ---------------------------------------------------------------------------
// Participial verb phrases
// ---------------------------------------------------------------------------

struct PvPhrase {
  std::string lemma;       ///< verb lemma used in the LF (`paint`)
  std::string participle;  ///< surface form (`painting`)
  std::string article;     ///< `a` or `the`
  std::string noun;        ///< `spaceship`
};

/// Subject/object nouns with a unary predication and no modifiers of their own.
inline std::vector<VarId> pv_heads(const Example& ex) {
  std::set<VarId> args;
  ex.lf.for_each_conjunct([&](const Predication& p) {
    if (detail::is_role(p, {"agent", "theme", "recipient"}) && p.args[1].is_variable())
      args.insert(p.args[1].var_id());
  });
  std::vector<VarId> out;
  for (auto v : args) {
    if (v + 1 >= ex.sentence.size() || !detail::has_unary_noun(ex.lf, v)) continue;
    if (detail::modifier_closure(ex.lf, v).size() > 1) continue;
    out.push_back(v);
  }
  return out;
}

/// Inserts `<participle> <article> <noun>` right after the head noun and adds
/// `head.acl.lemma(head, noun)` (or `nmod` when `easy`) plus the noun's own
/// predication, preposed with `*` for `the`.
inline Example add_participial_phrase(const Example& ex, VarId head, const PvPhrase& pv, bool easy) {
  detail::require_positional(ex, "add_participial_phrase");
  const auto n = ex.sentence.size();
  if (head + 1 >= n) throw NoEligibleHead("head " + std::to_string(head) + " is not followed by another token");
  std::string head_noun;
  ex.lf.for_each_conjunct([&](const Predication& p) {
    if (p.path.size() == 1 && p.args.size() == 1 && p.args[0].is_variable() && p.args[0].var_id() == head)
      head_noun = p.path[0];
  });
  if (head_noun.empty()) throw NoEligibleHead("variable " + std::to_string(head) + " is not a common noun");

  const std::size_t at = static_cast<std::size_t>(head) + 1;
  std::vector<VarId> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[i] = i < at ? i : i + 3;
  std::vector<std::string> toks(ex.sentence.begin(), ex.sentence.begin() + static_cast<std::ptrdiff_t>(at));
  toks.push_back(pv.participle);
  toks.push_back(pv.article);
  toks.push_back(pv.noun);
  toks.insert(toks.end(), ex.sentence.begin() + static_cast<std::ptrdiff_t>(at), ex.sentence.end());

  Example out = ex;
  out.sentence = std::move(toks);
  out.lf = detail::move_positions(ex.lf, pos);
  const VarId noun_var = at + 2;
  Predication noun{{pv.noun}, {Term::variable(noun_var)}, pv.article == "the" || pv.article == "The"};
  Predication link{{head_noun, easy ? "nmod" : "acl", pv.lemma}, {Term::variable(head), Term::variable(noun_var)}, false};
  if (noun.definite) out.lf.preposed.push_back(std::move(noun));
  else out.lf.main.push_back(std::move(noun));
  out.lf.main.push_back(std::move(link));
  sort_cogs_conjuncts(out.lf);
  return out;
}

/// Random PV chain of length 1..max_chain: participle, noun and article are
/// drawn from `lexicon` / `nouns`; each later phrase attaches to the noun the
/// previous one introduced.
inline Example add_participial_phrase(const Example& ex, const ParticipleLexicon& lexicon,
                                      const std::vector<std::string>& nouns, bool easy, int max_chain, Rng& rng) {
  auto heads = pv_heads(ex);
  if (heads.empty()) throw NoEligibleHead("no subject or object noun without modifiers");
  if (lexicon.empty() || nouns.empty()) throw InvalidConfig("participial phrases need a lexicon and a noun list");
  std::vector<std::pair<std::string, std::string>> verbs(lexicon.entries().begin(), lexicon.entries().end());
  auto chain = static_cast<int>(rng.between(1, std::max(1, max_chain)));
  Example out = ex;
  VarId head = rng.pick(heads);
  for (int c = 0; c < chain; ++c) {
    const auto& [lemma, participle] = rng.pick(verbs);
    PvPhrase pv{lemma, participle, rng.bernoulli(0.5) ? "the" : "a", rng.pick(nouns)};
    out = add_participial_phrase(out, head, pv, easy);
    head = head + 3;
    if (head + 1 >= out.sentence.size()) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Inventories
// ---------------------------------------------------------------------------

/// Common-noun predicates seen in unary conjuncts, sorted.
inline std::vector<std::string> noun_inventory(const std::vector<Example>& exs) {
  std::set<std::string> nouns;
  for (const auto& ex : exs) {
    if (ex.lf.is_primitive()) continue;
    ex.lf.for_each_conjunct([&](const Predication& p) {
      if (p.path.size() == 1 && p.args.size() == 1 && p.args[0].is_variable()) nouns.insert(p.path[0]);
    });
  }
  return {nouns.begin(), nouns.end()};
}

/// Verb lemmas: first segment of every two-segment role predicate.
inline std::vector<std::string> verb_inventory(const std::vector<Example>& exs) {
  std::set<std::string> verbs;
  for (const auto& ex : exs)
    ex.lf.for_each_conjunct([&](const Predication& p) {
      if (p.path.size() == 2 && p.args.size() == 2) verbs.insert(p.path[0]);
    });
  return {verbs.begin(), verbs.end()};
}

}  // namespace recogs
