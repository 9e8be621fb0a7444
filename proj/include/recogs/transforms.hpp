// recogs/transforms.hpp - meaning-preserving rewrites of a single LF:
// redundant token removal, variable renaming and COGS -> ReCOGS conversion.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "recogs/errors.hpp"
#include "recogs/lf.hpp"
#include "recogs/random.hpp"

namespace recogs {

/// Injective map between variable ids.
class VariableRenaming {
 public:
  VariableRenaming() = default;

  VariableRenaming(std::initializer_list<std::pair<const VarId, VarId>> pairs) : map_(pairs) {
    check_injective();
  }

  explicit VariableRenaming(std::map<VarId, VarId> map) : map_(std::move(map)) { check_injective(); }

  static VariableRenaming identity(std::span<const VarId> vars) {
    std::map<VarId, VarId> m;
    for (auto v : vars) m.emplace(v, v);
    return VariableRenaming(std::move(m));
  }

  static VariableRenaming shift(std::span<const VarId> vars, VarId offset) {
    std::map<VarId, VarId> m;
    for (auto v : vars) m.emplace(v, v + offset);
    return VariableRenaming(std::move(m));
  }

  std::optional<VarId> operator()(VarId v) const {
    auto it = map_.find(v);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  bool covers(std::span<const VarId> vars) const {
    return std::all_of(vars.begin(), vars.end(), [&](VarId v) { return map_.count(v) != 0; });
  }

  /// `after ∘ *this`: first apply this map, then `after`.
  VariableRenaming then(const VariableRenaming& after) const {
    std::map<VarId, VarId> m;
    for (auto [from, to] : map_) {
      auto img = after(to);
      if (!img) throw IncompleteRenaming("composition: variable " + std::to_string(to) + " has no image");
      m.emplace(from, *img);
    }
    return VariableRenaming(std::move(m));
  }

  VariableRenaming inverse() const {
    std::map<VarId, VarId> m;
    for (auto [from, to] : map_) m.emplace(to, from);
    return VariableRenaming(std::move(m));
  }

  const std::map<VarId, VarId>& pairs() const noexcept { return map_; }
  std::size_t size() const noexcept { return map_.size(); }

  friend bool operator==(const VariableRenaming&, const VariableRenaming&) = default;

 private:
  void check_injective() const {
    std::unordered_set<VarId> images;
    for (auto [from, to] : map_)
      if (!images.insert(to).second)
        throw InvalidConfig("variable renaming is not injective (two variables map to " +
                                    std::to_string(to) + ")");
  }

  std::map<VarId, VarId> map_;
};

/// Draws distinct ids uniformly from [lo, hi) for each variable, in order.
inline VariableRenaming random_renaming(std::span<const VarId> vars, VarId lo, VarId hi, Rng& rng) {
  if (hi <= lo || hi - lo < vars.size())
    throw InvalidConfig("variable id range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                        ") cannot hold " + std::to_string(vars.size()) + " distinct variables");
  std::map<VarId, VarId> m;
  std::unordered_set<VarId> used;
  for (auto v : vars) {
    VarId id;
    do id = lo + rng.below(hi - lo);
    while (!used.insert(id).second);
    m.emplace(v, id);
  }
  return VariableRenaming(std::move(m));
}

// ---------------------------------------------------------------------------

/// Deletes every token of `set` from a COGS LF string. The input is parsed
/// first, so malformed input raises MalformedLF instead of being mangled.
inline std::string remove_tokens(std::string_view lf_text, TokenRemovalSet set) {
  auto lf = parse_lf(lf_text, Dialect::COGS);
  if (set.empty()) return std::string(lf_text);
  return render_lf(lf, RenderStyle{set, false});
}

inline Term rename_term(const Term& t, const VariableRenaming& r) {
  if (!t.is_variable()) return t;
  auto img = r(t.var_id());
  if (!img) throw IncompleteRenaming("variable " + std::to_string(t.var_id()) + " has no image");
  return Term::variable(*img);
}

inline LogicalForm reindex(const LogicalForm& lf, const VariableRenaming& renaming) {
  LogicalForm out = lf;
  auto apply = [&](std::vector<Predication>& ps) {
    for (auto& p : ps)
      for (auto& t : p.args) t = rename_term(t, renaming);
  };
  apply(out.preposed);
  apply(out.main);
  return out;
}

// ---------------------------------------------------------------------------
// COGS -> ReCOGS
// ---------------------------------------------------------------------------

struct RecogsOptions {
  /// Split `cake.nmod.on(a,b)` into `nmod.on(a,b)` the way verbal roles are
  /// split. Off by default: nominal modifiers stay fused.
  bool split_nominal_modifiers = false;
};

namespace detail {

inline bool is_noun_predication(const Predication& p) {
  return p.path.size() == 1 && p.args.size() == 1 && p.args[0].is_variable();
}

/// Positions of the period-delimited sentence segment that contains `pos`.
inline std::pair<std::size_t, std::size_t> segment_bounds(std::span<const std::string> sentence, std::size_t pos) {
  std::size_t lo = pos, hi = pos;
  while (lo > 0 && sentence[lo - 1] != ".") --lo;
  while (hi < sentence.size() && sentence[hi] != ".") ++hi;
  return {lo, hi};
}

/// Assigns each proper-noun constant occurrence to a word position.
///
/// Candidates are the occurrences of the name inside the same sentence
/// segment as the conjunct's event variable. The nearest candidate wins
/// (earlier on ties), except that one event never takes the same word in two
/// different roles. Repeated mentions that share a referent (control verbs)
/// all resolve to the single occurrence.
class ConstantResolver {
 public:
  explicit ConstantResolver(std::span<const std::string> sentence) : sentence_(sentence) {}

  VarId resolve(const Predication& p, std::size_t slot) {
    const std::string& name = p.args[slot].name();
    std::size_t anchor = 0, lo = 0, hi = sentence_.size();
    std::optional<VarId> event;
    if (p.args[0].is_variable() && p.args[0].var_id() < sentence_.size()) {
      event = p.args[0].var_id();
      anchor = static_cast<std::size_t>(*event);
      std::tie(lo, hi) = segment_bounds(sentence_, anchor);
    }
    std::optional<std::size_t> best;
    std::size_t best_dist = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      if (sentence_[i] != name) continue;
      if (event) {
        auto it = taken_.find({*event, i});
        if (it != taken_.end() && it->second != p.path_string()) continue;
      }
      std::size_t dist = i > anchor ? i - anchor : anchor - i;
      if (!best || dist < best_dist) {
        best = i;
        best_dist = dist;
      }
    }
    if (!best)
      throw ConstantInReCOGS("proper noun '" + name + "' has no matching word in the sentence");
    if (event) taken_.emplace(std::make_pair(*event, *best), p.path_string());
    return *best;
  }

 private:
  std::span<const std::string> sentence_;
  std::map<std::pair<VarId, std::size_t>, std::string> taken_;  // (event, word) -> role
};

inline void split_roles(const std::vector<Predication>& in, const RecogsOptions& opts,
                        std::vector<Predication>& out) {
  std::set<std::pair<std::string, Term>> emitted_events;
  for (const auto& p : in) {
    if (p.path.size() == 2 && p.args.size() == 2) {
      // verb.role(e, x) -> verb(e) AND role(e, x)
      if (emitted_events.insert({p.path[0], p.args[0]}).second)
        out.push_back(Predication{{p.path[0]}, {p.args[0]}, false});
      out.push_back(Predication{{p.path[1]}, p.args, false});
    } else if (opts.split_nominal_modifiers && p.path.size() == 3 && p.args.size() == 2) {
      out.push_back(Predication{{p.path[1], p.path[2]}, p.args, false});
    } else {
      out.push_back(p);
    }
  }
}

}  // namespace detail

/// Converts a COGS LF to the ReCOGS dialect.
///
/// Proper-noun constants become fresh variables named by their word position
/// plus a `Name(v)` predication; every unary noun predication moves to the
/// preposed segment ordered by position (definites keep `*`); fused verbal
/// roles are split into an event predication and a bare role. With a renaming
/// the result is reindexed, otherwise positional names are kept.
inline LogicalForm to_recogs(const LogicalForm& lf, std::span<const std::string> sentence,
                             const std::optional<VariableRenaming>& renaming = std::nullopt,
                             const RecogsOptions& opts = {}) {
  if (lf.dialect != Dialect::COGS) throw DialectMismatch("to_recogs expects a COGS-dialect LF");
  LogicalForm out;
  out.dialect = Dialect::ReCOGS;
  out.lambda_params = lf.lambda_params;

  if (lf.is_bare()) {
    out.main = lf.main;
    return out;
  }
  if (lf.is_lambda()) {
    for (const auto& p : lf.preposed) out.preposed.push_back(p);
    detail::split_roles(lf.main, opts, out.main);
    lf.for_each_conjunct([](const Predication& p) {
      for (const auto& t : p.args)
        if (t.is_constant()) throw ConstantInReCOGS("constant '" + t.name() + "' inside a lambda primitive");
    });
    return out;
  }

  std::unordered_set<VarId> existing;
  for (auto v : variables_of(lf)) existing.insert(v);

  // (a) proper nouns become variables at their word positions
  detail::ConstantResolver resolver(sentence);
  std::map<VarId, std::string> proper;  // position -> name
  auto resolve_all = [&](const std::vector<Predication>& in) {
    std::vector<Predication> res = in;
    for (auto& p : res) {
      for (std::size_t s = 0; s < p.args.size(); ++s) {
        if (!p.args[s].is_constant()) continue;
        VarId pos = resolver.resolve(p, s);
        if (existing.count(pos))
          throw ConstantInReCOGS("proper noun '" + p.args[s].name() + "' at position " + std::to_string(pos) +
                                 " collides with an existing variable");
        proper.emplace(pos, p.args[s].name());
        p.args[s] = Term::variable(pos);
      }
    }
    return res;
  };
  auto pre = resolve_all(lf.preposed);
  auto main = resolve_all(lf.main);

  // (b) collect noun predications
  std::vector<Predication> nouns;
  for (auto& [pos, name] : proper) nouns.push_back(Predication{{name}, {Term::variable(pos)}, false});
  for (auto& p : pre) nouns.push_back(std::move(p));
  std::vector<Predication> rest;
  for (auto& p : main) {
    if (detail::is_noun_predication(p)) nouns.push_back(std::move(p));
    else rest.push_back(std::move(p));
  }
  std::stable_sort(nouns.begin(), nouns.end(), [](const Predication& a, const Predication& b) {
    return a.args[0].var_id() < b.args[0].var_id();
  });
  out.preposed = std::move(nouns);

  // (c) split roles
  detail::split_roles(rest, opts, out.main);
  if (out.main.empty()) throw DialectMismatch("LF has no predication left after noun preposing");

  for (const auto& p : out.main)
    for (const auto& t : p.args)
      if (t.is_constant()) throw ConstantInReCOGS("constant '" + t.name() + "' survived conversion");

  // (d) optional renaming
  if (renaming) return reindex(out, *renaming);
  return out;
}

}  // namespace recogs
