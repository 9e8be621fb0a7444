// recogs/sem.hpp - exact string match and Semantic Exact Match (SEM).
//
// SEM treats an LF as a set of conjuncts (`;` and `AND` pooled) and accepts a
// prediction iff some bijection between predicted and gold variables maps the
// predicted set onto the gold set exactly. Constants and lambda parameters
// are not renamed; they must match literally.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "recogs/errors.hpp"
#include "recogs/lf.hpp"
#include "recogs/transforms.hpp"

namespace recogs {

enum class MismatchReason { None, ParseError, ConjunctSetDiffers, NoBijection };

inline std::string_view to_string(MismatchReason r) {
  switch (r) {
    case MismatchReason::None: return "None";
    case MismatchReason::ParseError: return "ParseError";
    case MismatchReason::ConjunctSetDiffers: return "ConjunctSetDiffers";
    case MismatchReason::NoBijection: return "NoBijection";
  }
  return "?";
}

struct MatchResult {
  bool matched = false;
  std::optional<VariableRenaming> mapping;  ///< predicted -> gold, present iff matched
  MismatchReason reason = MismatchReason::NoBijection;

  static MatchResult success(VariableRenaming m) { return {true, std::move(m), MismatchReason::None}; }
  static MatchResult failure(MismatchReason r) { return {false, std::nullopt, r}; }
};

/// Collapses runs of whitespace and trims both ends.
inline std::string normalize_spaces(std::string_view s) {
  std::string out;
  bool pending = false;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      pending = !out.empty();
    } else {
      if (pending) out += ' ';
      pending = false;
      out += c;
    }
  }
  return out;
}

inline bool exact_match(std::string_view predicted, std::string_view gold) {
  return normalize_spaces(predicted) == normalize_spaces(gold);
}

namespace detail {

/// Variable-free part of a conjunct: path, definiteness and the literal
/// (non-variable) arguments, with a marker in variable slots.
inline std::string conjunct_shape(const Predication& p) {
  std::string key = p.definite ? "*" : "";
  key += p.path_string();
  key += '/';
  for (const auto& t : p.args) {
    if (t.is_variable()) key += "\x01,";
    else key += (t.is_constant() ? "c:" : "b:") + t.name() + ",";
  }
  return key;
}

class SemMatcher {
 public:
  SemMatcher(const LogicalForm& predicted, const LogicalForm& gold) {
    collect(predicted, pred_);
    collect(gold, gold_);
    same_lambda_ = predicted.lambda_params == gold.lambda_params;
  }

  MatchResult run() {
    if (!same_lambda_ || pred_.size() != gold_.size()) return MatchResult::failure(MismatchReason::ConjunctSetDiffers);
    std::vector<std::string> gs;
    for (const auto& c : pred_) shape_.push_back(conjunct_shape(c));
    for (const auto& c : gold_) gs.push_back(conjunct_shape(c));
    const auto& ps = shape_;
    {
      auto a = ps, b = gs;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) return MatchResult::failure(MismatchReason::ConjunctSetDiffers);
    }
    for (std::size_t i = 0; i < gold_.size(); ++i) gold_by_shape_[gs[i]].push_back(i);

    auto psig = signatures(pred_, ps);
    auto gsig = signatures(gold_, gs);
    if (psig.size() != gsig.size()) return MatchResult::failure(MismatchReason::NoBijection);
    std::map<std::vector<std::pair<std::string, std::size_t>>, std::vector<VarId>> gold_by_sig;
    for (auto& [v, sig] : gsig) gold_by_sig[sig].push_back(v);
    for (auto& [v, sig] : psig) {
      auto it = gold_by_sig.find(sig);
      if (it == gold_by_sig.end()) return MatchResult::failure(MismatchReason::NoBijection);
      candidates_[v] = std::set<VarId>(it->second.begin(), it->second.end());
    }

    order_ = search_order(ps);
    if (!search(0)) return MatchResult::failure(MismatchReason::NoBijection);
    return MatchResult::success(VariableRenaming(std::map<VarId, VarId>(forward_.begin(), forward_.end())));
  }

 private:
  using Signature = std::vector<std::pair<std::string, std::size_t>>;

  static void collect(const LogicalForm& lf, std::vector<Predication>& out) {
    std::set<Predication> uniq;
    lf.for_each_conjunct([&](const Predication& p) { uniq.insert(p); });
    out.assign(uniq.begin(), uniq.end());
  }

  // Multiset of (shape, slot) occurrences per variable.
  static std::map<VarId, Signature> signatures(const std::vector<Predication>& cs,
                                               const std::vector<std::string>& shapes) {
    std::map<VarId, Signature> sig;
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t s = 0; s < cs[i].args.size(); ++s)
        if (cs[i].args[s].is_variable()) sig[cs[i].args[s].var_id()].emplace_back(shapes[i], s);
    for (auto& [v, s] : sig) std::sort(s.begin(), s.end());
    return sig;
  }

  // Rarest shape first, then conjuncts connected to already-visited variables.
  std::vector<std::size_t> search_order(const std::vector<std::string>& ps) const {
    std::vector<std::size_t> order;
    std::vector<bool> used(pred_.size(), false);
    std::set<VarId> seen;
    for (std::size_t n = 0; n < pred_.size(); ++n) {
      std::size_t best = pred_.size();
      std::pair<int, std::size_t> best_key{-1, 0};
      for (std::size_t i = 0; i < pred_.size(); ++i) {
        if (used[i]) continue;
        int bound = 0;
        for (const auto& t : pred_[i].args)
          if (t.is_variable() && seen.count(t.var_id())) ++bound;
        std::size_t options = gold_by_shape_.at(ps[i]).size();
        // prefer more bound variables, then fewer gold options
        std::pair<int, std::size_t> key{bound, static_cast<std::size_t>(-1) - options};
        if (best == pred_.size() || key > best_key) {
          best = i;
          best_key = key;
        }
      }
      used[best] = true;
      order.push_back(best);
      for (const auto& t : pred_[best].args)
        if (t.is_variable()) seen.insert(t.var_id());
    }
    return order;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Predication& p = pred_[order_[depth]];
    for (std::size_t gi : gold_by_shape_.at(shape_[order_[depth]])) {
      const Predication& g = gold_[gi];
      std::vector<VarId> bound_here;
      bool ok = true;
      for (std::size_t s = 0; s < p.args.size() && ok; ++s) {
        if (!p.args[s].is_variable()) continue;
        VarId pv = p.args[s].var_id(), gv = g.args[s].var_id();
        auto f = forward_.find(pv);
        if (f != forward_.end()) {
          ok = f->second == gv;
        } else if (backward_.count(gv) || !candidates_.at(pv).count(gv)) {
          ok = false;
        } else {
          forward_.emplace(pv, gv);
          backward_.emplace(gv, pv);
          bound_here.push_back(pv);
        }
      }
      if (ok && search(depth + 1)) return true;
      for (VarId pv : bound_here) {
        backward_.erase(forward_.at(pv));
        forward_.erase(pv);
      }
    }
    return false;
  }

  std::vector<Predication> pred_, gold_;
  std::vector<std::string> shape_;  // per predicted conjunct
  std::map<std::string, std::vector<std::size_t>> gold_by_shape_;
  std::map<VarId, std::set<VarId>> candidates_;
  std::vector<std::size_t> order_;
  std::unordered_map<VarId, VarId> forward_, backward_;
  bool same_lambda_ = true;
};

}  // namespace detail

/// Exact SEM search over parsed LFs. Both sides must share a dialect.
inline MatchResult sem_match(const LogicalForm& predicted, const LogicalForm& gold) {
  if (predicted.dialect != gold.dialect) return MatchResult::failure(MismatchReason::ConjunctSetDiffers);
  return detail::SemMatcher(predicted, gold).run();
}

/// String-level SEM. An unparseable prediction is a miss; an unparseable
/// gold LF raises GoldMalformed.
inline MatchResult sem_match(std::string_view predicted, std::string_view gold, Dialect dialect) {
  LogicalForm g;
  try {
    g = parse_lf(gold, dialect);
  } catch (const MalformedLF& e) {
    throw GoldMalformed(e.what());
  }
  auto p = try_parse_lf(predicted, dialect);
  if (!p) return MatchResult::failure(MismatchReason::ParseError);
  return sem_match(*p, g);
}

}  // namespace recogs
