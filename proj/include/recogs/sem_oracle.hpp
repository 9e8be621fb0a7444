// recogs/sem_oracle.hpp - exhaustive reference for SEM.
//
// Enumerates every injective assignment of predicted variables to gold
// variables and checks conjunct-set equality directly. Shares nothing with
// the backtracking matcher beyond the AST types, so the two can validate
// each other.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "recogs/errors.hpp"
#include "recogs/lf.hpp"

namespace recogs {

inline constexpr std::size_t kOracleMaxVariables = 8;

namespace oracle_detail {

// (predicate id, definite, arity, arg0, arg1). Variable args hold their index
// into the side's sorted variable list; literal args hold -(literal id + 1).
using Atom = std::array<std::int64_t, 5>;

class Interner {
 public:
  std::int64_t id(const std::string& s) { return ids_.emplace(s, static_cast<std::int64_t>(ids_.size())).first->second; }

 private:
  std::map<std::string, std::int64_t> ids_;
};

inline std::vector<VarId> distinct_vars(const LogicalForm& lf) {
  std::vector<VarId> vs;
  lf.for_each_conjunct([&](const Predication& p) {
    for (const auto& t : p.args)
      if (t.is_variable()) vs.push_back(t.var_id());
  });
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

inline std::vector<Atom> atoms(const LogicalForm& lf, const std::vector<VarId>& vars, Interner& in) {
  std::vector<Atom> out;
  lf.for_each_conjunct([&](const Predication& p) {
    Atom a{in.id(p.path_string()), p.definite ? 1 : 0, static_cast<std::int64_t>(p.args.size()), 0, 0};
    for (std::size_t s = 0; s < p.args.size() && s < 2; ++s) {
      const auto& t = p.args[s];
      if (t.is_variable())
        a[3 + s] = std::lower_bound(vars.begin(), vars.end(), t.var_id()) - vars.begin();
      else
        a[3 + s] = -(in.id((t.is_constant() ? "c:" : "b:") + t.name()) + 1);
    }
    out.push_back(a);
  });
  return out;
}

}  // namespace oracle_detail

/// Brute-force SEM verdict. Throws TooManyVariables when either side has more
/// than kOracleMaxVariables distinct variables.
inline bool sem_match_oracle(const LogicalForm& predicted, const LogicalForm& gold) {
  using namespace oracle_detail;
  if (predicted.dialect != gold.dialect || predicted.lambda_params != gold.lambda_params) return false;
  auto pv = distinct_vars(predicted);
  auto gv = distinct_vars(gold);
  if (pv.size() > kOracleMaxVariables || gv.size() > kOracleMaxVariables)
    throw TooManyVariables("oracle supports at most " + std::to_string(kOracleMaxVariables) + " variables per side");

  Interner in;
  auto gold_atoms = atoms(gold, gv, in);
  std::sort(gold_atoms.begin(), gold_atoms.end());
  gold_atoms.erase(std::unique(gold_atoms.begin(), gold_atoms.end()), gold_atoms.end());
  const auto pred_atoms = atoms(predicted, pv, in);
  if (pv.size() > gv.size()) return false;

  std::vector<std::size_t> image(pv.size());
  std::vector<Atom> mapped(pred_atoms.size());

  // image of the predicted set under `image`, compared as a set
  auto check = [&] {
    for (std::size_t i = 0; i < pred_atoms.size(); ++i) {
      Atom a = pred_atoms[i];
      for (std::size_t s = 0; s < static_cast<std::size_t>(a[2]) && s < 2; ++s)
        if (a[3 + s] >= 0) a[3 + s] = static_cast<std::int64_t>(image[static_cast<std::size_t>(a[3 + s])]);
      if (!std::binary_search(gold_atoms.begin(), gold_atoms.end(), a)) return false;
      mapped[i] = a;
    }
    auto m = mapped;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    return m == gold_atoms;
  };

  // depth-first enumeration of all injections pv -> gv
  std::vector<bool> used(gv.size(), false);
  auto enumerate = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == pv.size()) return check();
    for (std::size_t g = 0; g < gv.size(); ++g) {
      if (used[g]) continue;
      used[g] = true;
      image[depth] = g;
      if (self(self, depth + 1)) return true;
      used[g] = false;
    }
    return false;
  };
  return enumerate(enumerate, 0);
}

}  // namespace recogs
