// ============================================================================
// recogs/lf.hpp - logical form data model, parser and renderer
// ============================================================================
//
// Two surface dialects share one AST:
//
//   COGS    * cake ( x _ 3 ) ; eat . agent ( x _ 1 , Emma ) AND ...
//   ReCOGS  Mia ( 3 ) ; cake ( 21 ) ; eat ( 6 ) AND agent ( 6 , 3 ) AND ...
//
// Conjuncts terminated by `;` form the preposed segment, the remainder is an
// `AND` chain. Both are plain conjunction; the split is kept only so that
// rendering reproduces the source bytes. Primitive rows come in two shapes,
// a bare name (`Paula`) and a lambda abstraction
// (`LAMBDA a . LAMBDA e . walk . agent ( e , a )`).
//
// Tokens are separated by exactly one space. The parser never splits inside a
// token. Parsing and rendering are pure; every type here is a value type.
//
// ============================================================================
#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "recogs/errors.hpp"
#include "recogs/token_set.hpp"

namespace recogs {

using VarId = std::uint64_t;

enum class Dialect { COGS, ReCOGS };

inline std::string_view to_string(Dialect d) { return d == Dialect::COGS ? "cogs" : "recogs"; }

/// A conjunct argument: a numbered variable, a proper-noun constant, or a
/// lambda-bound parameter name (primitive rows only).
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Constant, Bound };

  static Term variable(VarId id) { return Term(Kind::Variable, id, {}); }
  static Term constant(std::string name) { return Term(Kind::Constant, 0, std::move(name)); }
  static Term bound(std::string name) { return Term(Kind::Bound, 0, std::move(name)); }

  Kind kind() const noexcept { return kind_; }
  bool is_variable() const noexcept { return kind_ == Kind::Variable; }
  bool is_constant() const noexcept { return kind_ == Kind::Constant; }
  bool is_bound() const noexcept { return kind_ == Kind::Bound; }
  VarId var_id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Term& a, const Term& b) {
    return a.kind_ == b.kind_ && a.id_ == b.id_ && a.name_ == b.name_;
  }
  friend bool operator<(const Term& a, const Term& b) {
    return std::tie(a.kind_, a.id_, a.name_) < std::tie(b.kind_, b.id_, b.name_);
  }

 private:
  Term(Kind k, VarId id, std::string name) : kind_(k), id_(id), name_(std::move(name)) {}

  Kind kind_;
  VarId id_;
  std::string name_;
};

/// One conjunct: `[*] seg ( . seg )* ( arg [, arg] )`.
struct Predication {
  std::vector<std::string> path;
  std::vector<Term> args;
  bool definite = false;

  std::string path_string() const {
    std::string out;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out += '.';
      out += path[i];
    }
    return out;
  }

  friend bool operator==(const Predication& a, const Predication& b) {
    return a.definite == b.definite && a.path == b.path && a.args == b.args;
  }
  friend bool operator<(const Predication& a, const Predication& b) {
    return std::tie(a.path, a.definite, a.args) < std::tie(b.path, b.definite, b.args);
  }
};

struct LogicalForm {
  std::vector<std::string> lambda_params;  ///< `LAMBDA a . LAMBDA e .` prefix, outermost first
  std::vector<Predication> preposed;
  std::vector<Predication> main;
  Dialect dialect = Dialect::COGS;

  /// A single-token LF such as `Paula`.
  bool is_bare() const noexcept {
    return lambda_params.empty() && preposed.empty() && main.size() == 1 && main[0].args.empty();
  }
  bool is_lambda() const noexcept { return !lambda_params.empty(); }
  /// Primitive rows (bare names and lambda abstractions) carry no sentence positions.
  bool is_primitive() const noexcept { return is_bare() || is_lambda(); }

  std::size_t conjunct_count() const noexcept { return preposed.size() + main.size(); }

  template <typename F>
  void for_each_conjunct(F&& f) const {
    for (const auto& p : preposed) f(p);
    for (const auto& p : main) f(p);
  }

  friend bool operator==(const LogicalForm& a, const LogicalForm& b) {
    return a.dialect == b.dialect && a.lambda_params == b.lambda_params &&
           a.preposed == b.preposed && a.main == b.main;
  }
};

/// Surface options for `render_lf`. The default emits the full tokenized
/// surface of the LF's own dialect.
struct RenderStyle {
  TokenRemovalSet removed{};
  /// Detokenized display form used in print (`*cake(x_3) ; eat.agent(x_1,Emma)`).
  bool compact = false;
};

// ---------------------------------------------------------------------------
// Tokenization helpers
// ---------------------------------------------------------------------------

/// Splits on single spaces only. Empty fields (double spaces, leading or
/// trailing blanks) are kept as empty tokens so the parser can reject them.
inline std::vector<std::string_view> split_spaces(std::string_view text) {
  std::vector<std::string_view> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto sp = text.find(' ', start);
    if (sp == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, sp - start));
    start = sp + 1;
  }
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& toks, char sep = ' ') {
  std::string out;
  std::size_t n = 0;
  for (const auto& t : toks) n += t.size() + 1;
  out.reserve(n);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += sep;
    out += toks[i];
  }
  return out;
}

/// Converts the detokenized display form (`*cake(x_3) ; eat.agent(x_1,Emma)`)
/// into the single-space tokenized form the parser expects.
inline std::string tokenize_compact(std::string_view text) {
  std::vector<std::string> toks;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) toks.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      flush();
    } else if (c == '(' || c == ')' || c == ',' || c == '.' || c == ';' || c == '*' || c == '_') {
      flush();
      toks.emplace_back(1, c);
    } else {
      cur += c;
    }
  }
  flush();
  return join_tokens(toks);
}

namespace detail {

inline bool is_number(std::string_view tok) {
  return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline bool is_reserved(std::string_view tok) {
  return tok == "(" || tok == ")" || tok == "," || tok == "." || tok == ";" || tok == "*" ||
         tok == "AND" || tok == "LAMBDA" || tok == "_";
}

inline bool is_name(std::string_view tok) {
  if (tok.empty() || is_reserved(tok) || is_number(tok)) return false;
  for (char c : tok) {
    auto u = static_cast<unsigned char>(c);
    if (u <= ' ' || c == '(' || c == ')' || c == ',' || c == ';' || c == '*' || c == '.') return false;
  }
  return true;
}

class Parser {
 public:
  Parser(std::string_view text, Dialect dialect, TokenRemovalSet removed)
      : toks_(split_spaces(text)), dialect_(dialect), removed_(removed) {}

  LogicalForm parse() {
    LogicalForm lf;
    lf.dialect = dialect_;
    if (toks_.empty()) throw MalformedLF(0, "empty logical form");
    for (std::size_t i = 0; i < toks_.size(); ++i)
      if (toks_[i].empty()) throw MalformedLF(i, "empty token (tokens are separated by exactly one space)");

    if (toks_.size() == 1 && is_name(toks_[0]) && toks_[0] != "x") {
      lf.main.push_back(Predication{{std::string(toks_[0])}, {}, false});
      return lf;
    }

    while (peek() == "LAMBDA") {
      ++pos_;
      if (!is_name(peek())) fail("expected lambda parameter name");
      std::string param(toks_[pos_++]);
      if (std::find(lf.lambda_params.begin(), lf.lambda_params.end(), param) != lf.lambda_params.end())
        fail("duplicate lambda parameter");
      lf.lambda_params.push_back(std::move(param));
      expect(".");
    }
    params_ = &lf.lambda_params;

    bool in_main = false;
    while (true) {
      std::size_t conj_start = pos_;
      Predication p = conjunct();
      auto push_main = [&] {
        if (p.definite) throw MalformedLF(conj_start, "definite conjunct outside the preposed segment");
        lf.main.push_back(std::move(p));
      };
      if (at_end()) {
        push_main();
        break;
      }
      if (peek() == ";") {
        if (in_main) fail("';' after an AND chain");
        check_preposed(p, conj_start);
        lf.preposed.push_back(std::move(p));
        ++pos_;
        if (at_end()) fail("dangling ';'");
        continue;
      }
      if (peek() == "AND") {
        in_main = true;
        push_main();
        ++pos_;
        if (at_end()) fail("dangling AND");
        continue;
      }
      fail("expected ';', AND or end of input");
    }
    return lf;
  }

 private:
  std::string_view peek(std::size_t ahead = 0) const {
    return pos_ + ahead < toks_.size() ? toks_[pos_ + ahead] : std::string_view{};
  }
  bool at_end() const { return pos_ >= toks_.size(); }

  [[noreturn]] void fail(const std::string& msg) const {
    std::string where = at_end() ? "end of input" : "'" + std::string(toks_[pos_]) + "'";
    throw MalformedLF(pos_, msg + " (at " + where + ")");
  }

  void expect(std::string_view tok) {
    if (peek() != tok) fail("expected '" + std::string(tok) + "'");
    ++pos_;
  }

  bool keeps(TokenRemovalSet::Token t) const { return !removed_.removes(t); }

  void check_preposed(const Predication& p, std::size_t at) const {
    if (p.args.size() != 1) throw MalformedLF(at, "preposed conjunct must be unary");
    if (dialect_ == Dialect::COGS && !p.definite)
      throw MalformedLF(at, "COGS preposed conjunct must carry '*'");
    if (dialect_ == Dialect::ReCOGS && p.path.size() != 1)
      throw MalformedLF(at, "ReCOGS preposed conjunct must be a noun predication");
  }

  bool at_separator() const {
    auto t = peek();
    return at_end() || t == "AND" || t == ";" || t == ")" || t == ",";
  }

  Predication conjunct() {
    Predication p;
    if (peek() == "*") {
      p.definite = true;
      ++pos_;
    }
    if (!is_name(peek()) || peek() == "x") fail("expected predicate name");
    p.path.emplace_back(toks_[pos_++]);
    while (peek() == "." && is_name(peek(1))) {
      pos_ += 1;
      p.path.emplace_back(toks_[pos_++]);
    }

    bool parens = keeps(TokenRemovalSet::kOpen);
    if (parens) expect("(");
    else if (peek() == "(") fail("unexpected '('");
    p.args.push_back(term());
    if (keeps(TokenRemovalSet::kComma)) {
      if (peek() == ",") {
        ++pos_;
        p.args.push_back(term());
      }
    } else if (!at_separator()) {
      p.args.push_back(term());
    }
    if (keeps(TokenRemovalSet::kComma) ? peek() == "," : !at_separator())
      fail("predicate arity exceeds 2");
    if (keeps(TokenRemovalSet::kClose)) expect(")");
    else if (peek() == ")") fail("unexpected ')'");
    if (p.definite && p.args.size() != 1) fail("definite conjunct must be unary");
    return p;
  }

  Term term() {
    auto t = peek();
    if (at_end()) fail("expected argument");
    if (params_ && std::find(params_->begin(), params_->end(), t) != params_->end()) {
      ++pos_;
      return Term::bound(std::string(t));
    }
    if (dialect_ == Dialect::COGS) {
      bool has_prefix = false;
      if (keeps(TokenRemovalSet::kX)) {
        if (t == "x") {
          ++pos_;
          has_prefix = true;
          if (keeps(TokenRemovalSet::kUnderscore)) expect("_");
        }
      } else if (keeps(TokenRemovalSet::kUnderscore) && t == "_") {
        ++pos_;
        has_prefix = true;
      }
      if (has_prefix || removed_.removes(TokenRemovalSet::kUnderscore)) {
        if (has_prefix || is_number(peek())) return Term::variable(number());
      }
      if (is_number(peek())) fail("variable index without 'x _' prefix");
      if (!is_name(peek()) || peek() == "x") fail("expected variable or constant");
      return Term::constant(std::string(toks_[pos_++]));
    }
    if (!is_number(t)) fail("expected numeric variable");
    return Term::variable(number());
  }

  VarId number() {
    auto t = peek();
    if (!is_number(t)) fail("non-numeric variable index");
    VarId v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) fail("variable index out of range");
    if (t.size() > 1 && t[0] == '0') fail("variable index has leading zeros");
    ++pos_;
    return v;
  }

  std::vector<std::string_view> toks_;
  std::size_t pos_ = 0;
  Dialect dialect_;
  TokenRemovalSet removed_;
  const std::vector<std::string>* params_ = nullptr;
};

}  // namespace detail

/// Parses a tokenized LF. `removed` selects the reduced grammar produced by
/// `remove_tokens`; pass the empty set for source data.
inline LogicalForm parse_lf(std::string_view text, Dialect dialect, TokenRemovalSet removed = {}) {
  return detail::Parser(text, dialect, removed).parse();
}

/// Non-throwing variant.
inline std::optional<LogicalForm> try_parse_lf(std::string_view text, Dialect dialect,
                                               TokenRemovalSet removed = {}) noexcept {
  try {
    return parse_lf(text, dialect, removed);
  } catch (const Error&) {
    return std::nullopt;
  } catch (const std::bad_alloc&) {
    return std::nullopt;
  }
}

namespace detail {

inline void render_term_tokens(const Term& t, Dialect d, TokenRemovalSet rm, std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (d == Dialect::COGS) {
      if (!rm.removes(TokenRemovalSet::kX)) out.emplace_back("x");
      if (!rm.removes(TokenRemovalSet::kUnderscore)) out.emplace_back("_");
    }
    out.push_back(std::to_string(t.var_id()));
  } else {
    out.push_back(t.name());
  }
}

inline void render_conjunct_tokens(const Predication& p, Dialect d, TokenRemovalSet rm,
                                   std::vector<std::string>& out) {
  if (p.definite) out.emplace_back("*");
  for (std::size_t i = 0; i < p.path.size(); ++i) {
    if (i) out.emplace_back(".");
    out.push_back(p.path[i]);
  }
  if (p.args.empty()) return;
  if (!rm.removes(TokenRemovalSet::kOpen)) out.emplace_back("(");
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (i && !rm.removes(TokenRemovalSet::kComma)) out.emplace_back(",");
    render_term_tokens(p.args[i], d, rm, out);
  }
  if (!rm.removes(TokenRemovalSet::kClose)) out.emplace_back(")");
}

inline std::string render_compact_term(const Term& t, Dialect d) {
  if (!t.is_variable()) return t.name();
  return d == Dialect::COGS ? "x_" + std::to_string(t.var_id()) : std::to_string(t.var_id());
}

inline std::string render_compact_conjunct(const Predication& p, Dialect d) {
  std::string out = p.definite ? "*" : "";
  out += p.path_string();
  if (p.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < p.args.size(); ++i) {
    if (i) out += ',';
    out += render_compact_term(p.args[i], d);
  }
  out += ')';
  return out;
}

}  // namespace detail

/// Renders the LF as a token list (default style reproduces source data).
inline std::vector<std::string> render_tokens(const LogicalForm& lf, const RenderStyle& style = {}) {
  std::vector<std::string> out;
  for (const auto& p : lf.lambda_params) {
    out.emplace_back("LAMBDA");
    out.push_back(p);
    out.emplace_back(".");
  }
  for (const auto& p : lf.preposed) {
    detail::render_conjunct_tokens(p, lf.dialect, style.removed, out);
    out.emplace_back(";");
  }
  for (std::size_t i = 0; i < lf.main.size(); ++i) {
    if (i) out.emplace_back("AND");
    detail::render_conjunct_tokens(lf.main[i], lf.dialect, style.removed, out);
  }
  return out;
}

inline std::string render_lf(const LogicalForm& lf, const RenderStyle& style = {}) {
  if (!style.compact) return join_tokens(render_tokens(lf, style));
  std::string out;
  for (const auto& p : lf.lambda_params) out += "LAMBDA " + p + " . ";
  for (const auto& p : lf.preposed) out += detail::render_compact_conjunct(p, lf.dialect) + " ; ";
  for (std::size_t i = 0; i < lf.main.size(); ++i) {
    if (i) out += " AND ";
    out += detail::render_compact_conjunct(lf.main[i], lf.dialect);
  }
  return out;
}

/// Distinct variable ids in first-occurrence order (preposed, then main).
inline std::vector<VarId> variables_of(const LogicalForm& lf) {
  std::vector<VarId> out;
  std::unordered_set<VarId> seen;
  lf.for_each_conjunct([&](const Predication& p) {
    for (const auto& t : p.args)
      if (t.is_variable() && seen.insert(t.var_id()).second) out.push_back(t.var_id());
  });
  return out;
}

}  // namespace recogs
