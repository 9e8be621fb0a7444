// recogs/token_set.hpp - the set of redundant LF tokens that may be dropped.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "recogs/errors.hpp"

namespace recogs {

/// Subset of the five redundant COGS tokens `x _ ( ) ,`.
/// Dropping `_` while keeping `x` is rejected: it would glue `x` to the
/// numeral in any detokenized rendering.
class TokenRemovalSet {
 public:
  enum Token : std::uint8_t { kX = 1, kUnderscore = 2, kOpen = 4, kClose = 8, kComma = 16 };

  constexpr TokenRemovalSet() = default;

  static TokenRemovalSet of(std::uint8_t bits) {
    TokenRemovalSet s;
    s.bits_ = bits;
    s.validate();
    return s;
  }

  /// Parses a comma-separated list such as `x,_,(,)` or the literal word
  /// `comma` for the comma token. Empty string gives the empty set.
  static TokenRemovalSet parse(std::string_view text) {
    TokenRemovalSet s;
    // A bare "," inside a comma-separated list shows up as an empty field,
    // so scan characters rather than splitting.
    std::size_t i = 0;
    while (i < text.size()) {
      if (text.substr(i, 5) == "comma") {
        s.bits_ |= kComma;
        i += 5;
      } else {
        switch (text[i]) {
          case 'x': s.bits_ |= kX; break;
          case '_': s.bits_ |= kUnderscore; break;
          case '(': s.bits_ |= kOpen; break;
          case ')': s.bits_ |= kClose; break;
          case ',':
            // separator unless it is the last field or doubled (",,")
            if (i + 1 == text.size() || text[i + 1] == ',') {
              s.bits_ |= kComma;
              if (i + 1 < text.size()) ++i;
            }
            break;
          case ' ': break;
          default:
            throw InvalidConfig("unknown token in removal set: '" +
                                        std::string(1, text[i]) + "'");
        }
        ++i;
      }
    }
    s.validate();
    return s;
  }

  constexpr bool removes(Token t) const noexcept { return (bits_ & t) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::uint8_t bits() const noexcept { return bits_; }

  /// True when `tok` is one of the removable tokens and is in this set.
  bool removes_token(std::string_view tok) const noexcept {
    if (tok == "x") return removes(kX);
    if (tok == "_") return removes(kUnderscore);
    if (tok == "(") return removes(kOpen);
    if (tok == ")") return removes(kClose);
    if (tok == ",") return removes(kComma);
    return false;
  }

  std::string to_string() const {
    std::string out;
    auto add = [&](Token t, const char* s) {
      if (!removes(t)) return;
      if (!out.empty()) out += ' ';
      out += s;
    };
    add(kX, "x");
    add(kUnderscore, "_");
    add(kOpen, "(");
    add(kClose, ")");
    add(kComma, ",");
    return "{" + out + "}";
  }

  friend constexpr bool operator==(TokenRemovalSet a, TokenRemovalSet b) { return a.bits_ == b.bits_; }

 private:
  void validate() const {
    if (bits_ & ~0x1F) throw InvalidConfig("token removal set has unknown bits");
    if (removes(kUnderscore) && !removes(kX))
      throw InvalidConfig("removing '_' requires removing 'x' as well");
  }

  std::uint8_t bits_ = 0;
};

}  // namespace recogs
