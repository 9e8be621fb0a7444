// recogs/errors.hpp - exception hierarchy shared by every recogs-kit module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recogs {

/// Root of all recogs-kit errors. `kind()` is a stable machine-readable tag
/// used by the CLI for its structured error line.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

/// Raised when an LF string does not belong to the grammar. `position()` is
/// the 0-based index of the first offending token.
class MalformedLF : public Error {
 public:
  MalformedLF(std::size_t position, const std::string& message)
      : Error("MalformedLF", "malformed LF at token " +
                                 std::to_string(position) + ": " + message),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

#define RECOGS_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                       \
   public:                                                          \
    explicit Name(const std::string& what) : Error(#Name, what) {}  \
  }

RECOGS_DEFINE_ERROR(IncompleteRenaming);
RECOGS_DEFINE_ERROR(ConstantInReCOGS);
RECOGS_DEFINE_ERROR(DialectMismatch);
RECOGS_DEFINE_ERROR(PrimitiveOperand);
RECOGS_DEFINE_ERROR(NoEligibleObject);
RECOGS_DEFINE_ERROR(NoEligibleHead);
RECOGS_DEFINE_ERROR(GoldMalformed);
RECOGS_DEFINE_ERROR(TooManyVariables);
RECOGS_DEFINE_ERROR(LengthMismatch);
RECOGS_DEFINE_ERROR(UnknownSplitTag);
RECOGS_DEFINE_ERROR(UnknownSplit);
RECOGS_DEFINE_ERROR(InvalidConfig);
RECOGS_DEFINE_ERROR(IoError);

#undef RECOGS_DEFINE_ERROR

/// Row-level ingestion failure; carries the 1-based line number.
class BadColumnCount : public Error {
 public:
  BadColumnCount(std::size_t line, std::size_t columns)
      : Error("BadColumnCount", "line " + std::to_string(line) + ": expected 3 columns, got " +
                                    std::to_string(columns)),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace recogs
