#pragma once

#include <stdexcept>
#include <string>

namespace psikit {

// Error taxonomy shared by every layer.  Callers that want to distinguish
// recoverable situations (resource limits, unsupported inputs) from plain
// bugs switch on kind() rather than parsing messages.
enum class ErrKind {
  ResourceLimit,
  ContextMismatch,
  InfiniteDimension,
  DuplicateName,
  MalformedRelation,
  RelationNotPreserved,
  BaseIncompatible,
  ImageNotContained,
  IncompatibleMultiplicative,
  UnsupportedFiber,
  UnsupportedSource,
  NotPsiAtPrime,
  NotCommonIdeal,
  NotFiniteQuotient,
  InvalidD,
  ImproperIdeal,
  NotPrime,
  TooLarge,
  NotARing,
  MeaninglessFact,
  IllTypedExpression,
  UnknownName,
  SyntaxError,
  Internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrKind kind() const { return kind_; }

private:
  ErrKind kind_;
};

// Parse errors carry a 1-based source position.
class ParseError : public Error {
public:
  ParseError(int line, int col, const std::string& msg)
      : Error(ErrKind::SyntaxError,
              "line " + std::to_string(line) + ", col " + std::to_string(col) +
                  ": " + msg),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

const char* errkind_name(ErrKind k);

} // namespace psikit
