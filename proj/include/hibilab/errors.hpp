#pragma once

#include <stdexcept>
#include <string>

namespace hibilab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HIBILAB_DEFINE_ERROR(Name)           \
  class Name : public Error {                \
   public:                                   \
    using Error::Error;                      \
  };

HIBILAB_DEFINE_ERROR(InvalidPoset)
HIBILAB_DEFINE_ERROR(NotComparable)
HIBILAB_DEFINE_ERROR(TooLarge)
HIBILAB_DEFINE_ERROR(NotAnIdeal)
HIBILAB_DEFINE_ERROR(NotDistributive)
HIBILAB_DEFINE_ERROR(BadRange)
HIBILAB_DEFINE_ERROR(NotASegment)
HIBILAB_DEFINE_ERROR(GroundSetMismatch)
HIBILAB_DEFINE_ERROR(NotEquigenerated)
HIBILAB_DEFINE_ERROR(TooManyGenerators)
HIBILAB_DEFINE_ERROR(NotSquarefree)
HIBILAB_DEFINE_ERROR(NotMeetClosed)
HIBILAB_DEFINE_ERROR(NotMinimal)
HIBILAB_DEFINE_ERROR(PreconditionViolated)
HIBILAB_DEFINE_ERROR(SizeMismatch)
HIBILAB_DEFINE_ERROR(NotCMBipartiteBase)
HIBILAB_DEFINE_ERROR(BadRank)
HIBILAB_DEFINE_ERROR(CrosscheckFailure)

#undef HIBILAB_DEFINE_ERROR

/// Raised by `build_lattice` when a pair of elements has no join or no meet.
class NotALattice : public Error {
 public:
  NotALattice(int a, int b, const std::string& what)
      : Error("not a lattice: elements " + std::to_string(a) + " and " + std::to_string(b) + " " + what),
        first(a),
        second(b) {}
  int first;
  int second;
};

/// Text input errors; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& token, const std::string& what)
      : Error((line > 0 ? "line " + std::to_string(line) + ": " : std::string{}) + what +
              (token.empty() ? std::string{} : " (token '" + token + "')")),
        line(line),
        token(token) {}
  int line;
  std::string token;
};

}  // namespace hibilab
