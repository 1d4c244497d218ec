#ifndef LATPOLY_ERROR_HPP
#define LATPOLY_ERROR_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace latpoly {

/// Root of every exception raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LATPOLY_DEFINE_ERROR(Name)                \
  class Name : public Error {                     \
   public:                                        \
    using Error::Error;                           \
  };

// Lattice construction.
LATPOLY_DEFINE_ERROR(CycleError)
LATPOLY_DEFINE_ERROR(NoBounds)
LATPOLY_DEFINE_ERROR(SizeLimitExceeded)
LATPOLY_DEFINE_ERROR(InvalidParams)
LATPOLY_DEFINE_ERROR(EmptyInterval)

// Terms and tables.
LATPOLY_DEFINE_ERROR(UnknownElement)
LATPOLY_DEFINE_ERROR(VarOutOfRange)
LATPOLY_DEFINE_ERROR(ArityMismatch)
LATPOLY_DEFINE_ERROR(BadIndex)

// Preconditions of the checkers.
LATPOLY_DEFINE_ERROR(NotPolynomial)
LATPOLY_DEFINE_ERROR(NotDistributive)
LATPOLY_DEFINE_ERROR(NotNonDistributive)
LATPOLY_DEFINE_ERROR(HypothesisViolated)

#undef LATPOLY_DEFINE_ERROR

/// Some pair of elements lacks a unique greatest lower or least upper bound.
class NotALattice : public Error {
 public:
  NotALattice(std::string first, std::string second, const std::string& what)
      : Error("not a lattice: " + first + " and " + second + " have no " + what),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t column, std::vector<std::string> expected, const std::string& found)
      : Error(make_message(column, expected, found)), column_(column), expected_(std::move(expected)) {}

  /// 1-based column of the offending token.
  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string make_message(std::size_t column, const std::vector<std::string>& expected,
                                  const std::string& found) {
    std::string msg = "syntax error at column " + std::to_string(column) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t column_;
  std::vector<std::string> expected_;
};

/// An exhaustive loop would need more point evaluations than allowed.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t allowed)
      : Error("evaluation budget exceeded in " + what + ": requires " + std::to_string(required) +
              " evaluations, allowed " + std::to_string(allowed)),
        required_(required),
        allowed_(allowed) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t allowed() const noexcept { return allowed_; }

 private:
  std::uint64_t required_;
  std::uint64_t allowed_;
};

/// An enumeration found more results than its limit; the count is a lower bound.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(std::uint64_t lower_bound)
      : Error("limit exceeded: at least " + std::to_string(lower_bound) + " results"),
        lower_bound_(lower_bound) {}

  std::uint64_t lower_bound() const noexcept { return lower_bound_; }

 private:
  std::uint64_t lower_bound_;
};

/// Malformed input file.
class FormatError : public Error {
 public:
  FormatError(std::string file, std::size_t line, std::size_t column, const std::string& message)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        file_(std::move(file)),
        line_(line),
        column_(column) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace latpoly

#endif  // LATPOLY_ERROR_HPP
