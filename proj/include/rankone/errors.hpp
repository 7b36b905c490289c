#ifndef RANKONE_ERRORS_HPP
#define RANKONE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rankone {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scalar, polynomial, matrix or problem-file text.
class ParseError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its documented domain
/// (degree too large, non-monic target, duplicate roots, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A polynomial does not factor into linear factors over the working field.
/// `remaining_degree()` is the degree of the part left after all roots in the
/// field have been removed.
class NotSplit : public Error {
 public:
  explicit NotSplit(std::size_t remaining_degree)
      : Error("polynomial does not split over the field; a factor of degree " +
              std::to_string(remaining_degree) + " has no root"),
        remaining_degree_(remaining_degree) {}

  std::size_t remaining_degree() const noexcept { return remaining_degree_; }

 private:
  std::size_t remaining_degree_;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these is a bug.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace rankone

#endif  // RANKONE_ERRORS_HPP
