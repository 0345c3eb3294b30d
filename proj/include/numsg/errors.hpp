// numsg - enumeration of numerical semigroups by multiplicity and Frobenius
// number.
//
// Exception hierarchy used throughout the library.

#ifndef NUMSG_ERRORS_HPP_
#define NUMSG_ERRORS_HPP_

#include <stdexcept>  // for runtime_error

namespace numsg {

  //! Base class of every exception thrown by numsg.
  class NumsgError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed arguments: empty generator lists, values out of range, ...
  class InvalidInput : public NumsgError {
   public:
    using NumsgError::NumsgError;
  };

  //! The data does not describe a numerical semigroup (gcd != 1, closure
  //! violated, Kunz vector not superadditive).
  class NotNumericalSemigroup : public NumsgError {
   public:
    using NumsgError::NumsgError;
  };

  //! The ratio of N is not defined.
  class UndefinedRatio : public NumsgError {
   public:
    using NumsgError::NumsgError;
  };

  //! An operation was called outside the hypotheses it is valid under.
  class PreconditionViolation : public NumsgError {
   public:
    using NumsgError::NumsgError;
  };

  //! No irreducible numerical semigroup exists for the requested (m, F).
  class NoIrreducibles : public PreconditionViolation {
   public:
    using PreconditionViolation::PreconditionViolation;
  };

  //! A configured size bound would be exceeded.
  class LimitExceeded : public NumsgError {
   public:
    using NumsgError::NumsgError;
  };

  //! The Apery sets handed to an edge update do not come from a tree edge.
  class InconsistentEdge : public NumsgError {
   public:
    using NumsgError::NumsgError;
  };

}  // namespace numsg

#endif  // NUMSG_ERRORS_HPP_
