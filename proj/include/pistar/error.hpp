// pistar - exact computation in finite partition semigroups
//
// Exception hierarchy shared by every module.

#ifndef PISTAR_ERROR_HPP_
#define PISTAR_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pistar {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Thrown when text or block data does not describe a partition of the
  //! 2n signed points.
  class MalformedElement : public Error {
   public:
    using Error::Error;
  };

  class DegreeMismatch : public Error {
   public:
    using Error::Error;
  };

  //! Thrown when an operand lies outside the family an operation requires.
  class FamilyError : public Error {
   public:
    using Error::Error;
  };

  //! Thrown when an enumeration or search would exceed its configured limit.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

}  // namespace pistar

#endif  // PISTAR_ERROR_HPP_
