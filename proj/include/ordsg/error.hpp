// Exception types thrown by the ordsg library.

#ifndef ORDSG_ERROR_HPP_
#define ORDSG_ERROR_HPP_

#include <cstddef>    // for size_t
#include <stdexcept>  // for runtime_error
#include <string>     // for string

namespace ordsg {

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An element does not belong to the carrier of the instance it was used
  //! with (symbol outside the alphabet, nonpositive triangle entry, ...).
  class DomainError : public Error {
   public:
    using Error::Error;
  };

  //! A caller supplied an argument that can never be valid (empty sample,
  //! zero alphabet, dimension out of range, mismatched instances).
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  //! The hypotheses of a checked statement do not hold for the given input.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A constructed object failed its own exact postcondition.
  class PostconditionError : public Error {
   public:
    using Error::Error;
  };

  //! A product set or subset enumeration would exceed its configured cap.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          _position(position) {}

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

}  // namespace ordsg

#endif  // ORDSG_ERROR_HPP_
