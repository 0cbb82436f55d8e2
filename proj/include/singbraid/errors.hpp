#ifndef SINGBRAID_ERRORS_HPP
#define SINGBRAID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace singbraid {

  // Base class for every error raised by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed braid text or model file.
  class SyntaxError : public Error {
   public:
    using Error::Error;
  };

  // Generator index outside the ambient strand count / rank.
  class RangeError : public Error {
   public:
    using Error::Error;
  };

  // An operation was called on an input that violates its precondition
  // (e.g. a tau^-1 letter handed to the desingularization oracle).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // A search or expansion exceeded its configured budget.
  class BudgetExceeded : public Error {
   public:
    using Error::Error;
  };

}  // namespace singbraid

#endif  // SINGBRAID_ERRORS_HPP
