#ifndef STALLINGS_ERRORS_HPP_
#define STALLINGS_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace stallings {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word, generator list or automaton text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operands built over alphabets of different sizes, or a letter index
// outside the alphabet.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Precondition on an argument violated (empty expansion word, p == q, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A word that was required to lie in a subgroup does not.
class NotAMember : public Error {
 public:
  using Error::Error;
};

// H is not a subgroup of K.
class NotContained : public Error {
 public:
  using Error::Error;
};

// H is contained in the ambient group but is not a free factor of it.
class NotAFreeFactor : public Error {
 public:
  using Error::Error;
};

}  // namespace stallings

#endif  // STALLINGS_ERRORS_HPP_
