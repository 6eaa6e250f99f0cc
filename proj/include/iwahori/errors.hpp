#pragma once

#include <stdexcept>
#include <string>

namespace iwahori {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InadmissibleType : public Error {
 public:
  using Error::Error;
};

class GroupTooLarge : public Error {
 public:
  using Error::Error;
};

class NonIntegralCoweight : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class NegativeQExponentAtZero : public Error {
 public:
  using Error::Error;
};

class NonReducedWord : public Error {
 public:
  using Error::Error;
};

class InvalidCharacter : public Error {
 public:
  using Error::Error;
};

class NonDominant : public Error {
 public:
  using Error::Error;
};

class WrongFamily : public Error {
 public:
  using Error::Error;
};

class RatioNotMonomial : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace iwahori
