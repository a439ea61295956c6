#pragma once

#include <stdexcept>
#include <string>

namespace pickdisc {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DenominatorZero : public Error {
 public:
  using Error::Error;
};

class DenominatorRootInDisc : public Error {
 public:
  using Error::Error;
};

class DegenerateComposition : public Error {
 public:
  using Error::Error;
};

class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

class DegenerateFamily : public Error {
 public:
  using Error::Error;
};

class TransversalityViolation : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

class Singularity : public Error {
 public:
  using Error::Error;
};

class DuplicatePoints : public Error {
 public:
  using Error::Error;
};

class ZeroAtOrigin : public Error {
 public:
  using Error::Error;
};

class NotCompletePick : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace pickdisc
