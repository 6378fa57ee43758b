#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ngtrace {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class GcdNotOne : public Error {
public:
  explicit GcdNotOne(std::int64_t g)
      : Error("generators have gcd " + std::to_string(g) + ", expected 1"), gcd(g) {}
  std::int64_t gcd;
};

class NonMinimalGenerators : public Error {
public:
  explicit NonMinimalGenerators(std::int64_t g)
      : Error("generator " + std::to_string(g) +
              " lies in the semigroup generated by the others"),
        redundant(g) {}
  std::int64_t redundant;
};

class NotInSemigroup : public Error {
public:
  explicit NotInSemigroup(std::int64_t s)
      : Error(std::to_string(s) + " is not a positive element of the semigroup"),
        value(s) {}
  std::int64_t value;
};

class InvalidInput : public Error {
public:
  using Error::Error;
};

class ResourceLimit : public Error {
public:
  using Error::Error;
};

class BaseMismatch : public Error {
public:
  BaseMismatch() : Error("relative ideals live over different semigroups") {}
};

class InhomogeneousMatrix : public Error {
public:
  InhomogeneousMatrix(int index, std::int64_t expected, std::int64_t got)
      : Error("column " + std::to_string(index) + " has degree gap " +
              std::to_string(got) + " but column 1 has " + std::to_string(expected)),
        column(index) {}
  int column;
};

class IdealMismatch : public Error {
public:
  explicit IdealMismatch(std::string witness)
      : Error("toric generator " + witness + " is not in the ideal of 2-minors"),
        witness_binomial(std::move(witness)) {}
  std::string witness_binomial;
};

class NotApplicable : public Error {
public:
  using Error::Error;
};

class UnsupportedBaseCase : public Error {
public:
  using Error::Error;
};

class NoTabulatedWitness : public Error {
public:
  using Error::Error;
};

class WitnessFailed : public Error {
public:
  WitnessFailed(std::string what_failed, std::string residue)
      : Error(what_failed + " (normal form " + residue + ")"),
        normal_form(std::move(residue)) {}
  std::string normal_form;
};

}  // namespace ngtrace
