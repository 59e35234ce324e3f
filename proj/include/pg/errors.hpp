#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pg {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class NonPrimeCharacteristic : public Error {
public:
  explicit NonPrimeCharacteristic(unsigned p)
      : Error("characteristic " + std::to_string(p) + " is not prime") {}
};

class DegreeOutOfRange : public Error {
public:
  using Error::Error;
};

class MixedFields : public Error {
public:
  MixedFields() : Error("operands belong to different fields") {}
};

class DivisionByZero : public Error {
public:
  DivisionByZero() : Error("division by zero field element") {}
};

class ZeroElement : public Error {
public:
  ZeroElement() : Error("multiplicative order of zero is undefined") {}
};

class IncompatibleGenerators : public Error {
public:
  using Error::Error;
};

class BudgetExceeded : public Error {
public:
  BudgetExceeded(uint64_t seen, uint64_t budget)
      : Error("enumeration budget exceeded: " + std::to_string(seen) +
              " elements seen, budget " + std::to_string(budget)),
        seen_(seen), budget_(budget) {}
  uint64_t seen() const { return seen_; }
  uint64_t budget() const { return budget_; }

private:
  uint64_t seen_;
  uint64_t budget_;
};

class MalformedFixture : public Error {
public:
  using Error::Error;
};

class UnknownSpec : public Error {
public:
  using Error::Error;
};

class MissingFixture : public Error {
public:
  using Error::Error;
};

class FixtureOrderMismatch : public Error {
public:
  FixtureOrderMismatch(const std::string& name, uint64_t declared, uint64_t computed)
      : Error("fixture " + name + " declares order " + std::to_string(declared) +
              " but generators yield order " + std::to_string(computed)) {}
};

class UnknownFormat : public Error {
public:
  explicit UnknownFormat(const std::string& fmt) : Error("unknown export format: " + fmt) {}
};

class FieldLacksRoots : public Error {
public:
  using Error::Error;
};

class IdentificationFailed : public Error {
public:
  using Error::Error;
};

}  // namespace pg
