#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace prn {

/// Base class of all structured errors thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A scan, enumeration or construction would exceed the configured cap.
class CapExceeded : public Error {
public:
  CapExceeded(const std::string& context, uint64_t required_, uint64_t cap_)
      : Error(context + ": size " + std::to_string(required_) +
              " exceeds cap " + std::to_string(cap_)),
        required(required_),
        cap(cap_) {}

  uint64_t required;
  uint64_t cap;
};

class DegreeMismatch : public Error {
public:
  DegreeMismatch(uint32_t a, uint32_t b)
      : Error("permutation degree mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)),
        lhs(a),
        rhs(b) {}

  uint32_t lhs;
  uint32_t rhs;
};

class DimensionMismatch : public Error {
public:
  DimensionMismatch(uint32_t a, uint32_t b)
      : Error("matrix dimension mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)),
        lhs(a),
        rhs(b) {}

  uint32_t lhs;
  uint32_t rhs;
};

class ModulusMismatch : public Error {
public:
  ModulusMismatch(uint32_t a, uint32_t b)
      : Error("field modulus mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)),
        lhs(a),
        rhs(b) {}

  uint32_t lhs;
  uint32_t rhs;
};

class NotPrime : public Error {
public:
  explicit NotPrime(uint64_t n)
      : Error("modulus " + std::to_string(n) +
              " is not prime; only prime fields are supported"),
        value(n) {}

  uint64_t value;
};

class NonInvertibleGenerator : public Error {
public:
  explicit NonInvertibleGenerator(const std::string& msg) : Error(msg) {}
};

class FormViolation : public Error {
public:
  explicit FormViolation(const std::string& msg) : Error(msg) {}
};

class NotNormal : public Error {
public:
  explicit NotNormal(const std::string& msg) : Error(msg) {}
};

class NotAbelian : public Error {
public:
  explicit NotAbelian(const std::string& msg) : Error(msg) {}
};

class NotInvariant : public Error {
public:
  explicit NotInvariant(const std::string& msg) : Error(msg) {}
};

class PreconditionViolated : public Error {
public:
  explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

class UnknownScenario : public Error {
public:
  explicit UnknownScenario(const std::string& id)
      : Error("unknown scenario id: " + id), scenario_id(id) {}

  std::string scenario_id;
};

}  // namespace prn
