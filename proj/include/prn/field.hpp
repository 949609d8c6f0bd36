#pragma once

#include <cstdint>

namespace prn {

/// An element of the prime field GF(p). The modulus travels with the value;
/// mixed-modulus arithmetic throws ModulusMismatch. Primality of p is checked
/// on construction (extension fields are rejected by design).
class FieldElem {
public:
  FieldElem(uint64_t value, uint32_t modulus);

  static FieldElem zero(uint32_t p) { return FieldElem(0, p); }
  static FieldElem one(uint32_t p) { return FieldElem(1, p); }

  uint32_t value() const { return v_; }
  uint32_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;

  FieldElem inverse() const;
  FieldElem pow(uint64_t e) const;

  bool operator==(const FieldElem& o) const {
    return p_ == o.p_ && v_ == o.v_;
  }
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

private:
  uint32_t v_;
  uint32_t p_;

  void check_same_field(const FieldElem& o) const;
};

}  // namespace prn
