#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "prn/field.hpp"

namespace prn {

/// Dense polynomial over GF(p), little-endian coefficient order (coeffs[k] is
/// the coefficient of x^k). The representation is normalized: no trailing
/// zeros, so the zero polynomial has an empty coefficient vector.
class Poly {
public:
  explicit Poly(uint32_t modulus);  // zero polynomial
  Poly(uint32_t modulus, std::vector<uint32_t> coeffs);

  /// Convenience: signed coefficients are reduced mod p (so -1 works).
  static Poly from_coeffs(uint32_t modulus, const std::vector<int64_t>& coeffs);
  /// x^n - 1 over GF(p).
  static Poly x_pow_minus_one(uint32_t modulus, unsigned n);

  uint32_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// Degree of a nonzero polynomial; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<uint32_t>& coeffs() const { return c_; }
  FieldElem coeff(unsigned k) const;
  FieldElem leading() const;
  bool is_monic() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& divisor) const;
  bool divides(const Poly& other) const;  // *this | other

  Poly monic() const;

  FieldElem eval(const FieldElem& x) const;

  std::string to_string(const std::string& var = "x") const;

private:
  uint32_t p_;
  std::vector<uint32_t> c_;

  void normalize();
};

}  // namespace prn
