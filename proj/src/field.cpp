#include "prn/field.hpp"

#include <cassert>

#include "prn/errors.hpp"
#include "prn/numeric.hpp"

namespace prn {

namespace {

void check_prime_modulus(uint32_t p) {
  // Scenario code constructs elements in tight loops over a handful of
  // moduli, so remember the last verdict.
  thread_local uint32_t last_ok = 0;
  if (p == last_ok) return;
  if (!is_prime(p)) throw NotPrime(p);
  last_ok = p;
}

}  // namespace

FieldElem::FieldElem(uint64_t value, uint32_t modulus)
    : v_(static_cast<uint32_t>(value % modulus)), p_(modulus) {
  check_prime_modulus(modulus);
}

void FieldElem::check_same_field(const FieldElem& o) const {
  if (p_ != o.p_) throw ModulusMismatch(p_, o.p_);
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same_field(o);
  return FieldElem((uint64_t)v_ + o.v_, p_);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same_field(o);
  return FieldElem((uint64_t)v_ + p_ - o.v_, p_);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same_field(o);
  return FieldElem((uint64_t)v_ * o.v_, p_);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

FieldElem FieldElem::operator-() const { return FieldElem((uint64_t)p_ - v_, p_); }

FieldElem FieldElem::inverse() const {
  if (v_ == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  return pow(p_ - 2);
}

FieldElem FieldElem::pow(uint64_t e) const {
  return FieldElem(pow_mod(v_, e, p_), p_);
}

}  // namespace prn
