#include "prn/poly.hpp"

#include <cassert>

#include "prn/errors.hpp"

namespace prn {

Poly::Poly(uint32_t modulus) : p_(modulus) {
  FieldElem::zero(modulus);  // validates the modulus
}

Poly::Poly(uint32_t modulus, std::vector<uint32_t> coeffs)
    : p_(modulus), c_(std::move(coeffs)) {
  FieldElem::zero(modulus);
  for (auto& c : c_) c %= p_;
  normalize();
}

Poly Poly::from_coeffs(uint32_t modulus, const std::vector<int64_t>& coeffs) {
  std::vector<uint32_t> c;
  c.reserve(coeffs.size());
  for (int64_t v : coeffs) {
    int64_t r = v % static_cast<int64_t>(modulus);
    if (r < 0) r += modulus;
    c.push_back(static_cast<uint32_t>(r));
  }
  return Poly(modulus, std::move(c));
}

Poly Poly::x_pow_minus_one(uint32_t modulus, unsigned n) {
  std::vector<uint32_t> c(n + 1, 0);
  c[0] = modulus - 1;
  c[n] = 1;
  return Poly(modulus, std::move(c));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldElem Poly::coeff(unsigned k) const {
  if (k < c_.size()) return FieldElem(c_[k], p_);
  return FieldElem::zero(p_);
}

FieldElem Poly::leading() const {
  if (is_zero()) return FieldElem::zero(p_);
  return FieldElem(c_.back(), p_);
}

bool Poly::is_monic() const { return !is_zero() && c_.back() == 1; }

Poly Poly::operator+(const Poly& o) const {
  if (p_ != o.p_) throw ModulusMismatch(p_, o.p_);
  std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    uint64_t s = (i < c_.size() ? c_[i] : 0);
    s += (i < o.c_.size() ? o.c_[i] : 0);
    c[i] = static_cast<uint32_t>(s % p_);
  }
  return Poly(p_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
  if (p_ != o.p_) throw ModulusMismatch(p_, o.p_);
  std::vector<uint32_t> c(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    uint64_t s = (i < c_.size() ? c_[i] : 0) + p_;
    s -= (i < o.c_.size() ? o.c_[i] : 0);
    c[i] = static_cast<uint32_t>(s % p_);
  }
  return Poly(p_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (p_ != o.p_) throw ModulusMismatch(p_, o.p_);
  if (is_zero() || o.is_zero()) return Poly(p_);
  std::vector<uint32_t> c(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j)
      c[i + j] = static_cast<uint32_t>(
          (c[i + j] + (uint64_t)c_[i] * o.c_[j]) % p_);
  return Poly(p_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (p_ != divisor.p_) throw ModulusMismatch(p_, divisor.p_);
  if (divisor.is_zero()) throw Error("polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < divisor.degree()) return {Poly(p_), rem};
  std::vector<uint32_t> q(rem.degree() - divisor.degree() + 1, 0);
  FieldElem lead_inv = divisor.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    unsigned shift = rem.degree() - divisor.degree();
    FieldElem f = rem.leading() * lead_inv;
    q[shift] = f.value();
    // rem -= f * x^shift * divisor
    std::vector<uint32_t> sub(shift + divisor.c_.size(), 0);
    for (size_t i = 0; i < divisor.c_.size(); ++i)
      sub[shift + i] =
          static_cast<uint32_t>((uint64_t)divisor.c_[i] * f.value() % p_);
    rem = rem - Poly(p_, std::move(sub));
  }
  return {Poly(p_, std::move(q)), rem};
}

bool Poly::divides(const Poly& other) const {
  if (is_zero()) return other.is_zero();
  return other.divmod(*this).second.is_zero();
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  FieldElem inv = leading().inverse();
  std::vector<uint32_t> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    c[i] = static_cast<uint32_t>((uint64_t)c_[i] * inv.value() % p_);
  return Poly(p_, std::move(c));
}

FieldElem Poly::eval(const FieldElem& x) const {
  if (x.modulus() != p_) throw ModulusMismatch(p_, x.modulus());
  FieldElem acc = FieldElem::zero(p_);
  for (size_t i = c_.size(); i-- > 0;)
    acc = acc * x + FieldElem(c_[i], p_);
  return acc;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
    if (i > 0) {
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace prn
