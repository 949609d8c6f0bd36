#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prn/field.hpp"
#include "prn/poly.hpp"

namespace prn {

/// Square matrix over GF(p), row-major. All entries share one modulus by
/// construction. Matrices act on row vectors from the right (v -> v * m),
/// matching the left-to-right composition used for permutations.
class Matrix {
public:
  Matrix(uint32_t dim, uint32_t modulus);  // zero matrix
  static Matrix identity(uint32_t dim, uint32_t modulus);
  /// Signed entries are reduced mod p.
  static Matrix from_rows(uint32_t modulus,
                          const std::vector<std::vector<int64_t>>& rows);
  static Matrix scalar(uint32_t dim, const FieldElem& c);

  uint32_t dim() const { return n_; }
  uint32_t modulus() const { return p_; }

  FieldElem at(uint32_t i, uint32_t j) const;
  uint32_t entry(uint32_t i, uint32_t j) const { return e_[i * n_ + j]; }
  void set(uint32_t i, uint32_t j, const FieldElem& v);
  void set(uint32_t i, uint32_t j, uint64_t v) { e_[i * n_ + j] = static_cast<uint32_t>(v % p_); }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const {
    return n_ == o.n_ && p_ == o.p_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix transpose() const;
  Matrix pow(uint64_t e) const;
  FieldElem determinant() const;
  bool is_invertible() const { return !determinant().is_zero(); }
  /// Nullopt when the matrix is singular.
  std::optional<Matrix> try_inverse() const;
  Matrix inverse() const;  // throws NonInvertibleGenerator when singular
  bool is_identity() const;
  bool is_scalar() const;

  /// Row vector times matrix.
  std::vector<uint32_t> apply_row(const std::vector<uint32_t>& v) const;

  std::string to_string() const;

private:
  uint32_t n_;
  uint32_t p_;
  std::vector<uint32_t> e_;

  void check_compatible(const Matrix& o) const;
};

/// Gram matrix of the standard alternating form on GF(p)^{2n}: the
/// antidiagonal holds n ones followed by n minus-ones, i.e.
/// J[i][2n-1-i] = 1 for i < n and -1 for i >= n. Nondegenerate and
/// skew-symmetric; this is the fixed convention for all symplectic groups
/// built by this library.
Matrix symplectic_gram(uint32_t n, uint32_t p);

/// True iff m^T * j * m == j.
bool preserves_form(const Matrix& m, const Matrix& j);

/// Monic polynomial of least degree annihilating a. Computed by running
/// Gaussian elimination over the flattened powers I, a, a^2, ... until the
/// first linear dependence appears.
Poly min_poly(const Matrix& a);

/// Characteristic polynomial det(xI - a), by cofactor expansion over the
/// polynomial ring (fine at the dimensions this library works with).
Poly char_poly(const Matrix& a);

/// Evaluate p at a square matrix.
Matrix eval_poly(const Poly& p, const Matrix& a);

}  // namespace prn
