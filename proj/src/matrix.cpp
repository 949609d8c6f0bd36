#include "prn/matrix.hpp"

#include <cassert>

#include "prn/errors.hpp"

namespace prn {

Matrix::Matrix(uint32_t dim, uint32_t modulus)
    : n_(dim), p_(modulus), e_(static_cast<size_t>(dim) * dim, 0) {
  FieldElem::zero(modulus);  // validates the modulus
  assert(dim >= 1);
}

Matrix Matrix::identity(uint32_t dim, uint32_t modulus) {
  Matrix m(dim, modulus);
  for (uint32_t i = 0; i < dim; ++i) m.set(i, i, uint64_t{1});
  return m;
}

Matrix Matrix::from_rows(uint32_t modulus,
                         const std::vector<std::vector<int64_t>>& rows) {
  uint32_t dim = static_cast<uint32_t>(rows.size());
  Matrix m(dim, modulus);
  for (uint32_t i = 0; i < dim; ++i) {
    if (rows[i].size() != dim) throw DimensionMismatch(dim, static_cast<uint32_t>(rows[i].size()));
    for (uint32_t j = 0; j < dim; ++j) {
      int64_t r = rows[i][j] % static_cast<int64_t>(modulus);
      if (r < 0) r += modulus;
      m.set(i, j, static_cast<uint64_t>(r));
    }
  }
  return m;
}

Matrix Matrix::scalar(uint32_t dim, const FieldElem& c) {
  Matrix m(dim, c.modulus());
  for (uint32_t i = 0; i < dim; ++i) m.set(i, i, c);
  return m;
}

FieldElem Matrix::at(uint32_t i, uint32_t j) const {
  return FieldElem(e_[i * n_ + j], p_);
}

void Matrix::set(uint32_t i, uint32_t j, const FieldElem& v) {
  if (v.modulus() != p_) throw ModulusMismatch(p_, v.modulus());
  e_[i * n_ + j] = v.value();
}

void Matrix::check_compatible(const Matrix& o) const {
  if (n_ != o.n_) throw DimensionMismatch(n_, o.n_);
  if (p_ != o.p_) throw ModulusMismatch(p_, o.p_);
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_compatible(o);
  Matrix r(n_, p_);
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t k = 0; k < n_; ++k) {
      uint64_t a = e_[i * n_ + k];
      if (!a) continue;
      for (uint32_t j = 0; j < n_; ++j)
        r.e_[i * n_ + j] = static_cast<uint32_t>(
            (r.e_[i * n_ + j] + a * o.e_[k * n_ + j]) % p_);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_compatible(o);
  Matrix r(n_, p_);
  for (size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = static_cast<uint32_t>(((uint64_t)e_[i] + o.e_[i]) % p_);
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_compatible(o);
  Matrix r(n_, p_);
  for (size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = static_cast<uint32_t>(((uint64_t)e_[i] + p_ - o.e_[i]) % p_);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(n_, p_);
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t j = 0; j < n_; ++j) r.e_[j * n_ + i] = e_[i * n_ + j];
  return r;
}

Matrix Matrix::pow(uint64_t e) const {
  Matrix r = identity(n_, p_);
  Matrix b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FieldElem Matrix::determinant() const {
  // Gaussian elimination with division by pivots.
  std::vector<uint32_t> a = e_;
  uint64_t det = 1;
  bool neg = false;
  for (uint32_t col = 0; col < n_; ++col) {
    uint32_t pivot = col;
    while (pivot < n_ && a[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) return FieldElem::zero(p_);
    if (pivot != col) {
      for (uint32_t j = 0; j < n_; ++j)
        std::swap(a[pivot * n_ + j], a[col * n_ + j]);
      neg = !neg;
    }
    uint64_t pv = a[col * n_ + col];
    det = det * pv % p_;
    uint64_t inv = FieldElem(pv, p_).inverse().value();
    for (uint32_t row = col + 1; row < n_; ++row) {
      uint64_t f = a[row * n_ + col] * inv % p_;
      if (!f) continue;
      for (uint32_t j = col; j < n_; ++j)
        a[row * n_ + j] = static_cast<uint32_t>(
            (a[row * n_ + j] + (p_ - 1) * f % p_ * a[col * n_ + j]) % p_);
    }
  }
  if (neg) det = (p_ - det % p_) % p_;
  return FieldElem(det, p_);
}

std::optional<Matrix> Matrix::try_inverse() const {
  // Gauss-Jordan on [A | I].
  std::vector<uint32_t> a = e_;
  Matrix inv = identity(n_, p_);
  std::vector<uint32_t>& b = inv.e_;
  for (uint32_t col = 0; col < n_; ++col) {
    uint32_t pivot = col;
    while (pivot < n_ && a[pivot * n_ + col] == 0) ++pivot;
    if (pivot == n_) return std::nullopt;
    if (pivot != col)
      for (uint32_t j = 0; j < n_; ++j) {
        std::swap(a[pivot * n_ + j], a[col * n_ + j]);
        std::swap(b[pivot * n_ + j], b[col * n_ + j]);
      }
    uint64_t piv_inv = FieldElem(a[col * n_ + col], p_).inverse().value();
    for (uint32_t j = 0; j < n_; ++j) {
      a[col * n_ + j] = static_cast<uint32_t>(a[col * n_ + j] * piv_inv % p_);
      b[col * n_ + j] = static_cast<uint32_t>(b[col * n_ + j] * piv_inv % p_);
    }
    for (uint32_t row = 0; row < n_; ++row) {
      if (row == col) continue;
      uint64_t f = a[row * n_ + col];
      if (!f) continue;
      uint64_t nf = p_ - f;
      for (uint32_t j = 0; j < n_; ++j) {
        a[row * n_ + j] = static_cast<uint32_t>(
            (a[row * n_ + j] + nf * a[col * n_ + j]) % p_);
        b[row * n_ + j] = static_cast<uint32_t>(
            (b[row * n_ + j] + nf * b[col * n_ + j]) % p_);
      }
    }
  }
  return inv;
}

Matrix Matrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw NonInvertibleGenerator("matrix is singular over GF(" +
                                         std::to_string(p_) + ")");
  return *inv;
}

bool Matrix::is_identity() const { return *this == identity(n_, p_); }

bool Matrix::is_scalar() const {
  uint32_t d = e_[0];
  for (uint32_t i = 0; i < n_; ++i)
    for (uint32_t j = 0; j < n_; ++j)
      if (e_[i * n_ + j] != (i == j ? d : 0u)) return false;
  return true;
}

std::vector<uint32_t> Matrix::apply_row(const std::vector<uint32_t>& v) const {
  assert(v.size() == n_);
  std::vector<uint32_t> r(n_, 0);
  for (uint32_t i = 0; i < n_; ++i) {
    uint64_t a = v[i];
    if (!a) continue;
    for (uint32_t j = 0; j < n_; ++j)
      r[j] = static_cast<uint32_t>((r[j] + a * e_[i * n_ + j]) % p_);
  }
  return r;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (uint32_t i = 0; i < n_; ++i) {
    out += i ? ", [" : "[";
    for (uint32_t j = 0; j < n_; ++j)
      out += (j ? "," : "") + std::to_string(e_[i * n_ + j]);
    out += "]";
  }
  return out + "]";
}

Matrix symplectic_gram(uint32_t n, uint32_t p) {
  uint32_t d = 2 * n;
  Matrix j(d, p);
  for (uint32_t i = 0; i < n; ++i) j.set(i, d - 1 - i, uint64_t{1});
  for (uint32_t i = n; i < d; ++i) j.set(i, d - 1 - i, uint64_t{p - 1});
  return j;
}

bool preserves_form(const Matrix& m, const Matrix& j) {
  if (m.dim() != j.dim()) throw DimensionMismatch(m.dim(), j.dim());
  return m.transpose() * j * m == j;
}

Poly min_poly(const Matrix& a) {
  uint32_t d = a.dim();
  uint32_t p = a.modulus();
  size_t flat = static_cast<size_t>(d) * d;

  // Reduced basis rows plus, for each, its expression in powers of a.
  std::vector<std::vector<uint32_t>> basis;
  std::vector<std::vector<uint32_t>> combo;
  std::vector<int> pivot_of;  // pivot column of each basis row

  Matrix pw = Matrix::identity(d, p);
  for (uint32_t k = 0;; ++k) {
    // flatten a^k
    std::vector<uint32_t> v(flat);
    for (uint32_t i = 0; i < d; ++i)
      for (uint32_t j2 = 0; j2 < d; ++j2) v[i * d + j2] = pw.entry(i, j2);
    std::vector<uint32_t> c(k + 1, 0);
    c[k] = 1;

    // reduce v against the basis, tracking the combination
    for (size_t b = 0; b < basis.size(); ++b) {
      uint32_t piv = static_cast<uint32_t>(pivot_of[b]);
      uint64_t f = v[piv];
      if (!f) continue;
      uint64_t nf = p - f;
      for (size_t i = 0; i < flat; ++i)
        v[i] = static_cast<uint32_t>((v[i] + nf * basis[b][i]) % p);
      for (size_t i = 0; i < combo[b].size() && i < c.size(); ++i)
        c[i] = static_cast<uint32_t>((c[i] + nf * combo[b][i]) % p);
    }

    int piv = -1;
    for (size_t i = 0; i < flat; ++i)
      if (v[i]) {
        piv = static_cast<int>(i);
        break;
      }
    if (piv < 0) {
      // a^k = sum of lower powers: c holds the annihilating combination,
      // monic in x^k by construction.
      return Poly(p, std::move(c)).monic();
    }

    // scale so the pivot is 1 and store
    uint64_t inv = FieldElem(v[piv], p).inverse().value();
    for (size_t i = 0; i < flat; ++i)
      v[i] = static_cast<uint32_t>(v[i] * inv % p);
    for (auto& ci : c) ci = static_cast<uint32_t>((uint64_t)ci * inv % p);
    basis.push_back(std::move(v));
    combo.push_back(std::move(c));
    pivot_of.push_back(piv);
    pw = pw * a;
    assert(k <= flat && "minimal polynomial degree exceeded dim^2");
  }
}

namespace {

// Determinant of a matrix of polynomials by cofactor expansion along the
// first remaining column.
Poly poly_det(const std::vector<Poly>& m, uint32_t n,
              std::vector<bool>& used_row, uint32_t col, uint32_t p) {
  if (col == n) return Poly(p, {1});
  Poly acc(p);
  int sign = 1;
  for (uint32_t row = 0; row < n; ++row) {
    if (used_row[row]) continue;
    const Poly& entry = m[row * n + col];
    if (!entry.is_zero()) {
      used_row[row] = true;
      Poly sub = poly_det(m, n, used_row, col + 1, p);
      used_row[row] = false;
      Poly term = entry * sub;
      acc = (sign > 0) ? acc + term : acc - term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

Poly char_poly(const Matrix& a) {
  uint32_t n = a.dim();
  uint32_t p = a.modulus();
  std::vector<Poly> m;
  m.reserve(static_cast<size_t>(n) * n);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = 0; j < n; ++j) {
      // entry of xI - a
      std::vector<uint32_t> c = {(p - a.entry(i, j)) % p};
      if (i == j) c.push_back(1);
      m.emplace_back(p, std::move(c));
    }
  std::vector<bool> used(n, false);
  return poly_det(m, n, used, 0, p);
}

Matrix eval_poly(const Poly& poly, const Matrix& a) {
  if (poly.modulus() != a.modulus())
    throw ModulusMismatch(poly.modulus(), a.modulus());
  Matrix acc(a.dim(), a.modulus());
  Matrix pw = Matrix::identity(a.dim(), a.modulus());
  for (int k = 0; k <= poly.degree(); ++k) {
    uint32_t c = poly.coeffs()[k];
    if (c) {
      Matrix term = pw;
      for (uint32_t i = 0; i < a.dim(); ++i)
        for (uint32_t j = 0; j < a.dim(); ++j)
          term.set(i, j, (uint64_t)term.entry(i, j) * c);
      acc = acc + term;
    }
    if (k < poly.degree()) pw = pw * a;
  }
  return acc;
}

}  // namespace prn
