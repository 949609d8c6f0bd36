#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace prn {

using Point = uint32_t;

/// A permutation of {0..d-1}, stored as its image table: images()[i] = i^pi.
/// Composition is left-to-right: (a*b) applies a first, then b.
class Perm {
public:
  explicit Perm(Point degree);  // identity
  explicit Perm(std::vector<Point> images);

  /// Build from disjoint (or not) cycles of 0-based points; unmentioned
  /// points are fixed.
  static Perm from_cycles(Point degree,
                          const std::vector<std::vector<Point>>& cycles);

  Point degree() const { return static_cast<Point>(img_.size()); }
  Point operator[](Point p) const { return img_[p]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const;
  Perm inverse() const;
  /// x^{-1} * (*this) * x.
  Perm conjugated_by(const Perm& x) const;
  uint64_t order() const;  // lcm of cycle lengths
  /// Smallest point p with p^pi != p, or degree() for the identity.
  Point smallest_moved() const;

  /// Disjoint-cycle notation with 0-based points; "()" for the identity.
  std::string cycle_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return img_ != o.img_; }

  size_t hash() const;

private:
  std::vector<Point> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const { return p.hash(); }
};

}  // namespace prn
