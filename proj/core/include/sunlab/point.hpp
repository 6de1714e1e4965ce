#pragma once
//------------------------------------------------------------------------------
// Points with exact rational coordinates (dim 2..4), coordinate index sets,
// the l1/linf norms and the coordinate-equality predicates the rest of the
// toolkit is built on.
//------------------------------------------------------------------------------
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sunlab/rational.hpp"

namespace sunlab {

inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 4;

enum class Norm { L1, Linf };

// Subset of coordinate indices {0, ..., dim-1}, stored as a bitmask.
class IndexSet {
 public:
  IndexSet() = default;
  static IndexSet all(int dim) { return IndexSet((1u << dim) - 1u); }

  void add(int j) { bits_ |= (1u << j); }
  void remove(int j) { bits_ &= ~(1u << j); }
  bool contains(int j) const { return (bits_ >> j) & 1u; }
  bool empty() const { return bits_ == 0; }
  int count() const { return __builtin_popcount(bits_); }
  IndexSet complement(int dim) const { return IndexSet(~bits_ & ((1u << dim) - 1u)); }
  IndexSet intersect(const IndexSet& o) const { return IndexSet(bits_ & o.bits_); }
  IndexSet unite(const IndexSet& o) const { return IndexSet(bits_ | o.bits_); }
  bool subset_of(const IndexSet& o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> to_vector(int dim) const;
  std::string str() const;  // e.g. "{0,2}"

  friend bool operator==(const IndexSet&, const IndexSet&) = default;

 private:
  explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Rational> coords);
  static Point zero(int dim) { return Point(std::vector<Rational>(dim)); }

  int dim() const { return static_cast<int>(c_.size()); }
  const Rational& operator[](int j) const { return c_[j]; }
  Rational& operator[](int j) { return c_[j]; }
  const std::vector<Rational>& coords() const { return c_; }

  std::string str() const;  // "(1, -3/2, 0)"

  friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }
  friend bool operator<(const Point& a, const Point& b);  // lexicographic

  friend Point operator+(const Point& a, const Point& b);
  friend Point operator-(const Point& a, const Point& b);
  friend Point operator*(const Rational& s, const Point& p);

 private:
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Point& p);

void require_same_dim(const Point& a, const Point& b);

Rational norm(const Point& p, Norm which);
Rational distance(const Point& a, const Point& b, Norm which);

// { j : x_j = y_j }
IndexSet equal_coords(const Point& x, const Point& y);

// True iff x and y differ in every coordinate.
bool coordwise_distinct(const Point& x, const Point& y);

// True iff x and y differ in every coordinate outside `frozen`.
bool coordwise_distinct_mod(const Point& x, const Point& y, const IndexSet& frozen);

// lambda*x + (1-lambda)*y for lambda > 0: the ray from y through x.
Point ray_point(const Point& y, const Point& x, const Rational& lambda);

// z between x and y in the l1 sense: z_j in [min(x_j,y_j), max(x_j,y_j)] per j,
// equivalently |x-y|_1 = |x-z|_1 + |z-y|_1.
bool l1_between(const Point& x, const Point& z, const Point& y);

Point coordinate_min(const Point& a, const Point& b);
Point coordinate_max(const Point& a, const Point& b);
Point midpoint(const Point& a, const Point& b);

}  // namespace sunlab
