#include "sunlab/point.hpp"

#include <ostream>
#include <stdexcept>

namespace sunlab {

std::vector<int> IndexSet::to_vector(int dim) const {
  std::vector<int> out;
  for (int j = 0; j < dim; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

std::string IndexSet::str() const {
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if (!contains(j)) continue;
    if (!first) out += ',';
    out += std::to_string(j);
    first = false;
  }
  out += '}';
  return out;
}

Point::Point(std::vector<Rational> coords) : c_(std::move(coords)) {
  if (dim() < kMinDim || dim() > kMaxDim)
    throw std::invalid_argument("Point: dim must be in {2,3,4}");
}

std::string Point::str() const {
  std::string out = "(";
  for (int j = 0; j < dim(); ++j) {
    if (j) out += ", ";
    out += c_[j].str();
  }
  out += ')';
  return out;
}

bool operator<(const Point& a, const Point& b) {
  require_same_dim(a, b);
  for (int j = 0; j < a.dim(); ++j) {
    if (a.c_[j] < b.c_[j]) return true;
    if (b.c_[j] < a.c_[j]) return false;
  }
  return false;
}

Point operator+(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<Rational> c(a.dim());
  for (int j = 0; j < a.dim(); ++j) c[j] = a.c_[j] + b.c_[j];
  return Point(std::move(c));
}

Point operator-(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<Rational> c(a.dim());
  for (int j = 0; j < a.dim(); ++j) c[j] = a.c_[j] - b.c_[j];
  return Point(std::move(c));
}

Point operator*(const Rational& s, const Point& p) {
  std::vector<Rational> c(p.dim());
  for (int j = 0; j < p.dim(); ++j) c[j] = s * p.c_[j];
  return Point(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << p.str();
}

void require_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
}

Rational norm(const Point& p, Norm which) {
  Rational out;
  for (int j = 0; j < p.dim(); ++j) {
    Rational a = p[j].abs();
    if (which == Norm::L1)
      out += a;
    else if (out < a)
      out = a;
  }
  return out;
}

Rational distance(const Point& a, const Point& b, Norm which) {
  return norm(a - b, which);
}

IndexSet equal_coords(const Point& x, const Point& y) {
  require_same_dim(x, y);
  IndexSet out;
  for (int j = 0; j < x.dim(); ++j)
    if (x[j] == y[j]) out.add(j);
  return out;
}

bool coordwise_distinct(const Point& x, const Point& y) {
  return equal_coords(x, y).empty();
}

bool coordwise_distinct_mod(const Point& x, const Point& y, const IndexSet& frozen) {
  require_same_dim(x, y);
  for (int j = 0; j < x.dim(); ++j)
    if (!frozen.contains(j) && x[j] == y[j]) return false;
  return true;
}

Point ray_point(const Point& y, const Point& x, const Rational& lambda) {
  require_same_dim(x, y);
  if (!(Rational(0) < lambda)) throw std::invalid_argument("ray_point: lambda must be > 0");
  std::vector<Rational> c(x.dim());
  for (int j = 0; j < x.dim(); ++j) c[j] = lambda * x[j] + (Rational(1) - lambda) * y[j];
  return Point(std::move(c));
}

bool l1_between(const Point& x, const Point& z, const Point& y) {
  require_same_dim(x, z);
  require_same_dim(x, y);
  for (int j = 0; j < x.dim(); ++j) {
    if (z[j] < min(x[j], y[j]) || max(x[j], y[j]) < z[j]) return false;
  }
  return true;
}

Point coordinate_min(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<Rational> c(a.dim());
  for (int j = 0; j < a.dim(); ++j) c[j] = min(a[j], b[j]);
  return Point(std::move(c));
}

Point coordinate_max(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<Rational> c(a.dim());
  for (int j = 0; j < a.dim(); ++j) c[j] = max(a[j], b[j]);
  return Point(std::move(c));
}

Point midpoint(const Point& a, const Point& b) {
  require_same_dim(a, b);
  std::vector<Rational> c(a.dim());
  for (int j = 0; j < a.dim(); ++j) c[j] = Rational(1, 2) * (a[j] + b[j]);
  return Point(std::move(c));
}

}  // namespace sunlab
