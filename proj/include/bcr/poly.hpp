#ifndef BCR_POLY_HPP
#define BCR_POLY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bcr/rational.hpp"

namespace bcr {

// Dense univariate polynomial over Rat (used for polynomials in X).
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const Rat& v) { return Poly(std::vector<Rat>{v}); }
  // c * X^n
  static Poly monomial(const Rat& c, unsigned n) {
    std::vector<Rat> v(n + 1);
    v[n] = c;
    return Poly(std::move(v));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }

  Poly operator+(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return Poly(std::move(v));
  }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
  }
  Poly operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
  }
  Poly scaled(const Rat& s) const {
    if (s == 0) return Poly();
    Poly p = *this;
    for (auto& x : p.c_) x *= s;
    return p;
  }
  bool operator==(const Poly& o) const = default;

  std::string to_string(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (c_[i] == 0) continue;
      bool neg = c_[i] < 0;
      Rat mag = neg ? Rat(-c_[i]) : c_[i];
      if (first) {
        if (neg) out += "-";
        first = false;
      } else {
        out += neg ? " - " : " + ";
      }
      std::string v;
      if (i == 1)
        v = var;
      else if (i > 1)
        v = var + "^" + std::to_string(i);
      if (v.empty())
        out += rat_to_string(mag);
      else if (mag == 1)
        out += v;
      else if (rat_is_integer(mag))
        out += rat_to_string(mag) + v;
      else
        out += "(" + rat_to_string(mag) + ")" + v;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

// Power series in Y truncated at a fixed order, with Poly (in X) coefficients.
class BiSeries {
 public:
  explicit BiSeries(unsigned order_y) : c_(order_y + 1) {}

  static BiSeries one(unsigned order_y) {
    BiSeries s(order_y);
    s.c_[0] = Poly::constant(1);
    return s;
  }

  unsigned order_y() const { return static_cast<unsigned>(c_.size()) - 1; }
  const Poly& coeff_y(unsigned j) const { return c_[j]; }
  void set_coeff_y(unsigned j, Poly p) { c_[j] = std::move(p); }

  BiSeries operator+(const BiSeries& o) const {
    BiSeries r(std::min(order_y(), o.order_y()));
    for (unsigned j = 0; j <= r.order_y(); ++j) r.c_[j] = c_[j] + o.c_[j];
    return r;
  }
  BiSeries operator-(const BiSeries& o) const {
    BiSeries r(std::min(order_y(), o.order_y()));
    for (unsigned j = 0; j <= r.order_y(); ++j) r.c_[j] = c_[j] - o.c_[j];
    return r;
  }
  BiSeries operator*(const BiSeries& o) const {
    BiSeries r(std::min(order_y(), o.order_y()));
    for (unsigned i = 0; i <= r.order_y(); ++i) {
      if (c_[i].is_zero()) continue;
      for (unsigned j = 0; i + j <= r.order_y(); ++j) r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
    }
    return r;
  }
  bool operator==(const BiSeries& o) const = default;

  // d/dY (drops the order by one).
  BiSeries derivative_y() const {
    if (order_y() == 0) return BiSeries(0);
    BiSeries r(order_y() - 1);
    for (unsigned j = 0; j <= r.order_y(); ++j)
      r.c_[j] = c_[j + 1].scaled(Rat(static_cast<int>(j) + 1));
    return r;
  }

  BiSeries truncated(unsigned order) const {
    BiSeries r(std::min(order, order_y()));
    for (unsigned j = 0; j <= r.order_y(); ++j) r.c_[j] = c_[j];
    return r;
  }

  // *this / d where d has unit constant term d(Y=0) = 1.
  BiSeries divided_by_unit(const BiSeries& d) const;

 private:
  std::vector<Poly> c_;
};

inline BiSeries BiSeries::divided_by_unit(const BiSeries& d) const {
  if (!(d.coeff_y(0) == Poly::constant(1)))
    throw std::domain_error("BiSeries division requires constant term 1");
  BiSeries q(std::min(order_y(), d.order_y()));
  for (unsigned n = 0; n <= q.order_y(); ++n) {
    Poly acc = coeff_y(n);
    for (unsigned i = 0; i < n; ++i) acc = acc - q.coeff_y(i) * d.coeff_y(n - i);
    q.set_coeff_y(n, std::move(acc));
  }
  return q;
}

} // namespace bcr

#endif
