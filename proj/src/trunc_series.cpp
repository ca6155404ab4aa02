#include "bcr/trunc_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace bcr {

TruncSeries::TruncSeries(unsigned order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  if (c_.size() != order + 1)
    throw std::invalid_argument("coefficient count does not match order");
}

TruncSeries TruncSeries::one(unsigned order) {
  TruncSeries s(order);
  s.c_[0] = 1;
  return s;
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (unsigned i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (unsigned i = 0; i <= r.order(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  TruncSeries r(std::min(order(), o.order()));
  for (unsigned i = 0; i <= r.order(); ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; i + j <= r.order(); ++j) {
      if (o.c_[j] == 0) continue;
      r.c_[i + j] += c_[i] * o.c_[j];
    }
  }
  return r;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

TruncSeries TruncSeries::scaled(const Rat& c) const {
  TruncSeries r = *this;
  for (auto& x : r.c_) x *= c;
  return r;
}

TruncSeries TruncSeries::negate_variable() const {
  TruncSeries r = *this;
  for (unsigned i = 1; i <= r.order(); i += 2) r.c_[i] = -r.c_[i];
  return r;
}

std::string TruncSeries::to_string(const std::string& var) const {
  std::string out;
  bool first = true;
  for (unsigned i = 0; i <= order(); ++i) {
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
  return first ? "0" : out;
}

TruncSeries series_div(const TruncSeries& a, const TruncSeries& b) {
  if (b.coeff(0) == 0) throw std::domain_error("series division by non-unit");
  unsigned K = std::min(a.order(), b.order());
  TruncSeries q(K);
  for (unsigned n = 0; n <= K; ++n) {
    Rat acc = a.coeff(n);
    for (unsigned i = 0; i < n; ++i) acc -= q.coeff(i) * b.coeff(n - i);
    q.set_coeff(n, acc / b.coeff(0));
  }
  return q;
}

TruncSeries series_log(const TruncSeries& f) {
  if (f.coeff(0) != 1)
    throw std::domain_error("series_log requires constant term 1");
  unsigned K = f.order();
  TruncSeries x = f - TruncSeries::one(K);
  // log(1+x) = sum_{j>=1} (-1)^{j-1} x^j / j; x has valuation >= 1.
  TruncSeries acc(K), p = x;
  for (unsigned j = 1; j <= K; ++j) {
    acc = acc + p.scaled(Rat(j % 2 == 1 ? 1 : -1, j));
    if (j < K) p = p * x;
  }
  return acc;
}

TruncSeries series_exp(const TruncSeries& f) {
  if (f.coeff(0) != 0)
    throw std::domain_error("series_exp requires constant term 0");
  unsigned K = f.order();
  TruncSeries acc = TruncSeries::one(K), p = TruncSeries::one(K);
  for (unsigned j = 1; j <= K; ++j) {
    p = p * f;
    acc = acc + p.scaled(Rat(Int(1), factorial(j)));
  }
  return acc;
}

TruncSeries series_pow(const TruncSeries& f, long long e) {
  unsigned K = f.order();
  if (e < 0) return series_div(TruncSeries::one(K), series_pow(f, -e));
  TruncSeries acc = TruncSeries::one(K);
  for (long long i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

TruncSeries laurent_eval_exp(const HalfLaurent& p, unsigned order) {
  TruncSeries out(order);
  std::vector<Rat> inv_fact(order + 1);
  for (unsigned j = 0; j <= order; ++j) inv_fact[j] = Rat(Int(1), factorial(j));
  for (const auto& [e, c] : p.coeffs()) {
    Rat half(e, 2), pw = 1;
    for (unsigned j = 0; j <= order; ++j) {
      out.set_coeff(j, out.coeff(j) + c * pw * inv_fact[j]);
      pw *= half;
    }
  }
  return out;
}

} // namespace bcr
