#ifndef BCR_TRUNC_SERIES_HPP
#define BCR_TRUNC_SERIES_HPP

#include <string>
#include <vector>

#include "bcr/half_laurent.hpp"
#include "bcr/rational.hpp"

namespace bcr {

// Power series in h truncated at order K: coefficients c_0..c_K, all exact.
class TruncSeries {
 public:
  explicit TruncSeries(unsigned order) : c_(order + 1) {}
  TruncSeries(unsigned order, std::vector<Rat> coeffs);

  static TruncSeries zero(unsigned order) { return TruncSeries(order); }
  static TruncSeries one(unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
  const Rat& coeff(unsigned i) const { return c_[i]; }
  void set_coeff(unsigned i, const Rat& v) { c_[i] = v; }
  const std::vector<Rat>& coeffs() const { return c_; }

  // Binary operations truncate to the smaller of the two orders.
  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries operator-() const;
  bool operator==(const TruncSeries& o) const = default;

  TruncSeries scaled(const Rat& c) const;

  // h -> -h (flips the sign of odd coefficients).
  TruncSeries negate_variable() const;

  std::string to_string(const std::string& var = "h") const;

 private:
  std::vector<Rat> c_;
};

// a / b; requires b(0) != 0 (throws std::domain_error otherwise).
TruncSeries series_div(const TruncSeries& a, const TruncSeries& b);

// log f; requires f(0) == 1.
TruncSeries series_log(const TruncSeries& f);

// exp f; requires f(0) == 0.
TruncSeries series_exp(const TruncSeries& f);

// f^e for any integer e (negative exponents require f(0) != 0).
TruncSeries series_pow(const TruncSeries& f, long long e);

// p(e^h) truncated at order K: each term c * t^{e/2} contributes
// c * exp(e h / 2).
TruncSeries laurent_eval_exp(const HalfLaurent& p, unsigned order);

} // namespace bcr

#endif
