#ifndef BCR_HALF_LAURENT_HPP
#define BCR_HALF_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "bcr/rational.hpp"

namespace bcr {

// Laurent polynomial in half-integer powers of t, stored as integer powers of
// s = t^{1/2}: term coeff * s^e means coeff * t^{e/2}. The zero polynomial is
// the empty map; no zero coefficients are ever stored.
class HalfLaurent {
 public:
  HalfLaurent() = default;

  // coeff * t^{e/2}
  static HalfLaurent term(const Rat& coeff, int half_exp);
  static HalfLaurent constant(const Rat& c) { return term(c, 0); }

  bool is_zero() const { return c_.empty(); }
  const std::map<int, Rat>& coeffs() const { return c_; }

  // Coefficient of t^{e/2} (zero if absent).
  Rat coeff(int half_exp) const;

  void set_coeff(int half_exp, const Rat& v);

  HalfLaurent operator+(const HalfLaurent& o) const;
  HalfLaurent operator-(const HalfLaurent& o) const;
  HalfLaurent operator*(const HalfLaurent& o) const;
  HalfLaurent operator-() const;
  bool operator==(const HalfLaurent& o) const = default;

  // p(t) -> p(1/t), i.e. s -> s^{-1}.
  HalfLaurent invert_variable() const;

  // Multiply by t^{e/2}.
  HalfLaurent shifted(int half_exp) const;

  // Value at t = 1 (sum of coefficients).
  Rat eval_one() const;

  // d/dt at t = 1: sum of coeff * (e/2) over terms coeff * t^{e/2}.
  Rat derivative_at_one() const;

  // Exact quotient; throws std::domain_error if o does not divide *this
  // exactly in the Laurent ring (or is zero).
  HalfLaurent divide_exact(const HalfLaurent& o) const;

  // Human-readable form in descending t-powers, e.g. "t - 1 + t^-1",
  // "t^1/2", "-t + 3 - t^-1", "0".
  std::string to_string() const;

 private:
  std::map<int, Rat> c_;
};

// Determinant of a square matrix of HalfLaurent entries. Uses direct cofactor
// expansion for size <= 4 and fraction-free Bareiss elimination (exact
// division at every step) above that.
HalfLaurent mat_det_laurent(const std::vector<std::vector<HalfLaurent>>& m);

} // namespace bcr

#endif
