#include "bcr/half_laurent.hpp"

#include <stdexcept>

namespace bcr {

HalfLaurent HalfLaurent::term(const Rat& coeff, int half_exp) {
  HalfLaurent p;
  if (coeff != 0) p.c_[half_exp] = coeff;
  return p;
}

Rat HalfLaurent::coeff(int half_exp) const {
  auto it = c_.find(half_exp);
  return it == c_.end() ? Rat(0) : it->second;
}

void HalfLaurent::set_coeff(int half_exp, const Rat& v) {
  if (v == 0)
    c_.erase(half_exp);
  else
    c_[half_exp] = v;
}

HalfLaurent HalfLaurent::operator+(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [e, v] : o.c_) r.set_coeff(e, r.coeff(e) + v);
  return r;
}

HalfLaurent HalfLaurent::operator-(const HalfLaurent& o) const {
  HalfLaurent r = *this;
  for (const auto& [e, v] : o.c_) r.set_coeff(e, r.coeff(e) - v);
  return r;
}

HalfLaurent HalfLaurent::operator*(const HalfLaurent& o) const {
  HalfLaurent r;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.set_coeff(e1 + e2, r.coeff(e1 + e2) + v1 * v2);
  return r;
}

HalfLaurent HalfLaurent::operator-() const {
  HalfLaurent r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}

HalfLaurent HalfLaurent::invert_variable() const {
  HalfLaurent r;
  for (const auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

HalfLaurent HalfLaurent::shifted(int half_exp) const {
  HalfLaurent r;
  for (const auto& [e, v] : c_) r.c_[e + half_exp] = v;
  return r;
}

Rat HalfLaurent::eval_one() const {
  Rat s = 0;
  for (const auto& [e, v] : c_) s += v;
  return s;
}

Rat HalfLaurent::derivative_at_one() const {
  Rat s = 0;
  for (const auto& [e, v] : c_) s += v * Rat(e, 2);
  return s;
}

HalfLaurent HalfLaurent::divide_exact(const HalfLaurent& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return HalfLaurent();
  int va = c_.begin()->first, ma = c_.rbegin()->first;
  int vb = o.c_.begin()->first, mb = o.c_.rbegin()->first;
  int dega = ma - va, degb = mb - vb;
  if (dega < degb) throw std::domain_error("inexact Laurent division");
  // Dense remainder (exponents normalized to start at 0) and divisor.
  std::vector<Rat> rem(dega + 1), div(degb + 1), quot(dega - degb + 1);
  for (const auto& [e, v] : c_) rem[e - va] = v;
  for (const auto& [e, v] : o.c_) div[e - vb] = v;
  for (int i = dega - degb; i >= 0; --i) {
    Rat q = rem[i + degb] / div[degb];
    quot[i] = q;
    if (q == 0) continue;
    for (int j = 0; j <= degb; ++j) rem[i + j] -= q * div[j];
  }
  for (const auto& r : rem)
    if (r != 0) throw std::domain_error("inexact Laurent division");
  HalfLaurent out;
  for (int i = 0; i <= dega - degb; ++i)
    if (quot[i] != 0) out.c_[i + va - vb] = quot[i];
  return out;
}

std::string HalfLaurent::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  // Descending t-powers.
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, v] = *it;
    bool neg = v < 0;
    Rat mag = neg ? Rat(-v) : v;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string var;
    if (e != 0) {
      if (e == 2)
        var = "t";
      else if (e % 2 == 0)
        var = "t^" + std::to_string(e / 2);
      else
        var = "t^" + std::to_string(e) + "/2";
    }
    if (var.empty()) {
      out += rat_to_string(mag);
    } else if (mag == 1) {
      out += var;
    } else if (rat_is_integer(mag)) {
      out += rat_to_string(mag) + var;
    } else {
      out += "(" + rat_to_string(mag) + ")" + var;
    }
  }
  return out;
}

namespace {

HalfLaurent det_cofactor(const std::vector<std::vector<HalfLaurent>>& m,
                         std::vector<std::size_t> cols, std::size_t row) {
  if (cols.empty()) return HalfLaurent::constant(1);
  if (cols.size() == 1) return m[row][cols[0]];
  HalfLaurent acc;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (m[row][cols[j]].is_zero()) continue;
    std::vector<std::size_t> sub;
    sub.reserve(cols.size() - 1);
    for (std::size_t l = 0; l < cols.size(); ++l)
      if (l != j) sub.push_back(cols[l]);
    HalfLaurent minor = det_cofactor(m, sub, row + 1);
    HalfLaurent piece = m[row][cols[j]] * minor;
    acc = (j % 2 == 0) ? acc + piece : acc - piece;
  }
  return acc;
}

HalfLaurent det_bareiss(std::vector<std::vector<HalfLaurent>> m) {
  std::size_t n = m.size();
  int sign = 1;
  HalfLaurent prev = HalfLaurent::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return HalfLaurent();
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divide_exact(prev);
      m[i][k] = HalfLaurent();
    }
    prev = m[k][k];
  }
  HalfLaurent d = m[n - 1][n - 1];
  return sign == 1 ? d : -d;
}

} // namespace

HalfLaurent mat_det_laurent(const std::vector<std::vector<HalfLaurent>>& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det of non-square matrix");
  if (n == 0) return HalfLaurent::constant(1);
  if (n <= 4) {
    std::vector<std::size_t> cols(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    return det_cofactor(m, cols, 0);
  }
  return det_bareiss(m);
}

} // namespace bcr
