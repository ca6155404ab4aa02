#include "bcr/euler_weights.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bcr {

Rat WeightTable::at(unsigned k, unsigned nu) const {
  if (k < 2 || k > kmax)
    throw std::out_of_range("weight table row k=" + std::to_string(k) +
                            " outside [2, " + std::to_string(kmax) + "]");
  if (nu >= rows[k].size()) return 0;
  return rows[k][nu];
}

std::vector<Rat> lambda_bruteforce(unsigned k) {
  if (k < 2) throw std::invalid_argument("lambda_bruteforce requires k >= 2");
  if (k > 10)
    throw std::invalid_argument(
        "lambda_bruteforce is guarded to k <= 10; use the recursion");
  unsigned m = k - 1;
  std::vector<unsigned> perm(m);
  std::iota(perm.begin(), perm.end(), 1u);
  std::vector<Int> count(k, 0); // count[nu] = permutations with nu-1 ascents
  do {
    unsigned ascents = 0;
    for (unsigned i = 0; i + 1 < m; ++i)
      if (perm[i] < perm[i + 1]) ++ascents;
    ++count[ascents + 1];
  } while (std::next_permutation(perm.begin(), perm.end()));
  Int total = factorial(m);
  std::vector<Rat> row(k - 1);
  for (unsigned nu = 1; nu <= k - 1; ++nu) row[nu - 1] = Rat(count[nu], total);
  return row;
}

WeightTable lambda_recursive(unsigned kmax) {
  if (kmax < 2) throw std::invalid_argument("lambda_recursive requires kmax >= 2");
  WeightTable t;
  t.kmax = kmax;
  t.rows.resize(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) t.rows[k].assign(k + 1, Rat(0));
  t.rows[2][1] = 1;
  for (unsigned k = 3; k <= kmax; ++k) {
    for (unsigned nu = 1; nu <= k - 1; ++nu) {
      // Rows carry explicit zeros at nu = 0 and nu = k, so the two boundary
      // reads below are safe and vanish where the recursion has no term.
      Rat acc = t.rows[k - 1][nu] + t.rows[k - 1][nu - 1];
      for (unsigned r = 2; r + 2 <= k; ++r) {
        for (unsigned p = 1; p <= r - 1 && p < nu; ++p) {
          unsigned q = nu - p;
          if (q >= 1 && q <= k - r - 1) acc += t.rows[r][p] * t.rows[k - r][q];
        }
      }
      t.rows[k][nu] = acc / Rat(static_cast<int>(k) - 1);
    }
  }
  return t;
}

std::vector<Poly> l_poly_recursive(unsigned kmax) {
  if (kmax < 1) throw std::invalid_argument("l_poly_recursive requires kmax >= 1");
  std::vector<Poly> L(kmax + 1);
  L[1] = Poly({Rat(1, 2), Rat(1, 2)}); // (X+1)/2
  if (kmax >= 2) L[2] = Poly::monomial(1, 1);
  for (unsigned k = 3; k <= kmax; ++k) {
    Poly acc;
    for (unsigned r = 1; r <= k - 1; ++r) acc = acc + L[r] * L[k - r];
    L[k] = acc.scaled(Rat(1, static_cast<int>(k) - 1));
  }
  return L;
}

BiSeries l_series_closed(unsigned order_y) {
  Poly one = Poly::constant(1);
  Poly x = Poly::monomial(1, 1);
  Poly one_minus_x = one - x;
  // G(Y) = g((1-X)Y) = sum_m (1-X)^m Y^m / (m+1)!
  BiSeries g(order_y);
  Poly pw = one;
  for (unsigned m = 0; m <= order_y; ++m) {
    g.set_coeff_y(m, pw.scaled(Rat(Int(1), factorial(m + 1))));
    pw = pw * one_minus_x;
  }
  // Y * G, as a series multiplication by the monomial Y.
  BiSeries yg(order_y);
  for (unsigned m = 1; m <= order_y; ++m) yg.set_coeff_y(m, g.coeff_y(m - 1));

  BiSeries num(order_y);
  num.set_coeff_y(0, one + x);
  for (unsigned m = 0; m <= order_y; ++m) {
    Poly scaled = yg.coeff_y(m) * (x * one_minus_x);
    num.set_coeff_y(m, num.coeff_y(m) + scaled);
  }
  BiSeries den = BiSeries::one(order_y);
  for (unsigned m = 0; m <= order_y; ++m) {
    Poly scaled = yg.coeff_y(m) * x;
    den.set_coeff_y(m, den.coeff_y(m) - scaled);
  }
  BiSeries l = num.divided_by_unit(den);
  for (unsigned m = 0; m <= order_y; ++m)
    l.set_coeff_y(m, l.coeff_y(m).scaled(Rat(1, 2)));
  return l;
}

bool check_ode(unsigned order_y) {
  if (order_y < 1) throw std::invalid_argument("check_ode requires order >= 1");
  BiSeries l = l_series_closed(order_y);
  BiSeries lhs = l.derivative_y();
  Poly half_one_minus_x = (Poly::constant(1) - Poly::monomial(1, 1)).scaled(Rat(1, 2));
  BiSeries rhs = (l * l).truncated(order_y - 1);
  rhs.set_coeff_y(0, rhs.coeff_y(0) - half_one_minus_x * half_one_minus_x);
  return lhs == rhs;
}

namespace {

// Bivariate polynomial in (X, Y) truncated by total degree <= D.
struct TotalDegPoly {
  unsigned d;
  std::vector<Rat> c; // index i*(d+1)+j for X^i Y^j, kept only when i+j <= d

  explicit TotalDegPoly(unsigned deg) : d(deg), c((deg + 1) * (deg + 1)) {}
  Rat& at(unsigned i, unsigned j) { return c[i * (d + 1) + j]; }
  const Rat& at(unsigned i, unsigned j) const { return c[i * (d + 1) + j]; }

  TotalDegPoly operator*(const TotalDegPoly& o) const {
    TotalDegPoly r(d);
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; i + j <= d; ++j) {
        if (at(i, j) == 0) continue;
        for (unsigned p = 0; i + p <= d; ++p)
          for (unsigned q = 0; i + j + p + q <= d; ++q) {
            if (o.at(p, q) == 0) continue;
            r.at(i + p, j + q) += at(i, j) * o.at(p, q);
          }
      }
    return r;
  }
  TotalDegPoly& add_scaled(const TotalDegPoly& o, const Rat& s) {
    for (unsigned i = 0; i <= d; ++i)
      for (unsigned j = 0; i + j <= d; ++j) at(i, j) += s * o.at(i, j);
    return *this;
  }
};

} // namespace

std::map<std::pair<unsigned, unsigned>, Rat> m_coeffs(unsigned kmax) {
  if (kmax < 2) throw std::invalid_argument("m_coeffs requires kmax >= 2");
  // Route 1: the weight table.
  WeightTable t = lambda_recursive(kmax);
  std::map<std::pair<unsigned, unsigned>, Rat> table_route;
  for (unsigned k = 2; k <= kmax; ++k)
    for (unsigned nu = 1; nu <= k - 1; ++nu)
      table_route[{k, nu}] = t.at(k, nu) / Rat(static_cast<int>(k));

  // Route 2: M(X,Y) = -X - Ln(1 - X g(u)) with u = Y - X, g(u) = (e^u - 1)/u,
  // expanded with truncation by total degree kmax. X^nu Y^{k-nu} has total
  // degree k, so this captures every k <= kmax.
  unsigned d = kmax;
  TotalDegPoly u(d);
  u.at(1, 0) = -1;
  u.at(0, 1) = 1;
  TotalDegPoly gu(d);
  {
    TotalDegPoly pw(d);
    pw.at(0, 0) = 1;
    for (unsigned m = 0; m <= d; ++m) {
      gu.add_scaled(pw, Rat(Int(1), factorial(m + 1)));
      if (m < d) pw = pw * u;
    }
  }
  TotalDegPoly w(d); // X * g(u): no constant term, lowest total degree 1
  for (unsigned i = 0; i + 1 <= d; ++i)
    for (unsigned j = 0; i + j + 1 <= d; ++j) w.at(i + 1, j) = gu.at(i, j);
  TotalDegPoly m_closed(d);
  m_closed.at(1, 0) = -1;
  {
    TotalDegPoly pw = w;
    for (unsigned j = 1; j <= d; ++j) {
      m_closed.add_scaled(pw, Rat(1, static_cast<int>(j)));
      if (j < d) pw = pw * w;
    }
  }

  // The two routes must agree on every coefficient of total degree <= kmax,
  // including the zero coefficients outside the (k, nu) ranges.
  for (unsigned i = 0; i <= d; ++i)
    for (unsigned j = 0; i + j <= d; ++j) {
      Rat expect = 0;
      unsigned k = i + j;
      if (k >= 2 && i >= 1 && j >= 1) {
        auto it = table_route.find({k, i});
        if (it != table_route.end()) expect = it->second;
      }
      if (m_closed.at(i, j) != expect)
        throw std::logic_error("generating-series coefficient mismatch at X^" +
                               std::to_string(i) + " Y^" + std::to_string(j));
    }
  return table_route;
}

} // namespace bcr
