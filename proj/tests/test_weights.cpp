#include "doctest.h"

#include <stdexcept>

#include "bcr/euler_weights.hpp"

using bcr::Poly;
using bcr::Rat;
using bcr::WeightTable;

TEST_CASE("frozen weight rows") {
  WeightTable t = bcr::lambda_recursive(6);
  CHECK(t.at(2, 1) == Rat(1));
  CHECK(t.at(3, 1) == Rat(1) / 2);
  CHECK(t.at(3, 2) == Rat(1) / 2);
  CHECK(t.at(4, 1) == Rat(1) / 6);
  CHECK(t.at(4, 2) == Rat(2) / 3);
  CHECK(t.at(4, 3) == Rat(1) / 6);
  CHECK(t.at(5, 1) == Rat(1) / 24);
  CHECK(t.at(5, 2) == Rat(11) / 24);
  CHECK(t.at(5, 3) == Rat(11) / 24);
  CHECK(t.at(5, 4) == Rat(1) / 24);
  CHECK(t.at(6, 1) == Rat(1) / 120);
  CHECK(t.at(6, 2) == Rat(13) / 60);
  CHECK(t.at(6, 3) == Rat(11) / 20);
  CHECK(t.at(6, 4) == Rat(13) / 60);
  CHECK(t.at(6, 5) == Rat(1) / 120);
}

TEST_CASE("weight table boundary behaviour") {
  WeightTable t = bcr::lambda_recursive(5);
  CHECK(t.at(3, 0) == Rat(0));
  CHECK(t.at(3, 3) == Rat(0));
  CHECK(t.at(3, 7) == Rat(0));
  CHECK_THROWS_AS(t.at(1, 1), std::out_of_range);
  CHECK_THROWS_AS(t.at(6, 1), std::out_of_range);
  CHECK_THROWS_AS(bcr::lambda_bruteforce(11), std::invalid_argument);
}

TEST_CASE("three independent weight routes agree for k <= 9") {
  const unsigned kmax = 9;
  WeightTable rec = bcr::lambda_recursive(kmax);
  bcr::BiSeries closed = bcr::l_series_closed(kmax);
  for (unsigned k = 2; k <= kmax; ++k) {
    std::vector<Rat> brute = bcr::lambda_bruteforce(k);
    const Poly& lk = closed.coeff_y(k - 1);
    REQUIRE(brute.size() == k - 1);
    CHECK(lk.coeff(0) == Rat(0));
    CHECK(lk.degree() <= static_cast<int>(k) - 1);
    for (unsigned nu = 1; nu <= k - 1; ++nu) {
      CHECK(rec.at(k, nu) == brute[nu - 1]);
      CHECK(rec.at(k, nu) == lk.coeff(nu));
    }
  }
}

TEST_CASE("weight rows are symmetric, sum to one, and clear (k-1)!") {
  const unsigned kmax = 12;
  WeightTable t = bcr::lambda_recursive(kmax);
  for (unsigned k = 2; k <= kmax; ++k) {
    Rat sum = 0;
    for (unsigned nu = 1; nu <= k - 1; ++nu) {
      sum += t.at(k, nu);
      CHECK(t.at(k, nu) == t.at(k, k - nu));
      CHECK(t.at(k, nu) > 0);
      // (k-1)! lambda_{k,nu} is a permutation count, hence an integer.
      CHECK(bcr::rat_is_integer(t.at(k, nu) * Rat(bcr::factorial(k - 1))));
    }
    CHECK(sum == Rat(1));
  }
}

TEST_CASE("row polynomials match the weight table") {
  const unsigned kmax = 10;
  std::vector<Poly> l = bcr::l_poly_recursive(kmax);
  WeightTable t = bcr::lambda_recursive(kmax);
  // L_1 = (X+1)/2 seeds the recursion.
  CHECK(l[1] == Poly(std::vector<Rat>{Rat(1) / 2, Rat(1) / 2}));
  for (unsigned k = 2; k <= kmax; ++k) {
    CHECK(l[k].degree() <= static_cast<int>(k) - 1);
    for (unsigned nu = 0; nu <= k; ++nu) CHECK(l[k].coeff(nu) == t.at(k, nu));
  }
}

TEST_CASE("closed-form series matches the product recursion") {
  const unsigned order = 11;
  bcr::BiSeries closed = bcr::l_series_closed(order);
  std::vector<Poly> l = bcr::l_poly_recursive(order + 1);
  for (unsigned j = 0; j <= order; ++j) CHECK(closed.coeff_y(j) == l[j + 1]);
}

TEST_CASE("generating series satisfies its Riccati-type ODE") {
  CHECK(bcr::check_ode(12));

  // Negative control: perturbing one coefficient breaks the ODE.
  bcr::BiSeries l = bcr::l_series_closed(8);
  bcr::BiSeries bad = l;
  bad.set_coeff_y(4, bad.coeff_y(4) + Poly::constant(Rat(1, 7)));
  Poly half_one_minus_x(std::vector<Rat>{Rat(1) / 2, Rat(-1) / 2});
  bcr::BiSeries cst(8);
  cst.set_coeff_y(0, half_one_minus_x * half_one_minus_x);
  CHECK(l.derivative_y() == (l * l - cst).truncated(7));
  CHECK(!(bad.derivative_y() == (bad * bad - cst).truncated(7)));
}

TEST_CASE("mixed-weight coefficients from two routes") {
  auto m = bcr::m_coeffs(12); // throws internally if the two routes disagree
  CHECK(m.at({2, 1}) == Rat(1) / 2);  // (1/2) lambda_{2,1}
  CHECK(m.at({3, 1}) == Rat(1) / 6);
  CHECK(m.at({3, 2}) == Rat(1) / 6);
  CHECK(m.at({4, 2}) == Rat(1) / 6);  // (1/4)(2/3)
  CHECK(m.at({5, 2}) == Rat(11) / 120);
}
