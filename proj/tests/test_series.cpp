#include "doctest.h"

#include <stdexcept>

#include "bcr/half_laurent.hpp"
#include "bcr/rng.hpp"
#include "bcr/trunc_series.hpp"

using bcr::HalfLaurent;
using bcr::Rat;
using bcr::TruncSeries;

namespace {

TruncSeries random_series(bcr::SplitMix64& rng, unsigned order, const Rat& c0) {
  TruncSeries f(order);
  f.set_coeff(0, c0);
  for (unsigned i = 1; i <= order; ++i) {
    int num = rng.uniform(-6, 6);
    int den = rng.uniform(1, 6);
    f.set_coeff(i, Rat(num, den));
  }
  return f;
}

} // namespace

TEST_CASE("series arithmetic basics") {
  TruncSeries h(4);
  h.set_coeff(1, 1);
  TruncSeries one = TruncSeries::one(4);
  CHECK((one + h) * (one - h) == one - h * h);
  CHECK(h.scaled(Rat(3)).coeff(1) == Rat(3));
  CHECK((-h).coeff(1) == Rat(-1));
  CHECK(h.negate_variable() == -h);
  CHECK(h.to_string() == "h");
  CHECK((one - h * h).to_string() == "1 - h^2");
}

TEST_CASE("log(1+h) has the harmonic alternating coefficients") {
  TruncSeries f = TruncSeries::one(4);
  f.set_coeff(1, 1);
  TruncSeries lg = bcr::series_log(f);
  CHECK(lg.coeff(0) == Rat(0));
  CHECK(lg.coeff(1) == Rat(1));
  CHECK(lg.coeff(2) == Rat(-1) / 2);
  CHECK(lg.coeff(3) == Rat(1) / 3);
  CHECK(lg.coeff(4) == Rat(-1) / 4);
}

TEST_CASE("exp and log are mutually inverse on random series") {
  bcr::SplitMix64 rng(5);
  const unsigned K = 12;
  for (int trial = 0; trial < 100; ++trial) {
    TruncSeries f = random_series(rng, K, Rat(1));
    CHECK(bcr::series_exp(bcr::series_log(f)) == f);
    TruncSeries g = random_series(rng, K, Rat(0));
    CHECK(bcr::series_log(bcr::series_exp(g)) == g);
  }
  CHECK_THROWS_AS(bcr::series_log(TruncSeries(3)), std::domain_error);
  TruncSeries bad = TruncSeries::one(3);
  CHECK_THROWS_AS(bcr::series_exp(bad), std::domain_error);
}

TEST_CASE("series division") {
  bcr::SplitMix64 rng(9);
  const unsigned K = 10;
  for (int trial = 0; trial < 50; ++trial) {
    TruncSeries q = random_series(rng, K, Rat(rng.uniform(-3, 3)));
    TruncSeries b = random_series(rng, K, Rat(rng.uniform(1, 4)));
    CHECK(bcr::series_div(q * b, b) == q);
  }
  CHECK_THROWS_AS(bcr::series_div(TruncSeries::one(3), TruncSeries(3)),
                  std::domain_error);
}

TEST_CASE("integer powers including negative exponents") {
  TruncSeries f = TruncSeries::one(8);
  f.set_coeff(1, 1); // 1 + h
  TruncSeries cube = bcr::series_pow(f, 3);
  CHECK(cube.coeff(2) == Rat(3));
  CHECK(cube.coeff(3) == Rat(1));
  CHECK(bcr::series_pow(f, -1) * f == TruncSeries::one(8));
  CHECK(bcr::series_pow(f, 0) == TruncSeries::one(8));
  CHECK(bcr::series_pow(f, -2) * f * f == TruncSeries::one(8));
}

TEST_CASE("exponential evaluation of laurent polynomials") {
  // t^{1/2} at t = e^h is e^{h/2} = 1 + h/2 + h^2/8 + ...
  TruncSeries half = bcr::laurent_eval_exp(HalfLaurent::term(Rat(1), 1), 2);
  CHECK(half.coeff(0) == Rat(1));
  CHECK(half.coeff(1) == Rat(1) / 2);
  CHECK(half.coeff(2) == Rat(1) / 8);

  // Frozen hand expansion: (t - 1 + t^-1) at t = e^h is
  // 2cosh(h) - 1 = 1 + h^2 + h^4/12 + O(h^6).
  HalfLaurent trefoil = HalfLaurent::term(Rat(1), 2) + HalfLaurent::constant(Rat(-1)) +
                        HalfLaurent::term(Rat(1), -2);
  TruncSeries ev = bcr::laurent_eval_exp(trefoil, 4);
  CHECK(ev.coeff(0) == Rat(1));
  CHECK(ev.coeff(1) == Rat(0));
  CHECK(ev.coeff(2) == Rat(1));
  CHECK(ev.coeff(3) == Rat(0));
  CHECK(ev.coeff(4) == Rat(1) / 12);

  // And the negated log of that value is -h^2 + (5/12) h^4 + O(h^5).
  TruncSeries z = -bcr::series_log(ev);
  CHECK(z.coeff(2) == Rat(-1));
  CHECK(z.coeff(4) == Rat(5) / 12);
  CHECK(z.to_string() == "-h^2 + (5/12)h^4");

  // Evaluation is a ring homomorphism.
  HalfLaurent a = HalfLaurent::term(Rat(2), 3) + HalfLaurent::term(Rat(-1), -2);
  HalfLaurent b = HalfLaurent::term(Rat(1), 1) + HalfLaurent::constant(Rat(4));
  CHECK(bcr::laurent_eval_exp(a * b, 8) ==
        bcr::laurent_eval_exp(a, 8) * bcr::laurent_eval_exp(b, 8));
  CHECK(bcr::laurent_eval_exp(a + b, 8) ==
        bcr::laurent_eval_exp(a, 8) + bcr::laurent_eval_exp(b, 8));
}
