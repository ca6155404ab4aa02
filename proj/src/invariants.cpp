#include "bcr/invariants.hpp"

#include <stdexcept>

#include "bcr/errors.hpp"

namespace bcr {

Rat l_knu(const SeifertData& data, unsigned k, unsigned nu) {
  if (k < 2) throw std::invalid_argument("l_knu requires k >= 2");
  if (nu < 1 || nu > k - 1)
    throw std::invalid_argument("l_knu requires 1 <= nu <= k-1");
  Rat acc = 0;
  for (unsigned d = 1; d <= data.n; ++d) {
    const SeifertBlock& b = data.blocks[d - 1];
    std::size_t sz = b.v_plus.rows();
    if (sz == 0) continue;
    RatMatrix p = RatMatrix::identity(sz), m = RatMatrix::identity(sz);
    for (unsigned i = 0; i < nu; ++i) p = p * b.v_plus;
    for (unsigned i = 0; i < k - nu; ++i) m = m * b.v_minus;
    Rat tr = RatMatrix::trace_of_product(p, m);
    acc += (d % 2 == 1) ? tr : Rat(-tr);
  }
  return acc / Rat(static_cast<int>(k));
}

Rat z_k_trace(const SeifertData& data, unsigned k, const WeightTable& weights) {
  if (k < 2 || k > weights.kmax)
    throw std::out_of_range("z_k_trace: k=" + std::to_string(k) +
                            " outside [2, " + std::to_string(weights.kmax) + "]");
  Rat acc = 0;
  for (unsigned nu = 1; nu <= k - 1; ++nu)
    acc += weights.at(k, nu) * l_knu(data, k, nu);
  return acc;
}

TruncSeries z_series_torsion(const SeifertData& data, unsigned order) {
  TruncSeries acc(order);
  TruncSeries h = TruncSeries(order); // the monomial h
  if (order >= 1) h.set_coeff(1, 1);

  HalfLaurent num = HalfLaurent::constant(1), den = HalfLaurent::constant(1);
  for (unsigned d = 1; d <= data.n; ++d) {
    HalfLaurent delta = alexander(data, d);
    TruncSeries at_exp = laurent_eval_exp(delta, order);
    if (at_exp.coeff(0) != 1)
      throw inconsistency_error("alexander polynomial of degree " + std::to_string(d) +
                                " is not 1 at t=1; data is not admissible");
    TruncSeries log_term = series_log(at_exp);
    // Remove the linear drift Delta_d'(1) h; what is left starts at h^2.
    TruncSeries contrib = log_term - h.scaled(log_term.coeff(1));
    bool plus = ((data.n + d + 1) % 2 == 0);
    acc = plus ? acc + contrib : acc - contrib;
    if (d % 2 == 1)
      num = num * delta;
    else
      den = den * delta;
  }

  // Redundant whole-torsion route: log of the alternating product with the
  // trace-formula normalization. Entirely different code path (polynomial
  // products, one log per side, closed-form T'(1)); must agree exactly.
  Rat tprime = torsion_log_derivative_one(data);
  TruncSeries whole = series_log(laurent_eval_exp(num, order)) -
                      series_log(laurent_eval_exp(den, order)) - h.scaled(tprime);
  if (data.n % 2 == 1) whole = -whole;
  if (whole != acc)
    throw inconsistency_error("torsion-route cross-check failed: per-degree and "
                              "whole-torsion series disagree");
  if (acc.coeff(0) != 0 || (order >= 1 && acc.coeff(1) != 0))
    throw inconsistency_error("torsion-route series has nonvanishing h^0 or h^1 term");
  return acc;
}

InvariantReport verify_consistency(const SeifertData& data, unsigned kmax) {
  if (kmax < 2) throw std::invalid_argument("verify_consistency requires kmax >= 2");
  InvariantReport rep(kmax);
  rep.n = data.n;
  rep.kmax = kmax;
  WeightTable weights = lambda_recursive(kmax);
  rep.z_trace.assign(kmax + 1, Rat(0));
  for (unsigned k = 2; k <= kmax; ++k) rep.z_trace[k] = z_k_trace(data, k, weights);
  rep.z_series = z_series_torsion(data, kmax);

  rep.consistent = true;
  for (unsigned k = 2; k <= kmax; ++k)
    if (rep.z_trace[k] != rep.z_series.coeff(k)) rep.consistent = false;

  rep.parity_vanishing = true;
  for (unsigned k = 2; k <= kmax; ++k)
    if (k % 2 == data.n % 2 &&
        (rep.z_trace[k] != 0 || rep.z_series.coeff(k) != 0))
      rep.parity_vanishing = false;

  rep.f_series = series_exp(rep.z_series);
  if (rep.f_series.coeff(0) != 1 || rep.f_series.coeff(1) != 0)
    throw inconsistency_error("f-series normalization failed (f(0) != 1 or f'(0) != 0)");

  if (data.n % 2 == 0)
    rep.caveat = "note: for even n the torsion formula defines Z_k relative to "
                 "the trivial-knot reference";
  return rep;
}

} // namespace bcr
