#ifndef BCR_INVARIANTS_HPP
#define BCR_INVARIANTS_HPP

#include <string>
#include <vector>

#include "bcr/euler_weights.hpp"
#include "bcr/seifert.hpp"
#include "bcr/trunc_series.hpp"

namespace bcr {

// The weighted trace L_{k,nu} = (1/k) sum_d (-1)^{d+1}
// Tr((V_d^+)^nu (V_d^-)^{k-nu}). Requires 1 <= nu <= k-1.
Rat l_knu(const SeifertData& data, unsigned k, unsigned nu);

// Z_k by the weighted-trace route: sum_nu lambda_{k,nu} L_{k,nu}.
// Requires 2 <= k <= weights.kmax.
Rat z_k_trace(const SeifertData& data, unsigned k, const WeightTable& weights);

// The generating series sum_k Z_k h^k by the torsion route, computed per
// degree as sum_d (-1)^{n+d+1} (Ln Delta_d(e^h) - Delta_d'(1) h). A redundant
// whole-torsion form — (-1)^n (Ln num(e^h) - Ln den(e^h) - T'(1) h) with
// T'(1) from the closed trace formula — is recomputed internally and must
// agree exactly, and the h^0, h^1 coefficients must vanish; violations throw
// inconsistency_error (a bug, never bad data).
TruncSeries z_series_torsion(const SeifertData& data, unsigned order);

struct InvariantReport {
  unsigned n = 0;
  unsigned kmax = 0;
  std::vector<Rat> z_trace;   // index k, valid for 2 <= k <= kmax
  TruncSeries z_series;       // torsion route, order kmax
  bool consistent = false;    // the two routes agree on every k
  bool parity_vanishing = false; // Z_k = 0 whenever k = n mod 2
  TruncSeries f_series;       // exp(z_series); f(0) = 1, f'(0) = 0
  std::string caveat;         // even-n normalization note, empty otherwise

  InvariantReport(unsigned order) : z_series(order), f_series(order) {}
};

// Computes both routes for k = 2..kmax and cross-checks them. The f-series
// assertions (constant term 1, vanishing h coefficient) throw
// inconsistency_error if violated.
InvariantReport verify_consistency(const SeifertData& data, unsigned kmax);

} // namespace bcr

#endif
