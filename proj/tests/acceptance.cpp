// Acceptance gate: ten checks, one PASS/FAIL line each, every comparison
// exact (no tolerances). Exit status 0 only when all ten pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bcr/catalog.hpp"
#include "bcr/diagrams.hpp"
#include "bcr/euler_weights.hpp"
#include "bcr/invariants.hpp"
#include "bcr/rng.hpp"
#include "bcr/seifert.hpp"
#include "bcr/trunc_series.hpp"
#include "diagram_oracle.hpp"

namespace {

using bcr::Int;
using bcr::Rat;
using bcr::SeifertData;
using bcr::TruncSeries;

int g_failures = 0;

// Runs one check; body returns "" on success, a failure detail otherwise.
// A positive budget (seconds) is part of the check.
void criterion(int id, const std::string& desc, double budget,
               const std::function<std::string()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (detail.empty() && budget > 0 && secs > budget) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "exceeded the %.0fs budget", budget);
    detail = buf;
  }
  bool pass = detail.empty();
  if (!pass) ++g_failures;
  std::printf("criterion %d: %s - %s (%.2fs)%s%s%s\n", id, pass ? "PASS" : "FAIL",
              desc.c_str(), secs, pass ? "" : " [", detail.c_str(), pass ? "" : "]");
  std::fflush(stdout);
}

// ---------------------------------------------------------------------------
// Shared sweep (criteria 4-8): 200 seeded instances, n in {1,2,3,4},
// block sizes <= 4, entries in [-3,3], kmax = 12.
// ---------------------------------------------------------------------------

constexpr unsigned kSweepKmax = 12;
constexpr int kSweepInstances = 200;
std::vector<std::pair<SeifertData, bcr::InvariantReport>> g_sweep;

SeifertData sweep_instance(int i) {
  unsigned n = static_cast<unsigned>(i % 4) + 1;
  bcr::SplitMix64 size_rng(0x51BE5ULL + static_cast<std::uint64_t>(i));
  std::vector<unsigned> sizes(n, 0);
  for (unsigned d = 1; 2 * d <= n + 1; ++d) {
    unsigned s = static_cast<unsigned>(size_rng.uniform(0, 4));
    sizes[d - 1] = s;
    sizes[n - d] = s;
  }
  return bcr::random_data(n, sizes, 3, 0xBA5E0000ULL + static_cast<std::uint64_t>(i));
}

std::string run_sweep_route_equality() {
  g_sweep.clear();
  g_sweep.reserve(kSweepInstances);
  for (int i = 0; i < kSweepInstances; ++i) {
    SeifertData data = sweep_instance(i);
    bcr::InvariantReport rep = bcr::verify_consistency(data, kSweepKmax);
    g_sweep.emplace_back(std::move(data), std::move(rep));
  }
  for (int i = 0; i < kSweepInstances; ++i) {
    const bcr::InvariantReport& rep = g_sweep[static_cast<std::size_t>(i)].second;
    for (unsigned k = 2; k <= kSweepKmax; ++k)
      if (rep.z_trace[k] != rep.z_series.coeff(k))
        return "instance " + std::to_string(i) + ": routes differ at k = " +
               std::to_string(k);
  }
  return "";
}

std::string check_parity() {
  if (g_sweep.empty()) return "sweep unavailable";
  for (std::size_t i = 0; i < g_sweep.size(); ++i) {
    const auto& [data, rep] = g_sweep[i];
    for (unsigned k = 2; k <= kSweepKmax; ++k) {
      if (k % 2 != data.n % 2) continue;
      if (rep.z_trace[k] != 0 || rep.z_series.coeff(k) != 0)
        return "instance " + std::to_string(i) + ": Z_" + std::to_string(k) +
               " != 0 with n = " + std::to_string(data.n);
    }
  }
  return "";
}

std::string check_additivity() {
  if (g_sweep.size() < 150) return "sweep unavailable";
  bcr::WeightTable weights = bcr::lambda_recursive(kSweepKmax);
  for (std::size_t p = 0; p < 50; ++p) {
    const auto& [a, rep_a] = g_sweep[p];
    const auto& [b, rep_b] = g_sweep[p + 100]; // same n: stride 100 = 0 mod 4
    SeifertData sum = bcr::connected_sum(a, b);
    for (unsigned k = 2; k <= kSweepKmax; ++k) {
      for (unsigned nu = 1; nu <= k - 1; ++nu)
        if (bcr::l_knu(sum, k, nu) != bcr::l_knu(a, k, nu) + bcr::l_knu(b, k, nu))
          return "pair " + std::to_string(p) + ": L_{" + std::to_string(k) + "," +
                 std::to_string(nu) + "} is not additive";
      if (bcr::z_k_trace(sum, k, weights) != rep_a.z_trace[k] + rep_b.z_trace[k])
        return "pair " + std::to_string(p) + ": Z_" + std::to_string(k) +
               " is not additive";
    }
  }
  return "";
}

std::string check_normalization() {
  if (g_sweep.empty()) return "sweep unavailable";
  for (std::size_t i = 0; i < g_sweep.size(); ++i) {
    const auto& [data, rep] = g_sweep[i];
    for (unsigned d = 1; d <= data.n; ++d)
      if (bcr::alexander(data, d).eval_one() != Rat(1))
        return "instance " + std::to_string(i) + ": Delta_" + std::to_string(d) +
               "(1) != 1";
    if (rep.z_series.coeff(0) != 0 || rep.z_series.coeff(1) != 0)
      return "instance " + std::to_string(i) + ": series has an h^0 or h^1 term";
  }
  return "";
}

std::string check_duality() {
  if (g_sweep.empty()) return "sweep unavailable";
  for (std::size_t i = 0; i < g_sweep.size(); ++i) {
    const auto& [data, rep] = g_sweep[i];
    SeifertData dual = bcr::dual_data(data);
    for (unsigned d = 1; d <= data.n; ++d)
      if (!(bcr::alexander(dual, data.n + 1 - d) ==
            bcr::alexander(data, d).invert_variable()))
        return "instance " + std::to_string(i) + ": dual polynomial mismatch at d = " +
               std::to_string(d);
    // f-series inversion to order 12: f_dual(h) = f(-h)^{(-1)^(n-1)}.
    TruncSeries f_dual = bcr::series_exp(bcr::z_series_torsion(dual, kSweepKmax));
    long long e = (data.n % 2 == 1) ? 1 : -1;
    if (!(f_dual == bcr::series_pow(rep.f_series.negate_variable(), e)))
      return "instance " + std::to_string(i) + ": f-series inversion fails";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Criterion 9 reference values, certified by hand expansion (independent of
// the code under test):
//   trefoil:      Delta(t) = t - 1 + 1/t, so Delta(e^h) = 2 cosh h - 1
//                 = 1 + h^2 + h^4/12 + O(h^6).
//                 Ln(1+u) = u - u^2/2 + O(u^3) with u = h^2 + h^4/12 gives
//                 Ln Delta(e^h) = h^2 - (5/12) h^4 + O(h^6); the degree-1
//                 convention negates it, so Z_2 = -1 and Z_4 = 5/12.
//   figure eight: Delta(t) = -t + 3 - 1/t, Delta(e^h) = 3 - 2 cosh h
//                 = 1 - h^2 - h^4/12; Ln = -h^2 - (7/12) h^4 + O(h^6),
//                 so Z_2 = 1 and Z_4 = 7/12.
// ---------------------------------------------------------------------------

std::string check_worked_values() {
  struct Expect {
    const char* name;
    Rat z2, z4;
  };
  const Expect cases[] = {
      {"trefoil", Rat(-1), Rat(5) / 12},
      {"figure-eight", Rat(1), Rat(7) / 12},
  };
  bcr::WeightTable weights = bcr::lambda_recursive(4);
  for (const Expect& c : cases) {
    const SeifertData& data = bcr::catalog_lookup(c.name).data;
    Rat t2 = bcr::z_k_trace(data, 2, weights);
    Rat t4 = bcr::z_k_trace(data, 4, weights);
    TruncSeries z = bcr::z_series_torsion(data, 4);
    if (t2 != c.z2 || z.coeff(2) != c.z2)
      return std::string(c.name) + ": Z_2 != hand value " + bcr::rat_to_string(c.z2);
    if (t4 != c.z4 || z.coeff(4) != c.z4)
      return std::string(c.name) + ": Z_4 != hand value " + bcr::rat_to_string(c.z4);
  }
  return "";
}

std::string check_diagram_combinatorics() {
  for (unsigned k = 2; k <= 5; ++k) {
    std::vector<bcr::BcrDiagram> classes = bcr::enumerate_diagrams(k);
    std::set<std::string> words;
    Int total = 0;
    for (const bcr::BcrDiagram& g : classes) {
      if (!bcr::validate_diagram(g).valid)
        return "k = " + std::to_string(k) + ": an enumerated diagram fails validation";
      if (bcr::e_theta_edges(g).size() != k)
        return "k = " + std::to_string(k) + ": |E_theta| != k";
      words.insert(bcr::canonical_word(g));
      total += bcr::numbering_count(g);
    }
    oracle::OracleResult brute = oracle::brute_force_diagrams(k);
    if (words != brute.class_words)
      return "k = " + std::to_string(k) + ": class words differ from brute force";
    if (total != brute.labeled_count)
      return "k = " + std::to_string(k) + ": numbering total " + total.str() +
             " != brute-force labeled count " + brute.labeled_count.str();
  }
  return "";
}

} // namespace

int main() {
  criterion(1, "weight table: brute-force, recursive and closed-form routes agree for k <= 9",
            5.0, [] {
    bcr::WeightTable rec = bcr::lambda_recursive(9);
    bcr::BiSeries closed = bcr::l_series_closed(9);
    for (unsigned k = 2; k <= 9; ++k) {
      std::vector<Rat> brute = bcr::lambda_bruteforce(k);
      const bcr::Poly& lk = closed.coeff_y(k - 1);
      for (unsigned nu = 1; nu <= k - 1; ++nu) {
        if (brute[nu - 1] != rec.at(k, nu) || brute[nu - 1] != lk.coeff(nu))
          return "mismatch at k = " + std::to_string(k) + ", nu = " + std::to_string(nu);
      }
    }
    return std::string();
  });

  criterion(2, "generating series satisfies dL/dY = L^2 - ((1-X)/2)^2 through order 12",
            1.0, [] {
    return bcr::check_ode(12) ? std::string() : "ODE check failed";
  });

  criterion(3, "mixed generating function matches -X - Ln(1 - X g(Y-X)) through degree 12",
            2.0, [] {
    auto m = bcr::m_coeffs(12); // throws on any route mismatch
    if (m.size() != 66) return std::string("unexpected key count");
    bcr::WeightTable t = bcr::lambda_recursive(12);
    for (const auto& [key, value] : m)
      if (value != t.at(key.first, key.second) / Rat(static_cast<int>(key.first)))
        return std::string("key value is not lambda/k");
    if (m.at({2, 1}) != Rat(1) / 2 || m.at({3, 1}) != Rat(1) / 6 ||
        m.at({3, 2}) != Rat(1) / 6 || m.at({4, 2}) != Rat(1) / 6 ||
        m.at({5, 2}) != Rat(11) / 120)
      return std::string("anchor coefficient mismatch");
    return std::string();
  });

  criterion(4, "route equality on 200 seeded instances (n = 1..4, sizes <= 4, k <= 12)",
            60.0, run_sweep_route_equality);

  criterion(5, "parity vanishing Z_k = 0 for k = n mod 2 across the same sweep",
            0.0, check_parity);

  criterion(6, "additivity of Z_k and of the weighted traces on 50 connected sums",
            0.0, check_additivity);

  criterion(7, "normalization: Delta_d(1) = 1 and vanishing h^0, h^1 series terms",
            0.0, check_normalization);

  criterion(8, "duality: mirrored polynomials and f-series inversion to order 12",
            0.0, check_duality);

  criterion(9, "catalog worked values match the hand-expanded constants on both routes",
            0.0, check_worked_values);

  criterion(10, "diagram classes vs labeled brute force for k = 2..5, validator and E_theta",
            60.0, check_diagram_combinatorics);

  std::printf("acceptance: %d/10 criteria pass\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
