// Command-line surface for the exact knot-invariant library: weight tables,
// invariant computation with dual-route cross-checking, randomized property
// sweeps, diagram enumeration, and the built-in data catalog.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bcr/catalog.hpp"
#include "bcr/diagrams.hpp"
#include "bcr/errors.hpp"
#include "bcr/euler_weights.hpp"
#include "bcr/invariants.hpp"
#include "bcr/json_io.hpp"
#include "bcr/rational.hpp"
#include "bcr/seifert.hpp"

namespace {

using Json = nlohmann::ordered_json;
using bcr::Int;
using bcr::Rat;

std::string int_to_string(const Int& v) { return v.str(); }

// ---------------------------------------------------------------------------
// lambda: the weight table
// ---------------------------------------------------------------------------

// One row per k: the values lambda_{k,1} .. lambda_{k,k-1}.
using LambdaRows = std::vector<std::vector<Rat>>; // index 0 -> k = 2

LambdaRows rows_recursive(unsigned kmax) {
  bcr::WeightTable t = bcr::lambda_recursive(kmax);
  LambdaRows rows;
  for (unsigned k = 2; k <= kmax; ++k) {
    std::vector<Rat> row;
    for (unsigned nu = 1; nu <= k - 1; ++nu) row.push_back(t.at(k, nu));
    rows.push_back(std::move(row));
  }
  return rows;
}

LambdaRows rows_closed(unsigned kmax) {
  bcr::BiSeries series = bcr::l_series_closed(kmax);
  LambdaRows rows;
  for (unsigned k = 2; k <= kmax; ++k) {
    const bcr::Poly& lk = series.coeff_y(k - 1);
    std::vector<Rat> row;
    for (unsigned nu = 1; nu <= k - 1; ++nu) row.push_back(lk.coeff(nu));
    rows.push_back(std::move(row));
  }
  return rows;
}

LambdaRows rows_brute(unsigned kmax) {
  if (kmax > 10)
    throw bcr::validation_error(
        "the brute-force route enumerates (k-1)! permutations and is limited to "
        "kmax <= 10; use --route recursive (or closed) for larger kmax");
  LambdaRows rows;
  for (unsigned k = 2; k <= kmax; ++k) rows.push_back(bcr::lambda_bruteforce(k));
  return rows;
}

int run_lambda(unsigned kmax, const std::string& route, bool json_mode) {
  if (kmax < 2) throw bcr::validation_error("--kmax must be at least 2");

  LambdaRows rows;
  std::string status;
  bool agree = true;

  if (route == "recursive") {
    rows = rows_recursive(kmax);
  } else if (route == "closed") {
    rows = rows_closed(kmax);
  } else if (route == "brute") {
    rows = rows_brute(kmax);
  } else { // all
    rows = rows_recursive(kmax);
    LambdaRows closed = rows_closed(kmax);
    unsigned brute_kmax = std::min(kmax, 10u);
    LambdaRows brute = rows_brute(brute_kmax);
    std::string mismatch;
    for (unsigned k = 2; k <= kmax && mismatch.empty(); ++k) {
      const auto& a = rows[k - 2];
      if (closed[k - 2] != a)
        mismatch = "closed-form route disagrees at k = " + std::to_string(k);
      else if (k <= brute_kmax && brute[k - 2] != a)
        mismatch = "brute-force route disagrees at k = " + std::to_string(k);
    }
    agree = mismatch.empty();
    status = agree ? (brute_kmax < kmax
                          ? "AGREE (brute-force compared through k = " +
                                std::to_string(brute_kmax) + ")"
                          : "AGREE")
                   : "DISAGREE: " + mismatch;
  }

  if (json_mode) {
    Json out = Json::object();
    out["command"] = "lambda";
    out["kmax"] = kmax;
    out["route"] = route;
    Json jrows = Json::array();
    for (unsigned k = 2; k <= kmax; ++k) {
      Json jr = Json::object();
      jr["k"] = k;
      Json vals = Json::array();
      for (const Rat& v : rows[k - 2]) vals.push_back(bcr::rat_to_string(v));
      jr["lambda"] = std::move(vals);
      jrows.push_back(std::move(jr));
    }
    out["rows"] = std::move(jrows);
    if (route == "all") out["status"] = status;
    std::cout << out.dump(2) << "\n";
  } else {
    for (unsigned k = 2; k <= kmax; ++k) {
      std::cout << "k=" << k << ":";
      for (const Rat& v : rows[k - 2]) std::cout << " " << bcr::rat_to_string(v);
      std::cout << "\n";
    }
    if (route == "all") std::cout << "status: " << status << "\n";
  }
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// invariants
// ---------------------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bcr::parse_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedInput {
  bcr::SeifertData data;
  std::string source;
};

LoadedInput load_input(const std::string& input_path, const std::string& catalog_name,
                       unsigned n_override) {
  if (input_path.empty() == catalog_name.empty())
    throw bcr::validation_error("exactly one of --input and --catalog is required");
  if (!input_path.empty()) {
    if (n_override != 0)
      throw bcr::validation_error("--n only applies to the catalog unknot entry");
    return {bcr::parse_input_document(read_file(input_path)), "file '" + input_path + "'"};
  }
  const bcr::CatalogEntry& entry = bcr::catalog_lookup(catalog_name);
  if (n_override != 0) {
    if (entry.name != "unknot")
      throw bcr::validation_error("--n only applies to the catalog unknot entry");
    return {bcr::unknot_data(n_override),
            "catalog entry 'unknot' with n = " + std::to_string(n_override)};
  }
  return {entry.data, "catalog entry '" + catalog_name + "'"};
}

std::string block_sizes_string(const bcr::SeifertData& data) {
  std::string s;
  for (unsigned d = 1; d <= data.n; ++d) {
    if (!s.empty()) s += ", ";
    s += "d=" + std::to_string(d) + ": " + std::to_string(data.block_size(d));
  }
  return s;
}

int run_invariants(const std::string& input_path, const std::string& catalog_name,
                   unsigned n_override, unsigned kmax, bool json_mode) {
  if (kmax < 2) throw bcr::validation_error("--kmax must be at least 2");
  LoadedInput in = load_input(input_path, catalog_name, n_override);
  const bcr::SeifertData& data = in.data;

  bcr::ValidationReport vrep = bcr::validate(data);
  if (!vrep.valid) {
    if (json_mode) {
      Json out = Json::object();
      out["command"] = "invariants";
      out["source"] = in.source;
      out["validation"] = Json::object();
      out["validation"]["valid"] = false;
      out["validation"]["violations"] = vrep.violations;
      out["validation"]["warnings"] = vrep.warnings;
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << "input: " << in.source << "\n";
      std::cout << "validation: FAILED\n";
      for (const std::string& v : vrep.violations) std::cout << "  violation: " << v << "\n";
      for (const std::string& w : vrep.warnings) std::cout << "  warning: " << w << "\n";
    }
    return 2;
  }

  bcr::NormalizedTorsion tor = bcr::torsion(data); // may throw validation_error
  Rat tprime = bcr::torsion_log_derivative_one(data);
  bcr::InvariantReport rep = bcr::verify_consistency(data, kmax);

  // First k where the two routes differ (kmax + 1 when they agree).
  unsigned first_mismatch = kmax + 1;
  for (unsigned k = 2; k <= kmax; ++k) {
    if (rep.z_trace[k] != rep.z_series.coeff(k)) {
      first_mismatch = k;
      break;
    }
  }

  const unsigned parity_residue = data.n % 2;

  if (json_mode) {
    Json out = Json::object();
    out["command"] = "invariants";
    out["source"] = in.source;
    out["input"] = bcr::input_document_to_json(data);
    out["n"] = data.n;
    out["kmax"] = kmax;
    out["validation"] = Json::object();
    out["validation"]["valid"] = true;
    out["validation"]["warnings"] = vrep.warnings;
    Json jalex = Json::array();
    for (unsigned d = 1; d <= data.n; ++d) {
      Json ja = Json::object();
      ja["d"] = d;
      ja["polynomial"] = bcr::alexander(data, d).to_string();
      jalex.push_back(std::move(ja));
    }
    out["alexander"] = std::move(jalex);
    out["torsion"] = Json::object();
    out["torsion"]["text"] = tor.to_string();
    out["torsion"]["shift"] = int_to_string(tor.shift);
    out["torsion"]["numerator"] = tor.numerator.to_string();
    out["torsion"]["denominator"] = tor.denominator.to_string();
    out["torsion_log_derivative_one"] = bcr::rat_to_string(tprime);
    Json jz = Json::array();
    for (unsigned k = 2; k <= kmax; ++k) {
      Json jk = Json::object();
      jk["k"] = k;
      jk["trace_route"] = bcr::rat_to_string(rep.z_trace[k]);
      jk["torsion_route"] = bcr::rat_to_string(rep.z_series.coeff(k));
      jk["equal"] = rep.z_trace[k] == rep.z_series.coeff(k);
      jz.push_back(std::move(jk));
    }
    out["z"] = std::move(jz);
    out["routes_agree"] = rep.consistent;
    out["parity_residue"] = parity_residue;
    out["parity_holds"] = rep.parity_vanishing;
    out["f_series"] = rep.f_series.to_string();
    if (!rep.caveat.empty()) out["caveat"] = rep.caveat;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "input: " << in.source << "\n";
    std::cout << "n = " << data.n << (data.integral ? " (integral data)" : "") << "\n";
    std::cout << "block sizes: " << block_sizes_string(data) << "\n";
    std::cout << "validation: ok\n";
    for (const std::string& w : vrep.warnings) std::cout << "  warning: " << w << "\n";
    for (unsigned d = 1; d <= data.n; ++d)
      std::cout << "Delta_" << d << "(t) = " << bcr::alexander(data, d).to_string() << "\n";
    std::cout << "torsion: T(t) = " << tor.to_string() << "\n";
    std::cout << "T'(1) = " << bcr::rat_to_string(tprime) << "\n";
    for (unsigned k = 2; k <= kmax; ++k) {
      std::cout << "Z_" << k << " = " << bcr::rat_to_string(rep.z_trace[k]);
      if (rep.z_trace[k] != rep.z_series.coeff(k))
        std::cout << "  [trace route; torsion route gives "
                  << bcr::rat_to_string(rep.z_series.coeff(k)) << "]";
      std::cout << "\n";
    }
    std::cout << "routes agree (k = 2.." << kmax << "): " << (rep.consistent ? "yes" : "NO")
              << "\n";
    if (!rep.consistent)
      std::cout << "  first mismatch at k = " << first_mismatch
                << "; note: agreement is guaranteed only for data satisfying the\n"
                << "  degree-duality symmetry (up to basis change); see README\n";
    std::cout << "parity (Z_k = 0 for k = " << parity_residue << " mod 2): "
              << (rep.parity_vanishing ? "yes" : "NO") << "\n";
    std::cout << "f(h) = " << rep.f_series.to_string() << "\n";
    if (!rep.caveat.empty()) std::cout << rep.caveat << "\n";
  }
  return rep.consistent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// verify: randomized property sweep
// ---------------------------------------------------------------------------

struct SweepJob {
  unsigned n = 0;
  std::vector<unsigned> sizes;
};

struct InstanceResult {
  std::uint64_t seed = 0;
  unsigned n = 0;
  std::vector<unsigned> sizes;
  bool routes_ok = false;
  bool parity_ok = false;
  bool duality_ok = false;
  bool basis_ok = false;
  bool additivity_ok = false;

  bool all_ok() const {
    return routes_ok && parity_ok && duality_ok && basis_ok && additivity_ok;
  }
  std::string failing_checks() const {
    std::string s;
    auto add = [&](bool ok, const char* name) {
      if (ok) return;
      if (!s.empty()) s += ",";
      s += name;
    };
    add(routes_ok, "routes");
    add(parity_ok, "parity");
    add(duality_ok, "duality");
    add(basis_ok, "basis-change");
    add(additivity_ok, "additivity");
    return s;
  }
};

std::string sizes_string(const std::vector<unsigned>& sizes) {
  std::string s;
  for (unsigned v : sizes) {
    if (!s.empty()) s += ",";
    s += std::to_string(v);
  }
  return s;
}

InstanceResult run_instance(const SweepJob& job, std::uint64_t seed, unsigned kmax,
                            const bcr::WeightTable& weights) {
  InstanceResult r;
  r.seed = seed;
  r.n = job.n;
  r.sizes = job.sizes;

  const int bound = 3;
  bcr::SeifertData data = bcr::random_data(job.n, job.sizes, bound, seed);
  bcr::InvariantReport rep = bcr::verify_consistency(data, kmax);
  r.routes_ok = rep.consistent;
  r.parity_ok = rep.parity_vanishing;

  // Duality: the transformed data must have mirrored Alexander polynomials
  // and Z_k(dual) = (-1)^{n-1+k} Z_k.
  bcr::SeifertData dual = bcr::dual_data(data);
  r.duality_ok = true;
  for (unsigned d = 1; d <= data.n; ++d) {
    if (!(bcr::alexander(dual, data.n + 1 - d) == bcr::alexander(data, d).invert_variable())) {
      r.duality_ok = false;
      break;
    }
  }
  if (r.duality_ok) {
    for (unsigned k = 2; k <= kmax; ++k) {
      Rat expected = (data.n - 1 + k) % 2 == 0 ? rep.z_trace[k] : -rep.z_trace[k];
      if (!(bcr::z_k_trace(dual, k, weights) == expected)) {
        r.duality_ok = false;
        break;
      }
    }
  }

  // Basis change: all displayed quantities are invariant under unimodular
  // conjugation of every block.
  bcr::SeifertData conj = bcr::random_basis_change(data, seed ^ 0x9e3779b97f4a7c15ULL);
  r.basis_ok = true;
  for (unsigned d = 1; d <= data.n; ++d) {
    if (!(bcr::alexander(conj, d) == bcr::alexander(data, d))) {
      r.basis_ok = false;
      break;
    }
  }
  if (r.basis_ok) {
    for (unsigned k = 2; k <= kmax; ++k) {
      if (!(bcr::z_k_trace(conj, k, weights) == rep.z_trace[k])) {
        r.basis_ok = false;
        break;
      }
    }
  }

  // Additivity under block-diagonal concatenation (connected sum).
  bcr::SeifertData partner = bcr::random_data(job.n, job.sizes, bound, seed + 0x5bd1e995ULL);
  bcr::SeifertData sum = bcr::connected_sum(data, partner);
  r.additivity_ok = true;
  for (unsigned k = 2; k <= kmax; ++k) {
    Rat lhs = bcr::z_k_trace(sum, k, weights);
    Rat rhs = rep.z_trace[k] + bcr::z_k_trace(partner, k, weights);
    if (!(lhs == rhs)) {
      r.additivity_ok = false;
      break;
    }
  }
  return r;
}

int run_verify(unsigned n, std::vector<unsigned> sizes, long long instances,
               std::uint64_t seed, unsigned kmax, bool json_mode) {
  if (instances < 1) throw bcr::validation_error("--instances must be at least 1");
  if (kmax < 2) throw bcr::validation_error("--kmax must be at least 2");

  std::vector<SweepJob> jobs;
  if (n == 0) {
    if (!sizes.empty())
      throw bcr::validation_error("--sizes requires an explicit --n (the default sweeps "
                                  "n = 1..4 with all block sizes 2)");
    for (unsigned m = 1; m <= 4; ++m) jobs.push_back({m, std::vector<unsigned>(m, 2)});
  } else {
    if (sizes.empty()) sizes.assign(n, 2);
    if (sizes.size() != n)
      throw bcr::validation_error("--sizes must list exactly n block sizes");
    jobs.push_back({n, std::move(sizes)});
  }

  bcr::WeightTable weights = bcr::lambda_recursive(kmax);

  // Each instance's output is buffered and emitted in seed order.
  std::vector<InstanceResult> results;
  results.reserve(static_cast<std::size_t>(instances));
  for (long long i = 0; i < instances; ++i) {
    const SweepJob& job = jobs[static_cast<std::size_t>(i) % jobs.size()];
    results.push_back(run_instance(job, seed + static_cast<std::uint64_t>(i), kmax, weights));
  }

  long long passed = 0;
  const InstanceResult* first_failure = nullptr;
  for (const InstanceResult& r : results) {
    if (r.all_ok())
      ++passed;
    else if (!first_failure)
      first_failure = &r;
  }

  if (json_mode) {
    Json out = Json::object();
    out["command"] = "verify";
    out["instances"] = instances;
    out["seed"] = seed;
    out["kmax"] = kmax;
    Json jjobs = Json::array();
    for (const SweepJob& j : jobs) {
      Json jj = Json::object();
      jj["n"] = j.n;
      jj["sizes"] = j.sizes;
      jjobs.push_back(std::move(jj));
    }
    out["jobs"] = std::move(jjobs);
    Json jres = Json::array();
    for (const InstanceResult& r : results) {
      Json jr = Json::object();
      jr["seed"] = r.seed;
      jr["n"] = r.n;
      jr["sizes"] = r.sizes;
      jr["routes"] = r.routes_ok;
      jr["parity"] = r.parity_ok;
      jr["duality"] = r.duality_ok;
      jr["basis_change"] = r.basis_ok;
      jr["additivity"] = r.additivity_ok;
      jres.push_back(std::move(jr));
    }
    out["results"] = std::move(jres);
    out["passed"] = passed;
    out["failed"] = instances - passed;
    if (first_failure) {
      Json jf = Json::object();
      jf["seed"] = first_failure->seed;
      jf["n"] = first_failure->n;
      jf["checks"] = first_failure->failing_checks();
      out["first_failure"] = std::move(jf);
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      const InstanceResult& r = results[i];
      std::cout << "instance " << i << " (n=" << r.n << ", sizes=[" << sizes_string(r.sizes)
                << "], seed=" << r.seed << "): ";
      if (r.all_ok())
        std::cout << "routes ok, parity ok, duality ok, basis-change ok, additivity ok\n";
      else
        std::cout << "FAIL (" << r.failing_checks() << ")\n";
    }
    std::cout << "summary: " << passed << "/" << instances << " instances pass (kmax = "
              << kmax << ")\n";
    if (first_failure)
      std::cout << "first counterexample: seed " << first_failure->seed << " (n="
                << first_failure->n << "), failing checks: "
                << first_failure->failing_checks() << "\n";
  }
  return passed == instances ? 0 : 1;
}

// ---------------------------------------------------------------------------
// diagrams
// ---------------------------------------------------------------------------

const char* role_description(bcr::VertexRole r) {
  switch (r) {
    case bcr::VertexRole::ExternalWithLeg:
      return "external cycle vertex (receives a leg)";
    case bcr::VertexRole::TrivalentWithLeg:
      return "internal trivalent cycle vertex (receives a leg)";
    case bcr::VertexRole::Univalent:
      return "univalent internal vertex (leg source)";
    case bcr::VertexRole::BivalentExtIn:
      return "internal bivalent vertex (external in, internal out)";
    case bcr::VertexRole::BivalentIntIn:
      return "internal bivalent vertex (internal in, external out)";
  }
  return "?";
}

int run_diagrams(unsigned k, bool json_mode) {
  std::vector<bcr::BcrDiagram> diagrams = bcr::enumerate_diagrams(k); // guards 2 <= k <= 7

  if (json_mode) {
    Json out = Json::object();
    out["command"] = "diagrams";
    out["k"] = k;
    out["count"] = diagrams.size();
    Json jds = Json::array();
    for (const bcr::BcrDiagram& g : diagrams) {
      bcr::DiagramReport rep = bcr::validate_diagram(g);
      Json jd = Json::object();
      jd["word"] = bcr::canonical_word(g);
      Json jverts = Json::array();
      for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        Json jv = Json::object();
        jv["id"] = v;
        jv["kind"] = g.vertices[v] == bcr::VertexKind::External ? "external" : "internal";
        jv["role"] = std::string(1, bcr::role_letter(rep.roles[v]));
        jverts.push_back(std::move(jv));
      }
      jd["vertices"] = std::move(jverts);
      Json jedges = Json::array();
      for (std::size_t e = 0; e < g.edges.size(); ++e) {
        Json je = Json::object();
        je["id"] = e;
        je["from"] = g.edges[e].from;
        je["to"] = g.edges[e].to;
        je["kind"] = g.edges[e].kind == bcr::EdgeKind::External ? "external" : "internal";
        jedges.push_back(std::move(je));
      }
      jd["edges"] = std::move(jedges);
      Json jtheta = Json::array();
      for (const bcr::ThetaPair& p : bcr::e_theta_edges(g)) {
        Json jp = Json::object();
        jp["edge"] = p.edge;
        jp["partner"] = p.partner;
        jtheta.push_back(std::move(jp));
      }
      jd["e_theta"] = std::move(jtheta);
      jd["aut"] = bcr::automorphism_count(g);
      jd["numberings"] = int_to_string(bcr::numbering_count(g));
      jds.push_back(std::move(jd));
    }
    out["diagrams"] = std::move(jds);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "degree " << k << ": " << diagrams.size() << " diagram classes\n";
    std::cout << "cycle-letter legend: E/T = external/trivalent cycle vertex with a leg, "
                 "A = bivalent (external in, internal out), B = bivalent (internal in, "
                 "external out)\n";
    for (std::size_t i = 0; i < diagrams.size(); ++i) {
      const bcr::BcrDiagram& g = diagrams[i];
      bcr::DiagramReport rep = bcr::validate_diagram(g);
      std::cout << "\n#" << (i + 1) << " word=" << bcr::canonical_word(g) << "\n";
      std::cout << "  vertices:";
      for (std::size_t v = 0; v < g.vertices.size(); ++v)
        std::cout << " v" << v << ":" << bcr::role_letter(rep.roles[v]);
      std::cout << "\n";
      for (std::size_t v = 0; v < g.vertices.size(); ++v)
        std::cout << "    v" << v << ": " << role_description(rep.roles[v]) << "\n";
      std::cout << "  edges:";
      for (std::size_t e = 0; e < g.edges.size(); ++e)
        std::cout << " e" << e << ":v" << g.edges[e].from << "->v" << g.edges[e].to
                  << (g.edges[e].kind == bcr::EdgeKind::External ? "(ext)" : "(int)");
      std::cout << "\n";
      std::cout << "  E_theta pairs:";
      for (const bcr::ThetaPair& p : bcr::e_theta_edges(g))
        std::cout << " (e" << p.edge << "~e" << p.partner << ")";
      std::cout << "\n";
      std::cout << "  |Aut| = " << bcr::automorphism_count(g)
                << ", edge numberings = " << int_to_string(bcr::numbering_count(g)) << "\n";
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// catalog
// ---------------------------------------------------------------------------

int run_catalog(const std::string& name, unsigned n_override, bool json_mode) {
  if (name.empty()) {
    if (n_override != 0)
      throw bcr::validation_error("--n requires naming the unknot entry");
    if (json_mode) {
      Json out = Json::array();
      for (const bcr::CatalogEntry& e : bcr::catalog_entries()) {
        Json je = Json::object();
        je["name"] = e.name;
        je["n"] = e.data.n;
        je["description"] = e.description;
        out.push_back(std::move(je));
      }
      std::cout << out.dump(2) << "\n";
    } else {
      for (const bcr::CatalogEntry& e : bcr::catalog_entries())
        std::cout << e.name << "  (n=" << e.data.n << ")  " << e.description << "\n";
    }
    return 0;
  }
  const bcr::CatalogEntry& entry = bcr::catalog_lookup(name);
  bcr::SeifertData data = entry.data;
  if (n_override != 0) {
    if (entry.name != "unknot")
      throw bcr::validation_error("--n only applies to the unknot entry");
    data = bcr::unknot_data(n_override);
  }
  // The emitted document is directly usable with `invariants --input`.
  std::cout << bcr::input_document_to_text(data);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact generalized Bott-Cattaneo-Rossi knot invariants Z_k from "
               "Seifert-matrix data, computed by two independent routes (weighted "
               "traces and torsion series) with cross-checking."};
  app.require_subcommand(1);

  // lambda
  auto* lam = app.add_subcommand("lambda", "print the weight table lambda_{k,nu}");
  unsigned lam_kmax = 12;
  std::string lam_route = "recursive";
  bool lam_json = false;
  lam->add_option("--kmax", lam_kmax, "largest k (default 12)");
  lam->add_option("--route", lam_route, "computation route (default recursive)")
      ->check(CLI::IsMember({"brute", "recursive", "closed", "all"}));
  lam->add_flag("--json", lam_json, "machine-readable output");

  // invariants
  auto* inv = app.add_subcommand(
      "invariants", "compute Alexander polynomials, torsion and Z_k for one input");
  std::string inv_input, inv_catalog;
  unsigned inv_kmax = 12, inv_n = 0;
  bool inv_json = false;
  inv->add_option("--input", inv_input, "path to a JSON input document");
  inv->add_option("--catalog", inv_catalog, "name of a built-in catalog entry");
  inv->add_option("--n", inv_n, "dimension parameter for the unknot entry");
  inv->add_option("--kmax", inv_kmax, "largest k (default 12)");
  inv->add_flag("--json", inv_json, "machine-readable output");

  // verify
  auto* ver = app.add_subcommand(
      "verify", "randomized property sweep: route equality, parity, duality, "
                "basis-change invariance, additivity");
  unsigned ver_n = 0, ver_kmax = 12;
  std::vector<unsigned> ver_sizes;
  long long ver_instances = 200;
  std::uint64_t ver_seed = 1;
  bool ver_json = false;
  ver->add_option("--n", ver_n, "dimension parameter (default: sweep n = 1..4)");
  ver->add_option("--sizes", ver_sizes, "comma-separated block sizes, one per degree")
      ->delimiter(',');
  ver->add_option("--instances", ver_instances, "number of random instances (default 200)");
  ver->add_option("--seed", ver_seed, "base seed (default 1)");
  ver->add_option("--kmax", ver_kmax, "largest k (default 12)");
  ver->add_flag("--json", ver_json, "machine-readable output");

  // diagrams
  auto* dia = app.add_subcommand("diagrams",
                                 "enumerate the degree-k cycle-with-legs diagrams");
  unsigned dia_k = 0;
  bool dia_json = false;
  dia->add_option("--k", dia_k, "diagram degree (2..7)")->required();
  dia->add_flag("--json", dia_json, "machine-readable output");

  // catalog
  auto* cat = app.add_subcommand("catalog",
                                 "list built-in datasets or emit one as a JSON document");
  std::string cat_name;
  unsigned cat_n = 0;
  bool cat_json = false;
  cat->add_option("name", cat_name, "entry name (omit to list all)");
  cat->add_option("--n", cat_n, "dimension parameter for the unknot entry");
  cat->add_flag("--json", cat_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2; // bad usage is an input error
  }

  try {
    if (*lam) return run_lambda(lam_kmax, lam_route, lam_json);
    if (*inv) return run_invariants(inv_input, inv_catalog, inv_n, inv_kmax, inv_json);
    if (*ver)
      return run_verify(ver_n, ver_sizes, ver_instances, ver_seed, ver_kmax, ver_json);
    if (*dia) return run_diagrams(dia_k, dia_json);
    if (*cat) return run_catalog(cat_name, cat_n, cat_json);
  } catch (const bcr::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const bcr::validation_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const bcr::inconsistency_error& e) {
    std::cerr << "mathematical inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "mathematical inconsistency: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
