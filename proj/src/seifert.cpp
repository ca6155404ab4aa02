#include "bcr/seifert.hpp"

#include <stdexcept>

#include "bcr/errors.hpp"
#include "bcr/rng.hpp"

namespace bcr {

ValidationReport validate(const SeifertData& data) {
  ValidationReport rep;
  auto fail = [&rep](std::string msg) {
    rep.valid = false;
    rep.violations.push_back(std::move(msg));
  };
  if (data.n < 1) fail("n must be >= 1");
  if (data.blocks.size() != data.n) {
    fail("expected " + std::to_string(data.n) + " blocks, got " +
         std::to_string(data.blocks.size()));
    return rep;
  }
  bool any_rational = false;
  for (unsigned d = 1; d <= data.n; ++d) {
    const SeifertBlock& b = data.blocks[d - 1];
    std::string where = "block d=" + std::to_string(d) + ": ";
    if (!b.v_plus.is_square()) {
      fail(where + "v_plus is not square");
      continue;
    }
    if (b.v_minus.rows() != b.v_plus.rows() || b.v_minus.cols() != b.v_plus.cols()) {
      fail(where + "v_minus shape differs from v_plus");
      continue;
    }
    if (b.v_minus - b.v_plus != RatMatrix::identity(b.v_plus.rows()))
      fail(where + "v_minus - v_plus is not the identity");
    if (!b.v_plus.all_integer() || !b.v_minus.all_integer()) {
      any_rational = true;
      if (data.integral) fail(where + "non-integer entries under the integral flag");
    }
  }
  if (any_rational && !data.integral)
    rep.warnings.push_back("rational entries accepted (rational-homology setting)");
  return rep;
}

HalfLaurent alexander(const SeifertData& data, unsigned d) {
  if (d < 1 || d > data.n)
    throw std::out_of_range("alexander: d=" + std::to_string(d) + " outside 1.." +
                            std::to_string(data.n));
  const SeifertBlock& b = data.blocks[d - 1];
  std::size_t sz = b.v_plus.rows();
  std::vector<std::vector<HalfLaurent>> m(sz, std::vector<HalfLaurent>(sz));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j)
      m[i][j] = HalfLaurent::term(b.v_minus.at(i, j), 1) -
                HalfLaurent::term(b.v_plus.at(i, j), -1);
  return mat_det_laurent(m);
}

Rat torsion_log_derivative_one(const SeifertData& data) {
  Rat acc = 0;
  for (unsigned d = 1; d <= data.n; ++d) {
    const SeifertBlock& b = data.blocks[d - 1];
    Rat tr = b.v_minus.trace() + b.v_plus.trace();
    acc += (d % 2 == 1) ? tr : Rat(-tr);
  }
  return acc / 2;
}

std::string NormalizedTorsion::to_string() const {
  std::string out;
  if (shift != 0) out += "t^" + shift.str() + " * ";
  bool trivial_den = denominator == HalfLaurent::constant(1);
  if (trivial_den)
    out += numerator.to_string();
  else
    out += "(" + numerator.to_string() + ") / (" + denominator.to_string() + ")";
  return out;
}

NormalizedTorsion torsion(const SeifertData& data) {
  NormalizedTorsion t;
  t.numerator = HalfLaurent::constant(1);
  t.denominator = HalfLaurent::constant(1);
  for (unsigned d = 1; d <= data.n; ++d) {
    HalfLaurent delta = alexander(data, d);
    if (d % 2 == 1)
      t.numerator = t.numerator * delta;
    else
      t.denominator = t.denominator * delta;
  }
  if (data.n % 2 == 0) {
    Rat dlog = torsion_log_derivative_one(data);
    if (!rat_is_integer(dlog))
      throw validation_error(
          "torsion normalization: T'(1) = " + rat_to_string(dlog) +
          " is not an integer, so no monomial shift can normalize it");
    t.shift = -rat_num(dlog);
  }
  return t;
}

bool torsion_derivative_identity(const SeifertData& data) {
  Rat lhs = 0, chi_minus_one = 0;
  for (unsigned d = 1; d <= data.n; ++d) {
    const SeifertBlock& b = data.blocks[d - 1];
    Rat sign = (d % 2 == 0) ? 1 : -1;
    lhs += sign * b.v_minus.trace();
    chi_minus_one += sign * Rat(static_cast<long>(b.v_plus.rows()));
  }
  Rat rhs = chi_minus_one / 2 - torsion_log_derivative_one(data);
  return lhs == rhs;
}

SeifertData connected_sum(const SeifertData& a, const SeifertData& b) {
  if (a.n != b.n)
    throw validation_error("connected sum requires equal n (got " +
                           std::to_string(a.n) + " and " + std::to_string(b.n) + ")");
  SeifertData out;
  out.n = a.n;
  out.integral = a.integral && b.integral;
  out.blocks.reserve(a.n);
  for (unsigned d = 1; d <= a.n; ++d) {
    SeifertBlock blk;
    blk.v_plus = RatMatrix::block_diag(a.blocks[d - 1].v_plus, b.blocks[d - 1].v_plus);
    blk.v_minus = RatMatrix::block_diag(a.blocks[d - 1].v_minus, b.blocks[d - 1].v_minus);
    out.blocks.push_back(std::move(blk));
  }
  return out;
}

SeifertData dual_data(const SeifertData& data) {
  SeifertData out;
  out.n = data.n;
  out.integral = data.integral;
  out.blocks.resize(data.n);
  for (unsigned d = 1; d <= data.n; ++d) {
    const SeifertBlock& src = data.blocks[data.n - d]; // degree n+1-d
    out.blocks[d - 1].v_plus = -src.v_minus.transpose();
    out.blocks[d - 1].v_minus = -src.v_plus.transpose();
  }
  return out;
}

bool is_duality_symmetric(const SeifertData& data) {
  return dual_data(data) == data;
}

namespace {

RatMatrix random_matrix(SplitMix64& rng, std::size_t size, int bound) {
  RatMatrix m(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) m.at(i, j) = rng.uniform(-bound, bound);
  return m;
}

} // namespace

SeifertData random_data(unsigned n, const std::vector<unsigned>& sizes, int bound,
                        std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_data requires n >= 1");
  if (sizes.size() != n)
    throw std::invalid_argument("random_data: expected " + std::to_string(n) +
                                " block sizes");
  if (bound < 0) throw std::invalid_argument("random_data requires bound >= 0");
  for (unsigned d = 1; d <= n; ++d) {
    if (sizes[d - 1] != sizes[n - d])
      throw std::invalid_argument(
          "random_data: block sizes must be symmetric (size for degree " +
          std::to_string(d) + " must equal size for degree " + std::to_string(n + 1 - d) +
          ")");
  }
  SplitMix64 rng(seed);
  SeifertData out;
  out.n = n;
  out.integral = n >= 2;
  out.blocks.resize(n);
  for (unsigned d = 1; d <= n; ++d) {
    unsigned e = n + 1 - d;
    if (d < e) {
      std::size_t sz = sizes[d - 1];
      RatMatrix vp = random_matrix(rng, sz, bound);
      out.blocks[d - 1].v_plus = vp;
      out.blocks[d - 1].v_minus = vp + RatMatrix::identity(sz);
      // Mirror block: the dual transform of (vp, vp + I).
      out.blocks[e - 1].v_plus = -out.blocks[d - 1].v_minus.transpose();
      out.blocks[e - 1].v_minus = -vp.transpose();
    } else if (d == e) {
      std::size_t half = sizes[d - 1] / 2;
      RatMatrix a = random_matrix(rng, half, bound);
      RatMatrix partner = -a.transpose() - RatMatrix::identity(half);
      out.blocks[d - 1].v_plus = RatMatrix::block_diag(a, partner);
      out.blocks[d - 1].v_minus =
          out.blocks[d - 1].v_plus + RatMatrix::identity(2 * half);
    }
  }
  return out;
}

namespace {

// A unimodular integer matrix built from elementary operations: row
// transvections with coefficients in {-1, 1}, row swaps, and row negations.
RatMatrix random_unimodular(SplitMix64& rng, std::size_t size) {
  RatMatrix p = RatMatrix::identity(size);
  if (size < 1) return p;
  const std::size_t ops = 2 * size;
  for (std::size_t t = 0; t < ops; ++t) {
    switch (rng.uniform(0, 2)) {
      case 0: { // add +-1 times row j to row i
        if (size < 2) break;
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(size) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(size) - 2));
        if (j >= i) ++j;
        Rat c = rng.uniform(0, 1) == 0 ? Rat(1) : Rat(-1);
        for (std::size_t col = 0; col < size; ++col)
          p.at(i, col) = p.at(i, col) + c * p.at(j, col);
        break;
      }
      case 1: { // swap two rows
        if (size < 2) break;
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(size) - 1));
        std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(size) - 2));
        if (j >= i) ++j;
        for (std::size_t col = 0; col < size; ++col) std::swap(p.at(i, col), p.at(j, col));
        break;
      }
      default: { // negate a row
        std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(size) - 1));
        for (std::size_t col = 0; col < size; ++col) p.at(i, col) = -p.at(i, col);
        break;
      }
    }
  }
  return p;
}

} // namespace

SeifertData random_basis_change(const SeifertData& data, std::uint64_t seed) {
  SplitMix64 rng(seed);
  SeifertData out;
  out.n = data.n;
  out.integral = data.integral;
  out.blocks.reserve(data.blocks.size());
  for (const SeifertBlock& b : data.blocks) {
    RatMatrix p = random_unimodular(rng, b.v_plus.rows());
    RatMatrix pinv = p.inverse();
    out.blocks.push_back(SeifertBlock{p * b.v_plus * pinv, p * b.v_minus * pinv});
  }
  return out;
}

} // namespace bcr
