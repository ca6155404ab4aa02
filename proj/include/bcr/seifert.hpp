#ifndef BCR_SEIFERT_HPP
#define BCR_SEIFERT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "bcr/half_laurent.hpp"
#include "bcr/rat_matrix.hpp"

namespace bcr {

// One homological degree d of Seifert-surface linking data: the pair of
// push-off linking matrices, constrained by v_minus - v_plus = identity.
struct SeifertBlock {
  RatMatrix v_plus;
  RatMatrix v_minus;
  bool operator==(const SeifertBlock&) const = default;
};

// Seifert-matrix data for a long knot R^n -> R^{n+2}: one block per degree
// d = 1..n (blocks[d-1]). `integral` demands integer entries in validation
// (the integral-homology setting, the default for n >= 2).
struct SeifertData {
  unsigned n = 0;
  bool integral = false;
  std::vector<SeifertBlock> blocks;
  bool operator==(const SeifertData&) const = default;

  std::size_t block_size(unsigned d) const { return blocks[d - 1].v_plus.rows(); }
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

// Structural admissibility: square blocks, matching shapes, one block per
// d = 1..n, v_minus - v_plus = I, integrality when flagged. Non-integer
// entries without the flag are accepted with a warning (rational-homology
// setting).
ValidationReport validate(const SeifertData& data);

// The degree-d Alexander polynomial det(t^{1/2} V_d^- - t^{-1/2} V_d^+).
// For valid data its value at t = 1 is det(I) = 1. Empty blocks give 1.
HalfLaurent alexander(const SeifertData& data, unsigned d);

// T(t) = t^shift * numerator / denominator, the alternating product of the
// degree-d Alexander polynomials (odd d in the numerator, even d in the
// denominator), normalized so that T(1) = 1 and — for even n, where the
// monomial shift is applied — T'(1) = 0.
struct NormalizedTorsion {
  HalfLaurent numerator;
  HalfLaurent denominator;
  Int shift = 0;

  std::string to_string() const;
};

// Logarithmic derivative T'(1) of the alternating product, by the closed
// trace formula (1/2) sum_d (-1)^{d+1} Tr(V_d^- + V_d^+).
Rat torsion_log_derivative_one(const SeifertData& data);

// Requires, for even n, that T'(1) is an integer (throws validation_error
// otherwise; duality-symmetric data always satisfies this). For odd n the
// shift is zero by convention.
NormalizedTorsion torsion(const SeifertData& data);

// Checks sum_d (-1)^d Tr(V_d^-) == (chi - 1)/2 - T'(1), where chi - 1 is the
// reduced Euler characteristic sum_d (-1)^d b_d. Both sides are evaluated
// independently; the identity holds for every admissible data set.
bool torsion_derivative_identity(const SeifertData& data);

// Degree-wise block-diagonal concatenation (the Seifert data of a connected
// sum). Throws validation_error if the ambient dimensions differ.
SeifertData connected_sum(const SeifertData& a, const SeifertData& b);

// The mirror/dual transform W_d^{+-} = -transpose(V_{n+1-d}^{-+}). Applying
// it twice returns the original data exactly.
SeifertData dual_data(const SeifertData& data);

// True iff the data literally equals its own dual transform, i.e.
// V_{n+1-d}^{+-} = -transpose(V_d^{-+}) entrywise for every d. This is a
// sufficient condition for the trace/torsion route agreement and the parity
// vanishing, not a necessary one: the symmetry may hold only after a basis
// change (the invariants cannot tell the difference), and for an odd-n
// middle degree with a nonempty block the literal form is impossible over
// the integers (it would force diagonal entries -1/2), so such blocks are
// symmetric only up to conjugation.
bool is_duality_symmetric(const SeifertData& data);

// Deterministic pseudo-random admissible data. Blocks for d < n+1-d are drawn
// freely with integer entries in [-bound, bound] and mirrored into degree
// n+1-d by the dual transform; for odd n the middle block is A + (-A^T - I)
// block-diagonally with A drawn freely (so the requested middle size is
// rounded down to an even number, and mirrored sizes follow their partner).
// This is exactly the transpose-duality structure that data of genuine
// Seifert surfaces always admits, and it is what makes the trace/torsion
// route identities and the parity vanishing hold for every instance.
SeifertData random_data(unsigned n, const std::vector<unsigned>& sizes, int bound,
                        std::uint64_t seed);

// Conjugates every degree block by a seeded random unimodular integer matrix
// (a product of elementary operations): V_d^{+-} -> P_d V_d^{+-} P_d^{-1}.
// This models a change of basis of the underlying homology; every quantity
// computed from the data (Alexander polynomials, torsion, all Z_k) is
// invariant under it, and integrality is preserved.
SeifertData random_basis_change(const SeifertData& data, std::uint64_t seed);

} // namespace bcr

#endif
