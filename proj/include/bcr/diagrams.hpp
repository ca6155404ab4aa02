#ifndef BCR_DIAGRAMS_HPP
#define BCR_DIAGRAMS_HPP

#include <string>
#include <vector>

#include "bcr/rational.hpp"

namespace bcr {

enum class VertexKind { External, Internal };
enum class EdgeKind { External, Internal };

struct DiagEdge {
  unsigned from = 0;
  unsigned to = 0;
  EdgeKind kind = EdgeKind::External;
  bool operator==(const DiagEdge&) const = default;
};

// A directed graph with vertex and edge kind tags. Valid instances (see
// validate_diagram) are the degree-k cycle-with-legs diagrams: 2k vertices,
// 2k edges, one directed cycle, every off-cycle vertex a univalent leg
// source.
struct BcrDiagram {
  std::vector<VertexKind> vertices;
  std::vector<DiagEdge> edges;
  bool operator==(const BcrDiagram&) const = default;
};

// The five admissible local vertex shapes.
enum class VertexRole {
  ExternalWithLeg,  // external; in: two external (exactly one a leg), out: one external
  TrivalentWithLeg, // internal; in: one internal + one leg, out: one internal
  Univalent,        // internal; no in, out: one external (a leg source)
  BivalentExtIn,    // internal; in: one external, out: one internal
  BivalentIntIn,    // internal; in: one internal, out: one external
};

char role_letter(VertexRole r); // E, T, U, A, B

struct DiagramReport {
  bool valid = true;
  std::vector<std::string> violations;
  std::vector<VertexRole> roles; // per vertex; meaningful only when valid
  unsigned degree = 0;           // vertex count / 2 when valid
};

// Checks every vertex against the five local shapes (including the
// leg-source conditions), rejects loops and repeated ordered edge pairs, and
// requires connectivity. Purely local rules plus connectivity characterize
// exactly the cycle-with-legs diagrams.
DiagramReport validate_diagram(const BcrDiagram& g);

// Cycle words use the alphabet E/T/A/B (the four on-cycle roles, with legs
// implied for E and T). Rotations of a word give isomorphic diagrams; the
// canonical form is the lexicographically smallest rotation.
BcrDiagram diagram_from_word(const std::string& word);

// Canonical cycle word of a valid diagram (throws validation_error if the
// diagram is invalid).
std::string canonical_word(const BcrDiagram& g);

// All isomorphism classes of degree-k diagrams, as canonical-word
// representatives ordered by cycle length then word. Guarded to 2 <= k <= 7.
std::vector<BcrDiagram> enumerate_diagrams(unsigned k);

// An edge of the distinguished set together with its partner: for an
// external edge into an internal vertex the partner is that vertex's
// outgoing internal edge; for a cycle edge into an external vertex the
// partner is the leg into that vertex. The set has exactly k elements.
struct ThetaPair {
  unsigned edge = 0;
  unsigned partner = 0;
  bool operator==(const ThetaPair&) const = default;
};
std::vector<ThetaPair> e_theta_edges(const BcrDiagram& g);

// |Aut|, by exhaustive vertex-bijection search preserving kinds and directed
// kinded edges.
std::size_t automorphism_count(const BcrDiagram& g);

// (2k)! / |Aut|: the number of inequivalent edge numberings of a degree-k
// diagram.
Int numbering_count(const BcrDiagram& g);

} // namespace bcr

#endif
