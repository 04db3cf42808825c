#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "scancel/presentation.hpp"
#include "scancel/rational.hpp"
#include "scancel/word.hpp"

namespace scancel {

// A piece is a common subword of two distinct elements of the symmetrized
// set, witnessed at two distinct relator positions. Because the set is
// closed under cyclic shifts, every subword of a member is a prefix of some
// member of the same length, so prefix analysis over the member list captures
// every subword piece. The table is computed by sorting members and taking
// adjacent longest-common-prefix maxima: in sorted order the LCP of any two
// words is the minimum of the adjacent LCPs between them, so each member's
// best partner is one of its two neighbours. Members generated from two
// distinct positions (repeated relators, rotation/inverse coincidences,
// proper powers) count as full-length pieces against their own twin.

/// Per-member piece data: `piece_length[i]` is the longest prefix of
/// member i shared with a distinct member, `partner[i]` a member index
/// realizing it (i itself when the member has two generating positions).
struct PieceTable {
  std::vector<std::size_t> piece_length;
  std::vector<std::size_t> partner;
};

/// Longest common prefix with a *different* member, per member.
PieceTable max_common_prefix_table(const SymmetrizedSet& s);

struct RelatorPieceStat {
  std::size_t relator_index = 0;
  std::size_t relator_length = 0;
  std::size_t max_piece_length = 0;
  Word witness_piece;
  Word witness_partner;
};

struct PieceViolation {
  Word member;
  Word piece;
  Word partner;
};

/// Verdict and evidence for the condition C'(lambda): every piece X occurring
/// in a member R satisfies |X| < lambda * |R|, strictly, in exact arithmetic.
struct PieceReport {
  Rational lambda;
  bool holds = true;
  std::size_t max_piece_length = 0;
  Rational max_ratio{0, 1};
  std::vector<RelatorPieceStat> per_relator;
  std::optional<PieceViolation> violation;
};

PieceReport check_c_prime(const Presentation& p, const Rational& lambda);

/// Same check against a precomputed symmetrization of p.
PieceReport check_c_prime_on(const Presentation& p, const SymmetrizedSet& s,
                             const Rational& lambda);

/// The three checkable hypotheses behind singular asphericity, plus the
/// group attributes they certify. `torsion_free` and `hyperbolic` are
/// derived annotations, not independent computations: torsion-freeness
/// follows from all three flags, hyperbolicity additionally needs C'(1/6)
/// on this finite presentation.
struct AsphericityPreconditions {
  bool c_prime_one_fifth = false;
  bool concise = false;
  bool no_proper_powers = false;
  bool all = false;
  bool torsion_free = false;
  bool hyperbolic = false;
};

AsphericityPreconditions check_singular_asphericity_preconditions(
    const Presentation& p);

nlohmann::ordered_json to_json(const PieceReport& r, const Alphabet& a);
nlohmann::ordered_json to_json(const AsphericityPreconditions& a);

}  // namespace scancel
