#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "scancel/dehn.hpp"
#include "scancel/presentation.hpp"
#include "scancel/small_cancellation.hpp"

namespace scancel {

/// Default resource guard for family sizes; callers may pass a larger limit
/// explicitly (the CLI wires this to SCANCEL_MAX_N).
inline constexpr std::size_t kDefaultMaxN = 12;

/// The two-variable template alphabet {x, y}.
const Alphabet& template_alphabet();

/// The exponent-staircase word x y^7 x^2 y^6 x^3 y^5 ... x^7 y: 56 letters,
/// primitive, longest syllable 7. Substituting distinct generators yields
/// relator families whose pieces stay at most 8 letters long, one seventh
/// of the relator length.
Word staircase_word();

/// Relator family indexed by pairs (i, sigma) with i in {1..n} and sigma a
/// subset of {1..n} encoded as an n-bit mask (bit i-1 = element i).
/// Generators: a1..an, then b<mask in binary, n digits> for mask 0..2^n-1.
/// S holds the relator w(a_i, b_sigma) for every pair; R only those with
/// i in sigma.
struct IndependenceFamily {
  std::size_t n = 0;
  Alphabet alphabet;
  Presentation R;
  Presentation S;
  std::vector<std::uint32_t> sigma_generator;  // mask -> generator index
};

IndependenceFamily build_independence_family(
    std::size_t n, const Word& template_word = staircase_word(),
    std::size_t max_n = kDefaultMaxN);

struct IndependenceTableEntry {
  std::size_t i = 0;           // 1-based
  std::uint64_t sigma = 0;     // bitmask
  bool trivial = false;
  bool expected = false;       // i in sigma
};

struct IndependenceReport {
  std::size_t n = 0;
  Alphabet alphabet;
  PieceReport c_prime_S;
  PieceReport c_prime_R;
  AsphericityPreconditions preconditions;
  std::vector<IndependenceTableEntry> table;  // canonical (i, mask) order
  bool matches_membership = false;
};

/// Checks C'(1/6) on S and (independently) on R, the singular-asphericity
/// preconditions on S, then decides every w(a_i, b_sigma) over the verified
/// presentation on R and compares the table against membership i in sigma.
IndependenceReport verify_independence(std::size_t n,
                                       std::size_t max_n = kDefaultMaxN);

/// Cycle family over a1..an: relators w(a_i, a_{i+1 mod n}), n >= 3.
Presentation build_sop_cycle_presentation(
    std::size_t n, const Word& template_word = staircase_word(),
    std::size_t max_n = kDefaultMaxN);

struct SopTableEntry {
  std::size_t i = 0;  // 1-based
  std::size_t j = 0;  // 1-based
  bool trivial = false;
  bool expected = false;  // j == i+1 mod n
};

struct SopReport {
  std::size_t n = 0;
  Alphabet alphabet;
  PieceReport c_prime;
  std::vector<SopTableEntry> table;  // row-major (i, j)
  bool matches_cycle = false;
};

SopReport verify_sop_cycle(std::size_t n, std::size_t max_n = kDefaultMaxN);

nlohmann::ordered_json to_json(const IndependenceReport& r);
nlohmann::ordered_json to_json(const SopReport& r);

}  // namespace scancel
