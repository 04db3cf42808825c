#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "json.hpp"
#include "scancel/presentation.hpp"
#include "scancel/rational.hpp"
#include "scancel/word.hpp"

namespace scancel {

/// Configuration for the random-word experiment. Words are sampled uniformly
/// from the cyclically reduced words of length `word_length` over {x, y}.
struct RandConfig {
  std::size_t word_length = 0;
  Rational lambda;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t family_n = 2;
};

void validate(const RandConfig& cfg);

std::uint64_t splitmix64(std::uint64_t z);

/// Uniform draw from [0, k), by rejection; deterministic for a given engine
/// state across platforms (mt19937_64 output is specified bit-exactly).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k);

/// Uniform over all cyclically reduced words of length n >= 2 over {x, y}:
/// freely reduced words are sampled letter by letter and whole-word rejection
/// enforces the seam condition, which leaves the conditional distribution
/// uniform.
Word random_cyclically_reduced_word(std::size_t n, std::mt19937_64& rng);

struct OverlapWitness {
  Word repeated;
  Origin first;
  Origin second;
};

/// True iff some word of length ceil(lambda*|w|) occurs as a prefix of the
/// rotations of w and of w^-1 at two distinct positions (shift, inverted).
/// Positions are compared, not deduplicated words, so periodic words trip
/// the event via their self-coincident rotations.
bool overlap_bad_event(const Word& w, const Rational& lambda,
                       OverlapWitness* witness = nullptr);

struct SyllableWitness {
  Letter letter;
  std::size_t run_length = 0;
};

/// True iff the cyclic syllable decomposition of w (first and last run
/// merged when they carry the same letter) contains a run of length
/// >= ceil(lambda*|w|).
bool syllable_bad_event(const Word& w, const Rational& lambda,
                        SyllableWitness* witness = nullptr);

struct TrialOutcome {
  std::size_t index = 0;
  Word word;
  bool overlap_bad = false;
  bool syllable_bad = false;
  bool direct_ok = false;  // C'(lambda) + concise + primitive on the family
  bool success = false;    // neither bad event
};

struct ProbabilityEstimate {
  std::size_t trials = 0;
  double empirical_success_rate = 0.0;
  double analytic_bound = 0.0;
  double overlap_rate = 0.0;
  double syllable_rate = 0.0;
  std::size_t implication_violations = 0;  // success without direct_ok
  std::vector<TrialOutcome> outcomes;
};

/// max(0, 1 - n^2/2^(lambda n) - 4n/2^(lambda n)).
double analytic_success_bound(std::size_t n, const Rational& lambda);

/// Runs cfg.trials independent trials; trial t draws from a stream derived
/// from (seed, t), so the outcome sequence is reproducible and independent
/// of scheduling. Every trial also runs the direct family check at
/// cfg.family_n; a successful trial failing it is counted as an implication
/// violation.
ProbabilityEstimate estimate_probability(const RandConfig& cfg);

struct OverlapCensus {
  std::uint64_t total = 0;
  std::uint64_t bad = 0;
  Rational ratio{0, 1};
};

/// Enumerates all cyclically reduced words of length 6 over {x, y} and counts
/// those whose length-4 subword at position 1 recurs at position 3.
OverlapCensus exhaustive_length6_overlap_count();

std::string to_csv(const std::vector<TrialOutcome>& outcomes,
                   const Alphabet& a);
nlohmann::ordered_json to_json(const ProbabilityEstimate& e,
                               const RandConfig& cfg);
nlohmann::ordered_json to_json(const OverlapCensus& c);

}  // namespace scancel
