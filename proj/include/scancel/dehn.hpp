#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "scancel/presentation.hpp"
#include "scancel/small_cancellation.hpp"

namespace scancel {

/// A presentation bundled with its symmetrization and a passing C'(1/6)
/// certificate. Produced only by verify(); the word problem machinery
/// refuses to run without one.
struct VerifiedPresentation {
  Presentation presentation;
  SymmetrizedSet symmetrized;
  PieceReport certificate;
  // derived index: member indices keyed by first letter
  std::map<Letter, std::vector<std::size_t>> first_letter_index;
};

/// Thrown when a presentation fails C'(1/6); carries the full report with
/// its violation witness.
class VerificationError : public std::runtime_error {
 public:
  VerificationError(PieceReport report, const Alphabet& alphabet);
  const PieceReport& report() const { return report_; }

 private:
  PieceReport report_;
};

VerifiedPresentation verify(const Presentation& p);

/// One replayable rewriting step.
///  - cyclic-rotate: rotate left by `position` letters.
///  - free-cancel: delete the mutually inverse pair at `position`.
///  - relator-replace: at `position`, replace `removed` (an over-half prefix
///    of the member `member_index`) by `inserted` (the inverse of the
///    member's remainder).
struct DehnStep {
  enum class Kind { FreeCancel, CyclicRotate, RelatorReplace };
  Kind kind = Kind::FreeCancel;
  std::size_t position = 0;
  Word removed;
  Word inserted;
  std::optional<std::size_t> member_index;
};

struct DehnTrace {
  Word initial;
  Word final_word;
  bool trivial = false;
  std::size_t replace_steps = 0;
  std::vector<DehnStep> steps;
};

/// One Dehn step on a cyclically reduced word: find the longest occurrence
/// in the cyclic word of a member prefix X with 2|X| > |member| (ties: lowest
/// start position, then lowest member index), replace it by the inverse of
/// the member remainder, and cyclically reduce. Returns nullopt when no
/// over-half match exists; otherwise a strictly shorter word equal to w in
/// the presented group. Steps taken are appended to *steps when given.
std::optional<Word> dehn_step(const Word& w, const VerifiedPresentation& vp,
                              std::vector<DehnStep>* steps = nullptr);

/// Decides triviality by iterated dehn_step after cyclic reduction.
/// Terminates because relator replacement strictly shortens the word.
DehnTrace is_trivial(const Word& w, const VerifiedPresentation& vp);

/// Replays a trace from its initial word, validating every step (pair
/// inverseness of cancellations, member consistency of replacements against
/// `s` when given). Returns the resulting word and throws std::logic_error
/// on any inconsistency, including a mismatch with trace.final_word.
Word replay_trace(const DehnTrace& trace, const SymmetrizedSet* s = nullptr);

nlohmann::ordered_json to_json(const DehnTrace& t,
                               const VerifiedPresentation& vp);

}  // namespace scancel
