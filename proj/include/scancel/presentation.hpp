#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "scancel/word.hpp"

namespace scancel {

/// A group presentation: alphabet plus relator list. Valid presentations
/// carry only cyclically reduced non-empty relators over their own alphabet;
/// the relator list is ordered and may contain repeats.
struct Presentation {
  Alphabet alphabet;
  std::vector<Word> relators;
};

/// Throws std::invalid_argument when a Presentation invariant fails.
void validate(const Presentation& p);

/// Generating position of a symmetrized member: which relator, rotated by
/// how much, inverted or not.
struct Origin {
  std::uint32_t relator = 0;
  std::uint32_t shift = 0;
  bool inverted = false;

  friend bool operator==(const Origin&, const Origin&) = default;
};

/// Closure of a relator list under cyclic shifts and visual inverses.
/// `members` is lexicographically sorted and duplicate-free; `origins`
/// records the first generating position of each member, and
/// `extra_origins` a second distinct position when the generation map is
/// not injective (repeated relators, shift/inverse coincidences, proper
/// powers). Member indices used throughout the piece and Dehn machinery
/// refer to positions in `members`.
struct SymmetrizedSet {
  std::vector<Word> members;
  std::vector<Origin> origins;
  std::vector<std::optional<Origin>> extra_origins;

  std::optional<std::size_t> index_of(const Word& w) const;
};

SymmetrizedSet symmetrize(const Presentation& p);

/// Conciseness: no two distinct relators are cyclic shifts of each other or
/// of each other's visual inverses. On failure `witness` holds the first
/// offending relator index pair.
struct ConciseReport {
  bool concise = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

ConciseReport is_concise(const Presentation& p);

/// Presentation file format:
///   gens: a, b          (exactly once, first content line)
///   rel: a*b*a^-1*b^-1  (zero or more)
/// '#' starts a comment; blank lines are ignored. Relators are cyclically
/// reduced on ingestion; a normalization that changed the word is reported
/// in `warnings`, and a relator that reduces to the empty word is an error.
struct PresentationParse {
  Presentation presentation;
  std::vector<std::string> warnings;
};

PresentationParse parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

nlohmann::ordered_json to_json(const Presentation& p);
nlohmann::ordered_json to_json(const SymmetrizedSet& s, const Alphabet& a);

}  // namespace scancel
