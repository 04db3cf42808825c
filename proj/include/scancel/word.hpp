#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scancel {

/// One signed occurrence of a generator. sign is +1 or -1.
struct Letter {
  std::uint32_t gen = 0;
  std::int8_t sign = 1;

  Letter() = default;
  Letter(std::uint32_t g, int s) : gen(g), sign(static_cast<std::int8_t>(s)) {}

  Letter inverse() const { return Letter(gen, -sign); }
  bool inverse_of(const Letter& o) const {
    return gen == o.gen && sign == -o.sign;
  }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A free-group word: a plain letter sequence. Reducedness is a predicate,
/// not an invariant; raw concatenations are legal intermediate values.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  Letter& operator[](std::size_t i) { return letters[i]; }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  friend auto operator<=>(const Word&, const Word&) = default;
};

/// Ordered list of distinct generator names. Names follow the token grammar
/// [A-Za-z][A-Za-z0-9_]*.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::uint32_t> index_of(std::string_view n) const;

  static bool valid_name(std::string_view n);

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> names_;
  std::map<std::string, std::uint32_t, std::less<>> index_;
};

/// Parse/serialization failure with a 1-based source position.
/// line() == 0 means the input was a bare word string, not a file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

bool is_freely_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Cancels adjacent mutually inverse pairs until none remain.
/// Idempotent; the result represents the same free-group element.
Word free_reduce(const Word& w);

/// Freely reduces, then strips matching first/last letters. The result is
/// conjugate to w and never begins with the inverse of its own last letter.
Word cyclic_reduce(const Word& w);

/// Letters reversed with signs flipped; an involution.
Word visual_inverse(const Word& w);

Word concat(const Word& a, const Word& b);

/// Left rotation by `offset` positions.
Word rotated(const Word& w, std::size_t offset);

/// All distinct rotations of a cyclically reduced word, in offset order.
/// Periodic words contribute fewer than |w| rotations.
/// Throws std::invalid_argument on non-cyclically-reduced input.
std::vector<Word> cyclic_shifts(const Word& w);

/// Evaluates a two-variable template: letters of generator 0 become u (or
/// u^-1), letters of generator 1 become v, concatenated and freely reduced.
/// Throws std::invalid_argument if the template uses a generator index > 1.
Word substitute(const Word& templ, const Word& u, const Word& v);

/// Smallest-period decomposition: returns (root, k) with w = root^k, k >= 2,
/// when the smallest period p of w satisfies p < |w| and p divides |w|;
/// nullopt when w is primitive. Throws std::invalid_argument on empty input.
std::optional<std::pair<Word, std::size_t>> is_proper_power(const Word& w);

/// Maximal runs of identical letters, in order. Run lengths sum to |w|.
/// Cyclic analyses merge the first and last run themselves when the
/// boundary letters agree.
std::vector<std::pair<Letter, std::size_t>> syllables(const Word& w);

/// Word grammar: `*`-separated factors, each `name` or `name^k` with k a
/// non-zero signed integer; `1` alone denotes the empty word.
/// `line`/`column_offset` seed the positions reported in ParseError.
Word parse_word(std::string_view text, const Alphabet& alphabet,
                std::size_t line = 0, std::size_t column_offset = 0);

/// Inverse of parse_word: maximal runs are emitted as `name^k`.
std::string to_string(const Word& w, const Alphabet& alphabet);

}  // namespace scancel
