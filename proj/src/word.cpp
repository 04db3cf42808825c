#include "scancel/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace scancel {

Alphabet::Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw std::invalid_argument("alphabet: invalid generator name '" +
                                  names_[i] + "'");
    if (!index_.emplace(names_[i], i).second)
      throw std::invalid_argument("alphabet: duplicate generator name '" +
                                  names_[i] + "'");
  }
}

std::optional<std::uint32_t> Alphabet::index_of(std::string_view n) const {
  const auto it = index_.find(n);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::valid_name(std::string_view n) {
  if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
    return false;
  return std::all_of(n.begin() + 1, n.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

ParseError::ParseError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                        ", column " + std::to_string(column) +
                                        ": " + message
                                  : "column " + std::to_string(column) + ": " +
                                        message),
      line_(line),
      column_(column) {}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].inverse_of(w[i + 1])) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_freely_reduced(w)) return false;
  return w.size() < 2 || !w.letters.front().inverse_of(w.letters.back());
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back().inverse_of(l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  const Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo].inverse_of(r[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(r.letters.begin() + lo,
                                  r.letters.begin() + hi));
}

Word visual_inverse(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.push_back(it->inverse());
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out;
  out.reserve(a.size() + b.size());
  out.insert(out.end(), a.letters.begin(), a.letters.end());
  out.insert(out.end(), b.letters.begin(), b.letters.end());
  return Word(std::move(out));
}

Word rotated(const Word& w, std::size_t offset) {
  if (w.empty()) return w;
  offset %= w.size();
  std::vector<Letter> out;
  out.reserve(w.size());
  out.insert(out.end(), w.letters.begin() + offset, w.letters.end());
  out.insert(out.end(), w.letters.begin(), w.letters.begin() + offset);
  return Word(std::move(out));
}

std::vector<Word> cyclic_shifts(const Word& w) {
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument(
        "cyclic_shifts: word must be cyclically reduced");
  std::vector<Word> out;
  std::set<Word> seen;
  for (std::size_t s = 0; s < w.size(); ++s) {
    Word r = rotated(w, s);
    if (seen.insert(r).second) out.push_back(std::move(r));
  }
  if (w.empty()) out.push_back(w);
  return out;
}

Word substitute(const Word& templ, const Word& u, const Word& v) {
  const Word ui = visual_inverse(u);
  const Word vi = visual_inverse(v);
  std::vector<Letter> out;
  out.reserve(templ.size() * std::max<std::size_t>(u.size(), v.size()));
  for (const Letter& l : templ.letters) {
    if (l.gen > 1)
      throw std::invalid_argument(
          "substitute: template letter outside the two-generator alphabet");
    const Word& rep =
        l.gen == 0 ? (l.sign > 0 ? u : ui) : (l.sign > 0 ? v : vi);
    out.insert(out.end(), rep.letters.begin(), rep.letters.end());
  }
  return free_reduce(Word(std::move(out)));
}

namespace {

// Smallest period via the standard prefix-function border computation.
std::size_t smallest_period(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> pi(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && w[i] != w[k]) k = pi[k - 1];
    if (w[i] == w[k]) ++k;
    pi[i] = k;
  }
  return n - pi[n - 1];
}

}  // namespace

std::optional<std::pair<Word, std::size_t>> is_proper_power(const Word& w) {
  if (w.empty())
    throw std::invalid_argument("is_proper_power: empty word");
  const std::size_t n = w.size();
  const std::size_t p = smallest_period(w);
  if (p == n || n % p != 0) return std::nullopt;
  Word root(std::vector<Letter>(w.letters.begin(), w.letters.begin() + p));
  return std::make_pair(std::move(root), n / p);
}

std::vector<std::pair<Letter, std::size_t>> syllables(const Word& w) {
  std::vector<std::pair<Letter, std::size_t>> out;
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back().first == l)
      ++out.back().second;
    else
      out.emplace_back(l, 1);
  }
  return out;
}

namespace {

std::string_view trim(std::string_view s, std::size_t& lead) {
  lead = 0;
  while (lead < s.size() &&
         std::isspace(static_cast<unsigned char>(s[lead])))
    ++lead;
  s.remove_prefix(lead);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

constexpr std::int64_t kMaxExponent = 1'000'000;

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet,
                std::size_t line, std::size_t column_offset) {
  std::size_t lead = 0;
  const std::string_view body = trim(text, lead);
  const std::size_t base = column_offset + lead;
  if (body.empty()) throw ParseError("empty word", line, base + 1);
  if (body == "1") return Word{};

  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t star = body.find('*', pos);
    if (star == std::string_view::npos) star = body.size();
    std::size_t flead = 0;
    const std::string_view factor = trim(body.substr(pos, star - pos), flead);
    const std::size_t fcol = base + pos + flead + 1;
    if (factor.empty()) throw ParseError("empty factor", line, fcol);

    std::string_view name = factor;
    std::int64_t exponent = 1;
    const auto caret = factor.find('^');
    if (caret != std::string_view::npos) {
      name = factor.substr(0, caret);
      const std::string_view expo = factor.substr(caret + 1);
      if (expo.empty())
        throw ParseError("missing exponent after '^'", line, fcol);
      std::size_t i = 0;
      bool neg = false;
      if (expo[0] == '-' || expo[0] == '+') {
        neg = expo[0] == '-';
        i = 1;
      }
      if (i == expo.size())
        throw ParseError("missing exponent digits", line, fcol);
      std::int64_t v = 0;
      for (; i < expo.size(); ++i) {
        if (expo[i] < '0' || expo[i] > '9')
          throw ParseError("bad exponent '" + std::string(expo) + "'", line,
                           fcol);
        v = v * 10 + (expo[i] - '0');
        if (v > kMaxExponent)
          throw ParseError("exponent out of range", line, fcol);
      }
      exponent = neg ? -v : v;
      if (exponent == 0) throw ParseError("zero exponent", line, fcol);
    }
    if (!Alphabet::valid_name(name))
      throw ParseError("invalid generator token '" + std::string(name) + "'",
                       line, fcol);
    const auto gen = alphabet.index_of(name);
    if (!gen)
      throw ParseError("unknown generator '" + std::string(name) + "'", line,
                       fcol);
    const int sign = exponent > 0 ? 1 : -1;
    const std::int64_t count = exponent > 0 ? exponent : -exponent;
    for (std::int64_t k = 0; k < count; ++k) out.emplace_back(*gen, sign);

    if (star == body.size()) break;
    pos = star + 1;
  }
  return Word(std::move(out));
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& [letter, run] : syllables(w)) {
    if (!first) out += '*';
    first = false;
    out += alphabet.name(letter.gen);
    const std::int64_t e =
        static_cast<std::int64_t>(run) * (letter.sign > 0 ? 1 : -1);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace scancel
