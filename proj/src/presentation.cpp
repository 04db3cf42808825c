#include "scancel/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace scancel {

void validate(const Presentation& p) {
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    const Word& r = p.relators[i];
    if (r.empty())
      throw std::invalid_argument("presentation: relator " +
                                  std::to_string(i) + " is empty");
    if (!is_cyclically_reduced(r))
      throw std::invalid_argument("presentation: relator " +
                                  std::to_string(i) +
                                  " is not cyclically reduced");
    for (const Letter& l : r.letters)
      if (l.gen >= p.alphabet.size())
        throw std::invalid_argument("presentation: relator " +
                                    std::to_string(i) +
                                    " uses a generator outside the alphabet");
  }
}

std::optional<std::size_t> SymmetrizedSet::index_of(const Word& w) const {
  const auto it = std::lower_bound(members.begin(), members.end(), w);
  if (it == members.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

SymmetrizedSet symmetrize(const Presentation& p) {
  validate(p);
  std::map<Word, std::pair<Origin, std::optional<Origin>>> acc;
  for (std::uint32_t i = 0; i < p.relators.size(); ++i) {
    for (const bool inverted : {false, true}) {
      const Word base =
          inverted ? visual_inverse(p.relators[i]) : p.relators[i];
      for (std::uint32_t s = 0; s < base.size(); ++s) {
        Word member = rotated(base, s);
        const Origin origin{i, s, inverted};
        auto [it, inserted] =
            acc.try_emplace(std::move(member), origin, std::nullopt);
        if (!inserted && !it->second.second) it->second.second = origin;
      }
    }
  }
  SymmetrizedSet out;
  out.members.reserve(acc.size());
  out.origins.reserve(acc.size());
  out.extra_origins.reserve(acc.size());
  for (auto& [word, origin] : acc) {
    out.members.push_back(word);
    out.origins.push_back(origin.first);
    out.extra_origins.push_back(origin.second);
  }
  return out;
}

ConciseReport is_concise(const Presentation& p) {
  validate(p);
  std::vector<std::set<Word>> closures(p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    for (const Word& s : cyclic_shifts(p.relators[i])) closures[i].insert(s);
    for (const Word& s : cyclic_shifts(visual_inverse(p.relators[i])))
      closures[i].insert(s);
  }
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (std::size_t j = i + 1; j < p.relators.size(); ++j)
      if (closures[i].count(p.relators[j]))
        return ConciseReport{false, std::make_pair(i, j)};
  return ConciseReport{};
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

PresentationParse parse_presentation(std::string_view text) {
  PresentationParse out;
  bool have_gens = false;
  std::vector<std::string> names;
  std::vector<Word> relators;
  Alphabet alphabet;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++line_no;
    const std::size_t line_start = pos;
    pos = eol + 1;
    if (pos > text.size() && eol == text.size() && raw.empty()) break;

    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const auto hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    if (strip(raw).empty()) {
      if (eol == text.size()) break;
      continue;
    }

    const std::string_view content = strip(raw);
    if (content.starts_with("gens:")) {
      if (have_gens)
        throw ParseError("duplicate 'gens:' line", line_no, 1);
      have_gens = true;
      const std::string_view rest = strip(content.substr(5));
      if (!rest.empty()) {
        std::size_t p0 = 0;
        while (p0 <= rest.size()) {
          std::size_t comma = rest.find(',', p0);
          if (comma == std::string_view::npos) comma = rest.size();
          const std::string_view tok = strip(rest.substr(p0, comma - p0));
          if (tok.empty())
            throw ParseError("empty generator name", line_no, 1);
          names.emplace_back(tok);
          if (comma == rest.size()) break;
          p0 = comma + 1;
        }
      }
      try {
        alphabet = Alphabet(names);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line_no, 1);
      }
    } else if (content.starts_with("rel:")) {
      if (!have_gens)
        throw ParseError("'rel:' before 'gens:' line", line_no, 1);
      const std::size_t rel_off = raw.find("rel:") + 4;
      const std::string_view body = raw.substr(rel_off);
      const std::size_t col_off =
          raw.data() - (text.data() + line_start) + rel_off;
      const Word parsed = parse_word(body, alphabet, line_no, col_off);
      const Word reduced = cyclic_reduce(parsed);
      if (reduced.empty())
        throw ParseError("relator reduces to the empty word", line_no,
                         col_off + 1);
      if (reduced != parsed)
        out.warnings.push_back(
            "line " + std::to_string(line_no) + ": relator normalized to '" +
            to_string(reduced, alphabet) + "'");
      relators.push_back(reduced);
    } else {
      throw ParseError("expected 'gens:' or 'rel:' line", line_no, 1);
    }
    if (eol == text.size()) break;
  }

  if (!have_gens) throw ParseError("missing 'gens:' line", line_no, 1);
  out.presentation = Presentation{std::move(alphabet), std::move(relators)};
  validate(out.presentation);
  return out;
}

std::string serialize_presentation(const Presentation& p) {
  std::string out = "gens:";
  for (std::size_t i = 0; i < p.alphabet.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += p.alphabet.name(static_cast<std::uint32_t>(i));
  }
  out += '\n';
  for (const Word& r : p.relators)
    out += "rel: " + to_string(r, p.alphabet) + "\n";
  return out;
}

nlohmann::ordered_json to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["gens"] = p.alphabet.names();
  auto rels = nlohmann::ordered_json::array();
  for (const Word& r : p.relators) rels.push_back(to_string(r, p.alphabet));
  j["relators"] = std::move(rels);
  return j;
}

nlohmann::ordered_json to_json(const SymmetrizedSet& s, const Alphabet& a) {
  nlohmann::ordered_json j;
  j["count"] = s.members.size();
  auto members = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    nlohmann::ordered_json m;
    m["word"] = to_string(s.members[i], a);
    m["origin"] = {{"relator", s.origins[i].relator},
                   {"shift", s.origins[i].shift},
                   {"inverted", s.origins[i].inverted}};
    members.push_back(std::move(m));
  }
  j["members"] = std::move(members);
  return j;
}

}  // namespace scancel
