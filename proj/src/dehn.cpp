#include "scancel/dehn.hpp"

#include <algorithm>

namespace scancel {

VerificationError::VerificationError(PieceReport report,
                                     const Alphabet& alphabet)
    : std::runtime_error(
          report.violation
              ? "presentation fails C'" + to_string(report.lambda) +
                    ": piece '" + to_string(report.violation->piece, alphabet) +
                    "' shared by '" +
                    to_string(report.violation->member, alphabet) + "' and '" +
                    to_string(report.violation->partner, alphabet) + "'"
              : "presentation fails C'" + to_string(report.lambda)),
      report_(std::move(report)) {}

VerifiedPresentation verify(const Presentation& p) {
  SymmetrizedSet s = symmetrize(p);
  PieceReport cert = check_c_prime_on(p, s, Rational(1, 6));
  if (!cert.holds) throw VerificationError(std::move(cert), p.alphabet);
  VerifiedPresentation vp{p, std::move(s), std::move(cert), {}};
  for (std::size_t i = 0; i < vp.symmetrized.members.size(); ++i)
    vp.first_letter_index[vp.symmetrized.members[i][0]].push_back(i);
  return vp;
}

namespace {

struct Match {
  std::size_t length = 0;
  std::size_t position = 0;
  std::size_t member = 0;
  bool found = false;
};

// Longest-match / lowest-position / lowest-member scan over the cyclic word.
Match find_over_half_match(const Word& w, const VerifiedPresentation& vp) {
  Match best;
  const std::size_t n = w.size();
  const auto& members = vp.symmetrized.members;
  for (std::size_t pos = 0; pos < n; ++pos) {
    const auto bucket = vp.first_letter_index.find(w[pos]);
    if (bucket == vp.first_letter_index.end()) continue;
    for (const std::size_t mi : bucket->second) {
      const Word& m = members[mi];
      const std::size_t cap = std::min(n, m.size());
      if (2 * cap <= m.size()) continue;
      std::size_t l = 0;
      while (l < cap && w[(pos + l) % n] == m[l]) ++l;
      if (2 * l > m.size() && l > best.length)
        best = Match{l, pos, mi, true};
    }
  }
  return best;
}

void record(std::vector<DehnStep>* steps, DehnStep step) {
  if (steps) steps->push_back(std::move(step));
}

// Leftmost-pair free cancellation, then rotate-and-cancel for the ends;
// every mutation is emitted as a replayable step.
void reduce_cyclically_traced(Word& w, std::vector<DehnStep>* steps) {
  for (;;) {
    bool cancelled = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].inverse_of(w[i + 1])) {
        record(steps, DehnStep{DehnStep::Kind::FreeCancel, i,
                               Word({w[i], w[i + 1]}), Word{}, std::nullopt});
        w.letters.erase(w.letters.begin() + i, w.letters.begin() + i + 2);
        cancelled = true;
        break;
      }
    }
    if (cancelled) continue;
    if (w.size() >= 2 && w.letters.front().inverse_of(w.letters.back())) {
      record(steps, DehnStep{DehnStep::Kind::CyclicRotate, 1, Word{}, Word{},
                             std::nullopt});
      w = rotated(w, 1);
      continue;
    }
    break;
  }
}

}  // namespace

std::optional<Word> dehn_step(const Word& w, const VerifiedPresentation& vp,
                              std::vector<DehnStep>* steps) {
  if (!is_cyclically_reduced(w))
    throw std::invalid_argument("dehn_step: word must be cyclically reduced");
  if (w.empty()) return std::nullopt;
  const Match m = find_over_half_match(w, vp);
  if (!m.found) return std::nullopt;

  Word cur = w;
  if (m.position > 0) {
    record(steps, DehnStep{DehnStep::Kind::CyclicRotate, m.position, Word{},
                           Word{}, std::nullopt});
    cur = rotated(cur, m.position);
  }
  const Word& member = vp.symmetrized.members[m.member];
  Word removed(std::vector<Letter>(member.letters.begin(),
                                   member.letters.begin() + m.length));
  Word remainder(std::vector<Letter>(member.letters.begin() + m.length,
                                     member.letters.end()));
  Word inserted = visual_inverse(remainder);
  record(steps, DehnStep{DehnStep::Kind::RelatorReplace, 0, removed, inserted,
                         m.member});
  Word next = concat(inserted,
                     Word(std::vector<Letter>(cur.letters.begin() + m.length,
                                              cur.letters.end())));
  reduce_cyclically_traced(next, steps);
  if (next.size() >= w.size())
    throw std::logic_error("dehn_step: replacement did not shorten the word");
  return next;
}

DehnTrace is_trivial(const Word& w, const VerifiedPresentation& vp) {
  DehnTrace trace;
  trace.initial = w;
  Word cur = w;
  reduce_cyclically_traced(cur, &trace.steps);
  while (!cur.empty()) {
    auto next = dehn_step(cur, vp, &trace.steps);
    if (!next) break;
    ++trace.replace_steps;
    if (trace.replace_steps > w.size() + 1)
      throw std::logic_error("is_trivial: step budget exceeded");
    cur = std::move(*next);
  }
  trace.final_word = cur;
  trace.trivial = cur.empty();
  return trace;
}

Word replay_trace(const DehnTrace& trace, const SymmetrizedSet* s) {
  Word w = trace.initial;
  for (const DehnStep& step : trace.steps) {
    switch (step.kind) {
      case DehnStep::Kind::CyclicRotate:
        if (step.position == 0 || step.position > w.size())
          throw std::logic_error("replay: bad rotation offset");
        w = rotated(w, step.position);
        break;
      case DehnStep::Kind::FreeCancel: {
        if (step.position + 2 > w.size() || step.removed.size() != 2)
          throw std::logic_error("replay: bad cancellation position");
        const Letter a = w[step.position];
        const Letter b = w[step.position + 1];
        if (!a.inverse_of(b) || Word({a, b}) != step.removed)
          throw std::logic_error("replay: cancellation pair mismatch");
        w.letters.erase(w.letters.begin() + step.position,
                        w.letters.begin() + step.position + 2);
        break;
      }
      case DehnStep::Kind::RelatorReplace: {
        const std::size_t len = step.removed.size();
        if (step.position + len > w.size())
          throw std::logic_error("replay: replacement out of range");
        if (!std::equal(step.removed.letters.begin(),
                        step.removed.letters.end(),
                        w.letters.begin() + step.position))
          throw std::logic_error("replay: removed subword mismatch");
        const Word member =
            concat(step.removed, visual_inverse(step.inserted));
        if (2 * len <= member.size())
          throw std::logic_error("replay: match is not over half the member");
        if (s) {
          const auto idx = s->index_of(member);
          if (!idx)
            throw std::logic_error(
                "replay: replacement member not in the symmetrized set");
          if (step.member_index && *step.member_index != *idx)
            throw std::logic_error("replay: member index mismatch");
        }
        std::vector<Letter> out(w.letters.begin(),
                                w.letters.begin() + step.position);
        out.insert(out.end(), step.inserted.letters.begin(),
                   step.inserted.letters.end());
        out.insert(out.end(), w.letters.begin() + step.position + len,
                   w.letters.end());
        w = Word(std::move(out));
        break;
      }
    }
  }
  if (w != trace.final_word)
    throw std::logic_error("replay: final word mismatch");
  if (trace.trivial != w.empty())
    throw std::logic_error("replay: verdict mismatch");
  return w;
}

nlohmann::ordered_json to_json(const DehnTrace& t,
                               const VerifiedPresentation& vp) {
  const Alphabet& a = vp.presentation.alphabet;
  nlohmann::ordered_json j;
  j["initial"] = to_string(t.initial, a);
  j["final"] = to_string(t.final_word, a);
  j["trivial"] = t.trivial;
  j["replace_steps"] = t.replace_steps;
  auto steps = nlohmann::ordered_json::array();
  for (const DehnStep& s : t.steps) {
    nlohmann::ordered_json js;
    switch (s.kind) {
      case DehnStep::Kind::FreeCancel:
        js["kind"] = "free-cancel";
        break;
      case DehnStep::Kind::CyclicRotate:
        js["kind"] = "cyclic-rotate";
        break;
      case DehnStep::Kind::RelatorReplace:
        js["kind"] = "relator-replace";
        break;
    }
    js["position"] = s.position;
    js["removed"] = to_string(s.removed, a);
    js["inserted"] = to_string(s.inserted, a);
    if (s.member_index) {
      const Origin& o = vp.symmetrized.origins[*s.member_index];
      js["member_origin"] = {
          {"relator", o.relator},
          {"shift", o.shift},
          {"inverted", o.inverted},
          {"member",
           to_string(vp.symmetrized.members[*s.member_index], a)}};
    } else {
      js["member_origin"] = nullptr;
    }
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

}  // namespace scancel
