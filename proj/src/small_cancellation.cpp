#include "scancel/small_cancellation.hpp"

#include <algorithm>

namespace scancel {

namespace {

std::size_t lcp(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

Word prefix(const Word& w, std::size_t len) {
  return Word(
      std::vector<Letter>(w.letters.begin(), w.letters.begin() + len));
}

}  // namespace

PieceTable max_common_prefix_table(const SymmetrizedSet& s) {
  const auto& m = s.members;
  const std::size_t k = m.size();
  PieceTable t{std::vector<std::size_t>(k, 0), std::vector<std::size_t>(k, 0)};
  if (k == 0) return t;
  if (k == 1) {
    t.partner[0] = 0;
    return t;
  }
  std::vector<std::size_t> adj(k - 1);
  for (std::size_t i = 0; i + 1 < k; ++i) adj[i] = lcp(m[i], m[i + 1]);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t prev = i > 0 ? adj[i - 1] : 0;
    const std::size_t next = i + 1 < k ? adj[i] : 0;
    if (i > 0 && prev >= next) {
      t.piece_length[i] = prev;
      t.partner[i] = i - 1;
    } else {
      t.piece_length[i] = next;
      t.partner[i] = i + 1 < k ? i + 1 : i - 1;
    }
  }
  return t;
}

PieceReport check_c_prime_on(const Presentation& p, const SymmetrizedSet& s,
                             const Rational& lambda) {
  if (lambda.num <= 0 || Rational(1, 1) < lambda)
    throw std::invalid_argument("check_c_prime: lambda must be in (0,1]");
  PieceReport r;
  r.lambda = lambda;
  PieceTable table = max_common_prefix_table(s);
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    if (s.extra_origins[i]) {
      table.piece_length[i] = s.members[i].size();
      table.partner[i] = i;
    }
  }

  r.per_relator.resize(p.relators.size());
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    r.per_relator[i].relator_index = i;
    r.per_relator[i].relator_length = p.relators[i].size();
  }

  std::optional<std::size_t> worst;  // member index of the largest ratio
  for (std::size_t i = 0; i < s.members.size(); ++i) {
    const std::size_t len = table.piece_length[i];
    const std::size_t mlen = s.members[i].size();
    r.max_piece_length = std::max(r.max_piece_length, len);
    const Rational ratio(static_cast<std::int64_t>(len),
                         static_cast<std::int64_t>(mlen));
    if (r.max_ratio < ratio) r.max_ratio = ratio;
    if (!worst ||
        Rational(static_cast<std::int64_t>(table.piece_length[*worst]),
                 static_cast<std::int64_t>(s.members[*worst].size())) <
            ratio)
      worst = i;

    // lowest member index wins ties, so only strict improvements update
    auto& stat = r.per_relator[s.origins[i].relator];
    if (stat.witness_partner.empty() || len > stat.max_piece_length) {
      stat.max_piece_length = len;
      stat.witness_piece = prefix(s.members[i], len);
      stat.witness_partner = s.members[table.partner[i]];
    }

    // strict inequality |X| < lambda * |R|, cross-multiplied
    if (static_cast<std::int64_t>(len) * lambda.den >=
        lambda.num * static_cast<std::int64_t>(mlen))
      r.holds = false;
  }

  if (!r.holds && worst) {
    r.violation = PieceViolation{
        s.members[*worst], prefix(s.members[*worst], table.piece_length[*worst]),
        s.members[table.partner[*worst]]};
  }
  return r;
}

PieceReport check_c_prime(const Presentation& p, const Rational& lambda) {
  return check_c_prime_on(p, symmetrize(p), lambda);
}

AsphericityPreconditions check_singular_asphericity_preconditions(
    const Presentation& p) {
  AsphericityPreconditions out;
  out.c_prime_one_fifth = check_c_prime(p, Rational(1, 5)).holds;
  out.concise = is_concise(p).concise;
  out.no_proper_powers =
      std::all_of(p.relators.begin(), p.relators.end(),
                  [](const Word& r) { return !is_proper_power(r); });
  out.all = out.c_prime_one_fifth && out.concise && out.no_proper_powers;
  out.torsion_free = out.all;
  out.hyperbolic = out.all && check_c_prime(p, Rational(1, 6)).holds;
  return out;
}

nlohmann::ordered_json to_json(const PieceReport& r, const Alphabet& a) {
  nlohmann::ordered_json j;
  j["lambda"] = to_string(r.lambda);
  j["holds"] = r.holds;
  j["max_piece_length"] = r.max_piece_length;
  j["max_ratio"] = to_string(r.max_ratio);
  auto per = nlohmann::ordered_json::array();
  for (const auto& s : r.per_relator) {
    per.push_back({{"relator", s.relator_index},
                   {"length", s.relator_length},
                   {"max_piece", s.max_piece_length},
                   {"witness_piece", to_string(s.witness_piece, a)},
                   {"witness_partner", to_string(s.witness_partner, a)}});
  }
  j["per_relator"] = std::move(per);
  if (r.violation) {
    j["violation"] = {{"member", to_string(r.violation->member, a)},
                      {"piece", to_string(r.violation->piece, a)},
                      {"partner", to_string(r.violation->partner, a)}};
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

nlohmann::ordered_json to_json(const AsphericityPreconditions& a) {
  return {{"c_prime_one_fifth", a.c_prime_one_fifth},
          {"concise", a.concise},
          {"no_proper_powers", a.no_proper_powers},
          {"all", a.all},
          {"torsion_free", a.torsion_free},
          {"hyperbolic", a.hyperbolic}};
}

}  // namespace scancel
