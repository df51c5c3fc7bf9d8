// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "modgin/borel.hpp"
#include "modgin/reproduce.hpp"
#include "oracles.hpp"

using namespace modgin;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from_claims(const std::vector<std::string>& ids) {
  ReproduceOptions opts;
  for (const auto& id : ids) {
    auto r = run_claim(id, opts);
    if (!r.pass) return {false, id + ": " + r.detail};
  }
  return {true, ""};
}

// Lex segment of degree d in three variables: Borel-fixed in every
// characteristic.
std::vector<Monomial> lex_segment(unsigned d, std::size_t keep) {
  std::vector<Monomial> out;
  for (unsigned a = d + 1; a-- > 0;)
    for (unsigned b = d - a + 1; b-- > 0;) {
      if (out.size() == keep) return out;
      Monomial m(3);
      m.set(0, a);
      m.set(1, b);
      m.set(2, d - a - b);
      out.push_back(m);
    }
  return out;
}

Outcome borel_against_f2_oracle() {
  auto ring = RingContext::standard(3, Field::prime(2));
  MonomialOrder lex(OrderKind::lex, 3);
  Rng rng(909);
  unsigned fixed = 0;
  for (int k = 0; k < 500; ++k) {
    std::vector<Monomial> gens;
    if (k % 2) {
      unsigned d = 1 + static_cast<unsigned>(uniform_below(rng, 4));
      gens = lex_segment(d, 1 + uniform_below(rng, (d + 1) * (d + 2) / 2));
    } else {
      for (std::size_t g = 0, ng = 1 + uniform_below(rng, 4); g < ng; ++g) {
        Monomial m(3);
        for (std::size_t v = 0; v < 3; ++v) m.set(v, static_cast<unsigned>(uniform_below(rng, 4)));
        if (m.degree() == 0) m.set(0, 1);
        gens.push_back(m);
      }
    }
    MonomialIdeal ideal(ring, gens);
    const bool combinatorial = is_borel_fixed(ideal, lex).fixed;
    const bool exhaustive = oracle::borel_fixed_exhaustive_f2(ideal);
    const bool sampled = randomized_borel_check(ideal, lex, 8, 1000 + k, Field::extension(2, 10));
    if (combinatorial != exhaustive || combinatorial != sampled)
      return {false, "Borel tests disagree on " + ideal.to_string()};
    fixed += combinatorial;
  }
  if (fixed == 0 || fixed == 500) return {false, "Borel sample is one-sided"};
  return {true, ""};
}

Outcome transfer_literal_sum() {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    CyclicModule v2(p, {2});
    auto ring = v2.ring();
    const std::string e = std::to_string(p - 1);
    auto f = parse_polynomial("x2^" + e, ring);
    auto expected = parse_polynomial("-x1^" + e, ring);
    std::vector<Polynomial> sigma{parse_polynomial("x1", ring), parse_polynomial("x2 + x1", ring)};
    auto literal = oracle::literal_group_sum(f, sigma, p);
    const MonomialOrder lex(OrderKind::lex, 2);
    if (v2.transfer(f) != expected || literal != expected)
      return {false, "p = " + std::to_string(p) + ": transfer " + v2.transfer(f).to_string(lex) + ", literal sum " +
                         literal.to_string(lex)};
  }
  return {true, ""};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 monomial-case gins", [] { return from_claims({"monomial-gins"}); }},
      {"2 permutation theorem", [] { return from_claims({"permutation-theorem"}); }},
      {"3 V5 generation lemma", [] { return from_claims({"v5-generation"}); }},
      {"4 V5 Groebner lemma", [] { return from_claims({"v5-groebner"}); }},
      {"5 V5 gin theorem", [] { return from_claims({"v5-gin"}); }},
      {"6 V5 at p = 5", [] { return from_claims({"p5-remark"}); }},
      {"7 transfer heredity", [] { return from_claims({"transfer-heredity"}); }},
      {"8 degree-slice oracle", [] { return from_claims({"slice-oracle"}); }},
      {"9 kernel properties",
       [] {
         auto r = from_claims({"kernel-properties"});
         return r.pass ? borel_against_f2_oracle() : r;
       }},
      {"10 derived transfer values",
       [] {
         auto r = from_claims({"derived-transfer"});
         return r.pass ? transfer_literal_sum() : r;
       }},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%-28s %s  %.2fs%s%s\n", name.c_str(), o.pass ? "PASS" : "FAIL", secs, o.pass ? "" : "  ",
                o.detail.c_str());
    failures += !o.pass;
  }
  return failures ? 1 : 0;
}
