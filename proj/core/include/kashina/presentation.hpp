#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "kashina/gaussrat.hpp"

namespace kashina {

enum class GenKind { HLetter, YdLetter };

struct GeneratorSymbol {
  std::string name;
  GenKind kind = GenKind::YdLetter;
  int sub = 0;  // for H letters: 0 = x, 1 = y, 2 = t
};

using Word = std::vector<uint8_t>;  // generator indices

struct Term {
  GaussRat coeff;
  Word word;
};

// linear combination of words, canonical: strictly descending in the word order,
// no zero coefficients
struct Poly {
  std::vector<Term> terms;
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Poly& o) const;
};

struct RewriteRule {
  Word lhs;
  Poly rhs;
  std::string name;
};

// Free algebra presentation with a fixed monomial order. The order is graded by
// the number of yd letters first (so deformation terms in the H part always sit
// below quadratic leading words), then by H-letter mass to the left of yd
// letters, the yd subsequence, an x/t interleaving measure, and counting
// tie-breaks; every rule must be strictly decreasing under it.
struct Presentation {
  std::vector<GeneratorSymbol> gens;
  std::vector<RewriteRule> rules;

  int find_gen(const std::string& name) const;
  std::string word_str(const Word& w) const;

  bool word_less(const Word& a, const Word& b) const;
  bool rule_decreasing(const RewriteRule& r) const;

  Poly make_poly(std::vector<Term> terms) const;  // canonicalize
  Poly poly_add(const Poly& a, const Poly& b) const;
  Poly poly_scale(const Poly& a, const GaussRat& c) const;
  Poly poly_mul(const Poly& a, const Poly& b) const;  // concatenation, no reduction
};

// reduction strategy: deterministic leftmost-lowest-rule, or seeded random redex
struct ReduceOptions {
  std::mt19937* rng = nullptr;
  long step_cap = 40'000'000;
};

Poly normal_form(const Poly& input, const Presentation& p, const ReduceOptions& opts = {});

struct Ambiguity {
  int rule_a, rule_b;
  int position;   // offset of lhs_b inside the overlap word
  Word overlap;
  Poly difference;  // normal form of (route a) - (route b); nonzero = unresolved
};

// every overlap of two rule left-hand sides reduced both ways; an empty result
// means all ambiguities resolve and the normal words form a basis
std::vector<Ambiguity> check_confluence(const Presentation& p);

// Orient unresolved ambiguity differences into new (decreasing) rules until
// confluent or the budget runs out; the ideal is unchanged. Returns the names of
// added rules.
std::vector<std::string> complete_presentation(Presentation& p, int max_new_rules = 64);

// all normal words, sorted by length then lexicographically; throws
// std::length_error("exceeds cap") when the count passes the cap
std::vector<Word> enumerate_basis(const Presentation& p, long cap);

// exact multiplication tensor over the normal-word basis
struct StructureConstants {
  std::vector<Word> basis;
  std::vector<int> parent;       // basis index of the word minus its last letter
  std::vector<std::vector<std::vector<std::pair<int, GaussRat>>>> mult;
};
StructureConstants structure_constants(const Presentation& p, long cap);

std::string presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const std::string& text);

}  // namespace kashina
