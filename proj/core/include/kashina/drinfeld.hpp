#pragma once

#include <array>

#include "kashina/hopf_h.hpp"

namespace kashina {

// The Drinfeld double D = D(H^cop), a 256-dimensional Hopf algebra on the basis
// e^u (x) e_a (dual monomial times H monomial, index 16*u + a). The dual side
// carries the opposite convolution product, so a,b,c,d satisfy the relations of
// H^{*bop}; x,y,t generate a copy of H^cop; the twelve cross relations
// (xd = bcdx, tb = bx^2t, td = adyt, ...) tie them together.

int d_index(int u, int a);

FDHopf build_double();

// Generators of D as coordinate vectors: the dual generators a,b,c,d extended by
// zero to the dual side, and x,y,t embedded as eps (x) x^e y^f t^g.
struct DoubleGenerators {
  Vec x, y, t, a, b, c, d;
};
DoubleGenerators double_generators(const FDHopf& dbl);

// Relation table of D in the seven generators (0..6 = x,y,t,a,b,c,d): each entry
// is a name plus two words whose products must agree.
struct DoubleRelation {
  std::string name;
  std::vector<int> lhs, rhs;
};
const std::vector<DoubleRelation>& double_relations();

// All relations of the presentation of D, the PBW basis certificate and the
// embedding checks, verified inside build_double().
std::vector<CheckRecord> verify_double_presentation(const FDHopf& dbl);

// The 16 dual-side PBW products a^i b^j c^k d^l (double multiplication order),
// as functionals on H; index i + 2j + 4k + 8l. Linearly independent.
std::vector<Vec> dual_pbw_functionals();

// ---- simple modules --------------------------------------------------------

struct SimpleLabel {
  enum class Family { Char, V, W, U };
  Family family;
  std::array<int, 6> idx;  // i,j,k,l[,m,n]
  std::string str() const;
};

SimpleLabel char_label(int i, int j, int k, int l);
SimpleLabel v_label(int i, int j, int k, int l, int m, int n);
SimpleLabel w_label(int i, int j, int k, int l);
SimpleLabel u_label(int i, int j, int k, int l);

// Canonical index-set membership: Char ranges, Omega = Omega^1 u Omega^2 for V,
// Lambda^1 for W (i = 1), Lambda^2 for U (i = 1).
bool label_in_range(const SimpleLabel& label);

// matrices for the seven generators x,y,t,a,b,c,d
struct GenRep {
  int dim = 0;
  std::array<Mat, 7> gen;
  std::string label;

  Mat eval_word(const std::vector<int>& word) const;
};

// The catalog module for a label; throws on labels outside the canonical index
// sets. simple_module_template builds from the same matrix templates without
// range validation (used for the redundancy spot-checks, e.g. W with i = 3).
GenRep simple_module(const SimpleLabel& label);
GenRep simple_module_template(const SimpleLabel& label);

std::vector<CheckRecord> verify_rep(const GenRep& r);

// true iff the commutant of the seven generator matrices is one-dimensional
bool is_simple(const GenRep& r);

// character test over the 256 PBW monomials of D (valid because D is semisimple)
Vec character_vector(const GenRep& r);
bool are_isomorphic(const GenRep& r1, const GenRep& r2);

std::vector<SimpleLabel> all_simple_labels();  // 32 Char + 24 V + 16 W + 16 U

struct CensusEntry {
  SimpleLabel label;
  int dim;
  bool relations_ok;
  bool simple;
  size_t character_hash;
};
struct CensusResult {
  std::vector<CensusEntry> entries;
  std::vector<CheckRecord> records;
};
CensusResult census();

}  // namespace kashina
