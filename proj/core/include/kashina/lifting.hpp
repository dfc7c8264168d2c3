#pragma once

#include <map>

#include "kashina/fdhopf.hpp"
#include "kashina/nichols.hpp"
#include "kashina/presentation.hpp"

namespace kashina {

// A presented Hopf algebra: a rewriting presentation plus comultiplication and
// counit data on the generators. The comultiplication entries are (left word,
// right word, coeff) with the right word a single letter or empty.
struct PresentedHopf {
  std::string name;
  Presentation pres;
  std::vector<std::vector<std::tuple<Word, Word, GaussRat>>> comult;  // per generator
  std::vector<GaussRat> counit;                                       // per generator
  long expected_dim = -1;
  std::vector<std::string> notes;  // completion rules added, symmetrized inputs, ...
};

// staged checks: rules decreasing, confluence, basis count, Delta and eps extend
// to algebra maps, coassociativity and counit on generators, antipode for
// dim <= antipode_dim_limit (full extraction + both antipode identities)
std::vector<CheckRecord> verify_presented_hopf(const PresentedHopf& u, long antipode_dim_limit = 64);

// full structure constants; attaches the antipode (generator-triangular solve,
// verified by the caller via verify_hopf_axioms) and a generator certificate
FDHopf extract_fdhopf(const PresentedHopf& u, long cap = 4096);

// ---- lifting families -------------------------------------------------------

struct LiftingSpec {
  int family = 14;                 // 1, 2, 4, 5, 8, 14..29 (25 has no parameters)
  std::vector<int> mult;           // 8 entries for family 1; 4 for families 2,4,5,8; else empty
  std::map<std::string, std::vector<GaussRat>> params;
  std::string str() const;
};

// parameter names and shapes for a family ("n*n" matrices, "n" vectors, "1" scalars)
std::vector<std::pair<std::string, std::string>> lifting_param_shapes(int family);

long lifting_expected_dim(const LiftingSpec& spec);
LiftingSpec zero_spec(int family, std::vector<int> mult = {});

PresentedHopf build_lifting(const LiftingSpec& spec);

// the infinitesimal braiding of the family at zero parameters, basis aligned
// with the Definition's generators (including the basis rescales/swaps baked
// into the printed comultiplication tables)
YDModule family_module(const LiftingSpec& spec);

// Radford biproduct B(V) # H as a presented Hopf algebra: smash cross relations,
// quadratic Nichols relations from ker S_2 (completed where needed), coproduct
// from the coaction. Requires a certified-finite Nichols algebra.
PresentedHopf bosonize_presented(const YDModule& v, const std::vector<std::string>& letter_names);
FDHopf bosonize(const YDModule& v, long cap = 4096);

// zero-parameter lifting and the bosonization of its family module agree as
// structure constants under the generator correspondence
std::vector<CheckRecord> degeneration_check(int family, std::vector<int> mult = {});

// generator-image data for an isomorphism candidate A -> B
struct IsoWitness {
  int tau = 1;                                    // automorphism index for the H part
  std::map<std::string, Poly> images;             // per yd generator name of A, a poly in B's letters
};
// builds Phi from the witness, checks relations map to zero, Delta and eps
// compatibility on generators, and bijectivity; returns the named stages
std::vector<CheckRecord> iso_from_witness(const LiftingSpec& a, const LiftingSpec& b, const IsoWitness& w);

// JSON helpers for the CLI (params files and witness files)
LiftingSpec lifting_spec_from_json(const std::string& text);
std::string lifting_spec_to_json(const LiftingSpec& spec);
IsoWitness iso_witness_from_json(const std::string& text, const Presentation& target);

}  // namespace kashina
