#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kashina/mat.hpp"
#include "kashina/report.hpp"

namespace kashina {

// coefficient list, sorted by index, no zero coefficients
using SparseVec = std::vector<std::pair<int, GaussRat>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, int dim);

// A finite-dimensional Hopf algebra as structure constants over a fixed ordered
// basis: e_i e_j = sum_k mult[i][j](k) e_k, Delta(e_k) = sum comult[k] e_i (x) e_j.
// The antipode is optional and always re-verified by verify_hopf_axioms.
struct FDHopf {
  int dim = 0;
  std::vector<std::string> labels;
  std::vector<std::vector<SparseVec>> mult;                      // [i][j] -> e_i e_j
  Vec unit;                                                      // coordinates of 1
  std::vector<std::vector<std::tuple<int, int, GaussRat>>> comult;  // [k] -> terms (i,j,coeff)
  Vec counit;                                                    // counit functional
  std::optional<Mat> antipode;

  // Optional certificate that a small set of elements generates the algebra,
  // with an ordered factorization of every basis element. Lets the bialgebra
  // axiom be verified on (basis, generator) pairs instead of all basis pairs.
  // comult_pure, when nonempty, lists Delta(gen) as pure tensors L (x) R; for
  // generators that are basis elements the structure tensor already is one.
  struct GenSet {
    std::vector<std::string> names;
    std::vector<Vec> elements;
    std::vector<std::vector<int>> factorization;  // basis index -> generator indices; empty = unit
    std::vector<std::vector<std::tuple<Vec, Vec, GaussRat>>> comult_pure;
  };
  std::optional<GenSet> gens;

  Vec mul(const Vec& a, const Vec& b) const;
  Vec mul_basis(int i, int j) const { return to_dense(mult[i][j], dim); }
  Vec apply_counit_left(int k) const;  // (eps (x) id) Delta(e_k)
  GaussRat eval_counit(const Vec& v) const;
};

// Each axiom checked exactly; on failure the payload carries the first violated
// index tuple. Failures are data, not exceptions.
std::vector<CheckRecord> verify_hopf_axioms(const FDHopf& a, const std::string& suite = "hopf");

FDHopf dual(const FDHopf& a);
FDHopf op(const FDHopf& a);
FDHopf cop(const FDHopf& a);

// Unique S with m(S (x) id)Delta = u eps, found by solving the dim^2 linear system
// (dense; refuses dim > 32 -- presented algebras get their antipode from the
// generator-triangular solve in lifting.cpp). Verified before returning.
std::optional<Mat> solve_antipode(const FDHopf& a);

// All v with Delta(v) = v (x) v and eps(v) = 1, by joint-eigenvector enumeration of
// the coordinate coproduct operators; every candidate is verified exactly.
std::vector<Vec> grouplikes(const FDHopf& a);

struct SkewPrimitiveSpace {
  Vec g, h;
  std::vector<Vec> basis;  // all v with Delta(v) = v (x) g + h (x) v
};
SkewPrimitiveSpace skew_primitive_space(const FDHopf& a, const Vec& g, const Vec& h);

std::string fdhopf_to_json(const FDHopf& a);
FDHopf fdhopf_from_json(const std::string& text);

// Group algebra k[Z_n] with its usual Hopf structure; handy as a test fixture.
FDHopf cyclic_group_algebra(int n);

// Q(i)-roots of a polynomial given by coefficients c[0] + c[1] x + ... (exact,
// via Gaussian-integer divisor enumeration). Used for grouplikes and for the
// braiding fixed-vector search.
std::vector<GaussRat> roots_in_qi(const std::vector<GaussRat>& coeffs);

}  // namespace kashina
