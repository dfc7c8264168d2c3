#pragma once

#include "kashina/yd.hpp"

namespace kashina {

// A braided vector space: an invertible solution of the braid equation on V (x) V.
struct BraidedSpace {
  int dim = 0;
  Mat c;  // d^2 x d^2
  std::string label;
};

BraidedSpace braided_space(const YDModule& v);       // braiding of a YD module
std::vector<CheckRecord> verify_braided(const BraidedSpace& b);  // invertible + braid equation

// Matsumoto lift of a permutation (one-line notation, 0-based): the product of
// adjacent braidings c_i along any reduced word; well-defined by the braid equation.
Mat braided_lift(const std::vector<int>& perm, const BraidedSpace& b);

// S_n = sum of braided lifts over Sym(n); rank of S_n = dim B(V)_n. Guarded by a
// cap on d^n (default 4096); exact ranks are computed densely up to 1024 columns,
// larger symmetrizers can only be certified zero.
Mat quantum_symmetrizer(int n, const BraidedSpace& b, long cap = 4096);

// S_n applied to a single tensor, without materializing the matrix
Vec apply_symmetrizer(int n, const BraidedSpace& b, const Vec& tensor);

struct HilbertPrefix {
  std::vector<long> dims;  // dims[n] = dim B(V)_n, n = 0..maxdeg
  bool certified_finite = false;  // some prefix entry is 0 (all later degrees vanish)
};
HilbertPrefix hilbert_prefix(const BraidedSpace& b, int maxdeg, long cap = 4096);
HilbertPrefix hilbert_prefix(const YDModule& v, int maxdeg, long cap = 4096);

// kernel basis of the degree-2 symmetrizer: the quadratic relations of B(V)
std::vector<Vec> quadratic_relations(const BraidedSpace& b);

// do the claimed degree-2 relations span exactly ker S_2?
bool quadratic_relations_match(const BraidedSpace& b, const std::vector<Vec>& claimed);

// nonzero v with c(v (x) v) = v (x) v. Search space: standard basis vectors,
// eigenvectors of the x-action, unit combinations of basis pairs; for dim 2 the
// line v1 + gamma v2 is solved exactly over Q(i), so absence is decisive there.
std::optional<Vec> eigenvalue_one_witness(const YDModule& v);

// c_{W,V} c_{V,W} = id on V (x) W: the two-factor condition for
// B(V + W) = B(V) (x) B(W)
bool pair_factorization(const YDModule& v, const YDModule& w);

// if c(e_i (x) e_j) = q_ij e_j (x) e_i on the standard basis, the matrix (q_ij)
std::optional<Mat> diagonal_data(const YDModule& v);

}  // namespace kashina
