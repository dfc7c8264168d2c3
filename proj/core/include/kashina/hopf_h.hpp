#pragma once

#include <array>

#include "kashina/fdhopf.hpp"

namespace kashina {

// The 16-dimensional semisimple Hopf algebra H_{b:1}: generators x, y, t with
//   x^4 = y^2 = t^2 = 1, xy = yx, ty = yt, tx = x^-1 t,
//   Delta(x) = x(x)x, Delta(y) = y(x)y,
//   Delta(t) = 1/2[(1+y)t (x) t + (1-y)t (x) x^2 t].
// Basis monomials x^e y^f t^g indexed e + 4f + 8g.

int h_index(int e, int f, int g);
std::array<int, 3> h_exps(int idx);
std::string h_label(int idx);
int h_mul_index(int i, int j);  // the basis monomials form a group
int h_inv_index(int i);

FDHopf build_h();

// Images of the explicit dual-basis combinations a, b, c, d from the dual of H,
// as coordinate vectors in the dual basis: a(x^e y^f t^g) = (-1)^e,
// b = (-1)^f, c = (-1)^(f+g), d = xi^e.
struct DualGenerators {
  Vec a, b, c, d;
};
DualGenerators build_dual_generators();

// All relations of the dual generators (squares, commutations, d^2 = a, db = cd,
// dc = bd) and their comultiplications, verified inside dual(build_h()).
std::vector<CheckRecord> verify_dual_generators();

// Hopf algebra automorphisms of H, 1-indexed k = 1..32: x -> x^a y^b (a odd),
// y -> y, t -> x^c y^d t, one row per table entry. Each is a permutation of the
// monomial basis.
inline constexpr int kAutomorphismCount = 32;
Mat automorphism_matrix(int k);

// Each table entry is bijective, an algebra map and a coalgebra map; pairwise
// distinct; closed under composition (a group of order 32).
std::vector<CheckRecord> verify_automorphisms();

std::vector<CheckRecord> verify_h_suite();  // everything above plus grouplike/skew-primitive counts

}  // namespace kashina
