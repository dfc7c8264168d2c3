#pragma once

#include "kashina/drinfeld.hpp"

namespace kashina {

// A Yetter-Drinfeld module over H: an H-action (matrices for x, y, t satisfying
// the relations of H) together with an H-coaction delta: V -> H (x) V stored as a
// (16 d) x d matrix, row h*d + i holding the coefficient of h (x) v_i in delta(v_j).
struct YDModule {
  int dim = 0;
  std::array<Mat, 3> act;  // x, y, t
  Mat coaction;
  std::string label;

  GaussRat co(int h, int i, int j) const { return coaction.at(h * dim + i, j); }
  Mat act_monomial(int h_idx) const;  // action of the basis monomial x^e y^f t^g
};

std::vector<CheckRecord> verify_yd(const YDModule& v);

// Restriction of a D-module along H + dual-basis coaction; lands in the same
// basis as the catalog tables.
YDModule from_double_rep(const GenRep& r);

// The explicit action/coaction tables for the catalog: one- and two-dimensional
// simples by label, the named modules M1..M20 and V1..V8 (here "Vk" means the
// one-dimensional module k_{chi}), and the fixed direct sums Omega14..Omega49.
YDModule catalog_yd(const SimpleLabel& label);
YDModule catalog_yd(const std::string& tag);
std::vector<std::string> catalog_tags();  // Chi over all tuples, V/W/U labels, M1..M20, V1..V8

SimpleLabel m_label(int k);        // M_1..M_20 as V/W/U labels
SimpleLabel v1_v8_label(int k);    // V_1..V_8 as character labels
std::pair<int, int> omega_pair(int n);  // Omega_14..Omega_49 as (M_a, M_b)

// c_{V,W}(v (x) w) = v_(-1) w (x) v_(0), as a (dW dV) x (dV dW) matrix with
// column j*dW + k <-> v_j (x) w_k and row l*dV + i <-> w_l (x) v_i.
Mat braiding(const YDModule& v, const YDModule& w);

bool verify_braid_equation(const YDModule& v);

// twisted module V^psi along the k-th automorphism: h .v = psi(h)v,
// delta = (psi^-1 (x) id) delta
YDModule twist(const YDModule& v, int autk);

// intertwiner for action and coaction simultaneously, invertible; echelon-first
// among the solutions, deterministic
std::optional<Mat> yd_iso(const YDModule& v, const YDModule& w);

YDModule direct_sum(const std::vector<YDModule>& parts);

std::vector<CheckRecord> yd_suite();  // catalog consistency + braiding scalars + braid equations

}  // namespace kashina
