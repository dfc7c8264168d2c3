#include <doctest.h>

#include "kashina/drinfeld.hpp"

using namespace kashina;

TEST_CASE("double is a 256-dimensional Hopf algebra") {
  FDHopf d = build_double();
  CHECK(d.dim == 256);
  for (const auto& r : verify_hopf_axioms(d, "double")) {
    INFO(r.name << " " << r.payload);
    CHECK(r.status == CheckStatus::pass);
  }
}

TEST_CASE("presentation of the double") {
  FDHopf d = build_double();
  for (const auto& r : verify_double_presentation(d)) {
    INFO(r.name << " " << r.payload);
    CHECK(r.status == CheckStatus::pass);
  }
  // negative control: td = adyt with a flipped sign must fail
  DoubleGenerators g = double_generators(d);
  Vec lhs = d.mul(g.t, g.d);
  Vec rhs = d.mul(d.mul(d.mul(g.a, g.d), g.y), g.t);
  for (auto& c : rhs) c = -c;
  CHECK(lhs != rhs);
}

TEST_CASE("dual pbw functionals are independent") {
  auto f = dual_pbw_functionals();
  Mat m(16, 16);
  for (int c = 0; c < 16; ++c)
    for (int r = 0; r < 16; ++r) m.at(r, c) = f[c][r];
  CHECK(m.rank() == 16);
  // d^2 = a as functionals: index 8 squared... d*d corresponds to index with l exponent 2 -> reduce via a
  // spot: the functional at index 8 (d) evaluates xi^e on monomials
  CHECK(f[8][h_index(1, 0, 0)] == GaussRat::i());
  CHECK(f[1][h_index(1, 0, 0)] == GaussRat(-1));  // a
}

TEST_CASE("catalog reps satisfy relations and are simple") {
  for (const auto& lab : all_simple_labels()) {
    GenRep r = simple_module(lab);
    INFO(lab.str());
    CHECK(all_pass(verify_rep(r)));
    CHECK(is_simple(r));
  }
}

TEST_CASE("examples from the module catalog") {
  // Char(0,0,0,0): everything acts by 1
  GenRep triv = simple_module(char_label(0, 0, 0, 0));
  for (int g = 0; g < 7; ++g) CHECK(triv.gen[g] == Mat::identity(1));
  // M_1 = V(0,1,0,0,1,1): [d] = [[0,1],[1,0]]
  GenRep m1 = simple_module(v_label(0, 1, 0, 0, 1, 1));
  CHECK(m1.gen[6].at(0, 1) == GaussRat(1));
  CHECK(m1.gen[6].at(1, 0) == GaussRat(1));
  // M_13 = W(1,1,0,1): [x] = diag(xi, xi^-1)
  GenRep m13 = simple_module(w_label(1, 1, 0, 1));
  CHECK(m13.gen[0].at(0, 0) == GaussRat::i());
  CHECK(m13.gen[0].at(1, 1) == -GaussRat::i());
}

TEST_CASE("non-simple combinations") {
  // Char(0,0,0,0) + Char(0,0,0,0): commutant is all of M_2
  GenRep r;
  r.dim = 2;
  r.label = "trivial+trivial";
  for (int g = 0; g < 7; ++g) r.gen[g] = Mat::identity(2);
  CHECK(!is_simple(r));
  CHECK(!is_simple(simple_module_template(v_label(0, 0, 0, 0, 0, 0))));
}

TEST_CASE("census is complete and exact") {
  CensusResult res = census();
  for (const auto& r : res.records) {
    INFO(r.name << " " << r.payload);
    CHECK(r.status == CheckStatus::pass);
  }
  CHECK(res.entries.size() == 88);
  // any rep is isomorphic to itself
  GenRep m1 = simple_module(v_label(0, 1, 0, 0, 1, 1));
  CHECK(are_isomorphic(m1, m1));
  GenRep m2 = simple_module(v_label(1, 1, 0, 0, 1, 1));
  CHECK(!are_isomorphic(m1, m2));
}
