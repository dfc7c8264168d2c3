#include <doctest.h>

#include "kashina/hopf_h.hpp"

using namespace kashina;

TEST_CASE("monomial group structure") {
  // tx = x^3 t
  int t = h_index(0, 0, 1), x = h_index(1, 0, 0);
  CHECK(h_mul_index(t, x) == h_index(3, 0, 1));
  CHECK(h_mul_index(x, t) == h_index(1, 0, 1));
  for (int i = 0; i < 16; ++i) {
    CHECK(h_mul_index(i, h_inv_index(i)) == 0);
    CHECK(h_mul_index(h_inv_index(i), i) == 0);
  }
}

TEST_CASE("H is a Hopf algebra") {
  FDHopf h = build_h();
  CHECK(h.dim == 16);
  for (const auto& r : verify_hopf_axioms(h)) {
    INFO(r.name << " " << r.payload);
    CHECK(r.status == CheckStatus::pass);
  }
  // m(t,t) = 1
  Vec t(16), one(16);
  t[h_index(0, 0, 1)] = GaussRat(1);
  one[0] = GaussRat(1);
  CHECK(h.mul(t, t) == one);
  // Delta(x) = x (x) x
  CHECK(h.comult[h_index(1, 0, 0)].size() == 1);
  // Delta(t) has the four half-coefficient terms
  CHECK(h.comult[h_index(0, 0, 1)].size() == 4);
}

TEST_CASE("solve_antipode recovers S on H") {
  FDHopf h = build_h();
  Mat want = *h.antipode;
  h.antipode.reset();
  auto s = solve_antipode(h);
  REQUIRE(s.has_value());
  CHECK(*s == want);
  // S(t) = 1/2[(1+y)t + (1-y)x^2 t]
  int t = h_index(0, 0, 1);
  CHECK(s->at(h_index(0, 0, 1), t) == GaussRat::half());
  CHECK(s->at(h_index(0, 1, 1), t) == GaussRat::half());
  CHECK(s->at(h_index(2, 0, 1), t) == GaussRat::half());
  CHECK(s->at(h_index(2, 1, 1), t) == -GaussRat::half());
}

TEST_CASE("grouplikes and skew primitives of H") {
  FDHopf h = build_h();
  auto gl = grouplikes(h);
  CHECK(gl.size() == 8);
  Vec one(16), x2(16);
  one[0] = GaussRat(1);
  x2[h_index(2, 0, 0)] = GaussRat(1);
  auto sp = skew_primitive_space(h, one, x2);
  REQUIRE(sp.basis.size() == 1);
  // spanned by 1 - x^2
  const Vec& v = sp.basis[0];
  CHECK(v[0] == -v[h_index(2, 0, 0)]);
  CHECK(!v[0].is_zero());
}

TEST_CASE("dual generators satisfy all listed relations") {
  for (const auto& r : verify_dual_generators()) {
    INFO(r.name);
    CHECK(r.status == CheckStatus::pass);
  }
  // a is grouplike in dual(H), i.e. an algebra character: a(x)= -1, a(y)=a(t)=1
  DualGenerators g = build_dual_generators();
  CHECK(g.a[h_index(1, 0, 0)] == GaussRat(-1));
  CHECK(g.a[h_index(0, 1, 0)] == GaussRat(1));
  CHECK(g.d[h_index(1, 0, 0)] == GaussRat::i());
}

TEST_CASE("automorphism table") {
  CHECK(automorphism_matrix(1) == Mat::identity(16));
  for (const auto& r : verify_automorphisms()) {
    INFO(r.name << " " << r.payload);
    CHECK(r.status == CheckStatus::pass);
  }
  // tau_9: x -> x^3, t -> t; it must respect tx = x^3 t
  Mat t9 = automorphism_matrix(9);
  CHECK(t9.at(h_index(3, 0, 0), h_index(1, 0, 0)) == GaussRat(1));
  CHECK(t9.at(h_index(0, 0, 1), h_index(0, 0, 1)) == GaussRat(1));
  // tau_2: t -> xt, check (xt)^2 = 1 consistent with t^2 = 1
  FDHopf h = build_h();
  Vec xt(16), one(16);
  xt[h_index(1, 0, 1)] = GaussRat(1);
  one[0] = GaussRat(1);
  CHECK(h.mul(xt, xt) == one);
}

TEST_CASE("verify_h_suite all green") {
  for (const auto& r : verify_h_suite()) {
    INFO(r.suite << ": " << r.name << " " << r.payload);
    CHECK(r.status != CheckStatus::fail);
  }
}
