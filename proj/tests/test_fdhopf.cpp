#include <doctest.h>

#include "kashina/fdhopf.hpp"

using namespace kashina;

TEST_CASE("cyclic group algebras pass all axioms") {
  for (int n : {2, 4}) {
    FDHopf a = cyclic_group_algebra(n);
    for (const auto& r : verify_hopf_axioms(a)) {
      INFO(r.name << " " << r.payload);
      CHECK(r.status == CheckStatus::pass);
    }
  }
}

TEST_CASE("solve_antipode recovers inversion on Z_4") {
  FDHopf a = cyclic_group_algebra(4);
  Mat want = *a.antipode;
  a.antipode.reset();
  auto s = solve_antipode(a);
  REQUIRE(s.has_value());
  CHECK(*s == want);  // S(g) = g^3
}

TEST_CASE("broken antipode is rejected") {
  FDHopf a = cyclic_group_algebra(4);
  a.antipode = Mat::identity(4);
  bool saw_fail = false;
  for (const auto& r : verify_hopf_axioms(a))
    if (r.name == "antipode identities") saw_fail = r.status == CheckStatus::fail;
  CHECK(saw_fail);
}

TEST_CASE("grouplikes of a group algebra") {
  FDHopf a = cyclic_group_algebra(4);
  auto gl = grouplikes(a);
  CHECK(gl.size() == 4);
  for (const auto& v : gl) {
    int nnz = 0;
    for (const auto& c : v)
      if (!c.is_zero()) ++nnz;
    CHECK(nnz == 1);
  }
}

TEST_CASE("dual and op involutions") {
  FDHopf a = cyclic_group_algebra(4);
  FDHopf dd = dual(dual(a));
  CHECK(dd.mult[1][2] == a.mult[1][2]);
  CHECK(dd.unit == a.unit);
  CHECK(dd.counit == a.counit);
  FDHopf oo = op(op(a));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(oo.mult[i][j] == a.mult[i][j]);
  FDHopf cc = cop(cop(a));
  for (int k = 0; k < 4; ++k) CHECK(cc.comult[k] == a.comult[k]);
  for (const auto& r : verify_hopf_axioms(dual(a))) CHECK(r.status == CheckStatus::pass);
}

TEST_CASE("json round trip") {
  FDHopf a = cyclic_group_algebra(4);
  FDHopf b = fdhopf_from_json(fdhopf_to_json(a));
  CHECK(fdhopf_to_json(b) == fdhopf_to_json(a));
}

TEST_CASE("roots in Q(i)") {
  // x^2 + 1 = (x-i)(x+i)
  auto r = roots_in_qi({GaussRat(1), GaussRat(0), GaussRat(1)});
  CHECK(r.size() == 2);
  CHECK(std::find(r.begin(), r.end(), GaussRat::i()) != r.end());
  CHECK(std::find(r.begin(), r.end(), -GaussRat::i()) != r.end());
  // 2x^2 - x = x(2x - 1)
  r = roots_in_qi({GaussRat(0), GaussRat(-1), GaussRat(2)});
  CHECK(r.size() == 2);
  CHECK(std::find(r.begin(), r.end(), GaussRat(0)) != r.end());
  CHECK(std::find(r.begin(), r.end(), GaussRat::half()) != r.end());
  // (x - (1+i)/2)(x - 3)
  GaussRat root = GaussRat::make(1, 2, 1, 2);
  auto poly = std::vector<GaussRat>{root * GaussRat(3), -(root + GaussRat(3)), GaussRat(1)};
  r = roots_in_qi(poly);
  CHECK(std::find(r.begin(), r.end(), root) != r.end());
  CHECK(std::find(r.begin(), r.end(), GaussRat(3)) != r.end());
  // x^2 - 2 has no Q(i) roots
  CHECK(roots_in_qi({GaussRat(-2), GaussRat(0), GaussRat(1)}).empty());
}
