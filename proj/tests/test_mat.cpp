#include <doctest.h>

#include <random>

#include "kashina/mat.hpp"

using namespace kashina;

namespace {

Mat rnd_mat(std::mt19937& gen, int r, int c) {
  std::uniform_int_distribution<int> d(-3, 3);
  Mat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = GaussRat(d(gen));
  return m;
}

}  // namespace

TEST_CASE("kron basics") {
  CHECK(kron(Mat::identity(2), Mat::identity(3)) == Mat::identity(6));
  CHECK(kron(rnd_mat(*new std::mt19937(1), 2, 2), Mat::zero(3, 3)).is_zero());
  // diag(1,-1) (x) diag(1,-1) = diag(1,-1,-1,1)
  Mat d(2, 2);
  d.at(0, 0) = GaussRat(1);
  d.at(1, 1) = GaussRat(-1);
  Mat k = kron(d, d);
  Mat want(4, 4);
  want.at(0, 0) = GaussRat(1);
  want.at(1, 1) = GaussRat(-1);
  want.at(2, 2) = GaussRat(-1);
  want.at(3, 3) = GaussRat(1);
  CHECK(k == want);
}

TEST_CASE("kron respects tensor products of vectors") {
  std::mt19937 gen(42);
  Mat a = rnd_mat(gen, 3, 2), b = rnd_mat(gen, 2, 4);
  Vec u{GaussRat(1), GaussRat(-2)}, v{GaussRat(3), GaussRat(0), GaussRat(1), GaussRat(2)};
  Vec uv(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 4; ++j) uv[i * 4 + j] = u[i] * v[j];
  Vec lhs = kron(a, b).apply(uv);
  Vec au = a.apply(u), bv = b.apply(v);
  Vec want(6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) want[i * 2 + j] = au[i] * bv[j];
  CHECK(lhs == want);
}

TEST_CASE("rank kernel solve") {
  CHECK(Mat::identity(4).rank() == 4);
  Mat m(2, 2);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = GaussRat(1);
  CHECK(m.rank() == 1);
  auto k = m.kernel_basis();
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == GaussRat(-1));
  CHECK(k[0][1] == GaussRat(1));

  std::mt19937 gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    Mat a = rnd_mat(gen, 5, 7);
    CHECK(a.rank() + int(a.kernel_basis().size()) == 7);
    for (const auto& v : a.kernel_basis()) {
      Vec img = a.apply(v);
      for (const auto& x : img) CHECK(x.is_zero());
    }
    Vec x(7);
    for (int i = 0; i < 7; ++i) x[i] = GaussRat(i - 3);
    Vec b = a.apply(x);
    auto sol = a.solve(b);
    REQUIRE(sol.has_value());
    CHECK(a.apply(*sol) == b);
  }
  // inconsistent system
  Mat z(2, 1);
  z.at(0, 0) = GaussRat(1);
  CHECK(!z.solve(Vec{GaussRat(0), GaussRat(1)}).has_value());
}

TEST_CASE("inverse and det") {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 20; ++trial) {
    Mat a = rnd_mat(gen, 4, 4);
    auto inv = a.inverse();
    if (a.det().is_zero()) {
      CHECK(!inv);
    } else {
      REQUIRE(inv.has_value());
      CHECK(a * *inv == Mat::identity(4));
    }
  }
}

TEST_CASE("permute factors") {
  auto flip = permute_factors(2, {2, 2}, {1, 0});
  Mat want(4, 4);
  want.at(0, 0) = want.at(2, 1) = want.at(1, 2) = want.at(3, 3) = GaussRat(1);
  CHECK(flip == want);
  CHECK(flip * flip == Mat::identity(4));
  CHECK(permute_factors(3, {2, 3, 2}, {0, 1, 2}) == Mat::identity(12));
  // composition law on mixed dimensions: applying (0<->1) twice is the identity
  auto p = permute_factors(2, {2, 3}, {1, 0});
  auto q = permute_factors(2, {3, 2}, {1, 0});
  CHECK(q * p == Mat::identity(6));
}

TEST_CASE("kron associative up to reassociation") {
  std::mt19937 gen(9);
  Mat a = rnd_mat(gen, 2, 2), b = rnd_mat(gen, 3, 3), c = rnd_mat(gen, 2, 2);
  CHECK(kron(kron(a, b), c) == kron(a, kron(b, c)));
}
