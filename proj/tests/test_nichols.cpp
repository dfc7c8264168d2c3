#include <doctest.h>

#include "kashina/nichols.hpp"

using namespace kashina;

namespace {

Vec rel2(int d, std::initializer_list<std::pair<std::pair<int, int>, GaussRat>> terms) {
  Vec v(d * d);
  for (const auto& [ij, c] : terms) v[ij.first * d + ij.second] = c;
  return v;
}

}  // namespace

TEST_CASE("symmetrizer basics") {
  BraidedSpace b = braided_space(catalog_yd("M17"));
  CHECK(quantum_symmetrizer(1, b) == Mat::identity(2));
  // rank of the degree-2 symmetrizer on M_17 is 1
  CHECK(quantum_symmetrizer(2, b).rank() == 1);
  // chi_{1,1,0,0} (braiding -1): S_2 = 1 + c = 0
  BraidedSpace v1 = braided_space(catalog_yd("V1"));
  CHECK(quantum_symmetrizer(2, v1).is_zero());
  // chi_{0,0,0,0} (braiding +1): rank 1
  BraidedSpace triv = braided_space(catalog_yd(char_label(0, 0, 0, 0)));
  CHECK(quantum_symmetrizer(2, triv).rank() == 1);
  CHECK_THROWS_AS(quantum_symmetrizer(20, b, 4096), std::length_error);
}

TEST_CASE("braided lifts are reduced-word independent") {
  for (const char* tag : {"M13", "M17", "M1"}) {
    BraidedSpace b = braided_space(catalog_yd(tag));
    // longest element of S_3 via its two reduced words
    Mat c1 = kron(b.c, Mat::identity(b.dim));
    Mat c2 = kron(Mat::identity(b.dim), b.c);
    CHECK(c1 * c2 * c1 == c2 * c1 * c2);
    CHECK(braided_lift({2, 1, 0}, b) == c1 * c2 * c1);
    // identity and a transposition
    CHECK(braided_lift({0, 1, 2}, b) == Mat::identity(b.dim * b.dim * b.dim));
    CHECK(braided_lift({1, 0}, b) == b.c);
    // sum over S_3 equals the recursive symmetrizer
    std::vector<std::vector<int>> s3 = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    Mat sum(b.dim * b.dim * b.dim, b.dim * b.dim * b.dim);
    for (const auto& w : s3) sum = sum + braided_lift(w, b);
    CHECK(sum == quantum_symmetrizer(3, b));
  }
}

TEST_CASE("hilbert prefixes of the catalog") {
  for (int k = 1; k <= 20; ++k) {
    auto h = hilbert_prefix(catalog_yd("M" + std::to_string(k)), 4);
    INFO("M" << k);
    CHECK(h.dims == std::vector<long>{1, 2, 1, 0, 0});
    CHECK(h.certified_finite);
  }
  for (int k = 1; k <= 8; ++k) {
    auto h = hilbert_prefix(catalog_yd("V" + std::to_string(k)), 2);
    CHECK(h.dims == std::vector<long>{1, 1, 0});
  }
  // polynomial case grows forever
  auto h = hilbert_prefix(catalog_yd(char_label(0, 0, 0, 0)), 5);
  CHECK(h.dims == std::vector<long>{1, 1, 1, 1, 1, 1});
  CHECK(!h.certified_finite);
}

TEST_CASE("quadratic relation spaces match the catalog lists") {
  GaussRat one(1);
  auto anti = [&](int d) {
    return std::vector<Vec>{rel2(d, {{{0, 0}, one}}), rel2(d, {{{1, 1}, one}}),
                            rel2(d, {{{0, 1}, one}, {{1, 0}, one}})};
  };
  auto comm = [&](int d) {
    return std::vector<Vec>{rel2(d, {{{0, 0}, one}}), rel2(d, {{{1, 1}, one}}),
                            rel2(d, {{{0, 1}, one}, {{1, 0}, -one}})};
  };
  auto utype = [&](int d, const GaussRat& sign) {
    return std::vector<Vec>{rel2(d, {{{0, 1}, one}}), rel2(d, {{{1, 0}, one}}),
                            rel2(d, {{{0, 0}, one}, {{1, 1}, sign}})};
  };
  for (int k : {4, 6, 9, 11}) {
    INFO("M" << k);
    CHECK(quadratic_relations_match(braided_space(catalog_yd("M" + std::to_string(k))), comm(2)));
  }
  for (int k : {1, 2, 3, 5, 7, 8, 10, 12, 13, 14, 15, 16}) {
    INFO("M" << k);
    CHECK(quadratic_relations_match(braided_space(catalog_yd("M" + std::to_string(k))), anti(2)));
  }
  for (int k : {17, 18}) CHECK(quadratic_relations_match(braided_space(catalog_yd("M" + std::to_string(k))), utype(2, GaussRat(1))));
  for (int k : {19, 20}) CHECK(quadratic_relations_match(braided_space(catalog_yd("M" + std::to_string(k))), utype(2, GaussRat(-1))));
  // a wrong list is rejected
  CHECK(!quadratic_relations_match(braided_space(catalog_yd("M17")), anti(2)));
}

TEST_CASE("eigenvalue-one witnesses") {
  // excluded modules with easy witnesses
  CHECK(eigenvalue_one_witness(catalog_yd(v_label(0, 0, 0, 0, 0, 1))).has_value());
  CHECK(eigenvalue_one_witness(catalog_yd(w_label(1, 0, 0, 0))).has_value());
  // excluded U with a combination witness v1 + gamma v2
  CHECK(eigenvalue_one_witness(catalog_yd(u_label(1, 0, 0, 0))).has_value());
  CHECK(eigenvalue_one_witness(catalog_yd(u_label(1, 2, 1, 0))).has_value());
  // finite-dimensional members have none
  CHECK(!eigenvalue_one_witness(catalog_yd("M1")).has_value());
  CHECK(!eigenvalue_one_witness(catalog_yd("M17")).has_value());
  // trivial character: the basis vector itself
  CHECK(eigenvalue_one_witness(catalog_yd(char_label(0, 0, 0, 0))).has_value());
  // witness line never dies: S_n restricted to v^(x)n is nonzero up to degree 6
  YDModule v = catalog_yd(w_label(1, 0, 0, 0));
  auto wit = eigenvalue_one_witness(v);
  REQUIRE(wit.has_value());
  BraidedSpace b = braided_space(v);
  for (int n = 2; n <= 6; ++n) {
    Vec power(1, GaussRat(1));
    for (int q = 0; q < n; ++q) {
      Vec next(power.size() * 2);
      for (size_t i = 0; i < power.size(); ++i)
        for (int j = 0; j < 2; ++j) next[i * 2 + j] = power[i] * (*wit)[j];
      power = std::move(next);
    }
    Vec img = apply_symmetrizer(n, b, power);
    bool nonzero = false;
    for (const auto& c : img)
      if (!c.is_zero()) nonzero = true;
    CHECK(nonzero);
  }
}

TEST_CASE("pair factorization") {
  CHECK(pair_factorization(catalog_yd("V1"), catalog_yd("V2")));
  CHECK(!pair_factorization(catalog_yd("V1"), catalog_yd("M17")));
  CHECK(!pair_factorization(catalog_yd("V1"), catalog_yd("M13")));
  CHECK(pair_factorization(catalog_yd("M1"), catalog_yd(char_label(0, 0, 0, 0))));
  CHECK(pair_factorization(catalog_yd("M1"), catalog_yd("M1")));
}

TEST_CASE("diagonal braiding data") {
  YDModule sum = direct_sum({catalog_yd("V1"), catalog_yd("M13")});
  auto q = diagonal_data(sum);
  REQUIRE(q.has_value());
  CHECK(q->at(0, 0) == GaussRat(-1));
  // edge label q_12 q_21 = (-1)^(l+1) xi^j with (j,l) = (1,0) from the character V_1: equals -xi
  CHECK(q->at(0, 1) * q->at(1, 0) == -GaussRat::i());
  CHECK(!diagonal_data(catalog_yd("M17")).has_value());
  auto q1 = diagonal_data(catalog_yd("V1"));
  REQUIRE(q1.has_value());
  CHECK(q1->at(0, 0) == GaussRat(-1));
}

TEST_CASE("growth evidence for V1 + M13 and V1 + M17") {
  for (const char* tag : {"M13", "M17"}) {
    YDModule sum = direct_sum({catalog_yd("V1"), catalog_yd(tag)});
    BraidedSpace b = braided_space(sum);
    Mat s4 = quantum_symmetrizer(4, b);  // 81 x 81
    CHECK(!s4.is_zero());
  }
}
