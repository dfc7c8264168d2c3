#include "kashina/hopf_h.hpp"

#include <map>
#include <sstream>

namespace kashina {

int h_index(int e, int f, int g) { return ((e % 4) + 4) % 4 + 4 * (((f % 2) + 2) % 2) + 8 * (((g % 2) + 2) % 2); }

std::array<int, 3> h_exps(int idx) { return {idx % 4, (idx / 4) % 2, idx / 8}; }

std::string h_label(int idx) {
  auto [e, f, g] = h_exps(idx);
  std::string s;
  if (e == 1) s += "x";
  if (e > 1) s += "x^" + std::to_string(e);
  if (f) s += "y";
  if (g) s += "t";
  if (s.empty()) s = "1";
  return s;
}

int h_mul_index(int i, int j) {
  auto [e1, f1, g1] = h_exps(i);
  auto [e2, f2, g2] = h_exps(j);
  int e2t = g1 ? (4 - e2) % 4 : e2;  // t x = x^-1 t
  return h_index(e1 + e2t, f1 + f2, g1 + g2);
}

int h_inv_index(int i) {
  auto [e, f, g] = h_exps(i);
  if (g == 0) return h_index(4 - e, f, 0);
  return h_index(e, f, 1);  // (x^e y^f t)^2 = x^e t x^e t y^0.. = 1, t-monomials are involutions
}

FDHopf build_h() {
  FDHopf a;
  a.dim = 16;
  a.labels.resize(16);
  a.mult.assign(16, std::vector<SparseVec>(16));
  a.comult.assign(16, {});
  a.unit.assign(16, GaussRat(0));
  a.counit.assign(16, GaussRat(1));
  a.unit[0] = GaussRat(1);
  const GaussRat half = GaussRat::half();
  for (int i = 0; i < 16; ++i) {
    a.labels[i] = h_label(i);
    for (int j = 0; j < 16; ++j) a.mult[i][j].emplace_back(h_mul_index(i, j), GaussRat(1));
    auto [e, f, g] = h_exps(i);
    if (g == 0) {
      a.comult[i].emplace_back(i, i, GaussRat(1));
    } else {
      // (x^e y^f (x) x^e y^f) * Delta(t)
      int m = h_index(e, f, 1), my = h_index(e, f + 1, 1), mx2 = h_index(e + 2, f, 1);
      a.comult[i].emplace_back(m, m, half);
      a.comult[i].emplace_back(my, m, half);
      a.comult[i].emplace_back(m, mx2, half);
      a.comult[i].emplace_back(my, mx2, -half);
    }
  }
  Mat s(16, 16);
  for (int i = 0; i < 16; ++i) {
    auto [e, f, g] = h_exps(i);
    if (g == 0) {
      s.at(h_index(4 - e, f, 0), i) = GaussRat(1);
    } else {
      // S(x^e y^f t) = S(t) y^f x^-e = 1/2[x^e y^f t + x^e y^(f+1) t + x^(e+2) y^f t - x^(e+2) y^(f+1) t]
      s.at(h_index(e, f, 1), i) += half;
      s.at(h_index(e, f + 1, 1), i) += half;
      s.at(h_index(e + 2, f, 1), i) += half;
      s.at(h_index(e + 2, f + 1, 1), i) -= half;
    }
  }
  a.antipode = s;
  return a;
}

DualGenerators build_dual_generators() {
  DualGenerators d;
  d.a.assign(16, GaussRat(0));
  d.b.assign(16, GaussRat(0));
  d.c.assign(16, GaussRat(0));
  d.d.assign(16, GaussRat(0));
  for (int i = 0; i < 16; ++i) {
    auto [e, f, g] = h_exps(i);
    d.a[i] = (e % 2) ? GaussRat(-1) : GaussRat(1);
    d.b[i] = f ? GaussRat(-1) : GaussRat(1);
    d.c[i] = ((f + g) % 2) ? GaussRat(-1) : GaussRat(1);
    d.d[i] = xi_power(e);
  }
  return d;
}

namespace {

using Tensor2 = std::map<std::pair<int, int>, GaussRat>;

Tensor2 delta_in(const FDHopf& a, const Vec& v) {
  Tensor2 t;
  for (int k = 0; k < a.dim; ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& [i, j, c] : a.comult[k]) {
      auto key = std::make_pair(i, j);
      auto it = t.find(key);
      if (it == t.end())
        t.emplace(key, v[k] * c);
      else {
        it->second += v[k] * c;
        if (it->second.is_zero()) t.erase(it);
      }
    }
  }
  return t;
}

Tensor2 pure_tensor(const Vec& u, const Vec& v, const GaussRat& scale = GaussRat(1)) {
  Tensor2 t;
  for (int i = 0; i < int(u.size()); ++i)
    for (int j = 0; j < int(v.size()); ++j) {
      GaussRat c = scale * u[i] * v[j];
      if (c.is_zero()) continue;
      auto key = std::make_pair(i, j);
      auto it = t.find(key);
      if (it == t.end())
        t.emplace(key, c);
      else {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
      }
    }
  return t;
}

Tensor2 tensor_sum(Tensor2 a, const Tensor2& b) {
  for (const auto& [k, c] : b) {
    auto it = a.find(k);
    if (it == a.end())
      a.emplace(k, c);
    else {
      it->second += c;
      if (it->second.is_zero()) a.erase(it);
    }
  }
  return a;
}

}  // namespace

std::vector<CheckRecord> verify_dual_generators() {
  const std::string suite = "dual-generators";
  std::vector<CheckRecord> out;
  FDHopf hs = dual(build_h());
  DualGenerators g = build_dual_generators();
  const Vec one = hs.unit;
  auto mul = [&](const Vec& u, const Vec& v) { return hs.mul(u, v); };

  auto check_eq = [&](const std::string& name, const Vec& lhs, const Vec& rhs) {
    out.push_back(record(suite, name, lhs == rhs));
  };
  check_eq("a^2 = 1", mul(g.a, g.a), one);
  check_eq("b^2 = 1", mul(g.b, g.b), one);
  check_eq("c^2 = 1", mul(g.c, g.c), one);
  check_eq("ab = ba", mul(g.a, g.b), mul(g.b, g.a));
  check_eq("ac = ca", mul(g.a, g.c), mul(g.c, g.a));
  check_eq("bc = cb", mul(g.b, g.c), mul(g.c, g.b));
  check_eq("d^2 = a", mul(g.d, g.d), g.a);
  check_eq("da = ad", mul(g.d, g.a), mul(g.a, g.d));
  check_eq("db = cd", mul(g.d, g.b), mul(g.c, g.d));
  check_eq("dc = bd", mul(g.d, g.c), mul(g.b, g.d));

  out.push_back(record(suite, "coproduct of a grouplike", delta_in(hs, g.a) == pure_tensor(g.a, g.a)));
  out.push_back(record(suite, "coproduct of b grouplike", delta_in(hs, g.b) == pure_tensor(g.b, g.b)));
  out.push_back(record(suite, "coproduct of c grouplike", delta_in(hs, g.c) == pure_tensor(g.c, g.c)));
  {
    // Delta(d) = 1/2 (d + bcd) (x) d + 1/2 (d - bcd) (x) ad
    Vec bcd = mul(g.b, mul(g.c, g.d)), ad = mul(g.a, g.d);
    Vec lo(16), hi(16);
    const GaussRat half = GaussRat::half();
    for (int i = 0; i < 16; ++i) {
      lo[i] = half * (g.d[i] + bcd[i]);
      hi[i] = half * (g.d[i] - bcd[i]);
    }
    Tensor2 want = tensor_sum(pure_tensor(lo, g.d), pure_tensor(hi, ad));
    out.push_back(record(suite, "coproduct of d two-term formula", delta_in(hs, g.d) == want));
  }
  return out;
}

Mat automorphism_matrix(int k) {
  if (k < 1 || k > kAutomorphismCount) throw std::invalid_argument("automorphism_matrix: k out of range");
  static const int x_img[4][2] = {{1, 0}, {3, 0}, {1, 1}, {3, 1}};  // x, x^3, xy, x^3y
  static const int t_img[8][2] = {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}};
  int block = (k - 1) / 8, r = (k - 1) % 8;
  int xa = x_img[block][0], xb = x_img[block][1];
  int tc = t_img[r][0], td = t_img[r][1];
  Mat m(16, 16);
  for (int i = 0; i < 16; ++i) {
    auto [e, f, g] = h_exps(i);
    // tau(x)^e tau(y)^f tau(t)^g with grouplike prefixes commuting
    int ee = xa * e + tc * g;
    int ff = xb * e + f + td * g;
    m.at(h_index(ee, ff, g), i) = GaussRat(1);
  }
  return m;
}

std::vector<CheckRecord> verify_automorphisms() {
  const std::string suite = "automorphisms";
  std::vector<CheckRecord> out;
  FDHopf h = build_h();
  std::vector<Mat> taus;
  for (int k = 1; k <= kAutomorphismCount; ++k) taus.push_back(automorphism_matrix(k));

  bool alg_ok = true, coalg_ok = true, bij_ok = true;
  std::string alg_w, coalg_w, bij_w;
  for (int k = 0; k < kAutomorphismCount; ++k) {
    const Mat& t = taus[k];
    if (!t.inverse()) {
      bij_ok = false;
      bij_w = "tau_" + std::to_string(k + 1);
    }
    for (int i = 0; i < 16 && alg_ok; ++i)
      for (int j = 0; j < 16 && alg_ok; ++j) {
        Vec ei(16), ej(16);
        ei[i] = GaussRat(1);
        ej[j] = GaussRat(1);
        Vec lhs = t.apply(h.mul(ei, ej));
        Vec rhs = h.mul(t.apply(ei), t.apply(ej));
        if (lhs != rhs) {
          alg_ok = false;
          alg_w = "tau_" + std::to_string(k + 1) + " at (" + h_label(i) + "," + h_label(j) + ")";
        }
      }
    for (int i = 0; i < 16 && coalg_ok; ++i) {
      Vec ei(16);
      ei[i] = GaussRat(1);
      Tensor2 lhs = delta_in(h, t.apply(ei));
      Tensor2 rhs;
      for (const auto& [p, q, c] : h.comult[i]) {
        Vec ep(16), eq(16);
        ep[p] = GaussRat(1);
        eq[q] = GaussRat(1);
        rhs = tensor_sum(std::move(rhs), pure_tensor(t.apply(ep), t.apply(eq), c));
      }
      if (lhs != rhs) {
        coalg_ok = false;
        coalg_w = "tau_" + std::to_string(k + 1) + " at " + h_label(i);
      }
      if (h.eval_counit(t.apply(ei)) != h.counit[i]) {
        coalg_ok = false;
        coalg_w = "tau_" + std::to_string(k + 1) + " counit at " + h_label(i);
      }
    }
  }
  out.push_back(record(suite, "all 32 maps bijective", bij_ok, bij_w));
  out.push_back(record(suite, "all 32 maps are algebra maps", alg_ok, alg_w));
  out.push_back(record(suite, "all 32 maps are coalgebra maps", coalg_ok, coalg_w));

  bool distinct = true;
  for (int i = 0; i < kAutomorphismCount && distinct; ++i)
    for (int j = i + 1; j < kAutomorphismCount && distinct; ++j)
      if (taus[i] == taus[j]) distinct = false;
  out.push_back(record(suite, "32 maps pairwise distinct", distinct));

  bool closed = true;
  std::string closed_w;
  for (int i = 0; i < kAutomorphismCount && closed; ++i)
    for (int j = 0; j < kAutomorphismCount && closed; ++j) {
      Mat prod = taus[i] * taus[j];
      bool found = false;
      for (int k = 0; k < kAutomorphismCount; ++k)
        if (prod == taus[k]) {
          found = true;
          break;
        }
      if (!found) {
        closed = false;
        closed_w = "tau_" + std::to_string(i + 1) + " * tau_" + std::to_string(j + 1);
      }
    }
  out.push_back(record(suite, "closed under composition (group of order 32)", closed, closed_w));
  return out;
}

std::vector<CheckRecord> verify_h_suite() {
  std::vector<CheckRecord> out;
  FDHopf h = build_h();
  out.push_back(record("h", "dimension 16", h.dim == 16));
  for (auto& r : verify_hopf_axioms(h, "h")) out.push_back(std::move(r));

  auto gl = grouplikes(h);
  out.push_back(record("h", "grouplike count 8", gl.size() == 8, "found " + std::to_string(gl.size())));
  {
    // every grouplike is a monomial x^e y^f and P_{1,g}(H) = k{1-g} for g != 1
    bool span_ok = true, skew_ok = true;
    std::string w;
    Vec one(16);
    one[0] = GaussRat(1);
    for (const auto& g : gl) {
      int idx = -1;
      int nnz = 0;
      for (int i = 0; i < 16; ++i)
        if (!g[i].is_zero()) {
          ++nnz;
          idx = i;
        }
      if (nnz != 1 || !g[idx].is_one() || idx >= 8) span_ok = false;
      auto sp = skew_primitive_space(h, one, g);
      size_t want = (idx == 0) ? 0 : 1;
      if (sp.basis.size() != want) {
        skew_ok = false;
        w = "g = " + h_label(idx) + " dim " + std::to_string(sp.basis.size());
      }
      if (idx != 0 && sp.basis.size() == 1) {
        // the space is spanned by 1 - g
        Vec v = sp.basis[0];
        bool proportional = !v[0].is_zero() && v[idx] == -v[0];
        int extra = 0;
        for (int i = 0; i < 16; ++i)
          if (i != 0 && i != idx && !v[i].is_zero()) ++extra;
        if (!proportional || extra) {
          skew_ok = false;
          w = "g = " + h_label(idx) + " not k{1-g}";
        }
      }
    }
    out.push_back(record("h", "grouplikes are the monomials x^e y^f", span_ok));
    out.push_back(record("h", "dim P_{1,g} = 1 for g != 1 (spanned by 1-g), 0 for g = 1", skew_ok, w));
  }

  for (auto& r : verify_dual_generators()) out.push_back(std::move(r));
  for (auto& r : verify_automorphisms()) out.push_back(std::move(r));
  return out;
}

}  // namespace kashina
