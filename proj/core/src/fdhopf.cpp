#include "kashina/fdhopf.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

namespace kashina {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (int i = 0; i < int(v.size()); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

Vec to_dense(const SparseVec& v, int dim) {
  Vec d(dim);
  for (const auto& [i, c] : v) d[i] = c;
  return d;
}

Vec FDHopf::mul(const Vec& a, const Vec& b) const {
  Vec r(dim);
  for (int i = 0; i < dim; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (b[j].is_zero()) continue;
      GaussRat c = a[i] * b[j];
      for (const auto& [k, m] : mult[i][j]) r[k] += c * m;
    }
  }
  return r;
}

Vec FDHopf::apply_counit_left(int k) const {
  Vec r(dim);
  for (const auto& [i, j, c] : comult[k]) r[j] += c * counit[i];
  return r;
}

GaussRat FDHopf::eval_counit(const Vec& v) const {
  GaussRat r;
  for (int i = 0; i < dim; ++i)
    if (!v[i].is_zero()) r += v[i] * counit[i];
  return r;
}

namespace {

// dense accumulator with a touched list, for sparse sums over a fixed index range
struct Scratch {
  Vec buf;
  std::vector<int> touched;
  explicit Scratch(int n) : buf(n) {}
  void add(int i, const GaussRat& c) {
    if (buf[i].is_zero() && !c.is_zero()) touched.push_back(i);
    buf[i] += c;
  }
  void clear() {
    for (int i : touched) buf[i] = GaussRat(0);
    touched.clear();
  }
  bool equals_and_clear(Scratch& other) {
    bool eq = true;
    for (int i : touched)
      if (buf[i] != other.buf[i]) {
        eq = false;
        break;
      }
    if (eq)
      for (int i : other.touched)
        if (other.buf[i] != buf[i]) {
          eq = false;
          break;
        }
    clear();
    other.clear();
    return eq;
  }
};

using Tensor2 = std::map<std::pair<int, int>, GaussRat>;

void tensor2_add(Tensor2& t, int i, int j, const GaussRat& c) {
  auto it = t.find({i, j});
  if (it == t.end()) {
    if (!c.is_zero()) t.emplace(std::make_pair(i, j), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

Tensor2 delta_of(const FDHopf& a, const Vec& v) {
  Tensor2 t;
  for (int k = 0; k < a.dim; ++k) {
    if (v[k].is_zero()) continue;
    for (const auto& [i, j, c] : a.comult[k]) tensor2_add(t, i, j, v[k] * c);
  }
  return t;
}

Tensor2 tensor2_mul(const FDHopf& a, const Tensor2& u, const Tensor2& w) {
  Tensor2 r;
  for (const auto& [ij, cu] : u)
    for (const auto& [kl, cw] : w) {
      GaussRat c = cu * cw;
      for (const auto& [p, cp] : a.mult[ij.first][kl.first])
        for (const auto& [q, cq] : a.mult[ij.second][kl.second]) tensor2_add(r, p, q, c * cp * cq);
    }
  return r;
}

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

std::vector<CheckRecord> verify_hopf_axioms(const FDHopf& a, const std::string& suite) {
  std::vector<CheckRecord> out;
  const int n = a.dim;

  // unit laws
  {
    bool ok = true;
    std::string where;
    for (int j = 0; j < n && ok; ++j) {
      Vec ej(n);
      ej[j] = GaussRat(1);
      if (a.mul(a.unit, ej) != ej || a.mul(ej, a.unit) != ej) {
        ok = false;
        where = tuple_str({j});
      }
    }
    out.push_back(record(suite, "unit law", ok, where));
  }

  // associativity: full triple loop, or (basis,basis,generator) triples plus the
  // factorization certificate when a generating set is attached
  {
    bool ok = true;
    std::string where;
    if (a.gens) {
      const auto& gs = *a.gens;
      // left-multiplication tables by each generator, kept sparse; together with
      // the factorization certificate, (g e_u) e_v = g (e_u e_v) over all basis
      // pairs and generators implies full associativity by induction
      std::vector<std::vector<SparseVec>> lg(gs.elements.size());
      for (size_t g = 0; g < gs.elements.size(); ++g) {
        lg[g].resize(n);
        for (int m = 0; m < n; ++m) {
          Vec em(n);
          em[m] = GaussRat(1);
          lg[g][m] = to_sparse(a.mul(gs.elements[g], em));
        }
      }
      Scratch lhs(n), rhs(n);
      for (size_t g = 0; g < gs.elements.size() && ok; ++g)
        for (int u = 0; u < n && ok; ++u) {
          const SparseVec& gu = lg[g][u];
          for (int v = 0; v < n && ok; ++v) {
            for (const auto& [m, c] : gu)
              for (const auto& [k, d] : a.mult[m][v]) lhs.add(k, c * d);
            for (const auto& [m, c] : a.mult[u][v])
              for (const auto& [k, d] : lg[g][m]) rhs.add(k, c * d);
            if (!lhs.equals_and_clear(rhs)) {
              ok = false;
              where = tuple_str({int(g), u, v});
            }
          }
        }
      // factorization certificate, right-nested so the induction never assumes
      // the associativity it is being used to prove
      bool fok = true;
      std::string fwhere;
      for (int b = 0; b < n && fok; ++b) {
        Vec p = a.unit;
        const auto& fac = gs.factorization[b];
        for (auto it = fac.rbegin(); it != fac.rend(); ++it) p = a.mul(gs.elements[*it], p);
        Vec eb(n);
        eb[b] = GaussRat(1);
        if (p != eb) {
          fok = false;
          fwhere = tuple_str({b});
        }
      }
      out.push_back(record(suite, "generator factorization", fok, fwhere));
      if (!fok) ok = false;
    } else {
      Scratch lhs(n), rhs(n);
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j) {
          const SparseVec& ij = a.mult[i][j];
          for (int k = 0; k < n && ok; ++k) {
            for (const auto& [m, c] : ij)
              for (const auto& [l, d] : a.mult[m][k]) lhs.add(l, c * d);
            for (const auto& [m, c] : a.mult[j][k])
              for (const auto& [l, d] : a.mult[i][m]) rhs.add(l, c * d);
            if (!lhs.equals_and_clear(rhs)) {
              ok = false;
              where = tuple_str({i, j, k});
            }
          }
        }
    }
    out.push_back(record(suite, "associativity", ok, where));
  }

  // counit laws
  {
    bool ok = true;
    std::string where;
    for (int k = 0; k < n && ok; ++k) {
      Vec ek(n);
      ek[k] = GaussRat(1);
      Vec left(n), right(n);
      for (const auto& [i, j, c] : a.comult[k]) {
        left[j] += c * a.counit[i];
        right[i] += c * a.counit[j];
      }
      if (left != ek || right != ek) {
        ok = false;
        where = tuple_str({k});
      }
    }
    out.push_back(record(suite, "counit law", ok, where));
  }

  // coassociativity
  {
    bool ok = true;
    std::string where;
    for (int k = 0; k < n && ok; ++k) {
      std::map<std::tuple<int, int, int>, GaussRat> lhs, rhs;
      auto add3 = [](std::map<std::tuple<int, int, int>, GaussRat>& t, int i, int j, int l, const GaussRat& c) {
        auto key = std::make_tuple(i, j, l);
        auto it = t.find(key);
        if (it == t.end()) {
          if (!c.is_zero()) t.emplace(key, c);
        } else {
          it->second += c;
          if (it->second.is_zero()) t.erase(it);
        }
      };
      for (const auto& [i, j, c] : a.comult[k]) {
        for (const auto& [p, q, d] : a.comult[i]) add3(lhs, p, q, j, c * d);
        for (const auto& [p, q, d] : a.comult[j]) add3(rhs, i, p, q, c * d);
      }
      if (lhs != rhs) {
        ok = false;
        where = tuple_str({k});
      }
    }
    out.push_back(record(suite, "coassociativity", ok, where));
  }

  // counit is an algebra map; Delta(1) = 1 (x) 1, eps(1) = 1
  {
    bool ok = a.eval_counit(a.unit).is_one();
    std::string where = ok ? "" : "(unit)";
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        GaussRat lhs;
        for (const auto& [k, c] : a.mult[i][j]) lhs += c * a.counit[k];
        if (lhs != a.counit[i] * a.counit[j]) {
          ok = false;
          where = tuple_str({i, j});
        }
      }
    out.push_back(record(suite, "counit multiplicative", ok, where));

    Tensor2 d1 = delta_of(a, a.unit), want;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!a.unit[i].is_zero() && !a.unit[j].is_zero()) tensor2_add(want, i, j, a.unit[i] * a.unit[j]);
    out.push_back(record(suite, "comultiplication of unit", d1 == want));
  }

  // Delta multiplicative
  {
    bool ok = true;
    std::string where;
    if (a.gens) {
      const auto& gs = *a.gens;
      // Delta(gen) as pure tensors: supplied, or read off the structure tensor
      // when the generator is a basis element
      std::vector<std::vector<std::tuple<Vec, Vec, GaussRat>>> pures(gs.elements.size());
      for (size_t g = 0; g < gs.elements.size(); ++g) {
        if (g < gs.comult_pure.size() && !gs.comult_pure[g].empty()) {
          pures[g] = gs.comult_pure[g];
          continue;
        }
        Tensor2 dg = delta_of(a, gs.elements[g]);
        for (const auto& [ij, c] : dg) {
          Vec l(n), r(n);
          l[ij.first] = GaussRat(1);
          r[ij.second] = GaussRat(1);
          pures[g].push_back({std::move(l), std::move(r), c});
        }
      }
      // left-multiplication caches per distinct leg; paired with the left
      // associativity check above, Delta(g e_v) = Delta(g) Delta(e_v) over all
      // generators and basis elements gives full multiplicativity
      std::map<Vec, std::vector<SparseVec>> leg_cache;
      auto leg_table = [&](const Vec& leg) -> const std::vector<SparseVec>& {
        auto it = leg_cache.find(leg);
        if (it != leg_cache.end()) return it->second;
        std::vector<SparseVec> tab(n);
        for (int m = 0; m < n; ++m) {
          Vec em(n);
          em[m] = GaussRat(1);
          tab[m] = to_sparse(a.mul(leg, em));
        }
        return leg_cache.emplace(leg, std::move(tab)).first->second;
      };
      for (size_t g = 0; g < gs.elements.size(); ++g)
        for (const auto& [l, r, c] : pures[g]) {
          leg_table(l);
          leg_table(r);
          (void)c;
        }
      // flat accumulators over basis pairs; cleared via touched lists
      std::vector<GaussRat> lbuf(size_t(n) * n), rbuf(size_t(n) * n);
      std::vector<long> ltouched, rtouched;
      auto ladd = [&](long key, const GaussRat& c) {
        if (lbuf[key].is_zero() && !c.is_zero()) ltouched.push_back(key);
        lbuf[key] += c;
      };
      auto radd = [&](long key, const GaussRat& c) {
        if (rbuf[key].is_zero() && !c.is_zero()) rtouched.push_back(key);
        rbuf[key] += c;
      };
      // left-multiplication tables by the generators themselves
      std::vector<std::vector<SparseVec>> lgen(gs.elements.size());
      for (size_t g = 0; g < gs.elements.size(); ++g) {
        lgen[g].resize(n);
        for (int m = 0; m < n; ++m) {
          Vec em(n);
          em[m] = GaussRat(1);
          lgen[g][m] = to_sparse(a.mul(gs.elements[g], em));
        }
      }
      for (int v = 0; v < n && ok; ++v) {
        for (size_t g = 0; g < gs.elements.size() && ok; ++g) {
          for (const auto& [m, c] : lgen[g][v])
            for (const auto& [i, j, d] : a.comult[m]) ladd(long(i) * n + j, c * d);
          for (const auto& [l, r, c] : pures[g]) {
            const auto& lt = leg_table(l);
            const auto& rt = leg_table(r);
            for (const auto& [i, j, d] : a.comult[v]) {
              GaussRat cd = c * d;
              for (const auto& [li, lc] : lt[i]) {
                GaussRat cdl = cd * lc;
                for (const auto& [ri, rc] : rt[j]) radd(long(li) * n + ri, cdl * rc);
              }
            }
          }
          bool eq = true;
          for (long key : ltouched)
            if (lbuf[key] != rbuf[key]) {
              eq = false;
              break;
            }
          if (eq)
            for (long key : rtouched)
              if (rbuf[key] != lbuf[key]) {
                eq = false;
                break;
              }
          for (long key : ltouched) lbuf[key] = GaussRat(0);
          for (long key : rtouched) rbuf[key] = GaussRat(0);
          ltouched.clear();
          rtouched.clear();
          if (!eq) {
            ok = false;
            where = tuple_str({v, int(g)});
          }
        }
      }
    } else {
      for (int i = 0; i < n && ok; ++i) {
        Tensor2 di;
        for (const auto& [p, q, c] : a.comult[i]) tensor2_add(di, p, q, c);
        for (int j = 0; j < n && ok; ++j) {
          Tensor2 dj;
          for (const auto& [p, q, c] : a.comult[j]) tensor2_add(dj, p, q, c);
          Vec eij = to_dense(a.mult[i][j], n);
          if (delta_of(a, eij) != tensor2_mul(a, di, dj)) {
            ok = false;
            where = tuple_str({i, j});
          }
        }
      }
    }
    out.push_back(record(suite, "comultiplication multiplicative", ok, where));
  }

  // antipode identities, when an antipode is attached
  if (a.antipode) {
    const Mat& s = *a.antipode;
    bool ok = s.rows() == n && s.cols() == n;
    std::string where = ok ? "" : "(shape)";
    std::vector<SparseVec> s_cols(ok ? n : 0);
    for (int col = 0; col < n && ok; ++col)
      for (int row = 0; row < n; ++row)
        if (!s.at(row, col).is_zero()) s_cols[col].emplace_back(row, s.at(row, col));
    for (int k = 0; k < n && ok; ++k) {
      Vec left(n), right(n);
      for (const auto& [i, j, c] : a.comult[k]) {
        for (const auto& [r, sc] : s_cols[i])
          for (const auto& [m, mc] : a.mult[r][j]) left[m] += c * sc * mc;
        for (const auto& [r, sc] : s_cols[j])
          for (const auto& [m, mc] : a.mult[i][r]) right[m] += c * sc * mc;
      }
      Vec want(n);
      for (int r = 0; r < n; ++r) want[r] = a.counit[k] * a.unit[r];
      if (left != want || right != want) {
        ok = false;
        where = tuple_str({k});
      }
    }
    out.push_back(record(suite, "antipode identities", ok, where));
  }

  return out;
}

FDHopf dual(const FDHopf& a) {
  const int n = a.dim;
  FDHopf d;
  d.dim = n;
  d.labels.resize(n);
  for (int i = 0; i < n; ++i) d.labels[i] = a.labels.empty() ? "e^" + std::to_string(i) : a.labels[i] + "*";
  d.mult.assign(n, std::vector<SparseVec>(n));
  for (int k = 0; k < n; ++k)
    for (const auto& [i, j, c] : a.comult[k]) d.mult[i][j].emplace_back(k, c);
  for (auto& row : d.mult)
    for (auto& cell : row) std::sort(cell.begin(), cell.end(), [](auto& l, auto& r) { return l.first < r.first; });
  d.unit = a.counit;
  d.comult.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, c] : a.mult[i][j]) d.comult[k].emplace_back(i, j, c);
  d.counit = a.unit;
  if (a.antipode) d.antipode = a.antipode->transpose();
  return d;
}

FDHopf op(const FDHopf& a) {
  FDHopf r = a;
  r.gens.reset();
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) r.mult[i][j] = a.mult[j][i];
  if (a.antipode) r.antipode = a.antipode->inverse();
  return r;
}

FDHopf cop(const FDHopf& a) {
  FDHopf r = a;
  r.gens.reset();
  for (int k = 0; k < a.dim; ++k) {
    r.comult[k].clear();
    for (const auto& [i, j, c] : a.comult[k]) r.comult[k].emplace_back(j, i, c);
  }
  if (a.antipode) r.antipode = a.antipode->inverse();
  return r;
}

std::optional<Mat> solve_antipode(const FDHopf& a) {
  const int n = a.dim;
  if (n > 32) throw std::invalid_argument("solve_antipode: dense solve limited to dim <= 32");
  // unknowns S_{si} (column-major pairs), equations indexed (k,m):
  //   sum_{(i,j) in Delta(e_k)} c_{ij} sum_s S_{si} (e_s e_j)_m = eps_k unit_m
  Mat sys(n * n, n * n);
  Vec rhs(n * n);
  for (int k = 0; k < n; ++k) {
    for (const auto& [i, j, c] : a.comult[k]) {
      for (int s = 0; s < n; ++s)
        for (const auto& [m, d] : a.mult[s][j]) sys.at(k * n + m, s * n + i) += c * d;
    }
    for (int m = 0; m < n; ++m) rhs[k * n + m] += a.counit[k] * a.unit[m];
  }
  auto sol = sys.solve(rhs);
  if (!sol) return std::nullopt;
  Mat s(n, n);
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < n; ++r) s.at(r, i) = (*sol)[size_t(r) * n + i];
  FDHopf check = a;
  check.antipode = s;
  for (const auto& rec : verify_hopf_axioms(check))
    if (rec.name == "antipode identities" && rec.status != CheckStatus::pass) return std::nullopt;
  return s;
}

// ---- Gaussian-integer root machinery -------------------------------------

namespace {

struct GInt {
  Int re, im;
};

Int gnorm(const GInt& z) { return z.re * z.re + z.im * z.im; }
GInt gmul(const GInt& a, const GInt& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
GInt gsub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }
bool gzero(const GInt& z) { return z.re == 0 && z.im == 0; }

Int round_div(const Int& a, const Int& b) {
  // nearest integer to a/b (ties resolved away from zero; any choice keeps the
  // remainder norm strictly below |b|^2 in the gaussian division below)
  Int q = a / b, r = a - q * b;
  Int twice = 2 * r;
  if (b > 0) {
    if (twice > b)
      q += 1;
    else if (twice < -b)
      q -= 1;
  } else {
    if (twice < b)
      q += 1;
    else if (twice > -b)
      q -= 1;
  }
  return q;
}

// rounded division in Z[i]; remainder has norm < norm(b)
GInt gdiv_round(const GInt& a, const GInt& b) {
  Int n = gnorm(b);
  GInt num = gmul(a, {b.re, -b.im});
  return {round_div(num.re, n), round_div(num.im, n)};
}

bool gdivides(const GInt& d, const GInt& z, GInt& quotient) {
  if (gzero(d)) return false;
  GInt q = gdiv_round(z, d);
  GInt r = gsub(z, gmul(q, d));
  if (!gzero(r)) return false;
  quotient = q;
  return true;
}

// all divisors of z in Z[i] up to units (canonical associates), including 1 and z
std::vector<GInt> gaussian_divisors(GInt z) {
  if (gzero(z)) throw std::invalid_argument("gaussian_divisors: zero");
  Int n = gnorm(z);
  if (n > Int("1000000000000000")) throw std::overflow_error("gaussian_divisors: norm too large");
  // gaussian prime factors of z, found via rational prime factors of its norm
  std::vector<std::pair<GInt, int>> primes;
  auto strip = [&](GInt p) {
    int e = 0;
    GInt q;
    while (gdivides(p, z, q)) {
      z = q;
      ++e;
    }
    if (e > 0) primes.push_back({p, e});
  };
  Int m = n;
  for (Int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    if (p == 2) {
      strip({1, 1});
    } else if (p % 4 == 3) {
      strip({p, 0});
    } else {
      // p = pi * conj(pi): find a with a^2 = -1 mod p, pi = gcd(p, a+i)
      Int aa = 0;
      for (Int c = 2; c < p; ++c)
        if ((c * c + 1) % p == 0) {
          aa = c;
          break;
        }
      // gaussian gcd via euclid
      GInt u{p, 0}, v{aa, 1};
      while (!gzero(v)) {
        GInt q = gdiv_round(u, v);
        GInt r = gsub(u, gmul(q, v));
        u = v;
        v = r;
      }
      strip(u);
      strip({u.re, -u.im});
    }
  }
  if (m > 1) {
    if (m % 4 == 3) {
      strip({m, 0});
    } else {
      Int aa = 0;
      for (Int c = 2; c < m; ++c)
        if ((c * c + 1) % m == 0) {
          aa = c;
          break;
        }
      GInt u{m, 0}, v{aa, 1};
      while (!gzero(v)) {
        GInt q = gdiv_round(u, v);
        GInt r = gsub(u, gmul(q, v));
        u = v;
        v = r;
      }
      strip(u);
      strip({u.re, -u.im});
    }
  }
  std::vector<GInt> divs{{1, 0}};
  for (const auto& [p, e] : primes) {
    std::vector<GInt> next;
    for (const auto& d : divs) {
      GInt acc = d;
      next.push_back(acc);
      for (int k = 1; k <= e; ++k) {
        acc = gmul(acc, p);
        next.push_back(acc);
      }
    }
    divs = std::move(next);
  }
  return divs;
}

}  // namespace

std::vector<GaussRat> roots_in_qi(const std::vector<GaussRat>& coeffs) {
  // trim leading zeros
  std::vector<GaussRat> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::vector<GaussRat> roots;
  if (c.size() <= 1) return roots;
  // strip roots at zero
  size_t low = 0;
  while (low < c.size() && c[low].is_zero()) ++low;
  if (low > 0) {
    roots.push_back(GaussRat(0));
    c.erase(c.begin(), c.begin() + low);
  }
  if (c.size() <= 1) return roots;
  // clear denominators: common multiple of all four denominator slots
  Int lcm = 1;
  auto fold = [&](const Int& d) {
    Int g = boost::multiprecision::gcd(lcm, d);
    lcm = lcm / g * d;
  };
  for (const auto& x : c) {
    fold(x.re_den());
    fold(x.im_den());
  }
  std::vector<GInt> ic(c.size());
  for (size_t k = 0; k < c.size(); ++k) {
    ic[k].re = c[k].re_num() * (lcm / c[k].re_den());
    ic[k].im = c[k].im_num() * (lcm / c[k].im_den());
  }
  auto num_divs = gaussian_divisors(ic.front());
  auto den_divs = gaussian_divisors(ic.back());
  static const GInt units[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  auto horner = [&](const GaussRat& r) {
    GaussRat v;
    for (size_t k = c.size(); k-- > 0;) v = v * r + c[k];
    return v.is_zero();
  };
  std::vector<GaussRat> found;
  for (const auto& u0 : num_divs)
    for (const auto& unit : units) {
      GInt u = gmul(u0, unit);
      for (const auto& w : den_divs) {
        GaussRat cand = GaussRat::make(u.re, 1, u.im, 1) / GaussRat::make(w.re, 1, w.im, 1);
        if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
        if (horner(cand)) found.push_back(cand);
      }
    }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

namespace {

// minimal polynomial of a square matrix, low-degree-first coefficient list
std::vector<GaussRat> min_poly(const Mat& m) {
  const int n = m.rows();
  std::vector<Vec> powers;
  Mat p = Mat::identity(n);
  for (int deg = 0; deg <= n; ++deg) {
    Vec flat(size_t(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) flat[size_t(i) * n + j] = p.at(i, j);
    powers.push_back(std::move(flat));
    Mat sys(n * n, int(powers.size()));
    for (int col = 0; col < int(powers.size()); ++col)
      for (int row = 0; row < n * n; ++row) sys.at(row, col) = powers[col][row];
    auto kern = sys.kernel_basis();
    if (!kern.empty()) {
      // kernel vector with nonzero top coefficient exists exactly at the first dependence
      for (const auto& v : kern)
        if (!v.back().is_zero()) return v;
      return kern.front();
    }
    p = p * m;
  }
  throw std::logic_error("min_poly: no dependence found");
}

}  // namespace

std::vector<Vec> grouplikes(const FDHopf& a) {
  const int n = a.dim;
  // L_i = (e^i (x) id) Delta : grouplikes are joint eigenvectors with eigenvalue
  // vector equal to their own coordinates
  std::vector<Mat> ops(n, Mat(n, n));
  for (int k = 0; k < n; ++k)
    for (const auto& [i, j, c] : a.comult[k]) ops[i].at(j, k) += c;
  std::vector<std::vector<GaussRat>> cands(n);
  for (int i = 0; i < n; ++i) cands[i] = roots_in_qi(min_poly(ops[i]));

  std::vector<Vec> result;
  // depth-first refinement of joint eigenspaces; basis columns of current subspace
  struct Frame {
    int level;
    std::vector<Vec> basis;
    Vec lambda;
  };
  std::vector<Frame> stack;
  {
    std::vector<Vec> full;
    for (int i = 0; i < n; ++i) {
      Vec e(n);
      e[i] = GaussRat(1);
      full.push_back(e);
    }
    stack.push_back({0, full, Vec(n)});
  }
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    if (f.level == n) {
      // candidate grouplike is the eigenvalue vector itself
      const Vec& v = f.lambda;
      Tensor2 dv = delta_of(a, v), want;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (!v[i].is_zero() && !v[j].is_zero()) tensor2_add(want, i, j, v[i] * v[j]);
      if (dv == want && a.eval_counit(v).is_one() &&
          std::find(result.begin(), result.end(), v) == result.end())
        result.push_back(v);
      continue;
    }
    const int m = int(f.basis.size());
    for (const GaussRat& lam : cands[f.level]) {
      // kernel of (L - lam) restricted to span(basis)
      Mat sys(n, m);
      for (int col = 0; col < m; ++col) {
        Vec img = ops[f.level].apply(f.basis[col]);
        for (int row = 0; row < n; ++row) sys.at(row, col) = img[row] - lam * f.basis[col][row];
      }
      auto kern = sys.kernel_basis();
      if (kern.empty()) continue;
      std::vector<Vec> sub;
      for (const auto& coef : kern) {
        Vec v(n);
        for (int col = 0; col < m; ++col)
          if (!coef[col].is_zero())
            for (int row = 0; row < n; ++row) v[row] += coef[col] * f.basis[col][row];
        sub.push_back(std::move(v));
      }
      Vec lam_vec = f.lambda;
      lam_vec[f.level] = lam;
      stack.push_back({f.level + 1, std::move(sub), std::move(lam_vec)});
    }
  }
  // canonical order for reproducible reports
  std::sort(result.begin(), result.end(), [](const Vec& a_, const Vec& b_) {
    for (size_t i = 0; i < a_.size(); ++i) {
      if (a_[i] == b_[i]) continue;
      return a_[i] < b_[i];
    }
    return false;
  });
  return result;
}

SkewPrimitiveSpace skew_primitive_space(const FDHopf& a, const Vec& g, const Vec& h) {
  const int n = a.dim;
  // Delta(v) - v (x) g - h (x) v = 0, rows indexed by basis pairs
  Mat sys(n * n, n);
  for (int k = 0; k < n; ++k)
    for (const auto& [i, j, c] : a.comult[k]) sys.at(i * n + j, k) += c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sys.at(i * n + j, i) -= g[j];
      sys.at(i * n + j, j) -= h[i];
    }
  SkewPrimitiveSpace sp;
  sp.g = g;
  sp.h = h;
  sp.basis = sys.kernel_basis();
  return sp;
}

FDHopf cyclic_group_algebra(int n) {
  FDHopf a;
  a.dim = n;
  a.labels.resize(n);
  a.mult.assign(n, std::vector<SparseVec>(n));
  a.comult.assign(n, {});
  a.unit.assign(n, GaussRat(0));
  a.counit.assign(n, GaussRat(1));
  a.unit[0] = GaussRat(1);
  Mat s(n, n);
  for (int i = 0; i < n; ++i) {
    a.labels[i] = "g^" + std::to_string(i);
    for (int j = 0; j < n; ++j) a.mult[i][j].emplace_back((i + j) % n, GaussRat(1));
    a.comult[i].emplace_back(i, i, GaussRat(1));
    s.at((n - i) % n, i) = GaussRat(1);
  }
  a.antipode = s;
  return a;
}

// ---- JSON -----------------------------------------------------------------

std::string fdhopf_to_json(const FDHopf& a) {
  nlohmann::json j;
  j["dim"] = a.dim;
  j["labels"] = a.labels;
  auto& jm = j["mult"] = nlohmann::json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int jj = 0; jj < a.dim; ++jj)
      for (const auto& [k, c] : a.mult[i][jj]) jm.push_back({i, jj, k, c.str()});
  auto& jc = j["comult"] = nlohmann::json::array();
  for (int k = 0; k < a.dim; ++k)
    for (const auto& [i, jj, c] : a.comult[k]) jc.push_back({k, i, jj, c.str()});
  auto& ju = j["unit"] = nlohmann::json::array();
  for (int i = 0; i < a.dim; ++i)
    if (!a.unit[i].is_zero()) ju.push_back({i, a.unit[i].str()});
  auto& je = j["counit"] = nlohmann::json::array();
  for (int i = 0; i < a.dim; ++i)
    if (!a.counit[i].is_zero()) je.push_back({i, a.counit[i].str()});
  if (a.antipode) {
    auto& js = j["antipode"] = nlohmann::json::array();
    for (int i = 0; i < a.dim; ++i)
      for (int jj = 0; jj < a.dim; ++jj)
        if (!a.antipode->at(i, jj).is_zero()) js.push_back({i, jj, a.antipode->at(i, jj).str()});
  }
  return j.dump(1);
}

FDHopf fdhopf_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  FDHopf a;
  a.dim = j.at("dim").get<int>();
  a.labels = j.at("labels").get<std::vector<std::string>>();
  a.mult.assign(a.dim, std::vector<SparseVec>(a.dim));
  a.comult.assign(a.dim, {});
  a.unit.assign(a.dim, GaussRat(0));
  a.counit.assign(a.dim, GaussRat(0));
  for (const auto& e : j.at("mult"))
    a.mult[e[0].get<int>()][e[1].get<int>()].emplace_back(e[2].get<int>(), GaussRat::parse(e[3].get<std::string>()));
  for (const auto& e : j.at("comult"))
    a.comult[e[0].get<int>()].emplace_back(e[1].get<int>(), e[2].get<int>(), GaussRat::parse(e[3].get<std::string>()));
  for (const auto& e : j.at("unit")) a.unit[e[0].get<int>()] = GaussRat::parse(e[1].get<std::string>());
  for (const auto& e : j.at("counit")) a.counit[e[0].get<int>()] = GaussRat::parse(e[1].get<std::string>());
  if (j.contains("antipode")) {
    Mat s(a.dim, a.dim);
    for (const auto& e : j.at("antipode"))
      s.at(e[0].get<int>(), e[1].get<int>()) = GaussRat::parse(e[2].get<std::string>());
    a.antipode = s;
  }
  return a;
}

}  // namespace kashina
