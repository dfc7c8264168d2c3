#include "kashina/nichols.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace kashina {

namespace {

// columns-as-sparse-vectors matrix, enough for symmetrizer accumulation
using SpMat = std::vector<SparseVec>;

SpMat sp_identity(long n) {
  SpMat m(n);
  for (long i = 0; i < n; ++i) m[i].emplace_back(int(i), GaussRat(1));
  return m;
}

SpMat sp_mul(const SpMat& a, const SpMat& b) {
  // (a b) column j = a * (b column j)
  SpMat r(b.size());
  std::vector<GaussRat> scratch(a.size());
  std::vector<int> touched;
  for (size_t j = 0; j < b.size(); ++j) {
    for (const auto& [k, c] : b[j])
      for (const auto& [i, d] : a[k]) {
        if (scratch[i].is_zero()) touched.push_back(i);
        scratch[i] += c * d;
      }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      if (!scratch[i].is_zero()) r[j].emplace_back(i, scratch[i]);
      scratch[i] = GaussRat(0);
    }
    touched.clear();
  }
  return r;
}

void sp_add_into(SpMat& acc, const SpMat& b) {
  for (size_t j = 0; j < acc.size(); ++j) {
    SparseVec merged;
    size_t p = 0, q = 0;
    while (p < acc[j].size() || q < b[j].size()) {
      if (q == b[j].size() || (p < acc[j].size() && acc[j][p].first < b[j][q].first)) {
        merged.push_back(acc[j][p++]);
      } else if (p == acc[j].size() || b[j][q].first < acc[j][p].first) {
        merged.push_back(b[j][q++]);
      } else {
        GaussRat c = acc[j][p].second + b[j][q].second;
        if (!c.is_zero()) merged.emplace_back(acc[j][p].first, c);
        ++p;
        ++q;
      }
    }
    acc[j] = std::move(merged);
  }
}

Vec sp_apply(const SpMat& a, const Vec& v) {
  Vec r(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& [i, c] : a[j]) r[i] += c * v[j];
  }
  return r;
}

// c acting on factors (pos, pos+1) of V^(x)n, built directly from index arithmetic
SpMat sp_braiding_at(const Mat& c, int d, int n, int pos) {
  long total = 1;
  for (int k = 0; k < n; ++k) total *= d;
  long right = 1;
  for (int k = pos + 2; k < n; ++k) right *= d;
  long mid = d * d * right;
  SpMat m(total);
  for (long col = 0; col < total; ++col) {
    long left = col / mid, rem = col % mid;
    long pair = rem / right, tail = rem % right;
    for (int row_pair = 0; row_pair < d * d; ++row_pair) {
      const GaussRat& e = c.at(row_pair, int(pair));
      if (!e.is_zero()) m[col].emplace_back(int(left * mid + row_pair * right + tail), e);
    }
  }
  return m;
}

// symmetrizer as a sparse matrix via S_n = (S_{n-1} (x) id) (1 + c_{n-1} + c_{n-1}c_{n-2} + ...)
SpMat sp_symmetrizer(int n, const BraidedSpace& b) {
  const int d = b.dim;
  long total = 1;
  for (int k = 0; k < n; ++k) total *= d;
  if (n <= 1) return sp_identity(total);
  SpMat prev = sp_symmetrizer(n - 1, b);
  // embed prev on the first n-1 factors: (prev (x) I_d)
  SpMat left(total);
  for (long col = 0; col < total; ++col) {
    long j = col / d, l = col % d;
    for (const auto& [i, c] : prev[j]) left[col].emplace_back(int(i * d + l), c);
  }
  SpMat sum = sp_identity(total);
  SpMat chain = sp_identity(total);
  for (int k = n - 2; k >= 0; --k) {
    chain = sp_mul(chain, sp_braiding_at(b.c, d, n, k));
    sp_add_into(sum, chain);
  }
  return sp_mul(left, sum);
}

Mat sp_to_dense(const SpMat& m) {
  Mat r(int(m.size()), int(m.size()));
  for (size_t j = 0; j < m.size(); ++j)
    for (const auto& [i, c] : m[j]) r.at(i, int(j)) = c;
  return r;
}

bool sp_is_zero(const SpMat& m) {
  for (const auto& col : m)
    if (!col.empty()) return false;
  return true;
}

}  // namespace

BraidedSpace braided_space(const YDModule& v) { return {v.dim, braiding(v, v), v.label}; }

std::vector<CheckRecord> verify_braided(const BraidedSpace& b) {
  std::vector<CheckRecord> out;
  const std::string suite = "braided " + b.label;
  out.push_back(record(suite, "braiding invertible", !b.c.det().is_zero()));
  Mat i = Mat::identity(b.dim);
  Mat c1 = kron(b.c, i), c2 = kron(i, b.c);
  out.push_back(record(suite, "braid equation", c1 * c2 * c1 == c2 * c1 * c2));
  return out;
}

Mat braided_lift(const std::vector<int>& perm, const BraidedSpace& b) {
  const int n = int(perm.size());
  long total = 1;
  for (int k = 0; k < n; ++k) total *= b.dim;
  // peel letters from the right: w = w' s_i whenever i is a descent of w
  std::vector<int> cur = perm, word_rev;
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (cur[i] > cur[i + 1]) {
        word_rev.push_back(i);
        std::swap(cur[i], cur[i + 1]);
        progressed = true;
        break;
      }
  }
  SpMat m = sp_identity(total);
  for (auto it = word_rev.rbegin(); it != word_rev.rend(); ++it)
    m = sp_mul(m, sp_braiding_at(b.c, b.dim, n, *it));
  return sp_to_dense(m);
}

Mat quantum_symmetrizer(int n, const BraidedSpace& b, long cap) {
  long total = 1;
  for (int k = 0; k < n; ++k) total *= b.dim;
  if (total > cap) throw std::length_error("quantum_symmetrizer: d^n exceeds cap");
  return sp_to_dense(sp_symmetrizer(n, b));
}

Vec apply_symmetrizer(int n, const BraidedSpace& b, const Vec& tensor) {
  const int d = b.dim;
  std::function<Vec(int, const Vec&)> go = [&](int m, const Vec& u) -> Vec {
    if (m <= 1) return u;
    long total = long(u.size());
    Vec sum = u;
    Vec chain = u;
    for (int k = m - 2; k >= 0; --k) {
      chain = sp_apply(sp_braiding_at(b.c, d, m, k), chain);
      for (long i = 0; i < total; ++i) sum[i] += chain[i];
    }
    // (S_{m-1} (x) id): apply recursively on slices with fixed last index
    long head = total / d;
    std::vector<Vec> slices(d, Vec(head));
    for (long i = 0; i < total; ++i) slices[i % d][i / d] = sum[i];
    for (int l = 0; l < d; ++l) slices[l] = go(m - 1, slices[l]);
    Vec out(total);
    for (long i = 0; i < total; ++i) out[i] = slices[i % d][i / d];
    return out;
  };
  return go(n, tensor);
}

HilbertPrefix hilbert_prefix(const BraidedSpace& b, int maxdeg, long cap) {
  HilbertPrefix h;
  h.dims.assign(maxdeg + 1, 0);
  h.dims[0] = 1;
  if (maxdeg >= 1) h.dims[1] = b.dim;
  if (b.dim == 0) {
    h.certified_finite = true;
    return h;
  }
  bool dead = false;
  for (int n = 2; n <= maxdeg; ++n) {
    if (dead) {
      h.dims[n] = 0;
      continue;
    }
    long total = 1;
    for (int k = 0; k < n; ++k) total *= b.dim;
    if (total > cap) throw std::length_error("hilbert_prefix: d^n exceeds cap");
    SpMat s = sp_symmetrizer(n, b);
    if (sp_is_zero(s)) {
      h.dims[n] = 0;
    } else if (total <= 1024) {
      h.dims[n] = sp_to_dense(s).rank();
    } else {
      throw std::length_error("hilbert_prefix: nonzero symmetrizer too large for exact rank");
    }
    if (h.dims[n] == 0) dead = true;
  }
  for (long dval : h.dims)
    if (dval == 0) h.certified_finite = true;
  return h;
}

HilbertPrefix hilbert_prefix(const YDModule& v, int maxdeg, long cap) {
  return hilbert_prefix(braided_space(v), maxdeg, cap);
}

std::vector<Vec> quadratic_relations(const BraidedSpace& b) {
  Mat s2 = quantum_symmetrizer(2, b);
  return s2.kernel_basis();
}

bool quadratic_relations_match(const BraidedSpace& b, const std::vector<Vec>& claimed) {
  auto kernel = quadratic_relations(b);
  if (kernel.size() != claimed.size()) return false;
  const int n = b.dim * b.dim;
  // same span: stack both, rank must equal kernel rank, and claimed must lie in the kernel
  Mat s2 = quantum_symmetrizer(2, b);
  for (const auto& v : claimed) {
    Vec img = s2.apply(v);
    for (const auto& c : img)
      if (!c.is_zero()) return false;
  }
  Mat m(int(claimed.size()), n);
  for (size_t r = 0; r < claimed.size(); ++r)
    for (int j = 0; j < n; ++j) m.at(int(r), j) = claimed[r][j];
  return m.rank() == int(kernel.size());
}

std::optional<Vec> eigenvalue_one_witness(const YDModule& v) {
  Mat c = braiding(v, v);
  const int d = v.dim;
  auto is_fixed = [&](const Vec& w) {
    if (std::all_of(w.begin(), w.end(), [](const GaussRat& x) { return x.is_zero(); })) return false;
    Vec t(d * d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) t[i * d + j] = w[i] * w[j];
    return c.apply(t) == t;
  };
  // standard basis vectors
  for (int i = 0; i < d; ++i) {
    Vec w(d);
    w[i] = GaussRat(1);
    if (is_fixed(w)) return w;
  }
  // eigenvectors of the x-action
  {
    std::vector<GaussRat> poly;  // min poly of act[0] via brute charpoly on small dims
    // use kernel of (X - lambda) for candidate lambdas = 4th roots of unity and 0
    for (long e = 0; e < 4; ++e) {
      GaussRat lam = xi_power(e);
      Mat m = v.act[0] - Mat::identity(d) * lam;
      for (const auto& ker : m.kernel_basis())
        if (is_fixed(ker)) return ker;
    }
    (void)poly;
  }
  if (d == 2) {
    // complete search on the line v1 + gamma v2: four coordinate polynomials in gamma
    // lhs = c((v1+g v2)(x)(v1+g v2)) has coefficient vectors c(v1v1) + g(c(v1v2)+c(v2v1)) + g^2 c(v2v2)
    auto col = [&](int i, int j) {
      Vec r(4);
      for (int k = 0; k < 4; ++k) r[k] = c.at(k, i * 2 + j);
      return r;
    };
    Vec c00 = col(0, 0), c01 = col(0, 1), c10 = col(1, 0), c11 = col(1, 1);
    // rhs coefficient vectors: coordinate k of (v1+g v2)(x)(v1+g v2) is [1, g, g, g^2]
    // polynomial per coordinate k: c00[k] + (c01[k]+c10[k]) g + c11[k] g^2 - rhs_k(g)
    std::vector<std::vector<GaussRat>> polys(4, std::vector<GaussRat>(3, GaussRat(0)));
    for (int k = 0; k < 4; ++k) {
      polys[k][0] = c00[k];
      polys[k][1] = c01[k] + c10[k];
      polys[k][2] = c11[k];
    }
    polys[0][0] -= GaussRat(1);                      // rhs coordinate (0,0) = 1
    polys[1][1] -= GaussRat(1);                      // rhs (0,1) = g
    polys[2][1] -= GaussRat(1);                      // rhs (1,0) = g
    polys[3][2] -= GaussRat(1);                      // rhs (1,1) = g^2
    int first = -1;
    for (int k = 0; k < 4; ++k)
      if (!(polys[k][0].is_zero() && polys[k][1].is_zero() && polys[k][2].is_zero())) {
        first = k;
        break;
      }
    if (first >= 0) {
      for (const auto& g : roots_in_qi(polys[first])) {
        Vec w{GaussRat(1), g};
        if (is_fixed(w)) return w;
      }
    } else {
      Vec w{GaussRat(1), GaussRat(0)};
      if (is_fixed(w)) return w;
    }
  } else {
    // unit-coefficient pair combinations
    static const GaussRat units[4] = {GaussRat(1), GaussRat(-1), GaussRat::i(), -GaussRat::i()};
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (const auto& u : units) {
          Vec w(d);
          w[i] = GaussRat(1);
          w[j] = u;
          if (is_fixed(w)) return w;
        }
  }
  return std::nullopt;
}

bool pair_factorization(const YDModule& v, const YDModule& w) {
  Mat cvw = braiding(v, w), cwv = braiding(w, v);
  return cwv * cvw == Mat::identity(v.dim * w.dim);
}

std::optional<Mat> diagonal_data(const YDModule& v) {
  Mat c = braiding(v, v);
  const int d = v.dim;
  Mat q(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      // column of e_i (x) e_j must be supported on e_j (x) e_i alone
      for (int r = 0; r < d * d; ++r) {
        const GaussRat& e = c.at(r, i * d + j);
        if (e.is_zero()) continue;
        if (r != j * d + i) return std::nullopt;
        q.at(i, j) = e;
      }
      if (q.at(i, j).is_zero()) return std::nullopt;
    }
  return q;
}

}  // namespace kashina
