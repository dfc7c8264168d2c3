#include "kashina/gaussrat.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace kashina {

namespace {

Int igcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int r = a % b;
    a = b;
    b = r;
  }
  return a;
}

// num/den + num'/den' as a reduced pair
void frac_add(const Int& an, const Int& ad, const Int& bn, const Int& bd, Int& on, Int& od) {
  on = an * bd + bn * ad;
  od = ad * bd;
}

void frac_mul(const Int& an, const Int& ad, const Int& bn, const Int& bd, Int& on, Int& od) {
  on = an * bn;
  od = ad * bd;
}

}  // namespace

void GaussRat::reduce(Int& num, Int& den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  Int g = igcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

GaussRat GaussRat::make(const Int& rn, const Int& rd, const Int& in, const Int& id) {
  if (rd == 0 || id == 0) throw std::domain_error("GaussRat: zero denominator");
  GaussRat r;
  r.re_num_ = rn;
  r.re_den_ = rd;
  r.im_num_ = in;
  r.im_den_ = id;
  reduce(r.re_num_, r.re_den_);
  reduce(r.im_num_, r.im_den_);
  return r;
}

GaussRat GaussRat::operator+(const GaussRat& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  Int rn, rd, in, id;
  frac_add(re_num_, re_den_, o.re_num_, o.re_den_, rn, rd);
  frac_add(im_num_, im_den_, o.im_num_, o.im_den_, in, id);
  return make(rn, rd, in, id);
}

GaussRat GaussRat::operator-() const { return make(-re_num_, re_den_, -im_num_, im_den_); }

GaussRat GaussRat::operator-(const GaussRat& o) const { return *this + (-o); }

GaussRat GaussRat::operator*(const GaussRat& o) const {
  if (is_zero() || o.is_zero()) return GaussRat(0);
  if (is_one()) return o;
  if (o.is_one()) return *this;
  bool a_real = im_num_ == 0, a_imag = re_num_ == 0;
  bool b_real = o.im_num_ == 0, b_imag = o.re_num_ == 0;
  if ((a_real || a_imag) && (b_real || b_imag)) {
    const Int& an = a_real ? re_num_ : im_num_;
    const Int& ad = a_real ? re_den_ : im_den_;
    const Int& bn = b_real ? o.re_num_ : o.im_num_;
    const Int& bd = b_real ? o.re_den_ : o.im_den_;
    GaussRat r;
    Int num = an * bn, den = ad * bd;
    if (a_imag && b_imag) num = -num;  // i * i = -1
    reduce(num, den);
    if (a_real == b_real) {  // both real or both imaginary: real result
      r.re_num_ = std::move(num);
      r.re_den_ = std::move(den);
    } else {
      r.im_num_ = std::move(num);
      r.im_den_ = std::move(den);
    }
    return r;
  }
  // (a+bi)(c+di) = (ac - bd) + (ad + bc)i
  Int acn, acd, bdn, bdd, adn, add_, bcn, bcd;
  frac_mul(re_num_, re_den_, o.re_num_, o.re_den_, acn, acd);
  frac_mul(im_num_, im_den_, o.im_num_, o.im_den_, bdn, bdd);
  frac_mul(re_num_, re_den_, o.im_num_, o.im_den_, adn, add_);
  frac_mul(im_num_, im_den_, o.re_num_, o.re_den_, bcn, bcd);
  Int rn, rd, in, id;
  frac_add(acn, acd, -bdn, bdd, rn, rd);
  frac_add(adn, add_, bcn, bcd, in, id);
  return make(rn, rd, in, id);
}

GaussRat GaussRat::inv() const {
  if (is_zero()) throw std::domain_error("GaussRat: division by zero");
  // 1/z = conj(z) / |z|^2 ; |z|^2 = a^2 + b^2 as exact rational
  Int n2n, n2d, t1n, t1d, t2n, t2d;
  frac_mul(re_num_, re_den_, re_num_, re_den_, t1n, t1d);
  frac_mul(im_num_, im_den_, im_num_, im_den_, t2n, t2d);
  frac_add(t1n, t1d, t2n, t2d, n2n, n2d);
  // conj * (n2d / n2n)
  Int rn, rd, in, id;
  frac_mul(re_num_, re_den_, n2d, n2n, rn, rd);
  frac_mul(-im_num_, im_den_, n2d, n2n, in, id);
  return make(rn, rd, in, id);
}

GaussRat GaussRat::operator/(const GaussRat& o) const { return *this * o.inv(); }

bool GaussRat::operator<(const GaussRat& o) const {
  // lexicographic on (re, im) as exact rationals
  Int l = re_num_ * o.re_den_, r = o.re_num_ * re_den_;
  if (l != r) return l < r;
  l = im_num_ * o.im_den_;
  r = o.im_num_ * im_den_;
  return l < r;
}

std::string GaussRat::str() const {
  std::string s = re_num_.str() + "/" + re_den_.str();
  if (im_num_ < 0) {
    s += "-" + Int(-im_num_).str();
  } else {
    s += "+" + im_num_.str();
  }
  s += "/" + im_den_.str() + "*i";
  return s;
}

std::optional<GaussRat> GaussRat::try_parse(const std::string& s) {
  // grammar: INT "/" UINT ("+"|"-") UINT "/" UINT "*i"
  size_t pos = 0;
  auto read_int = [&](bool allow_sign) -> std::optional<Int> {
    size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
      ++pos;
      ++digits;
    }
    if (digits == 0) return std::nullopt;
    return Int(s.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  };
  auto rn = read_int(true);
  if (!rn || !expect('/')) return std::nullopt;
  auto rd = read_int(false);
  if (!rd) return std::nullopt;
  if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) return std::nullopt;
  bool neg = s[pos] == '-';
  ++pos;
  auto in = read_int(false);
  if (!in || !expect('/')) return std::nullopt;
  auto id = read_int(false);
  if (!id || !expect('*') || !expect('i') || pos != s.size()) return std::nullopt;
  if (*rd == 0 || *id == 0) return std::nullopt;
  return make(*rn, *rd, neg ? Int(-*in) : *in, *id);
}

GaussRat GaussRat::parse(const std::string& s) {
  auto r = try_parse(s);
  if (!r) throw std::invalid_argument("GaussRat: cannot parse '" + s + "'");
  return *r;
}

GaussRat xi_power(long n) {
  long m = ((n % 4) + 4) % 4;
  switch (m) {
    case 0: return GaussRat(1);
    case 1: return GaussRat::i();
    case 2: return GaussRat(-1);
    default: return -GaussRat::i();
  }
}

GaussRat arith(ArithOp op, const GaussRat& a, const GaussRat& b) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
  }
  throw std::logic_error("arith: bad op");
}

}  // namespace kashina
