#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace kashina {

using Int = boost::multiprecision::cpp_int;

// Element of Q(i), kept canonical: both fractions in lowest terms, denominators > 0.
// All structure constants in this project live here; xi (the primitive 4th root of
// unity) is the element i.
class GaussRat {
 public:
  GaussRat() : re_num_(0), re_den_(1), im_num_(0), im_den_(1) {}
  GaussRat(long v) : re_num_(v), re_den_(1), im_num_(0), im_den_(1) {}
  GaussRat(const Int& num, const Int& den) : re_num_(num), re_den_(den), im_num_(0), im_den_(1) {
    if (den == 0) throw std::domain_error("GaussRat: zero denominator");
    reduce(re_num_, re_den_);
  }
  static GaussRat make(const Int& rn, const Int& rd, const Int& in, const Int& id);
  static GaussRat i() { return make(0, 1, 1, 1); }
  static GaussRat half() { return GaussRat(1, 2); }

  const Int& re_num() const { return re_num_; }
  const Int& re_den() const { return re_den_; }
  const Int& im_num() const { return im_num_; }
  const Int& im_den() const { return im_den_; }

  bool is_zero() const { return re_num_ == 0 && im_num_ == 0; }
  bool is_one() const { return re_num_ == 1 && re_den_ == 1 && im_num_ == 0; }
  bool is_real() const { return im_num_ == 0; }

  GaussRat operator+(const GaussRat& o) const;
  GaussRat operator-(const GaussRat& o) const;
  GaussRat operator-() const;
  GaussRat operator*(const GaussRat& o) const;
  GaussRat operator/(const GaussRat& o) const;  // throws std::domain_error on o == 0
  GaussRat& operator+=(const GaussRat& o) { *this = *this + o; return *this; }
  GaussRat& operator-=(const GaussRat& o) { *this = *this - o; return *this; }
  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
  GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }

  bool operator==(const GaussRat& o) const {
    return re_num_ == o.re_num_ && re_den_ == o.re_den_ && im_num_ == o.im_num_ && im_den_ == o.im_den_;
  }
  bool operator!=(const GaussRat& o) const { return !(*this == o); }
  // Arbitrary but consistent total order; used only for canonical sorting.
  bool operator<(const GaussRat& o) const;

  GaussRat conj() const { return make(re_num_, re_den_, -im_num_, im_den_); }
  GaussRat inv() const;  // throws on zero

  // Canonical text form "a/b+c/d*i"; format/parse round-trip exactly.
  std::string str() const;
  static GaussRat parse(const std::string& s);
  static std::optional<GaussRat> try_parse(const std::string& s);

 private:
  static void reduce(Int& num, Int& den);
  Int re_num_, re_den_, im_num_, im_den_;
};

inline GaussRat operator*(long a, const GaussRat& b) { return GaussRat(a) * b; }

// i^(n mod 4); n may be negative.
GaussRat xi_power(long n);

enum class ArithOp { add, sub, mul, div };
GaussRat arith(ArithOp op, const GaussRat& a, const GaussRat& b);

}  // namespace kashina
