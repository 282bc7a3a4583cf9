#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <functional>

namespace trit {

struct overflow_error : std::runtime_error {
  overflow_error() : std::runtime_error("exact arithmetic overflow (coefficients too large)") {}
};

using int128 = __int128;

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error();
  return r;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error();
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error();
  return r;
}

// Exact rational number. Always reduced, denominator > 0. Operations never
// round; they throw overflow_error if a value exceeds 128-bit intermediates.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(int n) : num_(n), den_(1) {}
  Rat(int128 n, int128 d) : num_(n), den_(d) { normalize(); }

  static Rat of(long long n, long long d) { return Rat((int128)n, (int128)d); }

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }

  Rat operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  Rat operator+(const Rat& o) const {
    int128 g = gcd128(den_, o.den_);
    int128 dl = den_ / g;
    int128 dr = o.den_ / g;
    int128 n = checked_add(checked_mul(num_, dr), checked_mul(o.num_, dl));
    int128 d = checked_mul(den_, dr);
    return Rat(n, d);
  }
  Rat operator-(const Rat& o) const { return *this + (-o); }

  Rat operator*(const Rat& o) const {
    int128 g1 = gcd128(num_, o.den_);
    int128 g2 = gcd128(o.num_, den_);
    Rat r;
    r.num_ = checked_mul(num_ / g1, o.num_ / g2);
    r.den_ = checked_mul(den_ / g2, o.den_ / g1);
    return r;
  }

  Rat operator/(const Rat& o) const {
    if (o.num_ == 0) throw std::domain_error("division by zero");
    Rat inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return *this * inv;
  }

  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  // sign of (*this - o) without building the difference
  int cmp(const Rat& o) const {
    // num_/den_ <=> o.num_/o.den_  with positive denominators
    int128 l = checked_mul(num_, o.den_);
    int128 r = checked_mul(o.num_, den_);
    return l < r ? -1 : (l > r ? 1 : 0);
  }

  bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const { return cmp(o) < 0; }
  bool operator<=(const Rat& o) const { return cmp(o) <= 0; }
  bool operator>(const Rat& o) const { return cmp(o) > 0; }
  bool operator>=(const Rat& o) const { return cmp(o) >= 0; }

  Rat abs() const { return num_ < 0 ? -*this : *this; }

  double to_double() const { return (double)num_ / (double)den_; }

  std::string str() const {
    std::string s = to_string(num_);
    if (den_ != 1) s += "/" + to_string(den_);
    return s;
  }

  // parses "p", "-p", "p/q"
  static Rat parse(const std::string& s);

  static std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string out;
    while (u) {
      out += char('0' + (int)(u % 10));
      u /= 10;
    }
    if (neg) out += '-';
    return std::string(out.rbegin(), out.rend());
  }

  size_t hash() const {
    auto fold = [](int128 v) {
      uint64_t lo = (uint64_t)v;
      uint64_t hi = (uint64_t)(v >> 64);
      return lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0x7f4a7c15u);
    };
    return fold(num_) * 31 + fold(den_);
  }

 private:
  void normalize() {
    if (den_ == 0) throw std::domain_error("zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    if (num_ == 0) {
      den_ = 1;
      return;
    }
    int128 g = gcd128(num_, den_);
    num_ /= g;
    den_ /= g;
  }

  int128 num_;
  int128 den_;
};

inline Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) -> int128 {
    int128 v = 0;
    bool neg = false;
    size_t i = 0;
    if (i < t.size() && (t[i] == '-' || t[i] == '+')) {
      neg = t[i] == '-';
      ++i;
    }
    if (i == t.size()) throw std::invalid_argument("bad rational: " + t);
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad rational: " + t);
      v = checked_add(checked_mul(v, 10), t[i] - '0');
    }
    return neg ? -v : v;
  };
  if (slash == std::string::npos) return Rat(parse_int(s), 1);
  return Rat(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

inline Rat min(const Rat& a, const Rat& b) { return a <= b ? a : b; }
inline Rat max(const Rat& a, const Rat& b) { return a >= b ? a : b; }

}  // namespace trit

template <>
struct std::hash<trit::Rat> {
  size_t operator()(const trit::Rat& r) const { return r.hash(); }
};
