#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace braidthom {

/// Exact dyadic rational num / 2^exp. All interval endpoints in this library
/// are dyadic and compared exactly; there is no floating point anywhere.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(std::int64_t num, int exp) : num_(num), exp_(exp) {
    if (exp < 0 || exp > kMaxExp) throw std::overflow_error("dyadic exponent out of range");
    normalize();
  }

  static Dyadic zero() { return Dyadic(0, 0); }
  static Dyadic one() { return Dyadic(1, 0); }

  std::int64_t num() const { return num_; }
  int exp() const { return exp_; }

  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.num_ == b.num_ && a.exp_ == b.exp_;
  }
  friend bool operator<(const Dyadic& a, const Dyadic& b) {
    // cross-multiply in 128 bits; exponents are capped so this cannot overflow
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return (static_cast<__int128>(a.num_) << (e - a.exp_)) <
           (static_cast<__int128>(b.num_) << (e - b.exp_));
  }
  friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a == b || a < b; }
  friend bool operator>(const Dyadic& a, const Dyadic& b) { return b < a; }
  friend bool operator>=(const Dyadic& a, const Dyadic& b) { return b <= a; }
  friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }

  friend Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return Dyadic(shifted(a, e) + shifted(b, e), e);
  }
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    const int e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    return Dyadic(shifted(a, e) - shifted(b, e), e);
  }

  /// Value times 2^k (k may be negative).
  Dyadic scaled_pow2(int k) const {
    if (k >= 0) {
      if (exp_ >= k) return Dyadic(num_, exp_ - k);
      return Dyadic(checked_shift(num_, k - exp_), 0);
    }
    return Dyadic(num_, exp_ - k);
  }

  std::string str() const {
    if (exp_ == 0) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(std::int64_t(1) << exp_);
  }

private:
  static constexpr int kMaxExp = 62;

  static std::int64_t shifted(const Dyadic& d, int e) {
    return checked_shift(d.num_, e - d.exp_);
  }
  static std::int64_t checked_shift(std::int64_t v, int k) {
    __int128 r = static_cast<__int128>(v) << k;
    if (r > INT64_MAX || r < INT64_MIN) throw std::overflow_error("dyadic numerator overflow");
    return static_cast<std::int64_t>(r);
  }
  void normalize() {
    while (exp_ > 0 && num_ % 2 == 0) {
      num_ /= 2;
      --exp_;
    }
  }

  std::int64_t num_ = 0;
  int exp_ = 0;
};

/// The interval [num/2^d, (num+1)/2^d] of the dyadic subdivision of [0,1].
struct DyadicInterval {
  std::int64_t num = 0;
  int log_den = 0;

  DyadicInterval() = default;
  DyadicInterval(std::int64_t n, int d) : num(n), log_den(d) {
    if (d < 0 || d > 62) throw std::overflow_error("interval depth out of range");
    if (n < 0 || n >= (std::int64_t(1) << d))
      throw std::invalid_argument("dyadic interval outside [0,1]");
  }

  static DyadicInterval whole() { return DyadicInterval(0, 0); }

  Dyadic lo() const { return Dyadic(num, log_den); }
  Dyadic hi() const { return Dyadic(num + 1, log_den); }
  Dyadic mid() const { return Dyadic(2 * num + 1, log_den + 1); }

  DyadicInterval left_half() const { return DyadicInterval(2 * num, log_den + 1); }
  DyadicInterval right_half() const { return DyadicInterval(2 * num + 1, log_den + 1); }

  bool contains(const Dyadic& x) const { return lo() <= x && x <= hi(); }
  bool contains(const DyadicInterval& other) const {
    return lo() <= other.lo() && other.hi() <= hi();
  }

  friend bool operator==(const DyadicInterval& a, const DyadicInterval& b) {
    return a.num == b.num && a.log_den == b.log_den;
  }

  std::string str() const { return "[" + lo().str() + "," + hi().str() + "]"; }
};

}  // namespace braidthom
