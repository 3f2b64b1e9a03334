#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace csf {

// Exact signed 128-bit integer used for every symmetric-function coefficient.
// All arithmetic is overflow-checked; an overflow throws instead of wrapping.
class Coeff {
public:
  constexpr Coeff() = default;
  constexpr Coeff(long long v) : v_(v) {}

  static Coeff factorial(int n) {
    if (n < 0) throw std::invalid_argument("Coeff::factorial: negative argument");
    Coeff r(1);
    for (int i = 2; i <= n; ++i) r *= Coeff(i);
    return r;
  }

  Coeff& operator+=(Coeff o) {
    __int128 r;
    if (__builtin_add_overflow(v_, o.v_, &r)) throw std::overflow_error("Coeff: addition overflow");
    v_ = r;
    return *this;
  }
  Coeff& operator-=(Coeff o) {
    __int128 r;
    if (__builtin_sub_overflow(v_, o.v_, &r)) throw std::overflow_error("Coeff: subtraction overflow");
    v_ = r;
    return *this;
  }
  Coeff& operator*=(Coeff o) {
    __int128 r;
    if (__builtin_mul_overflow(v_, o.v_, &r)) throw std::overflow_error("Coeff: multiplication overflow");
    v_ = r;
    return *this;
  }

  friend Coeff operator+(Coeff a, Coeff b) { return a += b; }
  friend Coeff operator-(Coeff a, Coeff b) { return a -= b; }
  friend Coeff operator*(Coeff a, Coeff b) { return a *= b; }
  Coeff operator-() const {
    Coeff r(0);
    r -= *this;
    return r;
  }

  // Division that must be exact; a nonzero remainder indicates an internal error.
  Coeff exact_div(Coeff d) const {
    if (d.v_ == 0) throw std::invalid_argument("Coeff::exact_div: division by zero");
    if (v_ % d.v_ != 0) throw std::logic_error("Coeff::exact_div: inexact division");
    return Coeff(v_ / d.v_, 0);
  }

  bool is_zero() const { return v_ == 0; }
  bool is_negative() const { return v_ < 0; }

  friend bool operator==(Coeff a, Coeff b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(Coeff a, Coeff b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ > b.v_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // Fits-in-int64 accessor for serialization boundaries.
  long long to_int64() const {
    if (v_ > INT64_MAX || v_ < INT64_MIN) throw std::overflow_error("Coeff: does not fit in 64 bits");
    return static_cast<long long>(v_);
  }

  std::string str() const {
    if (v_ == 0) return "0";
    unsigned __int128 mag = v_ < 0 ? -static_cast<unsigned __int128>(v_) : static_cast<unsigned __int128>(v_);
    std::string digits;
    while (mag > 0) {
      digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
      mag /= 10;
    }
    if (v_ < 0) digits.push_back('-');
    return std::string(digits.rbegin(), digits.rend());
  }

private:
  constexpr explicit Coeff(__int128 v, int) : v_(v) {}
  __int128 v_ = 0;
};

}  // namespace csf
