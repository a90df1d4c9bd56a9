#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "scedeco/errors.hpp"

namespace scedeco {

// Exact rational with 64-bit numerator/denominator. Fitness payloads are
// step counts and match fractions, so no arithmetic beyond negation and
// comparison is needed; comparisons cross-multiply in 128 bits and never
// overflow.
class rational {
 public:
  constexpr rational() = default;
  constexpr rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)

  rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw config_error("rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  friend bool operator==(const rational& a, const rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend bool operator<(const rational& a, const rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }

  friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
  friend bool operator>(const rational& a, const rational& b) { return b < a; }
  friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
  friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

  rational operator-() const {
    rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace scedeco
