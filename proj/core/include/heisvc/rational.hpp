/*
 * Minimal exact rational on checked 64-bit integers. Point coordinates in
 * the model space use this so that equality of points is decidable.
 */

#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "heisvc/intmath.hpp"

namespace heisvc {

class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(Int n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
    Rational(Int num, Int den) : num_(num), den_(den) {
        if (den_ == 0) throw std::invalid_argument("zero denominator");
        if (den_ < 0) {
            num_ = checked_neg(num_);
            den_ = checked_neg(den_);
        }
        Int g = gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num() const { return num_; }
    Int den() const { return den_; }

    Rational operator-() const { return {checked_neg(num_), den_}; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return {checked_add(checked_mul(x.num_, y.den_),
                            checked_mul(y.num_, x.den_)),
                checked_mul(x.den_, y.den_)};
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return x + (-y);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return {checked_mul(x.num_, y.num_), checked_mul(x.den_, y.den_)};
    }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& x,
                                            const Rational& y) {
        return checked_mul(x.num_, y.den_) <=> checked_mul(y.num_, x.den_);
    }

    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

  private:
    Int num_;
    Int den_;  // > 0; gcd(|num|, den) == 1
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace heisvc
