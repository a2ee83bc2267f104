// Exact arithmetic over dyadic rationals, i.e. numbers of the form num / 2^k.
// Sums and products of dyadics are dyadics, so every quantity in this library
// that must be exact (spectra, phase coefficients, phase sums) lives here.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace pfrep {

using bigint = boost::multiprecision::cpp_int;

// Floor division by 2^k (cpp_int division truncates toward zero).
inline bigint floor_div_pow2(const bigint& a, int k) {
    bigint d = bigint(1) << k;
    bigint q = a / d;
    if (a < 0 && q * d != a) --q;
    return q;
}

// value = num / 2^den_pow, kept reduced: den_pow == 0, or num odd.
class dyadic {
public:
    dyadic() : num_(0), den_pow_(0) {}
    dyadic(long long v) : num_(v), den_pow_(0) {}  // NOLINT: implicit on purpose
    dyadic(bigint num, int den_pow) : num_(std::move(num)), den_pow_(den_pow) {
        if (den_pow_ < 0) throw std::invalid_argument("dyadic: negative denominator exponent");
        reduce();
    }

    static dyadic from_ratio(bigint num, int den_pow) { return dyadic(std::move(num), den_pow); }

    const bigint& num() const { return num_; }
    int den_pow() const { return den_pow_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_pow_ == 0; }

    // Number of binary digits: the unique k with value in R_k \ R_{k-1}; 0 for integers.
    int digits() const { return den_pow_; }

    // Parity of the value when it is an integer, nothing otherwise.
    std::optional<int> integer_parity() const {
        if (!is_integer()) return std::nullopt;
        return static_cast<int>(num_ & 1);
    }

    dyadic operator-() const {
        dyadic r;
        r.num_ = -num_;
        r.den_pow_ = den_pow_;
        return r;
    }

    friend dyadic operator+(const dyadic& a, const dyadic& b) {
        int p = std::max(a.den_pow_, b.den_pow_);
        return dyadic(a.scaled_num(p) + b.scaled_num(p), p);
    }
    friend dyadic operator-(const dyadic& a, const dyadic& b) { return a + (-b); }
    friend dyadic operator*(const dyadic& a, const dyadic& b) {
        return dyadic(a.num_ * b.num_, a.den_pow_ + b.den_pow_);
    }
    dyadic& operator+=(const dyadic& o) { return *this = *this + o; }
    dyadic& operator-=(const dyadic& o) { return *this = *this - o; }
    dyadic& operator*=(const dyadic& o) { return *this = *this * o; }

    // value * 2^k, k may be negative.
    dyadic scale_pow2(int k) const {
        if (k >= 0) return dyadic(num_ << static_cast<unsigned>(k), den_pow_);
        return dyadic(num_, den_pow_ - k);
    }

    friend bool operator==(const dyadic& a, const dyadic& b) {
        return a.den_pow_ == b.den_pow_ && a.num_ == b.num_;
    }
    friend std::strong_ordering operator<=>(const dyadic& a, const dyadic& b) {
        int p = std::max(a.den_pow_, b.den_pow_);
        bigint x = a.scaled_num(p), y = b.scaled_num(p);
        if (x < y) return std::strong_ordering::less;
        if (x > y) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    bigint floor() const { return floor_div_pow2(num_, den_pow_); }

    // Splits d as carry*m + residue with residue in [0, m); m in {1, 2}.
    std::pair<dyadic, bigint> reduce_mod(int m) const {
        if (m != 1 && m != 2) throw std::invalid_argument("reduce_mod: modulus must be 1 or 2");
        bigint carry = m == 1 ? floor() : floor_div_pow2(num_, den_pow_ + 1);
        dyadic residue = *this - dyadic(carry * m, 0);
        return {residue, carry};
    }

    double to_double() const {
        return num_.convert_to<double>() * std::pow(2.0, -den_pow_);
    }

    std::string to_string() const {
        if (is_integer()) return num_.str();
        return num_.str() + "/2^" + std::to_string(den_pow_);
    }

private:
    bigint num_;
    int den_pow_;

    void reduce() {
        if (num_ == 0) {
            den_pow_ = 0;
            return;
        }
        while (den_pow_ > 0 && (num_ & 1) == 0) {
            num_ >>= 1;
            --den_pow_;
        }
    }

    bigint scaled_num(int p) const { return den_pow_ == p ? num_ : num_ << static_cast<unsigned>(p - den_pow_); }
};

}  // namespace pfrep
