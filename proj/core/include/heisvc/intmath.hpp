/*
 * Checked 64-bit integer arithmetic and small number-theoretic helpers.
 *
 * Every arithmetic operation in this project goes through these wrappers:
 * a result that does not fit in int64 raises std::overflow_error instead
 * of wrapping.
 */

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace heisvc {

using Int = std::int64_t;

[[noreturn]] inline void throw_overflow(const char* op) {
    throw std::overflow_error(std::string("integer overflow in ") + op);
}

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
    return r;
}

inline Int checked_neg(Int a) {
    if (a == INT64_MIN) throw_overflow("neg");
    return -a;
}

inline Int checked_abs(Int a) { return a < 0 ? checked_neg(a) : a; }

/// gcd(|a|,|b|), always >= 0.
inline Int gcd(Int a, Int b) {
    a = checked_abs(a);
    b = checked_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// n*(n-1)/2, valid for negative n as well (the quadratic term of the
/// iterated group law).
inline Int binom2(Int n) {
    Int m = checked_mul(n, checked_sub(n, 1));
    return m / 2;  // n(n-1) is always even
}

struct ExtGcd {
    Int g;  // gcd(|p|,|q|) >= 0
    Int u;  // u*p + v*q == g
    Int v;
};

/// Extended Euclid. Deterministic; g >= 0 even for negative inputs.
inline ExtGcd ext_gcd(Int p, Int q) {
    Int old_r = p, r = q;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int quot = old_r / r;
        Int tmp;
        tmp = checked_sub(old_r, checked_mul(quot, r)); old_r = r; r = tmp;
        tmp = checked_sub(old_s, checked_mul(quot, s)); old_s = s; s = tmp;
        tmp = checked_sub(old_t, checked_mul(quot, t)); old_t = t; t = tmp;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_s = checked_neg(old_s);
        old_t = checked_neg(old_t);
    }
    return {old_r, old_s, old_t};
}

/// c mod m with result in [0, m); requires m > 0.
inline Int mod_floor(Int c, Int m) {
    Int r = c % m;
    return r < 0 ? r + m : r;
}

}  // namespace heisvc
