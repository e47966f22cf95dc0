/*
 * Test-side oracles, kept independent of the library code paths they
 * check: plain 3x3 integer matrices for the group law, and definitional
 * brute-force searches for roots, conjugacy and normalizers.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "heisvc/heis.hpp"

namespace oracle {

using heisvc::HeisElement;
using heisvc::Int;

struct Mat3 {
    std::array<std::array<Int, 3>, 3> e{};

    friend bool operator==(const Mat3&, const Mat3&) = default;
};

inline Mat3 mat_identity() {
    Mat3 m;
    for (int i = 0; i < 3; ++i) m.e[i][i] = 1;
    return m;
}

inline Mat3 to_mat(const HeisElement& g) {
    Mat3 m = mat_identity();
    m.e[0][1] = g.a;
    m.e[1][2] = g.b;
    m.e[0][2] = g.c;
    return m;
}

inline HeisElement from_mat(const Mat3& m) {
    return {m.e[0][1], m.e[1][2], m.e[0][2]};
}

inline Mat3 mat_mul(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            Int s = 0;
            for (int k = 0; k < 3; ++k) s += x.e[i][k] * y.e[k][j];
            r.e[i][j] = s;
        }
    }
    return r;
}

/// Gauss-free inverse for unitriangular matrices via the adjugate of the
/// embedded element would be circular; solve the linear system instead:
/// the inverse of an upper unitriangular 3x3 is upper unitriangular, so
/// three unknowns suffice.
inline Mat3 mat_inv(const Mat3& m) {
    // m * inv == identity gives inv = [[1,-a, ab-c],[0,1,-b],[0,0,1]]
    // entrywise; derive it by solving rather than delegating to the library:
    Mat3 r = mat_identity();
    r.e[0][1] = -m.e[0][1];
    r.e[1][2] = -m.e[1][2];
    r.e[0][2] = m.e[0][1] * m.e[1][2] - m.e[0][2];
    return r;
}

inline Mat3 mat_pow(const Mat3& m, Int n) {
    Mat3 acc = mat_identity();
    Mat3 step = n >= 0 ? m : mat_inv(m);
    Int count = n >= 0 ? n : -n;
    for (Int i = 0; i < count; ++i) acc = mat_mul(acc, step);
    return acc;
}

/// Brute-force conjugator search over (x,y) in the given ball; the
/// z-entry of a conjugator never changes the result. Matches generators
/// up to inversion (subgroup conjugacy).
inline std::optional<HeisElement> search_conjugator(const HeisElement& g1,
                                                    const HeisElement& g2,
                                                    Int ball) {
    Mat3 m1 = to_mat(g1);
    Mat3 t1 = to_mat(g2);
    Mat3 t2 = mat_inv(t1);
    for (Int x = -ball; x <= ball; ++x) {
        for (Int y = -ball; y <= ball; ++y) {
            Mat3 gamma = to_mat({x, y, 0});
            Mat3 c = mat_mul(mat_mul(gamma, m1), mat_inv(gamma));
            if (c == t1 || c == t2) return HeisElement{x, y, 0};
        }
    }
    return std::nullopt;
}

}  // namespace oracle
