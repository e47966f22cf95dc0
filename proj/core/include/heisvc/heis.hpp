/*
 * Exact arithmetic in the discrete Heisenberg group.
 *
 * An element (a,b,c) encodes the upper-unitriangular matrix
 *
 *     [ 1 a c ]
 *     [ 0 1 b ]
 *     [ 0 0 1 ]
 *
 * so the group law is (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
 * The identity is (0,0,0); the center is {(0,0,c)}.
 */

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include "heisvc/intmath.hpp"

namespace heisvc {

struct HeisElement {
    Int a = 0;  // upper-right row entry
    Int b = 0;  // middle-column entry
    Int c = 0;  // corner entry

    friend auto operator<=>(const HeisElement&, const HeisElement&) = default;
};

inline constexpr HeisElement kIdentity{};

inline bool is_identity(const HeisElement& g) { return g == kIdentity; }

HeisElement mul(const HeisElement& g, const HeisElement& h);
HeisElement inv(const HeisElement& g);

/// g^n via the closed form (n*a, n*b, n*c + binom2(n)*a*b); valid for all
/// integer n including negatives.
HeisElement pow(const HeisElement& g, Int n);

/// g*h*g^-1*h^-1 = (0, 0, a*b' - a'*b).
HeisElement commutator(const HeisElement& g, const HeisElement& h);

/// by*g*by^-1 = (a, b, c + x*b - y*a) for by=(x,y,z).
HeisElement conjugate(const HeisElement& by, const HeisElement& g);

inline bool is_central(const HeisElement& g) { return g.a == 0 && g.b == 0; }

/// "a b c"
std::string to_triple(const HeisElement& g);
/// Parses "a b c"; throws std::invalid_argument on malformed input.
HeisElement parse_triple(std::string_view text);

/// {"a":..,"b":..,"c":..}
std::string to_json_text(const HeisElement& g);

std::ostream& operator<<(std::ostream& os, const HeisElement& g);

}  // namespace heisvc
