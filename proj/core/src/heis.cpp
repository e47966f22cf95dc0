#include "heisvc/heis.hpp"

#include <charconv>
#include <ostream>
#include <sstream>

namespace heisvc {

HeisElement mul(const HeisElement& g, const HeisElement& h) {
    return {checked_add(g.a, h.a),
            checked_add(g.b, h.b),
            checked_add(checked_add(g.c, h.c), checked_mul(g.a, h.b))};
}

HeisElement inv(const HeisElement& g) {
    return {checked_neg(g.a), checked_neg(g.b),
            checked_sub(checked_mul(g.a, g.b), g.c)};
}

HeisElement pow(const HeisElement& g, Int n) {
    return {checked_mul(n, g.a), checked_mul(n, g.b),
            checked_add(checked_mul(n, g.c),
                        checked_mul(binom2(n), checked_mul(g.a, g.b)))};
}

HeisElement commutator(const HeisElement& g, const HeisElement& h) {
    return {0, 0, checked_sub(checked_mul(g.a, h.b), checked_mul(h.a, g.b))};
}

HeisElement conjugate(const HeisElement& by, const HeisElement& g) {
    Int shift = checked_sub(checked_mul(by.a, g.b), checked_mul(by.b, g.a));
    return {g.a, g.b, checked_add(g.c, shift)};
}

std::string to_triple(const HeisElement& g) {
    std::ostringstream os;
    os << g.a << ' ' << g.b << ' ' << g.c;
    return os.str();
}

HeisElement parse_triple(std::string_view text) {
    Int vals[3];
    const char* p = text.data();
    const char* end = text.data() + text.size();
    for (int i = 0; i < 3; ++i) {
        while (p != end && (*p == ' ' || *p == '\t')) ++p;
        auto [next, ec] = std::from_chars(p, end, vals[i]);
        if (ec != std::errc{}) {
            throw std::invalid_argument("malformed element triple: \"" +
                                        std::string(text) + "\"");
        }
        p = next;
    }
    while (p != end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) {
        throw std::invalid_argument("trailing input in element triple: \"" +
                                    std::string(text) + "\"");
    }
    return {vals[0], vals[1], vals[2]};
}

std::string to_json_text(const HeisElement& g) {
    std::ostringstream os;
    os << "{\"a\":" << g.a << ",\"b\":" << g.b << ",\"c\":" << g.c << "}";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const HeisElement& g) {
    return os << '(' << g.a << ',' << g.b << ',' << g.c << ')';
}

}  // namespace heisvc
