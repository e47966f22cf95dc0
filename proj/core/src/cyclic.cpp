#include "heisvc/cyclic.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>
#include <vector>

namespace heisvc {

namespace {

// Divisors of n > 0 in decreasing order.
std::vector<Int> divisors_desc(Int n) {
    std::vector<Int> divs;
    for (Int i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            divs.push_back(i);
            if (i != n / i) divs.push_back(n / i);
        }
    }
    std::sort(divs.begin(), divs.end(), std::greater<Int>());
    return divs;
}

bool canonical_direction(const HeisElement& g) {
    return g.a > 0 || (g.a == 0 && g.b > 0);
}

}  // namespace

HeisElement ConjClassId::representative() const {
    if (kind == ClassKind::Center) return {0, 0, 1};
    return {a, b, c_residue};
}

std::string ConjClassId::to_string() const {
    if (kind == ClassKind::Center) return "Z";
    std::ostringstream os;
    os << '(' << a << ',' << b << ";" << c_residue << ')';
    return os.str();
}

const char* Classification::kind_name() const {
    switch (kind) {
        case Trivial: return "Trivial";
        case CentralCyclic: return "CentralCyclic";
        case NonCentralCyclic: return "NonCentralCyclic";
        case AbelianNonCyclic: return "AbelianNonCyclic";
        case NonAbelian: return "NonAbelian";
    }
    return "?";
}

PrimitiveDecomposition primitive_root(const HeisElement& g) {
    if (is_identity(g)) {
        throw std::invalid_argument("no primitive root of identity");
    }
    if (is_central(g)) {
        return {{0, 0, g.c > 0 ? Int{1} : Int{-1}}, checked_abs(g.c)};
    }
    Int d = gcd(g.a, g.b);
    // g is an n-th power iff n | a, n | b and n | c - binom2(n)(a/n)(b/n);
    // take the largest such divisor of d.
    for (Int n : divisors_desc(d)) {
        Int t = checked_sub(g.c, checked_mul(binom2(n),
                                             checked_mul(g.a / n, g.b / n)));
        if (t % n == 0) {
            return {{g.a / n, g.b / n, t / n}, n};
        }
    }
    return {g, 1};  // n = 1 always succeeds; unreachable
}

bool is_primitive(const HeisElement& g) {
    return !is_identity(g) && primitive_root(g).exponent == 1;
}

ConjClassId canonical_class(const HeisElement& g) {
    if (is_identity(g) || !is_primitive(g)) {
        throw std::invalid_argument("generator not primitive");
    }
    if (is_central(g)) {
        return {0, 0, 0, ClassKind::Center};
    }
    HeisElement h = canonical_direction(g) ? g : inv(g);
    // Conjugation shifts c by exactly the lattice {x*b - y*a} = d*Z.
    Int d = gcd(h.a, h.b);
    return {h.a, h.b, mod_floor(h.c, d), ClassKind::NonCentral};
}

bool are_conjugate(const HeisElement& g1, const HeisElement& g2) {
    return canonical_class(g1) == canonical_class(g2);
}

HeisElement find_conjugator(const HeisElement& g_from, const HeisElement& g_to) {
    ConjClassId from_id = canonical_class(g_from);
    if (from_id != canonical_class(g_to)) {
        throw std::invalid_argument("not conjugate");
    }
    if (from_id.kind == ClassKind::Center) return kIdentity;

    // Pick the generator of <g_to> with the same direction as g_from.
    HeisElement target = g_to;
    if (target.a != g_from.a || target.b != g_from.b) target = inv(g_to);

    Int d = gcd(g_from.a, g_from.b);
    Int delta = checked_sub(target.c, g_from.c);
    if (delta % d != 0) throw std::logic_error("conjugacy residue mismatch");

    // Solve x*b - y*a = delta; solutions form a line with step (a/d, b/d).
    ExtGcd eg = ext_gcd(g_from.b, checked_neg(g_from.a));
    Int scale = delta / d;
    Int x0 = checked_mul(eg.u, scale);
    Int y0 = checked_mul(eg.v, scale);
    Int alpha = g_from.a / d, beta = g_from.b / d;

    Int best_x = x0, best_y = y0, best_t = 0;
    bool have = false;
    auto consider = [&](Int t) {
        Int x = checked_sub(x0, checked_mul(t, alpha));
        Int y = checked_sub(y0, checked_mul(t, beta));
        Int norm = std::max(checked_abs(x), checked_abs(y));
        Int best_norm = std::max(checked_abs(best_x), checked_abs(best_y));
        bool better = !have || norm < best_norm ||
                      (norm == best_norm &&
                       (checked_abs(t) < checked_abs(best_t) ||
                        (checked_abs(t) == checked_abs(best_t) && t < best_t)));
        if (better) { best_x = x; best_y = y; best_t = t; have = true; }
    };
    consider(0);
    if (alpha != 0) {
        Int q = x0 / alpha;
        for (Int t : {q - 1, q, q + 1}) consider(t);
    }
    if (beta != 0) {
        Int q = y0 / beta;
        for (Int t : {q - 1, q, q + 1}) consider(t);
    }

    HeisElement gamma{best_x, best_y, 0};
    if (conjugate(gamma, g_from) != target) {
        throw std::logic_error("conjugator construction failed");
    }
    return gamma;
}

NormalizerLattice normalizer(const HeisElement& g) {
    if (!is_primitive(g)) throw std::invalid_argument("generator not primitive");
    if (is_central(g)) {
        throw std::invalid_argument(
            "central generator: normalizer is the whole group");
    }
    Int d = gcd(g.a, g.b);
    return {{g.a / d, g.b / d, 0}, {0, 0, 1}};
}

bool NormalizerLattice::contains(const HeisElement& gamma) const {
    return checked_mul(gamma.a, direction_gen.b) ==
           checked_mul(gamma.b, direction_gen.a);
}

ZhComparison compare_normalizer_zh(const HeisElement& g) {
    NormalizerLattice n = normalizer(g);  // validates preconditions
    (void)n;
    // Z<g> = {(x,y,z) : (x,y) in Z*(a,b)}; the normalizer direction lattice
    // is Z*(a/d, b/d), so the index is d.
    Int d = gcd(g.a, g.b);
    return {d == 1, d};
}

Splitting splitting(const HeisElement& g) {
    NormalizerLattice n = normalizer(g);
    Int alpha = n.direction_gen.a, beta = n.direction_gen.b;
    Int d = gcd(g.a, g.b);
    Int k = checked_sub(g.c, checked_mul(binom2(d), checked_mul(alpha, beta)));
    if (gcd(d, k) != 1) {
        throw std::logic_error("primitive generator not a direct factor");
    }
    // Complete the column (d,k) to a determinant-one matrix, then shift the
    // complement column so its direction exponent lies in [0, d).
    ExtGcd eg = ext_gcd(d, k);
    Int p = checked_neg(eg.v), q = eg.u;  // d*q - k*p == 1
    Int p_norm = mod_floor(p, d);
    Int shift = (p_norm - p) / d;
    Int q_norm = checked_add(q, checked_mul(shift, k));

    HeisElement u{checked_mul(p_norm, alpha), checked_mul(p_norm, beta),
                  checked_add(checked_mul(binom2(p_norm), checked_mul(alpha, beta)),
                              q_norm)};
    return {g, u, {{{d, p_norm}, {k, q_norm}}}};
}

std::array<Int, 2> splitting_coordinates(const Splitting& s,
                                         const HeisElement& gamma) {
    Int d = s.exponent_matrix[0][0], p = s.exponent_matrix[0][1];
    Int k = s.exponent_matrix[1][0], q = s.exponent_matrix[1][1];
    Int alpha = s.h.a / d, beta = s.h.b / d;
    Int t = alpha != 0 ? gamma.a / alpha : gamma.b / beta;
    if (gamma.a != checked_mul(t, alpha) || gamma.b != checked_mul(t, beta)) {
        throw std::invalid_argument("element not in the normalizer");
    }
    Int zeta = checked_sub(gamma.c,
                           checked_mul(binom2(t), checked_mul(alpha, beta)));
    // inverse of [[d,p],[k,q]] with determinant one
    Int j = checked_sub(checked_mul(q, t), checked_mul(p, zeta));
    Int m = checked_sub(checked_mul(d, zeta), checked_mul(k, t));
    return {j, m};
}

Classification classify_subgroup(const SubgroupSpec& spec) {
    if (spec.generators.empty()) {
        throw std::invalid_argument("empty generator sequence");
    }
    std::vector<HeisElement> gens;
    for (const auto& g : spec.generators) {
        if (!is_identity(g)) gens.push_back(g);
    }
    if (gens.empty()) return {Classification::Trivial, std::nullopt};

    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            if (!is_identity(commutator(gens[i], gens[j]))) {
                return {Classification::NonAbelian, std::nullopt};
            }
        }
    }

    // Fold left-to-right: central generators reduce by gcd of their
    // c-entries; non-central ones must share a primitive root (up to
    // inversion) to stay cyclic.
    Int central_gcd = 0;
    std::optional<HeisElement> base_root;
    Int exp_gcd = 0;
    for (const auto& g : gens) {
        if (is_central(g)) {
            central_gcd = gcd(central_gcd, g.c);
            continue;
        }
        PrimitiveDecomposition pd = primitive_root(g);
        if (!base_root) {
            base_root = pd.root;
            exp_gcd = pd.exponent;
        } else if (pd.root == *base_root || pd.root == inv(*base_root)) {
            exp_gcd = gcd(exp_gcd, pd.exponent);
        } else {
            return {Classification::AbelianNonCyclic, std::nullopt};
        }
    }
    if (base_root) {
        if (central_gcd != 0) {
            return {Classification::AbelianNonCyclic, std::nullopt};
        }
        return {Classification::NonCentralCyclic,
                PrimitiveDecomposition{*base_root, exp_gcd}};
    }
    return {Classification::CentralCyclic, std::nullopt};
}

// ---------------------------------------------------------------------
// bf_verify: definition-level brute force. Only mul/inv (checked against
// the 3x3 matrix oracle in the test suite) are trusted here; powers are
// iterated products.
// ---------------------------------------------------------------------

namespace {

constexpr std::size_t kCounterexampleCap = 20;

HeisElement mul_iter(const HeisElement& g, Int n) {
    HeisElement acc = kIdentity;
    HeisElement step = n >= 0 ? g : inv(g);
    for (Int i = 0; i < checked_abs(n); ++i) acc = mul(acc, step);
    return acc;
}

// gamma g gamma^-1 via the triple product, no closed form.
HeisElement conj_bf(const HeisElement& gamma, const HeisElement& g) {
    return mul(mul(gamma, g), inv(gamma));
}

// h in <g> decided by scanning powers of g over |n| <= n_max. For
// non-central g the (a,b) part of g^n grows linearly in |n|, so the scan
// can stop once it overshoots h.
bool in_cyclic_bf(const HeisElement& g, const HeisElement& h, Int n_max) {
    HeisElement fwd = kIdentity, bwd = kIdentity;
    if (h == fwd) return true;
    Int h_dir = checked_abs(h.a) + checked_abs(h.b);
    for (Int n = 1; n <= n_max; ++n) {
        fwd = mul(fwd, g);
        bwd = mul(bwd, inv(g));
        if (fwd == h || bwd == h) return true;
        if (!is_central(g) && checked_abs(fwd.a) + checked_abs(fwd.b) > h_dir) {
            return false;
        }
    }
    return false;
}

// <gamma g gamma^-1> == <g>, both inclusions by power scan.
bool normalizes_bf(const HeisElement& gamma, const HeisElement& g, Int n_max) {
    HeisElement c = conj_bf(gamma, g);
    return in_cyclic_bf(g, c, n_max) && in_cyclic_bf(c, g, n_max);
}

struct CheckSink {
    BfCheck check;
    explicit CheckSink(std::string name) { check.name = std::move(name); }
    void record(bool ok, const std::string& witness) {
        ++check.tested;
        if (!ok) {
            ++check.failed;
            if (check.counterexamples.size() < kCounterexampleCap) {
                check.counterexamples.push_back(witness);
            }
        }
    }
    BfCheck finish() {
        std::sort(check.counterexamples.begin(), check.counterexamples.end());
        return std::move(check);
    }
};

}  // namespace

bool BfReport::all_passed() const {
    for (const auto& c : checks) {
        if (c.failed != 0) return false;
    }
    return true;
}

std::string BfReport::to_json_text() const {
    std::ostringstream os;
    os << "{\"bound\":" << bound << ",\"checks\":[";
    for (std::size_t i = 0; i < checks.size(); ++i) {
        const auto& c = checks[i];
        if (i) os << ',';
        os << "{\"name\":\"" << c.name << "\",\"tested\":" << c.tested
           << ",\"failed\":" << c.failed << ",\"counterexamples\":[";
        for (std::size_t j = 0; j < c.counterexamples.size(); ++j) {
            if (j) os << ',';
            os << '"' << c.counterexamples[j] << '"';
        }
        os << "]}";
    }
    os << "]}";
    return os.str();
}

BfReport bf_verify(Int bound) {
    if (bound < 1 || bound > 8) {
        throw std::invalid_argument("bf_verify bound must be in [1,8]");
    }
    const Int B = bound;

    std::vector<HeisElement> ball;
    for (Int a = -B; a <= B; ++a)
        for (Int b = -B; b <= B; ++b)
            for (Int c = -B; c <= B; ++c) ball.push_back({a, b, c});

    // Forward power map: largest n >= 1 with some h^n == g, for g in the
    // ball. The c-range of candidate roots is wide enough to cover every
    // h whose n-th power can land in the ball.
    const Int side = 2 * B + 1;
    std::vector<Int> max_exp(static_cast<std::size_t>(side * side * side), 0);
    auto ball_index = [&](const HeisElement& g) -> std::ptrdiff_t {
        if (checked_abs(g.a) > B || checked_abs(g.b) > B || checked_abs(g.c) > B)
            return -1;
        return (g.a + B) + side * ((g.b + B) + side * (g.c + B));
    };
    const Int c_root = B + binom2(B) * B * B;
    for (Int a = -B; a <= B; ++a) {
        for (Int b = -B; b <= B; ++b) {
            for (Int c = -c_root; c <= c_root; ++c) {
                HeisElement h{a, b, c};
                HeisElement p = kIdentity;
                for (Int n = 1; n <= B; ++n) {
                    p = mul(p, h);
                    auto idx = ball_index(p);
                    if (idx >= 0 && !is_identity(p) && max_exp[idx] < n) {
                        max_exp[idx] = n;
                    }
                }
            }
        }
    }

    std::vector<HeisElement> primitives;
    CheckSink root_check("primitive_root");
    for (const auto& g : ball) {
        if (is_identity(g)) continue;
        PrimitiveDecomposition pd = primitive_root(g);
        bool ok = mul_iter(pd.root, pd.exponent) == g &&
                  pd.exponent == max_exp[ball_index(g)];
        root_check.record(ok, "g=" + to_triple(g));
        if (pd.exponent == 1) primitives.push_back(g);
    }

    CheckSink class_check("canonical_class");
    for (const auto& g : primitives) {
        ConjClassId id = canonical_class(g);
        bool ok = canonical_class(inv(g)) == id;
        for (Int x = -B; x <= B && ok; ++x)
            for (Int y = -B; y <= B && ok; ++y)
                for (Int z = -B; z <= B && ok; ++z) {
                    ok = canonical_class(conj_bf({x, y, z}, g)) == id;
                }
        class_check.record(ok, "g=" + to_triple(g));
    }

    CheckSink conj_check("are_conjugate");
    for (const auto& g1 : primitives) {
        for (const auto& g2 : primitives) {
            bool lib = are_conjugate(g1, g2);
            bool oracle = false;
            bool same_dir = g1.a == g2.a && g1.b == g2.b;
            bool opp_dir = g1.a == -g2.a && g1.b == -g2.b;
            // Conjugation preserves (a,b), so only aligned pairs need the
            // quadratic scan; the conjugator's z never matters.
            if (same_dir || opp_dir) {
                HeisElement g2i = inv(g2);
                for (Int x = -2 * B; x <= 2 * B && !oracle; ++x)
                    for (Int y = -2 * B; y <= 2 * B && !oracle; ++y) {
                        HeisElement c = conj_bf({x, y, 0}, g1);
                        oracle = c == g2 || c == g2i;
                    }
            }
            bool ok = lib == oracle;
            if (ok && oracle) {
                // library witness must actually conjugate
                HeisElement w = find_conjugator(g1, g2);
                HeisElement c = conj_bf(w, g1);
                ok = c == g2 || c == inv(g2);
            }
            conj_check.record(ok, "g1=" + to_triple(g1) + " g2=" + to_triple(g2));
        }
    }

    CheckSink norm_check("normalizer_membership");
    const Int GB = B + 2;
    const Int n_scan = 4 * B + 8;
    for (const auto& g : primitives) {
        if (is_central(g)) continue;
        NormalizerLattice n = normalizer(g);
        bool ok = true;
        HeisElement bad{};
        for (Int x = -GB; x <= GB && ok; ++x)
            for (Int y = -GB; y <= GB && ok; ++y)
                for (Int z = -GB; z <= GB && ok; ++z) {
                    HeisElement gamma{x, y, z};
                    if (n.contains(gamma) != normalizes_bf(gamma, g, n_scan)) {
                        ok = false;
                        bad = gamma;
                    }
                }
        norm_check.record(ok, "g=" + to_triple(g) + " gamma=" + to_triple(bad));
    }

    CheckSink zh_check("compare_normalizer_zh");
    for (const auto& g : primitives) {
        if (is_central(g)) continue;
        ZhComparison zh = compare_normalizer_zh(g);
        // Brute force: gather the ball slice of the normalizer and
        // partition it into Z<g>-cosets ((x,y) differences in Z*(a,b)).
        std::vector<std::pair<Int, Int>> members;
        for (Int x = -B; x <= B; ++x)
            for (Int y = -B; y <= B; ++y)
                if (normalizes_bf({x, y, 0}, g, n_scan)) members.push_back({x, y});
        auto in_zh_lattice = [&](Int dx, Int dy) {
            for (Int t = -2 * B; t <= 2 * B; ++t)
                if (dx == t * g.a && dy == t * g.b) return true;
            return false;
        };
        std::vector<std::pair<Int, Int>> reps;
        for (auto& m : members) {
            bool found = false;
            for (auto& r : reps)
                if (in_zh_lattice(m.first - r.first, m.second - r.second))
                    found = true;
            if (!found) reps.push_back(m);
        }
        bool equal_bf = reps.size() == 1;
        bool ok = zh.equal == equal_bf &&
                  zh.index == static_cast<Int>(reps.size());
        zh_check.record(ok, "g=" + to_triple(g));
    }

    BfReport report;
    report.bound = bound;
    report.checks.push_back(conj_check.finish());
    report.checks.push_back(class_check.finish());
    report.checks.push_back(zh_check.finish());
    report.checks.push_back(norm_check.finish());
    report.checks.push_back(root_check.finish());
    std::sort(report.checks.begin(), report.checks.end(),
              [](const BfCheck& a, const BfCheck& b) { return a.name < b.name; });
    return report;
}

}  // namespace heisvc
