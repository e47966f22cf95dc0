#include "heisvc/model.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include <json.hpp>

namespace heisvc {

namespace {

// act() normalizes points on every call; the per-class data is small and
// worth caching. Guarded for concurrent readers.
const ClassGeometry& cached_geometry(const ConjClassId& cls) {
    static std::mutex mu;
    static std::map<ConjClassId, ClassGeometry> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(cls);
    if (it == cache.end()) {
        it = cache.emplace(cls, class_geometry(cls)).first;
    }
    return it->second;
}

bool in_cyclic(const HeisElement& generator, const HeisElement& elt) {
    if (is_identity(elt)) return true;
    if (is_central(elt) != is_central(generator)) return false;
    PrimitiveDecomposition pd = primitive_root(elt);
    return pd.root == generator || pd.root == inv(generator);
}

}  // namespace

ClassGeometry class_geometry(const ConjClassId& cls) {
    if (cls.kind != ClassKind::NonCentral) {
        throw std::invalid_argument("class geometry requires a non-central class");
    }
    HeisElement rep = cls.representative();
    if (canonical_class(rep) != cls) {
        throw std::invalid_argument("malformed class id");
    }
    ClassGeometry geo;
    geo.cls = cls;
    geo.rep = rep;
    geo.d = gcd(rep.a, rep.b);
    geo.alpha = rep.a / geo.d;
    geo.beta = rep.b / geo.d;
    geo.split = splitting(rep);
    ExtGcd eg = ext_gcd(geo.alpha, geo.beta);  // u*alpha + v*beta == 1
    geo.mu = checked_neg(eg.v);
    geo.nu = eg.u;
    return geo;
}

HeisElement ClassGeometry::coset_rep(const HeisElement& gamma) const {
    Int r = checked_sub(checked_mul(alpha, gamma.b), checked_mul(beta, gamma.a));
    return {checked_mul(r, mu), checked_mul(r, nu), 0};
}

bool ClassGeometry::same_coset(const HeisElement& g1, const HeisElement& g2) const {
    return checked_sub(checked_mul(alpha, g1.b), checked_mul(beta, g1.a)) ==
           checked_sub(checked_mul(alpha, g2.b), checked_mul(beta, g2.a));
}

std::array<Int, 2> ClassGeometry::translations(const HeisElement& n) const {
    Int t = alpha != 0 ? n.a / alpha : n.b / beta;
    if (n.a != checked_mul(t, alpha) || n.b != checked_mul(t, beta)) {
        throw std::logic_error("coset normalization failure");
    }
    Int zeta = checked_sub(n.c, checked_mul(binom2(t), checked_mul(alpha, beta)));
    Int k = split.exponent_matrix[1][0];
    Int m = checked_sub(checked_mul(d, zeta), checked_mul(k, t));
    return {t, m};
}

ModelPoint make_plane_point(Rational x, Rational y) {
    return PlanePoint{x, y};
}

ModelPoint make_line_point(const ConjClassId& cls, const HeisElement& coset,
                           Rational w) {
    const ClassGeometry& geo = cached_geometry(cls);
    HeisElement rep = geo.coset_rep(coset);
    auto [t, m] = geo.translations(mul(inv(rep), coset));
    (void)t;
    return LinePoint{cls, rep, w + Rational(m)};
}

ModelPoint make_cylinder_point(const ConjClassId& cls, const HeisElement& coset,
                               Rational v, Rational w, Side side, Rational s) {
    if (!(Rational(0) < s && s < Rational(1))) {
        throw std::invalid_argument("cylinder coordinate must lie in (0,1)");
    }
    const ClassGeometry& geo = cached_geometry(cls);
    HeisElement rep = geo.coset_rep(coset);
    auto [t, m] = geo.translations(mul(inv(rep), coset));
    return CylinderPoint{cls, rep, v + Rational(t), w + Rational(m), side, s};
}

ModelPoint act(const HeisElement& gamma, const ModelPoint& p) {
    if (const auto* vp = std::get_if<PlanePoint>(&p)) {
        return PlanePoint{vp->x + Rational(gamma.a), vp->y + Rational(gamma.b)};
    }
    if (const auto* wp = std::get_if<LinePoint>(&p)) {
        return make_line_point(wp->cls, mul(gamma, wp->coset), wp->w);
    }
    const auto& cp = std::get<CylinderPoint>(p);
    return make_cylinder_point(cp.cls, mul(gamma, cp.coset), cp.v, cp.w, cp.side,
                               cp.s);
}

ModelPoint cylinder_limit(const CylinderPoint& p) {
    const ClassGeometry& geo = cached_geometry(p.cls);
    if (p.side == Side::TowardV) {
        return PlanePoint{Rational(p.coset.a) + p.v * Rational(geo.alpha),
                          Rational(p.coset.b) + p.v * Rational(geo.beta)};
    }
    return LinePoint{p.cls, p.coset, p.w};
}

IsotropyDesc isotropy(const ModelPoint& p) {
    if (std::holds_alternative<PlanePoint>(p)) {
        return {IsotropyDesc::Center, std::nullopt, std::nullopt};
    }
    if (const auto* wp = std::get_if<LinePoint>(&p)) {
        return {IsotropyDesc::MaxCyclicConj, wp->cls, wp->coset};
    }
    return {IsotropyDesc::Trivial, std::nullopt, std::nullopt};
}

bool same_isotropy(const IsotropyDesc& i1, const IsotropyDesc& i2) {
    if (i1.kind != i2.kind) return false;
    if (i1.kind != IsotropyDesc::MaxCyclicConj) return true;
    if (*i1.cls != *i2.cls) return false;
    return cached_geometry(*i1.cls).same_coset(*i1.conjugator, *i2.conjugator);
}

bool isotropy_contains(const IsotropyDesc& iso, const HeisElement& gamma) {
    switch (iso.kind) {
        case IsotropyDesc::Trivial:
            return is_identity(gamma);
        case IsotropyDesc::Center:
            return is_central(gamma);
        case IsotropyDesc::MaxCyclicConj: {
            const ClassGeometry& geo = cached_geometry(*iso.cls);
            HeisElement pulled = conjugate(inv(*iso.conjugator), gamma);
            return in_cyclic(geo.rep, pulled);
        }
    }
    return false;
}

const char* FixedSetDesc::case_label() const {
    switch (kind) {
        case Line: return "A";
        case Plane: return "B";
        case Whole: return "C";
        case Empty: return "D";
    }
    return "?";
}

FixedSetDesc fixed_set(const SubgroupSpec& subgroup) {
    Classification cl = classify_subgroup(subgroup);
    switch (cl.kind) {
        case Classification::Trivial:
            return {FixedSetDesc::Whole, std::nullopt, std::nullopt};
        case Classification::CentralCyclic:
            return {FixedSetDesc::Plane, std::nullopt, std::nullopt};
        case Classification::NonCentralCyclic: {
            const HeisElement& root = cl.cyclic->root;
            ConjClassId cls = canonical_class(root);
            HeisElement gamma = find_conjugator(cls.representative(), root);
            HeisElement coset = cached_geometry(cls).coset_rep(gamma);
            return {FixedSetDesc::Line, cls, coset};
        }
        case Classification::AbelianNonCyclic:
        case Classification::NonAbelian:
            return {FixedSetDesc::Empty, std::nullopt, std::nullopt};
    }
    throw std::logic_error("unreachable");
}

bool point_fixed_by(const SubgroupSpec& subgroup, const ModelPoint& p) {
    for (const auto& g : subgroup.generators) {
        if (!(act(g, p) == p)) return false;
    }
    return true;
}

CensusResult fixed_point_census(const SubgroupSpec& subgroup, Int bound) {
    if (bound < 1) throw std::invalid_argument("census bound must be >= 1");
    Classification cl = classify_subgroup(subgroup);
    if (cl.kind != Classification::NonCentralCyclic) {
        throw std::invalid_argument("census requires a non-central cyclic subgroup");
    }
    HeisElement k_gen = pow(cl.cyclic->root, cl.cyclic->exponent);
    ConjClassId cls = canonical_class(cl.cyclic->root);
    const ClassGeometry& geo = cached_geometry(cls);

    auto qualifies = [&](Int x, Int y) {
        // K inside gamma <rep> gamma^-1 for gamma = (x,y,0); the z-entry of
        // a conjugator never matters.
        HeisElement pulled = conjugate(inv(HeisElement{x, y, 0}), k_gen);
        return in_cyclic(geo.rep, pulled);
    };

    std::vector<Int> n_cosets;                  // invariant alpha*y - beta*x
    std::vector<std::pair<Int, Int>> zh_cosets; // plus direction coeff mod d
    CensusResult result;
    for (Int x = -bound; x <= bound; ++x) {
        for (Int y = -bound; y <= bound; ++y) {
            if (!qualifies(x, y)) continue;
            Int r = checked_sub(checked_mul(geo.alpha, y),
                                checked_mul(geo.beta, x));
            Int s = checked_sub(checked_mul(geo.nu, x), checked_mul(geo.mu, y));
            if (std::find(n_cosets.begin(), n_cosets.end(), r) == n_cosets.end()) {
                n_cosets.push_back(r);
                result.qualifying.push_back({x, y, 0});  // first hit is lex-smallest
            }
            std::pair<Int, Int> zh{r, mod_floor(s, geo.d)};
            if (std::find(zh_cosets.begin(), zh_cosets.end(), zh) ==
                zh_cosets.end()) {
                zh_cosets.push_back(zh);
            }
        }
    }
    result.computed_normalizer = static_cast<Int>(n_cosets.size());
    result.zh = static_cast<Int>(zh_cosets.size());
    std::sort(result.qualifying.begin(), result.qualifying.end());
    return result;
}

std::string fixed_set_report_json(const SubgroupSpec& subgroup, Int census_bound) {
    FixedSetDesc fs = fixed_set(subgroup);
    nlohmann::json j;
    j["case"] = fs.case_label();
    if (fs.kind == FixedSetDesc::Line) {
        j["class"] = {{"a", fs.cls->a},
                      {"b", fs.cls->b},
                      {"c_residue", fs.cls->c_residue}};
        j["coset"] = {{"a", fs.coset->a}, {"b", fs.coset->b}, {"c", fs.coset->c}};
        CensusResult census = fixed_point_census(subgroup, census_bound);
        j["census"] = {{"computed_normalizer", census.computed_normalizer},
                       {"zh", census.zh}};
    } else {
        j["class"] = nullptr;
        j["coset"] = nullptr;
        j["census"] = nullptr;
    }
    return j.dump();
}

}  // namespace heisvc
