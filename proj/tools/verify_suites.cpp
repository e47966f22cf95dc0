#include "verify_suites.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "heisvc/chain.hpp"
#include "heisvc/model.hpp"

namespace heisvc::cli {

namespace {

std::vector<HeisElement> ball(Int bound) {
    std::vector<HeisElement> out;
    for (Int a = -bound; a <= bound; ++a)
        for (Int b = -bound; b <= bound; ++b)
            for (Int c = -bound; c <= bound; ++c) out.push_back({a, b, c});
    return out;
}

std::vector<ModelPoint> sample_points() {
    std::vector<ModelPoint> pts;
    for (Int i = -2; i <= 2; ++i) {
        pts.push_back(make_plane_point(Rational(i, 2), Rational(-i, 3)));
        pts.push_back(make_plane_point(i, 1 - i));
    }
    for (const HeisElement& g :
         {HeisElement{0, 1, 0}, HeisElement{2, 0, 1}, HeisElement{2, 3, 1},
          HeisElement{1, 1, 0}}) {
        ConjClassId cls = canonical_class(g);
        for (Int i = -2; i <= 2; ++i) {
            pts.push_back(make_line_point(cls, {i, 1, -i}, Rational(i, 2)));
            pts.push_back(make_cylinder_point(
                cls, {1, i, 0}, Rational(i), Rational(-i, 3),
                i % 2 ? Side::TowardV : Side::TowardW, Rational(1, 2)));
        }
    }
    return pts;
}

bool desc_contains(const FixedSetDesc& fs, const ModelPoint& p) {
    switch (fs.kind) {
        case FixedSetDesc::Whole: return true;
        case FixedSetDesc::Empty: return false;
        case FixedSetDesc::Plane: return std::holds_alternative<PlanePoint>(p);
        case FixedSetDesc::Line: {
            const auto* lp = std::get_if<LinePoint>(&p);
            if (!lp || lp->cls != *fs.cls) return false;
            return class_geometry(*fs.cls).same_coset(lp->coset, *fs.coset);
        }
    }
    return false;
}

std::vector<Int> betti_vector(const HomologyResult& h) {
    std::vector<Int> out;
    for (const auto& g : h.groups) out.push_back(g.betti);
    return out;
}

bool torsion_free(const HomologyResult& h) {
    return std::all_of(h.groups.begin(), h.groups.end(),
                       [](const auto& g) { return g.torsion.empty(); });
}

}  // namespace

std::vector<Check> group_suite(Int bound) {
    std::vector<Check> out;
    BfReport report = bf_verify(bound);
    for (const BfCheck& c : report.checks) {
        Check check;
        check.name = "group.bf." + c.name;
        check.passed = c.failed == 0;
        check.data = {{"tested", c.tested},
                      {"failed", c.failed},
                      {"counterexamples", c.counterexamples}};
        out.push_back(std::move(check));
    }
    return out;
}

std::vector<Check> action_suite(Int bound) {
    std::vector<Check> out;
    auto pts = sample_points();
    Int gamma_bound = std::min<Int>(bound, 3);
    auto gammas = ball(gamma_bound);

    out.push_back(timed_check("action.identity", [&](bool& passed) {
        Int violations = 0;
        for (const auto& p : pts) {
            if (!(act(kIdentity, p) == p)) ++violations;
        }
        passed = violations == 0;
        return nlohmann::json{{"points", pts.size()}, {"violations", violations}};
    }));

    out.push_back(timed_check("action.composition", [&](bool& passed) {
        // pairs from the 2-ball keep the default run quick; the identity
        // and equivariance sweeps cover the full gamma ball
        auto pair_ball = ball(std::min<Int>(gamma_bound, 2));
        Int violations = 0;
        for (const auto& g1 : pair_ball) {
            for (const auto& g2 : pair_ball) {
                HeisElement g12 = mul(g1, g2);
                for (const auto& p : pts) {
                    if (!(act(g12, p) == act(g1, act(g2, p)))) ++violations;
                }
            }
        }
        passed = violations == 0;
        return nlohmann::json{{"pairs", pair_ball.size() * pair_ball.size()},
                              {"violations", violations}};
    }));

    out.push_back(timed_check("action.isotropy_equivariant", [&](bool& passed) {
        Int violations = 0;
        for (const auto& p : pts) {
            IsotropyDesc before = isotropy(p);
            for (const auto& g : gammas) {
                IsotropyDesc after = isotropy(act(g, p));
                if (after.kind != before.kind) {
                    ++violations;
                    continue;
                }
                if (before.kind == IsotropyDesc::MaxCyclicConj) {
                    IsotropyDesc expected{IsotropyDesc::MaxCyclicConj, before.cls,
                                          mul(g, *before.conjugator)};
                    if (!same_isotropy(after, expected)) ++violations;
                }
            }
        }
        passed = violations == 0;
        return nlohmann::json{{"gammas", gammas.size()}, {"violations", violations}};
    }));

    out.push_back(timed_check("action.fixed_sets_consistent", [&](bool& passed) {
        Int violations = 0;
        for (const auto& g : ball(std::min<Int>(bound, 3))) {
            SubgroupSpec k{{g}};
            FixedSetDesc fs = fixed_set(k);
            for (const auto& p : pts) {
                if (point_fixed_by(k, p) != desc_contains(fs, p)) ++violations;
            }
        }
        passed = violations == 0;
        return nlohmann::json{{"violations", violations}};
    }));
    return out;
}

std::vector<Check> census_suite(Int bound) {
    std::vector<Check> out;
    out.push_back(timed_check("census.single_coset", [&](bool& passed) {
        Int k_bound = std::min<Int>(bound, 4);
        Int radius = std::max<Int>(8, 2 * bound);
        Int tested = 0, violations = 0;
        for (const auto& g : ball(k_bound)) {
            if (is_identity(g) || is_central(g) || !is_primitive(g)) continue;
            ++tested;
            CensusResult c = fixed_point_census({{g}}, radius);
            if (c.computed_normalizer != 1) ++violations;
            if (c.zh != gcd(g.a, g.b)) ++violations;
        }
        passed = violations == 0;
        return nlohmann::json{
            {"subgroups", tested}, {"radius", radius}, {"violations", violations}};
    }));
    return out;
}

std::vector<Check> homology_suite() {
    std::vector<Check> out;
    out.push_back(timed_check("homology.s3_pipelines_agree", [&](bool& passed) {
        ProductResult torus = product_complex(circle_complex(), circle_complex());
        HomologyResult cyl = homology(
            double_cylinder_complex(torus.proj_first, torus.proj_second));
        SimplicialComplex tri{3, {{0, 1}, {0, 2}, {1, 2}}};
        HomologyResult join =
            homology(from_simplicial(simplicial_join(tri, tri)));
        std::vector<Int> expected{1, 0, 0, 1};
        passed = betti_vector(cyl) == expected && torsion_free(cyl) &&
                 betti_vector(join) == expected && torsion_free(join);
        return nlohmann::json{{"double_cylinder", betti_vector(cyl)},
                              {"simplicial_join", betti_vector(join)}};
    }));

    out.push_back(timed_check("homology.torus", [&](bool& passed) {
        ProductResult torus = product_complex(circle_complex(), circle_complex());
        HomologyResult h = homology(torus.complex);
        passed = betti_vector(h) == std::vector<Int>{1, 2, 1} && torsion_free(h);
        return nlohmann::json{{"betti", betti_vector(h)}};
    }));

    out.push_back(timed_check("homology.identity_cone_acyclic", [&](bool& passed) {
        passed = true;
        SimplicialComplex tri{3, {{0, 1}, {0, 2}, {1, 2}}};
        for (const ChainComplex& c :
             {circle_complex(), from_simplicial(tri),
              product_complex(circle_complex(), circle_complex()).complex}) {
            HomologyResult h = homology(mapping_cone(identity_map(c)));
            for (const auto& g : h.groups) {
                if (g.betti != 0 || !g.torsion.empty()) passed = false;
            }
        }
        return nlohmann::json{{"complexes", 3}};
    }));

    out.push_back(timed_check("homology.smith_pinned", [&](bool& passed) {
        IntMatrix m(2, 2);
        m.at(0, 0) = 2;
        m.at(1, 1) = 3;
        SmithResult s = smith_normal_form(m);
        passed = s.invariant_factors == std::vector<Int>{1, 6};
        IntMatrix m2(2, 2);
        m2.at(0, 0) = 6; m2.at(0, 1) = 4; m2.at(1, 0) = 2; m2.at(1, 1) = 2;
        SmithResult s2 = smith_normal_form(m2);
        passed = passed && s2.invariant_factors == std::vector<Int>{2, 2};
        return nlohmann::json{{"factors", s2.invariant_factors}};
    }));
    return out;
}

nlohmann::json normalizer_findings(Int bound) {
    std::map<std::string, Int> proper;  // class id -> index
    for (Int a = -bound; a <= bound; ++a) {
        for (Int b = -bound; b <= bound; ++b) {
            for (Int c = -bound; c <= bound; ++c) {
                HeisElement g{a, b, c};
                if (is_identity(g) || is_central(g) || !is_primitive(g)) continue;
                ZhComparison zh = compare_normalizer_zh(g);
                if (!zh.equal) {
                    proper[canonical_class(g).to_string()] = zh.index;
                }
            }
        }
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [cls, index] : proper) {
        arr.push_back({{"finding", "normalizer_exceeds_center_times_generator"},
                       {"class", cls},
                       {"index", index}});
    }
    return arr;
}

}  // namespace heisvc::cli
