/*
 * Classification of cyclic subgroups of the discrete Heisenberg group:
 * primitive roots, conjugacy canonical forms of maximal cyclic subgroups,
 * normalizers with direct-product splittings, a five-way subgroup
 * classifier, and an exhaustive brute-force verification harness.
 */

#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "heisvc/heis.hpp"

namespace heisvc {

/// g = pow(root, exponent) with root not a proper power.
struct PrimitiveDecomposition {
    HeisElement root;
    Int exponent = 1;

    friend bool operator==(const PrimitiveDecomposition&,
                           const PrimitiveDecomposition&) = default;
};

enum class ClassKind { NonCentral, Center };

/// Canonical id of a conjugacy class of maximal cyclic subgroups.
///
/// For NonCentral the stored (a,b) is the sign-normalized direction
/// (a>0, or a=0 and b>0) and c_residue lies in [0, gcd(|a|,|b|)); two
/// maximal cyclic subgroups are conjugate iff their ids compare equal.
/// The center's class is a separate kind with zeroed fields.
struct ConjClassId {
    Int a = 0;
    Int b = 0;
    Int c_residue = 0;
    ClassKind kind = ClassKind::NonCentral;

    friend bool operator==(const ConjClassId&, const ConjClassId&) = default;
    friend auto operator<=>(const ConjClassId&, const ConjClassId&) = default;

    /// The chosen representative generator: (a, b, c_residue) for a
    /// non-central class, (0,0,1) for the center.
    HeisElement representative() const;
    std::string to_string() const;
};

/// The computed normalizer of a maximal cyclic subgroup <g>,
/// N = {(x,y,z) : x*b == y*a}, as a rank-2 lattice with basis
/// direction_gen = (a/d, b/d, 0) and center_gen = (0,0,1).
struct NormalizerLattice {
    HeisElement direction_gen;
    HeisElement center_gen;

    bool contains(const HeisElement& gamma) const;
};

/// Direct-product structure N = <h> x <u> for the class generator h.
/// exponent_matrix columns give (h, u) in the (direction_gen, center_gen)
/// basis; its determinant is +1.
struct Splitting {
    HeisElement h;
    HeisElement u;
    std::array<std::array<Int, 2>, 2> exponent_matrix;  // [[d,p],[k,q]]
};

struct SubgroupSpec {
    std::vector<HeisElement> generators;
};

struct Classification {
    enum Kind {
        Trivial,
        CentralCyclic,
        NonCentralCyclic,
        AbelianNonCyclic,
        NonAbelian,
    } kind;
    /// Present iff kind == NonCentralCyclic: the subgroup is
    /// <pow(root, exponent)>.
    std::optional<PrimitiveDecomposition> cyclic;

    const char* kind_name() const;
};

/// Largest n with g an n-th power; throws std::invalid_argument on the
/// identity.
PrimitiveDecomposition primitive_root(const HeisElement& g);

bool is_primitive(const HeisElement& g);

/// Canonical conjugacy-class id of the maximal cyclic subgroup <g>;
/// requires g primitive and non-identity.
ConjClassId canonical_class(const HeisElement& g);

/// Conjugacy of the subgroups <g1>, <g2> (generator inversion included);
/// requires both primitive.
bool are_conjugate(const HeisElement& g1, const HeisElement& g2);

/// A witness gamma with conjugate(gamma, g_from) in {g_to, inv(g_to)};
/// throws std::invalid_argument when the subgroups are not conjugate.
HeisElement find_conjugator(const HeisElement& g_from, const HeisElement& g_to);

/// Requires g primitive and non-central (the center normalizes to all of
/// the group, which has no such lattice presentation).
NormalizerLattice normalizer(const HeisElement& g);

/// Comparison of Z<g> with the computed normalizer.
struct ZhComparison {
    bool equal = true;
    Int index = 1;  // [N : Z<g>]

    friend bool operator==(const ZhComparison&, const ZhComparison&) = default;
};
ZhComparison compare_normalizer_zh(const HeisElement& g);

Splitting splitting(const HeisElement& g);

/// Exponents (j, m) of gamma in the splitting basis: gamma = h^j * u^m.
/// Requires gamma in the normalizer of the split class generator.
std::array<Int, 2> splitting_coordinates(const Splitting& s,
                                         const HeisElement& gamma);

Classification classify_subgroup(const SubgroupSpec& spec);

// ---------------------------------------------------------------------
// Brute-force verification harness
// ---------------------------------------------------------------------

struct BfCheck {
    std::string name;
    Int tested = 0;
    Int failed = 0;
    std::vector<std::string> counterexamples;  // sorted, capped
};

struct BfReport {
    Int bound = 0;
    std::vector<BfCheck> checks;  // sorted by name

    bool all_passed() const;
    /// {"bound":..,"checks":[{"name":..,"tested":..,"failed":..,
    ///   "counterexamples":[..]}]}
    std::string to_json_text() const;
};

/// Enumerates |a|,|b|,|c| <= bound and cross-checks primitive_root,
/// canonical_class, are_conjugate, normalizer membership and
/// compare_normalizer_zh against definition-level brute force.
/// Requires 1 <= bound <= 8.
BfReport bf_verify(Int bound);

}  // namespace heisvc
