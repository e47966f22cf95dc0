/*
 * Symbolic model of the double mapping cylinder E glued from the plane V,
 * the induced line bundles over maximal-cyclic classes, and the open
 * cylinders between them, together with the group action, per-point
 * isotropy, and fixed sets of subgroups.
 *
 * A point is one of
 *   PlanePoint     (x,y) in the plane V with gamma.(x,y) = (x+a, y+b);
 *   LinePoint      [coset, w] in the induced space over a class line,
 *                  the coset taken modulo the computed normalizer;
 *   CylinderPoint  [coset, (v,w)] with cylinder coordinate s in (0,1) on
 *                  one of the two mapping cylinders (side toward the plane
 *                  or toward the line).
 *
 * Line and cylinder points are normalized on construction: the stored
 * coset is the canonical representative and the fiber coordinates absorb
 * the normalizer part, so structural equality is point equality.
 */

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "heisvc/cyclic.hpp"
#include "heisvc/rational.hpp"

namespace heisvc {

enum class Side { TowardV, TowardW };

struct PlanePoint {
    Rational x, y;
    friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

struct LinePoint {
    ConjClassId cls;
    HeisElement coset;
    Rational w;
    friend bool operator==(const LinePoint&, const LinePoint&) = default;
};

struct CylinderPoint {
    ConjClassId cls;
    HeisElement coset;
    Rational v, w;
    Side side = Side::TowardV;
    Rational s;  // strictly inside (0,1)
    friend bool operator==(const CylinderPoint&, const CylinderPoint&) = default;
};

using ModelPoint = std::variant<PlanePoint, LinePoint, CylinderPoint>;

/// Geometry attached to a non-central class: its representative, the
/// primitive direction, and the splitting used for fiber translations.
struct ClassGeometry {
    ConjClassId cls;
    HeisElement rep;       // (a, b, c_residue), primitive
    Int alpha, beta;       // direction (a/d, b/d)
    Int d;                 // gcd(|a|, |b|)
    Splitting split;       // rep = dir^d cen^k; complement u
    Int mu, nu;            // alpha*nu - beta*mu == 1

    /// Canonical representative of gamma * N: the z-entry is dropped and
    /// (x,y) is reduced modulo the direction lattice.
    HeisElement coset_rep(const HeisElement& gamma) const;
    bool same_coset(const HeisElement& g1, const HeisElement& g2) const;
    /// Exponents (t, m) of a normalizer element: translation of the line
    /// coordinate v by t and of the fiber coordinate w by m.
    std::array<Int, 2> translations(const HeisElement& n) const;
};

ClassGeometry class_geometry(const ConjClassId& cls);

ModelPoint make_plane_point(Rational x, Rational y);
ModelPoint make_line_point(const ConjClassId& cls, const HeisElement& coset,
                           Rational w);
ModelPoint make_cylinder_point(const ConjClassId& cls, const HeisElement& coset,
                               Rational v, Rational w, Side side, Rational s);

/// The group action; a left action in every variant.
ModelPoint act(const HeisElement& gamma, const ModelPoint& p);

/// End of the cylinder segment through a cylinder point: the plane image
/// for Side::TowardV, the line point for Side::TowardW.
ModelPoint cylinder_limit(const CylinderPoint& p);

struct IsotropyDesc {
    enum Kind { Trivial, Center, MaxCyclicConj } kind = Trivial;
    std::optional<ConjClassId> cls;        // MaxCyclicConj only
    std::optional<HeisElement> conjugator; // MaxCyclicConj only
};

IsotropyDesc isotropy(const ModelPoint& p);

/// Equality as subgroups (conjugators may differ by a normalizer element).
bool same_isotropy(const IsotropyDesc& i1, const IsotropyDesc& i2);

/// Does gamma belong to the subgroup an IsotropyDesc denotes?
bool isotropy_contains(const IsotropyDesc& iso, const HeisElement& gamma);

struct FixedSetDesc {
    enum Kind { Empty, Whole, Plane, Line } kind = Empty;
    std::optional<ConjClassId> cls;     // Line only
    std::optional<HeisElement> coset;   // Line only

    /// The letter reported on the wire: Line="A", Plane="B", Whole="C",
    /// Empty="D".
    const char* case_label() const;
};

FixedSetDesc fixed_set(const SubgroupSpec& subgroup);

/// Is p fixed by every generator of the subgroup?
bool point_fixed_by(const SubgroupSpec& subgroup, const ModelPoint& p);

struct CensusResult {
    Int computed_normalizer = 0;
    Int zh = 0;
    std::vector<HeisElement> qualifying;  // lex-smallest ball reps, z = 0
};

/// Counts cosets gamma*N with the subgroup inside gamma <rep> gamma^-1,
/// enumerating |x|,|y| <= bound, and the same count over Z<rep>-cosets.
/// Requires a non-central cyclic subgroup.
CensusResult fixed_point_census(const SubgroupSpec& subgroup, Int bound);

/// {"case":"A|B|C|D","class":...,"coset":...,"census":...}
std::string fixed_set_report_json(const SubgroupSpec& subgroup, Int census_bound);

}  // namespace heisvc
