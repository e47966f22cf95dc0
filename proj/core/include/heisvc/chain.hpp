/*
 * Exact integer chain-complex engine: dense checked matrices, cellular
 * models of the circle and products, mapping cones and double mapping
 * cylinders at chain level, simplicial complexes and joins, Smith normal
 * form with transform tracking, and homology (Betti ranks plus torsion
 * invariant factors).
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "heisvc/intmath.hpp"

namespace heisvc {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(Int rows, Int cols)
        : rows_(rows), cols_(cols),
          data_(static_cast<std::size_t>(rows * cols), 0) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
    }

    static IntMatrix identity(Int n);

    Int rows() const { return rows_; }
    Int cols() const { return cols_; }

    Int& at(Int r, Int c) { return data_[index(r, c)]; }
    Int at(Int r, Int c) const { return data_[index(r, c)]; }

    bool is_zero() const;
    IntMatrix negated() const;

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  private:
    std::size_t index(Int r, Int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
            throw std::out_of_range("matrix index");
        }
        return static_cast<std::size_t>(r * cols_ + c);
    }

    Int rows_ = 0;
    Int cols_ = 0;
    std::vector<Int> data_;
};

/// Exact determinant (Bareiss), square input only.
Int det(const IntMatrix& m);

/// ranks[k] cells in degree k; boundaries[k-1] maps degree k to k-1 with
/// shape ranks[k-1] x ranks[k].
struct ChainComplex {
    std::vector<Int> ranks;
    std::vector<IntMatrix> boundaries;

    Int dim() const { return static_cast<Int>(ranks.size()) - 1; }
    Int rank(Int k) const {
        return (k < 0 || k > dim()) ? 0 : ranks[static_cast<std::size_t>(k)];
    }
    /// Boundary operator out of degree k, zero-extended outside [1, dim].
    IntMatrix boundary(Int k) const;

    /// Shape consistency and d∘d == 0; throws std::invalid_argument.
    void validate() const;

    friend bool operator==(const ChainComplex&, const ChainComplex&) = default;
};

/// components[k] : source degree k -> target degree k.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    std::vector<IntMatrix> components;

    IntMatrix component(Int k) const;
    /// Commutation with the boundaries; throws std::invalid_argument.
    void validate() const;
};

/// One 0-cell, one 1-cell, zero boundary.
ChainComplex circle_complex();
/// A single 0-cell.
ChainComplex point_complex();

ChainMap identity_map(const ChainComplex& c);

struct ProductResult {
    ChainComplex complex;
    ChainMap proj_first;
    ChainMap proj_second;
};

/// Cell basis = pairs, boundary by the graded Leibniz rule with sign
/// (-1)^(degree of first factor); projections collapse the other factor.
ProductResult product_complex(const ChainComplex& c, const ChainComplex& d);

/// Algebraic mapping cone: cone_n = source_(n-1) + target_n with
/// boundary (x,y) -> (-dx, phi x + dy).
ChainComplex mapping_cone(const ChainMap& phi);

/// Chain model of the double mapping cylinder of f and g (same source):
/// the mapping cone of x -> (f x, -g x) into target(f) + target(g).
ChainComplex double_cylinder_complex(const ChainMap& f, const ChainMap& g);

struct SmithResult {
    std::vector<Int> invariant_factors;  // positive, each divides the next
    Int rank = 0;
    IntMatrix d;       // u * m * v == d, diagonal
    IntMatrix u, v;          // unimodular
    IntMatrix u_inv, v_inv;  // m == u_inv * d * v_inv
};

SmithResult smith_normal_form(const IntMatrix& m);

struct HomologyResult {
    struct Group {
        Int betti = 0;
        std::vector<Int> torsion;  // invariant factors > 1
        friend bool operator==(const Group&, const Group&) = default;
        std::string to_string() const;  // "0", "Z", "Z^2", "Z/2 + Z"
    };
    std::vector<Group> groups;  // degrees 0..dim

    friend bool operator==(const HomologyResult&, const HomologyResult&) = default;
};

HomologyResult homology(const ChainComplex& c);

struct SimplicialComplex {
    Int vertices = 0;
    std::vector<std::vector<Int>> maximal;  // sorted vertex-index sequences
};

/// Disjoint union of vertices (first complex's vertices come first);
/// maximal simplices are unions of one maximal simplex from each factor.
SimplicialComplex simplicial_join(const SimplicialComplex& k,
                                  const SimplicialComplex& l);

/// Face-closure to a cellular chain complex; orientation by vertex order,
/// simplices of each degree sorted lexicographically.
ChainComplex from_simplicial(const SimplicialComplex& k);

// JSON wire formats.
// complex:    {"ranks":[r0,..,rn],"boundaries":[B1,..,Bn]} with B_k a
//             row-major grid of shape r_(k-1) x r_k
// simplicial: {"vertices":v,"maximal":[[..],..]}
std::string complex_to_json_text(const ChainComplex& c);
ChainComplex complex_from_json_text(std::string_view text);
std::string simplicial_to_json_text(const SimplicialComplex& k);
SimplicialComplex simplicial_from_json_text(std::string_view text);

}  // namespace heisvc
