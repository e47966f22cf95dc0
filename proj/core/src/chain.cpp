#include "heisvc/chain.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace heisvc {

IntMatrix IntMatrix::identity(Int n) {
    IntMatrix m(n, n);
    for (Int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (Int v : data_) {
        if (v != 0) return false;
    }
    return true;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix m = *this;
    for (Int& v : m.data_) v = checked_neg(v);
    return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols() != y.rows()) throw std::invalid_argument("shape mismatch");
    IntMatrix r(x.rows(), y.cols());
    for (Int i = 0; i < x.rows(); ++i) {
        for (Int k = 0; k < x.cols(); ++k) {
            Int xv = x.at(i, k);
            if (xv == 0) continue;
            for (Int j = 0; j < y.cols(); ++j) {
                r.at(i, j) = checked_add(r.at(i, j), checked_mul(xv, y.at(k, j)));
            }
        }
    }
    return r;
}

Int det(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square");
    Int n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (Int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            Int swap_row = -1;
            for (Int i = k + 1; i < n; ++i) {
                if (a.at(i, k) != 0) { swap_row = i; break; }
            }
            if (swap_row < 0) return 0;
            for (Int c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(swap_row, c));
            sign = -sign;
        }
        for (Int i = k + 1; i < n; ++i) {
            for (Int j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a.at(i, j), a.at(k, k)),
                                      checked_mul(a.at(i, k), a.at(k, j)));
                a.at(i, j) = num / prev;  // Bareiss: division is exact
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return checked_mul(sign, a.at(n - 1, n - 1));
}

IntMatrix ChainComplex::boundary(Int k) const {
    if (k >= 1 && k <= dim()) return boundaries[static_cast<std::size_t>(k - 1)];
    return IntMatrix(rank(k - 1), rank(k));
}

void ChainComplex::validate() const {
    for (Int r : ranks) {
        if (r < 0) throw std::invalid_argument("negative rank");
    }
    if (boundaries.size() + 1 != std::max<std::size_t>(ranks.size(), 1)) {
        throw std::invalid_argument("boundary count does not match ranks");
    }
    for (Int k = 1; k <= dim(); ++k) {
        const IntMatrix& b = boundaries[static_cast<std::size_t>(k - 1)];
        if (b.rows() != rank(k - 1) || b.cols() != rank(k)) {
            throw std::invalid_argument("boundary shape mismatch");
        }
    }
    for (Int k = 1; k + 1 <= dim(); ++k) {
        if (!(boundary(k) * boundary(k + 1)).is_zero()) {
            throw std::invalid_argument("boundary square is nonzero");
        }
    }
}

IntMatrix ChainMap::component(Int k) const {
    if (k >= 0 && k < static_cast<Int>(components.size())) {
        return components[static_cast<std::size_t>(k)];
    }
    return IntMatrix(target.rank(k), source.rank(k));
}

void ChainMap::validate() const {
    source.validate();
    target.validate();
    for (Int k = 0; k < static_cast<Int>(components.size()); ++k) {
        const IntMatrix& m = components[static_cast<std::size_t>(k)];
        if (m.rows() != target.rank(k) || m.cols() != source.rank(k)) {
            throw std::invalid_argument("chain map component shape mismatch");
        }
    }
    Int top = std::max(source.dim(), target.dim());
    for (Int k = 1; k <= top; ++k) {
        if (!(target.boundary(k) * component(k) ==
              component(k - 1) * source.boundary(k))) {
            throw std::invalid_argument("chain map does not commute with boundary");
        }
    }
}

ChainComplex circle_complex() {
    ChainComplex c;
    c.ranks = {1, 1};
    c.boundaries = {IntMatrix(1, 1)};
    return c;
}

ChainComplex point_complex() {
    ChainComplex c;
    c.ranks = {1};
    return c;
}

ChainMap identity_map(const ChainComplex& c) {
    ChainMap f{c, c, {}};
    for (Int r : c.ranks) f.components.push_back(IntMatrix::identity(r));
    return f;
}

// ---------------------------------------------------------------------
// products
// ---------------------------------------------------------------------

namespace {

// Basis of the product in degree n: triples (i, p, q) with p a cell of
// degree i in the first factor and q of degree n-i in the second,
// ordered by i, then p, then q.
struct ProductBasis {
    std::vector<Int> block_offset;  // offset of block i within degree n
    Int total = 0;
};

ProductBasis product_basis(const ChainComplex& c, const ChainComplex& d, Int n) {
    ProductBasis basis;
    basis.block_offset.assign(static_cast<std::size_t>(n + 1), 0);
    Int off = 0;
    for (Int i = 0; i <= n; ++i) {
        basis.block_offset[static_cast<std::size_t>(i)] = off;
        off += c.rank(i) * d.rank(n - i);
    }
    basis.total = off;
    return basis;
}

Int product_index(const ProductBasis& basis, const ChainComplex& d, Int n,
                  Int i, Int p, Int q) {
    return basis.block_offset[static_cast<std::size_t>(i)] + p * d.rank(n - i) + q;
}

}  // namespace

ProductResult product_complex(const ChainComplex& c, const ChainComplex& d) {
    c.validate();
    d.validate();
    Int top = c.dim() + d.dim();
    if (c.dim() < 0 || d.dim() < 0) top = -1;

    ChainComplex prod;
    std::vector<ProductBasis> bases;
    for (Int n = 0; n <= top; ++n) {
        bases.push_back(product_basis(c, d, n));
        prod.ranks.push_back(bases.back().total);
    }
    for (Int n = 1; n <= top; ++n) {
        const ProductBasis& cur = bases[static_cast<std::size_t>(n)];
        const ProductBasis& below = bases[static_cast<std::size_t>(n - 1)];
        IntMatrix b(below.total, cur.total);
        for (Int i = 0; i <= n; ++i) {
            IntMatrix bc = c.boundary(i);
            IntMatrix bd = d.boundary(n - i);
            Int sign = (i % 2 == 0) ? 1 : -1;
            for (Int p = 0; p < c.rank(i); ++p) {
                for (Int q = 0; q < d.rank(n - i); ++q) {
                    Int col = product_index(cur, d, n, i, p, q);
                    if (i >= 1) {
                        for (Int r = 0; r < c.rank(i - 1); ++r) {
                            Int coef = bc.at(r, p);
                            if (coef == 0) continue;
                            Int row = product_index(below, d, n - 1, i - 1, r, q);
                            b.at(row, col) = checked_add(b.at(row, col), coef);
                        }
                    }
                    if (n - i >= 1) {
                        for (Int r = 0; r < d.rank(n - i - 1); ++r) {
                            Int coef = bd.at(r, q);
                            if (coef == 0) continue;
                            Int row = product_index(below, d, n - 1, i, p, r);
                            b.at(row, col) =
                                checked_add(b.at(row, col), checked_mul(sign, coef));
                        }
                    }
                }
            }
        }
        prod.boundaries.push_back(std::move(b));
    }
    prod.validate();

    // Projections: cells whose other factor is a 0-cell map to their own
    // factor, everything else dies.
    ChainMap p1{prod, c, {}};
    ChainMap p2{prod, d, {}};
    for (Int n = 0; n <= top; ++n) {
        const ProductBasis& cur = bases[static_cast<std::size_t>(n)];
        IntMatrix m1(c.rank(n), cur.total);
        if (n <= c.dim()) {
            for (Int p = 0; p < c.rank(n); ++p) {
                for (Int q = 0; q < d.rank(0); ++q) {
                    m1.at(p, product_index(cur, d, n, n, p, q)) = 1;
                }
            }
        }
        p1.components.push_back(std::move(m1));
        IntMatrix m2(d.rank(n), cur.total);
        if (n <= d.dim()) {
            for (Int p = 0; p < c.rank(0); ++p) {
                for (Int q = 0; q < d.rank(n); ++q) {
                    m2.at(q, product_index(cur, d, n, 0, p, q)) = 1;
                }
            }
        }
        p2.components.push_back(std::move(m2));
    }
    p1.validate();
    p2.validate();
    return {std::move(prod), std::move(p1), std::move(p2)};
}

// ---------------------------------------------------------------------
// cones and cylinders
// ---------------------------------------------------------------------

ChainComplex mapping_cone(const ChainMap& phi) {
    phi.validate();
    const ChainComplex& x = phi.source;
    const ChainComplex& y = phi.target;
    Int top = std::max(x.dim() + 1, y.dim());

    ChainComplex cone;
    for (Int n = 0; n <= top; ++n) cone.ranks.push_back(x.rank(n - 1) + y.rank(n));
    for (Int n = 1; n <= top; ++n) {
        IntMatrix b(cone.rank(n - 1), cone.rank(n));
        IntMatrix bx = x.boundary(n - 1);
        IntMatrix by = y.boundary(n);
        IntMatrix f = phi.component(n - 1);
        Int row_split = x.rank(n - 2);  // rows: x part then y part
        // columns: x part then y part; d(x,y) = (-dx, phi x + dy)
        for (Int ccol = 0; ccol < x.rank(n - 1); ++ccol) {
            for (Int r = 0; r < x.rank(n - 2); ++r) {
                b.at(r, ccol) = checked_neg(bx.at(r, ccol));
            }
            for (Int r = 0; r < y.rank(n - 1); ++r) {
                b.at(row_split + r, ccol) = f.at(r, ccol);
            }
        }
        for (Int ccol = 0; ccol < y.rank(n); ++ccol) {
            for (Int r = 0; r < y.rank(n - 1); ++r) {
                b.at(row_split + r, x.rank(n - 1) + ccol) = by.at(r, ccol);
            }
        }
        cone.boundaries.push_back(std::move(b));
    }
    cone.validate();
    return cone;
}

ChainComplex double_cylinder_complex(const ChainMap& f, const ChainMap& g) {
    if (!(f.source == g.source)) {
        throw std::invalid_argument("double cylinder requires a shared source");
    }
    f.validate();
    g.validate();
    const ChainComplex& y = f.target;
    const ChainComplex& z = g.target;

    ChainComplex sum;
    Int top = std::max(y.dim(), z.dim());
    for (Int n = 0; n <= top; ++n) sum.ranks.push_back(y.rank(n) + z.rank(n));
    for (Int n = 1; n <= top; ++n) {
        IntMatrix b(sum.rank(n - 1), sum.rank(n));
        IntMatrix by = y.boundary(n);
        IntMatrix bz = z.boundary(n);
        for (Int r = 0; r < y.rank(n - 1); ++r) {
            for (Int ccol = 0; ccol < y.rank(n); ++ccol) {
                b.at(r, ccol) = by.at(r, ccol);
            }
        }
        for (Int r = 0; r < z.rank(n - 1); ++r) {
            for (Int ccol = 0; ccol < z.rank(n); ++ccol) {
                b.at(y.rank(n - 1) + r, y.rank(n) + ccol) = bz.at(r, ccol);
            }
        }
        sum.boundaries.push_back(std::move(b));
    }

    // x -> (f x, -g x)
    ChainMap combined{f.source, sum, {}};
    for (Int n = 0; n < static_cast<Int>(f.source.ranks.size()); ++n) {
        IntMatrix m(sum.rank(n), f.source.rank(n));
        IntMatrix fm = f.component(n);
        IntMatrix gm = g.component(n);
        for (Int r = 0; r < y.rank(n); ++r) {
            for (Int ccol = 0; ccol < f.source.rank(n); ++ccol) {
                m.at(r, ccol) = fm.at(r, ccol);
            }
        }
        for (Int r = 0; r < z.rank(n); ++r) {
            for (Int ccol = 0; ccol < f.source.rank(n); ++ccol) {
                m.at(y.rank(n) + r, ccol) = checked_neg(gm.at(r, ccol));
            }
        }
        combined.components.push_back(std::move(m));
    }
    return mapping_cone(combined);
}

// ---------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------

namespace {

// Division rounded to the nearest integer keeps elimination quotients
// small, which keeps the tracked transforms from blowing up.
Int rounded_div(Int a, Int b) {
    Int q = a / b;
    Int r = a % b;
    if (checked_mul(checked_abs(r), 2) > checked_abs(b)) {
        q = checked_add(q, ((a < 0) == (b < 0)) ? 1 : -1);
    }
    return q;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    const Int R = m.rows(), C = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(R), u_inv = IntMatrix::identity(R);
    IntMatrix v = IntMatrix::identity(C), v_inv = IntMatrix::identity(C);

    // Row ops act as a <- E a (and u <- E u, u_inv <- u_inv E^-1); column
    // ops as a <- a E (and v <- v E, v_inv <- E^-1 v_inv).
    auto row_swap = [&](Int i, Int j) {
        if (i == j) return;
        for (Int c = 0; c < C; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (Int c = 0; c < R; ++c) std::swap(u.at(i, c), u.at(j, c));
        for (Int r = 0; r < R; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
    };
    auto col_swap = [&](Int i, Int j) {
        if (i == j) return;
        for (Int r = 0; r < R; ++r) std::swap(a.at(r, i), a.at(r, j));
        for (Int r = 0; r < C; ++r) std::swap(v.at(r, i), v.at(r, j));
        for (Int c = 0; c < C; ++c) std::swap(v_inv.at(i, c), v_inv.at(j, c));
    };
    auto row_negate = [&](Int i) {
        for (Int c = 0; c < C; ++c) a.at(i, c) = checked_neg(a.at(i, c));
        for (Int c = 0; c < R; ++c) u.at(i, c) = checked_neg(u.at(i, c));
        for (Int r = 0; r < R; ++r) u_inv.at(r, i) = checked_neg(u_inv.at(r, i));
    };
    auto row_add = [&](Int i, Int j, Int k) {  // row_i += k * row_j
        for (Int c = 0; c < C; ++c) {
            a.at(i, c) = checked_add(a.at(i, c), checked_mul(k, a.at(j, c)));
        }
        for (Int c = 0; c < R; ++c) {
            u.at(i, c) = checked_add(u.at(i, c), checked_mul(k, u.at(j, c)));
        }
        for (Int r = 0; r < R; ++r) {
            u_inv.at(r, j) = checked_sub(u_inv.at(r, j),
                                         checked_mul(k, u_inv.at(r, i)));
        }
    };
    auto col_add = [&](Int i, Int j, Int k) {  // col_i += k * col_j
        for (Int r = 0; r < R; ++r) {
            a.at(r, i) = checked_add(a.at(r, i), checked_mul(k, a.at(r, j)));
        }
        for (Int r = 0; r < C; ++r) {
            v.at(r, i) = checked_add(v.at(r, i), checked_mul(k, v.at(r, j)));
        }
        for (Int c = 0; c < C; ++c) {
            v_inv.at(j, c) = checked_sub(v_inv.at(j, c),
                                         checked_mul(k, v_inv.at(i, c)));
        }
    };

    Int t = 0;
    const Int limit = std::min(R, C);
    while (t < limit) {
        Int pi = -1, pj = -1, best = 0;
        for (Int r = t; r < R; ++r) {
            for (Int c = t; c < C; ++c) {
                Int val = checked_abs(a.at(r, c));
                if (val != 0 && (pi < 0 || val < best)) {
                    best = val;
                    pi = r;
                    pj = c;
                }
            }
        }
        if (pi < 0) break;
        row_swap(t, pi);
        col_swap(t, pj);
        if (a.at(t, t) < 0) row_negate(t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (Int r = t + 1; r < R; ++r) {
                if (a.at(r, t) == 0) continue;
                Int q = rounded_div(a.at(r, t), a.at(t, t));
                if (q != 0) row_add(r, t, checked_neg(q));
                if (a.at(r, t) != 0) {  // remainder becomes the new pivot
                    row_swap(t, r);
                    if (a.at(t, t) < 0) row_negate(t);
                    clean = false;
                }
            }
            for (Int c = t + 1; c < C; ++c) {
                if (a.at(t, c) == 0) continue;
                Int q = rounded_div(a.at(t, c), a.at(t, t));
                if (q != 0) col_add(c, t, checked_neg(q));
                if (a.at(t, c) != 0) {
                    col_swap(t, c);
                    if (a.at(t, t) < 0) row_negate(t);
                    clean = false;
                }
            }
        }
        ++t;
    }

    // Enforce the divisibility chain pairwise along the diagonal.
    bool changed = true;
    while (changed) {
        changed = false;
        for (Int i = 0; i + 1 < t; ++i) {
            Int di = a.at(i, i), dj = a.at(i + 1, i + 1);
            if (dj % di == 0) continue;
            changed = true;
            col_add(i, i + 1, 1);  // puts dj below di in column i
            while (a.at(i + 1, i) != 0) {
                Int q = rounded_div(a.at(i, i), a.at(i + 1, i));
                if (q != 0) row_add(i, i + 1, checked_neg(q));
                row_swap(i, i + 1);
            }
            Int x = a.at(i, i + 1);
            if (x != 0) col_add(i + 1, i, checked_neg(x / a.at(i, i)));
            if (a.at(i, i) < 0) row_negate(i);
            if (a.at(i + 1, i + 1) < 0) row_negate(i + 1);
        }
    }

    SmithResult result;
    result.rank = t;
    for (Int i = 0; i < t; ++i) result.invariant_factors.push_back(a.at(i, i));
    result.d = a;
    result.u = std::move(u);
    result.v = std::move(v);
    result.u_inv = std::move(u_inv);
    result.v_inv = std::move(v_inv);
    if (!(result.u * m * result.v == result.d) ||
        !(result.u_inv * result.d * result.v_inv == m)) {
        throw std::logic_error("smith transform bookkeeping failed");
    }
    return result;
}

// ---------------------------------------------------------------------
// homology
// ---------------------------------------------------------------------

std::string HomologyResult::Group::to_string() const {
    std::ostringstream os;
    bool first = true;
    if (betti > 0) {
        os << 'Z';
        if (betti > 1) os << '^' << betti;
        first = false;
    }
    for (Int d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    if (first) os << '0';
    return os.str();
}

HomologyResult homology(const ChainComplex& c) {
    c.validate();
    std::vector<SmithResult> snf;  // snf[k] for boundary out of degree k+1
    for (Int k = 1; k <= c.dim(); ++k) snf.push_back(smith_normal_form(c.boundary(k)));
    auto rank_of = [&](Int k) -> Int {
        if (k < 1 || k > c.dim()) return 0;
        return snf[static_cast<std::size_t>(k - 1)].rank;
    };
    HomologyResult h;
    for (Int k = 0; k <= c.dim(); ++k) {
        HomologyResult::Group g;
        g.betti = c.rank(k) - rank_of(k) - rank_of(k + 1);
        if (k + 1 <= c.dim()) {
            for (Int d : snf[static_cast<std::size_t>(k)].invariant_factors) {
                if (d > 1) g.torsion.push_back(d);
            }
        }
        h.groups.push_back(std::move(g));
    }
    return h;
}

// ---------------------------------------------------------------------
// simplicial complexes
// ---------------------------------------------------------------------

SimplicialComplex simplicial_join(const SimplicialComplex& k,
                                  const SimplicialComplex& l) {
    SimplicialComplex j;
    j.vertices = checked_add(k.vertices, l.vertices);
    auto shift = [&](const std::vector<Int>& simplex) {
        std::vector<Int> s;
        for (Int vtx : simplex) s.push_back(checked_add(vtx, k.vertices));
        return s;
    };
    if (k.maximal.empty()) {
        for (const auto& tau : l.maximal) j.maximal.push_back(shift(tau));
        return j;
    }
    if (l.maximal.empty()) {
        j.maximal = k.maximal;
        return j;
    }
    for (const auto& sigma : k.maximal) {
        for (const auto& tau : l.maximal) {
            std::vector<Int> s = sigma;
            for (Int vtx : shift(tau)) s.push_back(vtx);
            j.maximal.push_back(std::move(s));
        }
    }
    return j;
}

ChainComplex from_simplicial(const SimplicialComplex& k) {
    for (const auto& s : k.maximal) {
        if (s.empty()) throw std::invalid_argument("empty simplex");
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] < 0 || s[i] >= k.vertices) {
                throw std::invalid_argument("vertex index out of range");
            }
            if (i > 0 && s[i - 1] >= s[i]) {
                throw std::invalid_argument("simplex vertices must be strictly increasing");
            }
        }
        if (s.size() > 20) throw std::invalid_argument("simplex too large");
    }

    std::set<std::vector<Int>> faces;
    for (const auto& s : k.maximal) {
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
            std::vector<Int> face;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::size_t{1} << i)) face.push_back(s[i]);
            }
            faces.insert(std::move(face));
        }
    }

    std::vector<std::vector<std::vector<Int>>> by_degree;  // lex order per degree
    for (const auto& f : faces) {
        std::size_t deg = f.size() - 1;
        if (by_degree.size() <= deg) by_degree.resize(deg + 1);
        by_degree[deg].push_back(f);  // set iteration is already lex-sorted
    }

    ChainComplex c;
    std::vector<std::map<std::vector<Int>, Int>> index(by_degree.size());
    for (std::size_t deg = 0; deg < by_degree.size(); ++deg) {
        c.ranks.push_back(static_cast<Int>(by_degree[deg].size()));
        for (std::size_t i = 0; i < by_degree[deg].size(); ++i) {
            index[deg][by_degree[deg][i]] = static_cast<Int>(i);
        }
    }
    for (std::size_t deg = 1; deg < by_degree.size(); ++deg) {
        IntMatrix b(c.ranks[deg - 1], c.ranks[deg]);
        for (std::size_t j = 0; j < by_degree[deg].size(); ++j) {
            const auto& s = by_degree[deg][j];
            Int sign = 1;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                std::vector<Int> face;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (i != drop) face.push_back(s[i]);
                }
                Int row = index[deg - 1].at(face);
                b.at(row, static_cast<Int>(j)) =
                    checked_add(b.at(row, static_cast<Int>(j)), sign);
                sign = -sign;
            }
        }
        c.boundaries.push_back(std::move(b));
    }
    c.validate();
    return c;
}

// ---------------------------------------------------------------------
// JSON wire formats
// ---------------------------------------------------------------------

std::string complex_to_json_text(const ChainComplex& c) {
    nlohmann::json j;
    j["ranks"] = c.ranks;
    nlohmann::json bnds = nlohmann::json::array();
    for (Int k = 1; k <= c.dim(); ++k) {
        const IntMatrix& b = c.boundaries[static_cast<std::size_t>(k - 1)];
        nlohmann::json grid = nlohmann::json::array();
        for (Int r = 0; r < b.rows(); ++r) {
            nlohmann::json row = nlohmann::json::array();
            for (Int col = 0; col < b.cols(); ++col) row.push_back(b.at(r, col));
            grid.push_back(std::move(row));
        }
        bnds.push_back(std::move(grid));
    }
    j["boundaries"] = std::move(bnds);
    return j.dump();
}

ChainComplex complex_from_json_text(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("ranks") || !j.contains("boundaries") ||
        !j["ranks"].is_array() || !j["boundaries"].is_array()) {
        throw std::invalid_argument("complex JSON needs \"ranks\" and \"boundaries\" arrays");
    }
    ChainComplex c;
    for (const auto& r : j["ranks"]) {
        if (!r.is_number_integer() || r.get<Int>() < 0) {
            throw std::invalid_argument("ranks must be non-negative integers");
        }
        c.ranks.push_back(r.get<Int>());
    }
    const auto& bnds = j["boundaries"];
    if (static_cast<Int>(bnds.size()) != std::max<Int>(c.dim(), 0)) {
        throw std::invalid_argument("boundary count does not match ranks");
    }
    for (Int k = 1; k <= c.dim(); ++k) {
        const auto& grid = bnds[static_cast<std::size_t>(k - 1)];
        IntMatrix b(c.rank(k - 1), c.rank(k));
        if (!grid.is_array() || static_cast<Int>(grid.size()) != c.rank(k - 1)) {
            throw std::invalid_argument("boundary grid has wrong row count");
        }
        for (Int r = 0; r < c.rank(k - 1); ++r) {
            const auto& row = grid[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<Int>(row.size()) != c.rank(k)) {
                throw std::invalid_argument("boundary grid has wrong column count");
            }
            for (Int col = 0; col < c.rank(k); ++col) {
                const auto& cell = row[static_cast<std::size_t>(col)];
                if (!cell.is_number_integer()) {
                    throw std::invalid_argument("boundary entries must be integers");
                }
                b.at(r, col) = cell.get<Int>();
            }
        }
        c.boundaries.push_back(std::move(b));
    }
    c.validate();
    return c;
}

std::string simplicial_to_json_text(const SimplicialComplex& k) {
    nlohmann::json j;
    j["vertices"] = k.vertices;
    j["maximal"] = k.maximal;
    return j.dump();
}

SimplicialComplex simplicial_from_json_text(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("maximal") ||
        !j["vertices"].is_number_integer() || !j["maximal"].is_array()) {
        throw std::invalid_argument(
            "simplicial JSON needs integer \"vertices\" and array \"maximal\"");
    }
    SimplicialComplex k;
    k.vertices = j["vertices"].get<Int>();
    if (k.vertices < 0) throw std::invalid_argument("negative vertex count");
    for (const auto& s : j["maximal"]) {
        if (!s.is_array()) throw std::invalid_argument("simplex must be an array");
        std::vector<Int> simplex;
        for (const auto& vtx : s) {
            if (!vtx.is_number_integer()) {
                throw std::invalid_argument("vertex indices must be integers");
            }
            simplex.push_back(vtx.get<Int>());
        }
        k.maximal.push_back(std::move(simplex));
    }
    return k;
}

}  // namespace heisvc
