#include "embcalc/abelian.hpp"

#include <algorithm>
#include <stdexcept>

namespace embcalc {

Int AbelianGroup::torsion_order() const {
    Int n = 1;
    for (const Int& d : torsion) n *= d;
    return n;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::string out;
    if (free_rank == 1) {
        out = "Z";
    } else if (free_rank > 1) {
        out = "Z^" + std::to_string(free_rank);
    }
    for (const Int& d : torsion) {
        if (!out.empty()) out += " ⊕ ";
        out += "Z/" + d.str();
    }
    return out;
}

std::size_t SmithResult::rank() const {
    std::size_t r = 0;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) != 0) ++r;
    return r;
}

std::vector<Int> SmithResult::diagonal() const {
    std::vector<Int> out;
    const std::size_t n = std::min(d.rows(), d.cols());
    for (std::size_t i = 0; i < n; ++i) out.push_back(d.at(i, i));
    return out;
}

namespace {

// Locate the entry of smallest nonzero absolute value in the submatrix
// starting at (t,t); false when that submatrix is zero.
bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best = 0;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const Int& e = d.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

} // namespace

SmithResult smith_normal_form(const IntMatrix& a) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    SmithResult res{IntMatrix::identity(rows), a, IntMatrix::identity(cols)};
    IntMatrix& d = res.d;
    IntMatrix& u = res.u;
    IntMatrix& v = res.v;

    std::size_t t = 0;
    while (t < rows && t < cols) {
        std::size_t pi = t, pj = t;
        if (!find_pivot(d, t, pi, pj)) break;
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            // Clear column t. A nonzero remainder becomes the new pivot; the
            // pivot's absolute value strictly drops, so this terminates.
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d.at(i, t) == 0) continue;
                Int q = d.at(i, t) / d.at(t, t);
                if (q != 0) {
                    d.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if (d.at(i, t) != 0) {
                    d.swap_rows(t, i);
                    u.swap_rows(t, i);
                    settled = false;
                }
            }
            if (!settled) continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d.at(t, j) == 0) continue;
                Int q = d.at(t, j) / d.at(t, t);
                if (q != 0) {
                    d.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if (d.at(t, j) != 0) {
                    d.swap_cols(t, j);
                    v.swap_cols(t, j);
                    settled = false;
                }
            }
            if (!settled) continue;

            // Pivot must divide the rest of the submatrix so that the
            // diagonal forms a divisibility chain.
            for (std::size_t i = t + 1; i < rows && settled; ++i)
                for (std::size_t j = t + 1; j < cols && settled; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        settled = false;
                    }
        }
        ++t;
    }

    const std::size_t n = std::min(rows, cols);
    for (std::size_t i = 0; i < n; ++i)
        if (d.at(i, i) < 0) {
            d.negate_row(i);
            u.negate_row(i);
        }
    return res;
}

AbelianGroup quotient_presentation(std::size_t generators, const IntMatrix& relations) {
    if (relations.rows() > 0 && relations.cols() != generators)
        throw std::invalid_argument("quotient_presentation: relation width must equal generator count");
    AbelianGroup g;
    if (relations.rows() == 0) {
        g.free_rank = generators;
        return g;
    }
    SmithResult snf = smith_normal_form(relations);
    std::size_t rank = 0;
    for (const Int& di : snf.diagonal()) {
        if (di == 0) continue;
        ++rank;
        if (di >= 2) g.torsion.push_back(di);
    }
    g.free_rank = generators - rank;
    return g;
}

Lattice::Lattice(std::size_t ambient_dim, const IntMatrix& rows)
    : dim_(ambient_dim),
      snf_(smith_normal_form(rows.rows() > 0 ? rows : IntMatrix(0, ambient_dim))) {
    if (rows.rows() > 0 && rows.cols() != ambient_dim)
        throw std::invalid_argument("Lattice: row width must equal ambient dimension");
}

bool Lattice::contains(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Lattice::contains: dimension mismatch");
    if (snf_.d.rows() == 0) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }
    std::vector<Int> w = snf_.v.row_times(v);
    const std::size_t diag = std::min(snf_.d.rows(), snf_.d.cols());
    for (std::size_t j = 0; j < dim_; ++j) {
        Int dj = (j < diag) ? snf_.d.at(j, j) : Int(0);
        if (dj == 0) {
            if (w[j] != 0) return false;
        } else if (w[j] % dj != 0) {
            return false;
        }
    }
    return true;
}

std::optional<Int> Lattice::order_mod(const std::vector<Int>& v) const {
    if (v.size() != dim_) throw std::invalid_argument("Lattice::order_mod: dimension mismatch");
    std::vector<Int> w;
    if (snf_.d.rows() == 0) {
        w = v;
    } else {
        w = snf_.v.row_times(v);
    }
    const std::size_t diag = snf_.d.rows() == 0 ? 0 : std::min(snf_.d.rows(), snf_.d.cols());
    Int m = 1;
    for (std::size_t j = 0; j < dim_; ++j) {
        Int dj = (j < diag) ? snf_.d.at(j, j) : Int(0);
        if (dj == 0) {
            if (w[j] != 0) return std::nullopt;
        } else {
            m = lcm(m, dj / gcd(dj, w[j]));
        }
    }
    return m;
}

AbelianGroup Lattice::quotient() const {
    AbelianGroup g;
    std::size_t rank = 0;
    if (snf_.d.rows() > 0) {
        for (const Int& di : snf_.diagonal()) {
            if (di == 0) continue;
            ++rank;
            if (di >= 2) g.torsion.push_back(di);
        }
    }
    g.free_rank = dim_ - rank;
    return g;
}

std::optional<Int> element_order(std::size_t generators, const IntMatrix& relations,
                                 const std::vector<Int>& v) {
    if (v.size() != generators)
        throw std::invalid_argument("element_order: vector length must equal generator count");
    Lattice lat(generators, relations);
    return lat.order_mod(v);
}

} // namespace embcalc
