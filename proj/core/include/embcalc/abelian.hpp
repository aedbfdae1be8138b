#pragma once

#include "embcalc/int.hpp"
#include "embcalc/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace embcalc {

/// Isomorphism type of a finitely generated abelian group:
/// Z^free_rank + Z/d_1 + ... + Z/d_t with d_1 | d_2 | ... and every d_i >= 2.
struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    Int torsion_order() const;

    /// "0", "Z", "Z^2", "Z/2 ⊕ Z/4", "Z ⊕ Z/2", ...
    std::string str() const;

    bool operator==(const AbelianGroup& other) const = default;
};

/// U * A * V = D with U, V unimodular and D diagonal, the diagonal entries
/// nonnegative and forming a divisibility chain d_1 | d_2 | ...
struct SmithResult {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;

    std::size_t rank() const;
    std::vector<Int> diagonal() const;
};

SmithResult smith_normal_form(const IntMatrix& a);

/// Isomorphism type of Z^generators / (row span of relations).
AbelianGroup quotient_presentation(std::size_t generators, const IntMatrix& relations);

/// Precomputed lattice data for repeated membership / order queries against
/// the row span of one relation matrix.
class Lattice {
public:
    Lattice(std::size_t ambient_dim, const IntMatrix& rows);

    std::size_t ambient_dim() const { return dim_; }

    /// Does v lie in the row span?
    bool contains(const std::vector<Int>& v) const;

    /// Least m >= 1 with m*v in the row span; nullopt when no such m exists.
    std::optional<Int> order_mod(const std::vector<Int>& v) const;

    AbelianGroup quotient() const;

private:
    std::size_t dim_;
    SmithResult snf_;
};

/// Least m >= 1 with m*v in the row span of `relations` (an n-column matrix,
/// v of length n); nullopt means the class of v has infinite order.
std::optional<Int> element_order(std::size_t generators, const IntMatrix& relations,
                                 const std::vector<Int>& v);

} // namespace embcalc
