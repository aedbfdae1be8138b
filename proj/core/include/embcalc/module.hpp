#pragma once

#include "embcalc/abelian.hpp"
#include "embcalc/group.hpp"
#include "embcalc/matrix.hpp"

#include <optional>
#include <vector>

namespace embcalc {

/// Action of one group generator on a finitely presented abelian group.
/// For finite groups `element` is a group element whose powers and products
/// (with the other listed elements) must generate the whole group; for free
/// groups it is a single letter. The matrix must map the relation lattice
/// into itself, and its induced map on the quotient must be invertible: for
/// finite groups the element's order certifies this, for free letters either
/// the matrix is unimodular or an explicit inverse is supplied.
struct ModuleAction {
    GroupElement element;
    IntMatrix matrix;
    std::optional<IntMatrix> inverse;
};

/// Finitely presented abelian group with a group action: the homotopy module
/// fed into the dual-orbit quotient.
struct ModuleData {
    std::size_t generators = 0;
    IntMatrix relations; // 0 x generators when free
    std::vector<ModuleAction> actions;

    AbelianGroup underlying_group() const;
};

/// Throws std::invalid_argument describing the first violated module
/// invariant, if any.
void validate_module(const GroupSpec& pi, const ModuleData& module);

struct DualQuotient {
    AbelianGroup group;
    /// True when the orbit had to be truncated (free fundamental group):
    /// the answer is relative to translates up to the configured word length.
    bool relative = false;
};

/// Quotient of the module by the integer span of all group translates of the
/// dual class: exact closure for finite groups, word-length-bounded
/// translates (flagged relative) for free groups.
DualQuotient quotient_by_dual(const GroupSpec& pi, const ModuleData& module,
                              const std::vector<Int>& dual_class, int orbit_word_bound = 4);

} // namespace embcalc
