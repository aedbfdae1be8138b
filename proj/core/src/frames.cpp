#include "embcalc/frames.hpp"

#include "embcalc/spheres.hpp"

#include <stdexcept>

namespace embcalc {

std::string coefficient_str(CoefficientGroup c) {
    switch (c) {
        case CoefficientGroup::Integers: return "Z";
        case CoefficientGroup::ModTwo: return "Z/2";
        case CoefficientGroup::Zero: return "0";
    }
    return "?";
}

AbelianGroup coefficient_group_abelian(CoefficientGroup c) {
    AbelianGroup g;
    if (c == CoefficientGroup::Integers) g.free_rank = 1;
    if (c == CoefficientGroup::ModTwo) g.torsion.push_back(2);
    return g;
}

CoefficientGroup z_kd(int k, int d) {
    if (k < 1 || k > d) throw std::invalid_argument("z_kd: requires 1 <= k <= d");
    return (d - k) % 2 == 0 ? CoefficientGroup::Integers : CoefficientGroup::ModTwo;
}

CoefficientGroup z_ld_immersion(int l, int d) {
    if (l < 1 || l > d) throw std::invalid_argument("z_ld_immersion: requires 1 <= l <= d");
    if (d - 2 * l < 0) throw std::invalid_argument("z_ld_immersion: requires d - 2l >= 0");
    if (l == 1 || (d - l) % 2 == 0) return CoefficientGroup::Integers;
    return CoefficientGroup::ModTwo;
}

AbelianGroup stiefel_first(int k, int d) {
    if (k < 1 || k > d) throw std::invalid_argument("stiefel_first: requires 1 <= k <= d");
    AbelianGroup g;
    if (k == 1 || (d - k) % 2 == 0)
        g.free_rank = 1;
    else
        g.torsion.push_back(2);
    return g;
}

std::optional<AbelianGroup> stiefel_group_at(int k, int d, int n) {
    if (k < 1 || k > d) throw std::invalid_argument("stiefel_group_at: requires 1 <= k <= d");
    if (n < 0) throw std::invalid_argument("stiefel_group_at: requires n >= 0");
    if (n <= d - k - 1) return AbelianGroup{};
    if (n == d - k) return stiefel_first(k, d);
    if (k == 1) return sphere_pi(n, d - 1); // 1-frames form the unit sphere of R^d
    return std::nullopt;
}

ExtensionShape bo_extension(int m) {
    if (m < 1) throw std::invalid_argument("bo_extension: requires m >= 1");
    ExtensionShape shape;
    if (m % 2 == 1)
        shape.kernel = CoefficientGroup::Integers;
    else if (m == 2 || m == 4 || m == 8)
        shape.kernel = CoefficientGroup::Zero;
    else
        shape.kernel = CoefficientGroup::ModTwo;

    switch (m % 8) {
        case 1:
        case 5: shape.cokernel.free_rank = 1; break;
        case 2:
        case 3: shape.cokernel.torsion.push_back(2); break;
        default: break; // 0, 4, 6, 7 -> trivial
    }

    if (shape.kernel == CoefficientGroup::Zero) {
        shape.middle = shape.cokernel;
        shape.split = SplitState::Yes;
        shape.splitting_witness = "kernel vanishes";
    } else if (shape.cokernel.is_trivial()) {
        shape.middle = coefficient_group_abelian(shape.kernel);
        shape.split = SplitState::Yes;
        shape.splitting_witness = "cokernel vanishes";
    } else if (m >= 2) {
        if (auto curated = orthogonal_pi(m - 2, m - 1)) shape.middle = *curated;
    }
    return shape;
}

std::string euler_image_str(EulerImage e) {
    switch (e) {
        case EulerImage::Zero: return "0";
        case EulerImage::EvenIntegers: return "2Z";
        case EulerImage::AllIntegers: return "Z";
        case EulerImage::Unknown: return "unknown";
    }
    return "?";
}

EulerImage euler_image(int l, int d, bool boundary_nonempty, Tristate spherical_sw_vanishes) {
    if (l < 0 || l > d) throw std::invalid_argument("euler_image: requires 0 <= l <= d");
    if ((d - l) % 2 == 1) return EulerImage::Zero;
    if (l == 0) {
        if (boundary_nonempty) return EulerImage::Zero;
        // Closed even-dimensional manifolds need homology data we do not have.
        return EulerImage::Unknown;
    }
    const int rank = d - l;
    if (rank != 2 && rank != 4 && rank != 8) return EulerImage::EvenIntegers;
    switch (spherical_sw_vanishes) {
        case Tristate::Yes: return EulerImage::EvenIntegers;
        case Tristate::No: return EulerImage::AllIntegers;
        case Tristate::Unknown: return EulerImage::Unknown;
    }
    return EulerImage::Unknown;
}

SwConstraint tangent_sw_constraint(int k, int d) {
    if (k < 2 || k > d) throw std::invalid_argument("tangent_sw_constraint: requires 2 <= k <= d");
    const int l = k - 1;
    const int rank = d - l;
    if ((rank == 2 || rank == 4 || rank == 8) && d <= 2 * l) return SwConstraint::PossiblyNonzero;
    return SwConstraint::ForcedZero;
}

Int eta_w(const Int& e_rel, const Int& w_value) {
    if ((e_rel - w_value) % 2 != 0)
        throw std::invalid_argument("eta_w: W is not an integral lift on this class");
    return (e_rel - w_value) / 2;
}

std::string splitting_verdict_str(SplittingVerdict v) {
    switch (v) {
        case SplittingVerdict::YesWithEta: return "yes_with_eta";
        case SplittingVerdict::YesAbstract: return "yes_abstract";
        case SplittingVerdict::NoGeneralRule: return "no_general_rule";
    }
    return "?";
}

SplittingVerdict splitting_exists(int k, int d, SplittingContext context) {
    if (k < 2 || k > d) throw std::invalid_argument("splitting_exists: requires 2 <= k <= d");
    const int c = d - k;
    if (c % 2 == 0) {
        if (c != 2 && c != 4 && c != 8) return SplittingVerdict::YesWithEta;
        if (context == SplittingContext::TangentBundleOfCompactManifold && d >= 2 * k)
            return SplittingVerdict::YesWithEta;
        return SplittingVerdict::NoGeneralRule;
    }
    if (c != 1 && c != 3 && c != 7) return SplittingVerdict::YesAbstract;
    return SplittingVerdict::NoGeneralRule;
}

} // namespace embcalc
