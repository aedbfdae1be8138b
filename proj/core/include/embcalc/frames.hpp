#pragma once

#include "embcalc/abelian.hpp"

#include <optional>
#include <string>

namespace embcalc {

/// Coefficient group that a case rule selects: Z, Z/2, or 0.
enum class CoefficientGroup { Integers, ModTwo, Zero };

std::string coefficient_str(CoefficientGroup c);
AbelianGroup coefficient_group_abelian(CoefficientGroup c);

/// Z for d-k even, Z/2 for d-k odd. Requires 1 <= k <= d.
CoefficientGroup z_kd(int k, int d);

/// Immersion-side coefficient: Z for l = 1 or d-l even, Z/2 for d-l odd with
/// l >= 2. Requires 1 <= l <= d and d - 2l >= 0.
CoefficientGroup z_ld_immersion(int l, int d);

/// First interesting homotopy group of the Stiefel manifold of k-frames in
/// R^d: Z when k = 1 or d-k is even, else Z/2. Requires 1 <= k <= d.
AbelianGroup stiefel_first(int k, int d);

/// pi_n of that Stiefel manifold where decided: 0 for n <= d-k-1, the first
/// interesting group at n = d-k, unknown above.
std::optional<AbelianGroup> stiefel_group_at(int k, int d, int n);

enum class SplitState { Yes, No, Unknown };

/// Kernel/cokernel case data for the extension computing pi_(m-1) of the
/// classifying space of the rank-(m-1) orthogonal group.
struct ExtensionShape {
    CoefficientGroup kernel;
    AbelianGroup cokernel;
    std::optional<AbelianGroup> middle; // reported outright when forced or curated
    SplitState split = SplitState::Unknown;
    std::string splitting_witness;
};

ExtensionShape bo_extension(int m);

enum class Tristate { Yes, No, Unknown };
enum class EulerImage { Zero, EvenIntegers, AllIntegers, Unknown };

std::string euler_image_str(EulerImage e);

/// Image of the Euler-number homomorphism on the first interesting homotopy
/// group of the frame bundle: zero in odd complementary rank, zero at rank 0
/// over a manifold with boundary, and in even complementary rank either all
/// of Z or 2Z according to the spherical Stiefel-Whitney class (which can be
/// nonzero only in ranks 2, 4, 8).
EulerImage euler_image(int l, int d, bool boundary_nonempty, Tristate spherical_sw_vanishes);

enum class SwConstraint { ForcedZero, PossiblyNonzero };

/// For the tangent bundle of a compact d-manifold: can the spherical
/// Stiefel-Whitney obstruction in rank d-k+1 be nonzero? Only when that rank
/// is 2, 4 or 8 and d <= 2(k-1); the Wu formula kills it otherwise.
SwConstraint tangent_sw_constraint(int k, int d);

/// Half of a relative Euler number corrected by an integral lift of the
/// spherical Stiefel-Whitney class: (e_rel - w_value) / 2. The two arguments
/// must agree mod 2.
Int eta_w(const Int& e_rel, const Int& w_value);

enum class SplittingContext { TangentBundleOfCompactManifold, General };
enum class SplittingVerdict { YesWithEta, YesAbstract, NoGeneralRule };

std::string splitting_verdict_str(SplittingVerdict v);

/// Does the frame-bundle extension in the first interesting degree split?
///  - d-k even, not 2/4/8: yes, with the explicit half-Euler splitting (W=0);
///  - d-k even, 2/4/8, tangent bundle, d >= 2k: yes, with a W-corrected
///    half-Euler splitting;
///  - d-k odd, not 1/3/7: yes, abstractly (no explicit formula);
///  - remaining cases: no general rule.
SplittingVerdict splitting_exists(int k, int d, SplittingContext context);

} // namespace embcalc
