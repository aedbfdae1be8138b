#pragma once

#include "embcalc/abelian.hpp"
#include "embcalc/group.hpp"
#include "embcalc/ring.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace embcalc {

/// Dimension pair (disk dimension l >= 1 inside ambient dimension d >= 1)
/// that fixes the sign of the double-point involution. The relation subgroup
/// of the group ring is zero for l = 1 and generated by g - sign*g^-1 for
/// l >= 2, where sign = (-1)^(d-l).
struct ParityContext {
    int disk_dim;    // l
    int ambient_dim; // d

    ParityContext(int l, int d);

    int involution_sign() const { return (ambient_dim - disk_dim) % 2 == 0 ? +1 : -1; }
    bool relations_trivial() const { return disk_dim == 1; }
    bool codim_parity_even() const { return (ambient_dim - disk_dim) % 2 == 0; }
};

/// One double point of a perfect map: a sign and the loop through the two
/// sheets, already expressed as a group word.
struct TraceEvent {
    int sign; // +1 or -1
    GroupElement loop;
};

/// Ordered record of the double points; the order matters only for reporting,
/// the invariant is a sum.
using Trace = std::vector<TraceEvent>;

/// Generators of a subgroup of the ambient quotient (for example the image of
/// the double-point homomorphism on spheres).
struct SpanSpec {
    std::vector<RingElement> generators;
};

/// A class in the group ring modulo the signed-involution relations, stored
/// in canonical form. When drop_identity is set the class lives in the ring
/// over the nonidentity elements.
struct DaxClass {
    ParityContext context;
    RingElement value;
    bool identity_dropped;
};

/// Canonical form in Z[pi] / (g - sign*g^-1 : g):
///  - l = 1: the element itself (minus its identity term when flagged);
///  - l >= 2: each pair {g, g^-1} is folded onto its canonically smaller
///    representative with the sign, and for sign = -1 a self-inverse element
///    keeps its coefficient only mod 2 (representative coefficient 0 or 1).
/// Idempotent and additive.
RingElement canonical_form(const ParityContext& ctx, const GroupSpec& spec, const RingElement& x,
                           bool drop_identity);

/// The canonically smaller of {g, g^-1}.
GroupElement pair_representative(const GroupSpec& spec, const GroupElement& g);

/// Isomorphism type of Z[pi]/relations (or Z[pi minus 1]/relations) for a
/// finite group: one Z summand per {g, g^-1} pair, and for odd codimension
/// parity one Z/2 summand per self-inverse element.
AbelianGroup relations_quotient_group(const ParityContext& ctx, const GroupSpec& spec,
                                      bool drop_identity);

/// Signed sum of the double-point loops, reduced to canonical form. The
/// event order never matters.
DaxClass dax_of_trace(const ParityContext& ctx, const GroupSpec& spec, const Trace& trace,
                      bool drop_identity);

/// Decision procedure for classes of the ambient quotient modulo the integer
/// span of a finite generator list. Works over any supported group: each
/// query touches only finitely many support elements, so it reduces to exact
/// lattice linear algebra. Immutable; safe to share between threads.
class SpanReducer {
public:
    /// relations_apply = false builds the reducer over the plain group ring
    /// (used for augmentation counts, which quotient only by the listed
    /// generators).
    SpanReducer(const ParityContext& ctx, const GroupSpec& spec, SpanSpec generators,
                bool drop_identity, bool relations_apply = true);

    /// Is x zero in the quotient?
    bool is_zero(const RingElement& x) const;
    bool equivalent(const RingElement& x, const RingElement& y) const;

    /// Order of the class of x; nullopt = infinite order.
    std::optional<Int> class_order(const RingElement& x) const;

    const SpanSpec& generators() const { return generators_; }
    bool identity_dropped() const { return drop_identity_; }
    bool relations_applied() const { return relations_apply_; }

private:
    RingElement normal(const RingElement& x) const;

    ParityContext ctx_;
    GroupSpec spec_;
    SpanSpec generators_; // stored in canonical/normal form
    bool drop_identity_;
    bool relations_apply_;
};

/// Quotient of the relations quotient by the span of the listed generators.
/// Finite groups get the exact isomorphism type via Smith normal form over
/// the canonical-representative basis; infinite groups get a lazy reducer.
std::variant<AbelianGroup, SpanReducer> md_image_quotient(const ParityContext& ctx,
                                                          const GroupSpec& spec,
                                                          const SpanSpec& md_values,
                                                          bool drop_identity);

/// Countably infinite marker for augmentation counts.
struct CountablyInfinite {
    bool operator==(const CountablyInfinite&) const = default;
};

/// Number of augmentations of a family of embedded disks in the even
/// codimension-parity case: twice the order of the unit class in the plain
/// group ring modulo the span of the listed augmented double-point images.
/// Requires d - l even.
std::variant<Int, CountablyInfinite> framing_count(const ParityContext& ctx, const GroupSpec& spec,
                                                   const SpanSpec& md_eps_values);

/// In the dual setting the augmented image is the plain image with the unit
/// adjoined, but only when d - k is even or k = 2; outside that case an
/// explicit augmented image is required and this throws.
SpanSpec md_eps_from_md(int k, int d, const SpanSpec& md_values);

/// Whether the unit-adjunction formula above applies.
bool md_eps_formula_covered(int k, int d);

} // namespace embcalc
