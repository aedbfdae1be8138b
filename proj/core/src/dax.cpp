#include "embcalc/dax.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace embcalc {

ParityContext::ParityContext(int l, int d) : disk_dim(l), ambient_dim(d) {
    if (l < 1) throw std::invalid_argument("ParityContext: disk dimension must be >= 1");
    if (d < 1) throw std::invalid_argument("ParityContext: ambient dimension must be >= 1");
}

GroupElement pair_representative(const GroupSpec& spec, const GroupElement& g) {
    GroupElement inv = spec.invert(g);
    return inv < g ? inv : g;
}

RingElement canonical_form(const ParityContext& ctx, const GroupSpec& spec, const RingElement& x,
                           bool drop_identity) {
    RingElement out;
    const int sign = ctx.involution_sign();
    for (const auto& [g, c] : x.terms()) {
        spec.validate_element(g);
        if (drop_identity && spec.is_identity(g)) continue;
        if (ctx.relations_trivial()) {
            out.add_term(g, c);
            continue;
        }
        GroupElement inv = spec.invert(g);
        if (inv == g) {
            // Self-inverse: for sign = -1 the relation reads 2g = 0.
            if (sign == -1) {
                Int r = c % 2;
                if (r < 0) r += 2;
                out.add_term(g, r);
            } else {
                out.add_term(g, c);
            }
        } else if (inv < g) {
            out.add_term(inv, sign > 0 ? c : -c);
        } else {
            out.add_term(g, c);
        }
    }
    // Folded terms only ever land on non-self-inverse representatives, so a
    // single pass suffices and the map is idempotent.
    return out;
}

AbelianGroup relations_quotient_group(const ParityContext& ctx, const GroupSpec& spec,
                                      bool drop_identity) {
    if (!spec.is_finite())
        throw std::invalid_argument(
            "relations_quotient_group: group is infinite; use the lazy canonical-form path");
    AbelianGroup g;
    if (ctx.relations_trivial()) {
        g.free_rank = spec.order() - (drop_identity ? 1 : 0);
        return g;
    }
    const int sign = ctx.involution_sign();
    std::size_t pairs = 0, selfinv = 0;
    for (std::size_t i = 0; i < spec.order(); ++i) {
        if (drop_identity && i == 0) continue;
        GroupElement e = spec.element(i);
        GroupElement inv = spec.invert(e);
        if (inv == e) {
            ++selfinv;
        } else if (inv.index > i) {
            ++pairs;
        }
    }
    if (sign > 0) {
        g.free_rank = pairs + selfinv;
    } else {
        g.free_rank = pairs;
        g.torsion.assign(selfinv, Int(2));
    }
    return g;
}

DaxClass dax_of_trace(const ParityContext& ctx, const GroupSpec& spec, const Trace& trace,
                      bool drop_identity) {
    RingElement sum;
    for (const TraceEvent& ev : trace) {
        if (ev.sign != 1 && ev.sign != -1)
            throw std::invalid_argument("trace event sign must be +1 or -1");
        spec.validate_element(ev.loop);
        sum.add_term(ev.loop, ev.sign);
    }
    return DaxClass{ctx, canonical_form(ctx, spec, sum, drop_identity), drop_identity};
}

namespace {

// Sorted union of the supports of the given ring elements.
std::vector<GroupElement> support_union(const std::vector<const RingElement*>& xs) {
    std::set<GroupElement> supp;
    for (const RingElement* x : xs)
        for (const auto& [g, c] : x->terms()) {
            (void)c;
            supp.insert(g);
        }
    return {supp.begin(), supp.end()};
}

std::vector<Int> coordinates(const RingElement& x, const std::vector<GroupElement>& basis) {
    std::vector<Int> v(basis.size(), Int(0));
    for (const auto& [g, c] : x.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), g);
        if (it == basis.end() || !(*it == g))
            throw std::logic_error("support element missing from basis");
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

} // namespace

SpanReducer::SpanReducer(const ParityContext& ctx, const GroupSpec& spec, SpanSpec generators,
                         bool drop_identity, bool relations_apply)
    : ctx_(ctx), spec_(spec), generators_(std::move(generators)), drop_identity_(drop_identity),
      relations_apply_(relations_apply) {
    for (RingElement& g : generators_.generators) g = normal(g);
}

RingElement SpanReducer::normal(const RingElement& x) const {
    if (!relations_apply_) {
        for (const auto& [g, c] : x.terms()) {
            (void)c;
            spec_.validate_element(g);
        }
        return x;
    }
    return canonical_form(ctx_, spec_, x, drop_identity_);
}

bool SpanReducer::is_zero(const RingElement& x) const {
    auto ord = class_order(x);
    return ord.has_value() && *ord == 1;
}

bool SpanReducer::equivalent(const RingElement& x, const RingElement& y) const {
    return is_zero(x - y);
}

std::optional<Int> SpanReducer::class_order(const RingElement& x) const {
    RingElement nx = normal(x);
    std::vector<const RingElement*> all;
    all.push_back(&nx);
    for (const RingElement& g : generators_.generators) all.push_back(&g);
    std::vector<GroupElement> basis = support_union(all);

    std::vector<std::vector<Int>> rows;
    for (const RingElement& g : generators_.generators)
        if (!g.is_zero()) rows.push_back(coordinates(g, basis));
    // In the odd-parity quotient, self-inverse elements carry 2g = 0; that
    // relation matters for every self-inverse element in play.
    if (relations_apply_ && !ctx_.relations_trivial() && ctx_.involution_sign() == -1) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (spec_.invert(basis[i]) == basis[i]) {
                std::vector<Int> r(basis.size(), Int(0));
                r[i] = 2;
                rows.push_back(std::move(r));
            }
        }
    }
    Lattice lat(basis.size(), IntMatrix::from_rows(rows, basis.size()));
    return lat.order_mod(coordinates(nx, basis));
}

std::variant<AbelianGroup, SpanReducer> md_image_quotient(const ParityContext& ctx,
                                                          const GroupSpec& spec,
                                                          const SpanSpec& md_values,
                                                          bool drop_identity) {
    if (!spec.is_finite())
        return SpanReducer(ctx, spec, md_values, drop_identity);

    // Basis: canonical representatives of the {g, g^-1} pairs (all elements
    // when l = 1), with the identity removed when flagged.
    std::vector<GroupElement> basis;
    for (std::size_t i = 0; i < spec.order(); ++i) {
        if (drop_identity && i == 0) continue;
        GroupElement e = spec.element(i);
        if (!ctx.relations_trivial() && spec.invert(e) < e) continue;
        basis.push_back(e);
    }
    std::sort(basis.begin(), basis.end());

    std::vector<std::vector<Int>> rows;
    if (!ctx.relations_trivial() && ctx.involution_sign() == -1) {
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (spec.invert(basis[i]) == basis[i]) {
                std::vector<Int> r(basis.size(), Int(0));
                r[i] = 2;
                rows.push_back(std::move(r));
            }
    }
    for (const RingElement& g : md_values.generators) {
        RingElement c = canonical_form(ctx, spec, g, drop_identity);
        if (c.is_zero()) continue;
        std::vector<Int> r(basis.size(), Int(0));
        for (const auto& [el, coeff] : c.terms()) {
            auto it = std::lower_bound(basis.begin(), basis.end(), el);
            if (it == basis.end() || !(*it == el))
                throw std::logic_error("canonical form left the representative basis");
            r[static_cast<std::size_t>(it - basis.begin())] = coeff;
        }
        rows.push_back(std::move(r));
    }
    return quotient_presentation(basis.size(), IntMatrix::from_rows(rows, basis.size()));
}

std::variant<Int, CountablyInfinite> framing_count(const ParityContext& ctx, const GroupSpec& spec,
                                                   const SpanSpec& md_eps_values) {
    if (!ctx.codim_parity_even())
        throw std::invalid_argument(
            "framing_count: requires d - l even; for odd d - l every family has Z many "
            "augmentations");
    SpanReducer red(ctx, spec, md_eps_values, /*drop_identity=*/false, /*relations_apply=*/false);
    auto ord = red.class_order(RingElement::unit());
    if (!ord) return CountablyInfinite{};
    return Int(2 * *ord);
}

bool md_eps_formula_covered(int k, int d) { return (d - k) % 2 == 0 || k == 2; }

SpanSpec md_eps_from_md(int k, int d, const SpanSpec& md_values) {
    if (!md_eps_formula_covered(k, d))
        throw std::invalid_argument(
            "md_eps_from_md: explicit augmented image required when d - k is odd and k >= 3");
    SpanSpec out = md_values;
    out.generators.push_back(RingElement::unit());
    return out;
}

} // namespace embcalc
