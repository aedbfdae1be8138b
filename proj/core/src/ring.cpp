#include "embcalc/ring.hpp"

#include <stdexcept>

namespace embcalc {

RingElement RingElement::term(const GroupElement& g, Int coefficient) {
    RingElement x;
    x.add_term(g, coefficient);
    return x;
}

RingElement RingElement::unit() { return term(GroupElement{}, 1); }

Int RingElement::coefficient(const GroupElement& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? Int(0) : it->second;
}

void RingElement::add_term(const GroupElement& g, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

RingElement& RingElement::operator+=(const RingElement& other) {
    for (const auto& [g, c] : other.terms_) add_term(g, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
    for (const auto& [g, c] : other.terms_) add_term(g, -c);
    return *this;
}

RingElement RingElement::operator-() const {
    RingElement out;
    for (const auto& [g, c] : terms_) out.terms_.emplace(g, -c);
    return out;
}

RingElement operator*(const Int& c, const RingElement& x) {
    RingElement out;
    if (c == 0) return out;
    for (const auto& [g, cg] : x.terms_) out.terms_.emplace(g, c * cg);
    return out;
}

RingElement ring_add(const RingElement& x, const RingElement& y) { return x + y; }

RingElement ring_involution(const GroupSpec& spec, const RingElement& x, int sign) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("ring_involution: sign must be +1 or -1");
    RingElement out;
    for (const auto& [g, c] : x.terms())
        out.add_term(spec.invert(g), sign > 0 ? c : -c);
    return out;
}

std::string format_ring_element(const GroupSpec& spec, const RingElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [g, c] : x.terms()) {
        const bool neg = c < 0;
        Int a = neg ? Int(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (spec.is_identity(g)) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += spec.format(g);
        }
    }
    return out;
}

} // namespace embcalc
