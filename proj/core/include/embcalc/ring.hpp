#pragma once

#include "embcalc/group.hpp"
#include "embcalc/int.hpp"

#include <map>
#include <string>

namespace embcalc {

/// Finite integer formal sum of group elements: an element of the integral
/// group ring. Zero coefficients are never stored.
class RingElement {
public:
    RingElement() = default;

    static RingElement term(const GroupElement& g, Int coefficient);
    static RingElement unit(); // 1 * identity

    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }
    Int coefficient(const GroupElement& g) const;

    void add_term(const GroupElement& g, const Int& c);

    const std::map<GroupElement, Int>& terms() const { return terms_; }

    RingElement& operator+=(const RingElement& other);
    RingElement& operator-=(const RingElement& other);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    RingElement operator-() const;
    friend RingElement operator*(const Int& c, const RingElement& x);

    bool operator==(const RingElement& other) const = default;

private:
    std::map<GroupElement, Int> terms_;
};

RingElement ring_add(const RingElement& x, const RingElement& y);

/// Sum c_g * g  |->  Sum (sign * c_g) * g^-1, with sign in {+1, -1}.
RingElement ring_involution(const GroupSpec& spec, const RingElement& x, int sign);

std::string format_ring_element(const GroupSpec& spec, const RingElement& x);

} // namespace embcalc
