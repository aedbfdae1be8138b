#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace embcalc {

enum class GroupKind { Finite, Free };

/// One syllable of a reduced free-group word: (letter index, nonzero exponent).
using Syllable = std::pair<std::size_t, long long>;

/// Element of a finite group (table index) or of a free group (reduced word).
/// For finite groups `word` is empty; for free groups `index` is zero. The
/// comparison below is the canonical element order: table index for finite
/// groups, shortlex with a < a^-1 < b < b^-1 < ... for free words.
struct GroupElement {
    std::size_t index = 0;
    std::vector<Syllable> word;

    bool operator==(const GroupElement& other) const = default;
    bool operator<(const GroupElement& other) const;

    std::size_t word_length() const;
};

/// A group with decidable equality: either a finite group given by its full
/// multiplication table, or a finitely generated free group on named letters.
/// Values are immutable after construction.
class GroupSpec {
public:
    static GroupSpec finite(std::size_t order, std::vector<std::size_t> table,
                            std::vector<std::string> labels = {});
    static GroupSpec trivial();
    static GroupSpec cyclic(std::size_t n);
    /// Dihedral group of order 2n (n >= 1).
    static GroupSpec dihedral(std::size_t n);
    /// Quaternion group of order 8.
    static GroupSpec quaternion();
    /// Klein four-group.
    static GroupSpec klein_four();
    /// Elementary abelian 2-group (Z/2)^k.
    static GroupSpec elementary_abelian_2(std::size_t k);
    static GroupSpec free_group(std::size_t rank, std::vector<std::string> letters = {});

    GroupKind kind() const { return kind_; }
    bool is_finite() const { return kind_ == GroupKind::Finite; }
    bool is_trivial() const;

    std::size_t order() const;       // finite only
    std::size_t rank() const;        // free only

    GroupElement identity() const;
    bool is_identity(const GroupElement& g) const;

    GroupElement element(std::size_t index) const;            // finite only
    GroupElement word_element(std::vector<Syllable> word) const; // free only; reduces

    /// All elements in canonical order (finite only).
    std::vector<GroupElement> elements() const;

    const std::string& label(std::size_t index) const { return labels_[index]; }
    const std::vector<std::string>& letters() const { return letters_; }

    std::string format(const GroupElement& g) const;

    GroupElement multiply(const GroupElement& g, const GroupElement& h) const;
    GroupElement invert(const GroupElement& g) const;

    /// Order of g in a finite group.
    std::size_t element_order(const GroupElement& g) const;

    void validate_element(const GroupElement& g) const;

private:
    GroupSpec() = default;
    void check_axioms();

    GroupKind kind_ = GroupKind::Finite;
    std::size_t order_ = 1;
    std::vector<std::size_t> table_;   // row-major order_ x order_
    std::vector<std::size_t> inverse_;
    std::vector<std::string> labels_;
    std::size_t rank_ = 0;
    std::vector<std::string> letters_;
};

GroupElement group_multiply(const GroupSpec& spec, const GroupElement& g, const GroupElement& h);
GroupElement group_invert(const GroupSpec& spec, const GroupElement& g);
bool is_self_inverse(const GroupSpec& spec, const GroupElement& g);

/// Reduce a raw syllable string (merge adjacent equal letters, drop zero
/// exponents). Idempotent.
std::vector<Syllable> reduce_word(const std::vector<Syllable>& raw);

} // namespace embcalc
