#include "embcalc/group.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace embcalc;

namespace {

GroupElement random_word(const GroupSpec& spec, std::mt19937_64& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> letter(0, spec.rank() - 1);
    std::uniform_int_distribution<int> exp(-2, 2);
    std::vector<Syllable> w;
    int l = len(rng);
    for (int i = 0; i < l; ++i) {
        int e = exp(rng);
        if (e != 0) w.emplace_back(letter(rng), e);
    }
    return spec.word_element(w);
}

} // namespace

TEST_CASE("free group multiplication and inversion") {
    GroupSpec f2 = GroupSpec::free_group(2);
    GroupElement a = f2.word_element({{0, 1}});
    GroupElement b = f2.word_element({{1, 1}});
    GroupElement a_inv = f2.invert(a);

    CHECK(f2.multiply(a, a_inv) == f2.identity());

    // (a b)(b^-1 a) = a^2
    GroupElement ab = f2.multiply(a, b);
    GroupElement binv_a = f2.multiply(f2.invert(b), a);
    CHECK(f2.multiply(ab, binv_a) == f2.word_element({{0, 2}}));

    // (a b^-1)^-1 = b a^-1
    GroupElement abinv = f2.multiply(a, f2.invert(b));
    CHECK(f2.invert(abinv) == f2.multiply(b, a_inv));

    CHECK(f2.invert(f2.identity()) == f2.identity());
    CHECK(f2.format(abinv) == "a.b^-1");
}

TEST_CASE("word reduction is confluent and idempotent") {
    std::vector<Syllable> raw = {{0, 2}, {0, -2}, {1, 1}, {1, 2}, {0, 0}, {1, -3}, {0, 1}};
    auto once = reduce_word(raw);
    CHECK(once == reduce_word(once));
    CHECK(once == std::vector<Syllable>{{0, 1}});

    std::mt19937_64 rng(7);
    GroupSpec f3 = GroupSpec::free_group(3);
    for (int i = 0; i < 500; ++i) {
        GroupElement w = random_word(f3, rng, 12);
        CHECK(reduce_word(w.word) == w.word);
    }
}

TEST_CASE("cyclic table agrees with modular addition") {
    GroupSpec z3 = GroupSpec::cyclic(3);
    // Brute-force check of the loaded table.
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(z3.multiply(z3.element(i), z3.element(j)).index == (i + j) % 3);
    CHECK(z3.multiply(z3.element(1), z3.element(2)) == z3.identity());
}

TEST_CASE("quaternion inverses found by table enumeration") {
    GroupSpec q8 = GroupSpec::quaternion();
    GroupElement i = q8.element(1);
    // i^3 is the table inverse of i.
    GroupElement i3 = q8.multiply(q8.multiply(i, i), i);
    std::size_t inv_index = q8.order();
    for (std::size_t j = 0; j < q8.order(); ++j)
        if (q8.multiply(i, q8.element(j)) == q8.identity()) inv_index = j;
    CHECK(q8.invert(i).index == inv_index);
    CHECK(q8.invert(i) == i3);
    CHECK(q8.element_order(i) == 4);
    CHECK(q8.element_order(q8.element(4)) == 2); // the central element
}

TEST_CASE("group axioms hold exhaustively on the built-in finite groups") {
    std::vector<GroupSpec> groups;
    for (std::size_t n = 1; n <= 16; ++n) groups.push_back(GroupSpec::cyclic(n));
    for (std::size_t n = 1; n <= 8; ++n) groups.push_back(GroupSpec::dihedral(n));
    groups.push_back(GroupSpec::quaternion());
    groups.push_back(GroupSpec::klein_four());
    groups.push_back(GroupSpec::elementary_abelian_2(3));
    groups.push_back(GroupSpec::elementary_abelian_2(4));

    for (const GroupSpec& g : groups) {
        for (std::size_t i = 0; i < g.order(); ++i) {
            GroupElement e = g.element(i);
            CHECK(g.multiply(e, g.invert(e)) == g.identity());
            CHECK(g.multiply(g.invert(e), e) == g.identity());
            for (std::size_t j = 0; j < g.order(); ++j)
                for (std::size_t k = 0; k < g.order(); ++k) {
                    GroupElement x = g.element(j), y = g.element(k);
                    CHECK(g.multiply(g.multiply(e, x), y) == g.multiply(e, g.multiply(x, y)));
                }
        }
    }
}

TEST_CASE("free-group laws on random words") {
    GroupSpec f2 = GroupSpec::free_group(2);
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        GroupElement g = random_word(f2, rng, 12);
        GroupElement h = random_word(f2, rng, 12);
        GroupElement k = random_word(f2, rng, 12);
        CHECK(f2.multiply(f2.multiply(g, h), k) == f2.multiply(g, f2.multiply(h, k)));
        CHECK(f2.multiply(g, f2.invert(g)) == f2.identity());
        CHECK(f2.invert(f2.invert(g)) == g);
    }
}

TEST_CASE("shortlex order on free words") {
    GroupSpec f2 = GroupSpec::free_group(2);
    GroupElement e = f2.identity();
    GroupElement a = f2.word_element({{0, 1}});
    GroupElement a_inv = f2.word_element({{0, -1}});
    GroupElement b = f2.word_element({{1, 1}});
    GroupElement b_inv = f2.word_element({{1, -1}});
    GroupElement aa = f2.word_element({{0, 2}});

    CHECK(e < a);
    CHECK(a < a_inv);
    CHECK(a_inv < b);
    CHECK(b < b_inv);
    CHECK(b_inv < aa); // length beats alphabet
    CHECK_FALSE(a < a);
}

TEST_CASE("malformed tables are rejected with the failing data") {
    // Identity row/column fine, but the element g1 never multiplies to 1.
    std::vector<std::size_t> t = {0, 1, 2, 1, 2, 1, 2, 0, 1};
    CHECK_THROWS_WITH_AS(GroupSpec::finite(3, t), doctest::Contains("no inverse"),
                         std::invalid_argument);

    // Latin square that is not associative: keep inverses but break
    // associativity. The 5-element loop below is a standard example.
    std::vector<std::size_t> loop = {
        0, 1, 2, 3, 4,
        1, 0, 3, 4, 2,
        2, 4, 0, 1, 3,
        3, 2, 4, 0, 1,
        4, 3, 1, 2, 0,
    };
    CHECK_THROWS_WITH_AS(GroupSpec::finite(5, loop), doctest::Contains("not associative"),
                         std::invalid_argument);

    CHECK_THROWS_AS(GroupSpec::finite(2, {0, 1, 1, 2}), std::invalid_argument); // out of range
}

TEST_CASE("element validation catches malformed input") {
    GroupSpec z4 = GroupSpec::cyclic(4);
    CHECK_THROWS_AS(z4.element(4), std::invalid_argument);
    GroupSpec f1 = GroupSpec::free_group(1);
    CHECK_THROWS_AS(f1.word_element({{1, 1}}), std::invalid_argument);
    GroupElement bad;
    bad.word = {{0, 1}, {0, 1}}; // adjacent equal letters
    CHECK_THROWS_AS(f1.validate_element(bad), std::invalid_argument);
}
