#include "embcalc/abelian.hpp"

#include <doctest.h>

#include <stdexcept>

#include <random>

using namespace embcalc;

namespace {

IntMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound = 6) {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = dist(rng);
    return m;
}

void check_snf_contract(const IntMatrix& a) {
    SmithResult s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    Int du = s.u.determinant();
    Int dv = s.v.determinant();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // Diagonal, nonnegative, divisibility chain, zeros trailing.
    auto diag = s.diagonal();
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j) CHECK(s.d.at(i, j) == 0);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        CHECK(diag[i] >= 0);
        if (i + 1 < diag.size()) {
            if (diag[i] == 0) CHECK(diag[i + 1] == 0);
            if (diag[i] != 0 && diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
        }
    }
}

} // namespace

TEST_CASE("smith normal form of the worked examples") {
    // diag(2,3) has invariant factors 1, 6.
    IntMatrix a(2, 2, {2, 0, 0, 3});
    SmithResult s = smith_normal_form(a);
    CHECK(s.diagonal() == std::vector<Int>{1, 6});
    CHECK(s.u * a * s.v == s.d);

    IntMatrix zero(3, 2);
    SmithResult z = smith_normal_form(zero);
    CHECK(z.d == IntMatrix(3, 2));

    IntMatrix id = IntMatrix::identity(4);
    SmithResult i = smith_normal_form(id);
    CHECK(i.d == id);
}

TEST_CASE("smith normal form preserves |det| and the full contract") {
    std::mt19937_64 rng(101);
    for (int iter = 0; iter < 60; ++iter) {
        std::uniform_int_distribution<std::size_t> dim(1, 6);
        std::size_t r = dim(rng), c = dim(rng);
        IntMatrix a = random_matrix(r, c, rng);
        check_snf_contract(a);
        if (r == c) {
            SmithResult s = smith_normal_form(a);
            Int prod = 1;
            for (const Int& d : s.diagonal()) prod *= d;
            Int det = a.determinant();
            CHECK(abs(det) == abs(prod));
        }
    }
}

TEST_CASE("quotient presentations") {
    CHECK(quotient_presentation(1, IntMatrix(1, 1, {2})) ==
          AbelianGroup{0, {2}}); // Z/2
    CHECK(quotient_presentation(2, IntMatrix(0, 2)) == AbelianGroup{2, {}});
    CHECK(quotient_presentation(2, IntMatrix(2, 2, {2, 0, 0, 2})) == AbelianGroup{0, {2, 2}});
    // Unit factors are dropped: Z^2 / <(1,0)> = Z.
    CHECK(quotient_presentation(2, IntMatrix(1, 2, {1, 0})) == AbelianGroup{1, {}});
}

TEST_CASE("quotient is invariant under row operations and permutations") {
    std::mt19937_64 rng(202);
    for (int iter = 0; iter < 40; ++iter) {
        IntMatrix a = random_matrix(4, 3, rng);
        AbelianGroup base = quotient_presentation(3, a);

        IntMatrix b = a;
        std::uniform_int_distribution<std::size_t> row(0, 3);
        std::uniform_int_distribution<long long> q(-3, 3);
        for (int ops = 0; ops < 6; ++ops) {
            std::size_t i = row(rng), j = row(rng);
            if (i != j) b.add_row(i, j, Int(q(rng)));
            b.swap_rows(row(rng), row(rng));
        }
        CHECK(quotient_presentation(3, b) == base);
    }
}

TEST_CASE("element order in a presented group") {
    // v = 0 has order 1.
    CHECK(element_order(2, IntMatrix(1, 2, {4, 0}), {0, 0}) == Int(1));
    // Z/4 generator.
    CHECK(element_order(1, IntMatrix(1, 1, {4}), {1}) == Int(4));
    // Z with no relations: infinite.
    CHECK_FALSE(element_order(1, IntMatrix(0, 1), {1}).has_value());
    // Mixed: order of (1,1) in Z/4 x Z/6 is lcm(4,6) = 12.
    CHECK(element_order(2, IntMatrix(2, 2, {4, 0, 0, 6}), {1, 1}) == Int(12));
    CHECK_THROWS_AS(element_order(2, IntMatrix(1, 2, {4, 0}), {1}), std::invalid_argument);
}

TEST_CASE("order of a multiple divides the order") {
    std::mt19937_64 rng(303);
    std::uniform_int_distribution<long long> mult(1, 6), entry(-4, 4);
    for (int iter = 0; iter < 60; ++iter) {
        IntMatrix rel = random_matrix(3, 3, rng);
        std::vector<Int> v = {entry(rng), entry(rng), entry(rng)};
        auto ord = element_order(3, rel, v);
        if (!ord) continue; // infinite-order classes are exempt
        Int m = mult(rng);
        std::vector<Int> mv = {m * v[0], m * v[1], m * v[2]};
        auto ord_m = element_order(3, rel, mv);
        REQUIRE(ord_m.has_value());
        CHECK(*ord % *ord_m == 0);
    }
}

TEST_CASE("lattice membership") {
    // Lattice spanned by (2,0) and (0,3).
    Lattice lat(2, IntMatrix(2, 2, {2, 0, 0, 3}));
    CHECK(lat.contains({4, 3}));
    CHECK(lat.contains({0, 0}));
    CHECK_FALSE(lat.contains({1, 0}));
    CHECK_FALSE(lat.contains({2, 1}));
    // Z/2 + Z/3 in invariant-factor form.
    CHECK(lat.quotient() == AbelianGroup{0, {6}});

    Lattice empty(2, IntMatrix(0, 2));
    CHECK(empty.contains({0, 0}));
    CHECK_FALSE(empty.contains({1, 0}));
}

TEST_CASE("abelian group formatting") {
    CHECK(AbelianGroup{}.str() == "0");
    CHECK(AbelianGroup{1, {}}.str() == "Z");
    CHECK(AbelianGroup{2, {}}.str() == "Z^2");
    CHECK(AbelianGroup{0, {2, 4}}.str() == "Z/2 ⊕ Z/4");
    CHECK(AbelianGroup{1, {2}}.str() == "Z ⊕ Z/2");
}
