#include "doctest.h"

#include <cmath>

#include "losim/fock.hpp"
#include "losim/permanent.hpp"

using namespace losim;

TEST_CASE("enumerate_configs: base cases") {
    const auto zero = enumerate_configs(0, 3);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0] == OccupationConfig({0, 0, 0}));

    const auto two = enumerate_configs(2, 2);
    REQUIRE(two.size() == 3);
    CHECK(two[0] == OccupationConfig({0, 2}));
    CHECK(two[1] == OccupationConfig({1, 1}));
    CHECK(two[2] == OccupationConfig({2, 0}));

    CHECK(enumerate_configs(3, 4).size() == 20);
}

TEST_CASE("enumerate_configs: totals and strict lex order") {
    for (int n = 0; n <= 6; ++n) {
        for (std::size_t m = 1; m <= 10; m += 3) {
            const auto configs = enumerate_configs(n, m);
            CHECK(configs.size() == config_count(n, m));
            for (std::size_t i = 0; i < configs.size(); ++i) {
                CHECK(configs[i].total() == n);
                if (i > 0) CHECK(configs[i - 1] < configs[i]);
            }
        }
    }
}

TEST_CASE("config_count: formula values and enumeration agreement") {
    for (std::size_t m = 1; m <= 6; ++m) CHECK(config_count(1, m) == m);
    CHECK(config_count(3, 4) == 20);
    CHECK(config_count(5, 25) == enumerate_configs(5, 25).size());
}

TEST_CASE("config_count: overflow and argument guards") {
    CHECK_THROWS_AS(config_count(200, 300), numerical_error);
    CHECK_THROWS_AS(config_count(2, 0), validation_error);
    CHECK_THROWS_AS(enumerate_configs(2, 0), validation_error);
    CHECK_THROWS_AS(enumerate_configs(-1, 2), validation_error);
}

TEST_CASE("submatrix: identity-like cases") {
    const UnitaryMatrix u = haar_random_unitary(2, 11);

    const auto both = submatrix(u, OccupationConfig({1, 1}), OccupationConfig({1, 1}));
    REQUIRE(both.rows() == 2);
    CHECK(both(0, 0) == u(0, 0));
    CHECK(both(1, 1) == u(1, 1));

    const auto bunched = submatrix(u, OccupationConfig({1, 1}), OccupationConfig({2, 0}));
    REQUIRE(bunched.rows() == 2);
    CHECK(bunched(0, 0) == u(0, 0));
    CHECK(bunched(0, 1) == u(0, 0));
    CHECK(bunched(1, 0) == u(1, 0));
    CHECK(bunched(1, 1) == u(1, 0));
}

TEST_CASE("submatrix: photon number mismatch rejected") {
    const UnitaryMatrix u = haar_random_unitary(2, 11);
    CHECK_THROWS_AS(submatrix(u, OccupationConfig({1, 1}), OccupationConfig({1, 0})),
                    validation_error);
    CHECK_THROWS_AS(submatrix(u, OccupationConfig({1}), OccupationConfig({1, 0})),
                    validation_error);
}

TEST_CASE("submatrix: permanents tie the two index conventions together") {
    // Per(M(U, T, S)) equals Per(M(Uᵀ, S, T)ᵀ); with Per(Aᵀ) = Per(A) this
    // pins down that swapping row/column roles is a pure transpose.
    const UnitaryMatrix u = haar_random_unitary(3, 4);
    const OccupationConfig t({1, 0, 1});
    const OccupationConfig s({0, 1, 1});

    const ComplexMatrix m1 = submatrix(u, t, s);
    const UnitaryMatrix ut(u.matrix().transposed());
    const ComplexMatrix m2 = submatrix(ut, s, t);

    const cplx p1 = permanent_ryser(m1);
    const cplx p2 = permanent_ryser(m2);
    const cplx p2t = permanent_ryser(m2.transposed());
    CHECK(std::abs(p1 - p2) < 1e-12);
    CHECK(std::abs(p1 - p2t) < 1e-12);
}
