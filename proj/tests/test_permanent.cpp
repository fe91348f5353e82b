#include "doctest.h"

#include <cmath>
#include <random>

#include "losim/permanent.hpp"

using namespace losim;

namespace {

ComplexMatrix random_complex(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0; };
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = cplx(uniform(), uniform());
    return a;
}

ComplexMatrix ones(std::size_t n) {
    ComplexMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = 1.0;
    return a;
}

} // namespace

TEST_CASE("permanent: closed-form small cases") {
    ComplexMatrix one(1, 1);
    one(0, 0) = cplx(0.3, -0.8);
    CHECK(std::abs(permanent_ryser(one) - cplx(0.3, -0.8)) < 1e-15);

    CHECK(std::abs(permanent_ryser(ones(2)) - cplx(2.0, 0.0)) < 1e-15);
    CHECK(std::abs(permanent_naive(ComplexMatrix::identity(3)) - cplx(1.0, 0.0)) < 1e-15);

    ComplexMatrix m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 2.0;
    m(1, 0) = 3.0;
    m(1, 1) = 4.0;
    CHECK(std::abs(permanent_naive(m) - cplx(10.0, 0.0)) < 1e-15); // 1·4 + 2·3

    CHECK(std::abs(permanent_naive(ones(4)) - cplx(24.0, 0.0)) < 1e-12); // 4!
    CHECK(std::abs(permanent_ryser(ones(4)) - cplx(24.0, 0.0)) < 1e-12);

    CHECK(permanent_ryser(ComplexMatrix(0, 0)) == cplx(1.0, 0.0));
    CHECK(permanent_naive(ComplexMatrix(0, 0)) == cplx(1.0, 0.0));
}

TEST_CASE("permanent: Ryser agrees with the permutation sum up to n = 8") {
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::uint64_t trial = 0; trial < 4; ++trial) {
            const ComplexMatrix a = random_complex(n, 1000 * n + trial);
            const cplx expected = permanent_naive(a);
            const cplx got = permanent_ryser(a);
            CHECK(std::abs(got - expected) <= 1e-10 * (1.0 + std::abs(expected)));
        }
    }
}

TEST_CASE("permanent: invariant under row and column permutations") {
    const ComplexMatrix a = random_complex(6, 17);
    const cplx base = permanent_ryser(a);

    std::mt19937_64 rng(5);
    std::vector<std::size_t> rperm{3, 0, 5, 1, 4, 2};
    std::vector<std::size_t> cperm{2, 4, 0, 5, 3, 1};
    ComplexMatrix shuffled(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) shuffled(i, j) = a(rperm[i], cperm[j]);

    CHECK(std::abs(permanent_ryser(shuffled) - base) < 1e-10 * (1.0 + std::abs(base)));
    CHECK(std::abs(permanent_naive(shuffled) - permanent_naive(a)) <
          1e-10 * (1.0 + std::abs(base)));
}

TEST_CASE("permanent: multilinear in each row") {
    const ComplexMatrix a = random_complex(5, 23);
    const cplx c(0.7, -1.3);
    ComplexMatrix scaled = a;
    for (std::size_t j = 0; j < 5; ++j) scaled(2, j) *= c;
    const cplx lhs = permanent_ryser(scaled);
    const cplx rhs = c * permanent_ryser(a);
    CHECK(std::abs(lhs - rhs) < 1e-12 * (1.0 + std::abs(rhs)));
}

TEST_CASE("permanent: value independent of chunking and threads") {
    const ComplexMatrix a = random_complex(12, 31);
    const cplx c1 = permanent_ryser(a, 1, 1);
    const cplx c7 = permanent_ryser(a, 2, 7);
    const cplx c64 = permanent_ryser(a, 4, 64);
    CHECK(std::abs(c7 - c1) <= 1e-12 * (1.0 + std::abs(c1)));
    CHECK(std::abs(c64 - c1) <= 1e-12 * (1.0 + std::abs(c1)));

    // Same chunk count, different thread counts: bitwise identical.
    const cplx t1 = permanent_ryser(a, 1, 16);
    const cplx t4 = permanent_ryser(a, 4, 16);
    CHECK(t1.real() == t4.real());
    CHECK(t1.imag() == t4.imag());
}

TEST_CASE("permanent: size guards") {
    CHECK_THROWS_AS(permanent_ryser(ComplexMatrix(2, 3)), validation_error);
    CHECK_THROWS_AS(permanent_naive(ComplexMatrix(3, 2)), validation_error);
    CHECK_THROWS_AS(permanent_ryser(ComplexMatrix(31, 31)), numerical_error);
    CHECK_THROWS_AS(permanent_naive(ComplexMatrix(10, 10)), numerical_error);
}
