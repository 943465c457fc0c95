#include "support/oracles.hpp"
#include "support/samples.hpp"

#include "vbs/modular.hpp"
#include "vbs/rng.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace vbs;

TEST_CASE("residues and inverses") {
    CHECK(mod<std::int64_t>(-7, 5) == 3);
    CHECK(mod<std::int64_t>(10, 5) == 0);
    CHECK(inverse_mod<std::int64_t>(2, 5) == 3);
    CHECK(inverse_mod<std::int64_t>(4, 6) == 0);
    CHECK(inverse_mod<std::int64_t>(-1, 7) == 6);
    CHECK(is_prime(5));
    CHECK_FALSE(is_prime(6));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("rank over a prime field") {
    IntMatrix m(3, 3);
    m << 1, 2, 3, 2, 4, 6, 0, 1, 1;
    CHECK(rank_mod_prime(m, std::int64_t{5}) == 2);
    CHECK(rank_mod_prime(IntMatrix::Identity(4, 4), std::int64_t{2}) == 4);
}

TEST_CASE("invariant factors") {
    CHECK(invariant_factors({2, 3}) == std::vector<std::int64_t>{6});
    CHECK(invariant_factors({2, 4, 2}) == std::vector<std::int64_t>{2, 2, 4});
    CHECK(invariant_factors({1, 5, 5}) == std::vector<std::int64_t>{5, 5});
    CHECK(invariant_factors({}).empty());
}

TEST_CASE("kernel descriptors") {
    IntMatrix m(1, 1);
    m << 2;
    const ModuleDescriptor d = solution_count(m, std::int64_t{4});
    CHECK(d.count == 2);
    CHECK(d.factors == std::vector<std::int64_t>{2});

    IntMatrix z = IntMatrix::Zero(2, 3);
    const ModuleDescriptor free = solution_count(z, std::int64_t{6});
    CHECK(free.count == 216);
    CHECK(free.factors == std::vector<std::int64_t>{6, 6, 6});

    IntMatrix e(2, 2);
    e << 3, 0, 0, 2;
    const ModuleDescriptor mixed = solution_count(e, std::int64_t{6});
    CHECK(mixed.count == 6);
    CHECK(mixed.factors == std::vector<std::int64_t>{6});
    CHECK(kernel_size(e, std::int64_t{6}) == 6);
}

TEST_CASE("overflow is detected") {
    CHECK_THROWS_AS(checked_multiply(UINT64_MAX / 2, 3), std::overflow_error);
    CHECK(checked_multiply(1ULL << 31, 1ULL << 31) == 1ULL << 62);
}

TEST_CASE("kernel counts agree with brute force") {
    Rng rng(2024);
    for (int i = 0; i < 100; ++i) {
        const auto [m, q] = samples::random_kernel_case(rng);
        CAPTURE(m);
        CAPTURE(q);
        const std::uint64_t expected = oracle::kernel_count(m, q);
        CHECK(solution_count(m, q).count == expected);
        CHECK(kernel_size(m, q) == expected);
        std::uint64_t product = 1;
        for (auto f : solution_count(m, q).factors) product *= static_cast<std::uint64_t>(f);
        CHECK(product == expected);
    }
}

TEST_CASE("rng is reproducible and bounded") {
    Rng a(7), b(7), c(8);
    bool differs = false;
    for (int i = 0; i < 100; ++i) {
        const auto x = a.below(10);
        CHECK(x < 10);
        CHECK(x == b.below(10));
        differs |= x != c.below(10);
    }
    CHECK(differs);
    std::vector<int> v{0, 1, 2, 3, 4, 5};
    Rng s(1);
    s.shuffle(v);
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<int>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("small kernels") {
    CHECK(solution_count(IntMatrix::Zero(2, 3), std::int64_t{5}).count == 125);
    IntMatrix m(2, 2);
    m << 2, 4, 1, 2;
    CHECK(solution_count(m, std::int64_t{6}).count == oracle::kernel_count(m, 6));
}
