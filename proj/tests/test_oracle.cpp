#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matnorm/norms.hpp"
#include "matnorm/oracle.hpp"
#include "test_support.hpp"

using namespace matnorm;
using testsupport::close_rel;

TEST_CASE("sample_unit_sphere lands on the sphere") {
    SplitMix64 rng(101);
    for (NormIndex p : {NormIndex::One, NormIndex::Two, NormIndex::Infinity}) {
        for (std::size_t n = 1; n <= 8; ++n) {
            for (int rep = 0; rep < 20; ++rep) {
                const Vector x = sample_unit_sphere(n, p, rng);
                CHECK(x.size() == n);
                CHECK(vec_norm(x, p) == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
        // 1-D: the only unit vectors are +-1
        const Vector one = sample_unit_sphere(1, p, rng);
        CHECK(std::abs(one[0]) == 1.0);
    }
}

TEST_CASE("sampling is deterministic for a fixed seed") {
    for (NormIndex p : {NormIndex::One, NormIndex::Two, NormIndex::Infinity}) {
        SplitMix64 a(7), b(7);
        CHECK(sample_unit_sphere(6, p, a) == sample_unit_sphere(6, p, b));
    }
}

TEST_CASE("lower_bound_estimate on pinned cases") {
    SplitMix64 rng(103);
    auto r = lower_bound_estimate(Matrix(2, 2), {NormIndex::Two, NormIndex::Two}, 50, rng);
    CHECK(r.lower_bound == 0.0);
    CHECK_FALSE(r.exact);

    r = lower_bound_estimate(Matrix::identity(2), {NormIndex::Two, NormIndex::Two}, 10, rng);
    CHECK(r.lower_bound == doctest::Approx(1.0).epsilon(1e-12));

    const auto oracle = testsupport::quadratic_eigs(10, 14, 20);
    const double exact22 = std::sqrt(oracle.max);
    r = lower_bound_estimate(Matrix{{1, 2}, {3, 4}}, {NormIndex::Two, NormIndex::Two}, 10000,
                             rng);
    CHECK(r.lower_bound >= 5.4649);
    CHECK(r.lower_bound <= exact22 + 1e-9 * exact22);
}

TEST_CASE("oracle reports satisfy their own invariants") {
    SplitMix64 rng(107);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 5;
        const std::size_t n = 1 + rng.next_u64() % 5;
        const Matrix a = testsupport::random_matrix(rng, m, n);
        for (const NormPair pair : all_norm_pairs()) {
            const OracleReport r = lower_bound_estimate(a, pair, 200, rng);
            CHECK(vec_norm(r.best_point, pair.p) == doctest::Approx(1.0).epsilon(1e-9));
            const double at_point = vec_norm(matvec(a, r.best_point), pair.q);
            CHECK(close_rel(r.lower_bound, at_point, 1e-12));
            CHECK(r.samples_used == 200);
        }
    }
}

TEST_CASE("soundness: the sampler never beats the closed form") {
    SplitMix64 rng(109);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 6;
        const std::size_t n = 1 + rng.next_u64() % 6;
        const Matrix a = testsupport::random_matrix(rng, m, n);
        for (const NormPair pair : all_norm_pairs()) {
            const double value = induced_norm(a, pair).value;
            const OracleReport r = lower_bound_estimate(a, pair, 500, rng);
            CHECK(r.lower_bound <= value + 1e-9 * std::max(1.0, value));
        }
    }
}

TEST_CASE("lower bound is nondecreasing in the sample count") {
    SplitMix64 seed_gen(113);
    const Matrix a = testsupport::random_matrix(seed_gen, 4, 4);
    for (const NormPair pair : all_norm_pairs()) {
        double prev = -1.0;
        for (std::uint64_t samples : {1ull, 10ull, 100ull, 1000ull, 5000ull}) {
            SplitMix64 rng(999);  // fresh stream, same seed: prefix property
            const OracleReport r = lower_bound_estimate(a, pair, samples, rng);
            CHECK(r.lower_bound >= prev);
            prev = r.lower_bound;
        }
    }
}

TEST_CASE("identical seeds give identical reports") {
    SplitMix64 gen(127);
    const Matrix a = testsupport::random_matrix(gen, 5, 5);
    for (const NormPair pair : all_norm_pairs()) {
        SplitMix64 r1(42), r2(42);
        const OracleReport a1 = lower_bound_estimate(a, pair, 300, r1);
        const OracleReport a2 = lower_bound_estimate(a, pair, 300, r2);
        CHECK(a1.lower_bound == a2.lower_bound);
        CHECK(a1.best_point == a2.best_point);
    }
}

TEST_CASE("exact_extreme_oracle on pinned cases") {
    const Matrix a{{1, 2}, {3, 4}};
    auto r = exact_extreme_oracle(a, {NormIndex::One, NormIndex::One});
    CHECK(r.lower_bound == 6.0);
    CHECK(r.best_point == Vector{0, 1});
    CHECK(r.exact);
    CHECK(r.samples_used == 4);

    r = exact_extreme_oracle(a, {NormIndex::Infinity, NormIndex::One});
    CHECK(r.lower_bound == 10.0);
    CHECK(r.best_point == Vector{1, 1});
    CHECK(r.samples_used == 4);

    r = exact_extreme_oracle(Matrix::identity(3), {NormIndex::Infinity, NormIndex::Two});
    CHECK(close_rel(r.lower_bound, std::sqrt(3.0), 1e-15));
}

TEST_CASE("exact oracle equals the closed forms for p in {1, inf}") {
    SplitMix64 rng(131);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t m = 1 + rng.next_u64() % 10;
        const std::size_t n = 1 + rng.next_u64() % 10;
        const Matrix a = testsupport::random_matrix(rng, m, n);
        for (NormIndex p : {NormIndex::One, NormIndex::Infinity}) {
            for (NormIndex q : {NormIndex::One, NormIndex::Two, NormIndex::Infinity}) {
                const double closed = induced_norm(a, {p, q}).value;
                const double exact = exact_extreme_oracle(a, {p, q}).lower_bound;
                CHECK(close_rel(closed, exact, 1e-12));
            }
        }
    }
}

TEST_CASE("exact oracle refusals") {
    const Matrix a{{1, 2}, {3, 4}};
    CHECK_THROWS_AS(exact_extreme_oracle(a, {NormIndex::Two, NormIndex::Two}),
                    std::invalid_argument);
    const Matrix wide(1, 21, std::vector<double>(21, 1.0));
    CHECK_THROWS_AS(exact_extreme_oracle(wide, {NormIndex::Infinity, NormIndex::One}),
                    guard_error);
}
