#include "doctest.h"

#include <stdexcept>

#include "sumsets/errors.hpp"
#include "sumsets/modular.hpp"
#include "test_util.hpp"

using namespace sumsets;
using sumsets::test::V;

TEST_CASE("ResidueSet validation") {
    CHECK_THROWS_AS(ResidueSet(4, {1}), std::invalid_argument);    // composite
    CHECK_THROWS_AS(ResidueSet(7, {1, 8}), std::invalid_argument); // 8 = 1 mod 7
    CHECK(ResidueSet(7, {9, -2}).elements() == V({2, 5})); // reduced and sorted
}

TEST_CASE("pair-sum-free predicate") {
    CHECK(is_pair_sum_free(ResidueSet(7, {1, 2, 3})));
    CHECK(!is_pair_sum_free(ResidueSet(7, {1, 6})));
    CHECK(!is_pair_sum_free(ResidueSet(5, {0})));
}

TEST_CASE("nonempty subset sums") {
    CHECK(nonempty_subset_sums(ResidueSet(7, {1, 2, 3})) == V({1, 2, 3, 4, 5, 6}));
    CHECK(nonempty_subset_sums(ResidueSet(5, {0})) == V({0}));
    CHECK(nonempty_subset_sums(ResidueSet(3, {1})) == V({1}));
    // wraps around the modulus
    CHECK(nonempty_subset_sums(ResidueSet(5, {3, 4})) == V({2, 3, 4}));
}

TEST_CASE("zero-sum-free predicate") {
    CHECK(is_zero_sum_free(ResidueSet(7, {1, 2, 3})));
    CHECK(!is_zero_sum_free(ResidueSet(7, {1, 2, 4})));
    CHECK(!is_zero_sum_free(ResidueSet(5, {0})));
}

TEST_CASE("balandraud reports") {
    BoundReport r = check_balandraud(ResidueSet(7, {1, 2, 3}));
    CHECK(r.bound == 6);
    CHECK(r.actual == 6);
    CHECK(r.equality);
    CHECK(r.applicable);

    r = check_balandraud(ResidueSet(5, {1}));
    CHECK(r.bound == 1);
    CHECK(r.actual == 1);

    r = check_balandraud(ResidueSet(11, {1, 2}));
    CHECK(r.bound == 3);
    CHECK(r.actual == 3);

    // not pair-sum-free: bound reported but not asserted
    r = check_balandraud(ResidueSet(7, {1, 6}));
    CHECK(!r.applicable);
}

TEST_CASE("erdos_selfridge_max") {
    CHECK(erdos_selfridge_max(7) == 3);
    CHECK(erdos_selfridge_max(13) == 4);
    CHECK(erdos_selfridge_max(2) == 1);
    CHECK_THROWS_AS(erdos_selfridge_max(9), std::invalid_argument);
    CHECK_THROWS_AS(erdos_selfridge_max(37, true), std::invalid_argument); // verify guard
    CHECK(erdos_selfridge_max(31, true) == 7);
    CHECK(erdos_selfridge_max(5, true) == 2);
}

TEST_CASE("exhaustive zero-sum-free maxima for small primes") {
    CHECK(max_zero_sum_free_size(2) == 1);
    CHECK(max_zero_sum_free_size(3) == 1);
    CHECK(max_zero_sum_free_size(5) == 2);
    CHECK(max_zero_sum_free_size(7) == 3);
    CHECK(max_zero_sum_free_size(11) == 4);
    CHECK(max_zero_sum_free_size(13) == 4);
}

TEST_CASE("selfridge search agrees with the float-free closed form on a prefix") {
    for (std::int64_t p = 2; p < 2000; ++p) {
        if (!is_prime(p)) continue;
        std::int64_t k = erdos_selfridge_max(p);
        CHECK(k * (k + 1) / 2 < p);
        CHECK((k + 1) * (k + 2) / 2 >= p);
    }
}
