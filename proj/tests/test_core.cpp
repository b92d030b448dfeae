#include "doctest.h"

#include <stdexcept>

#include <random>

#include "sumsets/core.hpp"
#include "test_util.hpp"

using namespace sumsets;
using sumsets::test::S;
using sumsets::test::V;

namespace {

// Shared randomized instance source: |A| <= 10, elements in [-12, 12], n <= 4.
IntegerSet random_set(std::mt19937_64& rng, int max_size = 10, int max_abs = 12) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_int_distribution<std::int64_t> val_dist(-max_abs, max_abs);
    int target = size_dist(rng);
    std::vector<std::int64_t> vals;
    while (int(vals.size()) < target) {
        std::int64_t v = val_dist(rng);
        bool dup = false;
        for (std::int64_t e : vals) dup |= e == v;
        if (!dup) vals.push_back(v);
    }
    return IntegerSet{vals};
}

} // namespace

TEST_CASE("decompose groups by key value") {
    auto cd = decompose(S({-1, 1, -4, 4, 6}), MonicPolynomial::square());
    REQUIRE(cd.class_count() == 3);
    CHECK(cd.classes[0].key == 1);
    CHECK(cd.classes[0].members == V({-1, 1}));
    CHECK(cd.classes[1].key == 16);
    CHECK(cd.classes[1].members == V({-4, 4}));
    CHECK(cd.classes[2].key == 36);
    CHECK(cd.classes[2].members == V({6}));

    auto single = decompose(S({5}), MonicPolynomial::square());
    REQUIRE(single.class_count() == 1);
    CHECK(single.classes[0].key == 25);
    CHECK(single.classes[0].members == V({5}));

    auto ident = decompose(S({0, 1, 2}), MonicPolynomial::identity());
    CHECK(ident.class_count() == 3);
}

TEST_CASE("restricted_sumset golden examples") {
    CHECK(restricted_sumset(S({-1, 1, -4, 4, 6}), 3).values() == V({1, 3, 9, 11}));
    CHECK(restricted_sumset(S({-1, 1, -3, 3, -4, 4}), 3).values() ==
          V({-8, -6, -2, 0, 2, 6, 8}));
    CHECK(restricted_sumset(S({-1, 1}), 2).empty());
    CHECK(restricted_sumset(S({-1, 1, -3, 3, -5, 5, 7}), 3).values() ==
          V({-9, -7, -3, -1, 1, 3, 5, 7, 9, 11, 13, 15}));
}

TEST_CASE("restricted_sumset argument checks") {
    CHECK_THROWS_AS(restricted_sumset(S({1, 2}), 0), std::invalid_argument);
    CHECK_THROWS_AS(restricted_sumset(S({1, 2}), -1), std::invalid_argument);
    // fewer distinct absolute values than n: empty, not an error
    CHECK(restricted_sumset(S({-2, -1, 1, 2}), 3).empty());
}

TEST_CASE("distinct_sumset examples") {
    CHECK(distinct_sumset(S({0, 1, 2, 3}), 2).values() == V({1, 2, 3, 4, 5}));
    CHECK(distinct_sumset(S({0, 1, 2, 3, 4}), 2).cardinality() == 7);
    CHECK(distinct_sumset(S({-4, -1, 1, 4, 6}), 5).values() == V({6}));
    CHECK(distinct_sumset(S({1, 2}), 3).empty());
    CHECK_THROWS_AS(distinct_sumset(S({1, 2}), 0), std::invalid_argument);
}

TEST_CASE("generalized_sumset examples") {
    std::vector<IntegerSet> pair(2, S({0, 1, 2}));
    CHECK(generalized_sumset(pair, MonicPolynomial::square()).values() == V({1, 2, 3}));

    std::vector<IntegerSet> triple(3, S({-1, 1, -4, 4, 6}));
    CHECK(generalized_sumset(triple, MonicPolynomial::square()).values() ==
          V({1, 3, 9, 11}));

    std::vector<IntegerSet> single = {S({5})};
    CHECK(generalized_sumset(single, MonicPolynomial::identity()).values() == V({5}));

    CHECK_THROWS_AS(generalized_sumset(std::vector<IntegerSet>{}, MonicPolynomial::identity()),
                    std::invalid_argument);
}

TEST_CASE("generalized_sumset with distinct families matches the tuple oracle") {
    std::mt19937_64 rng(20240917);
    for (int iter = 0; iter < 300; ++iter) {
        int n = 2 + int(rng() % 3);
        std::vector<IntegerSet> fams;
        for (int i = 0; i < n; ++i) fams.push_back(random_set(rng, 6, 9));
        int deg = 1 + int(rng() % 3);
        std::vector<std::int64_t> coeffs(std::size_t(deg) + 1, 0);
        for (int d = 0; d < deg; ++d)
            coeffs[std::size_t(d)] = std::int64_t(rng() % 7) - 3;
        coeffs.back() = 1;
        MonicPolynomial p{coeffs};
        CHECK(generalized_sumset(fams, p) == brute_oracle(fams, p));
    }
}

TEST_CASE("brute_oracle examples and guard") {
    CHECK(brute_oracle(S({-1, 1, -4, 4, 6}), 3, Constraint::squares).values() ==
          V({1, 3, 9, 11}));
    CHECK(brute_oracle(S({0, 1, 2, 3}), 2, Constraint::distinct).values() ==
          V({1, 2, 3, 4, 5}));
    CHECK(brute_oracle(S({-2, 2}), 2, Constraint::squares).empty());

    std::vector<std::int64_t> big;
    for (std::int64_t i = 0; i < 15; ++i) big.push_back(i);
    CHECK_THROWS_AS(brute_oracle(IntegerSet{big}, 2, Constraint::distinct),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_oracle(S({1, 2, 3}), 7, Constraint::distinct),
                    std::invalid_argument);
}

TEST_CASE("transforms") {
    CHECK(S({-1, 1, 2}).dilated(3) == S({-3, 3, 6}));
    CHECK(S({-1, 1, 2}).negated() == S({-2, -1, 1}));
    CHECK(S({0, 1, 3}).translated(-1) == S({-1, 0, 2}));
    CHECK_THROWS_AS(S({1, 2}).dilated(0), std::invalid_argument);
    CHECK(S({-1, 1, 2}).dilated(3).size() == 3);
}

TEST_CASE("negation_pairs accessor") {
    CHECK(S({-4, -1, 0, 1, 4, 6}).negation_pairs() == V({1, 4}));
    CHECK(S({1, 2, 3}).negation_pairs().empty());
}

TEST_CASE("IntegerSet rejects duplicates") {
    CHECK_THROWS_AS(IntegerSet(V({1, 1, 2})), std::invalid_argument);
}

TEST_CASE("zero forms a singleton square class") {
    auto cd = decompose(S({-1, 0, 1}), MonicPolynomial::square());
    REQUIRE(cd.class_count() == 2);
    CHECK(cd.classes[0].key == 0);
    CHECK(cd.classes[0].members == V({0}));
}

TEST_CASE("oracle equivalence over random instances") {
    std::mt19937_64 rng(987654321);
    for (int iter = 0; iter < 2000; ++iter) {
        IntegerSet a = random_set(rng);
        int n = 1 + int(rng() % 4);
        CHECK(restricted_sumset(a, n) == brute_oracle(a, n, Constraint::squares));
        if (n <= int(a.size()))
            CHECK(distinct_sumset(a, n) == brute_oracle(a, n, Constraint::distinct));
    }
}

TEST_CASE("containment: squares constraint refines distinctness") {
    std::mt19937_64 rng(55555);
    for (int iter = 0; iter < 500; ++iter) {
        IntegerSet a = random_set(rng);
        int n = 1 + int(rng() % 4);
        SumSet restricted = restricted_sumset(a, n);
        SumSet distinct = distinct_sumset(a, n);
        for (std::int64_t v : restricted.values()) CHECK(distinct.contains(v));
    }
}

TEST_CASE("negation and dilation equivariance") {
    std::mt19937_64 rng(777);
    for (int iter = 0; iter < 400; ++iter) {
        IntegerSet a = random_set(rng, 8, 10);
        int n = 1 + int(rng() % 3);
        auto sn = restricted_sumset(a, n).values();

        auto negated = restricted_sumset(a.negated(), n).values();
        std::vector<std::int64_t> expect_neg(sn.rbegin(), sn.rend());
        for (auto& v : expect_neg) v = -v;
        CHECK(negated == expect_neg);

        std::int64_t lambda = (iter % 2) ? 3 : -2;
        auto dilated = restricted_sumset(a.dilated(lambda), n).values();
        std::vector<std::int64_t> expect_dil = sn;
        for (auto& v : expect_dil) v *= lambda;
        std::sort(expect_dil.begin(), expect_dil.end());
        CHECK(dilated == expect_dil);
    }
}

TEST_CASE("translation covariance of the distinct sumset") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 400; ++iter) {
        IntegerSet a = random_set(rng, 8, 10);
        int n = 1 + int(rng() % 3);
        if (n > int(a.size())) continue;
        std::int64_t t = std::int64_t(rng() % 11) - 5;
        auto shifted = distinct_sumset(a.translated(t), n).values();
        auto base = distinct_sumset(a, n).values();
        for (auto& v : base) v += std::int64_t(n) * t;
        CHECK(shifted == base);
    }
}

TEST_CASE("specialization of the generalized sumset") {
    std::mt19937_64 rng(13131313);
    for (int iter = 0; iter < 300; ++iter) {
        IntegerSet a = random_set(rng, 8, 10);
        int n = 1 + int(rng() % 3);
        std::vector<IntegerSet> fams(std::size_t(n), a);
        CHECK(generalized_sumset(fams, MonicPolynomial::square()) == restricted_sumset(a, n));
        CHECK(generalized_sumset(fams, MonicPolynomial::identity()) == distinct_sumset(a, n));
    }
}

TEST_CASE("class iteration order does not matter") {
    // The DP walks classes in ascending key order; compare against the
    // oracle, which never looks at classes at all.
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        IntegerSet a = random_set(rng, 9, 12);
        int n = 1 + int(rng() % 4);
        CHECK(restricted_sumset(a, n) == brute_oracle(a, n, Constraint::squares));
    }
}

TEST_CASE("overflow guard on huge inputs") {
    IntegerSet huge{V({std::int64_t(4) << 60, (std::int64_t(4) << 60) + 1})};
    CHECK_THROWS(restricted_sumset(huge, 2));
}

TEST_CASE("SumSet basics") {
    SumSet s = SumSet::from_values(V({3, -2, 7}));
    CHECK(s.cardinality() == 3);
    CHECK(s.min_value() == -2);
    CHECK(s.max_value() == 7);
    CHECK(s.contains(3));
    CHECK(!s.contains(4));
    CHECK(s.values() == V({-2, 3, 7}));
    CHECK(SumSet{}.empty());
    CHECK_THROWS_AS(SumSet{}.min_value(), std::logic_error);
}

TEST_CASE("MonicPolynomial validation and evaluation") {
    CHECK_THROWS_AS(MonicPolynomial(V({1})), std::invalid_argument);
    CHECK_THROWS_AS(MonicPolynomial(V({0, 2})), std::invalid_argument);
    MonicPolynomial p{V({1, -2, 1})}; // x^2 - 2x + 1
    CHECK(p(3) == 4);
    CHECK(p.degree() == 2);
    CHECK_THROWS_AS(MonicPolynomial::square()(std::int64_t(1) << 62), std::overflow_error);
}
