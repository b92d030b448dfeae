#pragma once

#include <span>
#include <vector>

#include "sumsets/integer_set.hpp"
#include "sumsets/polynomial.hpp"
#include "sumsets/sum_set.hpp"

namespace sumsets {

// One fiber of a key polynomial: the set elements sharing key = P(a).
struct KeyClass {
    std::int64_t key;
    std::vector<std::int64_t> members; // ascending
    bool operator==(const KeyClass&) const = default;
};

// Partition of a set by a key polynomial, classes in ascending key order.
// For key = x^2 every class is {x} or {x, -x}.
struct ClassDecomposition {
    std::vector<KeyClass> classes;
    std::size_t class_count() const { return classes.size(); }
};

ClassDecomposition decompose(const IntegerSet& a, const MonicPolynomial& key);

// S_n(A) = { a_1+...+a_n : a_i in A pairwise distinct, a_i^2 pairwise distinct }.
// Empty when A has fewer than n distinct absolute values.
SumSet restricted_sumset(const IntegerSet& a, int n);

// n^A = { a_1+...+a_n : a_i in A pairwise distinct }. Empty when n > |A|.
SumSet distinct_sumset(const IntegerSet& a, int n);

// { a_1+...+a_n : a_i in A_i, P(a_i) pairwise distinct }.
SumSet generalized_sumset(std::span<const IntegerSet> families, const MonicPolynomial& p);

enum class Constraint { distinct, squares };

// Naive enumeration references, kept independent of the bit-vector DP.
// Refuse combinatorially large inputs (|A| > 14 or n > 6).
SumSet brute_oracle(const IntegerSet& a, int n, Constraint constraint);
SumSet brute_oracle(const IntegerSet& a, int n, const MonicPolynomial& p);
SumSet brute_oracle(std::span<const IntegerSet> families, const MonicPolynomial& p);

} // namespace sumsets
