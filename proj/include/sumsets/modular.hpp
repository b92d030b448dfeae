#pragma once

#include <cstdint>
#include <vector>

#include "sumsets/bounds.hpp"

namespace sumsets {

bool is_prime(std::int64_t p);

// Subset of Z/pZ for a prime modulus p <= 10^6. Inputs are reduced mod p and
// must be distinct after reduction.
class ResidueSet {
public:
    ResidueSet(std::int64_t p, std::vector<std::int64_t> elements);

    std::int64_t modulus() const { return p_; }
    const std::vector<std::int64_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    bool empty() const { return elements_.empty(); }

private:
    std::int64_t p_;
    std::vector<std::int64_t> elements_;
};

// a + b != 0 (mod p) for all a, b in A, a = b allowed.
bool is_pair_sum_free(const ResidueSet& a);

// { sum(B) mod p : nonempty B subset of A }, exact via a mod-p bit-vector DP.
std::vector<std::int64_t> nonempty_subset_sums(const ResidueSet& a);

// No nonempty subset sums to 0 mod p.
bool is_zero_sum_free(const ResidueSet& a);

// Reports |nonempty_subset_sums(A)| against min{p, |A|(|A|+1)/2}. Flagged
// not applicable when A is not pair-sum-free. In the report n is the set
// size and k the modulus.
BoundReport check_balandraud(const ResidueSet& a);

// max{ k : k(k+1)/2 < p }, pure integer search. With verify set (allowed for
// p <= 31) confirms by exhaustion that this equals the largest zero-sum-free
// subset size in Z/pZ, throwing theorem_violation on disagreement.
std::int64_t erdos_selfridge_max(std::int64_t p, bool verify = false);

// Exhaustive maximum zero-sum-free set size, guarded to p <= 31.
std::int64_t max_zero_sum_free_size(std::int64_t p);

} // namespace sumsets
