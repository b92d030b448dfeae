#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sumsets/integer_set.hpp"

namespace sumsets {

// Sum of all elements.
std::int64_t sigma(const IntegerSet& s);

// The swap-selection rule: min S when min S > -b, otherwise the largest
// element <= -b. Requires b < 0, b not in S, S nonempty. The selected element
// is the one a swap removes; note it removes -b itself whenever present.
std::int64_t select_u(const IntegerSet& s, std::int64_t b);

struct SwapState {
    IntegerSet base;                      // working set after the last stage
    std::vector<std::int64_t> inserted;   // b'_1..b'_m in application order
    std::vector<std::int64_t> removed;    // selected elements, same order
    std::vector<std::int64_t> stage_sums; // sigma after each stage
};

// Applies the swap stages left to right. Requires -S and S\{0} disjoint, and
// bs to be distinct negatives outside S with |bs| <= |S|.
SwapState swap_chain(const IntegerSet& s, std::span<const std::int64_t> bs);

// The full descending value list rooted at the top block: sigma(T) followed
// by one row per swap depth. T is the n largest nonnegatives, c the largest
// element of T with c = 0 or -c not in A. Returns nullopt when A does not
// split as required (more than n-1 negatives, fewer than n nonnegatives, or
// no admissible c). Every value is checked to be a member of
// restricted_sumset(A, n) and the list strictly decreasing; a violation
// throws theorem_violation.
std::optional<std::vector<std::int64_t>> descending_list(const IntegerSet& a, int n);

// True iff A has at least n-1 negative and n-1 positive members. Only
// meaningful when |S_n(A)| attains the bound; returns nullopt when the
// equality precondition fails (or k < 2n-1).
std::optional<bool> sign_count_check(const IntegerSet& a, int n);

enum class LemmaForm { lemma_i, lemma_ii };

// Open interval the lemma confines its witness to.
struct WitnessInterval {
    std::int64_t lo, hi;
    bool operator==(const WitnessInterval&) const = default;
};

WitnessInterval witness_interval(const IntegerSet& a, std::int64_t c, LemmaForm mode);

// Minimal w in S_n(A) \ S_n(A\{c}) strictly inside the lemma interval.
// The set must match the lemma form exactly (std::invalid_argument
// otherwise); a missing witness throws theorem_violation because the lemma
// guarantees existence.
std::int64_t find_witness(const IntegerSet& a, std::int64_t c, LemmaForm mode);

} // namespace sumsets
