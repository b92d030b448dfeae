#include "sumsets/proofkit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "sumsets/bounds.hpp"
#include "sumsets/core.hpp"
#include "sumsets/errors.hpp"

namespace sumsets {
namespace {

std::int64_t sum_of(const std::vector<std::int64_t>& v) {
    return std::accumulate(v.begin(), v.end(), std::int64_t(0));
}

// Lemma-form parse: the symmetric part {+-d} U {+-(b+jd) : j = 1..pairs-1}
// plus the listed unpaired elements. Returns (b, d) on an exact match.
std::optional<std::pair<std::int64_t, std::int64_t>>
parse_symmetric_progression(const std::vector<std::int64_t>& halves) {
    if (halves.size() < 2) return std::nullopt;
    std::int64_t d = halves[0];
    std::int64_t b = halves[1] - d;
    if (d < 1 || b < 1) return std::nullopt;
    for (std::size_t j = 2; j < halves.size(); ++j)
        if (halves[j] - halves[j - 1] != d) return std::nullopt;
    return std::make_pair(b, d);
}

struct LemmaShape {
    int n;
    std::int64_t b, d;
    std::int64_t top; // largest progression element b + (pairs-1)*d
};

// Validates the exact lemma set-form and the stated inequalities on b, c, d.
// Near-miss inputs are rejected, never guessed.
LemmaShape parse_lemma(const IntegerSet& a, std::int64_t c, LemmaForm mode) {
    if (!a.contains(c)) throw std::invalid_argument("find_witness: c not in A");

    std::vector<std::int64_t> halves;
    std::vector<std::int64_t> unpaired;
    for (std::int64_t e : a.elements()) {
        if (e > 0 && a.contains(-e)) halves.push_back(e);
        else if (e == 0 || !a.contains(-e)) unpaired.push_back(e);
    }

    if (mode == LemmaForm::lemma_ii) {
        // |A| = 2n+1: n pairs and the single outlier c > b + (n-1)d.
        if (a.size() % 2 == 0 || a.size() < 7)
            throw std::invalid_argument("find_witness: lemma (ii) needs |A| = 2n+1, n >= 3");
        int n = int((a.size() - 1) / 2);
        if (unpaired.size() != 1 || unpaired[0] != c || halves.size() != std::size_t(n))
            throw std::invalid_argument("find_witness: set does not match the lemma (ii) form");
        auto bd = parse_symmetric_progression(halves);
        if (!bd) throw std::invalid_argument("find_witness: set does not match the lemma (ii) form");
        std::int64_t top = bd->first + std::int64_t(n - 1) * bd->second;
        if (c <= top)
            throw std::invalid_argument("find_witness: lemma (ii) needs c > b + (n-1)d");
        return {n, bd->first, bd->second, top};
    }

    // lemma (i): |A| = 2n with n-1 pairs and unpaired c_1 < b + (n-2)d <= c_2 = c.
    if (a.size() % 2 != 0 || a.size() < 6)
        throw std::invalid_argument("find_witness: lemma (i) needs |A| = 2n, n >= 3");
    int n = int(a.size() / 2);
    if (unpaired.size() != 2 || halves.size() != std::size_t(n) - 1)
        throw std::invalid_argument("find_witness: set does not match the lemma (i) form");
    auto bd = parse_symmetric_progression(halves);
    if (!bd) throw std::invalid_argument("find_witness: set does not match the lemma (i) form");
    std::int64_t top = bd->first + std::int64_t(n - 2) * bd->second;
    std::int64_t c1 = unpaired[0], c2 = unpaired[1];
    // Note c_1 = -c_2 never reaches this point: such a pair lands among the
    // halves and fails the shape check above. That exclusion is load-bearing;
    // the witness interval can be empty when the outliers mirror each other.
    if (c2 != c || c2 < top || c1 >= top)
        throw std::invalid_argument("find_witness: lemma (i) needs c_1 < b + (n-2)d <= c_2 = c");
    return {n, bd->first, bd->second, top};
}

} // namespace

std::int64_t sigma(const IntegerSet& s) {
    if (s.empty()) throw std::invalid_argument("sigma: empty set");
    return sum_of(s.elements());
}

std::int64_t select_u(const IntegerSet& s, std::int64_t b) {
    if (s.empty()) throw std::invalid_argument("select_u: empty set");
    if (b >= 0) throw std::invalid_argument("select_u: b must be negative");
    if (s.contains(b)) throw std::invalid_argument("select_u: b must not lie in S");
    if (s.min() > -b) return s.min();
    const auto& e = s.elements();
    auto it = std::upper_bound(e.begin(), e.end(), -b);
    return *std::prev(it); // largest element <= -b; exists since min <= -b
}

SwapState swap_chain(const IntegerSet& s, std::span<const std::int64_t> bs) {
    if (s.empty()) throw std::invalid_argument("swap_chain: empty set");
    if (!s.negation_pairs().empty())
        throw std::invalid_argument("swap_chain: -S and S\\{0} must be disjoint");
    if (bs.size() > s.size())
        throw std::invalid_argument("swap_chain: more swaps than elements");

    std::set<std::int64_t> seen;
    for (std::int64_t b : bs) {
        if (b >= 0) throw std::invalid_argument("swap_chain: swaps must be negative");
        if (s.contains(b)) throw std::invalid_argument("swap_chain: swap element already in S");
        if (!seen.insert(b).second)
            throw std::invalid_argument("swap_chain: swap elements must be distinct");
    }

    std::vector<std::int64_t> work = s.elements();
    std::set<std::int64_t> inserted_set;
    SwapState st;
    for (std::int64_t b : bs) {
        // X_m: the working set minus everything inserted so far.
        std::vector<std::int64_t> original_part;
        for (std::int64_t e : work)
            if (!inserted_set.count(e)) original_part.push_back(e);

        std::int64_t u = select_u(IntegerSet(original_part), b);
        work.erase(std::find(work.begin(), work.end(), u));
        work.insert(std::lower_bound(work.begin(), work.end(), b), b);
        inserted_set.insert(b);
        st.inserted.push_back(b);
        st.removed.push_back(u);
        st.stage_sums.push_back(sum_of(work));
    }
    st.base = IntegerSet(work);
    return st;
}

std::optional<std::vector<std::int64_t>> descending_list(const IntegerSet& a, int n) {
    if (n < 1) throw std::invalid_argument("descending_list: n must be positive");
    if (a.empty()) return std::nullopt;

    std::vector<std::int64_t> negatives, nonneg;
    for (std::int64_t e : a.elements()) (e < 0 ? negatives : nonneg).push_back(e);
    std::size_t r = negatives.size();
    if (r > std::size_t(n) - 1 || nonneg.size() < std::size_t(n)) return std::nullopt;

    // Top block: the n largest nonnegatives.
    std::vector<std::int64_t> top(nonneg.end() - n, nonneg.end());

    // c: the largest element of the top block with c = 0 or -c not in A.
    std::int64_t c = 0;
    bool found = false;
    for (auto it = top.rbegin(); it != top.rend(); ++it)
        if (*it == 0 || !a.contains(-*it)) { c = *it; found = true; break; }
    if (!found) return std::nullopt;

    std::vector<std::int64_t> base;
    for (std::int64_t e : top)
        if (e != c) base.push_back(e);
    IntegerSet base_set{base};

    // negatives[0] = b_r < ... < negatives[r-1] = b_1 (paper indexing).
    std::vector<std::int64_t> list;
    list.push_back(sum_of(top));
    for (std::size_t m = 1; m <= r; ++m) {
        std::vector<std::int64_t> chain(negatives.begin(),
                                        negatives.begin() + std::int64_t(m) - 1);
        for (std::size_t j = 1; j + m <= r + 1; ++j) {
            chain.push_back(negatives[r - j]);
            SwapState st = swap_chain(base_set, chain);
            list.push_back(c + st.stage_sums.back());
            chain.pop_back();
        }
    }

    for (std::size_t i = 1; i < list.size(); ++i)
        if (list[i] >= list[i - 1])
            throw theorem_violation("descending_list: descent violated");
    SumSet sn = restricted_sumset(a, n);
    for (std::int64_t v : list)
        if (!sn.contains(v))
            throw theorem_violation("descending_list: value outside the restricted sumset");
    return list;
}

std::optional<bool> sign_count_check(const IntegerSet& a, int n) {
    if (n < 3) throw std::invalid_argument("sign_count_check: need n >= 3");
    std::int64_t k = std::int64_t(a.size());
    if (k < 2 * std::int64_t(n) - 1) return std::nullopt;
    Bound b = sn_bound(n, k);
    if (std::int64_t(restricted_sumset(a, n).cardinality()) != b.value) return std::nullopt;
    return a.count_negative() >= std::size_t(n) - 1 && a.count_positive() >= std::size_t(n) - 1;
}

WitnessInterval witness_interval(const IntegerSet& a, std::int64_t c, LemmaForm mode) {
    LemmaShape shape = parse_lemma(a, c, mode);
    SumSet without = restricted_sumset(a.without(c), shape.n);
    return {without.min_value(), without.max_value() + c - shape.top};
}

std::int64_t find_witness(const IntegerSet& a, std::int64_t c, LemmaForm mode) {
    LemmaShape shape = parse_lemma(a, c, mode);
    SumSet without = restricted_sumset(a.without(c), shape.n);
    SumSet full = restricted_sumset(a, shape.n);
    std::int64_t lo = without.min_value();
    std::int64_t hi = without.max_value() + c - shape.top;
    for (std::int64_t v : full.values()) {
        if (v <= lo) continue;
        if (v >= hi) break;
        if (!without.contains(v)) return v;
    }
    throw theorem_violation("find_witness: no witness in the lemma interval");
}

} // namespace sumsets
