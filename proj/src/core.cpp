#include "sumsets/core.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "sumsets/detail/bitops.hpp"

namespace sumsets {
namespace {

constexpr std::int64_t kMaxFrameBits = std::int64_t(1) << 27;

struct Frame {
    std::int64_t lo, hi; // inclusive bounds on every achievable partial sum
    std::size_t words() const { return std::size_t((hi - lo) / 64 + 1); }
};

// Bounds covering sums of up to n distinct elements drawn from `sorted`.
// All intermediate DP levels live in this frame, so shifted bits never leave
// the word block.
Frame frame_for(const std::vector<std::int64_t>& sorted, int n) {
    __int128 lo = 0, hi = 0, run_lo = 0, run_hi = 0;
    std::size_t limit = std::min<std::size_t>(std::size_t(n), sorted.size());
    for (std::size_t j = 0; j < limit; ++j) {
        run_lo += sorted[j];
        run_hi += sorted[sorted.size() - 1 - j];
        lo = std::min(lo, run_lo);
        hi = std::max(hi, run_hi);
    }
    constexpr __int128 int64_min = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 int64_max = std::numeric_limits<std::int64_t>::max();
    if (lo < int64_min || hi > int64_max || hi - lo + 1 > kMaxFrameBits)
        throw std::invalid_argument("sumset: n * max|a| exceeds the supported range");
    return {std::int64_t(lo), std::int64_t(hi)};
}

// Exact-count DP over key classes. At most one member per class is ever
// chosen because every transition reads the pre-class state.
SumSet sumset_over_classes(const std::vector<KeyClass>& classes, int n,
                           const std::vector<std::int64_t>& universe_sorted) {
    if (n < 1) throw std::invalid_argument("sumset: n must be positive");
    if (std::size_t(n) > classes.size()) return SumSet{};

    Frame frame = frame_for(universe_sorted, n);
    std::vector<std::vector<std::uint64_t>> level(
        std::size_t(n) + 1, std::vector<std::uint64_t>(frame.words(), 0));
    detail::set_bit(level[0], std::size_t(-frame.lo));

    int reachable = 0;
    for (const KeyClass& cls : classes) {
        int top = std::min(n, reachable + 1);
        for (int l = top; l >= 1; --l)
            for (std::int64_t x : cls.members)
                detail::or_shifted(level[std::size_t(l)], level[std::size_t(l) - 1], x);
        reachable = top;
    }
    return SumSet::from_words(frame.lo, std::move(level[std::size_t(n)]));
}

void check_oracle_guard(std::size_t set_size, int n) {
    if (set_size > 14 || n > 6)
        throw std::invalid_argument("brute_oracle: refused, input too large (|A| <= 14, n <= 6)");
}

// All n-combinations of `elems`, filtered by pairwise-distinct keys.
template <typename KeyFn>
SumSet brute_combinations(const std::vector<std::int64_t>& elems, int n, KeyFn&& key) {
    if (n < 1) throw std::invalid_argument("brute_oracle: n must be positive");
    std::set<std::int64_t> sums;
    std::vector<std::int64_t> keys(static_cast<std::size_t>(n));

    auto rec = [&](auto&& self, int depth, std::size_t start, std::int64_t partial) -> void {
        if (depth == n) {
            sums.insert(partial);
            return;
        }
        for (std::size_t i = start; i < elems.size(); ++i) {
            std::int64_t k = key(elems[i]);
            bool clash = false;
            for (int d = 0; d < depth; ++d)
                if (keys[std::size_t(d)] == k) clash = true;
            if (clash) continue;
            keys[std::size_t(depth)] = k;
            self(self, depth + 1, i + 1, partial + elems[i]);
        }
    };
    rec(rec, 0, 0, 0);
    return SumSet::from_values({sums.begin(), sums.end()});
}

} // namespace

ClassDecomposition decompose(const IntegerSet& a, const MonicPolynomial& key) {
    if (a.empty()) throw std::invalid_argument("decompose: empty set");
    std::map<std::int64_t, std::vector<std::int64_t>> buckets;
    for (std::int64_t e : a.elements()) buckets[key(e)].push_back(e);
    ClassDecomposition out;
    out.classes.reserve(buckets.size());
    for (auto& [k, members] : buckets) out.classes.push_back({k, std::move(members)});
    return out;
}

SumSet restricted_sumset(const IntegerSet& a, int n) {
    if (n < 1) throw std::invalid_argument("restricted_sumset: n must be positive");
    if (a.empty()) return SumSet{};
    return sumset_over_classes(decompose(a, MonicPolynomial::square()).classes, n, a.elements());
}

SumSet distinct_sumset(const IntegerSet& a, int n) {
    if (n < 1) throw std::invalid_argument("distinct_sumset: n must be positive");
    if (a.empty()) return SumSet{};
    // Identity key: every class a singleton, so this is the plain
    // exact-count subset-sum DP over the sorted elements.
    return sumset_over_classes(decompose(a, MonicPolynomial::identity()).classes, n, a.elements());
}

SumSet generalized_sumset(std::span<const IntegerSet> families, const MonicPolynomial& p) {
    if (families.empty()) throw std::invalid_argument("generalized_sumset: no families");
    for (const IntegerSet& f : families)
        if (f.empty()) throw std::invalid_argument("generalized_sumset: empty family");

    int n = int(families.size());
    bool identical = true;
    for (const IntegerSet& f : families)
        if (!(f == families[0])) identical = false;
    if (identical)
        return sumset_over_classes(decompose(families[0], p).classes, n,
                                   families[0].elements());

    if (n > 16)
        throw std::invalid_argument("generalized_sumset: more than 16 distinct families");

    __int128 lo128 = 0, hi128 = 0;
    for (const IntegerSet& f : families) {
        lo128 += std::min<std::int64_t>(0, f.min());
        hi128 += std::max<std::int64_t>(0, f.max());
    }
    constexpr __int128 int64_min = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 int64_max = std::numeric_limits<std::int64_t>::max();
    if (lo128 < int64_min || hi128 > int64_max || hi128 - lo128 + 1 > kMaxFrameBits)
        throw std::invalid_argument("generalized_sumset: sum range exceeds the supported width");
    std::int64_t lo = std::int64_t(lo128), hi = std::int64_t(hi128);
    std::size_t words = std::size_t((hi - lo) / 64 + 1);

    // key -> (element -> family membership mask)
    std::map<std::int64_t, std::map<std::int64_t, unsigned>> groups;
    for (int i = 0; i < n; ++i)
        for (std::int64_t x : families[std::size_t(i)].elements())
            groups[p(x)][x] |= 1u << i;

    const unsigned full = (1u << n) - 1;
    std::vector<std::vector<std::uint64_t>> state(full + 1,
                                                  std::vector<std::uint64_t>(words, 0));
    detail::set_bit(state[0], std::size_t(-lo));

    for (const auto& [key, members] : groups) {
        auto next = state;
        for (unsigned m = 0; m <= full; ++m) {
            if (!detail::any_bit(state[m])) continue;
            for (const auto& [x, mask] : members) {
                unsigned avail = mask & ~m;
                while (avail) {
                    unsigned i = unsigned(std::countr_zero(avail));
                    avail &= avail - 1;
                    detail::or_shifted(next[m | (1u << i)], state[m], x);
                }
            }
        }
        state = std::move(next);
    }
    return SumSet::from_words(lo, std::move(state[full]));
}

SumSet brute_oracle(const IntegerSet& a, int n, Constraint constraint) {
    check_oracle_guard(a.size(), n);
    if (constraint == Constraint::distinct)
        return brute_combinations(a.elements(), n, [](std::int64_t x) { return x; });
    return brute_combinations(a.elements(), n,
                              [](std::int64_t x) { return x < 0 ? -x : x; });
}

SumSet brute_oracle(const IntegerSet& a, int n, const MonicPolynomial& p) {
    check_oracle_guard(a.size(), n);
    return brute_combinations(a.elements(), n, [&](std::int64_t x) { return p(x); });
}

SumSet brute_oracle(std::span<const IntegerSet> families, const MonicPolynomial& p) {
    if (families.empty()) throw std::invalid_argument("brute_oracle: no families");
    int n = int(families.size());
    check_oracle_guard(0, n);
    for (const IntegerSet& f : families) {
        if (f.empty()) throw std::invalid_argument("brute_oracle: empty family");
        check_oracle_guard(f.size(), n);
    }

    std::set<std::int64_t> sums;
    std::vector<std::int64_t> keys(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int depth, std::int64_t partial) -> void {
        if (depth == n) {
            sums.insert(partial);
            return;
        }
        for (std::int64_t x : families[std::size_t(depth)].elements()) {
            std::int64_t k = p(x);
            bool clash = false;
            for (int d = 0; d < depth; ++d)
                if (keys[std::size_t(d)] == k) clash = true;
            if (clash) continue;
            keys[std::size_t(depth)] = k;
            self(self, depth + 1, partial + x);
        }
    };
    rec(rec, 0, 0);
    return SumSet::from_values({sums.begin(), sums.end()});
}

} // namespace sumsets
