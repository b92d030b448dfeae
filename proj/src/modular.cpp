#include "sumsets/modular.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumsets/detail/bitops.hpp"
#include "sumsets/errors.hpp"

namespace sumsets {
namespace {

constexpr std::int64_t kModulusGuard = 1000000;

// p-bit cyclic rotate-left by a; the top slack bits of the last word stay 0.
std::vector<std::uint64_t> rotate_mod(const std::vector<std::uint64_t>& v,
                                      std::int64_t a, std::int64_t p) {
    std::vector<std::uint64_t> out(v.size(), 0);
    detail::or_shifted(out, v, a);       // bits [0, p-a) -> [a, p)
    detail::or_shifted(out, v, a - p);   // bits [p-a, p) -> [0, a)
    std::size_t slack = std::size_t(v.size() * 64 - std::size_t(p));
    if (slack) out.back() &= ~std::uint64_t(0) >> slack;
    return out;
}

// All nonempty subset sums as a p-bit vector.
std::vector<std::uint64_t> subset_sum_bits(const ResidueSet& a) {
    std::int64_t p = a.modulus();
    std::vector<std::uint64_t> sums(std::size_t((p + 63) / 64), 0);
    for (std::int64_t e : a.elements()) {
        std::vector<std::uint64_t> shifted = rotate_mod(sums, e, p);
        for (std::size_t i = 0; i < sums.size(); ++i) sums[i] |= shifted[i];
        detail::set_bit(sums, std::size_t(e));
    }
    return sums;
}

} // namespace

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t q = 2; q * q <= p; ++q)
        if (p % q == 0) return false;
    return true;
}

ResidueSet::ResidueSet(std::int64_t p, std::vector<std::int64_t> elements) : p_(p) {
    if (p < 2 || p > kModulusGuard || !is_prime(p))
        throw std::invalid_argument("ResidueSet: modulus must be a prime <= 10^6");
    elements_.reserve(elements.size());
    for (std::int64_t e : elements) elements_.push_back(((e % p) + p) % p);
    std::sort(elements_.begin(), elements_.end());
    if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
        throw std::invalid_argument("ResidueSet: duplicate residue after reduction");
}

bool is_pair_sum_free(const ResidueSet& a) {
    if (a.empty()) throw std::invalid_argument("is_pair_sum_free: empty set");
    for (std::int64_t e : a.elements()) {
        std::int64_t complement = (a.modulus() - e) % a.modulus();
        if (std::binary_search(a.elements().begin(), a.elements().end(), complement))
            return false;
    }
    return true;
}

std::vector<std::int64_t> nonempty_subset_sums(const ResidueSet& a) {
    if (a.empty()) throw std::invalid_argument("nonempty_subset_sums: empty set");
    std::vector<std::uint64_t> bits = subset_sum_bits(a);
    std::vector<std::int64_t> out;
    for (std::int64_t v = 0; v < a.modulus(); ++v)
        if (detail::test_bit(bits, std::size_t(v))) out.push_back(v);
    return out;
}

bool is_zero_sum_free(const ResidueSet& a) {
    if (a.empty()) return true;
    std::int64_t p = a.modulus();
    std::vector<std::uint64_t> sums(std::size_t((p + 63) / 64), 0);
    for (std::int64_t e : a.elements()) {
        std::vector<std::uint64_t> shifted = rotate_mod(sums, e, p);
        for (std::size_t i = 0; i < sums.size(); ++i) sums[i] |= shifted[i];
        detail::set_bit(sums, std::size_t(e));
        if (sums[0] & 1) return false;
    }
    return true;
}

BoundReport check_balandraud(const ResidueSet& a) {
    if (a.empty()) throw std::invalid_argument("check_balandraud: empty set");
    std::int64_t p = a.modulus();
    std::int64_t size = std::int64_t(a.size());

    BoundReport report;
    report.n = int(size);
    report.k = p;
    report.bound = std::min<std::int64_t>(p, size * (size + 1) / 2);
    report.actual = std::int64_t(nonempty_subset_sums(a).size());
    report.slack = report.actual - report.bound;
    report.equality = report.slack == 0;
    report.applicable = is_pair_sum_free(a);
    return report;
}

std::int64_t erdos_selfridge_max(std::int64_t p, bool verify) {
    if (!is_prime(p)) throw std::invalid_argument("erdos_selfridge_max: p must be prime");
    // Largest k with k(k+1)/2 < p, by pure integer bisection.
    std::int64_t lo = 0, hi = 2000000000;
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (__int128(mid) * (mid + 1) / 2 < p) lo = mid;
        else hi = mid - 1;
    }
    if (verify) {
        if (p > 31)
            throw std::invalid_argument("erdos_selfridge_max: exhaustive verify guarded to p <= 31");
        if (max_zero_sum_free_size(p) != lo)
            throw theorem_violation("erdos_selfridge_max: exhaustive maximum disagrees");
    }
    return lo;
}

std::int64_t max_zero_sum_free_size(std::int64_t p) {
    if (!is_prime(p) || p > 31)
        throw std::invalid_argument("max_zero_sum_free_size: needs a prime p <= 31");
    // DFS over ascending elements of [1, p); state = subset-sum bitmask.
    // A branch dies as soon as some subset hits 0 mod p.
    std::int64_t best = 0;
    const std::uint64_t mask = (std::uint64_t(1) << p) - 1;
    auto rec = [&](auto&& self, std::int64_t next, std::uint64_t sums,
                   std::int64_t depth) -> void {
        best = std::max(best, depth);
        for (std::int64_t e = next; e < p; ++e) {
            if (depth + (p - e) <= best) break;
            std::uint64_t rotated =
                ((sums << e) | (sums >> (p - e))) & mask;
            std::uint64_t ns = sums | rotated | (std::uint64_t(1) << e);
            if (ns & 1) continue;
            self(self, e + 1, ns, depth + 1);
        }
    };
    rec(rec, 1, 0, 0);
    return best;
}

} // namespace sumsets
