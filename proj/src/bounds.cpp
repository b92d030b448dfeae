#include "sumsets/bounds.hpp"

#include <limits>
#include <stdexcept>

namespace sumsets {
namespace {

std::int64_t narrow(__int128 v, const char* what) {
    constexpr __int128 int64_min = std::numeric_limits<std::int64_t>::min();
    constexpr __int128 int64_max = std::numeric_limits<std::int64_t>::max();
    if (v < int64_min || v > int64_max) throw std::overflow_error(what);
    return std::int64_t(v);
}

} // namespace

Bound nwedge_bound(int n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("nwedge_bound: n must be positive");
    __int128 v = __int128(n) * k - __int128(n) * n + 1;
    return {narrow(v, "nwedge_bound: overflow"), k >= n};
}

Bound sn_bound(int n, std::int64_t k) {
    if (n < 1) throw std::invalid_argument("sn_bound: n must be positive");
    __int128 v = __int128(k - 1) * n - 3 * (__int128(n) * (n - 1) / 2) + 1;
    return {narrow(v, "sn_bound: overflow"), k >= 2 * std::int64_t(n) - 1};
}

Bound liu_sun_K(int n, std::int64_t k, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("liu_sun_K: n and m must be positive");
    __int128 v = __int128(k - 1) * n - __int128(m + 1) * (__int128(n) * (n - 1) / 2);
    return {narrow(v, "liu_sun_K: overflow"), k > std::int64_t(m) * (n - 1)};
}

BoundReport bound_report(const IntegerSet& a, int n, SumMode mode) {
    if (a.empty()) throw std::invalid_argument("bound_report: empty set");
    std::int64_t k = std::int64_t(a.size());
    Bound b = mode == SumMode::squares ? sn_bound(n, k) : nwedge_bound(n, k);
    SumSet s = mode == SumMode::squares ? restricted_sumset(a, n) : distinct_sumset(a, n);

    BoundReport report;
    report.n = n;
    report.k = k;
    report.bound = b.value;
    report.actual = std::int64_t(s.cardinality());
    report.slack = report.actual - report.bound;
    report.equality = report.slack == 0;
    report.applicable = b.applicable;
    return report;
}

} // namespace sumsets
