#pragma once

#include <cstdint>

#include "sumsets/core.hpp"

namespace sumsets {

// A closed-form bound value plus whether its hypotheses are met. The value is
// always computed so callers can display it next to counterexamples; it is
// only a guaranteed lower bound when applicable is true.
struct Bound {
    std::int64_t value;
    bool applicable;
    bool operator==(const Bound&) const = default;
};

// n*k - n^2 + 1, guaranteed for k >= n.
Bound nwedge_bound(int n, std::int64_t k);

// (k-1)*n - 3*C(n,2) + 1, guaranteed for k >= 2n-1.
Bound sn_bound(int n, std::int64_t k);

// K = (k-1)*n - (m+1)*C(n,2); the guaranteed sumset size is K+1 when
// k > m*(n-1).
Bound liu_sun_K(int n, std::int64_t k, int m);

struct BoundReport {
    int n = 0;
    std::int64_t k = 0;
    std::int64_t bound = 0;
    std::int64_t actual = 0;
    std::int64_t slack = 0; // actual - bound
    bool equality = false;
    bool applicable = false;
    bool operator==(const BoundReport&) const = default;
};

enum class SumMode { squares, distinct };

BoundReport bound_report(const IntegerSet& a, int n, SumMode mode);

} // namespace sumsets
