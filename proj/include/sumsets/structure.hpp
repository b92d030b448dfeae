#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "sumsets/integer_set.hpp"

namespace sumsets {

// Extremal families for |S_2(A)| = 2|A|-4. Parameters are stored in the
// canonical orientation the classifier emits: d > 0 throughout and c < d in
// case (ii).
struct S2CaseI {   // A = {c, +-d}, |c| != d
    std::int64_t c, d;
    bool operator==(const S2CaseI&) const = default;
};
struct S2CaseII {  // A = {+-c, +-d}, 0 < c < d
    std::int64_t c, d;
    bool operator==(const S2CaseII&) const = default;
};
struct S2CaseIII { // A = {+-d} U {c-d, c+d}, c not in {0, +-2d}
    std::int64_t c, d;
    bool operator==(const S2CaseIII&) const = default;
};
struct S2CaseIV {  // A = {r*d : s <= r <= t}, s <= -1, t >= 1, t-s >= 4
    std::int64_t d, s, t;
    bool operator==(const S2CaseIV&) const = default;
};
struct S2CaseV {   // A = {(2r-1)*d : s <= r <= t}, s <= 0, t >= 1, t-s >= 4
    std::int64_t d, s, t;
    bool operator==(const S2CaseV&) const = default;
};

// Extremal families for |S_n(A)| at k = 2n-1 and k = 2n, n >= 3.
// Progression part runs j = 1..n-2 (odd) and j = 1..n-1 (even); b = d when
// n > 3.
struct SnOdd {     // A = {c, +-d} U {+-(b+j*d)}
    int n;
    std::int64_t b, c, d;
    bool operator==(const SnOdd&) const = default;
};
struct SnEven {    // A = {+-d} U {+-(b+j*d)}
    int n;
    std::int64_t b, d;
    bool operator==(const SnEven&) const = default;
};

// Arithmetic progression attaining |n^A| = n*k - n^2 + 1.
struct NwedgeAp {
    std::int64_t start, diff, len;
    bool operator==(const NwedgeAp&) const = default;
};

struct NotExtremal {
    std::string reason;
    bool operator==(const NotExtremal&) const = default;
};

using StructureForm = std::variant<S2CaseI, S2CaseII, S2CaseIII, S2CaseIV, S2CaseV,
                                   SnOdd, SnEven, NwedgeAp, NotExtremal>;

// True unless the form is NotExtremal.
bool accepted(const StructureForm& form);

// Stable tag names used in the JSON serialization.
std::string tag_of(const StructureForm& form);

struct ApParams {
    std::int64_t start, diff, len;
    bool operator==(const ApParams&) const = default;
};

// AP parameters when all consecutive differences agree. Singletons report
// diff 1 by convention; pairs are APs with diff = gap.
std::optional<ApParams> is_arithmetic_progression(const IntegerSet& a);

// Decides |S_2(A)| = 2|A|-4 and names the family. Pattern matching alone is
// never trusted: the cardinality is always recomputed. |A| < 3 throws.
StructureForm classify_s2(const IntegerSet& a);

// Decides bound attainment for S_n, n >= 3. k = 2n-1 / 2n check the odd/even
// families; k >= 2n+1 is the strict-inequality regime and throws
// theorem_violation if the computed slack is ever < 1.
StructureForm classify_sn(const IntegerSet& a, int n);

// Decides |n^A| = n*k - n^2 + 1. Inside the theorem range (k >= 5,
// 2 <= n <= k-2) equality must coincide with A being an AP; a disagreement
// throws theorem_violation. Outside that range only the computation decides.
StructureForm classify_nwedge(const IntegerSet& a, int n);

// Rebuilds the set a form describes; throws std::invalid_argument on
// parameter-constraint violations and for NotExtremal.
IntegerSet reconstruct(const StructureForm& form);

} // namespace sumsets
