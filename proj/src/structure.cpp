#include "sumsets/structure.hpp"

#include <algorithm>
#include <stdexcept>

#include "sumsets/bounds.hpp"
#include "sumsets/core.hpp"
#include "sumsets/errors.hpp"

namespace sumsets {
namespace {

// The +- pair halves of A plus everything unpaired. Zero counts as unpaired:
// it can only ever play the outlier role, never sit in a pair.
struct PairSplit {
    std::vector<std::int64_t> halves;   // d > 0 with both d and -d present
    std::vector<std::int64_t> unpaired; // ascending
};

PairSplit split_pairs(const IntegerSet& a) {
    PairSplit out;
    for (std::int64_t e : a.elements()) {
        if (e > 0 && a.contains(-e)) out.halves.push_back(e);
        else if (e == 0 || !a.contains(-e)) out.unpaired.push_back(e);
    }
    return out;
}

// Positive halves d = p_1 < p_2 < ... must read d, b+d, b+2d, ... with
// b = p_2 - d and all later gaps equal to d. For n > 3 the theorems force
// b = d. Returns (b, d) or nothing.
std::optional<std::pair<std::int64_t, std::int64_t>>
parse_progression(const std::vector<std::int64_t>& halves, int n) {
    if (halves.size() < 2) return std::nullopt;
    std::int64_t d = halves[0];
    std::int64_t b = halves[1] - d;
    if (b < 1) return std::nullopt;
    for (std::size_t j = 2; j < halves.size(); ++j)
        if (halves[j] - halves[j - 1] != d) return std::nullopt;
    if (n > 3 && b != d) return std::nullopt;
    return std::make_pair(b, d);
}

std::string slack_reason(std::int64_t slack) {
    return "slack " + std::to_string(slack);
}

} // namespace

bool accepted(const StructureForm& form) {
    return !std::holds_alternative<NotExtremal>(form);
}

std::string tag_of(const StructureForm& form) {
    struct Visitor {
        std::string operator()(const S2CaseI&) const { return "s2_case_i"; }
        std::string operator()(const S2CaseII&) const { return "s2_case_ii"; }
        std::string operator()(const S2CaseIII&) const { return "s2_case_iii"; }
        std::string operator()(const S2CaseIV&) const { return "s2_case_iv"; }
        std::string operator()(const S2CaseV&) const { return "s2_case_v"; }
        std::string operator()(const SnOdd&) const { return "sn_odd"; }
        std::string operator()(const SnEven&) const { return "sn_even"; }
        std::string operator()(const NwedgeAp&) const { return "nwedge_ap"; }
        std::string operator()(const NotExtremal&) const { return "not_extremal"; }
    };
    return std::visit(Visitor{}, form);
}

std::optional<ApParams> is_arithmetic_progression(const IntegerSet& a) {
    if (a.empty()) return std::nullopt;
    const auto& e = a.elements();
    if (e.size() == 1) return ApParams{e[0], 1, 1};
    std::int64_t diff = e[1] - e[0];
    for (std::size_t i = 2; i < e.size(); ++i)
        if (e[i] - e[i - 1] != diff) return std::nullopt;
    return ApParams{e[0], diff, std::int64_t(e.size())};
}

StructureForm classify_s2(const IntegerSet& a) {
    if (a.size() < 3) throw std::invalid_argument("classify_s2: need |A| >= 3");
    std::int64_t k = std::int64_t(a.size());
    std::int64_t actual = std::int64_t(restricted_sumset(a, 2).cardinality());
    std::int64_t target = 2 * k - 4;
    if (actual != target) return NotExtremal{slack_reason(actual - target)};

    PairSplit ps = split_pairs(a);

    if (k == 3) {
        // A bound-attaining 3-set must contain a +- pair; otherwise all
        // squares are distinct and |S_2| = |2^A| >= 2k-3 > 2k-4.
        if (ps.halves.size() != 1 || ps.unpaired.size() != 1)
            throw theorem_violation("classify_s2: extremal 3-set without a +- pair");
        return S2CaseI{ps.unpaired[0], ps.halves[0]};
    }

    if (k == 4) {
        if (ps.halves.size() == 2)
            return S2CaseII{ps.halves[0], ps.halves[1]};
        if (ps.halves.size() == 1 && ps.unpaired.size() == 2) {
            std::int64_t d = ps.halves[0];
            std::int64_t x = ps.unpaired[0], y = ps.unpaired[1];
            if (y - x == 2 * d) {
                std::int64_t c = x + d; // midpoint of {c-d, c+d}
                if (c != 0 && c != 2 * d && c != -2 * d) return S2CaseIII{c, d};
            }
        }
        throw theorem_violation("classify_s2: extremal 4-set outside cases (ii)/(iii)");
    }

    // k >= 5: an AP containing a +- pair, dilated row of all integers (with
    // zero) or of the odd integers (without).
    auto ap = is_arithmetic_progression(a);
    if (!ap || ps.halves.empty())
        throw theorem_violation("classify_s2: extremal set (k >= 5) is not a paired AP");
    if (a.contains(0)) {
        std::int64_t d = ap->diff;
        std::int64_t s = a.min() / d, t = a.max() / d;
        if (s <= -1 && t >= 1 && t - s >= 4) return S2CaseIV{d, s, t};
        throw theorem_violation("classify_s2: zero-containing AP out of case (iv) range");
    }
    std::int64_t d = 0; // least positive element; paired in a true case (v) set
    for (std::int64_t e : a.elements())
        if (e > 0) { d = e; break; }
    bool odd_multiples = d > 0 && ap->diff == 2 * d;
    if (odd_multiples)
        for (std::int64_t e : a.elements())
            if (e % d != 0 || ((e / d) % 2) == 0) odd_multiples = false;
    if (odd_multiples) {
        std::int64_t s = (a.min() / d + 1) / 2, t = (a.max() / d + 1) / 2;
        if (s <= 0 && t >= 1 && t - s >= 4) return S2CaseV{d, s, t};
    }
    throw theorem_violation("classify_s2: zero-free extremal AP out of case (v) range");
}

StructureForm classify_sn(const IntegerSet& a, int n) {
    if (n < 3) throw std::invalid_argument("classify_sn: need n >= 3");
    std::int64_t k = std::int64_t(a.size());
    if (k < 2 * std::int64_t(n) - 1)
        return NotExtremal{"not applicable: k < 2n-1"};

    Bound bound = sn_bound(n, k);
    std::int64_t actual = std::int64_t(restricted_sumset(a, n).cardinality());
    std::int64_t slack = actual - bound.value;

    if (k >= 2 * std::int64_t(n) + 1) {
        // Strict-inequality regime: equality here would falsify the theorem.
        if (slack < 1)
            throw theorem_violation("classify_sn: bound attained with k >= 2n+1");
        return NotExtremal{slack_reason(slack)};
    }
    if (slack != 0) return NotExtremal{slack_reason(slack)};

    PairSplit ps = split_pairs(a);
    if (k == 2 * std::int64_t(n) - 1) {
        if (ps.halves.size() == std::size_t(n) - 1 && ps.unpaired.size() == 1) {
            if (auto bd = parse_progression(ps.halves, n))
                return SnOdd{n, bd->first, ps.unpaired[0], bd->second};
        }
        return NotExtremal{"bound attained but outside the odd family"};
    }
    // k == 2n
    if (ps.halves.size() == std::size_t(n) && ps.unpaired.empty()) {
        if (auto bd = parse_progression(ps.halves, n))
            return SnEven{n, bd->first, bd->second};
    }
    return NotExtremal{"bound attained but outside the even family"};
}

StructureForm classify_nwedge(const IntegerSet& a, int n) {
    if (n < 1) throw std::invalid_argument("classify_nwedge: n must be positive");
    if (a.empty()) throw std::invalid_argument("classify_nwedge: empty set");
    std::int64_t k = std::int64_t(a.size());
    Bound bound = nwedge_bound(n, k);
    std::int64_t actual = std::int64_t(distinct_sumset(a, n).cardinality());
    bool equality = bound.applicable && actual == bound.value;
    auto ap = is_arithmetic_progression(a);

    bool theorem_range = k >= 5 && n >= 2 && std::int64_t(n) <= k - 2;
    if (theorem_range && equality != ap.has_value())
        throw theorem_violation("classify_nwedge: equality and AP structure disagree");

    if (equality && ap) return NwedgeAp{ap->start, ap->diff, ap->len};
    if (equality) return NotExtremal{"bound attained outside the theorem range; not an AP"};
    return NotExtremal{slack_reason(actual - bound.value)};
}

IntegerSet reconstruct(const StructureForm& form) {
    struct Visitor {
        IntegerSet operator()(const S2CaseI& f) const {
            if (f.d < 1 || f.c == f.d || f.c == -f.d)
                throw std::invalid_argument("reconstruct: case (i) needs d >= 1, |c| != d");
            return IntegerSet({f.c, f.d, -f.d});
        }
        IntegerSet operator()(const S2CaseII& f) const {
            if (f.c < 1 || f.d <= f.c)
                throw std::invalid_argument("reconstruct: case (ii) needs 0 < c < d");
            return IntegerSet({f.c, -f.c, f.d, -f.d});
        }
        IntegerSet operator()(const S2CaseIII& f) const {
            if (f.d < 1 || f.c == 0 || f.c == 2 * f.d || f.c == -2 * f.d)
                throw std::invalid_argument("reconstruct: case (iii) needs d >= 1, c != 0, +-2d");
            return IntegerSet({f.d, -f.d, f.c - f.d, f.c + f.d});
        }
        IntegerSet operator()(const S2CaseIV& f) const {
            if (f.d < 1 || f.s > -1 || f.t < 1 || f.t - f.s < 4)
                throw std::invalid_argument("reconstruct: case (iv) parameter constraints violated");
            std::vector<std::int64_t> e;
            for (std::int64_t r = f.s; r <= f.t; ++r) e.push_back(r * f.d);
            return IntegerSet(std::move(e));
        }
        IntegerSet operator()(const S2CaseV& f) const {
            if (f.d < 1 || f.s > 0 || f.t < 1 || f.t - f.s < 4)
                throw std::invalid_argument("reconstruct: case (v) parameter constraints violated");
            std::vector<std::int64_t> e;
            for (std::int64_t r = f.s; r <= f.t; ++r) e.push_back((2 * r - 1) * f.d);
            return IntegerSet(std::move(e));
        }
        IntegerSet operator()(const SnOdd& f) const {
            if (f.n < 3 || f.b < 1 || f.d < 1 || (f.n > 3 && f.b != f.d))
                throw std::invalid_argument("reconstruct: odd family parameter constraints violated");
            std::vector<std::int64_t> e = {f.c, f.d, -f.d};
            for (int j = 1; j <= f.n - 2; ++j) {
                e.push_back(f.b + j * f.d);
                e.push_back(-(f.b + j * f.d));
            }
            IntegerSet out{std::move(e)}; // ctor rejects a colliding c
            if (out.size() != 2 * std::size_t(f.n) - 1)
                throw std::invalid_argument("reconstruct: odd family degenerate");
            return out;
        }
        IntegerSet operator()(const SnEven& f) const {
            if (f.n < 3 || f.b < 1 || f.d < 1 || (f.n > 3 && f.b != f.d))
                throw std::invalid_argument("reconstruct: even family parameter constraints violated");
            std::vector<std::int64_t> e = {f.d, -f.d};
            for (int j = 1; j <= f.n - 1; ++j) {
                e.push_back(f.b + j * f.d);
                e.push_back(-(f.b + j * f.d));
            }
            return IntegerSet(std::move(e));
        }
        IntegerSet operator()(const NwedgeAp& f) const {
            if (f.len < 1 || (f.len > 1 && f.diff < 1))
                throw std::invalid_argument("reconstruct: AP parameter constraints violated");
            std::vector<std::int64_t> e;
            for (std::int64_t i = 0; i < f.len; ++i) e.push_back(f.start + i * f.diff);
            return IntegerSet(std::move(e));
        }
        IntegerSet operator()(const NotExtremal&) const {
            throw std::invalid_argument("reconstruct: nothing to rebuild from NotExtremal");
        }
    };
    return std::visit(Visitor{}, form);
}

} // namespace sumsets
