// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected values are frozen from hand enumeration and the naive
// oracle; sweeps run through the harness campaigns.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "sumsets/bounds.hpp"
#include "sumsets/core.hpp"
#include "sumsets/harness.hpp"
#include "sumsets/modular.hpp"
#include "sumsets/proofkit.hpp"
#include "sumsets/structure.hpp"

using namespace sumsets;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int id, const char* name, bool ok, double ms, const std::string& note = "") {
    std::printf("[%s] criterion %2d: %-28s (%9.1f ms)%s%s\n", ok ? "PASS" : "FAIL", id, name,
                ms, note.empty() ? "" : " ", note.c_str());
    if (!ok) ++failures;
}

IntegerSet S(std::vector<std::int64_t> v) { return IntegerSet{std::move(v)}; }

IntegerSet full_symmetric(int n) {
    std::vector<std::int64_t> e;
    for (int i = 1; i <= n; ++i) {
        e.push_back(i);
        e.push_back(-i);
    }
    return IntegerSet{e};
}

IntegerSet random_set(std::mt19937_64& rng, int max_size, int max_abs) {
    std::uniform_int_distribution<int> size_dist(1, max_size);
    std::uniform_int_distribution<std::int64_t> val_dist(-max_abs, max_abs);
    int target = size_dist(rng);
    std::vector<std::int64_t> vals;
    while (int(vals.size()) < target) {
        std::int64_t v = val_dist(rng);
        bool dup = false;
        for (std::int64_t e : vals) dup |= e == v;
        if (!dup) vals.push_back(v);
    }
    return IntegerSet{vals};
}

// Families obeying the size ladder |A_{i+1}| - |A_i| in {0,1}, |A_n| = k,
// with k > m(n-1) so the generalized bound applies.
struct FamilyInstance {
    std::vector<IntegerSet> families;
    MonicPolynomial poly{std::vector<std::int64_t>{0, 1}};
    int n = 0;
    std::int64_t k = 0;
    int m = 0;
};

FamilyInstance random_family_instance(std::mt19937_64& rng) {
    FamilyInstance inst;
    inst.n = 2 + int(rng() % 3);
    inst.m = 1 + int(rng() % 3);
    inst.k = std::int64_t(inst.m) * (inst.n - 1) + 1 + std::int64_t(rng() % 3);

    std::vector<std::int64_t> sizes(std::size_t(inst.n));
    sizes.back() = inst.k;
    for (int i = inst.n - 2; i >= 0; --i)
        sizes[std::size_t(i)] = std::max<std::int64_t>(1, sizes[std::size_t(i) + 1] -
                                                              std::int64_t(rng() % 2));
    std::uniform_int_distribution<std::int64_t> val_dist(-12, 12);
    for (std::int64_t sz : sizes) {
        std::vector<std::int64_t> vals;
        while (std::int64_t(vals.size()) < sz) {
            std::int64_t v = val_dist(rng);
            bool dup = false;
            for (std::int64_t e : vals) dup |= e == v;
            if (!dup) vals.push_back(v);
        }
        inst.families.push_back(IntegerSet{vals});
    }
    std::vector<std::int64_t> coeffs(std::size_t(inst.m) + 1, 0);
    for (int d = 0; d < inst.m; ++d) coeffs[std::size_t(d)] = std::int64_t(rng() % 9) - 4;
    coeffs.back() = 1;
    inst.poly = MonicPolynomial{coeffs};
    return inst;
}

// --------------------------------------------------------------------------

void criterion_1() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string note;

    struct Golden {
        std::vector<std::int64_t> set;
        std::vector<std::int64_t> expect;
        std::int64_t bound;
    };
    const Golden goldens[] = {
        {{-1, 1, -4, 4, 6}, {1, 3, 9, 11}, 4},
        {{-1, 1, -3, 3, -4, 4}, {-8, -6, -2, 0, 2, 6, 8}, 7},
        {{-1, 1, -3, 3, -5, 5, 7}, {-9, -7, -3, -1, 1, 3, 5, 7, 9, 11, 13, 15}, 10},
    };
    for (const Golden& g : goldens) {
        auto c0 = Clock::now();
        SumSet s = restricted_sumset(S(g.set), 3);
        double elapsed = ms_since(c0);
        ok &= s.values() == g.expect;
        ok &= sn_bound(3, std::int64_t(g.set.size())).value == g.bound;
        if (elapsed >= 1.0) {
            ok = false;
            note = "a golden computation took " + std::to_string(elapsed) + " ms";
        }
    }
    // Example 1.2 is strict: cardinality 12 against bound 10.
    ok &= restricted_sumset(S({-1, 1, -3, 3, -5, 5, 7}), 3).cardinality() == 12;
    report(1, "golden examples", ok, ms_since(t0), note);
}

void criterion_2() {
    auto t0 = Clock::now();
    bool ok = true;
    for (int n = 4; n <= 8; ++n) {
        std::int64_t peak = std::int64_t(n) * (n + 1) / 2;
        SumSet s = restricted_sumset(full_symmetric(n), n);
        ok &= std::int64_t(s.cardinality()) == peak + 1;
        std::vector<std::int64_t> expect;
        for (std::int64_t v = -peak; v <= peak; v += 2) expect.push_back(v);
        ok &= s.values() == expect;
    }
    double ms = ms_since(t0);
    report(2, "full-symmetric family", ok && ms < 1000.0, ms);
}

void criterion_3() {
    auto t0 = Clock::now();
    bool ok = true;
    std::mt19937_64 rng(20260811);
    for (int iter = 0; iter < 10000 && ok; ++iter) {
        IntegerSet a = random_set(rng, 10, 12);
        int n = 1 + int(rng() % 4);
        ok &= restricted_sumset(a, n) == brute_oracle(a, n, Constraint::squares);
        if (n <= int(a.size()))
            ok &= distinct_sumset(a, n) == brute_oracle(a, n, Constraint::distinct);
    }
    std::mt19937_64 frng(624785);
    for (int iter = 0; iter < 2000 && ok; ++iter) {
        FamilyInstance inst = random_family_instance(frng);
        ok &= generalized_sumset(inst.families, inst.poly) ==
              brute_oracle(inst.families, inst.poly);
    }
    double ms = ms_since(t0);
    report(3, "oracle equivalence", ok && ms < 30000.0, ms);
}

void criterion_4() {
    auto t0 = Clock::now();
    bool ok = true;

    // The random instances of criterion 3, replayed against the bounds.
    std::mt19937_64 rng(20260811);
    for (int iter = 0; iter < 10000 && ok; ++iter) {
        IntegerSet a = random_set(rng, 10, 12);
        int n = 1 + int(rng() % 4);
        std::int64_t k = std::int64_t(a.size());
        Bound nw = nwedge_bound(n, k);
        if (nw.applicable)
            ok &= std::int64_t(distinct_sumset(a, n).cardinality()) >= nw.value;
        Bound sq = sn_bound(n, k);
        if (sq.applicable)
            ok &= std::int64_t(restricted_sumset(a, n).cardinality()) >= sq.value;
    }
    std::mt19937_64 frng(624785);
    for (int iter = 0; iter < 2000 && ok; ++iter) {
        FamilyInstance inst = random_family_instance(frng);
        Bound K = liu_sun_K(inst.n, inst.k, inst.m);
        if (!K.applicable) {
            ok = false; // the generator must respect the hypothesis
            break;
        }
        ok &= std::int64_t(generalized_sumset(inst.families, inst.poly).cardinality()) >=
              K.value + 1;
    }

    // A dedicated harness sweep of the squares bound.
    CampaignSpec spec;
    spec.theorem = TheoremId::ls_bound;
    spec.n_lo = 2;
    spec.n_hi = 3;
    spec.k_lo = 3;
    spec.k_hi = 7;
    spec.max_abs = 4;
    CampaignReport sweep = run_campaign(spec);
    ok &= !sweep.falsified();

    report(4, "bound sweeps", ok, ms_since(t0));
}

void criterion_5() {
    auto t0 = Clock::now();
    CampaignSpec spec;
    spec.theorem = TheoremId::inverse_n2;
    spec.n_lo = spec.n_hi = 2;
    spec.k_lo = 3;
    spec.k_hi = 6;
    spec.max_abs = 7;
    CampaignReport report_n2 = run_campaign(spec);

    bool ok = !report_n2.falsified();
    ok &= report_n2.sets_examined == enumeration_count(3, 7) + enumeration_count(4, 7) +
                                         enumeration_count(5, 7) + enumeration_count(6, 7);
    ok &= report_n2.equality_hits > 0;
    for (const WitnessRecord& w : report_n2.witnesses) {
        if (!w.form || !accepted(*w.form)) ok = false;
        else ok &= reconstruct(*w.form).elements() == w.canonical;
    }
    double ms = ms_since(t0);
    report(5, "inverse n=2 campaign", ok && ms < 120000.0, ms);
}

void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    for (TheoremId id : {TheoremId::inverse_odd, TheoremId::inverse_even}) {
        CampaignSpec spec;
        spec.theorem = id;
        spec.n_lo = spec.n_hi = 3;
        spec.max_abs = 6;
        CampaignReport r = run_campaign(spec);
        ok &= !r.falsified(); // includes the sign-count check on every hit
        ok &= r.equality_hits > 0;
        std::uint64_t k = id == TheoremId::inverse_odd ? 5 : 6;
        ok &= r.sets_examined == enumeration_count(int(k), 6);
        for (const WitnessRecord& w : r.witnesses) {
            if (!w.form) { ok = false; continue; }
            ok &= tag_of(*w.form) == (id == TheoremId::inverse_odd ? "sn_odd" : "sn_even");
        }
    }
    double ms = ms_since(t0);
    report(6, "inverse n=3 campaigns", ok && ms < 120000.0, ms);
}

void criterion_7() {
    auto t0 = Clock::now();
    CampaignSpec spec;
    spec.theorem = TheoremId::strict;
    spec.n_lo = spec.n_hi = 3;
    spec.k_lo = spec.k_hi = 7;
    spec.max_abs = 6;
    CampaignReport r = run_campaign(spec);
    bool ok = !r.falsified() && r.sets_examined == enumeration_count(7, 6);
    double ms = ms_since(t0);
    report(7, "strictness campaign", ok && ms < 60000.0, ms);
}

void criterion_8() {
    auto t0 = Clock::now();
    CampaignSpec spec;
    spec.theorem = TheoremId::nathanson;
    spec.n_lo = 2;
    spec.n_hi = 4;
    spec.k_lo = 5;
    spec.k_hi = 6;
    spec.max_abs = 10;
    CampaignReport r = run_campaign(spec);
    bool ok = !r.falsified() && r.equality_hits > 0;
    for (const WitnessRecord& w : r.witnesses)
        ok &= w.form && tag_of(*w.form) == "nwedge_ap";
    double ms = ms_since(t0);
    report(8, "nathanson campaign", ok && ms < 120000.0, ms);
}

void criterion_9() {
    auto t0 = Clock::now();
    bool ok = true;

    auto list = descending_list(S({-4, -1, 1, 4, 6}), 3);
    ok &= list.has_value() && *list == std::vector<std::int64_t>({11, 9, 3, 1});
    if (list) {
        SumSet sn = restricted_sumset(S({-4, -1, 1, 4, 6}), 3);
        std::vector<std::int64_t> ascending(list->rbegin(), list->rend());
        ok &= ascending == sn.values();
    }

    // select_u monotonicity over randomized nonnegative working sets
    std::mt19937_64 rng(161803);
    for (int iter = 0; iter < 4000 && ok; ++iter) {
        std::vector<std::int64_t> vals;
        std::int64_t v = std::int64_t(rng() % 3);
        while (vals.size() < 2 + rng() % 6) {
            vals.push_back(v);
            v += 1 + std::int64_t(rng() % 4);
        }
        IntegerSet s{vals};
        std::int64_t x = -1 - std::int64_t(rng() % 25);
        std::int64_t y = x + 1 + std::int64_t(rng() % 12);
        if (y >= 0 || s.contains(x) || s.contains(y)) continue;
        ok &= select_u(s, x) >= select_u(s, y);
    }

    // lemma witness grid: b,d in [1,3], n in {3,4,5}, both parts, valid c
    CampaignSpec spec;
    spec.theorem = TheoremId::lemma_witness;
    spec.n_lo = 3;
    spec.n_hi = 5;
    spec.k_lo = 1;
    spec.k_hi = 3;
    spec.max_abs = 3;
    CampaignReport r = run_campaign(spec);
    ok &= !r.falsified();
    ok &= r.equality_hits == r.sets_examined; // every instance produced a witness
    ok &= r.sets_examined > 500;

    // direct interval check on a subgrid
    for (int n = 3; n <= 5 && ok; ++n) {
        for (std::int64_t b = 1; b <= 3; ++b) {
            for (std::int64_t d = 1; d <= 3; ++d) {
                std::int64_t top = b + std::int64_t(n - 1) * d;
                std::vector<std::int64_t> e = {top + 2, d, -d};
                for (int j = 1; j <= n - 1; ++j) {
                    e.push_back(b + j * d);
                    e.push_back(-(b + j * d));
                }
                IntegerSet a{e};
                WitnessInterval iv = witness_interval(a, top + 2, LemmaForm::lemma_ii);
                std::int64_t w = find_witness(a, top + 2, LemmaForm::lemma_ii);
                ok &= iv.lo < w && w < iv.hi;
                std::vector<std::int64_t> nonneg;
                for (std::int64_t x : a.elements())
                    if (x >= 0) nonneg.push_back(x);
                ok &= !distinct_sumset(IntegerSet{nonneg}, n).contains(w);
            }
        }
    }
    double ms = ms_since(t0);
    report(9, "proofkit machinery", ok && ms < 30000.0, ms);
}

void criterion_10() {
    auto t0 = Clock::now();
    bool ok = true;

    CampaignSpec spec;
    spec.theorem = TheoremId::balandraud;
    spec.k_lo = 5;
    spec.k_hi = 13;
    CampaignReport r = run_campaign(spec);
    ok &= !r.falsified();
    ok &= r.sets_examined > 0;

    // closed form vs integer search for every prime below 10^6
    std::int64_t limit = 1000000;
    std::vector<bool> composite(std::size_t(limit), false);
    std::int64_t expected_k = 0;
    for (std::int64_t p = 2; p < limit && ok; ++p) {
        if (composite[std::size_t(p)]) continue;
        for (std::int64_t q = p * p; q < limit; q += p) composite[std::size_t(q)] = true;
        while ((expected_k + 1) * (expected_k + 2) / 2 < p) ++expected_k;
        // expected_k is now max{k : k(k+1)/2 < p} for this monotone sweep
        std::int64_t radicand = 8 * p - 7;
        std::int64_t root = std::int64_t(std::sqrt(double(radicand))) + 2;
        while (root * root > radicand) --root;
        ok &= (root - 1) / 2 == expected_k;
        ok &= erdos_selfridge_max(p) == expected_k;
    }

    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31})
        ok &= erdos_selfridge_max(p, true) == erdos_selfridge_max(p);

    double ms = ms_since(t0);
    report(10, "modular criteria", ok && ms < 180000.0, ms);
}

void criterion_11() {
    auto t0 = Clock::now();
    bool ok = true;
    auto run_with = [](TheoremId id, int workers) {
        CampaignSpec spec;
        spec.theorem = id;
        spec.workers = workers;
        if (id == TheoremId::strict) {
            spec.n_lo = spec.n_hi = 3;
            spec.k_lo = spec.k_hi = 7;
            spec.max_abs = 5;
        } else {
            spec.n_lo = spec.n_hi = 3;
            spec.max_abs = 5;
        }
        return run_campaign(spec);
    };
    for (TheoremId id : {TheoremId::inverse_odd, TheoremId::strict}) {
        CampaignReport one = run_with(id, 1);
        CampaignReport two = run_with(id, 2);
        CampaignReport eight = run_with(id, 8);
        ok &= one.to_jsonl(false) == two.to_jsonl(false);
        ok &= one.to_jsonl(false) == eight.to_jsonl(false);
        ok &= one.to_csv(false) == eight.to_csv(false);
    }
    report(11, "report determinism", ok, ms_since(t0));
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
