#include "sumsets/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "sumsets/bounds.hpp"
#include "sumsets/core.hpp"
#include "sumsets/errors.hpp"
#include "sumsets/json_io.hpp"
#include "sumsets/modular.hpp"
#include "sumsets/proofkit.hpp"

namespace sumsets {
namespace {

constexpr std::uint64_t kCountCap = std::uint64_t(1) << 62;

// Exact C(n, k), saturating at 2^62.
std::uint64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (unsigned __int128)(n - k + i) / (unsigned __int128)i;
        if (r > kCountCap) return kCountCap;
    }
    return std::uint64_t(r);
}

// Lexicographically first combination of the given rank: sorted index vectors
// over [0, universe).
std::vector<int> combination_from_rank(int universe, int k, std::uint64_t rank) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    int v = 0;
    for (int pos = 0; pos < k; ++pos) {
        for (;; ++v) {
            std::uint64_t block = binom(universe - 1 - v, k - 1 - pos);
            if (rank < block) {
                idx[std::size_t(pos)] = v++;
                break;
            }
            rank -= block;
        }
    }
    return idx;
}

bool next_combination(std::vector<int>& c, int universe) {
    int k = int(c.size());
    int i = k - 1;
    while (i >= 0 && c[std::size_t(i)] == universe - k + i) --i;
    if (i < 0) return false;
    ++c[std::size_t(i)];
    for (int j = i + 1; j < k; ++j) c[std::size_t(j)] = c[std::size_t(j - 1)] + 1;
    return true;
}

struct Accum {
    std::uint64_t sets = 0;
    std::uint64_t hits = 0;
    std::vector<WitnessRecord> witnesses;
    std::vector<CounterexampleRecord> counterexamples;
};

void merge_into(Accum& into, Accum&& from) {
    into.sets += from.sets;
    into.hits += from.hits;
    std::move(from.witnesses.begin(), from.witnesses.end(),
              std::back_inserter(into.witnesses));
    std::move(from.counterexamples.begin(), from.counterexamples.end(),
              std::back_inserter(into.counterexamples));
}

using SetEval = std::function<void(const IntegerSet&, Accum&)>;

// Sweeps every k-subset of the universe, sharded by combination rank.
// Results are merged in shard order, so the outcome is independent of the
// worker count.
void parallel_sweep(std::uint64_t total, int universe, int k,
                    const std::function<std::int64_t(int)>& value_of, int workers,
                    const SetEval& eval, Accum& accum) {
    workers = std::clamp(workers, 1, 64);
    std::vector<Accum> parts(static_cast<std::size_t>(workers));
    auto run_shard = [&](int w) {
        std::uint64_t lo = total * std::uint64_t(w) / std::uint64_t(workers);
        std::uint64_t hi = total * std::uint64_t(w + 1) / std::uint64_t(workers);
        if (lo >= hi) return;
        std::vector<int> idx = combination_from_rank(universe, k, lo);
        std::vector<std::int64_t> elems(static_cast<std::size_t>(k));
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            for (int i = 0; i < k; ++i)
                elems[std::size_t(i)] = value_of(idx[std::size_t(i)]);
            IntegerSet a{elems};
            parts[std::size_t(w)].sets += 1;
            eval(a, parts[std::size_t(w)]);
            if (rank + 1 < hi) next_combination(idx, universe);
        }
    };
    if (workers == 1) {
        run_shard(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run_shard, w);
        for (auto& t : pool) t.join();
    }
    for (auto& part : parts) merge_into(accum, std::move(part));
}

void sweep_full(int k, std::int64_t max_abs, const CampaignSpec& spec,
                const SetEval& eval, Accum& accum) {
    std::uint64_t total = enumeration_count(k, max_abs);
    if (total > spec.budget) {
        std::ostringstream os;
        os << "enumeration refused: C(" << 2 * max_abs + 1 << "," << k << ") = " << total
           << " exceeds budget " << spec.budget;
        throw std::invalid_argument(os.str());
    }
    parallel_sweep(total, int(2 * max_abs + 1), k,
                   [max_abs](int i) { return std::int64_t(i) - max_abs; }, spec.workers,
                   eval, accum);
}

// Pinned variant for translation-covariant campaigns: k-subsets of [0, M]
// that contain 0, i.e. {0} plus a (k-1)-subset of [1, M].
void sweep_pinned(int k, std::int64_t max_value, const CampaignSpec& spec,
                  const SetEval& eval, Accum& accum) {
    std::uint64_t total = binom(max_value, k - 1);
    if (total > spec.budget) {
        std::ostringstream os;
        os << "enumeration refused: C(" << max_value << "," << k - 1 << ") = " << total
           << " exceeds budget " << spec.budget;
        throw std::invalid_argument(os.str());
    }
    // Enumerate (k-1)-subsets of [1, M]; index i maps to i+1; 0 is prepended
    // through the eval wrapper below.
    SetEval wrapped = [&eval](const IntegerSet& tail, Accum& acc) {
        std::vector<std::int64_t> elems = tail.elements();
        elems.insert(elems.begin(), 0);
        eval(IntegerSet{elems}, acc);
    };
    parallel_sweep(total, int(max_value), k - 1,
                   [](int i) { return std::int64_t(i) + 1; }, spec.workers, wrapped, accum);
}

WitnessRecord make_witness(const IntegerSet& a, int n, std::int64_t actual,
                           std::int64_t bound, std::optional<StructureForm> form,
                           std::string detail = {}) {
    WitnessRecord w;
    w.n = n;
    w.k = std::int64_t(a.size());
    w.set = a.elements();
    w.canonical = canonicalize(a).elements();
    w.actual = actual;
    w.bound = bound;
    w.form = std::move(form);
    w.detail = std::move(detail);
    return w;
}

CounterexampleRecord make_counterexample(const IntegerSet& a, int n, std::string detail) {
    CounterexampleRecord c;
    c.n = n;
    c.k = std::int64_t(a.size());
    c.set = a.elements();
    c.detail = std::move(detail);
    return c;
}

void finish_records(CampaignReport& report) {
    auto wkey = [](const WitnessRecord& w) {
        return std::tie(w.n, w.k, w.canonical, w.detail);
    };
    std::sort(report.witnesses.begin(), report.witnesses.end(),
              [&](const WitnessRecord& x, const WitnessRecord& y) { return wkey(x) < wkey(y); });
    report.witnesses.erase(
        std::unique(report.witnesses.begin(), report.witnesses.end(),
                    [&](const WitnessRecord& x, const WitnessRecord& y) {
                        return std::tie(x.n, x.k, x.canonical) ==
                               std::tie(y.n, y.k, y.canonical);
                    }),
        report.witnesses.end());
    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const CounterexampleRecord& x, const CounterexampleRecord& y) {
                  return std::tie(x.n, x.k, x.set, x.detail) <
                         std::tie(y.n, y.k, y.set, y.detail);
              });
}

void append_accum(CampaignReport& report, Accum&& acc) {
    report.sets_examined += acc.sets;
    report.equality_hits += acc.hits;
    std::move(acc.witnesses.begin(), acc.witnesses.end(),
              std::back_inserter(report.witnesses));
    std::move(acc.counterexamples.begin(), acc.counterexamples.end(),
              std::back_inserter(report.counterexamples));
}

// ---------------------------------------------------------------------------
// Per-theorem evaluators
// ---------------------------------------------------------------------------

void run_ls_bound(const CampaignSpec& spec, CampaignReport& report) {
    for (int n = spec.n_lo; n <= spec.n_hi; ++n) {
        for (std::int64_t k = std::max<std::int64_t>(spec.k_lo, 2 * n - 1); k <= spec.k_hi; ++k) {
            Bound bound = sn_bound(n, k);
            Accum acc;
            SetEval eval = [&](const IntegerSet& a, Accum& out) {
                std::int64_t actual = std::int64_t(restricted_sumset(a, n).cardinality());
                if (actual < bound.value) {
                    out.counterexamples.push_back(make_counterexample(
                        a, n, "cardinality " + std::to_string(actual) + " below bound " +
                                  std::to_string(bound.value)));
                    return;
                }
                if (actual == bound.value) {
                    out.hits += 1;
                    out.witnesses.push_back(make_witness(a, n, actual, bound.value, std::nullopt));
                }
            };
            sweep_full(int(k), spec.max_abs, spec, eval, acc);
            append_accum(report, std::move(acc));
        }
    }
}

void run_nathanson(const CampaignSpec& spec, CampaignReport& report) {
    for (std::int64_t k = spec.k_lo; k <= spec.k_hi; ++k) {
        int n_hi = int(std::min<std::int64_t>(spec.n_hi, k - 2));
        for (int n = std::max(2, spec.n_lo); n <= n_hi; ++n) {
            Bound bound = nwedge_bound(n, k);
            Accum acc;
            SetEval eval = [&](const IntegerSet& a, Accum& out) {
                std::int64_t actual = std::int64_t(distinct_sumset(a, n).cardinality());
                if (actual < bound.value) {
                    out.counterexamples.push_back(make_counterexample(
                        a, n, "cardinality below the distinct-sum bound"));
                    return;
                }
                bool equality = actual == bound.value;
                auto ap = is_arithmetic_progression(a);
                if (!spec.survey && k >= 5 && equality != ap.has_value()) {
                    out.counterexamples.push_back(make_counterexample(
                        a, n,
                        equality ? "bound attained by a non-AP" : "AP missing the bound"));
                    return;
                }
                if (equality) {
                    out.hits += 1;
                    std::optional<StructureForm> form;
                    if (ap) form = NwedgeAp{ap->start, ap->diff, ap->len};
                    else form = NotExtremal{"not an AP"};
                    out.witnesses.push_back(make_witness(a, n, actual, bound.value, form));
                }
            };
            sweep_pinned(int(k), spec.max_abs, spec, eval, acc);
            append_accum(report, std::move(acc));
        }
    }
}

// Shared body for the three inverse campaigns over restricted sumsets.
void run_inverse(const CampaignSpec& spec, CampaignReport& report, int n, std::int64_t k) {
    Bound bound = sn_bound(n, k);
    Accum acc;
    SetEval eval = [&](const IntegerSet& a, Accum& out) {
        std::int64_t actual = std::int64_t(restricted_sumset(a, n).cardinality());
        if (actual < bound.value) {
            out.counterexamples.push_back(
                make_counterexample(a, n, "cardinality below the bound"));
            return;
        }
        bool equality = actual == bound.value;
        StructureForm form = NotExtremal{"unclassified"};
        bool classifier_threw = false;
        try {
            form = n == 2 ? classify_s2(a) : classify_sn(a, n);
        } catch (const theorem_violation& e) {
            out.counterexamples.push_back(make_counterexample(a, n, e.what()));
            classifier_threw = true;
        }
        if (!classifier_threw && !spec.survey && equality != accepted(form)) {
            out.counterexamples.push_back(make_counterexample(
                a, n,
                equality ? "bound attained but classifier rejected (" +
                               std::get<NotExtremal>(form).reason + ")"
                         : "classifier accepted a non-extremal set"));
        }
        if (equality) {
            out.hits += 1;
            // Witness forms are taken on the canonical representative so
            // deduplicated records stay self-consistent.
            IntegerSet canon = canonicalize(a);
            StructureForm canon_form = NotExtremal{"unclassified"};
            try {
                canon_form = n == 2 ? classify_s2(canon) : classify_sn(canon, n);
            } catch (const theorem_violation& e) {
                canon_form = NotExtremal{std::string("violation: ") + e.what()};
            }
            if (!spec.survey && accepted(canon_form)) {
                IntegerSet rebuilt = reconstruct(canon_form);
                if (!(rebuilt == canon))
                    out.counterexamples.push_back(
                        make_counterexample(a, n, "classifier round-trip failed"));
            }
            if (n >= 3 && !spec.survey) {
                auto signs = sign_count_check(a, n);
                if (!signs.has_value() || !*signs)
                    out.counterexamples.push_back(
                        make_counterexample(a, n, "sign-count lemma failed"));
            }
            out.witnesses.push_back(
                make_witness(canon, n, actual, bound.value, canon_form));
        }
    };
    sweep_full(int(k), spec.max_abs, spec, eval, acc);
    append_accum(report, std::move(acc));
}

void run_strict(const CampaignSpec& spec, CampaignReport& report) {
    for (int n = std::max(3, spec.n_lo); n <= spec.n_hi; ++n) {
        std::int64_t k_lo = std::max<std::int64_t>(spec.k_lo, 2 * n + 1);
        for (std::int64_t k = k_lo; k <= spec.k_hi; ++k) {
            Bound bound = sn_bound(n, k);
            Accum acc;
            SetEval eval = [&](const IntegerSet& a, Accum& out) {
                std::int64_t actual = std::int64_t(restricted_sumset(a, n).cardinality());
                if (actual - bound.value < 1)
                    out.counterexamples.push_back(make_counterexample(
                        a, n, "slack " + std::to_string(actual - bound.value) +
                                  " in the strict regime"));
            };
            sweep_full(int(k), spec.max_abs, spec, eval, acc);
            append_accum(report, std::move(acc));
        }
    }
}

void run_lemma_signs(const CampaignSpec& spec, CampaignReport& report) {
    for (int n = std::max(3, spec.n_lo); n <= spec.n_hi; ++n) {
        std::int64_t k_lo = std::max<std::int64_t>(spec.k_lo, 2 * n - 1);
        for (std::int64_t k = k_lo; k <= spec.k_hi; ++k) {
            Bound bound = sn_bound(n, k);
            Accum acc;
            SetEval eval = [&](const IntegerSet& a, Accum& out) {
                std::int64_t actual = std::int64_t(restricted_sumset(a, n).cardinality());
                if (actual < bound.value) {
                    out.counterexamples.push_back(
                        make_counterexample(a, n, "cardinality below the bound"));
                    return;
                }
                if (actual != bound.value) return;
                out.hits += 1;
                std::string census = "negatives=" + std::to_string(a.count_negative()) +
                                     " positives=" + std::to_string(a.count_positive());
                if (a.count_negative() < std::size_t(n) - 1 ||
                    a.count_positive() < std::size_t(n) - 1) {
                    out.counterexamples.push_back(
                        make_counterexample(a, n, "sign census too small: " + census));
                    return;
                }
                out.witnesses.push_back(
                    make_witness(a, n, actual, bound.value, std::nullopt, census));
            };
            sweep_full(int(k), spec.max_abs, spec, eval, acc);
            append_accum(report, std::move(acc));
        }
    }
}

// Deterministic lemma-form instance grid: b, d in [1, max_abs], outlier
// offsets from the k range, both lemma parts.
void run_lemma_witness(const CampaignSpec& spec, CampaignReport& report) {
    std::int64_t grid = std::max<std::int64_t>(1, spec.max_abs);
    std::int64_t off_lo = std::max<std::int64_t>(1, spec.k_lo);
    std::int64_t off_hi = std::max(off_lo, spec.k_hi);

    struct Instance {
        IntegerSet a;
        std::int64_t c;
        LemmaForm mode;
        int n;
        std::int64_t b, d;
    };
    std::vector<Instance> instances;

    for (int n = std::max(3, spec.n_lo); n <= spec.n_hi; ++n) {
        for (std::int64_t b = 1; b <= grid; ++b) {
            for (std::int64_t d = 1; d <= grid; ++d) {
                // part (ii): {c, +-d} U {+-(b+jd): j=1..n-1}, c > b+(n-1)d
                std::int64_t top2 = b + std::int64_t(n - 1) * d;
                for (std::int64_t off = off_lo; off <= off_hi; ++off) {
                    std::vector<std::int64_t> e = {top2 + off, d, -d};
                    for (int j = 1; j <= n - 1; ++j) {
                        e.push_back(b + j * d);
                        e.push_back(-(b + j * d));
                    }
                    instances.push_back(
                        {IntegerSet{e}, top2 + off, LemmaForm::lemma_ii, n, b, d});
                }
                // part (i): {c1, c2, +-d} U {+-(b+jd): j=1..n-2},
                // c1 < b+(n-2)d <= c2
                std::int64_t top1 = b + std::int64_t(n - 2) * d;
                std::vector<std::int64_t> pairs = {d, -d};
                for (int j = 1; j <= n - 2; ++j) {
                    pairs.push_back(b + j * d);
                    pairs.push_back(-(b + j * d));
                }
                for (std::int64_t off = off_lo; off <= off_hi; ++off) {
                    std::int64_t c2 = top1 + off;
                    for (std::int64_t c1 = -(top1 + 2); c1 < top1; ++c1) {
                        if (c1 == -c2) continue;
                        bool collides = false;
                        for (std::int64_t q : pairs)
                            if (q == c1) collides = true;
                        if (collides) continue;
                        std::vector<std::int64_t> e = pairs;
                        e.push_back(c1);
                        e.push_back(c2);
                        instances.push_back(
                            {IntegerSet{e}, c2, LemmaForm::lemma_i, n, b, d});
                    }
                }
            }
        }
    }

    for (const Instance& inst : instances) {
        report.sets_examined += 1;
        try {
            WitnessInterval iv = witness_interval(inst.a, inst.c, inst.mode);
            std::int64_t w = find_witness(inst.a, inst.c, inst.mode);
            report.equality_hits += 1;
            std::ostringstream detail;
            detail << (inst.mode == LemmaForm::lemma_i ? "lemma_i" : "lemma_ii") << " w=" << w
                   << " interval=(" << iv.lo << "," << iv.hi << ")";
            // Record whether the explicit witness expression for the
            // b = d, c = (n+2)d instance of part (ii) matches the minimal
            // witness found by search (only unambiguous for n >= 4).
            if (inst.mode == LemmaForm::lemma_ii && inst.n >= 4 && inst.b == inst.d &&
                inst.c == (inst.n + 2) * inst.d) {
                std::int64_t formula =
                    inst.d * (std::int64_t(inst.n) * (inst.n + 1) / 2 - 1);
                detail << " formula=" << formula << " formula_match=" << (formula == w);
            }
            WitnessRecord rec;
            rec.n = inst.n;
            rec.k = std::int64_t(inst.a.size());
            rec.set = inst.a.elements();
            rec.canonical = canonicalize(inst.a).elements();
            rec.actual = w;
            rec.bound = 0;
            rec.detail = detail.str();
            report.witnesses.push_back(std::move(rec));
        } catch (const theorem_violation& e) {
            report.counterexamples.push_back(
                make_counterexample(inst.a, inst.n, e.what()));
        }
    }
}

// Every nonempty pair-sum-free subset of Z/pZ, enumerated by choosing
// none/low/high from each pair {a, p-a}.
void run_balandraud(const CampaignSpec& spec, CampaignReport& report) {
    for (std::int64_t p = std::max<std::int64_t>(3, spec.k_lo); p <= spec.k_hi; ++p) {
        if (!is_prime(p)) continue;
        std::int64_t half = (p - 1) / 2;
        std::vector<std::int64_t> picked;
        auto rec = [&](auto&& self, std::int64_t a) -> void {
            if (a > half) {
                if (picked.empty()) return;
                report.sets_examined += 1;
                ResidueSet rs(p, picked);
                BoundReport br = check_balandraud(rs);
                if (br.actual < br.bound) {
                    CounterexampleRecord c;
                    c.n = int(rs.size());
                    c.k = p;
                    c.set = rs.elements();
                    c.detail = "subset-sum count below min(p, k(k+1)/2)";
                    report.counterexamples.push_back(std::move(c));
                } else if (br.equality) {
                    report.equality_hits += 1;
                    WitnessRecord w;
                    w.n = int(rs.size());
                    w.k = p;
                    w.set = rs.elements();
                    w.canonical = rs.elements();
                    w.actual = br.actual;
                    w.bound = br.bound;
                    report.witnesses.push_back(std::move(w));
                }
                return;
            }
            self(self, a + 1);
            picked.push_back(a);
            self(self, a + 1);
            picked.back() = p - a;
            self(self, a + 1);
            picked.pop_back();
        };
        rec(rec, 1);
    }
}

void run_selfridge(const CampaignSpec& spec, CampaignReport& report) {
    for (std::int64_t p = std::max<std::int64_t>(2, spec.k_lo); p <= spec.k_hi; ++p) {
        if (!is_prime(p)) continue;
        report.sets_examined += 1;
        std::int64_t searched = erdos_selfridge_max(p);
        // Independent closed-form route: floor((sqrt(8p-7)-1)/2) via exact
        // integer square root.
        std::int64_t radicand = 8 * p - 7;
        std::int64_t root = std::int64_t(std::max(0.0, std::sqrt(double(radicand)))) + 2;
        while (root * root > radicand) --root;
        std::int64_t closed = (root - 1) / 2;
        if (closed != searched) {
            CounterexampleRecord c;
            c.n = 0;
            c.k = p;
            c.detail = "integer search " + std::to_string(searched) +
                       " disagrees with the closed form " + std::to_string(closed);
            report.counterexamples.push_back(std::move(c));
            continue;
        }
        if (p <= 31) {
            std::int64_t exhaustive = max_zero_sum_free_size(p);
            if (exhaustive != searched) {
                CounterexampleRecord c;
                c.n = 0;
                c.k = p;
                c.detail = "exhaustive zero-sum-free maximum " + std::to_string(exhaustive) +
                           " disagrees with " + std::to_string(searched);
                report.counterexamples.push_back(std::move(c));
                continue;
            }
            report.equality_hits += 1;
        }
    }
}

} // namespace

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::ls_bound: return "ls-bound";
        case TheoremId::nathanson: return "nathanson";
        case TheoremId::inverse_n2: return "inverse-n2";
        case TheoremId::inverse_odd: return "inverse-odd";
        case TheoremId::inverse_even: return "inverse-even";
        case TheoremId::strict: return "strict";
        case TheoremId::lemma_signs: return "lemma-signs";
        case TheoremId::lemma_witness: return "lemma-witness";
        case TheoremId::balandraud: return "balandraud";
        case TheoremId::selfridge: return "selfridge";
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_name(const std::string& name) {
    for (TheoremId id : {TheoremId::ls_bound, TheoremId::nathanson, TheoremId::inverse_n2,
                         TheoremId::inverse_odd, TheoremId::inverse_even, TheoremId::strict,
                         TheoremId::lemma_signs, TheoremId::lemma_witness,
                         TheoremId::balandraud, TheoremId::selfridge})
        if (theorem_name(id) == name) return id;
    return std::nullopt;
}

std::uint64_t enumeration_count(int k, std::int64_t max_abs) {
    if (k < 1 || max_abs < 1) throw std::invalid_argument("enumeration_count: bad parameters");
    return binom(2 * max_abs + 1, k);
}

void enumerate_sets(int k, std::int64_t max_abs,
                    const std::function<void(const IntegerSet&)>& fn, std::uint64_t budget) {
    std::uint64_t total = enumeration_count(k, max_abs);
    if (total > budget) {
        std::ostringstream os;
        os << "enumeration refused: C(" << 2 * max_abs + 1 << "," << k << ") = " << total
           << " exceeds budget " << budget;
        throw std::invalid_argument(os.str());
    }
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::int64_t> elems(static_cast<std::size_t>(k));
    for (std::uint64_t rank = 0; rank < total; ++rank) {
        for (int i = 0; i < k; ++i) elems[std::size_t(i)] = std::int64_t(idx[std::size_t(i)]) - max_abs;
        fn(IntegerSet{elems});
        if (rank + 1 < total) next_combination(idx, int(2 * max_abs + 1));
    }
}

IntegerSet canonicalize(const IntegerSet& a) {
    if (a.empty()) throw std::invalid_argument("canonicalize: empty set");
    std::int64_t g = 0;
    for (std::int64_t e : a.elements()) g = std::gcd(g, e);
    if (g == 0) throw std::invalid_argument("canonicalize: all-zero set");
    std::vector<std::int64_t> reduced;
    reduced.reserve(a.size());
    for (std::int64_t e : a.elements()) reduced.push_back(e / g);
    std::vector<std::int64_t> negated(reduced.rbegin(), reduced.rend());
    for (std::int64_t& e : negated) e = -e;
    return IntegerSet{std::min(reduced, negated)};
}

CampaignReport run_campaign(const CampaignSpec& spec) {
    auto start = std::chrono::steady_clock::now();
    CampaignReport report;
    report.spec = spec;

    switch (spec.theorem) {
        case TheoremId::ls_bound: run_ls_bound(spec, report); break;
        case TheoremId::nathanson: run_nathanson(spec, report); break;
        case TheoremId::inverse_n2:
            for (std::int64_t k = std::max<std::int64_t>(3, spec.k_lo); k <= spec.k_hi; ++k)
                run_inverse(spec, report, 2, k);
            break;
        case TheoremId::inverse_odd:
            for (int n = std::max(3, spec.n_lo); n <= spec.n_hi; ++n)
                run_inverse(spec, report, n, 2 * std::int64_t(n) - 1);
            break;
        case TheoremId::inverse_even:
            for (int n = std::max(3, spec.n_lo); n <= spec.n_hi; ++n)
                run_inverse(spec, report, n, 2 * std::int64_t(n));
            break;
        case TheoremId::strict: run_strict(spec, report); break;
        case TheoremId::lemma_signs: run_lemma_signs(spec, report); break;
        case TheoremId::lemma_witness: run_lemma_witness(spec, report); break;
        case TheoremId::balandraud: run_balandraud(spec, report); break;
        case TheoremId::selfridge: run_selfridge(spec, report); break;
    }

    finish_records(report);
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

std::string CampaignReport::to_jsonl(bool include_timing) const {
    std::ostringstream os;
    for (const WitnessRecord& w : witnesses) os << witness_to_json(w).dump() << '\n';
    for (const CounterexampleRecord& c : counterexamples)
        os << counterexample_to_json(c).dump() << '\n';
    ojson summary;
    summary["sets"] = sets_examined;
    summary["hits"] = equality_hits;
    summary["elapsed_ms"] = include_timing ? elapsed_ms : 0;
    summary["falsified"] = falsified();
    os << summary.dump() << '\n';
    return os.str();
}

std::string CampaignReport::to_csv(bool include_timing) const {
    std::ostringstream os;
    auto cell = [](const std::vector<std::int64_t>& v) {
        std::ostringstream c;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) c << ' ';
            c << v[i];
        }
        return c.str();
    };
    os << "type,n,k,set,canonical,actual,bound,tag,detail\n";
    for (const WitnessRecord& w : witnesses) {
        os << "witness," << w.n << ',' << w.k << ",\"" << cell(w.set) << "\",\""
           << cell(w.canonical) << "\"," << w.actual << ',' << w.bound << ','
           << (w.form ? tag_of(*w.form) : "") << ",\"" << w.detail << "\"\n";
    }
    for (const CounterexampleRecord& c : counterexamples) {
        os << "counterexample," << c.n << ',' << c.k << ",\"" << cell(c.set)
           << "\",,,,,\"" << c.detail << "\"\n";
    }
    os << "summary,,,,,,,,\"sets=" << sets_examined << " hits=" << equality_hits
       << " elapsed_ms=" << (include_timing ? elapsed_ms : 0)
       << " falsified=" << (falsified() ? "true" : "false") << "\"\n";
    return os.str();
}

} // namespace sumsets
