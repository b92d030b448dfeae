#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sumsets/structure.hpp"

namespace sumsets {

enum class TheoremId {
    ls_bound,
    nathanson,
    inverse_n2,
    inverse_odd,
    inverse_even,
    strict,
    lemma_signs,
    lemma_witness,
    balandraud,
    selfridge,
};

std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);

// Sweep parameters. For modular campaigns (balandraud, selfridge) the k range
// carries the prime range and max_abs is unused. For lemma_witness, max_abs
// bounds the b,d grid and the k range the c offsets.
struct CampaignSpec {
    TheoremId theorem = TheoremId::ls_bound;
    int n_lo = 2;
    int n_hi = 2;
    std::int64_t k_lo = 0;
    std::int64_t k_hi = 0;
    std::int64_t max_abs = 0;
    int workers = 1;
    // Survey mode records every bound-attaining set with its classifier tag
    // and skips the iff cross-checks; used for empirical family mapping.
    bool survey = false;
    std::string output_path;
    std::uint64_t budget = 100000000ULL;
};

struct WitnessRecord {
    int n = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> set;
    std::vector<std::int64_t> canonical;
    std::int64_t actual = 0;
    std::int64_t bound = 0;
    std::optional<StructureForm> form;
    std::string detail;
};

struct CounterexampleRecord {
    int n = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> set;
    std::string detail;
};

struct CampaignReport {
    CampaignSpec spec;
    std::uint64_t sets_examined = 0;
    std::uint64_t equality_hits = 0;
    std::vector<WitnessRecord> witnesses;
    std::vector<CounterexampleRecord> counterexamples;
    std::int64_t elapsed_ms = 0;

    bool falsified() const { return !counterexamples.empty(); }

    // Line-delimited JSON: one record per witness/counterexample plus a
    // trailing summary {sets, hits, elapsed_ms, falsified}. With
    // include_timing false the summary reports elapsed_ms 0 so reports are
    // byte-reproducible.
    std::string to_jsonl(bool include_timing = true) const;

    // CSV mirror of the JSON fields.
    std::string to_csv(bool include_timing = true) const;
};

// C(2M+1, k): the number of k-subsets of [-M, M].
std::uint64_t enumeration_count(int k, std::int64_t max_abs);

// Streams every k-subset of [-M, M] exactly once in lexicographic order.
// Refuses (with the exact count in the message) when the count exceeds the
// budget.
void enumerate_sets(int k, std::int64_t max_abs,
                    const std::function<void(const IntegerSet&)>& fn,
                    std::uint64_t budget = 100000000ULL);

// Orbit representative under dilation and negation: divide by the gcd of the
// absolute values, then take the lexicographically smaller of the reduced set
// and its negation. Throws on the all-zero set.
IntegerSet canonicalize(const IntegerSet& a);

CampaignReport run_campaign(const CampaignSpec& spec);

} // namespace sumsets
