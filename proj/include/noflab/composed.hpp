#pragma once

#include "noflab/eqsolve.hpp"

namespace noflab {

// Target function: f applied to the sum of per-column boolean inner values,
// inner j evaluated on column j. All inners share arity k and alphabet d.
struct ComposedSpec {
    int d = 2;
    std::vector<std::uint8_t> outer;    // weight table, size n+1
    std::vector<SymmetricTable> inners; // one per column

    void validate(int k, long long n) const;
};

// Inner function adapted to the players that actually speak: the last k - l
// rows of each block are fixed to that block's suffix values, and t-bit
// patterns that are not valid alphabet symbols map to 0.
SymmetricTable induce_inner(const SymmetricTable& g, std::span<const std::uint8_t> suffix,
                            int l, int t);

// Matrix whose column j is repeated coeffs[j] times, preserving block order.
InputMatrix replicate(const InputMatrix& prefix_values, std::span<const long long> coeffs);

// Number of replicated blocks recoverable from the aggregated deck: every
// column contributes exactly l to the deck total.
long long deduce_block_count(const DeckVector& b, int l);

// Smallest l satisfying the composed protocol's hypothesis for alphabet d:
// ceil(4^(2^t) * log2 n) with t = ceil(log2 d).
int full_player_threshold(int d, long long n);

// Cost bound of one full run before closed-form coarsening:
// C(l + 2^t - 1, 2^t - 1)^2 * l * ceil(log2(2 n^2)).
BigInt full_cost_bound(int l, int t, long long n);
// Count fields one run transmits: C(l + 2^t - 1, 2^t - 1)^2 * l.
BigInt full_field_count(int l, int t);
// Refuse (ProtocolError) when a run would transmit more than cap fields; a
// cheap feasibility gate to hit before any census machinery is built. cap <= 0
// disables it.
void enforce_field_cap(int l, int t, long long cap);
// Closed-form figure: 4^(2^(t+2)) * ceil(log2 n)^(2 * 2^t).
BigInt full_cost_coarse(int d, long long n);

struct FullRunOptions {
    RunMode mode = RunMode::Strict;
    int l = 0;  // 0: min(k, full_player_threshold)
    SolverConfig solver;
    bool keep_transcripts = false;
    const MobiusOrbitKernel* kernel = nullptr;  // optional shared precomputation
    // Refuse runs transmitting more than this many count fields in total
    // (C(l+2^t-1, 2^t-1)^2 * l); the strict threshold for t >= 2 lands far
    // beyond any simulable size. 0 disables the check.
    long long field_cap = 100'000'000;
};

struct SubRunInfo {
    long long blocks = 0;  // column count of the replicated matrix
    long long bits = 0;
    SolveStatus status = SolveStatus::Unique;
    long long term = 0;  // this sub-run's contribution mod p
};

struct FullRunResult {
    SolveStatus status = SolveStatus::Unique;
    int value = -1;          // outer output, valid when status == Unique
    int offending = -1;      // index of the first non-unique sub-run otherwise
    long long recovered_sum = -1;  // sum of inner values as recovered mod p
    int speaking_players = 0;
    int bits_per_symbol = 0;
    int prime = 0;
    CostReport cost;
    std::vector<SubRunInfo> sub_runs;
    std::vector<Transcript> sub_transcripts;  // filled when keep_transcripts
};

// Composed-function protocol: one equation-solving sub-round per sorted tuple
// over the first l rows of the boolean encoding, coefficients compressed mod a
// prime in (n, 2n); the referee sums the recovered monomial totals and applies
// the outer table.
FullRunResult run_full(const InputMatrix& m, const ComposedSpec& spec,
                       const FullRunOptions& opts = {});

// Referee-side recomputation of one sub-run's term from its transcript and the
// public per-block coefficients; no matrix access.
long long sub_run_term_from_transcript(const Transcript& t, const SortedTuple& a, int p,
                                       const SolverConfig& cfg = {});

}  // namespace noflab
