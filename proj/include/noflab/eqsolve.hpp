#pragma once

#include <span>

#include "noflab/deck_solver.hpp"
#include "noflab/matrix.hpp"
#include "noflab/runtime.hpp"
#include "noflab/symfun.hpp"

namespace noflab {

// One player's count vector: occurrences of each column type among her k-1
// visible rows. Laid out over the full level-<=k canonical order so that every
// player ships the same fixed C(k+D, D)-field frame; the level-k tail refers
// to types a (k-1)-row view can never produce and is structurally zero.
struct PlayerCountVector {
    int player = 0;
    std::vector<long long> counts;
};

PlayerCountVector player_message(const PlayerView& view);

// Pointwise sum of all k player vectors, truncated to the observable
// level <= k-1 prefix. Rejects nonzero level-k entries.
DeckVector aggregate(std::span<const PlayerCountVector> msgs, int k, int d);

// Referee reconstruction of the column-type counts from the aggregated deck.
SolveResult referee_recover(const DeckVector& b, long long n, const SolverConfig& cfg = {});

// sum of f-weights: value = f[ #columns whose type satisfies g ].
int evaluate_sym_composed(const CountVector& y, std::span<const std::uint8_t> f_weights,
                          const SymmetricTable& g);

// Oracle-side direct counting; what the referee's answer is audited against.
CountVector direct_type_counts(const InputMatrix& m);

// Smallest k for which the single-shot protocol's uniqueness guarantee holds
// over alphabet d: ceil(4^(d-1) * log2 n).
int eqsolve_player_threshold(int d, long long n);

BigInt analytic_cost(int k, int symbols, long long n);  // k * C(k+D, D) * ceil(log2(n+1))
BigInt coarse_cost(int k, int symbols, long long n);     // same with ceil(log2 n) fields

// One simultaneous round: every player's padded count vector, sized at
// count_width(count_bound) bits per field. The bound must be derivable from
// public parameters so the referee can frame the fields.
Transcript collect_round(const InputMatrix& m, const std::string& protocol,
                         long long count_bound);

struct EqsolveOptions {
    RunMode mode = RunMode::Strict;
    SolverConfig solver;
};

struct EqsolveRun {
    SolveResult result;
    Transcript transcript;
    CostReport cost;
};

// Full simultaneous round: every player sends her padded count vector, the
// referee reconstructs the type counts from the transcript alone.
EqsolveRun run_protocol(const InputMatrix& m, const EqsolveOptions& opts = {});

// Referee re-execution from a serialized round; no access to the matrix.
SolveResult referee_from_transcript(const Transcript& t, const SolverConfig& cfg = {});

struct SplitRun {
    SolveResult result;  // summed counts across chunks
    std::vector<Transcript> chunk_transcripts;
    std::vector<long long> chunk_bits;
    long long chunk_width = 0;  // column width of all chunks but possibly the last
    CostReport cost;
};

// Column-split variant for k below the single-shot threshold: the matrix is
// cut into chunks of floor(2^(k / 4^D)) columns, one round is run per chunk,
// and the per-chunk counts are summed. Requires k >= 4^D.
SplitRun run_split_protocol(const InputMatrix& m, const EqsolveOptions& opts = {});

}  // namespace noflab
