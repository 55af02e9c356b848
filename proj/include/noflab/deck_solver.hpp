#pragma once

#include <optional>
#include <vector>

#include "noflab/types.hpp"

namespace noflab {

// Aggregated observation: for each type e with level <= k-1, how many times e
// occurs as a column type across all single-row deletions of the input.
// Indexed by the canonical order of TypeIndexer(symbols, k-1).
struct DeckVector {
    int k = 0;
    int symbols = 0;  // nonzero symbols (alphabet size minus one)
    std::vector<long long> counts;
};

// Column-type counts of the full k-row matrix, level <= k,
// indexed by the canonical order of TypeIndexer(symbols, k).
struct CountVector {
    int k = 0;
    int symbols = 0;
    std::vector<long long> counts;

    bool operator==(const CountVector& o) const = default;
};

// The deletion operator applied to exact counts; what an honest run observes.
DeckVector deck_of_counts(const CountVector& y);

// Linear system tying unknown column-type counts y to an observed deck b:
// one equation per type e with level <= k-1,
//   (k - |e|) * y_e + sum_s (e_s + 1) * y_{e + unit_s} = b_e.
struct DeletionSystem {
    int k = 0;
    int symbols = 0;
    std::vector<long long> rhs;  // deck counts, equation order = type order
    struct Term {
        int var;        // index into TypeIndexer(symbols, k)
        long long coef;
    };
    std::vector<std::vector<Term>> equations;  // [equation][term], per-equation size symbols+1
};

DeletionSystem build_system(const DeckVector& b);

struct SolverConfig {
    bool detect_ambiguity = true;
    long long node_limit = 10'000'000;
};

enum class SolveStatus { Unique, Ambiguous, NoSolution, LimitExceeded };

std::string to_string(SolveStatus s);

struct SolveResult {
    SolveStatus status = SolveStatus::NoSolution;
    CountVector counts;  // valid when Unique or Ambiguous
    CountVector second;  // second witness when Ambiguous
    long long nodes = 0;
};

// All nonnegative integer solutions of the system with sum(y) = n, found by a
// depth-first search over support-feasible types with exact residual pruning.
// This search machinery is deliberately stronger than what the communication
// analysis needs: it terminates on every input and witnesses ambiguity instead
// of assuming uniqueness.
SolveResult solve_unique(const DeletionSystem& sys, long long n, const SolverConfig& cfg = {});

// Independent oracle: enumerate every multiset of n column types and keep the
// ones whose deck matches. Exponential; guarded by `limit` enumeration steps.
std::vector<CountVector> brute_force_solutions(const DeckVector& b, long long n,
                                               long long limit = 50'000'000);

// Nonzero integer vector in the kernel of the deletion system (rhs = 0).
struct HomogeneousWitness {
    int k = 0;
    int symbols = 0;
    std::vector<long long> z;  // TypeIndexer(symbols, k) order
    long long l1 = 0;
};

// Search for a kernel vector with L1 norm <= l1_bound; the first nonzero free
// coordinate is normalized positive. Returns nullopt if none exists.
std::optional<HomogeneousWitness> homogeneous_search(int k, int symbols, long long l1_bound,
                                                     long long node_limit = 100'000'000);

// For one nonzero symbol the kernel is one-dimensional:
// z_i = (-1)^i * C(k, i) * z0, with L1 norm |z0| * 2^k.
HomogeneousWitness d1_closed_form(long long z0, int k);

// Smallest L1 norm of any nonzero kernel vector up to l1_cap, by iterative
// deepening; nullopt if none up to the cap.
std::optional<HomogeneousWitness> minimal_kernel_witness(int k, int symbols, long long l1_cap,
                                                         long long node_limit = 100'000'000);

}  // namespace noflab
