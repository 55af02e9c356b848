#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "noflab/composed.hpp"
#include "noflab/zoo.hpp"

namespace noflab {

struct SimulateArgs {
    std::string protocol = "eqsolve";  // eqsolve | split | full
    int d = 2;
    long long n = 4;
    int k = 0;  // 0: smallest k meeting the protocol's hypothesis
    int l = 0;  // full protocol only; 0: derived
    std::string function = "gip";
    std::uint64_t seed = 1;
    long long trials = 1;
    std::string mode = "strict";
    std::string format = "csv";  // csv | json
    int jobs = 0;                // 0: NOF_LAB_JOBS env or 1
    bool timings = false;
    std::string matrix_file;      // run on a fixed matrix instead of random ones
    std::string descriptor_file;  // JSON overriding the above
};

struct TrialRecord {
    long long trial = 0;
    std::uint64_t seed = 0;
    int output = -1;
    int oracle = -1;
    std::optional<bool> match;  // empty when the trial ended ambiguous
    bool ambiguous = false;
    long long measured_bits = 0;
    std::string analytic_bits, coarse_bits;
    double wall_ms = 0.0;
};

struct ExperimentOutcome {
    SimulateArgs args;          // post-resolution (k, l, jobs filled in)
    std::vector<TrialRecord> rows;
    bool all_matched = true;
};

SimulateArgs load_descriptor(const std::string& path, SimulateArgs base);

ExperimentOutcome run_experiment(const SimulateArgs& args);

void write_csv(std::ostream& os, const ExperimentOutcome& out, bool timings);
void write_json(std::ostream& os, const ExperimentOutcome& out, bool timings);

// Entry points used by the command-line tool; return process exit codes.
int cmd_simulate(const SimulateArgs& args, std::ostream& os, std::ostream& err);

struct UniquenessArgs {
    int symbols = 1;
    int k_min = 2, k_max = 6;
    long long l1_bound = 0;   // probe bound; 0 derives 2n from --n
    long long n = 0;          // convenience: bound = 2n
    bool minimal = false;     // also report the minimal witness norm (iterative deepening)
    long long node_limit = 100'000'000;
};
int cmd_uniqueness(const UniquenessArgs& args, std::ostream& os, std::ostream& err);

struct CostTableArgs {
    std::string protocol = "eqsolve";
    std::vector<int> d_list{2};
    std::vector<long long> n_list{2, 4, 8};
    std::vector<int> k_list;  // empty: minimal k per (d, n)
};
int cmd_cost_table(const CostTableArgs& args, std::ostream& os, std::ostream& err);

struct BasisArgs {
    int t = 1;
    int k = 4;
    long long n = 4;  // prime window (n, 2n)
    std::string function = "random";
    std::uint64_t seed = 1;
    int d = 0;  // alphabet of the table; 0: 2^t
};
int cmd_basis(const BasisArgs& args, std::ostream& os, std::ostream& err);

struct RefereeArgs {
    std::string transcript_file;
};
int cmd_referee(const RefereeArgs& args, std::ostream& os, std::ostream& err);

}  // namespace noflab
