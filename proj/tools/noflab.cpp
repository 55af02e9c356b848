#include <iostream>

#include <CLI11.hpp>

#include "noflab/experiment.hpp"

int main(int argc, char** argv) {
    CLI::App app{"simultaneous number-on-the-forehead protocol lab"};
    app.require_subcommand(1);

    noflab::SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "run protocol trials against the direct oracle");
    simulate->add_option("--protocol", sim.protocol, "eqsolve | split | full")
        ->check(CLI::IsMember({"eqsolve", "split", "full"}));
    simulate->add_option("--d", sim.d, "alphabet size");
    simulate->add_option("--n", sim.n, "number of columns");
    simulate->add_option("--k", sim.k, "number of players (0 = minimal for the hypothesis)");
    simulate->add_option("--l", sim.l, "speaking players for the full protocol (0 = derived)");
    simulate->add_option("--function", sim.function,
                         "gip | disj | majmaj | majthr:<s> | random | random-mixed");
    simulate->add_option("--seed", sim.seed, "root seed; output is byte-identical per seed");
    simulate->add_option("--trials", sim.trials, "number of random trials");
    simulate->add_option("--mode", sim.mode, "strict | reduced")
        ->check(CLI::IsMember({"strict", "reduced"}));
    simulate->add_option("--format", sim.format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    simulate->add_option("--jobs", sim.jobs, "worker threads (default: NOF_LAB_JOBS or 1)");
    simulate->add_flag("--timings", sim.timings, "include wall-clock times in the output");
    simulate->add_option("--matrix", sim.matrix_file, "run on a fixed matrix file (.txt or .json)");
    simulate->add_option("--descriptor", sim.descriptor_file, "JSON experiment descriptor");

    noflab::UniquenessArgs uniq;
    auto* uniqueness = app.add_subcommand("uniqueness", "probe the deletion system's kernel");
    uniqueness->add_option("--symbols", uniq.symbols, "nonzero symbols (alphabet size - 1)");
    uniqueness->add_option("--k-min", uniq.k_min, "smallest k");
    uniqueness->add_option("--k-max", uniq.k_max, "largest k");
    uniqueness->add_option("--l1", uniq.l1_bound, "L1 bound on the witness");
    uniqueness->add_option("--n", uniq.n, "derive the bound as 2n");
    uniqueness->add_flag("--minimal", uniq.minimal, "also search the minimal witness norm");
    uniqueness->add_option("--node-limit", uniq.node_limit, "search node budget");

    noflab::CostTableArgs cost;
    auto* cost_table = app.add_subcommand("cost-table", "analytic vs measured communication");
    cost_table->add_option("--protocol", cost.protocol, "eqsolve | full")
        ->check(CLI::IsMember({"eqsolve", "full"}));
    cost_table->add_option("--d", cost.d_list, "alphabet sizes");
    cost_table->add_option("--n", cost.n_list, "column counts");
    cost_table->add_option("--k", cost.k_list, "player counts (default: minimal)");

    noflab::BasisArgs basis;
    auto* basis_cmd = app.add_subcommand("basis", "dump symmetrized-monomial coefficients");
    basis_cmd->add_option("--t", basis.t, "bits per symbol");
    basis_cmd->add_option("--k", basis.k, "arity");
    basis_cmd->add_option("--n", basis.n, "prime window (n, 2n)");
    basis_cmd->add_option("--function", basis.function, "random | and | maj");
    basis_cmd->add_option("--seed", basis.seed, "seed for random tables");
    basis_cmd->add_option("--d", basis.d, "table alphabet before zero-extension (default 2^t)");

    noflab::RefereeArgs ref;
    auto* referee = app.add_subcommand("referee", "re-run the referee from a transcript only");
    referee->add_option("transcript", ref.transcript_file, "transcript JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) return noflab::cmd_simulate(sim, std::cout, std::cerr);
    if (uniqueness->parsed()) return noflab::cmd_uniqueness(uniq, std::cout, std::cerr);
    if (cost_table->parsed()) return noflab::cmd_cost_table(cost, std::cout, std::cerr);
    if (basis_cmd->parsed()) return noflab::cmd_basis(basis, std::cout, std::cerr);
    if (referee->parsed()) return noflab::cmd_referee(ref, std::cout, std::cerr);
    return 1;
}
