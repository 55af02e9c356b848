#include "noflab/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "noflab/io.hpp"

namespace noflab {

namespace {

int env_jobs() {
    const char* v = std::getenv("NOF_LAB_JOBS");
    if (!v) return 1;
    int j = std::atoi(v);
    return j >= 1 ? j : 1;
}

int resolve_k(const SimulateArgs& a) {
    if (a.k > 0) return a.k;
    if (a.protocol == "eqsolve") return eqsolve_player_threshold(a.d, a.n);
    if (a.protocol == "split") {
        long long q = 1;
        for (int i = 1; i < a.d; ++i) q *= 4;
        return static_cast<int>(q);
    }
    if (a.protocol == "full") return full_player_threshold(a.d, a.n);
    throw std::invalid_argument("unknown protocol: " + a.protocol);
}

std::string big_str(const BigInt& b) { return b.str(); }

}  // namespace

SimulateArgs load_descriptor(const std::string& path, SimulateArgs base) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open descriptor: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.contains("protocol")) base.protocol = j["protocol"].get<std::string>();
    if (j.contains("d")) base.d = j["d"].get<int>();
    if (j.contains("n")) base.n = j["n"].get<long long>();
    if (j.contains("k")) base.k = j["k"].get<int>();
    if (j.contains("l")) base.l = j["l"].get<int>();
    if (j.contains("function")) base.function = j["function"].get<std::string>();
    if (j.contains("seed")) base.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) base.trials = j["trials"].get<long long>();
    if (j.contains("mode")) base.mode = j["mode"].get<std::string>();
    return base;
}

ExperimentOutcome run_experiment(const SimulateArgs& args_in) {
    SimulateArgs args = args_in;
    if (!args.descriptor_file.empty()) args = load_descriptor(args.descriptor_file, args);
    args.k = resolve_k(args);
    if (args.jobs <= 0) args.jobs = env_jobs();
    RunMode mode = parse_run_mode(args.mode);

    ComposedSpec spec = make_named(args.function, args.d, args.k, args.n, args.seed);
    if ((args.protocol == "eqsolve" || args.protocol == "split")) {
        for (const auto& g : spec.inners)
            if (!(g == spec.inners[0]))
                throw std::invalid_argument(args.protocol +
                                            " computes one shared inner function; '" +
                                            args.function + "' mixes them");
    }

    std::optional<InputMatrix> fixed;
    if (!args.matrix_file.empty()) {
        fixed = load_matrix_file(args.matrix_file);
        if (fixed->rows() != args.k || fixed->cols() != args.n || fixed->alphabet() != args.d)
            throw std::invalid_argument("matrix file dimensions disagree with arguments");
    }

    std::optional<MobiusOrbitKernel> shared_kernel;
    int resolved_l = 0;
    if (args.protocol == "full") {
        int t = Alphabet::of(args.d).t;
        resolved_l = args.l > 0 ? args.l : std::min(args.k, full_player_threshold(args.d, args.n));
        enforce_field_cap(resolved_l, t, FullRunOptions{}.field_cap);
        shared_kernel.emplace(t, resolved_l);
    }
    args.l = resolved_l;

    ExperimentOutcome out;
    out.rows.resize(args.trials);

    std::atomic<long long> next{0};
    std::mutex err_mu;
    std::exception_ptr first_err;

    auto worker = [&] {
        for (;;) {
            long long i = next.fetch_add(1);
            if (i >= args.trials) return;
            try {
                TrialRecord rec;
                rec.trial = i;
                rec.seed = derive_seed(args.seed, static_cast<std::uint64_t>(i));
                InputMatrix m = fixed ? *fixed : random_matrix(rec.seed, args.k, args.n, args.d);
                rec.oracle = direct_eval(spec, m);
                auto t0 = std::chrono::steady_clock::now();
                if (args.protocol == "eqsolve" || args.protocol == "split") {
                    EqsolveOptions opts{mode, SolverConfig{}};
                    SolveResult res;
                    if (args.protocol == "eqsolve") {
                        EqsolveRun run = run_protocol(m, opts);
                        res = std::move(run.result);
                        rec.measured_bits = run.cost.total_bits;
                        rec.analytic_bits = big_str(run.cost.analytic_bits);
                        rec.coarse_bits = big_str(run.cost.coarse_bits);
                    } else {
                        SplitRun run = run_split_protocol(m, opts);
                        res = std::move(run.result);
                        rec.measured_bits = run.cost.total_bits;
                        rec.analytic_bits = big_str(run.cost.analytic_bits);
                        rec.coarse_bits = big_str(run.cost.coarse_bits);
                    }
                    if (res.status == SolveStatus::Unique) {
                        rec.output = evaluate_sym_composed(res.counts, spec.outer, spec.inners[0]);
                        rec.match = rec.output == rec.oracle;
                    } else if (res.status == SolveStatus::Ambiguous) {
                        rec.ambiguous = true;
                    } else {
                        throw ProtocolError("trial " + std::to_string(i) +
                                            ": solver returned " + to_string(res.status));
                    }
                } else if (args.protocol == "full") {
                    FullRunOptions opts;
                    opts.mode = mode;
                    opts.l = args.l;
                    opts.kernel = shared_kernel ? &*shared_kernel : nullptr;
                    FullRunResult run = run_full(m, spec, opts);
                    rec.measured_bits = run.cost.total_bits;
                    rec.analytic_bits = big_str(run.cost.analytic_bits);
                    rec.coarse_bits = big_str(run.cost.coarse_bits);
                    if (run.status == SolveStatus::Unique) {
                        rec.output = run.value;
                        rec.match = rec.output == rec.oracle;
                    } else if (run.status == SolveStatus::Ambiguous) {
                        rec.ambiguous = true;
                    } else {
                        throw ProtocolError("trial " + std::to_string(i) + ": sub-run returned " +
                                            to_string(run.status));
                    }
                } else {
                    throw std::invalid_argument("unknown protocol: " + args.protocol);
                }
                rec.wall_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - t0)
                                  .count();
                out.rows[i] = std::move(rec);
            } catch (...) {
                std::lock_guard lk(err_mu);
                if (!first_err) first_err = std::current_exception();
                next.store(args.trials);
                return;
            }
        }
    };

    int workers = static_cast<int>(std::min<long long>(args.jobs, std::max<long long>(args.trials, 1)));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_err) std::rethrow_exception(first_err);

    for (const auto& r : out.rows)
        if (r.match.has_value() && !*r.match) out.all_matched = false;
    out.args = args;
    return out;
}

namespace {

std::string match_str(const TrialRecord& r) {
    if (!r.match.has_value()) return "";
    return *r.match ? "1" : "0";
}

}  // namespace

void write_csv(std::ostream& os, const ExperimentOutcome& out, bool timings) {
    const auto& a = out.args;
    os << "# schema: nof-lab/1\n";
    os << "trial,protocol,function,d,n,k,l,mode,seed,output,oracle,match,ambiguous,"
          "measured_bits,analytic_bits,coarse_bits";
    if (timings) os << ",wall_ms";
    os << "\n";
    for (const auto& r : out.rows) {
        os << r.trial << "," << a.protocol << "," << a.function << "," << a.d << "," << a.n << ","
           << a.k << "," << a.l << "," << a.mode << "," << r.seed << ","
           << (r.output < 0 ? "" : std::to_string(r.output)) << ","
           << (r.oracle < 0 ? "" : std::to_string(r.oracle)) << "," << match_str(r) << ","
           << (r.ambiguous ? "1" : "0") << "," << r.measured_bits << "," << r.analytic_bits << ","
           << r.coarse_bits;
        if (timings) os << "," << r.wall_ms;
        os << "\n";
    }
}

void write_json(std::ostream& os, const ExperimentOutcome& out, bool timings) {
    const auto& a = out.args;
    nlohmann::json j;
    j["schema"] = "nof-lab/1";
    j["protocol"] = a.protocol;
    j["function"] = a.function;
    j["d"] = a.d;
    j["n"] = a.n;
    j["k"] = a.k;
    j["l"] = a.l;
    j["mode"] = a.mode;
    j["seed"] = a.seed;
    auto rows = nlohmann::json::array();
    for (const auto& r : out.rows) {
        nlohmann::json e;
        e["trial"] = r.trial;
        e["seed"] = r.seed;
        if (r.output >= 0) e["output"] = r.output;
        if (r.oracle >= 0) e["oracle"] = r.oracle;
        if (r.match.has_value()) e["match"] = *r.match;
        e["ambiguous"] = r.ambiguous;
        e["measured_bits"] = r.measured_bits;
        e["analytic_bits"] = r.analytic_bits;
        e["coarse_bits"] = r.coarse_bits;
        if (timings) e["wall_ms"] = r.wall_ms;
        rows.push_back(std::move(e));
    }
    j["results"] = std::move(rows);
    os << j.dump(2) << "\n";
}

int cmd_simulate(const SimulateArgs& args, std::ostream& os, std::ostream& err) {
    try {
        ExperimentOutcome out = run_experiment(args);
        if (out.args.format == "json")
            write_json(os, out, args.timings);
        else
            write_csv(os, out, args.timings);
        return out.all_matched ? 0 : 1;
    } catch (const std::exception& e) {
        err << "simulate: " << e.what() << "\n";
        return 2;
    }
}

int cmd_uniqueness(const UniquenessArgs& args, std::ostream& os, std::ostream& err) {
    try {
        long long bound = args.l1_bound > 0 ? args.l1_bound : 2 * args.n;
        if (bound <= 0) throw std::invalid_argument("uniqueness: give --l1 or --n");
        os << "# kernel witnesses, symbols=" << args.symbols << ", l1 bound=" << bound << "\n";
        os << "k,bound,verdict,witness_l1";
        if (args.minimal) os << ",minimal_l1";
        if (args.symbols == 1) os << ",closed_form_l1";
        os << "\n";
        for (int k = args.k_min; k <= args.k_max; ++k) {
            std::string verdict = "unique";
            std::string wl1 = "", ml1 = "";
            try {
                auto w = homogeneous_search(k, args.symbols, bound, args.node_limit);
                if (w) {
                    verdict = "ambiguous-witness-found";
                    wl1 = std::to_string(w->l1);
                }
                if (args.minimal) {
                    auto mw = minimal_kernel_witness(k, args.symbols, bound, args.node_limit);
                    if (mw) ml1 = std::to_string(mw->l1);
                }
            } catch (const std::runtime_error&) {
                verdict = "limit";
            }
            os << k << "," << bound << "," << verdict << "," << wl1;
            if (args.minimal) os << "," << ml1;
            if (args.symbols == 1) os << "," << (BigInt(1) << k).str();
            os << "\n";
        }
        return 0;
    } catch (const std::exception& e) {
        err << "uniqueness: " << e.what() << "\n";
        return 2;
    }
}

int cmd_cost_table(const CostTableArgs& args, std::ostream& os, std::ostream& err) {
    try {
        os << "protocol,d,n,k,l,measured_bits,analytic_bits,exact_match,coarse_bits\n";
        for (int d : args.d_list)
            for (long long n : args.n_list) {
                std::vector<int> ks = args.k_list;
                if (ks.empty())
                    ks.push_back(args.protocol == "full" ? full_player_threshold(d, n)
                                                         : eqsolve_player_threshold(d, n));
                for (int k : ks) {
                    InputMatrix m = random_matrix(derive_seed(7, k), k, n, d);
                    long long measured;
                    BigInt analytic, coarse;
                    int l = 0;
                    try {
                        if (args.protocol == "full") {
                            ComposedSpec spec = make_named("gip", d, k, n);
                            FullRunOptions opts;
                            opts.mode = RunMode::Reduced;
                            FullRunResult run = run_full(m, spec, opts);
                            measured = run.cost.total_bits;
                            analytic = run.cost.analytic_bits;
                            coarse = run.cost.coarse_bits;
                            l = run.speaking_players;
                        } else {
                            EqsolveRun run = run_protocol(m, EqsolveOptions{RunMode::Reduced, {}});
                            measured = run.cost.total_bits;
                            analytic = run.cost.analytic_bits;
                            coarse = run.cost.coarse_bits;
                        }
                    } catch (const ProtocolError&) {
                        // cell too large to simulate: report the formulas, leave
                        // the measured columns empty
                        if (args.protocol == "full") {
                            int t = Alphabet::of(d).t;
                            l = std::min(k, full_player_threshold(d, n));
                            analytic = full_cost_bound(l, t, n);
                            coarse = full_cost_coarse(d, n);
                        } else {
                            analytic = analytic_cost(k, d - 1, n);
                            coarse = n >= 2 ? coarse_cost(k, d - 1, n) : BigInt(0);
                        }
                        os << args.protocol << "," << d << "," << n << "," << k << "," << l
                           << ",," << analytic.str() << ",," << coarse.str() << "\n";
                        continue;
                    }
                    bool exact = BigInt(measured) == analytic;
                    os << args.protocol << "," << d << "," << n << "," << k << "," << l << ","
                       << measured << "," << analytic.str() << "," << (exact ? "1" : "0") << ","
                       << coarse.str() << "\n";
                }
            }
        return 0;
    } catch (const std::exception& e) {
        err << "cost-table: " << e.what() << "\n";
        return 2;
    }
}

int cmd_basis(const BasisArgs& args, std::ostream& os, std::ostream& err) {
    try {
        int alphabet = 1 << args.t;
        int d = args.d > 0 ? args.d : alphabet;
        SymmetricTable g = [&] {
            if (args.function == "random") return random_symmetric(args.seed, d, args.k);
            if (args.function == "and") return and_inner(d, args.k);
            if (args.function == "maj") return majority_bits_inner(d, args.k);
            throw std::invalid_argument("basis: unknown function '" + args.function + "'");
        }();
        if (d < alphabet) g = induce_inner(g, {}, args.k, args.t);  // zero-extend to 2^t
        PrimeModulus p = smallest_prime_in(args.n);
        MobiusOrbitKernel kernel(args.t, args.k);
        CoefficientVector cv = basis_coefficients(kernel, g, p);
        os << "# t=" << args.t << " k=" << args.k << " p=" << p.p << "\n";
        dump_coefficients(os, kernel.tuples(), cv);
        return 0;
    } catch (const std::exception& e) {
        err << "basis: " << e.what() << "\n";
        return 2;
    }
}

int cmd_referee(const RefereeArgs& args, std::ostream& os, std::ostream& err) {
    try {
        std::ifstream in(args.transcript_file);
        if (!in) throw std::runtime_error("cannot open transcript: " + args.transcript_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        Transcript t = transcript_from_json(ss.str());
        SolveResult res = referee_from_transcript(t);
        os << "status " << to_string(res.status) << "\n";
        if (res.status == SolveStatus::Unique || res.status == SolveStatus::Ambiguous) {
            TypeIndexer idx(t.d - 1, t.k);
            dump_sparse_vector(os, idx, res.counts.counts);
            if (res.status == SolveStatus::Ambiguous) {
                os << "second\n";
                dump_sparse_vector(os, idx, res.second.counts);
            }
        }
        return res.status == SolveStatus::Unique ? 0 : 1;
    } catch (const std::exception& e) {
        err << "referee: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace noflab
