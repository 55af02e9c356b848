#include "noflab/eqsolve.hpp"

namespace noflab {

PlayerCountVector player_message(const PlayerView& view) {
    int k = view.rows();
    int symbols = view.alphabet() - 1;
    const TypeIndexer& idx = shared_indexer(symbols, k);
    PlayerCountVector msg{view.hidden_row(), std::vector<long long>(idx.size(), 0)};
    for (int j = 1; j <= view.cols(); ++j) ++msg.counts[idx.index_of(view_column_type(view, j))];
    return msg;
}

DeckVector aggregate(std::span<const PlayerCountVector> msgs, int k, int d) {
    if (static_cast<int>(msgs.size()) != k)
        throw ProtocolError("aggregate: expected one message per player");
    int symbols = d - 1;
    const TypeIndexer& idx = shared_indexer(symbols, k);
    int observable = idx.prefix_size(k - 1);
    DeckVector b{k, symbols, std::vector<long long>(observable, 0)};
    for (const auto& m : msgs) {
        if (static_cast<int>(m.counts.size()) != idx.size())
            throw ProtocolError("aggregate: count vector has wrong length");
        for (int i = 0; i < idx.size(); ++i) {
            if (m.counts[i] < 0) throw ProtocolError("aggregate: negative count");
            if (i < observable)
                b.counts[i] += m.counts[i];
            else if (m.counts[i] != 0)
                throw ProtocolError("aggregate: nonzero count at unobservable type");
        }
    }
    return b;
}

SolveResult referee_recover(const DeckVector& b, long long n, const SolverConfig& cfg) {
    return solve_unique(build_system(b), n, cfg);
}

int evaluate_sym_composed(const CountVector& y, std::span<const std::uint8_t> f_weights,
                          const SymmetricTable& g) {
    if (g.arity() != y.k || g.alphabet() != y.symbols + 1)
        throw std::invalid_argument("evaluate_sym_composed: table shape mismatch");
    long long w = 0, total = 0;
    for (std::size_t i = 0; i < y.counts.size(); ++i) {
        if (y.counts[i] < 0) throw std::invalid_argument("evaluate_sym_composed: negative count");
        total += y.counts[i];
        if (g.at_index(static_cast<int>(i))) w += y.counts[i];
    }
    if (static_cast<std::size_t>(total) + 1 != f_weights.size())
        throw std::invalid_argument("evaluate_sym_composed: weight table does not match column count");
    return f_weights[w];
}

CountVector direct_type_counts(const InputMatrix& m) {
    int symbols = m.alphabet() - 1;
    const TypeIndexer& idx = shared_indexer(symbols, m.rows());
    CountVector y{m.rows(), symbols, std::vector<long long>(idx.size(), 0)};
    for (int j = 1; j <= m.cols(); ++j) ++y.counts[idx.index_of(column_type(m, j))];
    return y;
}

int eqsolve_player_threshold(int d, long long n) {
    if (d < 2 || n < 1) throw std::invalid_argument("eqsolve_player_threshold: bad arguments");
    long long q = 1;
    for (int i = 1; i < d; ++i) q *= 4;
    return ceil_q_log2(q, n);
}

BigInt analytic_cost(int k, int symbols, long long n) {
    return BigInt(k) * binomial(k + symbols, symbols) * count_width(n);
}

BigInt coarse_cost(int k, int symbols, long long n) {
    return BigInt(k) * binomial(k + symbols, symbols) * ceil_log2(n);
}

Transcript collect_round(const InputMatrix& m, const std::string& protocol, long long count_bound) {
    Transcript t{protocol, m.rows(), m.cols(), m.alphabet(), {}};
    for (int i = 1; i <= m.rows(); ++i) {
        PlayerView view(m, i);
        PlayerCountVector pc = player_message(view);
        long long bits = message_bits(pc.counts.size(), count_bound);
        t.messages.push_back(Message{i, std::move(pc.counts), bits});
    }
    return t;
}

SolveResult referee_from_transcript(const Transcript& t, const SolverConfig& cfg) {
    std::vector<PlayerCountVector> msgs;
    msgs.reserve(t.messages.size());
    for (const auto& m : t.messages) msgs.push_back(PlayerCountVector{m.player, m.counts});
    DeckVector b = aggregate(msgs, t.k, t.d);
    return referee_recover(b, t.n, cfg);
}

EqsolveRun run_protocol(const InputMatrix& m, const EqsolveOptions& opts) {
    int k = m.rows(), d = m.alphabet();
    long long n = m.cols();
    if (opts.mode == RunMode::Strict && n >= 2) {
        int need = eqsolve_player_threshold(d, n);
        if (k < need)
            throw ProtocolError("run_protocol: need k >= " + std::to_string(need) +
                                " players for alphabet " + std::to_string(d) + ", n = " +
                                std::to_string(n) + " (pass reduced mode to override)");
    }
    EqsolveRun run;
    // no type occurs more often than there are columns, so n bounds every count
    run.transcript = collect_round(m, "eqsolve", n);
    run.result = referee_from_transcript(run.transcript, opts.solver);
    run.cost.protocol = "eqsolve";
    run.cost.total_bits = run.transcript.total_bits();
    for (const auto& msg : run.transcript.messages) run.cost.per_player_bits.push_back(msg.bits);
    run.cost.analytic_bits = analytic_cost(k, d - 1, n);
    run.cost.coarse_bits = n >= 2 ? coarse_cost(k, d - 1, n) : BigInt(0);
    return run;
}

SplitRun run_split_protocol(const InputMatrix& m, const EqsolveOptions& opts) {
    int k = m.rows(), d = m.alphabet();
    int symbols = d - 1;
    long long n = m.cols();
    long long q = 1;
    for (int i = 0; i < symbols; ++i) q *= 4;
    if (opts.mode == RunMode::Strict && k < q)
        throw ProtocolError("run_split_protocol: need k >= 4^" + std::to_string(symbols) +
                            " = " + std::to_string(q) + " players");
    long long w = floor_pow2_frac(k, q);
    if (w < 2) throw ProtocolError("run_split_protocol: chunk width collapsed below 2");

    SplitRun run;
    run.chunk_width = w;
    const TypeIndexer& idx = shared_indexer(symbols, k);
    run.result.status = SolveStatus::Unique;
    run.result.counts = CountVector{k, symbols, std::vector<long long>(idx.size(), 0)};
    run.cost.protocol = "split";
    run.cost.per_player_bits.assign(k, 0);
    for (long long lo = 1; lo <= n; lo += w) {
        long long hi = std::min(n, lo + w - 1);
        InputMatrix chunk(k, static_cast<int>(hi - lo + 1), d);
        for (int i = 1; i <= k; ++i)
            for (long long j = lo; j <= hi; ++j)
                chunk.set(i, static_cast<int>(j - lo + 1), m.at(i, static_cast<int>(j)));
        // each chunk satisfies the single-shot hypothesis by construction
        EqsolveRun sub = run_protocol(chunk, EqsolveOptions{RunMode::Strict, opts.solver});
        sub.transcript.protocol = "split-chunk";
        run.result.nodes += sub.result.nodes;
        if (sub.result.status != SolveStatus::Unique) {
            run.result.status = sub.result.status;
            run.result.counts = sub.result.counts;
            run.result.second = sub.result.second;
            return run;
        }
        for (int i = 0; i < idx.size(); ++i) run.result.counts.counts[i] += sub.result.counts.counts[i];
        run.chunk_bits.push_back(sub.cost.total_bits);
        run.cost.total_bits += sub.cost.total_bits;
        for (int i = 0; i < k; ++i) run.cost.per_player_bits[i] += sub.cost.per_player_bits[i];
        run.cost.analytic_bits += sub.cost.analytic_bits;
        run.cost.coarse_bits += (hi - lo + 1) >= 2 ? coarse_cost(k, symbols, hi - lo + 1) : BigInt(0);
        run.chunk_transcripts.push_back(std::move(sub.transcript));
    }
    if (n == 0) run.result.status = SolveStatus::Unique;
    return run;
}

}  // namespace noflab
