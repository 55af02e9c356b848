#include "noflab/composed.hpp"

namespace noflab {

void ComposedSpec::validate(int k, long long n) const {
    if (static_cast<long long>(inners.size()) != n)
        throw std::invalid_argument("ComposedSpec: need one inner function per column");
    if (static_cast<long long>(outer.size()) != n + 1)
        throw std::invalid_argument("ComposedSpec: outer weight table must have n+1 entries");
    for (const auto& g : inners)
        if (g.arity() != k || g.alphabet() != d)
            throw std::invalid_argument("ComposedSpec: inner table shape mismatch");
    for (auto v : outer)
        if (v > 1) throw std::invalid_argument("ComposedSpec: outer values must be 0/1");
}

SymmetricTable induce_inner(const SymmetricTable& g, std::span<const std::uint8_t> suffix,
                            int l, int t) {
    int d = g.alphabet();
    int full = 1 << t;
    if (full < d) throw std::invalid_argument("induce_inner: t too small for alphabet");
    if (l < 1 || l + static_cast<int>(suffix.size()) != g.arity())
        throw std::invalid_argument("induce_inner: prefix/suffix split does not match arity");
    std::vector<int> suffix_counts(d - 1, 0);
    for (auto v : suffix) {
        if (v >= d) throw std::invalid_argument("induce_inner: suffix value outside alphabet");
        if (v > 0) ++suffix_counts[v - 1];
    }
    const TypeIndexer& prefix_types = shared_indexer(full - 1, l);
    std::vector<std::uint8_t> vals(prefix_types.size(), 0);
    for (int i = 0; i < prefix_types.size(); ++i) {
        const ColumnType& ty = prefix_types.type_at(i);
        bool valid = true;
        for (int v = d; v < full; ++v)
            if (ty.counts[v - 1] > 0) valid = false;  // pattern is not an alphabet symbol
        if (!valid) continue;                          // extended by zero
        ColumnType combined(std::vector<int>(d - 1, 0));
        for (int s = 1; s < d; ++s) combined.counts[s - 1] = ty.counts[s - 1] + suffix_counts[s - 1];
        vals[i] = g.at_type(combined);
    }
    return SymmetricTable(l, full, std::move(vals));
}

InputMatrix replicate(const InputMatrix& prefix_values, std::span<const long long> coeffs) {
    if (static_cast<long long>(coeffs.size()) != prefix_values.cols())
        throw std::invalid_argument("replicate: one coefficient per column required");
    long long total = 0;
    for (long long c : coeffs) {
        if (c < 0) throw std::invalid_argument("replicate: negative coefficient");
        total += c;
    }
    InputMatrix out(prefix_values.rows(), static_cast<int>(total), prefix_values.alphabet());
    int col = 1;
    for (int j = 1; j <= prefix_values.cols(); ++j)
        for (long long c = 0; c < coeffs[j - 1]; ++c, ++col)
            for (int i = 1; i <= prefix_values.rows(); ++i)
                out.set(i, col, prefix_values.at(i, j));
    return out;
}

long long deduce_block_count(const DeckVector& b, int l) {
    if (b.k != l) throw std::invalid_argument("deduce_block_count: deck is not over l rows");
    long long total = 0;
    for (long long c : b.counts) {
        if (c < 0) throw ProtocolError("deduce_block_count: negative deck entry");
        total += c;
    }
    if (total % l != 0)
        throw ProtocolError("deduce_block_count: deck total " + std::to_string(total) +
                            " is not a multiple of " + std::to_string(l));
    return total / l;
}

int full_player_threshold(int d, long long n) {
    int t = Alphabet::of(d).t;
    long long q = 1;
    for (int i = 0; i < (1 << t); ++i) q *= 4;
    return ceil_q_log2(q, n);
}

BigInt full_cost_bound(int l, int t, long long n) {
    BigInt basis = binomial(l + (1 << t) - 1, (1 << t) - 1);
    return basis * basis * l * ceil_log2(2 * n * n);
}

BigInt full_field_count(int l, int t) {
    BigInt census = binomial(l + (1 << t) - 1, (1 << t) - 1);
    return census * census * l;
}

void enforce_field_cap(int l, int t, long long cap) {
    if (cap <= 0) return;
    BigInt fields = full_field_count(l, t);
    if (fields > cap)
        throw ProtocolError("run_full: l = " + std::to_string(l) + " over a " +
                            std::to_string(1 << t) + "-letter census means " + fields.str() +
                            " transmitted count fields; refusing above the cap of " +
                            std::to_string(cap) + " (lower l, or raise field_cap to force it)");
}

BigInt full_cost_coarse(int d, long long n) {
    int t = Alphabet::of(d).t;
    BigInt four_pow = BigInt(1) << (2 * (1 << (t + 2)));  // 4^(2^(t+2))
    BigInt log_pow = 1;
    for (int i = 0; i < 2 * (1 << t); ++i) log_pow *= ceil_log2(n);
    return four_pow * log_pow;
}

namespace {

long long sub_run_term(const SolveResult& solved, const MobiusOrbitKernel& kernel,
                       const SortedTuple& a, int p) {
    const CountVector& y = solved.counts;
    long long term = 0;
    for (std::size_t i = 0; i < y.counts.size(); ++i) {
        if (y.counts[i] == 0) continue;
        SortedTuple rep = tuple_of_type(kernel.orbit_index().type_at(static_cast<int>(i)), y.k);
        long long mval = static_cast<long long>(monomial_sym_eval(a, rep.rows) % p);
        term = (term + (y.counts[i] % p) * mval) % p;
    }
    return term;
}

}  // namespace

long long sub_run_term_from_transcript(const Transcript& t, const SortedTuple& a, int p,
                                       const SolverConfig& cfg) {
    std::vector<PlayerCountVector> msgs;
    for (const auto& m : t.messages) msgs.push_back(PlayerCountVector{m.player, m.counts});
    DeckVector b = aggregate(msgs, t.k, t.d);
    long long blocks = deduce_block_count(b, t.k);
    SolveResult solved = solve_unique(build_system(b), blocks, cfg);
    if (solved.status != SolveStatus::Unique)
        throw ProtocolError("sub_run_term_from_transcript: counts not unique");
    MobiusOrbitKernel kernel(Alphabet::of(t.d).t, t.k);  // only for the orbit index
    return sub_run_term(solved, kernel, a, p);
}

FullRunResult run_full(const InputMatrix& m, const ComposedSpec& spec, const FullRunOptions& opts) {
    int k = m.rows(), d = m.alphabet();
    long long n = m.cols();
    if (d != spec.d) throw std::invalid_argument("run_full: alphabet mismatch");
    spec.validate(k, n);
    if (n < 2) throw std::invalid_argument("run_full: need n >= 2 for the prime window");
    int t = Alphabet::of(d).t;
    int threshold = full_player_threshold(d, n);
    int l;
    if (opts.l > 0) {
        l = opts.l;
        if (l > k) throw std::invalid_argument("run_full: more speaking players than rows");
        if (opts.mode == RunMode::Strict && l < threshold)
            throw ProtocolError("run_full: l = " + std::to_string(l) + " below threshold " +
                                std::to_string(threshold) + " (pass reduced mode to override)");
    } else {
        if (opts.mode == RunMode::Strict && k < threshold)
            throw ProtocolError("run_full: need k >= " + std::to_string(threshold) +
                                " players for d = " + std::to_string(d) + ", n = " +
                                std::to_string(n) + " (pass reduced mode to override)");
        l = std::min(k, threshold);
    }
    enforce_field_cap(l, t, opts.field_cap);

    PrimeModulus prime = smallest_prime_in(n);
    int p = prime.p;

    BlockMatrix encoded = boolean_encode(m, t);
    RowSplit split = restrict_rows(encoded, l);
    InputMatrix prefix = block_values(split.prefix);

    std::optional<MobiusOrbitKernel> own_kernel;
    const MobiusOrbitKernel* kernel = opts.kernel;
    if (kernel) {
        if (kernel->t() != t || kernel->k() != l)
            throw std::invalid_argument("run_full: shared kernel has wrong shape");
    } else {
        own_kernel.emplace(t, l);
        kernel = &*own_kernel;
    }

    std::vector<SymmetricTable> induced;
    induced.reserve(n);
    for (long long j = 0; j < n; ++j)
        induced.push_back(induce_inner(spec.inners[j], split.suffixes[j], l, t));

    FullRunResult res;
    res.speaking_players = l;
    res.bits_per_symbol = t;
    res.prime = p;
    res.cost.protocol = "full";
    res.cost.per_player_bits.assign(l, 0);
    res.cost.analytic_bits = full_cost_bound(l, t, n);
    res.cost.coarse_bits = full_cost_coarse(d, n);

    long long wire_bound = n * static_cast<long long>(p - 1);  // public bound on any count
    long long sum_mod_p = 0;
    for (int ai = 0; ai < kernel->tuple_count(); ++ai) {
        const SortedTuple& a = kernel->tuples()[ai];
        std::vector<long long> coeffs(n);
        for (long long j = 0; j < n; ++j) coeffs[j] = kernel->coefficient_mod(ai, induced[j], p);
        InputMatrix rep = replicate(prefix, coeffs);

        Transcript tr = collect_round(rep, "full-sub", wire_bound);
        std::vector<PlayerCountVector> msgs;
        msgs.reserve(l);
        for (const auto& msg : tr.messages) msgs.push_back(PlayerCountVector{msg.player, msg.counts});
        DeckVector b = aggregate(msgs, l, 1 << t);
        long long blocks = deduce_block_count(b, l);
        SolveResult solved = solve_unique(build_system(b), blocks, opts.solver);

        SubRunInfo info{blocks, tr.total_bits(), solved.status, 0};
        res.cost.total_bits += tr.total_bits();
        for (int i = 0; i < l; ++i) res.cost.per_player_bits[i] += tr.messages[i].bits;
        if (opts.keep_transcripts) res.sub_transcripts.push_back(std::move(tr));

        if (solved.status != SolveStatus::Unique) {
            res.status = solved.status;
            res.offending = ai;
            res.sub_runs.push_back(info);
            return res;
        }
        info.term = sub_run_term(solved, *kernel, a, p);
        sum_mod_p = (sum_mod_p + info.term) % p;
        res.sub_runs.push_back(info);
    }

    res.recovered_sum = sum_mod_p;
    if (sum_mod_p > n)
        throw ProtocolError("run_full: recovered inner-value sum exceeds column count");
    res.value = spec.outer[sum_mod_p];
    return res;
}

}  // namespace noflab
