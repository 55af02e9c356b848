#include "noflab/deck_solver.hpp"

#include <algorithm>
#include <cstdlib>

#include "noflab/math_util.hpp"

namespace noflab {

// Types of level <= k-1 occupy the same indices in TypeIndexer(sym, k) and
// TypeIndexer(sym, k-1): the enumeration is level-major. Deck vectors are
// addressed through that shared prefix throughout this file.

DeckVector deck_of_counts(const CountVector& y) {
    const TypeIndexer& vars = shared_indexer(y.symbols, y.k);
    if (static_cast<int>(y.counts.size()) != vars.size())
        throw std::invalid_argument("deck_of_counts: count vector has wrong length");
    DeckVector b{y.k, y.symbols, std::vector<long long>(vars.prefix_size(y.k - 1), 0)};
    for (int i = 0; i < vars.size(); ++i) {
        long long c = y.counts[i];
        if (c < 0) throw std::invalid_argument("deck_of_counts: negative count");
        if (c == 0) continue;
        const ColumnType& e = vars.type_at(i);
        int lvl = e.level();
        if (lvl <= y.k - 1) b.counts[i] += (y.k - lvl) * c;
        for (int s = 1; s <= y.symbols; ++s)
            if (e.counts[s - 1] > 0) b.counts[vars.index_of(e.dropped(s))] += e.counts[s - 1] * c;
    }
    return b;
}

DeletionSystem build_system(const DeckVector& b) {
    const TypeIndexer& vars = shared_indexer(b.symbols, b.k);
    int eq_count = vars.prefix_size(b.k - 1);
    if (static_cast<int>(b.counts.size()) != eq_count)
        throw std::invalid_argument("build_system: deck vector has wrong length");
    DeletionSystem sys{b.k, b.symbols, b.counts, {}};
    sys.equations.resize(eq_count);
    for (int q = 0; q < eq_count; ++q) {
        const ColumnType& e = vars.type_at(q);
        auto& terms = sys.equations[q];
        terms.push_back({q, static_cast<long long>(b.k - e.level())});
        for (int s = 1; s <= b.symbols; ++s)
            terms.push_back({vars.index_of(e.bumped(s)), static_cast<long long>(e.counts[s - 1] + 1)});
    }
    return sys;
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Unique: return "unique";
        case SolveStatus::Ambiguous: return "ambiguous";
        case SolveStatus::NoSolution: return "no-solution";
        case SolveStatus::LimitExceeded: return "limit-exceeded";
    }
    return "?";
}

namespace {

struct UniqueSearch {
    const DeletionSystem& sys;
    const TypeIndexer& vars;
    long long n;
    const SolverConfig& cfg;

    // candidate types in canonical order with their deck contributions
    std::vector<int> cand;                                        // var indices
    std::vector<std::vector<std::pair<int, long long>>> contrib;  // per candidate: (eq, coef)
    std::vector<std::vector<int>> close_after;                    // eqs fully decided at this candidate

    std::vector<long long> residual;
    std::vector<long long> cur;
    long long sum = 0;
    long long nodes = 0;
    bool limit_hit = false;
    int want;  // how many solutions before stopping
    std::vector<std::vector<long long>> found;

    UniqueSearch(const DeletionSystem& s, long long n_, const SolverConfig& c)
        : sys(s), vars(shared_indexer(s.symbols, s.k)), n(n_), cfg(c) {
        want = cfg.detect_ambiguity ? 2 : 1;
    }

    // A type can occur in a solution only if every deck entry it touches is positive.
    bool supported(int v) const {
        const ColumnType& e = vars.type_at(v);
        int lvl = e.level();
        if (lvl <= sys.k - 1 && sys.rhs[v] == 0) return false;
        for (int s = 1; s <= sys.symbols; ++s)
            if (e.counts[s - 1] > 0 && sys.rhs[vars.index_of(e.dropped(s))] == 0) return false;
        return true;
    }

    bool prepare() {  // false: trivially no solution
        for (long long r : sys.rhs)
            if (r < 0) return false;
        long long total = 0;
        for (long long r : sys.rhs) total += r;
        if (total != static_cast<long long>(sys.k) * n) return false;
        for (int v = 0; v < vars.size(); ++v)
            if (supported(v)) cand.push_back(v);
        contrib.resize(cand.size());
        for (std::size_t p = 0; p < cand.size(); ++p) {
            const ColumnType& e = vars.type_at(cand[p]);
            int lvl = e.level();
            if (lvl <= sys.k - 1) contrib[p].push_back({cand[p], sys.k - lvl});
            for (int s = 1; s <= sys.symbols; ++s)
                if (e.counts[s - 1] > 0)
                    contrib[p].push_back({vars.index_of(e.dropped(s)), e.counts[s - 1]});
        }
        // last candidate touching each equation; untouched equations must read zero
        std::vector<int> last(sys.rhs.size(), -1);
        for (std::size_t p = 0; p < cand.size(); ++p)
            for (auto [eq, co] : contrib[p]) last[eq] = static_cast<int>(p);
        close_after.resize(cand.size());
        for (std::size_t q = 0; q < sys.rhs.size(); ++q) {
            if (last[q] == -1) {
                if (sys.rhs[q] != 0) return false;
            } else {
                close_after[last[q]].push_back(static_cast<int>(q));
            }
        }
        residual = sys.rhs;
        cur.assign(cand.size(), 0);
        return true;
    }

    bool dfs(std::size_t pos) {  // true: stop the whole search
        if (pos == cand.size()) {
            if (sum != n) return false;
            std::vector<long long> full(vars.size(), 0);
            for (std::size_t p = 0; p < cand.size(); ++p) full[cand[p]] = cur[p];
            found.push_back(std::move(full));
            return static_cast<int>(found.size()) >= want;
        }
        long long mmax = n - sum;
        for (auto [eq, co] : contrib[pos]) mmax = std::min(mmax, residual[eq] / co);
        for (long long m = mmax; m >= 0; --m) {
            if (++nodes > cfg.node_limit) {
                limit_hit = true;
                return true;
            }
            for (auto [eq, co] : contrib[pos]) residual[eq] -= co * m;
            sum += m;
            cur[pos] = m;
            bool closed_ok = true;
            for (int q : close_after[pos])
                if (residual[q] != 0) {
                    closed_ok = false;
                    break;
                }
            if (closed_ok && dfs(pos + 1)) return true;
            for (auto [eq, co] : contrib[pos]) residual[eq] += co * m;
            sum -= m;
            cur[pos] = 0;
        }
        return false;
    }
};

}  // namespace

SolveResult solve_unique(const DeletionSystem& sys, long long n, const SolverConfig& cfg) {
    if (n < 0) throw std::invalid_argument("solve_unique: negative n");
    SolveResult res;
    UniqueSearch search(sys, n, cfg);
    if (!search.prepare()) {
        res.status = SolveStatus::NoSolution;
        return res;
    }
    search.dfs(0);
    res.nodes = search.nodes;
    auto make_cv = [&](std::vector<long long>&& v) {
        return CountVector{sys.k, sys.symbols, std::move(v)};
    };
    if (search.limit_hit && static_cast<int>(search.found.size()) < 2) {
        res.status = SolveStatus::LimitExceeded;
        if (!search.found.empty()) res.counts = make_cv(std::move(search.found[0]));
        return res;
    }
    switch (search.found.size()) {
        case 0: res.status = SolveStatus::NoSolution; break;
        case 1:
            res.status = SolveStatus::Unique;
            res.counts = make_cv(std::move(search.found[0]));
            break;
        default:
            res.status = SolveStatus::Ambiguous;
            res.counts = make_cv(std::move(search.found[0]));
            res.second = make_cv(std::move(search.found[1]));
    }
    return res;
}

namespace {

void brute_rec(const TypeIndexer& vars, const std::vector<long long>& target, int k, int pos,
               long long left, std::vector<long long>& deck, std::vector<long long>& pick,
               long long& steps, long long limit, std::vector<CountVector>& out, int symbols) {
    if (++steps > limit) throw std::runtime_error("brute_force_solutions: enumeration limit exceeded");
    if (left == 0) {
        // remaining types contribute nothing; accept iff deck matches exactly
        if (std::equal(deck.begin(), deck.end(), target.begin()))
            out.push_back(CountVector{k, symbols, pick});
        return;
    }
    if (pos == vars.size()) return;
    const ColumnType& e = vars.type_at(pos);
    int lvl = e.level();
    // contributions of one column of this type
    std::vector<std::pair<int, long long>> delta;
    if (lvl <= k - 1) delta.push_back({pos, k - lvl});
    for (int s = 1; s <= symbols; ++s)
        if (e.counts[s - 1] > 0) delta.push_back({vars.index_of(e.dropped(s)), e.counts[s - 1]});
    long long applied = 0;
    for (long long m = 0; m <= left; ++m) {
        if (m > 0) {
            bool feasible = true;
            for (auto [q, co] : delta) {
                deck[q] += co;
                if (deck[q] > target[q]) feasible = false;
            }
            ++applied;
            // overshooting the target cannot be repaired by later columns
            if (!feasible) break;
            pick[pos] = m;
        }
        brute_rec(vars, target, k, pos + 1, left - m, deck, pick, steps, limit, out, symbols);
    }
    for (; applied > 0; --applied)
        for (auto [q, co] : delta) deck[q] -= co;
    pick[pos] = 0;
}

}  // namespace

std::vector<CountVector> brute_force_solutions(const DeckVector& b, long long n, long long limit) {
    const TypeIndexer& vars = shared_indexer(b.symbols, b.k);
    if (static_cast<int>(b.counts.size()) != vars.prefix_size(b.k - 1))
        throw std::invalid_argument("brute_force_solutions: deck vector has wrong length");
    std::vector<CountVector> out;
    std::vector<long long> deck(b.counts.size(), 0), pick(vars.size(), 0);
    long long steps = 0;
    brute_rec(vars, b.counts, b.k, 0, n, deck, pick, steps, limit, out, b.symbols);
    return out;
}

namespace {

// Kernel search plan: assign the free coordinates (last symbol count zero)
// level by level, then each equation at type e, processed in ascending last
// coordinate within its level, determines the coordinate at e + unit_last.
struct KernelSearch {
    int k, symbols;
    long long bound, node_limit;
    const TypeIndexer& vars;

    struct Step {
        bool branch;              // branch a free variable / compute a pivot
        int var;                  // free var index, or pivot var index
        int eq;                   // defining equation (type index), compute steps only
        long long divisor;        // e_last + 1
        std::vector<std::pair<int, long long>> terms;  // (var, coef) of non-pivot terms
    };
    std::vector<Step> steps;

    std::vector<long long> z;
    long long used = 0;  // L1 consumed
    long long nodes = 0;
    bool limit_hit = false;
    std::optional<HomogeneousWitness> hit;

    KernelSearch(int k_, int symbols_, long long bound_, long long node_limit_)
        : k(k_), symbols(symbols_), bound(bound_), node_limit(node_limit_), vars(shared_indexer(symbols_, k_)) {
        build_steps();
        z.assign(vars.size(), 0);
    }

    void build_steps() {
        int D = symbols;
        // free variables of each level, canonical order
        std::vector<std::vector<int>> free_at(k + 1), eq_at(k);
        for (int v = 0; v < vars.size(); ++v) {
            const ColumnType& e = vars.type_at(v);
            if (e.counts[D - 1] == 0) free_at[e.level()].push_back(v);
        }
        for (int q = 0; q < vars.prefix_size(k - 1); ++q) eq_at[vars.type_at(q).level()].push_back(q);
        for (auto& eqs : eq_at)
            std::stable_sort(eqs.begin(), eqs.end(), [&](int a, int b) {
                return vars.type_at(a).counts[D - 1] < vars.type_at(b).counts[D - 1];
            });
        for (int lvl = 0; lvl <= k; ++lvl) {
            for (int v : free_at[lvl]) steps.push_back(Step{true, v, -1, 0, {}});
            if (lvl >= 1)
                for (int q : eq_at[lvl - 1]) {
                    const ColumnType& e = vars.type_at(q);
                    Step st{false, vars.index_of(e.bumped(D)), q,
                            static_cast<long long>(e.counts[D - 1] + 1), {}};
                    st.terms.push_back({q, static_cast<long long>(k - e.level())});
                    for (int s = 1; s < D; ++s)
                        st.terms.push_back({vars.index_of(e.bumped(s)),
                                            static_cast<long long>(e.counts[s - 1] + 1)});
                    steps.push_back(std::move(st));
                }
        }
    }

    bool dfs(std::size_t si, bool any_nonzero) {
        if (si == steps.size()) {
            if (!any_nonzero) return false;
            std::vector<long long> zz = z;
            hit = HomogeneousWitness{k, symbols, std::move(zz), used};
            return true;
        }
        const Step& st = steps[si];
        if (!st.branch) {
            long long acc = 0;
            for (auto [v, co] : st.terms) acc += co * z[v];
            if (acc % st.divisor != 0) return false;
            long long val = -acc / st.divisor;
            if (used + std::abs(val) > bound) return false;
            z[st.var] = val;
            used += std::abs(val);
            bool stop = dfs(si + 1, any_nonzero || val != 0);
            used -= std::abs(val);
            z[st.var] = 0;
            return stop;
        }
        long long budget = bound - used;
        for (long long mag = 0; mag <= budget; ++mag) {
            for (int sgn : {+1, -1}) {
                if (mag == 0 && sgn < 0) continue;
                if (sgn < 0 && !any_nonzero) continue;  // first nonzero free value positive
                if (++nodes > node_limit) {
                    limit_hit = true;
                    return true;
                }
                long long val = sgn * mag;
                z[st.var] = val;
                used += mag;
                bool stop = dfs(si + 1, any_nonzero || val != 0);
                used -= mag;
                z[st.var] = 0;
                if (stop) return true;
            }
        }
        return false;
    }
};

}  // namespace

std::optional<HomogeneousWitness> homogeneous_search(int k, int symbols, long long l1_bound,
                                                     long long node_limit) {
    if (k < 1 || symbols < 1 || l1_bound < 0) throw std::invalid_argument("homogeneous_search: bad arguments");
    KernelSearch ks(k, symbols, l1_bound, node_limit);
    ks.dfs(0, false);
    if (ks.limit_hit && !ks.hit) throw std::runtime_error("homogeneous_search: node limit exceeded");
    return ks.hit;
}

HomogeneousWitness d1_closed_form(long long z0, int k) {
    if (k < 1 || k > 62 || z0 == 0) throw std::invalid_argument("d1_closed_form: bad arguments");
    HomogeneousWitness w{k, 1, std::vector<long long>(k + 1, 0), 0};
    for (int i = 0; i <= k; ++i) {
        long long c = binomial_ll(k, i) * z0;
        w.z[i] = (i % 2 == 0) ? c : -c;
        w.l1 += std::abs(w.z[i]);
    }
    return w;
}

std::optional<HomogeneousWitness> minimal_kernel_witness(int k, int symbols, long long l1_cap,
                                                         long long node_limit) {
    for (long long b = 1; b <= l1_cap; ++b) {
        auto w = homogeneous_search(k, symbols, b, node_limit);
        if (w) return w;
    }
    return std::nullopt;
}

}  // namespace noflab
