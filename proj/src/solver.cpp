#include "forbcfg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>

#include "forbcfg/cache.hpp"
#include "forbcfg/combinatorics.hpp"
#include "forbcfg/induction.hpp"

namespace forbcfg {

namespace {

std::vector<Column> column_universe(std::size_t m, int r) {
    std::vector<Column> cols;
    Column cur(m, 0);
    while (true) {
        cols.push_back(cur);
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (cur[i] + 1 < r) {
                ++cur[i];
                std::fill(cur.begin() + i + 1, cur.end(), 0);
                break;
            }
            if (i == 0) return cols;
        }
        if (m == 0) return cols;
    }
}

// Containment bookkeeping for one family member: for every ordered injection
// of its rows into the m rows, the count per distinct column pattern over the
// currently chosen set, plus the number of patterns still short. A member is
// contained as soon as some injection has no deficient pattern; candidate
// checks ask whether one or two extra columns would close every deficit.
struct MemberState {
    std::size_t k = 0;
    std::size_t npat = 0;
    std::size_t total = 0;
    std::vector<std::size_t> mult;
    std::size_t nsigma = 0;
    std::vector<std::int16_t> pat_id;  // [sigma * U + col] -> pattern index or -1
    std::vector<std::uint32_t> cnt;    // [sigma * npat + d]
    std::vector<std::uint32_t> deficit;  // per sigma: #patterns with cnt < mult

    void init(const RMatrix& f, const std::vector<Column>& universe, std::size_t m) {
        k = f.rows();
        total = f.cols();
        std::vector<Column> patterns;
        for (std::size_t j = 0; j < f.cols(); ++j) {
            if (j == 0 || f.column(j) != f.column(j - 1)) {
                patterns.push_back(f.column(j));
                mult.push_back(1);
            } else {
                ++mult.back();
            }
        }
        npat = patterns.size();
        if (k > m) {
            nsigma = 0;
            return;
        }
        // all ordered injections of k rows into m rows
        std::vector<std::size_t> sel(k);
        std::vector<bool> used(m, false);
        std::vector<std::vector<std::size_t>> sigmas;
        auto rec = [&](auto&& self, std::size_t depth) -> void {
            if (depth == k) {
                sigmas.push_back(sel);
                return;
            }
            for (std::size_t t = 0; t < m; ++t) {
                if (used[t]) continue;
                used[t] = true;
                sel[depth] = t;
                self(self, depth + 1);
                used[t] = false;
            }
        };
        rec(rec, 0);
        nsigma = sigmas.size();
        pat_id.assign(nsigma * universe.size(), -1);
        for (std::size_t s = 0; s < nsigma; ++s) {
            for (std::size_t c = 0; c < universe.size(); ++c) {
                const Column& col = universe[c];
                for (std::size_t d = 0; d < npat; ++d) {
                    bool match = true;
                    for (std::size_t i = 0; i < k; ++i)
                        if (patterns[d][i] != col[sigmas[s][i]]) { match = false; break; }
                    if (match) {
                        pat_id[s * universe.size() + c] = static_cast<std::int16_t>(d);
                        break;
                    }
                }
            }
        }
        cnt.assign(nsigma * npat, 0);
        std::uint32_t full_deficit = 0;
        for (std::size_t d = 0; d < npat; ++d) full_deficit += (mult[d] > 0);
        deficit.assign(nsigma, full_deficit);
    }
};

struct Engine {
    std::size_t m = 0;
    int r = 2;
    std::size_t usize = 0;
    std::vector<MemberState> members;

    void init(std::size_t m_, int r_, const std::vector<RMatrix>& fam,
              const std::vector<Column>& universe) {
        m = m_;
        r = r_;
        usize = universe.size();
        members.resize(fam.size());
        for (std::size_t i = 0; i < fam.size(); ++i)
            members[i].init(fam[i], universe, m_);
    }

    void push_col(std::size_t c) {
        for (MemberState& ms : members) {
            for (std::size_t s = 0; s < ms.nsigma; ++s) {
                const std::int16_t d = ms.pat_id[s * usize + c];
                if (d < 0) continue;
                if (++ms.cnt[s * ms.npat + d] == ms.mult[d]) --ms.deficit[s];
            }
        }
    }
    void pop_col(std::size_t c) {
        for (MemberState& ms : members) {
            for (std::size_t s = 0; s < ms.nsigma; ++s) {
                const std::int16_t d = ms.pat_id[s * usize + c];
                if (d < 0) continue;
                if (ms.cnt[s * ms.npat + d]-- == ms.mult[d]) ++ms.deficit[s];
            }
        }
    }

    // would chosen + c contain a member?
    bool blocked_single(std::size_t c) const {
        for (const MemberState& ms : members) {
            for (std::size_t s = 0; s < ms.nsigma; ++s) {
                if (ms.deficit[s] > 1) continue;
                if (ms.deficit[s] == 0) return true;  // already contained (not expected)
                const std::int16_t d = ms.pat_id[s * usize + c];
                if (d < 0) continue;
                if (ms.cnt[s * ms.npat + d] + 1 == ms.mult[d]) return true;
            }
        }
        return false;
    }

    // would chosen + c + u contain a member? (c already pushed)
    bool blocked_with(std::size_t u) const {
        for (const MemberState& ms : members) {
            for (std::size_t s = 0; s < ms.nsigma; ++s) {
                if (ms.deficit[s] > 1) continue;
                if (ms.deficit[s] == 0) return true;
                const std::int16_t d = ms.pat_id[s * usize + u];
                if (d < 0) continue;
                if (ms.cnt[s * ms.npat + d] + 1 == ms.mult[d]) return true;
            }
        }
        return false;
    }

    // would chosen + all candidates contain a member?
    bool blocked_all(const std::vector<std::size_t>& cand) const {
        for (const MemberState& ms : members) {
            for (std::size_t s = 0; s < ms.nsigma; ++s) {
                if (ms.deficit[s] > cand.size()) continue;
                if (ms.deficit[s] == 0) return true;
                // tally candidate contributions for this injection
                std::uint32_t add[32] = {0};
                for (std::size_t u : cand) {
                    const std::int16_t d = ms.pat_id[s * usize + u];
                    if (d >= 0) ++add[d];
                }
                bool sat = true;
                for (std::size_t d = 0; d < ms.npat; ++d)
                    if (ms.cnt[s * ms.npat + d] + add[d] < ms.mult[d]) { sat = false; break; }
                if (sat) return true;
            }
        }
        return false;
    }
};

struct Search {
    std::size_t m;
    int r;
    std::vector<Column> universe;
    std::vector<RMatrix> fam;
    std::atomic<std::uint64_t> best{0};
    std::vector<std::size_t> best_set;
    std::mutex best_mu;
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t node_budget = 0;
    std::atomic<bool> budget_hit{false};

    // row-permutation action on universe indices; empty when m! is too large
    std::vector<std::vector<std::uint32_t>> perm_col;

    void build_perms() {
        if (m > 7) return;  // factorial sweep too wide; correctness is unaffected
        std::vector<std::size_t> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<std::uint32_t> map(universe.size());
            for (std::size_t c = 0; c < universe.size(); ++c) {
                std::size_t idx = 0;
                for (std::size_t i = 0; i < m; ++i) idx = idx * r + universe[c][perm[i]];
                map[c] = static_cast<std::uint32_t>(idx);
            }
            perm_col.push_back(std::move(map));
        }
    }

    // Lex-least orbit representative test over row permutations. Deleting the
    // largest element preserves the property, so pruning non-canonical
    // prefixes still reaches one witness per orbit.
    bool canonical(const std::vector<std::size_t>& chosen, std::vector<std::size_t>& tmp) {
        const std::size_t n = chosen.size();
        tmp.resize(n);
        for (const auto& map : perm_col) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t v = map[chosen[i]];
                std::size_t j = i;
                while (j > 0 && tmp[j - 1] > v) {
                    tmp[j] = tmp[j - 1];
                    --j;
                }
                tmp[j] = v;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (tmp[i] != chosen[i]) {
                    if (tmp[i] < chosen[i]) return false;
                    break;
                }
            }
        }
        return true;
    }

    void report(const std::vector<std::size_t>& set) {
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (set.size() > cur && !best.compare_exchange_weak(cur, set.size())) {}
        std::scoped_lock lk(best_mu);
        if (set.size() > best_set.size()) best_set = set;
    }

    // chosen: selected universe indices (mirrored in eng state); cand:
    // indices each individually addable to chosen, in increasing order.
    void dfs(Engine& eng, std::vector<std::size_t>& chosen, std::vector<std::size_t> cand,
             std::vector<std::size_t>& tmp) {
        if (budget_hit.load(std::memory_order_relaxed)) return;
        if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > node_budget) {
            budget_hit.store(true);
            return;
        }
        if (chosen.size() > best.load(std::memory_order_relaxed)) report(chosen);
        if (chosen.size() + cand.size() <= best.load(std::memory_order_relaxed)) return;

        // closure: when the whole candidate set fits at once, take it
        if (!cand.empty() && !eng.blocked_all(cand)) {
            if (chosen.size() + cand.size() > best.load(std::memory_order_relaxed)) {
                std::vector<std::size_t> all = chosen;
                all.insert(all.end(), cand.begin(), cand.end());
                report(all);
            }
            return;
        }

        for (std::size_t t = 0; t < cand.size(); ++t) {
            if (chosen.size() + (cand.size() - t) <= best.load(std::memory_order_relaxed))
                return;
            chosen.push_back(cand[t]);
            if (canonical(chosen, tmp)) {
                eng.push_col(cand[t]);
                std::vector<std::size_t> next;
                next.reserve(cand.size() - t - 1);
                for (std::size_t u = t + 1; u < cand.size(); ++u)
                    if (!eng.blocked_with(cand[u])) next.push_back(cand[u]);
                dfs(eng, chosen, std::move(next), tmp);
                eng.pop_col(cand[t]);
            }
            chosen.pop_back();
            if (budget_hit.load(std::memory_order_relaxed)) return;
        }
    }
};

}  // namespace

SolveResult exact_forb(std::size_t m, int r, const ConfigFamily& fam,
                       const SolveOptions& opts) {
    const auto t0 = std::chrono::steady_clock::now();
    SolveResult res;
    res.status = "exact";

    if (opts.cache) {
        if (auto hit = opts.cache->lookup_exact(m, r, fam.digest())) {
            res.value = *hit;
            res.from_cache = true;
            res.witness = RMatrix(m, r, {});
            res.seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - t0).count();
            return res;
        }
    }

    double universe_size = std::pow(static_cast<double>(r), static_cast<double>(m));
    if (universe_size > static_cast<double>(opts.column_budget))
        throw std::invalid_argument("exact_forb: r^m exceeds the enumeration budget");
    for (const RMatrix& f : fam.members()) {
        if (support(f).cols() > 32)
            throw std::invalid_argument("exact_forb: family member has too many distinct columns");
    }

    Search s;
    s.m = m;
    s.r = r;
    s.universe = column_universe(m, r);
    s.fam = fam.members();
    s.node_budget = opts.node_budget;
    s.build_perms();

    Engine engine0;
    engine0.init(m, r, s.fam, s.universe);

    // greedy seed pins a strong incumbent before the exact search
    std::vector<std::size_t> seed;
    for (std::size_t c = 0; c < s.universe.size(); ++c) {
        if (!engine0.blocked_single(c)) {
            seed.push_back(c);
            engine0.push_col(c);
        }
    }
    for (std::size_t i = seed.size(); i-- > 0;) engine0.pop_col(seed[i]);
    s.best = seed.size();
    s.best_set = seed;

    std::vector<std::size_t> roots;
    for (std::size_t c = 0; c < s.universe.size(); ++c)
        if (!engine0.blocked_single(c)) roots.push_back(c);

    const int threads = std::max(1, opts.threads);
    if (threads == 1) {
        std::vector<std::size_t> chosen, tmp;
        s.dfs(engine0, chosen, roots, tmp);
    } else {
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next_root{0};
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                Engine engine;
                engine.init(s.m, s.r, s.fam, s.universe);
                std::vector<std::size_t> tmp;
                while (true) {
                    const std::size_t idx = next_root.fetch_add(1);
                    if (idx >= roots.size()) return;
                    if (roots.size() - idx <= s.best.load(std::memory_order_relaxed))
                        return;  // later roots cannot beat the incumbent
                    std::vector<std::size_t> chosen{roots[idx]};
                    if (!s.canonical(chosen, tmp)) continue;
                    engine.push_col(roots[idx]);
                    std::vector<std::size_t> cand;
                    for (std::size_t u = idx + 1; u < roots.size(); ++u)
                        if (!engine.blocked_with(roots[u])) cand.push_back(roots[u]);
                    s.dfs(engine, chosen, std::move(cand), tmp);
                    engine.pop_col(roots[idx]);
                }
            });
        }
        for (auto& th : pool) th.join();
    }

    res.value = s.best.load();
    res.nodes = s.nodes.load();
    res.status = s.budget_hit ? "lower-bound-only" : "exact";
    {
        std::vector<Column> cols;
        cols.reserve(s.best_set.size());
        for (std::size_t c : s.best_set) cols.push_back(s.universe[c]);
        res.witness = RMatrix(m, r, std::move(cols));
    }
    res.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (opts.cache && res.status == "exact")
        opts.cache->store(m, r, fam.digest(), res.value, "exact");
    return res;
}

BigUint sauer_formula(std::uint64_t m, std::uint64_t k) {
    BigUint acc(0);
    for (std::uint64_t i = 0; i < k; ++i) acc += binomial(m, i);
    return acc;
}

bool ks_equality_check(std::size_t m, std::size_t k, std::size_t s,
                       const SolveOptions& opts) {
    SolveResult res = exact_forb(m, 2, single(make_Ks(k, s)), opts);
    if (res.status != "exact") throw std::runtime_error("ks_equality_check: budget exhausted");
    return BigUint(res.value) == sauer_formula(m, k);
}

BigUint support_bound(std::uint64_t m, int r, const RMatrix& f, const BigUint& forb_supp) {
    const std::uint64_t k = f.rows();
    const std::uint64_t mu = max_multiplicity(f);
    const std::uint64_t s = support(f).cols();
    BigUint extra = binomial(m, k);
    extra *= binomial(static_cast<std::uint64_t>(r), 2);
    extra *= BigUint(mu - 1);
    extra *= BigUint(factorial_u64(k));
    extra *= BigUint(s);
    return forb_supp + extra;
}

BigUint block_formula(std::uint64_t m, int r, std::uint64_t p, std::uint64_t q) {
    if (r < 3) throw std::invalid_argument("block_formula: r must be >= 3");
    if (p < 1 || q < 1) throw std::invalid_argument("block_formula: p,q must be >= 1");
    if (m < (p - 1) * static_cast<std::uint64_t>(r - 1))
        throw std::invalid_argument("block_formula: m below (p-1)(r-1)");
    return bounded_symbol_column_count(m, static_cast<std::uint32_t>(r),
                                       static_cast<std::uint32_t>(p)) +
           BigUint((q - 1) * static_cast<std::uint64_t>(r - 1)) * binomial(m, p);
}

SBlockValue s_block_value(std::uint64_t m, int r, std::uint64_t p, std::uint64_t q) {
    if (p < 2) throw std::invalid_argument("s_block_value: p must be >= 2");
    if (r < 3) throw std::invalid_argument("s_block_value: r must be >= 3");
    if (q < 1) throw std::invalid_argument("s_block_value: q must be >= 1");
    BigUint threshold = bigpow(BigUint(static_cast<std::uint64_t>(r)),
                               static_cast<std::uint64_t>(r) * (q - 1)) *
                            BigUint(p - 1) +
                        BigUint(1);
    if (BigUint(m) < threshold)
        throw std::invalid_argument("s_block_value: m below the threshold r^{r(q-1)}(p-1)+1 (" +
                                    threshold.str() + "); the value may differ there");
    SBlockValue out;
    out.value = static_cast<std::uint64_t>(r) * (q - 1);
    if (q == 1)
        out.note = "q=1 gives value 0, which small cases contradict; treat with care";
    return out;
}

InductionCheck induction_inequality_check(std::size_t m, const RMatrix& f,
                                          const SolveOptions& opts) {
    if (f.alphabet() != 2)
        throw std::invalid_argument("induction_inequality_check: 2-symbol matrices only");
    InductionCheck out;
    SolveResult lhs = exact_forb(m, 2, single(f), opts);
    std::vector<RMatrix> chf = ch(f);
    SolveResult rhs_ch = exact_forb(m - 1, 2, ConfigFamily(2, chf), opts);
    SolveResult rhs_same = exact_forb(m - 1, 2, single(f), opts);
    if (lhs.status != "exact" || rhs_ch.status != "exact" || rhs_same.status != "exact")
        throw std::runtime_error("induction_inequality_check: budget exhausted");
    out.lhs = lhs.value;
    out.rhs_ch = rhs_ch.value;
    out.rhs_same = rhs_same.value;
    out.holds = out.lhs <= out.rhs_ch + out.rhs_same;
    return out;
}

}  // namespace forbcfg
