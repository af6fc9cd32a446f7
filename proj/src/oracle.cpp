#include "lv/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <set>
#include <thread>

#include "lv/errors.hpp"

namespace lv {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

u32 mod_mul(u32 a, u32 b, u32 p) { return static_cast<u32>(u64(a) * b % p); }
u32 mod_sub(u32 a, u32 b, u32 p) { return (a + p - b) % p; }
u32 mod_add(u32 a, u32 b, u32 p) { return (a + b) % p; }

u32 det_modp(std::vector<u32> m, int n, u32 p) {
    u32 result = 1;
    for (int c = 0; c < n; ++c) {
        int sel = -1;
        for (int r = c; r < n && sel < 0; ++r)
            if (m[r * n + c] != 0) sel = r;
        if (sel < 0) return 0;
        if (sel != c) {
            for (int j = 0; j < n; ++j) std::swap(m[sel * n + j], m[c * n + j]);
            result = p - result;
        }
        result = mod_mul(result, m[c * n + c], p);
        // inverse of the pivot via Fermat
        u32 inv = 1, base = m[c * n + c], e = p - 2;
        while (e) {
            if (e & 1) inv = mod_mul(inv, base, p);
            base = mod_mul(base, base, p);
            e >>= 1;
        }
        for (int r = c + 1; r < n; ++r) {
            if (m[r * n + c] == 0) continue;
            const u32 f = mod_mul(m[r * n + c], inv, p);
            for (int j = c; j < n; ++j)
                m[r * n + j] = mod_sub(m[r * n + j], mod_mul(f, m[c * n + j], p), p);
        }
    }
    return result % p;
}

std::vector<u32> reduce_params(const LVParameters& params, u32 p) {
    std::vector<u32> c(params.n);
    for (int i = 0; i < params.n; ++i) {
        auto r = reduce_mod(params.C[i], p);
        if (!r) throw inadmissible_prime_error("coefficient denominator divisible by p");
        c[i] = *r;
    }
    return c;
}

// One coefficient equation of the commutation system, with the flat
// positions of the entries it reads. E(i,j) abbreviates
// m[i-1][j] - C[i]*m[i+1][j], and e(i) the same with constants.
struct Equation {
    enum class Type { Square, Adjacent, Far, AffLinear, AffConstant } type;
    int i = 0, q = 0, r = 0;
};

struct Search {
    int n;
    u32 p;
    bool affine;
    std::vector<u32> c;           // reduced coefficients
    int mat_count, total_count;
    std::vector<int> pos_of;      // variable index (i*n+j or n*n+i) -> assignment position
    std::vector<int> order;       // position -> variable index
    std::vector<std::vector<Equation>> triggers; // by position

    int mpos(int i, int j) const { return pos_of[cyc(i, n) * n + cyc(j, n)]; }
    int bpos(int i) const { return pos_of[n * n + cyc(i, n)]; }

    u32 E(const std::vector<u32>& v, int i, int j) const {
        return mod_sub(v[mpos(i - 1, j)], mod_mul(c[cyc(i, n)], v[mpos(i + 1, j)], p), p);
    }
    u32 e0(const std::vector<u32>& v, int i) const {
        return mod_sub(v[bpos(i - 1)], mod_mul(c[cyc(i, n)], v[bpos(i + 1)], p), p);
    }

    bool holds(const Equation& eq, const std::vector<u32>& v) const {
        switch (eq.type) {
            case Equation::Type::Square:
                return mod_mul(v[mpos(eq.i, eq.q)], E(v, eq.i, eq.q), p) == 0;
            case Equation::Type::Adjacent: {
                // pair {q, q+1}: lhs from the derivation images, rhs from the
                // product expansion
                const u32 lhs = mod_sub(v[mpos(eq.i, eq.q + 1)],
                                        mod_mul(c[eq.q], v[mpos(eq.i, eq.q)], p), p);
                const u32 rhs = mod_add(mod_mul(v[mpos(eq.i, eq.q)], E(v, eq.i, eq.q + 1), p),
                                        mod_mul(v[mpos(eq.i, eq.q + 1)], E(v, eq.i, eq.q), p), p);
                return lhs == rhs;
            }
            case Equation::Type::Far:
                return mod_add(mod_mul(v[mpos(eq.i, eq.q)], E(v, eq.i, eq.r), p),
                               mod_mul(v[mpos(eq.i, eq.r)], E(v, eq.i, eq.q), p), p) == 0;
            case Equation::Type::AffLinear:
                return mod_add(mod_mul(v[bpos(eq.i)], E(v, eq.i, eq.q), p),
                               mod_mul(v[mpos(eq.i, eq.q)], e0(v, eq.i), p), p) == 0;
            case Equation::Type::AffConstant:
                return mod_mul(v[bpos(eq.i)], e0(v, eq.i), p) == 0;
        }
        return false;
    }
};

Search build_search(const LVParameters& params, u32 p, OracleMode mode) {
    Search s;
    s.n = params.n;
    s.p = p;
    s.affine = mode == OracleMode::Affine;
    s.c = reduce_params(params, p);
    const int n = s.n;
    s.mat_count = n * n;
    s.total_count = s.affine ? n * n + n : n * n;

    // row 0 first (the shard seed), then the remaining rows interleaved
    // column by column, then the constants
    s.order.clear();
    for (int j = 0; j < n; ++j) s.order.push_back(0 * n + j);
    for (int j = 0; j < n; ++j)
        for (int i = 1; i < n; ++i) s.order.push_back(i * n + j);
    if (s.affine)
        for (int i = 0; i < n; ++i) s.order.push_back(n * n + i);
    s.pos_of.assign(n * n + n, -1);
    for (int pos = 0; pos < static_cast<int>(s.order.size()); ++pos) s.pos_of[s.order[pos]] = pos;

    // attach each equation to the last position among its variables
    s.triggers.assign(s.total_count, {});
    auto attach = [&](const Equation& eq, std::initializer_list<int> positions) {
        int last = -1;
        for (int pos : positions) last = std::max(last, pos);
        s.triggers[last].push_back(eq);
    };
    for (int i = 0; i < n; ++i) {
        for (int q = 0; q < n; ++q) {
            attach({Equation::Type::Square, i, q, q},
                   {s.mpos(i, q), s.mpos(i - 1, q), s.mpos(i + 1, q)});
            for (int r = q + 1; r < n; ++r) {
                const bool adjacent = (q + 1) % n == r || (r + 1) % n == q;
                const auto vars = {s.mpos(i, q),     s.mpos(i, r),     s.mpos(i - 1, q),
                                   s.mpos(i + 1, q), s.mpos(i - 1, r), s.mpos(i + 1, r)};
                if (adjacent) {
                    const int a = (q + 1) % n == r ? q : r; // pair is {a, a+1}
                    attach({Equation::Type::Adjacent, i, a, 0}, vars);
                } else {
                    attach({Equation::Type::Far, i, q, r}, vars);
                }
            }
        }
        if (s.affine) {
            for (int q = 0; q < n; ++q)
                attach({Equation::Type::AffLinear, i, q, 0},
                       {s.bpos(i), s.bpos(i - 1), s.bpos(i + 1), s.mpos(i, q), s.mpos(i - 1, q),
                        s.mpos(i + 1, q)});
            attach({Equation::Type::AffConstant, i, 0, 0},
                   {s.bpos(i), s.bpos(i - 1), s.bpos(i + 1)});
        }
    }
    return s;
}

struct ShardRunner {
    const Search& s;
    u64 budget;
    std::atomic<u64>& visited;
    std::atomic<bool>& stop;

    u64 local_nodes = 0;

    bool bump() {
        if (++local_nodes % 1024 == 0) {
            visited.fetch_add(1024, std::memory_order_relaxed);
            if (visited.load(std::memory_order_relaxed) > budget) {
                stop.store(true, std::memory_order_relaxed);
            }
            if (stop.load(std::memory_order_relaxed)) return false;
        }
        return true;
    }
    void flush() { visited.fetch_add(local_nodes % 1024, std::memory_order_relaxed); }

    bool check(int pos, const std::vector<u32>& v) const {
        for (const auto& eq : s.triggers[pos])
            if (!s.holds(eq, v)) return false;
        return true;
    }

    void dfs(int pos, std::vector<u32>& v, std::vector<ModpMap>& out) {
        if (stop.load(std::memory_order_relaxed)) return;
        if (pos == s.mat_count) {
            // constants cannot fix a singular matrix, so gate before either
            // recording (linear mode) or descending into the constants
            std::vector<u32> mat(s.n * s.n);
            for (int i = 0; i < s.n; ++i)
                for (int j = 0; j < s.n; ++j) mat[i * s.n + j] = v[s.mpos(i, j)];
            if (det_modp(std::move(mat), s.n, s.p) == 0) return;
        }
        if (pos == s.total_count) {
            // v is indexed by assignment position; flatten back to
            // row-major matrix order followed by the constants
            ModpMap m;
            m.flat.reserve(s.total_count);
            for (int vi = 0; vi < s.mat_count; ++vi) m.flat.push_back(v[s.pos_of[vi]]);
            if (s.affine)
                for (int i = 0; i < s.n; ++i) m.flat.push_back(v[s.pos_of[s.n * s.n + i]]);
            out.push_back(std::move(m));
            return;
        }
        for (u32 value = 0; value < s.p; ++value) {
            if (!bump()) return;
            v[pos] = value;
            if (check(pos, v)) dfs(pos + 1, v, out);
        }
    }

    void run_shard(u64 seed, std::vector<ModpMap>& out) {
        std::vector<u32> v(s.total_count, 0);
        u64 rest = seed;
        for (int j = 0; j < s.n; ++j) {
            v[j] = static_cast<u32>(rest % s.p);
            rest /= s.p;
        }
        if (!bump()) return;
        for (int pos = 0; pos < s.n; ++pos)
            if (!check(pos, v)) return;
        dfs(s.n, v, out);
    }
};

int resolve_threads(const OracleOptions& options) {
    if (options.threads > 0) return options.threads;
    if (const char* env = std::getenv("ISOTROPY_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) return t;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

} // namespace

const char* oracle_mode_name(OracleMode m) {
    return m == OracleMode::Linear ? "linear" : "affine";
}

bool admissible_prime(const LVParameters& params, u32 p) {
    params.validate();
    std::vector<Rational> vals = params.C;
    vals.emplace_back(0);
    vals.emplace_back(1);
    vals.emplace_back(-1);
    std::vector<u32> red(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) {
        auto r = reduce_mod(vals[i], p);
        if (!r) return false;
        red[i] = *r;
    }
    for (std::size_t i = 0; i < vals.size(); ++i)
        for (std::size_t j = i + 1; j < vals.size(); ++j)
            if ((vals[i] == vals[j]) != (red[i] == red[j])) return false;
    for (int i = 0; i < params.n; ++i)
        for (int j = i; j < params.n; ++j) {
            const bool exact = params.C[i] * params.C[j] == Rational(1);
            const bool modular = mod_mul(red[i], red[j], p) == 1 % p;
            if (exact != modular) return false;
        }
    return true;
}

std::uint32_t first_admissible_prime(const LVParameters& params) {
    for (u32 p : {5u, 7u, 11u, 13u})
        if (admissible_prime(params, p)) return p;
    return 0;
}

OracleRun enumerate_modp(const LVParameters& params, u32 p, OracleMode mode,
                         const OracleOptions& options) {
    if (!admissible_prime(params, p))
        throw inadmissible_prime_error("prime " + std::to_string(p) +
                                       " collapses coefficient relations");
    const Search s = build_search(params, p, mode);

    u64 shard_count = 1;
    for (int j = 0; j < s.n; ++j) shard_count *= p;
    // every shard seed costs at least one visited node
    if (shard_count > options.node_budget)
        throw budget_exceeded_error("node budget exhausted; no partial results are reported");

    std::atomic<u64> visited{0};
    std::atomic<bool> stop{false};
    std::atomic<u64> next_shard{0};

    const int threads = std::min<u64>(resolve_threads(options), shard_count);
    std::vector<std::vector<ModpMap>> per_worker(threads);
    auto worker = [&](int widx) {
        ShardRunner runner{s, options.node_budget, visited, stop};
        while (!stop.load(std::memory_order_relaxed)) {
            const u64 shard = next_shard.fetch_add(1, std::memory_order_relaxed);
            if (shard >= shard_count) break;
            runner.run_shard(shard, per_worker[widx]);
        }
        runner.flush();
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& t : pool) t.join();

    // the visited total equals the tree size whenever no thread stopped
    // early, so this comparison does not depend on the thread count
    if (stop.load() || visited.load() > options.node_budget)
        throw budget_exceeded_error("node budget exhausted; no partial results are reported");

    OracleRun run;
    run.visited_nodes = visited.load();
    for (auto& chunk : per_worker)
        for (auto& m : chunk) run.solutions.push_back(std::move(m));
    // canonical order, independent of sharding and thread scheduling
    std::sort(run.solutions.begin(), run.solutions.end());
    return run;
}

bool modp_commutes(const ModpMap& map, const LVParameters& params, u32 p, OracleMode mode) {
    const int n = params.n;
    const auto c = reduce_params(params, p);
    const bool affine = mode == OracleMode::Affine;
    auto m = [&](int i, int j) { return map.flat[cyc(i, n) * n + cyc(j, n)]; };
    auto b = [&](int i) { return affine ? map.flat[n * n + cyc(i, n)] : 0u; };

    // dense degree-two coefficient arrays indexed by (const | x_j | x_j x_k)
    const int nq = 1 + n + n * (n + 1) / 2;
    auto quad_index = [&](int j, int k) {
        if (j > k) std::swap(j, k);
        return 1 + n + j * n - j * (j - 1) / 2 + (k - j);
    };
    for (int i = 0; i < n; ++i) {
        std::vector<u32> lhs(nq, 0), rhs(nq, 0);
        for (int j = 0; j < n; ++j) {
            lhs[quad_index(j, cyc(j - 1, n))] = mod_add(lhs[quad_index(j, cyc(j - 1, n))], m(i, j), p);
            const u32 t = mod_mul(c[j], m(i, j), p);
            lhs[quad_index(j, cyc(j + 1, n))] = mod_sub(lhs[quad_index(j, cyc(j + 1, n))], t, p);
        }
        std::vector<u32> left(nq, 0), right(nq, 0);
        left[0] = b(i);
        right[0] = mod_sub(b(cyc(i - 1, n)), mod_mul(c[i], b(cyc(i + 1, n)), p), p);
        for (int j = 0; j < n; ++j) {
            left[1 + j] = m(i, j);
            right[1 + j] = mod_sub(m(cyc(i - 1, n), j), mod_mul(c[i], m(cyc(i + 1, n), j), p), p);
        }
        rhs[0] = mod_mul(left[0], right[0], p);
        for (int j = 0; j < n; ++j) {
            rhs[1 + j] = mod_add(mod_mul(left[0], right[1 + j], p),
                                 mod_mul(left[1 + j], right[0], p), p);
            rhs[quad_index(j, j)] = mod_add(rhs[quad_index(j, j)],
                                            mod_mul(left[1 + j], right[1 + j], p), p);
            for (int k = j + 1; k < n; ++k) {
                const u32 cross = mod_add(mod_mul(left[1 + j], right[1 + k], p),
                                          mod_mul(left[1 + k], right[1 + j], p), p);
                rhs[quad_index(j, k)] = mod_add(rhs[quad_index(j, k)], cross, p);
            }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<ModpMap> enumerate_modp_exhaustive(const LVParameters& params, u32 p,
                                               OracleMode mode) {
    const int n = params.n;
    const int mat = n * n;
    const int total = mode == OracleMode::Affine ? mat + n : mat;
    std::vector<ModpMap> out;
    ModpMap cur;
    cur.flat.assign(total, 0);
    while (true) {
        bool nonsingular = det_modp(std::vector<u32>(cur.flat.begin(), cur.flat.begin() + mat),
                                    n, p) != 0;
        if (nonsingular && modp_commutes(cur, params, p, mode)) out.push_back(cur);
        int k = 0;
        while (k < total && ++cur.flat[k] == p) cur.flat[k++] = 0;
        if (k == total) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

OracleReport cross_check(const IsotropyResult& result, const LVParameters& params, u32 p,
                         OracleMode mode, const OracleOptions& options) {
    if (result.kind != IsotropyResult::Kind::Finite)
        throw unsupported_error("cross-check needs a finite classification");
    const auto t0 = std::chrono::steady_clock::now();
    OracleRun run = enumerate_modp(params, p, mode, options);

    OracleReport rep;
    rep.p = p;
    rep.mode = mode;
    rep.count = run.solutions.size();
    rep.visited_nodes = run.visited_nodes;

    std::set<ModpMap> solution_set(run.solutions.begin(), run.solutions.end());
    std::set<ModpMap> hit;
    const int n = params.n;
    for (const auto& element : result.elements) {
        const auto aff = as_affine(element);
        bool reducible = aff.has_value();
        ModpMap red;
        if (aff) {
            for (int i = 0; i < n && reducible; ++i)
                for (int j = 0; j < n && reducible; ++j) {
                    auto r = reduce_mod(aff->matrix[i][j], p);
                    if (!r)
                        reducible = false;
                    else
                        red.flat.push_back(*r);
                }
            if (mode == OracleMode::Affine) {
                for (int i = 0; i < n && reducible; ++i) {
                    auto r = reduce_mod(aff->constants[i], p);
                    if (!r)
                        reducible = false;
                    else
                        red.flat.push_back(*r);
                }
            } else {
                for (int i = 0; i < n && reducible; ++i)
                    if (!aff->constants[i].is_zero()) reducible = false;
            }
        }
        if (!reducible) {
            rep.skipped.push_back(element.str());
            continue;
        }
        if (solution_set.count(red))
            hit.insert(red);
        else
            rep.missing.push_back(element);
    }
    rep.injection = rep.missing.empty() && rep.skipped.empty();
    rep.extras = solution_set.size() - hit.size();
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace lv
