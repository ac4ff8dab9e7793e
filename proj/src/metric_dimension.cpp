#include "dihedral/metric_dimension.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>

namespace dihedral {
namespace {

void require_matching(const graph& g, const distance_matrix& d) {
    if (g.n_vertices != d.n_vertices) {
        throw std::invalid_argument("distance matrix does not match graph size");
    }
}

bool matrix_connected(const distance_matrix& d) {
    if (d.n_vertices == 0) return true;
    auto r = d.row(0);
    return std::none_of(r.begin(), r.end(),
                        [](dist_t x) { return x == distance_matrix::unreachable; });
}

std::uint64_t binomial_saturated(int n, int k) {
    if (k < 0 || k > n) return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(r);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b;
    return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

// Reusable buffers for the hot distinctness check.
struct resolve_scratch {
    std::vector<std::uint64_t> keys64;
    std::vector<unsigned __int128> keys128;
    std::vector<int> order;
};

// True iff the witness columns give every vertex a distinct distance tuple.
// Tuples are packed into integer keys when they fit (the dominant case);
// otherwise falls back to an index sort with lexicographic row comparison.
bool witnesses_resolve(const distance_matrix& d, std::span<const int> w, int bits,
                       resolve_scratch& scratch) {
    const int n = d.n_vertices;
    const int total_bits = bits * static_cast<int>(w.size());
    if (total_bits <= 64) {
        auto& keys = scratch.keys64;
        keys.resize(n);
        for (int v = 0; v < n; ++v) {
            std::uint64_t key = 0;
            for (int wi : w) key = (key << bits) | static_cast<std::uint64_t>(d.at(v, wi));
            keys[v] = key;
        }
        std::sort(keys.begin(), keys.end());
        return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    }
    if (total_bits <= 128) {
        auto& keys = scratch.keys128;
        keys.resize(n);
        for (int v = 0; v < n; ++v) {
            unsigned __int128 key = 0;
            for (int wi : w) key = (key << bits) | static_cast<unsigned>(d.at(v, wi));
            keys[v] = key;
        }
        std::sort(keys.begin(), keys.end());
        return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
    }
    auto& order = scratch.order;
    order.resize(n);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](int a, int b) {
        for (int wi : w) {
            if (d.at(a, wi) != d.at(b, wi)) return d.at(a, wi) < d.at(b, wi);
        }
        return false;
    };
    std::sort(order.begin(), order.end(), less);
    for (int i = 0; i + 1 < n; ++i) {
        if (!less(order[i], order[i + 1])) return false;
    }
    return true;
}

int bits_per_coordinate(const distance_matrix& d) {
    return std::max(1, static_cast<int>(std::bit_width(
                           static_cast<unsigned>(std::max(1, d.max_distance())))));
}

// Advances c (with c[0] fixed) to the next k-combination below n.
bool next_suffix_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    int i = k - 1;
    while (i >= 1 && c[i] == n - k + i) --i;
    if (i == 0) return false;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    return true;
}

// Scans one lexicographic block (all k-subsets whose smallest member is
// `first`) and returns the block's first resolving subset, if any. Abandons
// the block once a strictly smaller block reports success.
std::optional<std::vector<int>> scan_block(const distance_matrix& d, int k, int first,
                                           int bits, std::atomic<int>& best_first,
                                           std::atomic<std::uint64_t>& examined,
                                           resolve_scratch& scratch) {
    const int n = d.n_vertices;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = first + i;
    std::uint64_t local_examined = 0;
    int countdown = 0;
    do {
        if (--countdown <= 0) {
            countdown = 1024;
            if (best_first.load(std::memory_order_relaxed) < first) break;
        }
        ++local_examined;
        if (witnesses_resolve(d, c, bits, scratch)) {
            examined.fetch_add(local_examined, std::memory_order_relaxed);
            int seen = best_first.load(std::memory_order_relaxed);
            while (seen > first &&
                   !best_first.compare_exchange_weak(seen, first, std::memory_order_relaxed)) {
            }
            return c;
        }
    } while (next_suffix_combination(c, n));
    examined.fetch_add(local_examined, std::memory_order_relaxed);
    return std::nullopt;
}

// All k-subsets in lexicographic order, partitioned into per-first-element
// blocks. Every block preceding the winning block runs to completion, so the
// reported subset is the lexicographically smallest success regardless of the
// number of workers.
std::optional<std::vector<int>> search_level(const distance_matrix& d, int k, int jobs,
                                             int bits, search_stats& stats) {
    const int n = d.n_vertices;
    if (k > n) return std::nullopt;
    const int n_blocks = n - k + 1;
    std::vector<std::optional<std::vector<int>>> block_hit(n_blocks);
    std::atomic<int> best_first{INT_MAX};
    std::atomic<std::uint64_t> examined{0};
    std::atomic<int> next_block{0};

    auto worker = [&] {
        resolve_scratch scratch;
        for (;;) {
            int b = next_block.fetch_add(1, std::memory_order_relaxed);
            if (b >= n_blocks) return;
            if (best_first.load(std::memory_order_relaxed) < b) return;
            block_hit[b] = scan_block(d, k, b, bits, best_first, examined, scratch);
        }
    };

    jobs = std::max(1, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    stats.examined = saturating_add(stats.examined, examined.load());
    for (int b = 0; b < n_blocks; ++b) {
        if (block_hit[b]) {
            std::uint64_t total = binomial_saturated(n, k);
            if (total > examined.load()) {
                stats.pruned = saturating_add(stats.pruned, total - examined.load());
            }
            return block_hit[b];
        }
    }
    return std::nullopt;
}

}  // namespace

resolving_certificate is_resolving(const graph& g, const distance_matrix& d,
                                   std::span<const int> witnesses) {
    require_matching(g, d);
    if (!matrix_connected(d)) {
        throw std::invalid_argument("is_resolving requires a connected graph");
    }
    if (witnesses.empty()) {
        throw std::invalid_argument("witness set must be non-empty");
    }
    resolving_certificate cert;
    cert.witness_set.assign(witnesses.begin(), witnesses.end());
    for (int w : cert.witness_set) {
        if (w < 0 || w >= g.n_vertices) {
            throw std::invalid_argument("witness index " + std::to_string(w) + " out of range");
        }
    }
    auto sorted = cert.witness_set;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("witness set contains a duplicate vertex");
    }

    const int n = g.n_vertices;
    cert.table.resize(n);
    for (int v = 0; v < n; ++v) {
        cert.table[v].reserve(witnesses.size());
        for (int w : cert.witness_set) cert.table[v].push_back(d.at(v, w));
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (cert.table[a] != cert.table[b]) return cert.table[a] < cert.table[b];
        return a < b;
    });
    std::pair<int, int> best{-1, -1};
    for (int i = 0; i + 1 < n; ++i) {
        int a = order[i], b = order[i + 1];
        if (cert.table[a] == cert.table[b]) {
            std::pair<int, int> cand{std::min(a, b), std::max(a, b)};
            if (best.first == -1 || cand < best) best = cand;
        }
    }
    cert.resolves = best.first == -1;
    if (!cert.resolves) cert.failing_pair = best;
    return cert;
}

resolving_certificate is_resolving(const cayley_graph& g, std::span<const int> witnesses) {
    return is_resolving(g.topology, g.distances(), witnesses);
}

std::vector<std::vector<int>> twin_classes(const distance_matrix& d) {
    const int n = d.n_vertices;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto twins = [&](int u, int v) {
        for (int x = 0; x < n; ++x) {
            if (x == u || x == v) continue;
            if (d.at(u, x) != d.at(v, x)) return false;
        }
        return true;
    };
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (find(u) != find(v) && twins(u, v)) parent[find(v)] = find(u);
        }
    }
    std::vector<std::vector<int>> classes(n);
    for (int v = 0; v < n; ++v) classes[find(v)].push_back(v);
    std::vector<std::vector<int>> out;
    for (auto& c : classes) {
        if (c.size() >= 2) out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int twin_lower_bound(const distance_matrix& d) {
    int bound = 0;
    for (const auto& c : twin_classes(d)) bound += static_cast<int>(c.size()) - 1;
    return std::max(1, bound);
}

dimension_result metric_dimension_exact(const graph& g, const distance_matrix& d,
                                        const search_config& cfg) {
    require_matching(g, d);
    const int n = g.n_vertices;
    if (n < 3) {
        throw std::invalid_argument("metric dimension search requires at least 3 vertices");
    }
    if (!matrix_connected(d)) {
        throw std::invalid_argument("metric dimension is undefined on a disconnected graph");
    }
    if (n > cfg.max_vertices) {
        throw search_limit_error("graph on " + std::to_string(n) +
                                 " vertices exceeds max_vertices=" +
                                 std::to_string(cfg.max_vertices));
    }

    dimension_result result;
    const int bits = bits_per_coordinate(d);
    resolve_scratch scratch;

    // Dimension 1 occurs exactly for paths; elsewhere singletons never resolve.
    if (is_path_graph(g)) {
        for (int v = 0; v < n; ++v) {
            ++result.stats.examined;
            int w[1] = {v};
            if (witnesses_resolve(d, w, bits, scratch)) {
                result.dimension = 1;
                result.basis = {v};
                return result;
            }
        }
    }

    int lb = twin_lower_bound(d);
    if (regular_degree(g) == 3 && is_bipartite(g)) lb = std::max(lb, 3);
    const int k_max = std::min(cfg.max_k, n - 1);
    for (int k = std::max(lb, 2); k <= k_max; ++k) {
        if (auto hit = search_level(d, k, cfg.parallelism, bits, result.stats)) {
            result.dimension = k;
            result.basis = std::move(*hit);
            return result;
        }
    }
    throw search_limit_error("no resolving set of size <= max_k=" + std::to_string(cfg.max_k) +
                             " on " + std::to_string(n) + " vertices");
}

dimension_result metric_dimension_exact(const cayley_graph& g, const search_config& cfg) {
    return metric_dimension_exact(g.topology, g.distances(), cfg);
}

basis_shape_report basis_shape(const graph& g, const distance_matrix& d, int u, int v) {
    require_matching(g, d);
    if (u < 0 || v < 0 || u >= g.n_vertices || v >= g.n_vertices || u == v) {
        throw std::invalid_argument("basis_shape requires two distinct vertices");
    }
    if (!matrix_connected(d)) {
        throw std::invalid_argument("basis_shape requires a connected graph");
    }

    basis_shape_report report;
    report.u = u;
    report.v = v;

    // Shortest-path DAG counting from u, in order of distance.
    const int n = g.n_vertices;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return d.at(u, a) < d.at(u, b); });
    std::vector<std::uint64_t> count(n, 0);
    count[u] = 1;
    for (int x : order) {
        if (x == u) continue;
        std::uint64_t total = 0;
        for (int w : g.adj[x]) {
            if (d.at(u, w) + 1 == d.at(u, x)) total = saturating_add(total, count[w]);
        }
        count[x] = total;
    }
    report.shortest_path_count = count[v];
    report.unique_shortest_path = count[v] == 1;

    if (report.unique_shortest_path) {
        std::vector<int> path{v};
        int cur = v;
        while (cur != u) {
            for (int w : g.adj[cur]) {
                if (d.at(u, w) + 1 == d.at(u, cur) && count[w] >= 1) {
                    cur = w;
                    break;
                }
            }
            path.push_back(cur);
        }
        std::reverse(path.begin(), path.end());
        report.path = std::move(path);
    }

    report.endpoint_degrees_ok = g.degree(u) <= 3 && g.degree(v) <= 3;
    report.max_internal_degree = 0;
    for (std::size_t i = 1; i + 1 < report.path.size(); ++i) {
        report.max_internal_degree = std::max(report.max_internal_degree,
                                              g.degree(report.path[i]));
    }
    report.internal_degrees_ok = report.max_internal_degree <= 5;
    return report;
}

basis_shape_report dim2_basis_properties(const graph& g, const distance_matrix& d,
                                         int u, int v) {
    const int witnesses[2] = {u, v};
    auto cert = is_resolving(g, d, witnesses);
    if (!cert.resolves) {
        throw std::invalid_argument("{" + std::to_string(u) + ", " + std::to_string(v) +
                                    "} is not a resolving set");
    }
    return basis_shape(g, d, u, v);
}

basis_shape_report dim2_basis_properties(const cayley_graph& g, int u, int v) {
    return dim2_basis_properties(g.topology, g.distances(), u, v);
}

}  // namespace dihedral
