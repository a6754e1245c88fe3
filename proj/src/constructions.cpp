#include "ddp/constructions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "ddp/canonical.hpp"
#include "ddp/enumeration.hpp"

namespace ddp {
namespace {

std::vector<Graph> sorted_unique(std::map<std::string, Graph>&& by_code) {
    std::vector<Graph> out;
    out.reserve(by_code.size());
    for (auto& [code, g] : by_code) out.push_back(std::move(g));
    return out;
}

// Leaf neighbors of v.
std::vector<int> leaf_neighbors(const Graph& t, int v) {
    std::vector<int> out;
    for (int w : t.neighbors(v))
        if (t.degree(w) == 1) out.push_back(w);
    return out;
}

// One zeta_1 expansion step: join the center of a new K_{1,t} to support
// vertex v and add t-1 leaves at v.
Graph zeta1_step(const Graph& t_prev, int v, int t) {
    int n = t_prev.order();
    Graph g(n + 2 * t);
    for (auto [a, b] : t_prev.edges()) g.add_edge(a, b);
    int center = n;
    g.add_edge(center, v);
    for (int i = 1; i <= t; ++i) g.add_edge(center, n + i);
    for (int i = 0; i < t - 1; ++i) g.add_edge(v, n + t + 1 + i);
    return g;
}

// Enumerate pendant-leaf assignments of property (*): every leaf of the core
// gets >= 1 pendant vertex, every other core vertex >= 0, total order capped.
void grow_pendants(const Graph& core, int max_order,
                   std::map<std::string, Graph>& out) {
    int m = core.order();
    std::vector<int> is_leaf(static_cast<size_t>(m), 0);
    for (int v : leaves(core)) is_leaf[static_cast<size_t>(v)] = 1;
    std::vector<int> counts(static_cast<size_t>(m), 0);

    auto emit = [&]() {
        int total = m;
        for (int c : counts) total += c;
        Graph g(total);
        for (auto [a, b] : core.edges()) g.add_edge(a, b);
        int next = m;
        for (int v = 0; v < m; ++v)
            for (int i = 0; i < counts[static_cast<size_t>(v)]; ++i) g.add_edge(v, next++);
        out.emplace(canonical_code(g), std::move(g));
    };

    // Recursive budget split over vertices.
    auto rec = [&](auto&& self, int v, int budget) -> void {
        if (v == m) {
            emit();
            return;
        }
        int lo = is_leaf[static_cast<size_t>(v)] ? 1 : 0;
        // Later leaves still need one pendant each.
        int reserved = 0;
        for (int w = v + 1; w < m; ++w) reserved += is_leaf[static_cast<size_t>(w)];
        for (int c = lo; c <= budget - reserved; ++c) {
            counts[static_cast<size_t>(v)] = c;
            self(self, v + 1, budget - c);
        }
        counts[static_cast<size_t>(v)] = 0;
    };
    if (m + static_cast<int>(leaves(core).size()) <= max_order)
        rec(rec, 0, max_order - m);
}

}  // namespace

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw ParameterOutOfRange("cycle needs at least 3 vertices");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    g.add_edge(n - 1, 0);
    return g;
}

Graph star_graph(int t) {
    if (t < 1) throw ParameterOutOfRange("star needs at least one leaf");
    Graph g(t + 1);
    for (int i = 1; i <= t; ++i) g.add_edge(0, i);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite_graph(int r, int s) {
    if (r < 1 || s < 1) throw ParameterOutOfRange("sides must be nonempty");
    Graph g(r + s);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) g.add_edge(i, r + j);
    return g;
}

Graph double_star(int r, int s) {
    if (r < 1 || s < 1) throw ParameterOutOfRange("double star needs r, s >= 1");
    Graph g(r + s + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < r; ++i) g.add_edge(0, 2 + i);
    for (int i = 0; i < s; ++i) g.add_edge(1, 2 + r + i);
    return g;
}

std::pair<Graph, CoronaDecomposition> corona(const Graph& h, int d) {
    if (d < 1) throw ParameterOutOfRange("corona needs d >= 1");
    int m = h.order();
    Graph g(m * (d + 1));
    for (auto [a, b] : h.edges()) g.add_edge(a, b);
    CoronaDecomposition cert;
    for (int u = 0; u < m; ++u) {
        cert.anchors.push_back(u);
        int base = m + u * d;
        std::vector<int> path;
        for (int i = 0; i < d; ++i) {
            path.push_back(base + i);
            if (i + 1 < d) g.add_edge(base + i, base + i + 1);
        }
        g.add_edge(base + d - 1, u);
        cert.path_of[u] = std::move(path);
    }
    return {std::move(g), std::move(cert)};
}

Graph d_subdivision(const Graph& t, int d) {
    if (d < 0) throw ParameterOutOfRange("subdivision count must be >= 0");
    if (d == 0) return t;
    auto es = t.edges();
    Graph g(t.order() + d * static_cast<int>(es.size()));
    int next = t.order();
    for (auto [a, b] : es) {
        int prev = a;
        for (int i = 0; i < d; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, b);
    }
    return g;
}

Graph counterexample_gnkd(int n, int k, int d) {
    if (d < 1 || n < d + 2 || k < 2)
        throw ParameterOutOfRange("G_{n,k,d} needs n >= d+2 and k >= 2");
    Graph g = complete_graph(n);
    for (int v = 0; v < n; ++v)
        for (int copy = 0; copy < k; ++copy) g = attach_path(g, v, d);
    return g;
}

Graph joined_subdivided_stars(int t1, int t2, int d) {
    if (t1 < 2 || t2 < 2 || d < 2)
        throw ParameterOutOfRange("needs t1, t2 >= 2 and d >= 2");
    Graph g(2);
    g.add_edge(0, 1);
    for (int i = 0; i < t1; ++i) g = attach_path(g, 0, d);
    for (int i = 0; i < t2; ++i) g = attach_path(g, 1, d);
    return g;
}

std::vector<Graph> zeta1_members(int max_order) {
    if (max_order < 2) throw ParameterOutOfRange("zeta_1 members have order >= 2");
    std::map<std::string, Graph> by_code;
    std::deque<Graph> work;
    Graph k2 = path_graph(2);
    by_code.emplace(canonical_code(k2), k2);
    work.push_back(std::move(k2));
    while (!work.empty()) {
        Graph cur = std::move(work.front());
        work.pop_front();
        for (int v = 0; v < cur.order(); ++v) {
            if (leaf_neighbors(cur, v).empty()) continue;  // must be a support vertex
            for (int t = 1; cur.order() + 2 * t <= max_order; ++t) {
                Graph next = zeta1_step(cur, v, t);
                auto code = canonical_code(next);
                if (by_code.emplace(code, next).second) work.push_back(std::move(next));
            }
        }
    }
    return sorted_unique(std::move(by_code));
}

std::vector<Graph> family_T_d(int max_order, int d) {
    if (d < 1) throw ParameterOutOfRange("d must be >= 1");
    std::map<std::string, Graph> by_code;
    for (int m = 2; m * (d + 1) <= max_order; ++m)
        for (const auto& h : all_trees(m)) {
            auto [g, cert] = corona(h, d);
            by_code.emplace(canonical_code(g), std::move(g));
        }
    return sorted_unique(std::move(by_code));
}

std::vector<Graph> family_B_d(int max_order, int d, bool allow_disconnected_h) {
    if (d < 1) throw ParameterOutOfRange("d must be >= 1");
    std::map<std::string, Graph> by_code;
    for (int m = 1; m * (d + 1) <= max_order; ++m) {
        auto hs = allow_disconnected_h ? all_bipartite(m) : all_connected_bipartite(m);
        for (const auto& h : hs) {
            auto [g, cert] = corona(h, d);
            by_code.emplace(canonical_code(g), std::move(g));
        }
    }
    return sorted_unique(std::move(by_code));
}

std::vector<Graph> family_F_d(int max_order, int d) {
    if (d < 2) throw ParameterOutOfRange("F_d is defined for d >= 2");
    std::map<std::string, Graph> by_code;
    std::vector<Graph> cores;
    if (d == 2) {
        cores = zeta1_members(max_order);
    } else {
        for (const auto& t : all_trees(d)) cores.push_back(t);
        for (auto& t : family_T_d(max_order, d - 1)) cores.push_back(std::move(t));
    }
    for (const auto& core : cores) grow_pendants(core, max_order, by_code);
    return sorted_unique(std::move(by_code));
}

std::vector<Graph> family_Fprime_d(int max_order, int d) {
    if (d < 2) throw ParameterOutOfRange("F'_d is defined for d >= 2");
    if (d >= 3) return family_F_d(max_order, d);
    std::map<std::string, Graph> by_code;
    std::vector<Graph> cores{path_graph(2)};
    for (auto& t : family_T_d(max_order, 1)) cores.push_back(std::move(t));
    for (const auto& core : cores) grow_pendants(core, max_order, by_code);
    return sorted_unique(std::move(by_code));
}

}  // namespace ddp
