#include "ddp/recognizers.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <unordered_map>

#include "ddp/canonical.hpp"

namespace ddp {
namespace {

void require_tree(const Graph& t) {
    if (!is_tree(t)) throw NotATree();
}

std::vector<int> leaf_neighbors(const Graph& t, int v) {
    std::vector<int> out;
    for (int w : t.neighbors(v))
        if (t.degree(w) == 1) out.push_back(w);
    return out;
}

// Parent array of t rooted at root.
std::vector<int> parents(const Graph& t, int root) {
    std::vector<int> par(static_cast<size_t>(t.order()), -2);
    par[static_cast<size_t>(root)] = -1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : t.neighbors(u))
            if (par[static_cast<size_t>(w)] == -2) {
                par[static_cast<size_t>(w)] = u;
                queue.push_back(w);
            }
    }
    return par;
}

std::vector<int> subtree_vertices(const Graph& t, int v, int parent) {
    std::vector<int> out{v};
    std::deque<std::pair<int, int>> queue{{v, parent}};
    while (!queue.empty()) {
        auto [u, par] = queue.front();
        queue.pop_front();
        for (int w : t.neighbors(u))
            if (w != par) {
                out.push_back(w);
                queue.emplace_back(w, u);
            }
    }
    return out;
}

// Does the subtree hanging at v (away from parent) look like the (d-1)-
// subdivision of a star K_{1,t}, t >= 2, with v the center? Returns t, or 0.
int subtree_subdivided_star_arms(const Graph& t, int v, int parent, int d) {
    int arms = 0;
    for (int c : t.neighbors(v)) {
        if (c == parent) continue;
        // The arm below c must be a bare path of exactly d vertices.
        int prev = v, cur = c, len = 1;
        while (true) {
            int down = -1;
            bool branched = false;
            for (int w : t.neighbors(cur))
                if (w != prev) {
                    if (down != -1) branched = true;
                    down = w;
                }
            if (branched) return 0;
            if (down == -1) break;
            prev = cur;
            cur = down;
            ++len;
        }
        if (len != d) return 0;
        ++arms;
    }
    return arms >= 2 ? arms : 0;
}

Graph remove_vertices(const Graph& g, const std::vector<int>& drop) {
    std::vector<char> dropped(static_cast<size_t>(g.order()), 0);
    for (int v : drop) dropped[static_cast<size_t>(v)] = 1;
    VertexSet keep;
    for (int v = 0; v < g.order(); ++v)
        if (!dropped[static_cast<size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

bool zeta1_search(const Graph& t);

bool zeta1_candidates(const Graph& t) {
    int n = t.order();
    for (int u = 0; u < n; ++u) {
        auto u_leaves = leaf_neighbors(t, u);
        int count = static_cast<int>(u_leaves.size());
        if (count == 0 || t.degree(u) != count + 1) continue;
        int v = -1;
        for (int w : t.neighbors(u))
            if (t.degree(w) != 1) v = w;
        auto v_leaves = leaf_neighbors(t, v);
        if (static_cast<int>(v_leaves.size()) < count) continue;  // v must stay a support vertex
        std::vector<int> drop{u};
        drop.insert(drop.end(), u_leaves.begin(), u_leaves.end());
        drop.insert(drop.end(), v_leaves.begin(), v_leaves.begin() + (count - 1));
        if (zeta1_search(remove_vertices(t, drop))) return true;
    }
    return false;
}

bool zeta1_search(const Graph& t) {
    int n = t.order();
    if (n < 2 || n % 2 != 0) return false;
    if (n == 2) return true;
    static std::unordered_map<std::string, bool> memo;
    static std::mutex memo_mutex;
    auto code = tree_canonical_form(t);
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(code);
        if (it != memo.end()) return it->second;
    }
    bool result = zeta1_candidates(t);
    std::lock_guard<std::mutex> lock(memo_mutex);
    memo.emplace(std::move(code), result);
    return result;
}

}  // namespace

SupportProfile support_profile(const Graph& t) {
    require_tree(t);
    SupportProfile profile;
    bool pure_path = true;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) > 2) pure_path = false;
    for (int x : leaves(t)) {
        if (pure_path) {
            // Endpoint chains of a bare path: each leaf is a length-1 chain
            // at its unique neighbor.
            profile.pendant_lengths[t.neighbors(x).front()].push_back(1);
            continue;
        }
        int prev = -1, cur = x, len = 0;
        while (t.degree(cur) <= 2) {
            ++len;
            int next = -1;
            for (int w : t.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
        }
        profile.pendant_lengths[cur].push_back(len);
    }
    for (auto& [v, lens] : profile.pendant_lengths) std::sort(lens.begin(), lens.end());
    return profile;
}

std::vector<int> attached_path_sizes(const Graph& t, int v) {
    require_tree(t);
    std::vector<int> sizes;
    for (int u : t.neighbors(v)) {
        if (t.degree(u) > 2) continue;  // u must be an end of a path component
        auto branch = subtree_vertices(t, u, v);
        bool is_path = true;
        for (int w : branch)
            if (w != u && t.degree(w) > 2) is_path = false;
        if (is_path) sizes.push_back(static_cast<int>(branch.size()));
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

bool is_pd_support(const Graph& t, int v, int k) {
    auto sizes = attached_path_sizes(t, v);
    return std::binary_search(sizes.begin(), sizes.end(), k);
}

bool has_pi_pj_support(const Graph& t, int i_max, int j_max) {
    for (int v = 0; v < t.order(); ++v) {
        auto sizes = attached_path_sizes(t, v);
        int small = 0, medium = 0;
        for (int s : sizes) {
            if (s <= i_max) ++small;
            if (s <= j_max) ++medium;
        }
        if (small >= 1 && medium >= 2) return true;
    }
    return false;
}

std::optional<CoronaDecomposition> is_corona(const Graph& g, int d) {
    if (d < 1) throw ParameterOutOfRange("d must be >= 1");
    if (!is_connected(g)) throw GraphDisconnected();
    int n = g.order();
    if (n % (d + 1) != 0) return std::nullopt;
    int m = n / (d + 1);

    if (m == 1) {
        // H = K_1: g must be P_{d+1}, anchor the smaller end.
        auto ends = leaves(g);
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 2) return std::nullopt;
        if (ends.size() != 2) return std::nullopt;
        CoronaDecomposition cert;
        int anchor = ends.front();
        cert.anchors.push_back(anchor);
        std::vector<int> chain;  // walk from anchor, reverse to outer-first
        int prev = -1, cur = anchor;
        for (int i = 0; i < d; ++i) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) next = w;
            prev = cur;
            cur = next;
            chain.push_back(cur);
        }
        std::reverse(chain.begin(), chain.end());
        cert.path_of[anchor] = std::move(chain);
        return cert;
    }

    // Every attached copy of P_d ends in a leaf, and with a nontrivial H no
    // anchor is a leaf, so the chains are forced from the leaves.
    auto ls = leaves(g);
    if (static_cast<int>(ls.size()) != m) return std::nullopt;
    CoronaDecomposition cert;
    std::vector<char> covered(static_cast<size_t>(n), 0);
    for (int x : ls) {
        std::vector<int> chain{x};
        int prev = -1, cur = x;
        for (int i = 1; i < d; ++i) {
            int next = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) next = w;
            if (next == -1 || g.degree(next) != 2) return std::nullopt;
            prev = cur;
            cur = next;
            chain.push_back(cur);
        }
        int anchor = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) anchor = w;
        if (anchor == -1) return std::nullopt;
        if (cert.path_of.count(anchor)) return std::nullopt;  // one path per anchor
        for (int w : chain) {
            if (covered[static_cast<size_t>(w)]) return std::nullopt;
            covered[static_cast<size_t>(w)] = 1;
        }
        cert.path_of[anchor] = std::move(chain);
        cert.anchors.push_back(anchor);
    }
    std::sort(cert.anchors.begin(), cert.anchors.end());
    for (int a : cert.anchors) {
        if (covered[static_cast<size_t>(a)]) return std::nullopt;
        covered[static_cast<size_t>(a)] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<size_t>(v)]) return std::nullopt;
    if (!verify_corona_decomposition(g, cert, d)) return std::nullopt;
    return cert;
}

bool verify_corona_decomposition(const Graph& g, const CoronaDecomposition& c, int d) {
    int n = g.order();
    std::vector<int> owner(static_cast<size_t>(n), -1);  // anchor owning each vertex
    std::vector<char> is_anchor(static_cast<size_t>(n), 0);
    for (int a : c.anchors) {
        if (a < 0 || a >= n || is_anchor[static_cast<size_t>(a)]) return false;
        is_anchor[static_cast<size_t>(a)] = 1;
        owner[static_cast<size_t>(a)] = a;
    }
    if (c.path_of.size() != c.anchors.size()) return false;
    for (const auto& [a, path] : c.path_of) {
        if (a < 0 || a >= n || !is_anchor[static_cast<size_t>(a)]) return false;
        if (static_cast<int>(path.size()) != d) return false;
        for (int w : path) {
            if (w < 0 || w >= n || owner[static_cast<size_t>(w)] != -1) return false;
            owner[static_cast<size_t>(w)] = a;
        }
        // Anchor plus path must induce P_{d+1} with the anchor at the inner end.
        std::vector<int> seq = path;
        seq.push_back(a);
        for (size_t i = 0; i < seq.size(); ++i)
            for (size_t j = i + 1; j < seq.size(); ++j)
                if (g.has_edge(seq[i], seq[j]) != (j == i + 1)) return false;
    }
    for (int v = 0; v < n; ++v)
        if (owner[static_cast<size_t>(v)] == -1) return false;
    // Any remaining edge must join two anchors.
    for (auto [u, v] : g.edges()) {
        if (is_anchor[static_cast<size_t>(u)] && is_anchor[static_cast<size_t>(v)]) continue;
        if (owner[static_cast<size_t>(u)] != owner[static_cast<size_t>(v)]) return false;
    }
    return true;
}

bool in_zeta1(const Graph& t) {
    require_tree(t);
    return zeta1_search(t);
}

bool in_T_d(const Graph& t, int d) {
    require_tree(t);
    auto cert = is_corona(t, d);
    if (!cert) return false;
    return cert->anchors.size() >= 2;  // anchors induce a tree whenever t is one
}

bool in_B_d(const Graph& g, int d) {
    if (!is_connected(g)) throw GraphDisconnected();
    if (!bipartition(g)) throw NotBipartite();
    auto cert = is_corona(g, d);
    if (!cert) return false;
    auto h = induced_subgraph(g, cert->anchors);
    return is_connected(h) && bipartition(h).has_value();
}

bool in_F_d(const Graph& t, int d) {
    require_tree(t);
    if (d < 2) throw ParameterOutOfRange("F_d is defined for d >= 2");
    auto non_leaves = [&] {
        VertexSet keep;
        for (int v = 0; v < t.order(); ++v)
            if (t.degree(v) != 1) keep.push_back(v);
        return keep;
    }();
    if (non_leaves.empty()) return false;
    Graph core = induced_subgraph(t, non_leaves);
    if (d == 2) return in_zeta1(core);
    return core.order() == d || in_T_d(core, d - 1);
}

bool in_Fprime_d(const Graph& t, int d) {
    require_tree(t);
    if (d < 2) throw ParameterOutOfRange("F'_d is defined for d >= 2");
    if (d >= 3) return in_F_d(t, d);
    VertexSet keep;
    for (int v = 0; v < t.order(); ++v)
        if (t.degree(v) != 1) keep.push_back(v);
    if (keep.empty()) return false;
    Graph core = induced_subgraph(t, keep);
    if (core.order() == 2) return true;  // K_2 (core of a tree is connected)
    return is_tree(core) && in_T_d(core, 1);
}

bool lemma34_hypotheses(const Graph& t, int d) {
    require_tree(t);
    if (d < 2) throw ParameterOutOfRange("the lemma needs d >= 2");
    if (diameter(t) < 2 * d + 1) return false;
    for (int v = 0; v < t.order(); ++v)
        if (is_pd_support(t, v, d + 1)) return false;
    return !has_pi_pj_support(t, d - 1, d);
}

std::vector<std::string> lemma34_check(const Graph& t, int d) {
    require_tree(t);
    if (d < 2) throw ParameterOutOfRange("the lemma needs d >= 2");
    std::vector<std::string> violated;
    auto path = diametrical_path(t);
    int s = static_cast<int>(path.size()) - 1;
    if (s < 2 * d + 1) return violated;  // clauses presuppose diam >= 2d+1
    int root = path.back();  // v_{s+1}
    auto par = parents(t, root);
    auto vk = [&](int k) { return path[static_cast<size_t>(k - 1)]; };  // 1-indexed

    bool ok_i = true;
    for (int k = 2; k <= d; ++k)
        if (t.degree(vk(k)) != 2) ok_i = false;
    for (int k = s - d + 2; k <= s; ++k)
        if (t.degree(vk(k)) != 2) ok_i = false;
    if (!ok_i) violated.push_back("i");

    if (t.degree(vk(d + 1)) < 3 || t.degree(vk(s - d + 1)) < 3) violated.push_back("ii");

    bool ok_iii = true;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) < 3) continue;
        auto sub = subtree_vertices(t, v, par[static_cast<size_t>(v)]);
        bool only_branching = true;
        for (int w : sub)
            if (w != v && t.degree(w) >= 3) only_branching = false;
        if (!only_branching) continue;
        if (subtree_subdivided_star_arms(t, v, par[static_cast<size_t>(v)], d) == 0)
            ok_iii = false;
    }
    if (!ok_iii) violated.push_back("iii");

    if (subtree_subdivided_star_arms(t, vk(d + 1), par[static_cast<size_t>(vk(d + 1))], d) == 0)
        violated.push_back("iv");

    if (s == 2 * d + 1) {
        int c1 = vk(d + 1), c2 = vk(d + 2);
        int down = subtree_subdivided_star_arms(t, c1, c2, d);
        int up = subtree_subdivided_star_arms(t, c2, c1, d);
        bool ok_v = down >= 2 && up >= 2 &&
                    (down + up) * d + 2 == t.order();
        if (!ok_v) violated.push_back("v");
    }
    return violated;
}

}  // namespace ddp
