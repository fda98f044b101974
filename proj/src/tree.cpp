#include "rdlab/tree.hpp"

#include <algorithm>
#include <queue>

namespace rdlab {

Tree::Tree(Graph g) : g_(std::move(g)) {
    if (g_.edge_count() != g_.order() - 1)
        throw InvalidGraph("tree must have n-1 edges, got " + std::to_string(g_.edge_count()) +
                           " for n=" + std::to_string(g_.order()));
    if (!g_.is_connected()) throw InvalidGraph("tree must be connected");
}

bool Tree::is_stem(int v) const {
    for (int w : adjacency(v))
        if (is_leaf(w)) return true;
    return false;
}

int Tree::leaf_neighbor_count(int v) const {
    int c = 0;
    for (int w : adjacency(v))
        if (is_leaf(w)) ++c;
    return c;
}

std::vector<int> Tree::leaves() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<int> Tree::stems() const {
    std::vector<int> out;
    for (int v = 0; v < order(); ++v)
        if (is_stem(v)) out.push_back(v);
    return out;
}

VertexSet RootedTree::subtree(int v) const {
    std::vector<int> out;
    std::vector<int> stack = {v};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        out.push_back(u);
        for (int c : children[static_cast<std::size_t>(u)]) stack.push_back(c);
    }
    return VertexSet(std::move(out));
}

RootedTree root_at(const Tree& t, int r) {
    if (r < 0 || r >= t.order()) throw InvalidGraph("root out of range");
    RootedTree rt;
    rt.tree = &t;
    rt.root = r;
    int n = t.order();
    rt.parent.assign(static_cast<std::size_t>(n), -1);
    rt.children.resize(static_cast<std::size_t>(n));
    rt.depth.assign(static_cast<std::size_t>(n), 0);
    rt.bfs_order.reserve(static_cast<std::size_t>(n));
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(r);
    seen[static_cast<std::size_t>(r)] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        rt.bfs_order.push_back(v);
        for (int w : t.adjacency(v)) {
            if (seen[static_cast<std::size_t>(w)]) continue;
            seen[static_cast<std::size_t>(w)] = 1;
            rt.parent[static_cast<std::size_t>(w)] = v;
            rt.depth[static_cast<std::size_t>(w)] = rt.depth[static_cast<std::size_t>(v)] + 1;
            rt.children[static_cast<std::size_t>(v)].push_back(w);
            q.push(w);
        }
    }
    return rt;
}

namespace {

// Single-source BFS distances; parents optional.
void bfs(const Graph& g, int src, std::vector<int>& dist, std::vector<int>* parent = nullptr) {
    dist.assign(static_cast<std::size_t>(g.order()), -1);
    if (parent) parent->assign(static_cast<std::size_t>(g.order()), -1);
    std::queue<int> q;
    q.push(src);
    dist[static_cast<std::size_t>(src)] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.adjacency(v)) {
            if (dist[static_cast<std::size_t>(w)] >= 0) continue;
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
            if (parent) (*parent)[static_cast<std::size_t>(w)] = v;
            q.push(w);
        }
    }
}

}  // namespace

std::vector<std::vector<int>> distance_matrix(const Tree& t) {
    int n = t.order();
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) bfs(t.graph(), v, d[static_cast<std::size_t>(v)]);
    return d;
}

int diameter(const Tree& t) {
    std::vector<int> dist;
    bfs(t.graph(), 0, dist);
    int a = static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
    bfs(t.graph(), a, dist);
    return *std::max_element(dist.begin(), dist.end());
}

std::vector<int> center(const Tree& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> layer;
    int removed = 0;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = t.degree(v);
        if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
    }
    std::vector<int> cur = layer;
    while (removed + static_cast<int>(cur.size()) < n) {
        removed += static_cast<int>(cur.size());
        std::vector<int> next;
        for (int v : cur) {
            for (int w : t.adjacency(v)) {
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
            }
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

DiametralPath diametral_path_max_penultimate(const Tree& t) {
    if (t.order() < 2) throw InvalidGraph("diametral path needs at least 2 vertices");
    int d = diameter(t);
    // Diametral endpoints are leaves; walk parents from each BFS tree.
    std::vector<int> leaves = t.leaves();
    DiametralPath best;
    int best_deg = -1;
    std::vector<int> dist, parent;
    for (int a : leaves) {
        bfs(t.graph(), a, dist, &parent);
        for (int b = 0; b < t.order(); ++b) {
            if (dist[static_cast<std::size_t>(b)] != d) continue;
            std::vector<int> path;
            for (int v = b; v != -1; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
            std::reverse(path.begin(), path.end());  // a .. b
            int pen_deg = t.degree(path[path.size() - 2]);
            if (pen_deg > best_deg ||
                (pen_deg == best_deg && path < best.vertices)) {
                best_deg = pen_deg;
                best.vertices = std::move(path);
            }
        }
    }
    return best;
}

namespace {

// Iterative AHU: canonical parenthesis string of the tree rooted at r.
std::string rooted_code(const std::vector<std::vector<int>>& adj, int r) {
    int n = static_cast<int>(adj.size());
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<int> stack = {r};
    parent[static_cast<std::size_t>(r)] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(w)] != -2) continue;
            parent[static_cast<std::size_t>(w)] = v;
            stack.push_back(w);
        }
    }
    std::vector<std::string> code(static_cast<std::size_t>(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> parts;
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (parent[static_cast<std::size_t>(w)] == v)
                parts.push_back(std::move(code[static_cast<std::size_t>(w)]));
        }
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (const auto& p : parts) s += p;
        s += ")";
        code[static_cast<std::size_t>(v)] = std::move(s);
    }
    return code[static_cast<std::size_t>(r)];
}

std::vector<int> center_adj(const std::vector<std::vector<int>>& adj) {
    int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<int> cur;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<std::size_t>(v)] = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
        if (deg[static_cast<std::size_t>(v)] <= 1) cur.push_back(v);
    }
    int removed = 0;
    while (removed + static_cast<int>(cur.size()) < n) {
        removed += static_cast<int>(cur.size());
        std::vector<int> next;
        for (int v : cur)
            for (int w : adj[static_cast<std::size_t>(v)])
                if (--deg[static_cast<std::size_t>(w)] == 1) next.push_back(w);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace

std::string canonical_code_adj(const std::vector<std::vector<int>>& adj) {
    std::vector<int> c = center_adj(adj);
    std::string code = rooted_code(adj, c[0]);
    if (c.size() == 2) {
        std::string other = rooted_code(adj, c[1]);
        if (other < code) code = std::move(other);
    }
    return code;
}

std::string canonical_code(const Tree& t) {
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(t.order()));
    for (int v = 0; v < t.order(); ++v) adj[static_cast<std::size_t>(v)] = t.adjacency(v);
    return canonical_code_adj(adj);
}

bool isomorphic(const Tree& a, const Tree& b) {
    if (a.order() != b.order()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace rdlab
