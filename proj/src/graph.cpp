#include "cdgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

namespace cdg {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("vertex count must be at least 1, got " +
                                    std::to_string(n));
    }
    adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + "): vertex out of range for n = " +
                                        std::to_string(n));
        }
        if (u == v) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + "): self-loops are not allowed");
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        edge_count_ += static_cast<int>(nbrs.size());
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> degs(n_);
    for (int v = 0; v < n_; ++v) degs[v] = degree(v);
    std::sort(degs.rbegin(), degs.rend());
    return degs;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> comp_edges;
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!adjacent(u, v)) comp_edges.emplace_back(u, v);
        }
    }
    return Graph(n_, comp_edges);
}

bool DistanceTable::all_reachable() const {
    return std::none_of(d.begin(), d.end(),
                        [](int x) { return x == kUnreachable; });
}

long DistanceTable::transmission(int v) const {
    long sum = 0;
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        const int duv = at(v, u);
        if (duv == kUnreachable) {
            throw std::invalid_argument("transmission undefined: vertex " +
                                        std::to_string(v) + " does not reach vertex " +
                                        std::to_string(u));
        }
        sum += duv;
    }
    return sum;
}

DistanceTable distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceTable t;
    t.n = n;
    t.d.assign(static_cast<size_t>(n) * n, DistanceTable::kUnreachable);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        auto* row = &t.d[static_cast<size_t>(s) * n];
        row[s] = 0;
        queue.clear();
        queue.push_back(s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            for (int v : g.neighbors(u)) {
                if (row[v] == DistanceTable::kUnreachable) {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return t;
}

std::optional<int> diameter(const Graph& g) {
    if (g.vertex_count() < 2) {
        throw std::invalid_argument("diameter undefined: graph has no pair of distinct vertices");
    }
    const DistanceTable t = distances(g);
    int best = 0;
    for (int u = 0; u < t.n; ++u) {
        for (int v = u + 1; v < t.n; ++v) {
            const int duv = t.at(u, v);
            if (duv == DistanceTable::kUnreachable) return std::nullopt;
            best = std::max(best, duv);
        }
    }
    return best;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> parts;
    std::vector<bool> seen(n, false);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> part;
        seen[s] = true;
        queue.assign(1, s);
        while (!queue.empty()) {
            const int u = queue.front();
            queue.pop_front();
            part.push_back(u);
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<std::vector<int>> blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int v : g.neighbors(u)) {
            if (v == parent) continue;
            if (disc[v] == -1) {
                edge_stack.emplace_back(u, v);
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    // u closes off a block; pop up to and including (u, v)
                    std::vector<int> verts;
                    std::pair<int, int> e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        verts.push_back(e.first);
                        verts.push_back(e.second);
                    } while (e != std::make_pair(u, v));
                    std::sort(verts.begin(), verts.end());
                    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
                    blocks.push_back(std::move(verts));
                }
            } else if (disc[v] < disc[u]) {
                edge_stack.emplace_back(u, v);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        if (disc[s] == -1) {
            dfs(s, -1);
            if (g.degree(s) == 0) blocks.push_back({s});
        }
    }

    std::sort(blocks.begin(), blocks.end());

    BlockDecomposition bd;
    bd.blocks = std::move(blocks);
    std::vector<int> membership(n, 0);
    for (const auto& block : bd.blocks) {
        for (int v : block) ++membership[v];
    }
    for (int v = 0; v < n; ++v) {
        if (membership[v] >= 2) bd.cut_vertices.push_back(v);
    }
    return bd;
}

}  // namespace cdg
