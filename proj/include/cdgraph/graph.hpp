#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace cdg {

/// Simple undirected graph on vertices 0..n-1, immutable after construction.
/// Adjacency is stored as sorted neighbor lists; duplicate input edges are
/// collapsed, self-loops and out-of-range endpoints are rejected.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// Canonical edge list: u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    /// Degrees sorted descending.
    std::vector<int> degree_sequence() const;

    Graph complement() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
};

/// All-pairs hop distances. Entries are kUnreachable across components.
struct DistanceTable {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
    bool all_reachable() const;

    /// Sum of distances from v to every other vertex; requires v to reach
    /// the whole graph.
    long transmission(int v) const;
};

struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // each sorted; blocks sorted lexicographically
    std::vector<int> cut_vertices;         // sorted
};

DistanceTable distances(const Graph& g);

/// Max distance over all vertex pairs; nullopt when disconnected.
/// Undefined (throws) for a single-vertex graph.
std::optional<int> diameter(const Graph& g);

/// Vertex partition into maximal connected parts, each sorted, ordered by
/// smallest contained vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Standard block / cut-vertex decomposition (DFS low-point). An isolated
/// vertex forms its own singleton block. Cut vertices are exactly the
/// vertices lying in two or more blocks.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace cdg
