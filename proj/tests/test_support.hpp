#pragma once

// Shared fixtures and independent oracles for the test suites: plain DFS,
// Floyd-Warshall, deletion-contraction, Laplace expansion. No code path
// here is shared with the library implementations under test.

#include <gmpxx.h>

#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "cdgraph/graph.hpp"

namespace test_support {

inline cdg::Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return cdg::Graph(n, edges);
}

inline cdg::Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return cdg::Graph(n, edges);
}

// Two triangles sharing vertex 2.
inline cdg::Graph bowtie() {
    return cdg::Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline cdg::Graph octahedron() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u) {
        for (int v = u + 1; v < 6; ++v) {
            if (v != u + 3) edges.emplace_back(u, v);
        }
    }
    return cdg::Graph(6, edges);
}

// Invokes fn on every labeled graph with n vertices (2^(n(n-1)/2) masks).
inline void for_each_graph(int n, const std::function<void(const cdg::Graph&)>& fn) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    }
    const unsigned total = 1u << slots.size();
    for (unsigned mask = 0; mask < total; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t b = 0; b < slots.size(); ++b) {
            if (mask & (1u << b)) edges.push_back(slots[b]);
        }
        fn(cdg::Graph(n, edges));
    }
}

inline cdg::Graph random_graph(int n, std::mt19937& rng, double edge_probability) {
    std::bernoulli_distribution coin(edge_probability);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return cdg::Graph(n, edges);
}

// Component count with one vertex optionally removed; plain DFS.
inline int component_count_without(const cdg::Graph& g, int removed) {
    const int n = g.vertex_count();
    std::vector<bool> seen(n, false);
    if (removed >= 0) seen[removed] = true;
    int parts = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++parts;
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    stack.push_back(v);
                }
            }
        }
    }
    return parts;
}

inline bool is_connected(const cdg::Graph& g) {
    return component_count_without(g, -1) == 1;
}

// {v : removing v increases the component count}.
inline std::vector<int> brute_force_cut_vertices(const cdg::Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {};
    const int base = component_count_without(g, -1);
    std::vector<int> cuts;
    for (int v = 0; v < n; ++v) {
        // Removing v also removes its (possibly trivial) component part.
        const int isolated_adjust = g.degree(v) == 0 ? 1 : 0;
        if (component_count_without(g, v) + isolated_adjust > base) cuts.push_back(v);
    }
    return cuts;
}

// Floyd-Warshall on an adjacency snapshot; -1 marks unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const cdg::Graph& g) {
    const int n = g.vertex_count();
    constexpr int kInf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
    for (int u = 0; u < n; ++u) {
        d[u][u] = 0;
        for (int v : g.neighbors(u)) d[u][v] = 1;
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
            }
        }
    }
    for (auto& row : d) {
        for (auto& x : row) {
            if (x >= kInf) x = -1;
        }
    }
    return d;
}

namespace detail {

inline long dc_count(std::vector<std::vector<long>> mult) {
    const int n = static_cast<int>(mult.size());
    if (n == 1) return 1;

    // Connectivity over positive multiplicities.
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n; ++v) {
            if (mult[u][v] > 0 && !seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    if (reached < n) return 0;

    int eu = -1, ev = -1;
    for (int u = 0; u < n && eu < 0; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (mult[u][v] > 0) {
                eu = u;
                ev = v;
                break;
            }
        }
    }

    const long m = mult[eu][ev];

    // Delete every parallel copy of (eu, ev).
    auto deleted = mult;
    deleted[eu][ev] = deleted[ev][eu] = 0;

    // Contract ev into eu, then drop row/column ev.
    auto contracted = mult;
    for (int w = 0; w < n; ++w) {
        if (w == eu || w == ev) continue;
        contracted[eu][w] += contracted[ev][w];
        contracted[w][eu] = contracted[eu][w];
    }
    contracted.erase(contracted.begin() + ev);
    for (auto& row : contracted) row.erase(row.begin() + ev);
    contracted[eu][eu] = 0;

    return dc_count(std::move(deleted)) + m * dc_count(std::move(contracted));
}

}  // namespace detail

// Deletion-contraction spanning-tree count (multigraph-aware).
inline long dc_spanning_trees(const cdg::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<long>> mult(n, std::vector<long>(n, 0));
    for (const auto& [u, v] : g.edges()) mult[u][v] = mult[v][u] = 1;
    return detail::dc_count(std::move(mult));
}

// Tiny integer-polynomial arithmetic for the Laplace-expansion char-poly
// oracle; independent of cdg::IntPolynomial.
using Poly = std::vector<mpz_class>;  // ascending coefficients

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline Poly poly_det(const std::vector<std::vector<Poly>>& m) {
    const size_t n = m.size();
    if (n == 1) return m[0][0];
    Poly acc{0};
    for (size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Poly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Poly> row;
            for (size_t j = 0; j < n; ++j) {
                if (j != col) row.push_back(m[i][j]);
            }
            minor.push_back(std::move(row));
        }
        Poly term = poly_mul(m[0][col], poly_det(minor));
        if (col % 2 == 1) {
            for (auto& c : term) c = -c;
        }
        acc = poly_add(acc, term);
    }
    return acc;
}

// det(xI - A) by cofactor expansion over polynomial entries.
inline Poly naive_char_poly(const std::vector<std::vector<long>>& a) {
    const size_t n = a.size();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) {
                m[i][j] = Poly{-a[i][j], 1};
            } else {
                m[i][j] = Poly{-a[i][j]};
            }
        }
    }
    Poly det = poly_det(m);
    while (det.size() > 1 && det.back() == 0) det.pop_back();
    return det;
}

}  // namespace test_support
