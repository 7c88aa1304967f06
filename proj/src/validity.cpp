#include "cdgraph/validity.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace cdg {
namespace {

std::string join_vertices(const std::vector<int>& vs) {
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(vs[i]);
    }
    return out;
}

}  // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::NotApplicable: return "not-applicable";
    }
    throw std::logic_error("unknown verdict");
}

CheckResult check_palfy(const Graph& g) {
    CheckResult r{.name = "palfy"};
    const int n = g.vertex_count();
    if (n < 3) {
        r.verdict = Verdict::NotApplicable;
        r.note = "fewer than three vertices";
        return r;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                if (!g.adjacent(i, j) && !g.adjacent(i, k) && !g.adjacent(j, k)) {
                    r.verdict = Verdict::Fail;
                    r.witness = {i, j, k};
                    r.note = "independent triple {" + join_vertices(r.witness) + "}";
                    return r;
                }
            }
        }
    }
    r.note = "every three vertices span an edge";
    return r;
}

CheckResult check_component_count(const Graph& g) {
    CheckResult r{.name = "component_count"};
    const auto parts = connected_components(g);
    if (parts.size() > 2) {
        r.verdict = Verdict::Fail;
        for (const auto& part : parts) r.witness.push_back(part.front());
        r.note = std::to_string(parts.size()) +
                 " connected components (representatives {" + join_vertices(r.witness) + "})";
    } else {
        r.note = std::to_string(parts.size()) + " connected component" +
                 (parts.size() == 1 ? "" : "s");
    }
    return r;
}

CheckResult check_diameter(const Graph& g) {
    CheckResult r{.name = "diameter"};
    const DistanceTable t = distances(g);
    int worst = 0;
    for (int u = 0; u < t.n; ++u) {
        for (int v = u + 1; v < t.n; ++v) {
            const int duv = t.at(u, v);
            if (duv == DistanceTable::kUnreachable) continue;
            if (duv > 3) {
                r.verdict = Verdict::Fail;
                r.witness_pairs = {{u, v}};
                r.note = "vertices " + std::to_string(u) + " and " + std::to_string(v) +
                         " are at distance " + std::to_string(duv);
                return r;
            }
            worst = std::max(worst, duv);
        }
    }
    r.note = "every component has diameter at most 3 (max " + std::to_string(worst) + ")";
    return r;
}

CheckResult check_forbidden_p4(const Graph& g) {
    CheckResult r{.name = "forbidden_p4"};
    if (g.vertex_count() == 4 && connected_components(g).size() == 1 &&
        g.degree_sequence() == std::vector<int>{2, 2, 1, 1}) {
        r.verdict = Verdict::Fail;
        r.witness = {0, 1, 2, 3};
        r.note = "graph is the 4-vertex path";
    } else {
        r.note = "graph is not the 4-vertex path";
    }
    return r;
}

CheckResult check_cut_vertices(const Graph& g) {
    CheckResult r{.name = "cut_vertices"};
    const auto bd = block_decomposition(g);
    if (bd.cut_vertices.size() > 1) {
        r.verdict = Verdict::Fail;
        r.witness = bd.cut_vertices;
        r.note = std::to_string(bd.cut_vertices.size()) + " cut vertices {" +
                 join_vertices(r.witness) + "}";
    } else {
        r.note = std::to_string(bd.cut_vertices.size()) + " cut vertex" +
                 (bd.cut_vertices.size() == 1 ? "" : "es");
    }
    return r;
}

CheckResult check_block_completeness(const Graph& g) {
    CheckResult r{.name = "block_completeness"};
    if (connected_components(g).size() > 1) {
        r.verdict = Verdict::NotApplicable;
        r.note = "graph is disconnected (no finite diameter)";
        return r;
    }
    const auto bd = block_decomposition(g);
    if (bd.blocks.size() <= 1) {
        r.verdict = Verdict::NotApplicable;
        r.note = "graph is a block";
        return r;
    }
    const auto diam = diameter(g);
    if (!diam || *diam > 2) {
        r.verdict = Verdict::NotApplicable;
        r.note = "diameter exceeds 2";
        return r;
    }
    for (const auto& block : bd.blocks) {
        for (size_t i = 0; i < block.size(); ++i) {
            for (size_t j = i + 1; j < block.size(); ++j) {
                if (!g.adjacent(block[i], block[j])) {
                    r.verdict = Verdict::Fail;
                    r.witness = block;
                    r.witness_pairs = {{block[i], block[j]}};
                    r.note = "block {" + join_vertices(block) + "} misses edge (" +
                             std::to_string(block[i]) + ", " + std::to_string(block[j]) + ")";
                    return r;
                }
            }
        }
    }
    r.note = "every block is complete";
    return r;
}

namespace {

// Backtracking two-coloring of the sub-(n-1)-degree vertices into cliques
// U and W. Prunes on clique violations and as soon as both parts contain
// a vertex of degree below n-2 (one part must stay "clean").
struct FittingSearch {
    const Graph& g;
    const std::vector<int>& s;
    const std::vector<bool>& clean;
    std::vector<int> side;  // 0 = unassigned sentinel handled by depth, 1 = U, 2 = W
    std::vector<int> u, w;
    bool dirty_u = false, dirty_w = false;

    bool fits(int v, const std::vector<int>& part) const {
        return std::all_of(part.begin(), part.end(),
                           [&](int other) { return g.adjacent(v, other); });
    }

    bool solve(size_t depth) {
        if (depth == s.size()) return !dirty_u || !dirty_w;
        const int v = s[depth];
        if (fits(v, u)) {
            const bool was_dirty = dirty_u;
            dirty_u = dirty_u || !clean[v];
            u.push_back(v);
            if ((!dirty_u || !dirty_w) && solve(depth + 1)) return true;
            u.pop_back();
            dirty_u = was_dirty;
        }
        if (fits(v, w)) {
            const bool was_dirty = dirty_w;
            dirty_w = dirty_w || !clean[v];
            w.push_back(v);
            if ((!dirty_u || !dirty_w) && solve(depth + 1)) return true;
            w.pop_back();
            dirty_w = was_dirty;
        }
        return false;
    }
};

}  // namespace

CheckResult check_fitting_height_2(const Graph& g) {
    CheckResult r{.name = "fitting_height_2"};
    const int n = g.vertex_count();
    std::vector<int> s;
    std::vector<bool> clean(n, false);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < n - 1) s.push_back(v);
        clean[v] = g.degree(v) == n - 2;
    }
    if (s.empty()) {
        r.note = "no vertices of degree below n-1";
        return r;
    }

    FittingSearch search{g, s, clean, {}, {}, {}};
    if (search.solve(0)) {
        r.partition_u = search.u;
        r.partition_w = search.w;
        r.note = "partition into cliques U = {" + join_vertices(search.u) + "}, W = {" +
                 join_vertices(search.w) + "}";
        return r;
    }

    r.verdict = Verdict::Fail;

    // Certificate: either the pairwise non-adjacencies within s contain an
    // odd cycle (no clique 2-partition at all), or some non-adjacency
    // component forces low-degree vertices into both parts.
    const int m = static_cast<int>(s.size());
    std::vector<std::vector<int>> comp_non_adj(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (!g.adjacent(s[i], s[j])) {
                comp_non_adj[i].push_back(j);
                comp_non_adj[j].push_back(i);
            }
        }
    }
    std::vector<int> color(m, -1), parent(m, -1);
    std::deque<int> queue;
    for (int start = 0; start < m; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        queue.assign(1, start);
        std::vector<int> comp_members;
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            comp_members.push_back(i);
            for (int j : comp_non_adj[i]) {
                if (color[j] == -1) {
                    color[j] = 1 - color[i];
                    parent[j] = i;
                    queue.push_back(j);
                } else if (color[j] == color[i]) {
                    // Odd cycle: walk both endpoints up to the root.
                    std::vector<int> cycle{s[i], s[j]};
                    for (int a = parent[i]; a != -1; a = parent[a]) cycle.push_back(s[a]);
                    for (int b = parent[j]; b != -1; b = parent[b]) cycle.push_back(s[b]);
                    std::sort(cycle.begin(), cycle.end());
                    cycle.erase(std::unique(cycle.begin(), cycle.end()), cycle.end());
                    r.witness = cycle;
                    r.note = "non-adjacencies among {" + join_vertices(cycle) +
                             "} admit no two-clique partition";
                    return r;
                }
            }
        }
        int dirty0 = -1, dirty1 = -1;
        for (int i : comp_members) {
            if (!clean[s[i]]) (color[i] == 0 ? dirty0 : dirty1) = i;
        }
        if (dirty0 != -1 && dirty1 != -1) {
            r.witness = {s[dirty0], s[dirty1]};
            std::sort(r.witness.begin(), r.witness.end());
            r.note = "vertices " + std::to_string(r.witness[0]) + " and " +
                     std::to_string(r.witness[1]) +
                     " of degree below n-2 are forced into different parts";
            return r;
        }
    }
    r.note = "no valid partition exists";
    return r;
}

CheckReport full_report(const Graph& g) {
    CheckReport report;
    report.checks.push_back(check_palfy(g));
    report.checks.push_back(check_component_count(g));
    report.checks.push_back(check_diameter(g));
    report.checks.push_back(check_forbidden_p4(g));
    report.checks.push_back(check_cut_vertices(g));
    report.checks.push_back(check_block_completeness(g));
    const size_t necessary_count = report.checks.size();
    report.checks.push_back(check_fitting_height_2(g));

    for (size_t i = 0; i < necessary_count; ++i) {
        if (report.checks[i].verdict == Verdict::Fail) {
            report.necessary_pass = false;
            report.failed_checks.push_back(report.checks[i].name);
        }
    }
    return report;
}

}  // namespace cdg
