#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdg {

enum class Verdict { Pass, Fail, NotApplicable };

std::string verdict_name(Verdict v);

/// Outcome of one structural check. Failing checks carry a concrete
/// witness (vertices and/or pairs); the fitting-height check also reports
/// the clique partition it found on success.
struct CheckResult {
    std::string name;
    Verdict verdict = Verdict::Pass;
    std::string note;
    std::vector<int> witness;
    std::vector<std::pair<int, int>> witness_pairs;
    std::vector<int> partition_u;
    std::vector<int> partition_w;
};

struct CheckReport {
    std::vector<CheckResult> checks;
    bool necessary_pass = true;              // no necessary condition failed
    std::vector<std::string> failed_checks;  // names of failed necessary checks
};

/// Every 3-vertex subset spans at least one edge (equivalently, the
/// complement is triangle-free). Not applicable below 3 vertices. Fails
/// with an independent triple as witness.
CheckResult check_palfy(const Graph& g);

/// At most two connected components.
CheckResult check_component_count(const Graph& g);

/// Every connected component has diameter at most 3.
CheckResult check_diameter(const Graph& g);

/// The whole graph must not be the 4-vertex path (n = 4, connected,
/// degree multiset {2,2,1,1}).
CheckResult check_forbidden_p4(const Graph& g);

/// At most one cut vertex.
CheckResult check_cut_vertices(const Graph& g);

/// When the graph is connected, is not itself a block, and has diameter
/// at most 2: every block must induce a complete subgraph. Not applicable
/// otherwise.
CheckResult check_block_completeness(const Graph& g);

/// Fitting-height-2 criterion: the vertices of degree below n-1 can be
/// split into two cliques, one containing only vertices of degree n-2.
/// Exhaustive two-coloring search with clique and cleanliness pruning;
/// reports the first partition found (empty parts allowed).
CheckResult check_fitting_height_2(const Graph& g);

/// Runs all checks in fixed order. The overall verdict covers the six
/// necessary conditions; the fitting-height-2 result is informational.
CheckReport full_report(const Graph& g);

}  // namespace cdg
