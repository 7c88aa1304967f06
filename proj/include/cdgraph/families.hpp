#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "cdgraph/graph.hpp"

namespace cdg {

enum class Family { CocktailParty, Supergraph, TwoClique };

std::string family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

/// Parameters selecting one member of a graph family. n1 is the number of
/// added antipodal edges (Supergraph) or the small clique size (TwoClique);
/// it is unused (0) for CocktailParty.
struct FamilyParams {
    Family family;
    int n = 0;
    int n1 = 0;

    /// Throws std::invalid_argument when the parameters are out of range.
    void validate() const;
};

/// K_n: every pair of distinct vertices adjacent.
Graph complete(int n);

/// The (n-2)-regular graph on n vertices (n even) in which vertex i is
/// adjacent to everything except its antipode (i + n/2) mod n. The
/// complement is the perfect matching of antipodal pairs.
Graph cocktail_party(int n);

/// cocktail_party(n) plus the first n1 antipodal edges {i, i + n/2},
/// 0 <= i < n1. n1 = n/2 fills every non-edge and yields K_n.
Graph supergraph(int n, int n1);

/// Two cliques K_{n1} (vertices 0..n1-1) and K_{n-n1-1} (vertices
/// n1+1..n-1) joined through the cut vertex n1, which is adjacent to all
/// other vertices; no edges between the cliques.
Graph two_clique_cut_vertex(int n, int n1);

/// Disjoint union of a and b (b re-indexed after a) plus every cross edge
/// between a-vertices and b-vertices.
Graph direct_product_join(const Graph& a, const Graph& b);

/// direct_product_join(g, two isolated vertices): appends vertices n and
/// n+1, each adjacent to all of g and not to each other.
Graph operation_d(const Graph& g);

Graph build_family(const FamilyParams& params);

}  // namespace cdg
