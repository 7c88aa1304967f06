#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>

#include "cdgraph/families.hpp"
#include "cdgraph/graph.hpp"
#include "test_support.hpp"

using cdg::Graph;
namespace ts = test_support;

namespace {

// A graph is a cocktail party graph (up to labeling) exactly when its
// complement is a perfect matching.
bool is_cocktail_party(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4 || n % 2 != 0) return false;
    const Graph comp = g.complement();
    if (comp.edge_count() != n / 2) return false;
    for (int v = 0; v < n; ++v) {
        if (comp.degree(v) != 1) return false;
    }
    return true;
}

bool complement_is_submatching(const Graph& g) {
    const Graph comp = g.complement();
    for (int v = 0; v < comp.vertex_count(); ++v) {
        if (comp.degree(v) > 1) return false;
    }
    return true;
}

std::map<int, int> degree_multiset(const Graph& g) {
    std::map<int, int> m;
    for (int v = 0; v < g.vertex_count(); ++v) ++m[g.degree(v)];
    return m;
}

}  // namespace

TEST_CASE("complete graphs") {
    CHECK(cdg::complete(1).edge_count() == 0);
    CHECK(cdg::complete(3).degree_sequence() == std::vector<int>{2, 2, 2});
    const Graph k8 = cdg::complete(8);
    CHECK(k8.edge_count() == 28);
    for (int v = 0; v < 8; ++v) CHECK(k8.degree(v) == 7);
}

TEST_CASE("cocktail party graphs") {
    const Graph c4 = cdg::cocktail_party(4);
    CHECK(c4 == ts::cycle_graph(4));
    CHECK_FALSE(c4.adjacent(0, 2));
    CHECK_FALSE(c4.adjacent(1, 3));

    const Graph oct = cdg::cocktail_party(6);
    CHECK(oct == ts::octahedron());
    for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);

    const Graph cp8 = cdg::cocktail_party(8);
    for (int v = 0; v < 8; ++v) CHECK(cp8.degree(v) == 6);

    CHECK_THROWS_AS(cdg::cocktail_party(5), std::invalid_argument);
    CHECK_THROWS_AS(cdg::cocktail_party(2), std::invalid_argument);
}

TEST_CASE("cocktail party complement is a perfect matching") {
    for (int n = 4; n <= 16; n += 2) {
        const Graph g = cdg::cocktail_party(n);
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) == n - 2);
        CHECK(is_cocktail_party(g));
    }
}

TEST_CASE("supergraphs") {
    const Graph s41 = cdg::supergraph(4, 1);
    CHECK(s41.edge_count() == 5);
    CHECK(s41.adjacent(0, 2));       // the added antipodal edge
    CHECK_FALSE(s41.adjacent(1, 3));  // the remaining non-edge

    CHECK(cdg::supergraph(4, 2) == cdg::complete(4));

    const Graph s61 = cdg::supergraph(6, 1);
    CHECK(s61.degree_sequence() == std::vector<int>{5, 5, 4, 4, 4, 4});

    CHECK_THROWS_WITH_AS(cdg::supergraph(6, 7), doctest::Contains("n1 out of range"),
                         std::invalid_argument);
    CHECK_THROWS_AS(cdg::supergraph(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(cdg::supergraph(5, 1), std::invalid_argument);
}

TEST_CASE("supergraph edge counts and degree structure") {
    for (int n = 4; n <= 14; n += 2) {
        for (int n1 = 1; n1 <= n / 2; ++n1) {
            const Graph g = cdg::supergraph(n, n1);
            CHECK(g.edge_count() == cdg::cocktail_party(n).edge_count() + n1);
            const auto degs = degree_multiset(g);
            if (n1 == n / 2) {
                CHECK(g == cdg::complete(n));
            } else {
                CHECK(degs.at(n - 1) == 2 * n1);
                CHECK(degs.at(n - 2) == n - 2 * n1);
            }
        }
    }
}

TEST_CASE("two-clique graphs with a cut vertex") {
    CHECK(cdg::two_clique_cut_vertex(3, 1) == ts::path_graph(3));
    CHECK(cdg::two_clique_cut_vertex(5, 2) == ts::bowtie());

    // Degree counts straight from the definition: the n1 small-clique
    // vertices see n1-1 clique mates plus the cut vertex, the large-clique
    // vertices see n-n1-2 mates plus the cut vertex, and the cut vertex
    // sees everyone.
    const Graph g72 = cdg::two_clique_cut_vertex(7, 2);
    CHECK(g72.degree_sequence() == std::vector<int>{6, 4, 4, 4, 4, 2, 2});
    CHECK(g72.degree(2) == 6);  // the cut vertex

    CHECK_THROWS_AS(cdg::two_clique_cut_vertex(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(cdg::two_clique_cut_vertex(3, 0), std::invalid_argument);
}

TEST_CASE("two-clique graphs decompose into two complete blocks") {
    for (int n = 3; n <= 12; ++n) {
        for (int n1 = 1; 2 * n1 + 1 <= n; ++n1) {
            const Graph g = cdg::two_clique_cut_vertex(n, n1);
            const auto bd = cdg::block_decomposition(g);
            REQUIRE(bd.blocks.size() == 2);
            CHECK(bd.cut_vertices == std::vector<int>{n1});
            for (const auto& block : bd.blocks) {
                for (size_t i = 0; i < block.size(); ++i) {
                    for (size_t j = i + 1; j < block.size(); ++j) {
                        CHECK(g.adjacent(block[i], block[j]));
                    }
                }
            }
        }
    }
}

TEST_CASE("direct product join") {
    const Graph k1(1, {});
    CHECK(cdg::direct_product_join(k1, k1) == cdg::complete(2));

    const Graph k2 = cdg::complete(2);
    CHECK(cdg::direct_product_join(k2, k2) == cdg::complete(4));

    // C4 joined with two isolated vertices is an octahedron: the new pair
    // stays non-adjacent and the old antipodes stay non-adjacent.
    const Graph joined = cdg::direct_product_join(ts::cycle_graph(4), Graph(2, {}));
    CHECK(joined.vertex_count() == 6);
    CHECK(is_cocktail_party(joined));
    CHECK_FALSE(joined.adjacent(4, 5));
    CHECK_FALSE(joined.adjacent(0, 2));
}

TEST_CASE("direct product join counts") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph a = ts::random_graph(2 + trial % 5, rng, 0.5);
        const Graph b = ts::random_graph(1 + trial % 4, rng, 0.4);
        const Graph j = cdg::direct_product_join(a, b);
        CHECK(j.vertex_count() == a.vertex_count() + b.vertex_count());
        CHECK(j.edge_count() ==
              a.edge_count() + b.edge_count() + a.vertex_count() * b.vertex_count());
        for (const auto& [u, v] : a.edges()) CHECK(j.adjacent(u, v));
        for (const auto& [u, v] : b.edges()) {
            CHECK(j.adjacent(u + a.vertex_count(), v + a.vertex_count()));
        }
    }
}

TEST_CASE("operation D") {
    const Graph p3 = cdg::operation_d(Graph(1, {}));
    CHECK(p3.vertex_count() == 3);
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

    // Applying operation D k times to a cocktail party graph yields a
    // graph isomorphic to the next ones up.
    for (int n = 4; n <= 10; n += 2) {
        Graph g = cdg::cocktail_party(n);
        for (int k = 1; k <= 2; ++k) {
            g = cdg::operation_d(g);
            CHECK(g.vertex_count() == n + 2 * k);
            CHECK(is_cocktail_party(g));
        }
    }

    const Graph lifted = cdg::operation_d(cdg::supergraph(6, 1));
    CHECK(lifted.degree_sequence() == std::vector<int>{7, 7, 6, 6, 6, 6, 6, 6});
}

TEST_CASE("operation D preserves matching-plus-isolated complements") {
    std::mt19937 rng(29);
    for (int n = 4; n <= 12; n += 2) {
        for (int n1 = 1; n1 <= n / 2; ++n1) {
            Graph g = cdg::supergraph(n, n1);
            CHECK(complement_is_submatching(g));
            g = cdg::operation_d(g);
            CHECK(complement_is_submatching(g));
        }
    }
}

TEST_CASE("family params validation and dispatch") {
    cdg::FamilyParams bad{cdg::Family::CocktailParty, 4, 1};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    CHECK(cdg::build_family({cdg::Family::CocktailParty, 6, 0}) == cdg::cocktail_party(6));
    CHECK(cdg::build_family({cdg::Family::Supergraph, 6, 2}) == cdg::supergraph(6, 2));
    CHECK(cdg::build_family({cdg::Family::TwoClique, 7, 3}) ==
          cdg::two_clique_cut_vertex(7, 3));

    CHECK(cdg::family_from_name("cocktail") == cdg::Family::CocktailParty);
    CHECK(cdg::family_from_name("two-clique") == cdg::Family::TwoClique);
    CHECK_FALSE(cdg::family_from_name("nonesuch").has_value());
    CHECK(cdg::family_name(cdg::Family::Supergraph) == "supergraph");
}
