#include "cdgraph/families.hpp"

#include <stdexcept>

namespace cdg {

std::string family_name(Family f) {
    switch (f) {
        case Family::CocktailParty: return "cocktail";
        case Family::Supergraph: return "supergraph";
        case Family::TwoClique: return "two-clique";
    }
    throw std::logic_error("unknown family");
}

std::optional<Family> family_from_name(std::string_view name) {
    if (name == "cocktail") return Family::CocktailParty;
    if (name == "supergraph") return Family::Supergraph;
    if (name == "two-clique") return Family::TwoClique;
    return std::nullopt;
}

void FamilyParams::validate() const {
    switch (family) {
        case Family::CocktailParty:
            if (n < 4 || n % 2 != 0) {
                throw std::invalid_argument(
                    "cocktail party graph requires an even n >= 4, got n = " +
                    std::to_string(n));
            }
            if (n1 != 0) {
                throw std::invalid_argument("cocktail family takes no n1 parameter");
            }
            break;
        case Family::Supergraph:
            if (n < 4 || n % 2 != 0) {
                throw std::invalid_argument(
                    "supergraph requires an even n >= 4, got n = " + std::to_string(n));
            }
            if (n1 < 1 || n1 > n / 2) {
                throw std::invalid_argument("n1 out of range for supergraph: need 1 <= n1 <= n/2, got n1 = " +
                                            std::to_string(n1) + " with n = " + std::to_string(n));
            }
            break;
        case Family::TwoClique:
            if (n < 3) {
                throw std::invalid_argument("two-clique graph requires n >= 3, got n = " +
                                            std::to_string(n));
            }
            if (n1 < 1 || 2 * n1 + 1 > n) {
                throw std::invalid_argument(
                    "n1 out of range for two-clique: need 1 <= n1 and 2*n1 + 1 <= n, got n1 = " +
                    std::to_string(n1) + " with n = " + std::to_string(n));
            }
            break;
    }
}

Graph complete(int n) {
    if (n < 1) {
        throw std::invalid_argument("complete graph requires n >= 1, got n = " +
                                    std::to_string(n));
    }
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph cocktail_party(int n) {
    FamilyParams{Family::CocktailParty, n, 0}.validate();
    const int half = n / 2;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        const int antipode = (u + half) % n;
        for (int v = u + 1; v < n; ++v) {
            if (v != antipode) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph supergraph(int n, int n1) {
    FamilyParams{Family::Supergraph, n, n1}.validate();
    const int half = n / 2;
    auto edges = cocktail_party(n).edges();
    for (int i = 0; i < n1; ++i) edges.emplace_back(i, i + half);
    return Graph(n, edges);
}

Graph two_clique_cut_vertex(int n, int n1) {
    FamilyParams{Family::TwoClique, n, n1}.validate();
    const int cut = n1;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n1; ++u) {
        for (int v = u + 1; v < n1; ++v) edges.emplace_back(u, v);
    }
    for (int u = n1 + 1; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    for (int v = 0; v < n; ++v) {
        if (v != cut) edges.emplace_back(cut, v);
    }
    return Graph(n, edges);
}

Graph direct_product_join(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    const int nb = b.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (const auto& [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    for (int u = 0; u < na; ++u) {
        for (int v = 0; v < nb; ++v) edges.emplace_back(u, v + na);
    }
    return Graph(na + nb, edges);
}

Graph operation_d(const Graph& g) {
    return direct_product_join(g, Graph(2, {}));
}

Graph build_family(const FamilyParams& params) {
    params.validate();
    switch (params.family) {
        case Family::CocktailParty: return cocktail_party(params.n);
        case Family::Supergraph: return supergraph(params.n, params.n1);
        case Family::TwoClique: return two_clique_cut_vertex(params.n, params.n1);
    }
    throw std::logic_error("unknown family");
}

}  // namespace cdg
