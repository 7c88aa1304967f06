#include "cdgraph/closed_forms.hpp"

#include <stdexcept>

namespace cdg {
namespace {

BigInt int_pow(long base, int exp) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return out;
}

BigInt exact_div(const BigInt& value, int divisor) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), value.get_mpz_t(),
                BigInt(divisor).get_mpz_t());
    if (r != 0) throw std::logic_error("stated tree count is not divisible by n");
    return q;
}

}  // namespace

Prediction predict_cocktail(int n) {
    FamilyParams params{Family::CocktailParty, n, 0};
    params.validate();
    const int half = n / 2;
    Prediction p;
    p.params = params;
    p.l_spectrum = make_spectrum({{0, 1}, {n - 2, half}, {n, half - 1}});
    p.dl_spectrum = make_spectrum({{0, 1}, {n + 2, half}, {n, half - 1}});
    p.tree_count_stated = int_pow(n - 2, half) * int_pow(n, half - 1);
    p.tree_count = exact_div(p.tree_count_stated, n);
    return p;
}

Prediction predict_supergraph(int n, int n1) {
    FamilyParams params{Family::Supergraph, n, n1};
    params.validate();
    const int half = n / 2;
    Prediction p;
    p.params = params;
    p.l_spectrum = make_spectrum({{0, 1}, {n - 2, half - n1}, {n, half + n1 - 1}});
    p.dl_spectrum = make_spectrum({{0, 1}, {n + 2, half - n1}, {n, half + n1 - 1}});
    p.tree_count_stated = int_pow(n - 2, half - n1) * int_pow(n, half + n1 - 1);
    p.tree_count = exact_div(p.tree_count_stated, n);
    return p;
}

Prediction predict_two_clique(int n, int n1) {
    FamilyParams params{Family::TwoClique, n, n1};
    params.validate();
    Prediction p;
    p.params = params;
    p.l_spectrum = make_spectrum(
        {{0, 1}, {1, 1}, {n, 1}, {n1 + 1, n1 - 1}, {n - n1, n - n1 - 2}});
    p.dl_spectrum = make_spectrum({{0, 1},
                                   {2L * n - 1, 1},
                                   {n, 1},
                                   {2L * n - (n1 + 1), n1 - 1},
                                   {n + n1, n - n1 - 2}});
    p.tree_count_stated =
        BigInt(n) * int_pow(n1 + 1, n1 - 1) * int_pow(n - n1, n - n1 - 2);
    p.tree_count = exact_div(p.tree_count_stated, n);
    return p;
}

Prediction predict(const FamilyParams& params) {
    switch (params.family) {
        case Family::CocktailParty: return predict_cocktail(params.n);
        case Family::Supergraph: return predict_supergraph(params.n, params.n1);
        case Family::TwoClique: return predict_two_clique(params.n, params.n1);
    }
    throw std::logic_error("unknown family");
}

VerificationReport verify_family(const FamilyParams& params) {
    VerificationReport report;
    report.params = params;
    report.predicted = predict(params);

    const Graph g = build_family(params);
    const int n = g.vertex_count();

    report.l_computed = integer_spectrum(char_poly(laplacian(g)), n);
    report.l_match = report.l_computed == report.predicted.l_spectrum &&
                     report.l_computed.fully_factored();

    report.dl_transferred = dl_spectrum_via_transfer(report.l_computed, n);
    report.dl_transfer_match = report.dl_transferred == report.predicted.dl_spectrum;

    const auto diam = diameter(g);
    report.diameter_at_most_two = diam.has_value() && *diam <= 2;
    if (report.diameter_at_most_two) {
        report.dl_direct = integer_spectrum(char_poly(distance_laplacian(g)), 2L * n);
        report.dl_direct_match = report.dl_direct == report.predicted.dl_spectrum &&
                                 report.dl_direct == report.dl_transferred;
    }

    report.trees_computed = spanning_tree_count(g);
    report.tree_match = report.trees_computed == report.predicted.tree_count;
    report.tree_match_stated = report.trees_computed == report.predicted.tree_count_stated;
    report.tree_spectrum_consistent =
        report.l_computed.fully_factored() &&
        spanning_tree_count_from_spectrum(report.l_computed, n) == report.trees_computed;

    return report;
}

}  // namespace cdg
