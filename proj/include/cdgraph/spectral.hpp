#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cdgraph/graph.hpp"

namespace cdg {

using BigInt = mpz_class;

/// Thrown when an operation that needs a connected graph gets a
/// disconnected one; carries one separated pair as a witness.
struct DisconnectedError : std::invalid_argument {
    DisconnectedError(int u, int v)
        : std::invalid_argument("graph is disconnected: vertices " + std::to_string(u) +
                                " and " + std::to_string(v) + " are in different components"),
          u(u),
          v(v) {}
    int u;
    int v;
};

/// Dense square matrix of arbitrary-precision integers.
struct IntMatrix {
    int n = 0;
    std::vector<BigInt> a;  // row-major

    IntMatrix() = default;
    explicit IntMatrix(int n) : n(n), a(static_cast<size_t>(n) * n) {}

    BigInt& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const BigInt& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    BigInt trace() const;

    bool operator==(const IntMatrix&) const = default;
};

/// Polynomial with arbitrary-precision integer coefficients, ascending
/// degree; coeffs is never empty and has no trailing zero above degree 0.
struct IntPolynomial {
    std::vector<BigInt> coeffs{0};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_monic() const { return coeffs.back() == 1; }
    BigInt operator()(const BigInt& x) const;

    bool operator==(const IntPolynomial&) const = default;
};

/// Integer eigenvalues with multiplicities, sorted descending, plus the
/// monic residual factor collecting any non-integer part. residual == {1}
/// means the polynomial factored completely over the integers.
struct Spectrum {
    std::vector<std::pair<long, int>> values;
    IntPolynomial residual{{1}};

    bool fully_factored() const { return residual.degree() == 0; }
    int multiplicity_sum() const;
    int multiplicity_of(long eigenvalue) const;

    bool operator==(const Spectrum&) const = default;
};

/// Canonicalizes (merges repeats, drops zero multiplicities, sorts
/// descending) a list of eigenvalue/multiplicity pairs.
Spectrum make_spectrum(std::vector<std::pair<long, int>> values,
                       IntPolynomial residual = IntPolynomial{{1}});

/// Degree diagonal minus adjacency.
IntMatrix laplacian(const Graph& g);

/// Transmission diagonal minus the hop-distance matrix; requires g
/// connected (DisconnectedError otherwise).
IntMatrix distance_laplacian(const Graph& g);

/// Exact determinant via fraction-free (Bareiss) elimination.
BigInt determinant(IntMatrix m);

/// Exact characteristic polynomial det(xI - m), monic, computed by
/// Bareiss determinant evaluation at n+1 integer points followed by exact
/// rational interpolation. No floating point anywhere.
IntPolynomial char_poly(const IntMatrix& m);

/// Extracts every integer root in [0, root_bound] with multiplicity by
/// repeated exact synthetic division; whatever remains becomes the
/// residual. Requires p monic.
Spectrum integer_spectrum(const IntPolynomial& p, long root_bound);

/// Exact spanning-tree count: determinant of the Laplacian with row 0 and
/// column 0 deleted. 0 for disconnected graphs, 1 for the single vertex.
BigInt spanning_tree_count(const Graph& g);

/// Product of the nonzero eigenvalues (one zero removed) divided exactly
/// by n. Requires a fully factored spectrum containing eigenvalue 0;
/// throws std::logic_error when the product is not divisible by n.
BigInt spanning_tree_count_from_spectrum(const Spectrum& s, int n);

/// Distance-Laplacian spectrum of a connected diameter-<=2 graph from its
/// Laplacian spectrum: every nonzero lambda maps to 2n - lambda, the
/// single 0 stays. A non-trivial residual q(x) is carried along as the
/// monic (-1)^deg(q) * q(2n - x). Requires 0 with multiplicity exactly 1.
Spectrum dl_spectrum_via_transfer(const Spectrum& laplacian_spectrum, int n);

}  // namespace cdg
