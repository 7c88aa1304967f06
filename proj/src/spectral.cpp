#include "cdgraph/spectral.hpp"

#include <algorithm>
#include <map>

namespace cdg {
namespace {

// c <- c * (x - root) + add, coefficients ascending.
template <typename Num>
void mul_linear_accumulate(std::vector<Num>& c, const Num& root, const Num& add) {
    c.push_back(c.back());
    for (size_t i = c.size() - 2; i > 0; --i) {
        c[i] = c[i - 1] - root * c[i];
    }
    c[0] = add - root * c[0];
}

}  // namespace

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
    BigInt acc = 0;
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * x + coeffs[i];
    }
    return acc;
}

int Spectrum::multiplicity_sum() const {
    int s = 0;
    for (const auto& [value, mult] : values) s += mult;
    return s;
}

int Spectrum::multiplicity_of(long eigenvalue) const {
    for (const auto& [value, mult] : values) {
        if (value == eigenvalue) return mult;
    }
    return 0;
}

Spectrum make_spectrum(std::vector<std::pair<long, int>> values, IntPolynomial residual) {
    std::map<long, int> merged;
    for (const auto& [value, mult] : values) {
        if (mult < 0) throw std::invalid_argument("negative multiplicity");
        if (mult > 0) merged[value] += mult;
    }
    Spectrum s;
    s.residual = std::move(residual);
    s.values.assign(merged.rbegin(), merged.rend());
    return s;
}

IntMatrix laplacian(const Graph& g) {
    const int n = g.vertex_count();
    IntMatrix m(n);
    for (int v = 0; v < n; ++v) {
        m.at(v, v) = g.degree(v);
        for (int u : g.neighbors(v)) m.at(v, u) = -1;
    }
    return m;
}

IntMatrix distance_laplacian(const Graph& g) {
    const int n = g.vertex_count();
    const DistanceTable t = distances(g);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (!t.reachable(u, v)) throw DisconnectedError(u, v);
        }
    }
    IntMatrix m(n);
    for (int v = 0; v < n; ++v) {
        m.at(v, v) = t.transmission(v);
        for (int u = 0; u < n; ++u) {
            if (u != v) m.at(v, u) = -t.at(v, u);
        }
    }
    return m;
}

BigInt determinant(IntMatrix m) {
    const int n = m.n;
    if (n == 0) return 1;
    bool negate = false;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i) {
                if (m.at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            }
            if (pivot < 0) return 0;
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                BigInt num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m.at(k, k);
    }
    return negate ? BigInt(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

IntPolynomial char_poly(const IntMatrix& m) {
    const int n = m.n;
    if (n == 0) return IntPolynomial{{1}};

    // det(xI - m) at x = 0..n, one exact Bareiss determinant per point.
    std::vector<mpq_class> dd(n + 1);
    for (int x = 0; x <= n; ++x) {
        IntMatrix shifted(n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                shifted.at(i, j) = -m.at(i, j);
            }
            shifted.at(i, i) += x;
        }
        dd[x] = mpq_class(determinant(std::move(shifted)));
    }

    // Newton divided differences on the equispaced points 0..n.
    for (int level = 1; level <= n; ++level) {
        for (int i = n; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / level;
        }
    }

    // Expand the Newton form to the monomial basis.
    std::vector<mpq_class> c{dd[n]};
    for (int k = n - 1; k >= 0; --k) {
        mul_linear_accumulate(c, mpq_class(k), dd[k]);
    }

    IntPolynomial p;
    p.coeffs.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        c[i].canonicalize();
        if (c[i].get_den() != 1) {
            throw std::logic_error("characteristic polynomial interpolation produced a non-integer coefficient");
        }
        p.coeffs[i] = c[i].get_num();
    }
    if (!p.is_monic()) {
        throw std::logic_error("characteristic polynomial is not monic");
    }
    return p;
}

Spectrum integer_spectrum(const IntPolynomial& p, long root_bound) {
    if (!p.is_monic()) {
        throw std::invalid_argument("integer_spectrum requires a monic polynomial");
    }
    const int n = p.degree();
    std::vector<BigInt> work = p.coeffs;

    Spectrum s;
    for (long r = 0; r <= root_bound && work.size() > 1; ++r) {
        int mult = 0;
        for (;;) {
            // Synthetic division of work by (x - r); bail out unless the
            // remainder is exactly zero.
            std::vector<BigInt> quotient(work.size() - 1);
            BigInt carry = 0;
            for (size_t i = work.size(); i-- > 1;) {
                carry = carry * r + work[i];
                quotient[i - 1] = carry;
            }
            if (carry * r + work[0] != 0) break;
            work = std::move(quotient);
            ++mult;
            if (work.size() == 1) break;
        }
        if (mult > 0) s.values.emplace_back(r, mult);
    }
    std::sort(s.values.begin(), s.values.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    s.residual.coeffs = std::move(work);

    // Trace identity: extracted roots plus residual roots must sum to the
    // negated second-highest coefficient of p.
    if (n >= 1) {
        BigInt extracted = 0;
        for (const auto& [value, mult] : s.values) extracted += BigInt(value) * mult;
        BigInt residual_sum = 0;
        const int d = s.residual.degree();
        if (d >= 1) residual_sum = -s.residual.coeffs[d - 1];
        if (extracted + residual_sum != -p.coeffs[n - 1]) {
            throw std::logic_error("integer_spectrum violated the trace identity");
        }
    }
    return s;
}

BigInt spanning_tree_count(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return 1;
    const IntMatrix lap = laplacian(g);
    IntMatrix reduced(n - 1);
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            reduced.at(i - 1, j - 1) = lap.at(i, j);
        }
    }
    return determinant(std::move(reduced));
}

BigInt spanning_tree_count_from_spectrum(const Spectrum& s, int n) {
    if (!s.fully_factored()) {
        throw std::invalid_argument("spectrum has a non-trivial residual; cannot form the eigenvalue product");
    }
    if (s.multiplicity_of(0) == 0) {
        throw std::invalid_argument("spectrum has no zero eigenvalue");
    }
    BigInt product = 1;
    for (const auto& [value, mult] : s.values) {
        const int effective = value == 0 ? mult - 1 : mult;
        for (int i = 0; i < effective; ++i) product *= value;
    }
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), product.get_mpz_t(), BigInt(n).get_mpz_t());
    if (r != 0) {
        throw std::logic_error("eigenvalue product is not divisible by the vertex count");
    }
    return q;
}

Spectrum dl_spectrum_via_transfer(const Spectrum& laplacian_spectrum, int n) {
    if (laplacian_spectrum.multiplicity_of(0) != 1) {
        throw std::invalid_argument(
            "spectrum transfer requires eigenvalue 0 with multiplicity exactly 1 (connected source)");
    }
    std::vector<std::pair<long, int>> transferred{{0, 1}};
    for (const auto& [value, mult] : laplacian_spectrum.values) {
        if (value != 0) transferred.emplace_back(2L * n - value, mult);
    }

    IntPolynomial residual{{1}};
    const int d = laplacian_spectrum.residual.degree();
    if (d >= 1) {
        // q(x) -> (-1)^d q(2n - x), kept monic.
        const auto& q = laplacian_spectrum.residual.coeffs;
        const BigInt shift = 2L * n;
        std::vector<BigInt> c{q[d]};
        for (int k = d - 1; k >= 0; --k) {
            // c <- c * (2n - x) + q_k
            std::vector<BigInt> next(c.size() + 1);
            for (size_t i = 0; i < c.size(); ++i) {
                next[i] += shift * c[i];
                next[i + 1] -= c[i];
            }
            next[0] += q[k];
            c = std::move(next);
        }
        if (d % 2 != 0) {
            for (auto& coef : c) coef = -coef;
        }
        residual.coeffs = std::move(c);
        if (!residual.is_monic()) {
            throw std::logic_error("transferred residual is not monic");
        }
    }
    return make_spectrum(std::move(transferred), std::move(residual));
}

}  // namespace cdg
