#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cfree/poly.hpp"
#include "cfree/scalar.hpp"

namespace cfree {

// Formal power series truncated at a fixed order N: exactly N+1 rational
// coefficients, coeffs[k] = coefficient of z^k. Every operation is exact
// through order N and never looks past it.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

    TruncatedSeries(std::size_t order, std::vector<Scalar> coeffs)
        : coeffs_(std::move(coeffs))
    {
        if (coeffs_.size() != order + 1) {
            throw domain_error("series coefficient count does not match order");
        }
    }

    static TruncatedSeries constant(const Scalar& c, std::size_t order)
    {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static TruncatedSeries identity(std::size_t order)
    {
        TruncatedSeries s(order);
        if (order >= 1) {
            s.coeffs_[1] = 1;
        }
        return s;
    }

    static TruncatedSeries from_poly(const Poly& p, std::size_t order)
    {
        TruncatedSeries s(order);
        for (std::size_t k = 0; k <= order; ++k) {
            s.coeffs_[k] = p.coeff(k);
        }
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
    Scalar& operator[](std::size_t k) { return coeffs_[k]; }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_) {
            if (c != 0) {
                return false;
            }
        }
        return true;
    }

    // Restriction to a lower order, or zero-padding to a higher one. Padding
    // never fabricates information: callers use it only where higher
    // coefficients provably do not reach the truncation window.
    TruncatedSeries truncated(std::size_t new_order) const
    {
        TruncatedSeries out(new_order);
        for (std::size_t k = 0; k <= std::min(new_order, order()); ++k) {
            out.coeffs_[k] = coeffs_[k];
        }
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_same_order(a, b);
        TruncatedSeries out(a.order());
        for (std::size_t k = 0; k <= a.order(); ++k) {
            out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
        }
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_same_order(a, b);
        TruncatedSeries out(a.order());
        for (std::size_t k = 0; k <= a.order(); ++k) {
            out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
        }
        return out;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        check_same_order(a, b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; i + j <= a.order(); ++j) {
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return out;
    }

    friend TruncatedSeries operator*(const Scalar& s, const TruncatedSeries& a)
    {
        TruncatedSeries out = a;
        for (auto& c : out.coeffs_) {
            c *= s;
        }
        return out;
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

    // Multiplication by z (coefficient shift up); the top coefficient falls
    // off the truncation window.
    TruncatedSeries shifted_up() const
    {
        TruncatedSeries out(order());
        for (std::size_t k = order(); k >= 1; --k) {
            out.coeffs_[k] = coeffs_[k - 1];
        }
        return out;
    }

    // Division by z; requires zero constant term. The result has order N-1:
    // its top coefficient would need information beyond the window.
    TruncatedSeries shifted_down() const
    {
        if (coeffs_[0] != 0) {
            throw domain_error("cannot divide by z: nonzero constant term");
        }
        if (order() == 0) {
            throw domain_error("cannot divide by z at order 0");
        }
        TruncatedSeries out(order() - 1);
        for (std::size_t k = 0; k + 1 <= order(); ++k) {
            out.coeffs_[k] = coeffs_[k + 1];
        }
        return out;
    }

private:
    static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        if (a.order() != b.order()) {
            throw domain_error("series order mismatch");
        }
    }

    std::vector<Scalar> coeffs_;
};

// f(g(z)) truncated at the common order. g must have zero constant term.
inline TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g)
{
    if (f.order() != g.order()) {
        throw domain_error("series order mismatch in composition");
    }
    if (g[0] != 0) {
        throw domain_error("composition undefined: inner series has nonzero constant term");
    }
    const std::size_t n = f.order();
    // Horner evaluation in the truncated ring.
    TruncatedSeries result = TruncatedSeries::constant(f[n], n);
    for (std::size_t k = n; k-- > 0;) {
        result = result * g + TruncatedSeries::constant(f[k], n);
    }
    return result;
}

// Multiplicative inverse: r with f * r = 1 through order N. Requires a
// nonzero constant term.
inline TruncatedSeries series_reciprocal(const TruncatedSeries& f)
{
    if (f[0] == 0) {
        throw domain_error("series not invertible: zero constant term");
    }
    const std::size_t n = f.order();
    TruncatedSeries r(n);
    r[0] = Scalar(1) / f[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Scalar acc(0);
        for (std::size_t j = 1; j <= k; ++j) {
            acc += f[j] * r[k - j];
        }
        r[k] = -acc / f[0];
    }
    return r;
}

// Compositional inverse: h with g(h(z)) = h(g(z)) = z through order N.
// Requires g(0) = 0 and a nonzero linear coefficient.
inline TruncatedSeries series_reversion(const TruncatedSeries& g)
{
    if (g[0] != 0) {
        throw domain_error("series not compositionally invertible: nonzero constant term");
    }
    if (g.order() == 0 || g[1] == 0) {
        throw domain_error("series not compositionally invertible: zero linear coefficient");
    }
    const std::size_t n = g.order();
    TruncatedSeries h(n);
    h[1] = Scalar(1) / g[1];
    // Coefficient k of g(h) depends linearly on h[k] with factor g[1] and
    // otherwise only on h[1..k-1].
    for (std::size_t k = 2; k <= n; ++k) {
        const TruncatedSeries trial = series_compose(g, h);
        h[k] = -trial[k] / g[1];
    }
    return h;
}

// Triangular solve of t(w(z)) = target(z) for t with t(0) = 0, where
// w(0) = 0 and w has linear coefficient 1 (so w^k starts with z^k and the
// system is unitriangular). target must also vanish at 0.
inline TruncatedSeries solve_composition(const TruncatedSeries& target, const TruncatedSeries& w)
{
    if (w.order() != target.order()) {
        throw domain_error("series order mismatch in composition solve");
    }
    if (w[0] != 0 || target[0] != 0 || (w.order() >= 1 && w[1] != 1)) {
        throw domain_error("composition solve requires w = z + O(z^2) and target(0) = 0");
    }
    const std::size_t n = target.order();
    TruncatedSeries t(n);
    TruncatedSeries residual = target;
    TruncatedSeries wpow = w;
    for (std::size_t k = 1; k <= n; ++k) {
        t[k] = residual[k];
        residual = residual - t[k] * wpow;
        if (k < n) {
            wpow = wpow * w;
        }
    }
    return t;
}

} // namespace cfree
