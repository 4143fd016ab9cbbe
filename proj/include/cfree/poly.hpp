#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cfree/scalar.hpp"

namespace cfree {

// Polynomial over the rationals, coeffs[k] = coefficient of z^k.
// Trailing zeros are stripped by normalize(); the zero polynomial is the
// empty coefficient vector.
class Poly {
public:
    Poly() = default;

    explicit Poly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs))
    {
        normalize();
    }

    static Poly constant(Scalar c)
    {
        return Poly{{std::move(c)}};
    }

    static Poly monomial(const Scalar& c, std::size_t degree)
    {
        std::vector<Scalar> v(degree + 1);
        v[degree] = c;
        return Poly{std::move(v)};
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is reported as 0.
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

    Scalar coeff(std::size_t k) const
    {
        return k < coeffs_.size() ? coeffs_[k] : Scalar(0);
    }

    const std::vector<Scalar>& coeffs() const { return coeffs_; }

    friend Poly operator+(const Poly& a, const Poly& b)
    {
        std::vector<Scalar> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < out.size(); ++k) {
            out[k] = a.coeff(k) + b.coeff(k);
        }
        return Poly{std::move(out)};
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            return Poly{};
        }
        std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly{std::move(out)};
    }

    friend Poly operator*(const Scalar& s, const Poly& p)
    {
        std::vector<Scalar> out = p.coeffs_;
        for (auto& c : out) {
            c *= s;
        }
        return Poly{std::move(out)};
    }

    friend Poly operator-(const Poly& a, const Poly& b)
    {
        return a + Scalar(-1) * b;
    }

    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void normalize()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<Scalar> coeffs_;
};

} // namespace cfree
