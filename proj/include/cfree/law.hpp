#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cfree/scalar.hpp"
#include "cfree/series.hpp"

namespace cfree {

// The pair of moment sequences of one variable under the two functionals:
// psi_moments[n-1] = psi(X^n), phi_moments[n-1] = phi(X^n), n = 1..N.
class TwoStateLaw {
public:
    TwoStateLaw(std::vector<Scalar> psi_moments, std::vector<Scalar> phi_moments)
        : psi_(std::move(psi_moments)), phi_(std::move(phi_moments))
    {
        if (psi_.size() != phi_.size()) {
            throw domain_error("two-state law: psi and phi sequences must have equal length");
        }
    }

    static TwoStateLaw zero(std::size_t order)
    {
        return TwoStateLaw(std::vector<Scalar>(order), std::vector<Scalar>(order));
    }

    std::size_t order() const { return psi_.size(); }

    // 1-based moment accessors, matching psi(X^n) / phi(X^n).
    const Scalar& psi_moment(std::size_t n) const { return psi_.at(n - 1); }
    const Scalar& phi_moment(std::size_t n) const { return phi_.at(n - 1); }

    const std::vector<Scalar>& psi_moments() const { return psi_; }
    const std::vector<Scalar>& phi_moments() const { return phi_; }

    // Restriction to the first n moments.
    TwoStateLaw truncated(std::size_t n) const
    {
        if (n > order()) {
            throw domain_error("cannot truncate law beyond its order");
        }
        return TwoStateLaw(std::vector<Scalar>(psi_.begin(), psi_.begin() + n),
                           std::vector<Scalar>(phi_.begin(), phi_.begin() + n));
    }

    // Moment-generating series m(z) = sum_{n>=1} psi(X^n) z^n.
    TruncatedSeries psi_series() const { return to_series(psi_); }

    // M(z) = sum_{n>=1} phi(X^n) z^n.
    TruncatedSeries phi_series() const { return to_series(phi_); }

    friend bool operator==(const TwoStateLaw& a, const TwoStateLaw& b) = default;

private:
    TruncatedSeries to_series(const std::vector<Scalar>& m) const
    {
        TruncatedSeries s(m.size());
        for (std::size_t n = 1; n <= m.size(); ++n) {
            s[n] = m[n - 1];
        }
        return s;
    }

    std::vector<Scalar> psi_;
    std::vector<Scalar> phi_;
};

} // namespace cfree
