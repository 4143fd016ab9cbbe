#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cfree/law.hpp"
#include "cfree/poly.hpp"
#include "cfree/scalar.hpp"

namespace cfree {

// Seeded generator for the property suites. Draws are reduced by hand so the
// byte stream consumed per draw is fixed, keeping seeded runs reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    long long int_in(long long lo, long long hi)
    {
        return lo + static_cast<long long>(below(static_cast<std::size_t>(hi - lo + 1)));
    }

    // Small rational with |numerator| <= max_num and denominator <= max_den.
    Scalar rational(long long max_num = 3, long long max_den = 3)
    {
        return Scalar(int_in(-max_num, max_num), int_in(1, max_den));
    }

    Scalar nonzero_rational(long long max_num = 3, long long max_den = 3)
    {
        for (;;) {
            Scalar s = rational(max_num, max_den);
            if (s != 0) {
                return s;
            }
        }
    }

    Poly poly(std::size_t max_degree, bool nonzero_constant = false)
    {
        std::vector<Scalar> coeffs(max_degree + 1);
        for (auto& c : coeffs) {
            c = rational();
        }
        if (nonzero_constant && coeffs[0] == 0) {
            coeffs[0] = nonzero_rational();
        }
        return Poly{std::move(coeffs)};
    }

    TwoStateLaw law(std::size_t order, bool nonzero_psi1 = false,
                    bool nonzero_phi1 = false)
    {
        std::vector<Scalar> psi(order);
        std::vector<Scalar> phi(order);
        for (auto& m : psi) {
            m = rational();
        }
        for (auto& m : phi) {
            m = rational();
        }
        if (nonzero_psi1 && psi[0] == 0) {
            psi[0] = nonzero_rational();
        }
        if (nonzero_phi1 && phi[0] == 0) {
            phi[0] = nonzero_rational();
        }
        return TwoStateLaw(std::move(psi), std::move(phi));
    }

private:
    std::mt19937_64 engine_;
};

} // namespace cfree
