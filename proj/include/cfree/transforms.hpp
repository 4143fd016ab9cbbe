#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cfree/law.hpp"
#include "cfree/scalar.hpp"
#include "cfree/series.hpp"

namespace cfree {

enum class TransformKind { R, T, S, cR, cT, cS };

inline const char* transform_kind_name(TransformKind k)
{
    switch (k) {
    case TransformKind::R: return "R";
    case TransformKind::T: return "T";
    case TransformKind::S: return "S";
    case TransformKind::cR: return "cR";
    case TransformKind::cT: return "cT";
    case TransformKind::cS: return "cS";
    }
    return "?";
}

inline std::optional<TransformKind> transform_kind_from_name(const std::string& name)
{
    if (name == "R") return TransformKind::R;
    if (name == "T") return TransformKind::T;
    if (name == "S") return TransformKind::S;
    if (name == "cR") return TransformKind::cR;
    if (name == "cT") return TransformKind::cT;
    if (name == "cS") return TransformKind::cS;
    return std::nullopt;
}

namespace detail {

// w(z) = z (1 + m(z)); always has w = z + O(z^2), so the composition solve
// needs no precondition on the first moment.
inline TruncatedSeries warped_variable(const TruncatedSeries& m)
{
    const TruncatedSeries one = TruncatedSeries::constant(1, m.order());
    return (one + m).shifted_up();
}

inline void require_nonzero_psi1(const TwoStateLaw& law, TransformKind kind)
{
    if (law.psi_moment(1) == 0) {
        throw domain_error(std::string(transform_kind_name(kind))
                           + "-transform undefined: psi(X) = 0");
    }
}

} // namespace detail

// Moments -> transform. Exactness windows: R and cR are returned at the law's
// order N with zero constant term; T, S, cT, cS are returned at order N-1
// (their z^N coefficient would need the (N+1)-st moment).
inline TruncatedSeries transform_from_moments(TransformKind kind, const TwoStateLaw& law)
{
    const std::size_t n = law.order();
    if (n == 0) {
        throw domain_error("transform of an empty law");
    }
    const TruncatedSeries m = law.psi_series();
    const TruncatedSeries big_m = law.phi_series();
    const TruncatedSeries one = TruncatedSeries::constant(1, n);

    switch (kind) {
    case TransformKind::R: {
        // m(z) = R(z [1 + m(z)])
        return solve_composition(m, detail::warped_variable(m));
    }
    case TransformKind::cR: {
        // cR(z [1 + m(z)]) (1 + M(z)) = M(z) (1 + m(z))
        const TruncatedSeries target = big_m * (one + m) * series_reciprocal(one + big_m);
        return solve_composition(target, detail::warped_variable(m));
    }
    case TransformKind::T: {
        // (1/z) m(z) = T(m(z)) (1 + m(z))
        detail::require_nonzero_psi1(law, kind);
        if (n == 1) {
            return TruncatedSeries::constant(law.psi_moment(1), 0);
        }
        const TruncatedSeries m_low = m.truncated(n - 1);
        const TruncatedSeries one_low = TruncatedSeries::constant(1, n - 1);
        const TruncatedSeries lhs = m.shifted_down() * series_reciprocal(one_low + m_low);
        return series_compose(lhs, series_reversion(m_low));
    }
    case TransformKind::cT: {
        // cT(m(z)) (1 + M(z)) = M(z) / z
        detail::require_nonzero_psi1(law, kind);
        if (n == 1) {
            return TruncatedSeries::constant(law.phi_moment(1), 0);
        }
        const TruncatedSeries m_low = m.truncated(n - 1);
        const TruncatedSeries one_low = TruncatedSeries::constant(1, n - 1);
        const TruncatedSeries lhs =
            big_m.shifted_down() * series_reciprocal(one_low + big_m.truncated(n - 1));
        return series_compose(lhs, series_reversion(m_low));
    }
    case TransformKind::S: {
        // T(z) S(z) = 1
        return series_reciprocal(transform_from_moments(TransformKind::T, law));
    }
    case TransformKind::cS: {
        if (law.phi_moment(1) == 0) {
            throw domain_error("cS-transform undefined: phi(X) = 0");
        }
        return series_reciprocal(transform_from_moments(TransformKind::cT, law));
    }
    }
    throw domain_error("unknown transform kind");
}

// Transform -> moments, the defining equation solved in the opposite
// direction. R and T recover psi-moments; cR and cT need the psi-moments as
// input (the m-series enters their defining equations) and recover
// phi-moments. A transform of order K yields K moments for R/cR and K+1 for
// T/cT; for cR/cT the output length is the supplied psi-moment count.
inline std::vector<Scalar> moments_from_transform(
    TransformKind kind, const TruncatedSeries& transform,
    const std::vector<Scalar>& psi_moments = {})
{
    switch (kind) {
    case TransformKind::R: {
        if (transform[0] != 0) {
            throw domain_error("R-transform must have zero constant term");
        }
        const std::size_t n = transform.order();
        TruncatedSeries m(n);
        for (std::size_t j = 1; j <= n; ++j) {
            // Coefficient j of R(z(1+m)) depends only on m[1..j-1].
            m[j] = series_compose(transform, detail::warped_variable(m))[j];
        }
        return {m.coeffs().begin() + 1, m.coeffs().end()};
    }
    case TransformKind::T: {
        if (transform[0] == 0) {
            throw domain_error("T-transform with zero constant term is inconsistent "
                               "with psi(X) != 0");
        }
        const std::size_t n = transform.order() + 1;
        const TruncatedSeries t = transform.truncated(n);
        const TruncatedSeries one = TruncatedSeries::constant(1, n);
        TruncatedSeries m(n);
        for (std::size_t j = 1; j <= n; ++j) {
            // m = z T(m) (1 + m); the leading z keeps the solve triangular.
            const TruncatedSeries rhs = (series_compose(t, m) * (one + m)).shifted_up();
            m[j] = rhs[j];
        }
        return {m.coeffs().begin() + 1, m.coeffs().end()};
    }
    case TransformKind::cR: {
        if (psi_moments.empty()) {
            throw domain_error("inverting cR requires the psi-moment sequence");
        }
        if (transform[0] != 0) {
            throw domain_error("cR-transform must have zero constant term");
        }
        const std::size_t n = psi_moments.size();
        TruncatedSeries m(n);
        for (std::size_t j = 1; j <= n; ++j) {
            m[j] = psi_moments[j - 1];
        }
        const TruncatedSeries one = TruncatedSeries::constant(1, n);
        const TruncatedSeries crw =
            series_compose(transform.truncated(n), detail::warped_variable(m));
        // the cR equation rearranged: M (1 + m - cR(w)) = cR(w).
        const TruncatedSeries big_m = crw * series_reciprocal(one + m - crw);
        return {big_m.coeffs().begin() + 1, big_m.coeffs().end()};
    }
    case TransformKind::cT: {
        if (psi_moments.empty()) {
            throw domain_error("inverting cT requires the psi-moment sequence");
        }
        if (psi_moments[0] == 0) {
            throw domain_error("inverting cT requires psi(X) != 0");
        }
        const std::size_t n = psi_moments.size();
        TruncatedSeries m(n);
        for (std::size_t j = 1; j <= n; ++j) {
            m[j] = psi_moments[j - 1];
        }
        const TruncatedSeries one = TruncatedSeries::constant(1, n);
        const TruncatedSeries u = series_compose(transform.truncated(n), m).shifted_up();
        // the cT equation rearranged: M (1 - z cT(m)) = z cT(m).
        const TruncatedSeries big_m = u * series_reciprocal(one - u);
        return {big_m.coeffs().begin() + 1, big_m.coeffs().end()};
    }
    default:
        throw domain_error("moments_from_transform supports kinds R, T, cR, cT");
    }
}

// Residual of the defining functional equation after substituting a computed
// transform back in. Zero through the stated window iff the transform is
// correct; used by the property suites.
inline TruncatedSeries defining_equation_residual(
    TransformKind kind, const TruncatedSeries& transform, const TwoStateLaw& law)
{
    const std::size_t n = law.order();
    const TruncatedSeries m = law.psi_series();
    const TruncatedSeries big_m = law.phi_series();
    const TruncatedSeries one = TruncatedSeries::constant(1, n);

    switch (kind) {
    case TransformKind::R:
        return series_compose(transform.truncated(n), detail::warped_variable(m)) - m;
    case TransformKind::cR:
        return series_compose(transform.truncated(n), detail::warped_variable(m)) * (one + big_m)
               - big_m * (one + m);
    case TransformKind::T: {
        const std::size_t k = n - 1;
        const TruncatedSeries one_low = TruncatedSeries::constant(1, k);
        return series_compose(transform.truncated(k), m.truncated(k))
                   * (one_low + m.truncated(k))
               - m.shifted_down();
    }
    case TransformKind::cT: {
        const std::size_t k = n - 1;
        const TruncatedSeries one_low = TruncatedSeries::constant(1, k);
        return series_compose(transform.truncated(k), m.truncated(k))
                   * (one_low + big_m.truncated(k))
               - big_m.shifted_down();
    }
    default:
        throw domain_error("residual check supports kinds R, T, cR, cT");
    }
}

} // namespace cfree
