#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfree/axioms.hpp"
#include "cfree/fock.hpp"
#include "cfree/law.hpp"
#include "cfree/scalar.hpp"
#include "cfree/transforms.hpp"
#include "cfree/two_level.hpp"

namespace cfree {

// c-free convolution through the transform calculus: the psi-layer by
// R-additivity / T-multiplicativity, the phi-layer by cR-additivity /
// cT-multiplicativity, both inverted back to moments.
inline TwoStateLaw cfree_convolve(ConvolutionKind kind, const TwoStateLaw& law_x,
                                  const TwoStateLaw& law_y, std::size_t n_max)
{
    if (n_max == 0 || n_max > law_x.order() || n_max > law_y.order()) {
        throw domain_error("convolution order exceeds available moments");
    }
    const TwoStateLaw x = law_x.truncated(n_max);
    const TwoStateLaw y = law_y.truncated(n_max);

    switch (kind) {
    case ConvolutionKind::Add: {
        const TruncatedSeries r_sum = transform_from_moments(TransformKind::R, x)
                                      + transform_from_moments(TransformKind::R, y);
        std::vector<Scalar> psi = moments_from_transform(TransformKind::R, r_sum);
        const TruncatedSeries cr_sum = transform_from_moments(TransformKind::cR, x)
                                       + transform_from_moments(TransformKind::cR, y);
        std::vector<Scalar> phi = moments_from_transform(TransformKind::cR, cr_sum, psi);
        return TwoStateLaw(std::move(psi), std::move(phi));
    }
    case ConvolutionKind::Mul: {
        if (x.psi_moment(1) == 0) {
            throw domain_error("multiplicative convolution requires psi(X) != 0");
        }
        if (y.psi_moment(1) == 0) {
            throw domain_error("multiplicative convolution requires psi(Y) != 0");
        }
        const TruncatedSeries t_prod = transform_from_moments(TransformKind::T, x)
                                       * transform_from_moments(TransformKind::T, y);
        std::vector<Scalar> psi = moments_from_transform(TransformKind::T, t_prod);
        const TruncatedSeries ct_prod = transform_from_moments(TransformKind::cT, x)
                                        * transform_from_moments(TransformKind::cT, y);
        std::vector<Scalar> phi = moments_from_transform(TransformKind::cT, ct_prod, psi);
        return TwoStateLaw(std::move(psi), std::move(phi));
    }
    }
    throw domain_error("unknown convolution kind");
}

// Operator on E whose state-pair moments through n_max reproduce the given
// law: the free layer is a Haagerup operator carried in by pi, the phi-layer
// enters through A*_eta and A_{eta,F(x)} with the shifted cR (or plain cT)
// coefficients.
inline EOpPtr realize_law(ConvolutionKind kind, const TwoStateLaw& law, unsigned h_letter,
                          unsigned k_letter, std::size_t n_max)
{
    if (n_max == 0 || n_max > law.order()) {
        throw domain_error("realization order exceeds available moments");
    }
    const TwoStateLaw target = law.truncated(n_max);

    switch (kind) {
    case ConvolutionKind::Add: {
        // R = z f(z) and cR = z F(z), so both polynomials are the transforms
        // shifted down one degree.
        const TruncatedSeries r = transform_from_moments(TransformKind::R, target);
        const TruncatedSeries cr = transform_from_moments(TransformKind::cR, target);
        const Poly f{std::vector<Scalar>(r.coeffs().begin() + 1, r.coeffs().end())};
        const Poly big_f{std::vector<Scalar>(cr.coeffs().begin() + 1, cr.coeffs().end())};
        const EOpPtr b = EOp::pi(haagerup_operator(HaagerupKind::Additive, f, h_letter));
        return construct_model(ModelKind::Additive, b, k_letter, big_f);
    }
    case ConvolutionKind::Mul: {
        if (target.psi_moment(1) == 0) {
            throw domain_error("multiplicative realization requires psi(X) != 0");
        }
        if (target.phi_moment(1) == 0) {
            throw domain_error("multiplicative realization requires phi(X) != 0");
        }
        const TruncatedSeries t = transform_from_moments(TransformKind::T, target);
        const TruncatedSeries ct = transform_from_moments(TransformKind::cT, target);
        const Poly f{t.coeffs()};
        const Poly big_f{ct.coeffs()};
        const EOpPtr d =
            EOp::pi(haagerup_operator(HaagerupKind::Multiplicative, f, h_letter));
        return construct_model(ModelKind::Multiplicative, d, k_letter, big_f);
    }
    }
    throw domain_error("unknown convolution kind");
}

struct CrossCheckMismatch {
    std::string path_a;
    std::string path_b;
    std::string state; // "psi" or "phi"
    std::size_t n = 0;
    Scalar value_a;
    Scalar value_b;
};

struct CrossCheckReport {
    ConvolutionKind kind = ConvolutionKind::Add;
    std::size_t order = 0;
    bool agree = false;
    std::optional<std::string> precondition_failure;
    std::optional<TwoStateLaw> transform_path;
    std::optional<TwoStateLaw> axiomatic_path;
    std::optional<TwoStateLaw> operator_path;
    std::optional<CrossCheckMismatch> first_mismatch;
};

namespace detail {

inline std::optional<CrossCheckMismatch> first_law_mismatch(
    const std::string& name_a, const TwoStateLaw& a,
    const std::string& name_b, const TwoStateLaw& b)
{
    for (std::size_t n = 1; n <= a.order(); ++n) {
        if (a.psi_moment(n) != b.psi_moment(n)) {
            return CrossCheckMismatch{name_a, name_b, "psi", n, a.psi_moment(n),
                                      b.psi_moment(n)};
        }
        if (a.phi_moment(n) != b.phi_moment(n)) {
            return CrossCheckMismatch{name_a, name_b, "phi", n, a.phi_moment(n),
                                      b.phi_moment(n)};
        }
    }
    return std::nullopt;
}

} // namespace detail

// The artifact's main verification harness: the convolved law computed three
// mutually independent ways (transform calculus, axiom recursion, operator
// simulation on E) must agree exactly.
inline CrossCheckReport cross_check(ConvolutionKind kind, const TwoStateLaw& law_x,
                                    const TwoStateLaw& law_y, std::size_t n_max)
{
    CrossCheckReport report;
    report.kind = kind;
    report.order = n_max;
    try {
        report.transform_path = cfree_convolve(kind, law_x, law_y, n_max);
        report.axiomatic_path = convolve_axiomatic(kind, law_x, law_y, n_max);

        const EOpPtr op_x = realize_law(kind, law_x, 0, 0, n_max);
        const EOpPtr op_y = realize_law(kind, law_y, 1, 1, n_max);
        const EOpPtr combined =
            kind == ConvolutionKind::Add ? op_x + op_y : op_x * op_y;
        const std::size_t lh = n_max * std::max<std::size_t>(1, h_rank_increase(combined)) + 1;
        const std::size_t lk = n_max * std::max<std::size_t>(1, k_rank_increase(combined)) + 1;
        report.operator_path = state_pair_moments(combined, n_max, lh, lk);
    } catch (const domain_error& e) {
        report.precondition_failure = e.what();
        return report;
    }

    report.first_mismatch = detail::first_law_mismatch(
        "transform", *report.transform_path, "axiomatic", *report.axiomatic_path);
    if (!report.first_mismatch) {
        report.first_mismatch = detail::first_law_mismatch(
            "transform", *report.transform_path, "operator", *report.operator_path);
    }
    report.agree = !report.first_mismatch.has_value();
    return report;
}

} // namespace cfree
