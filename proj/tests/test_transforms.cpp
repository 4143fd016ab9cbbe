#include <catch_amalgamated.hpp>

#include "cfree/rng.hpp"
#include "cfree/transforms.hpp"

using namespace cfree;

namespace {

std::vector<Scalar> sc(std::vector<long long> v)
{
    return {v.begin(), v.end()};
}

// phi(X^n) = a^n for n = 1..order
std::vector<Scalar> powers(const Scalar& a, std::size_t order)
{
    std::vector<Scalar> out;
    Scalar p(1);
    for (std::size_t n = 1; n <= order; ++n) {
        p *= a;
        out.push_back(p);
    }
    return out;
}

TruncatedSeries S(std::vector<long long> coeffs)
{
    TruncatedSeries s(coeffs.size() - 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        s[k] = coeffs[k];
    }
    return s;
}

} // namespace

TEST_CASE("transform closed forms")
{
    // semicircle-type psi-moments (0,1,0,2,0,5) have R = z^2
    const TwoStateLaw semi(sc({0, 1, 0, 2, 0, 5}), sc({0, 0, 0, 0, 0, 0}));
    CHECK(transform_from_moments(TransformKind::R, semi) == S({0, 0, 1, 0, 0, 0, 0}));

    const TwoStateLaw zero = TwoStateLaw::zero(6);
    CHECK(transform_from_moments(TransformKind::R, zero) == TruncatedSeries(6));

    // psi = 0, phi(X^n) = (1/2)^n: cR = z/2
    const TwoStateLaw geom(sc({0, 0, 0, 0, 0, 0}), powers(Scalar(1, 2), 6));
    TruncatedSeries half_z(6);
    half_z[1] = Scalar(1, 2);
    CHECK(transform_from_moments(TransformKind::cR, geom) == half_z);

    // psi all 1: T = 1
    const TwoStateLaw ones(sc({1, 1, 1, 1, 1, 1}), sc({0, 0, 0, 0, 0, 0}));
    CHECK(transform_from_moments(TransformKind::T, ones)
          == TruncatedSeries::constant(1, 5));

    // psi all 1, phi(X^n) = 3^n: cT = 3
    const TwoStateLaw three(sc({1, 1, 1, 1, 1, 1}), powers(Scalar(3), 6));
    CHECK(transform_from_moments(TransformKind::cT, three)
          == TruncatedSeries::constant(3, 5));
}

TEST_CASE("moments from transforms")
{
    CHECK(moments_from_transform(TransformKind::R, S({0, 0, 1, 0, 0, 0, 0}))
          == sc({0, 1, 0, 2, 0, 5}));
    CHECK(moments_from_transform(TransformKind::T, TruncatedSeries::constant(1, 5))
          == sc({1, 1, 1, 1, 1, 1}));

    // cR = (a+c) z with psi = 0 gives phi-moments (a+c)^n
    const Scalar ac = Scalar(1, 2) + Scalar(3);
    TruncatedSeries cr(6);
    cr[1] = ac;
    CHECK(moments_from_transform(TransformKind::cR, cr, sc({0, 0, 0, 0, 0, 0}))
          == powers(ac, 6));

    CHECK_THROWS_AS(moments_from_transform(TransformKind::cR, cr), domain_error);
    CHECK_THROWS_AS(moments_from_transform(TransformKind::S, cr), domain_error);
}

TEST_CASE("round trips at N=12")
{
    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const TwoStateLaw law = rng.law(12, true, true);
        {
            const auto r = transform_from_moments(TransformKind::R, law);
            CHECK(moments_from_transform(TransformKind::R, r) == law.psi_moments());
        }
        {
            const auto t = transform_from_moments(TransformKind::T, law);
            CHECK(moments_from_transform(TransformKind::T, t) == law.psi_moments());
        }
        {
            const auto cr = transform_from_moments(TransformKind::cR, law);
            CHECK(moments_from_transform(TransformKind::cR, cr, law.psi_moments())
                  == law.phi_moments());
        }
        {
            const auto ct = transform_from_moments(TransformKind::cT, law);
            CHECK(moments_from_transform(TransformKind::cT, ct, law.psi_moments())
                  == law.phi_moments());
        }
    }
}

TEST_CASE("defining equation residuals vanish")
{
    Rng rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const TwoStateLaw law = rng.law(8, true);
        for (auto kind : {TransformKind::R, TransformKind::T, TransformKind::cR,
                          TransformKind::cT}) {
            const auto t = transform_from_moments(kind, law);
            CHECK(defining_equation_residual(kind, t, law).is_zero());
        }
    }
}

TEST_CASE("S and cS are reciprocals")
{
    Rng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        const TwoStateLaw law = rng.law(8, true, true);
        const auto t = transform_from_moments(TransformKind::T, law);
        const auto s = transform_from_moments(TransformKind::S, law);
        CHECK(t * s == TruncatedSeries::constant(1, 7));
        const auto ct = transform_from_moments(TransformKind::cT, law);
        const auto cs = transform_from_moments(TransformKind::cS, law);
        CHECK(ct * cs == TruncatedSeries::constant(1, 7));
    }
}

TEST_CASE("two-state collapse")
{
    Rng rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        const auto psi = rng.law(8, true).psi_moments();
        const TwoStateLaw law(psi, psi);
        CHECK(transform_from_moments(TransformKind::cR, law)
              == transform_from_moments(TransformKind::R, law));
        CHECK(transform_from_moments(TransformKind::cT, law)
              == transform_from_moments(TransformKind::T, law));
    }
}

TEST_CASE("preconditions")
{
    const TwoStateLaw no_psi1(sc({0, 1, 1}), sc({1, 1, 1}));
    CHECK_THROWS_AS(transform_from_moments(TransformKind::T, no_psi1), domain_error);
    CHECK_THROWS_AS(transform_from_moments(TransformKind::cT, no_psi1), domain_error);
    const TwoStateLaw no_phi1(sc({1, 1, 1}), sc({0, 1, 1}));
    CHECK_THROWS_AS(transform_from_moments(TransformKind::cS, no_phi1), domain_error);
    // cT itself is still defined with phi(X) = 0
    CHECK(transform_from_moments(TransformKind::cT, no_phi1)[0] == 0);
}
