#include <catch_amalgamated.hpp>

#include "cfree/convolution.hpp"
#include "cfree/rng.hpp"

using namespace cfree;

namespace {

std::vector<Scalar> sc(std::vector<long long> v)
{
    return {v.begin(), v.end()};
}

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

} // namespace

TEST_CASE("convolution closed forms")
{
    const Scalar a(1, 2);
    const Scalar c(-3);

    const TwoStateLaw x(sc({0, 0, 0, 0, 0, 0}), powers(a, 6));
    const TwoStateLaw y(sc({0, 0, 0, 0, 0, 0}), powers(c, 6));
    const TwoStateLaw sum = cfree_convolve(ConvolutionKind::Add, x, y, 6);
    CHECK(sum.phi_moments() == powers(a + c, 6));
    CHECK(sum.psi_moments() == sc({0, 0, 0, 0, 0, 0}));

    const TwoStateLaw xm(sc({1, 1, 1, 1, 1, 1}), powers(a, 6));
    const TwoStateLaw ym(sc({1, 1, 1, 1, 1, 1}), powers(c, 6));
    const TwoStateLaw prod = cfree_convolve(ConvolutionKind::Mul, xm, ym, 6);
    CHECK(prod.phi_moments() == powers(a * c, 6));
    CHECK(prod.psi_moments() == sc({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("convolution identities and commutativity")
{
    Rng rng(7);
    for (int trial = 0; trial < 8; ++trial) {
        const TwoStateLaw x = rng.law(6, true, true);
        const TwoStateLaw y = rng.law(6, true, true);

        // point mass at 0 is the additive identity
        CHECK(cfree_convolve(ConvolutionKind::Add, x, TwoStateLaw::zero(6), 6) == x);
        // point mass at 1 is the multiplicative identity
        const TwoStateLaw one(sc({1, 1, 1, 1, 1, 1}), sc({1, 1, 1, 1, 1, 1}));
        CHECK(cfree_convolve(ConvolutionKind::Mul, x, one, 6) == x);

        CHECK(cfree_convolve(ConvolutionKind::Add, x, y, 6)
              == cfree_convolve(ConvolutionKind::Add, y, x, 6));
        CHECK(cfree_convolve(ConvolutionKind::Mul, x, y, 6)
              == cfree_convolve(ConvolutionKind::Mul, y, x, 6));
    }
}

TEST_CASE("realize_law round trips")
{
    Rng rng(91);
    for (int trial = 0; trial < 6; ++trial) {
        const TwoStateLaw law = rng.law(6);
        const EOpPtr op = realize_law(ConvolutionKind::Add, law, 0, 0, 6);
        const std::size_t lh = 6 * std::max<std::size_t>(1, h_rank_increase(op)) + 1;
        CHECK(state_pair_moments(op, 6, lh, 7) == law);
    }
    for (int trial = 0; trial < 6; ++trial) {
        const TwoStateLaw law = rng.law(6, true, true);
        const EOpPtr op = realize_law(ConvolutionKind::Mul, law, 0, 0, 6);
        const std::size_t lh = 6 * std::max<std::size_t>(1, h_rank_increase(op)) + 1;
        CHECK(state_pair_moments(op, 6, lh, 7) == law);
    }
    // zero law realizes as the bare A* model with all moments zero
    const EOpPtr op = realize_law(ConvolutionKind::Add, TwoStateLaw::zero(4), 0, 0, 4);
    CHECK(state_pair_moments(op, 4, 5, 5) == TwoStateLaw::zero(4));
}

TEST_CASE("realize_law preconditions")
{
    const TwoStateLaw bad_psi(sc({0, 1, 1}), sc({1, 1, 1}));
    CHECK_THROWS_AS(realize_law(ConvolutionKind::Mul, bad_psi, 0, 0, 3), domain_error);
    const TwoStateLaw bad_phi(sc({1, 1, 1}), sc({0, 1, 1}));
    CHECK_THROWS_AS(realize_law(ConvolutionKind::Mul, bad_phi, 0, 0, 3), domain_error);
}

TEST_CASE("three-path cross check")
{
    const Scalar a(1, 2);
    const Scalar c(-3);
    const TwoStateLaw x(sc({0, 0, 0, 0, 0, 0}), powers(a, 6));
    const TwoStateLaw y(sc({0, 0, 0, 0, 0, 0}), powers(c, 6));
    const CrossCheckReport add = cross_check(ConvolutionKind::Add, x, y, 6);
    CHECK(add.agree);
    CHECK(add.transform_path == add.axiomatic_path);
    CHECK(add.transform_path == add.operator_path);

    const TwoStateLaw xm(sc({1, 1, 1, 1, 1, 1}), powers(a, 6));
    const TwoStateLaw ym(sc({1, 1, 1, 1, 1, 1}), powers(c, 6));
    const CrossCheckReport mul = cross_check(ConvolutionKind::Mul, xm, ym, 6);
    CHECK(mul.agree);
    CHECK(mul.transform_path->phi_moments() == powers(a * c, 6));
}

TEST_CASE("cross check reports precondition failures")
{
    const TwoStateLaw bad(sc({0, 1, 1}), sc({1, 1, 1}));
    const CrossCheckReport report = cross_check(ConvolutionKind::Mul, bad, bad, 3);
    CHECK_FALSE(report.agree);
    CHECK(report.precondition_failure.has_value());
    CHECK_FALSE(report.first_mismatch.has_value());
}

TEST_CASE("collapse onto free convolution")
{
    Rng rng(121);
    for (int trial = 0; trial < 5; ++trial) {
        const auto psi_x = rng.law(6, true).psi_moments();
        const auto psi_y = rng.law(6, true).psi_moments();
        const TwoStateLaw x(psi_x, psi_x);
        const TwoStateLaw y(psi_y, psi_y);
        for (auto kind : {ConvolutionKind::Add, ConvolutionKind::Mul}) {
            const TwoStateLaw out = cfree_convolve(kind, x, y, 6);
            // phi-free layer collapses onto the psi-free layer
            CHECK(out.phi_moments() == out.psi_moments());
            const CrossCheckReport report = cross_check(kind, x, y, 6);
            CHECK(report.agree);
        }
    }
}
