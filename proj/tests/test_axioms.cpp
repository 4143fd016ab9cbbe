#include <catch_amalgamated.hpp>

#include "cfree/axioms.hpp"
#include "cfree/fock.hpp"
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

const Poly X = Poly::monomial(1, 1);

} // namespace

TEST_CASE("mixed word expectations")
{
    Rng rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        const TwoStateLaw law1 = rng.law(4);
        const TwoStateLaw law2 = rng.law(4);
        const AlternatingWord xy = {{1, X}, {2, X}};
        CHECK(expectation_of_word(StateKind::Psi, xy, law1, law2)
              == law1.psi_moment(1) * law2.psi_moment(1));
        CHECK(expectation_of_word(StateKind::Phi, xy, law1, law2)
              == law1.phi_moment(1) * law2.phi_moment(1));

        // classical free moment identity for psi(XYXY)
        const AlternatingWord xyxy = {{1, X}, {2, X}, {1, X}, {2, X}};
        const Scalar x1 = law1.psi_moment(1);
        const Scalar x2 = law1.psi_moment(2);
        const Scalar y1 = law2.psi_moment(1);
        const Scalar y2 = law2.psi_moment(2);
        CHECK(expectation_of_word(StateKind::Psi, xyxy, law1, law2)
              == x2 * y1 * y1 + x1 * x1 * y2 - x1 * x1 * y1 * y1);
    }
}

TEST_CASE("normalization merges and extracts scalars")
{
    const TwoStateLaw law1(sc({2, 5}), sc({3, 7}));
    const TwoStateLaw law2(sc({1, 1}), sc({1, 1}));
    // X * 3 * X within algebra 1 is 3 X^2
    const AlternatingWord w = {{1, X}, {2, Poly::constant(3)}, {1, X}};
    CHECK(expectation_of_word(StateKind::Psi, w, law1, law2) == 15);
    CHECK(expectation_of_word(StateKind::Phi, w, law1, law2) == 21);
    // zero letter kills the word
    const AlternatingWord z = {{1, X}, {2, Poly{}}};
    CHECK(expectation_of_word(StateKind::Phi, z, law1, law2) == 0);
}

TEST_CASE("multilinearity in a letter")
{
    Rng rng(23);
    const TwoStateLaw law1 = rng.law(6);
    const TwoStateLaw law2 = rng.law(6);
    const Poly p = rng.poly(2);
    const Poly q = rng.poly(2);
    const Scalar a = rng.rational();
    for (auto state : {StateKind::Phi, StateKind::Psi}) {
        const AlternatingWord wp = {{2, X}, {1, p}, {2, X}};
        const AlternatingWord wq = {{2, X}, {1, q}, {2, X}};
        const AlternatingWord wsum = {{2, X}, {1, a * p + q}, {2, X}};
        CHECK(expectation_of_word(state, wsum, law1, law2)
              == a * expectation_of_word(state, wp, law1, law2)
                     + expectation_of_word(state, wq, law1, law2));
    }
}

TEST_CASE("axiomatic convolution closed forms")
{
    CHECK(convolve_axiomatic(ConvolutionKind::Add, TwoStateLaw::zero(5),
                             TwoStateLaw::zero(5), 5)
          == TwoStateLaw::zero(5));

    const Scalar a(1, 2);
    const Scalar c(-3);
    const TwoStateLaw x(sc({0, 0, 0, 0, 0, 0}), powers(a, 6));
    const TwoStateLaw y(sc({0, 0, 0, 0, 0, 0}), powers(c, 6));
    const TwoStateLaw sum = convolve_axiomatic(ConvolutionKind::Add, x, y, 6);
    CHECK(sum.phi_moments() == powers(a + c, 6));
    CHECK(sum.psi_moments() == sc({0, 0, 0, 0, 0, 0}));

    const TwoStateLaw xm(sc({1, 1, 1, 1, 1, 1}), powers(a, 6));
    const TwoStateLaw ym(sc({1, 1, 1, 1, 1, 1}), powers(c, 6));
    const TwoStateLaw prod = convolve_axiomatic(ConvolutionKind::Mul, xm, ym, 6);
    CHECK(prod.phi_moments() == powers(a * c, 6));
    CHECK(prod.psi_moments() == sc({1, 1, 1, 1, 1, 1}));
}

TEST_CASE("psi restriction agrees with fock simulation")
{
    Rng rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        const Poly f1 = rng.poly(2);
        const Poly f2 = rng.poly(2);
        const auto h1 = haagerup_operator(HaagerupKind::Additive, f1, 0);
        const auto h2 = haagerup_operator(HaagerupKind::Additive, f2, 1);
        const auto m1 = vacuum_moments(h1, 6, 20);
        const auto m2 = vacuum_moments(h2, 6, 20);
        const TwoStateLaw law1(m1, m1);
        const TwoStateLaw law2(m2, m2);
        const TwoStateLaw sum = convolve_axiomatic(ConvolutionKind::Add, law1, law2, 6);
        CHECK(sum.psi_moments() == vacuum_moments(h1 + h2, 6, 20));
    }
}

TEST_CASE("inner centered letters annihilate psi")
{
    // psi(a_0 b_1 a_1 ... b_n a_{n+1}) = 0 when every inner letter is
    // psi-centered, regardless of the outer a_0, a_{n+1}
    Rng rng(58);
    for (int trial = 0; trial < 8; ++trial) {
        const TwoStateLaw law1 = rng.law(8);
        const TwoStateLaw law2 = rng.law(8);
        auto centered = [&](int tag) -> WordLetter {
            const TwoStateLaw& law = tag == 1 ? law1 : law2;
            Poly p = rng.poly(2);
            Scalar mean = p.coeff(0);
            for (std::size_t k = 1; k <= p.degree(); ++k) {
                mean += p.coeff(k) * law.psi_moment(k);
            }
            return {tag, p - Poly::constant(mean)};
        };
        const std::size_t inner = 1 + rng.below(3);
        AlternatingWord word;
        word.push_back({1, rng.poly(2)});
        for (std::size_t j = 0; j < inner; ++j) {
            word.push_back(centered(2));
            if (j + 1 < inner) {
                word.push_back(centered(1));
            }
        }
        word.push_back({1, rng.poly(2)});
        CHECK(expectation_of_word(StateKind::Psi, word, law1, law2) == 0);
    }
}

TEST_CASE("insufficient moment data is an error")
{
    const TwoStateLaw law(sc({1, 1}), sc({1, 1}));
    const AlternatingWord deep = {{1, Poly::monomial(1, 3)}};
    CHECK_THROWS_AS(expectation_of_word(StateKind::Psi, deep, law, law), domain_error);
}
