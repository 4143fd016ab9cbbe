#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfree/axioms.hpp"
#include "cfree/convolution.hpp"
#include "cfree/fock.hpp"
#include "cfree/json_io.hpp"
#include "cfree/law.hpp"
#include "cfree/rng.hpp"
#include "cfree/transforms.hpp"
#include "cfree/two_level.hpp"

namespace cfree {

struct VerifyReport {
    std::string suite;
    bool pass = true;
    std::size_t checks = 0;
    std::string detail; // first failure, human- and machine-readable

    void fail(std::string message)
    {
        if (pass) {
            detail = std::move(message);
        }
        pass = false;
    }
};

namespace detail {

inline void enumerate_words(unsigned alphabet, std::size_t max_rank,
                            std::vector<std::vector<unsigned>>& out)
{
    out.push_back({});
    std::size_t begin = 0;
    for (std::size_t rank = 1; rank <= max_rank; ++rank) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i) {
            for (unsigned l = 0; l < alphabet; ++l) {
                auto w = out[i];
                w.push_back(l);
                out.push_back(std::move(w));
            }
        }
        begin = end;
    }
}

// Every Left(h) and Right(h, k) with ranks within the given bounds.
inline std::vector<EBasis> enumerate_basis(unsigned h_alphabet, std::size_t h_rank,
                                           unsigned k_alphabet, std::size_t k_rank)
{
    std::vector<std::vector<unsigned>> h_words;
    std::vector<std::vector<unsigned>> k_words;
    enumerate_words(h_alphabet, h_rank, h_words);
    enumerate_words(k_alphabet, k_rank, k_words);
    std::vector<EBasis> basis;
    for (const auto& h : h_words) {
        basis.push_back(EBasis{true, h, {}});
    }
    for (const auto& h : h_words) {
        for (const auto& k : k_words) {
            basis.push_back(EBasis{false, h, k});
        }
    }
    return basis;
}

inline std::string basis_name(const EBasis& b)
{
    std::string s = b.left ? "Left(" : "Right(";
    for (unsigned l : b.h) {
        s += std::to_string(l);
    }
    if (!b.left) {
        s += ";";
        for (unsigned l : b.k) {
            s += std::to_string(l);
        }
    }
    s += ")";
    return s;
}

// First basis vector on which the two operators disagree, if any.
inline std::optional<EBasis> first_difference(const EOpPtr& a, const EOpPtr& b,
                                              const std::vector<EBasis>& basis,
                                              std::size_t lh, std::size_t lk)
{
    for (const auto& v : basis) {
        const EVector bv = EVector::basis(v);
        if (apply_e(a, bv, lh, lk) != apply_e(b, bv, lh, lk)) {
            return v;
        }
    }
    return std::nullopt;
}

inline FockOpPtr random_fock_expr(Rng& rng, const std::vector<unsigned>& letters,
                                  std::size_t max_monomials, std::size_t max_len)
{
    std::vector<FockOpPtr> terms;
    const std::size_t n_terms = 1 + rng.below(max_monomials);
    for (std::size_t t = 0; t < n_terms; ++t) {
        const std::size_t len = rng.below(max_len + 1);
        std::vector<FockOpPtr> factors;
        for (std::size_t i = 0; i < len; ++i) {
            const unsigned letter = letters[rng.below(letters.size())];
            factors.push_back(rng.below(2) == 0 ? FockOp::create(letter)
                                                : FockOp::annihilate(letter));
        }
        FockOpPtr mono =
            factors.empty() ? FockOp::identity() : FockOp::product(std::move(factors));
        terms.push_back(FockOp::scale(rng.nonzero_rational(), mono));
    }
    return FockOp::sum(std::move(terms));
}

// Random element of the algebra generated by pi(A(e)) and D(eta).
inline EOpPtr random_algebra_element(Rng& rng, unsigned e_letter, unsigned eta_letter,
                                     std::size_t max_monomials, std::size_t max_len)
{
    std::vector<EOpPtr> terms;
    const std::size_t n_terms = 1 + rng.below(max_monomials);
    for (std::size_t t = 0; t < n_terms; ++t) {
        const std::size_t len = 1 + rng.below(max_len);
        std::vector<EOpPtr> factors;
        for (std::size_t i = 0; i < len; ++i) {
            switch (rng.below(4)) {
            case 0:
                factors.push_back(EOp::pi(FockOp::create(e_letter)));
                break;
            case 1:
                factors.push_back(EOp::pi(FockOp::annihilate(e_letter)));
                break;
            case 2:
                factors.push_back(EOp::a_star(eta_letter));
                break;
            default:
                factors.push_back(EOp::a_n(eta_letter, rng.below(3)));
                break;
            }
        }
        terms.push_back(EOp::scale(rng.nonzero_rational(), EOp::product(std::move(factors))));
    }
    return EOp::sum(std::move(terms));
}

inline Scalar seq_at(const std::vector<Scalar>& moments, std::size_t q)
{
    return q == 0 ? Scalar(1) : moments[q - 1];
}

// Right-hand side of the additive moment recurrence:
//   phi(a^n) = sum_{p, q_1..q_p >= 0, 1+p+sum q <= n}
//              phi(a^{n-1-p-sum q}) f_p psi(a^{q_1}) ... psi(a^{q_p})
inline Scalar additive_recurrence_rhs(std::size_t n, const std::vector<Scalar>& phi,
                                      const std::vector<Scalar>& psi, const Poly& f)
{
    Scalar total(0);
    const std::size_t max_p = f.is_zero() ? 0 : f.degree();
    std::function<void(std::size_t, std::size_t, std::size_t, const Scalar&)> walk =
        [&](std::size_t p, std::size_t slots_left, std::size_t used, const Scalar& acc) {
            if (slots_left == 0) {
                total += acc * seq_at(phi, n - 1 - p - used);
                return;
            }
            for (std::size_t q = 0; used + q + p <= n - 1; ++q) {
                walk(p, slots_left - 1, used + q, acc * seq_at(psi, q));
            }
        };
    for (std::size_t p = 0; p <= max_p && p + 1 <= n; ++p) {
        if (f.coeff(p) == 0) {
            continue;
        }
        walk(p, p, 0, f.coeff(p));
    }
    return total;
}

// Right-hand side of the multiplicative moment recurrence:
//   phi(b^n) = sum_{j=0}^{n-1} phi(b^{n-1-j})
//              sum_{p, q_1..q_p > 0, sum q = j} g_p psi(b^{q_1}) ... psi(b^{q_p})
inline Scalar multiplicative_recurrence_rhs(std::size_t n, const std::vector<Scalar>& phi,
                                            const std::vector<Scalar>& psi, const Poly& g)
{
    Scalar total(0);
    const std::size_t max_p = g.is_zero() ? 0 : g.degree();
    for (std::size_t j = 0; j <= n - 1; ++j) {
        Scalar inner(0);
        if (j == 0) {
            inner += g.coeff(0);
        }
        std::function<void(std::size_t, std::size_t, const Scalar&)> walk =
            [&](std::size_t slots_left, std::size_t remaining, const Scalar& acc) {
                if (slots_left == 0) {
                    if (remaining == 0) {
                        inner += acc;
                    }
                    return;
                }
                for (std::size_t q = 1; q + (slots_left - 1) <= remaining; ++q) {
                    walk(slots_left - 1, remaining - q, acc * seq_at(psi, q));
                }
            };
        for (std::size_t p = 1; p <= max_p && p <= j; ++p) {
            if (g.coeff(p) != 0) {
                walk(p, j, g.coeff(p));
            }
        }
        total += seq_at(phi, n - 1 - j) * inner;
    }
    return total;
}

inline TruncatedSeries z_times(const Poly& f, std::size_t order)
{
    return TruncatedSeries::from_poly(f, order).shifted_up();
}

} // namespace detail

// Structural identities of the D(eta) generators (a_n against a_star powers,
// pi against a_n, orthogonal eta letters) as exact operator equalities on an
// enumerated family of basis vectors.
inline VerifyReport verify_remark1(std::size_t trials, std::uint64_t seed)
{
    VerifyReport report{"remark1"};
    Rng rng(seed);
    const auto basis = detail::enumerate_basis(2, 2, 2, 3);
    const std::size_t lh = 6;
    const std::size_t lk = 8;

    auto check = [&](const EOpPtr& a, const EOpPtr& b, const std::string& what) {
        ++report.checks;
        if (auto bad = detail::first_difference(a, b, basis, lh, lk)) {
            report.fail(what + " differs at " + detail::basis_name(*bad));
        }
    };

    auto a_star_pow = [](unsigned k, std::size_t p) {
        std::vector<EOpPtr> factors(p, EOp::a_star(k));
        return p == 0 ? EOp::identity() : EOp::product(std::move(factors));
    };

    for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t p = 0; p <= 3; ++p) {
            const EOpPtr lhs = EOp::a_n(0, n) * a_star_pow(0, p);
            const EOpPtr rhs = n >= p ? EOp::a_n(0, n - p) : EOp::zero();
            check(lhs, rhs, "a_n(0," + std::to_string(n) + ") a*^" + std::to_string(p));
        }
    }
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const EOpPtr x = EOp::pi(detail::random_fock_expr(rng, {0, 1}, 2, 2));
        for (std::size_t n = 0; n <= 3; ++n) {
            check(x * EOp::a_n(0, n), EOp::zero(), "pi(x) a_n(0,n)");
        }
    }
    for (std::size_t n = 1; n <= 3; ++n) {
        for (std::size_t m = 1; m <= 3; ++m) {
            check(EOp::a_n(0, n) * EOp::a_n(1, m), EOp::zero(), "a_n a_n distinct letters");
            check(EOp::a_n(0, n) * EOp::a_n(0, m), EOp::zero(), "a_n a_n same letter");
        }
        check(EOp::a_n(0, 0) * EOp::a_n(0, n), EOp::a_n(0, n), "Id_{COmega} a_n");
        check(EOp::a_n(0, n) * EOp::a_n(0, 0), EOp::zero(), "a_n Id_{COmega}");
    }

    // Id_{E_0} A* = A*. The right-multiplied identity holds away from the
    // phi-vacuum line only: pi(Id) kills Omega while A* does not.
    const EOpPtr id_e0 = EOp::pi(FockOp::identity());
    check(id_e0 * EOp::a_star(0), EOp::a_star(0), "Id_{E0} a_star");
    {
        ++report.checks;
        std::vector<EBasis> off_omega;
        for (const auto& b : basis) {
            if (!b.is_omega()) {
                off_omega.push_back(b);
            }
        }
        if (auto bad = detail::first_difference(EOp::a_star(0) * id_e0, EOp::a_star(0),
                                                off_omega, lh, lk)) {
            report.fail("a_star Id_{E0} differs on E_0 at " + detail::basis_name(*bad));
        }
        if (!apply_e(EOp::a_star(0) * id_e0, EVector::basis(EBasis::omega()), lh, lk)
                 .is_zero()) {
            report.fail("a_star Id_{E0} must vanish on Omega");
        }
    }

    // orthogonal eta letters annihilate each other through a_star chains
    for (std::size_t n = 0; n <= 3; ++n) {
        for (std::size_t p = 0; p <= 3; ++p) {
            check(EOp::a_n(0, n) * a_star_pow(0, p) * EOp::a_star(1), EOp::zero(),
                  "remark2 a_n(0,n) a*(0)^p a*(1)");
        }
    }
    return report;
}

// Sandwich identity for random x in pi(L(T(H))): between a K-side creation
// on the right and any D(eta) generator on the left, x acts as the scalar
// psi(x).
inline VerifyReport verify_lemma1(std::size_t trials, std::uint64_t seed)
{
    VerifyReport report{"lemma1"};
    Rng rng(seed);
    const auto basis = detail::enumerate_basis(2, 2, 2, 3);
    const std::size_t lh = 7;
    const std::size_t lk = 8;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const FockOpPtr raw = detail::random_fock_expr(rng, {0, 1}, 2, 2);
        const EOpPtr x = EOp::pi(raw);
        const Scalar psi_x = psi_state(x, lh, lk);
        for (unsigned k1 : {0u, 1u}) {
            for (unsigned k2 : {0u, 1u}) {
                ++report.checks;
                const EOpPtr lhs = EOp::a_star(k1) * x * EOp::a_star(k2);
                const EOpPtr rhs =
                    EOp::scale(psi_x, EOp::a_star(k1) * EOp::a_star(k2));
                if (auto bad = detail::first_difference(lhs, rhs, basis, lh, lk)) {
                    report.fail("A*_1 x A*_2 != psi(x) A*_1 A*_2 at "
                                + detail::basis_name(*bad));
                }
                for (std::size_t n = 0; n <= 3; ++n) {
                    ++report.checks;
                    const EOpPtr lhs2 = EOp::a_n(k1, n) * x * EOp::a_star(k2);
                    const EOpPtr rhs2 =
                        EOp::scale(psi_x, EOp::a_n(k1, n) * EOp::a_star(k2));
                    if (auto bad = detail::first_difference(lhs2, rhs2, basis, lh, lk)) {
                        report.fail("A_n x A* != psi(x) A_n A* at "
                                    + detail::basis_name(*bad));
                    }
                }
            }
        }
    }
    return report;
}

// phi(B A^n) = f_n (eq. iii), pi(x) Omega = 0 and range(A_f) in C Omega (eq. i).
inline VerifyReport verify_eqiii(std::size_t trials, std::uint64_t seed)
{
    VerifyReport report{"eqiii"};
    Rng rng(seed);
    const auto basis = detail::enumerate_basis(2, 2, 2, 3);
    const std::size_t lh = 7;
    const std::size_t lk = 8;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const Poly f = rng.poly(3);
        for (std::size_t n = 0; n <= 5; ++n) {
            ++report.checks;
            std::vector<EOpPtr> factors{EOp::a_f(0, f)};
            factors.insert(factors.end(), n, EOp::a_star(0));
            const Scalar value = phi_state(EOp::product(std::move(factors)), lh, lk);
            if (value != f.coeff(n)) {
                report.fail("phi(B A^" + std::to_string(n) + ") = " + to_string(value)
                            + ", expected " + to_string(f.coeff(n)));
            }
        }

        const EOpPtr x = EOp::pi(detail::random_fock_expr(rng, {0, 1}, 2, 2));
        ++report.checks;
        if (!apply_e(x, EVector::basis(EBasis::omega()), lh, lk).is_zero()) {
            report.fail("pi(x) Omega != 0");
        }
        const EOpPtr af = EOp::a_f(0, f);
        for (const auto& b : basis) {
            ++report.checks;
            const EVector image = apply_e(af, EVector::basis(b), lh, lk);
            for (const auto& [word, c] : image.entries()) {
                if (!word.is_omega()) {
                    report.fail("range(A_f) leaves C Omega at " + detail::basis_name(b));
                }
            }
        }
    }
    return report;
}

// Additive model transform: cR of b + A* + A_{f(x)} equals z f(z); plus the
// additive moment recurrence and psi(alpha^q) = psi(b^q).
inline VerifyReport verify_crthm(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    VerifyReport report{"crthm"};
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const FockOpPtr b_raw = detail::random_fock_expr(rng, {0, 1}, 2, 2);
        const Poly f = rng.poly(3);
        const EOpPtr alpha =
            construct_model(ModelKind::Additive, EOp::pi(b_raw), 0, f);
        const std::size_t lh = order * std::max<std::size_t>(1, h_rank_increase(alpha)) + 1;
        const std::size_t lk = order + 1;
        const TwoStateLaw law = state_pair_moments(alpha, order, lh, lk);

        ++report.checks;
        const TruncatedSeries cr = transform_from_moments(TransformKind::cR, law);
        if (cr != detail::z_times(f, order)) {
            report.fail("cR of additive model differs from z f(z)");
        }
        for (std::size_t n = 1; n <= order; ++n) {
            ++report.checks;
            const Scalar rhs = detail::additive_recurrence_rhs(
                n, law.phi_moments(), law.psi_moments(), f);
            if (law.phi_moment(n) != rhs) {
                report.fail("additive recurrence fails at n=" + std::to_string(n));
            }
        }
        ++report.checks;
        if (law.psi_moments() != vacuum_moments(b_raw, order, lh)) {
            report.fail("psi(alpha^q) != psi(b^q)");
        }
    }
    return report;
}

// Multiplicative model transform: cT of d + d A* + A_{f(x)} equals f(z); plus the
// multiplicative moment recurrence and psi(beta^q) = psi(d^q).
inline VerifyReport verify_ct(std::size_t trials, std::uint64_t seed, std::size_t order)
{
    VerifyReport report{"ct"};
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        FockOpPtr d_raw;
        do {
            d_raw = detail::random_fock_expr(rng, {0, 1}, 2, 2);
        } while (vacuum_moments(d_raw, 1, 3)[0] == 0);
        const Poly f = rng.poly(3, /*nonzero_constant=*/true);
        const EOpPtr beta =
            construct_model(ModelKind::Multiplicative, EOp::pi(d_raw), 0, f);
        const std::size_t lh = order * std::max<std::size_t>(1, h_rank_increase(beta)) + 1;
        const std::size_t lk = order + 1;
        const TwoStateLaw law = state_pair_moments(beta, order, lh, lk);

        ++report.checks;
        const TruncatedSeries ct = transform_from_moments(TransformKind::cT, law);
        if (ct != TruncatedSeries::from_poly(f, order - 1)) {
            report.fail("cT of multiplicative model differs from f(z)");
        }
        for (std::size_t n = 1; n <= order; ++n) {
            ++report.checks;
            const Scalar rhs = detail::multiplicative_recurrence_rhs(
                n, law.phi_moments(), law.psi_moments(), f);
            if (law.phi_moment(n) != rhs) {
                report.fail("multiplicative recurrence fails at n=" + std::to_string(n));
            }
        }
        ++report.checks;
        if (law.psi_moments() != vacuum_moments(d_raw, order, lh)) {
            report.fail("psi(beta^q) != psi(d^q)");
        }
    }
    return report;
}

// c-freeness of the generated algebras: psi vanishes on centered alternating
// words and phi factorizes over them.
inline VerifyReport verify_algcfree(std::size_t trials, std::uint64_t seed,
                                    std::size_t max_len)
{
    VerifyReport report{"algcfree"};
    Rng rng(seed);
    const std::size_t probe_lh = 12;
    const std::size_t probe_lk = 12;

    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::size_t length = 1 + rng.below(max_len);
        int tag = rng.below(2) == 0 ? 1 : 2;
        std::vector<EOpPtr> word;
        Scalar phi_product(1);
        for (std::size_t j = 0; j < length; ++j, tag = 3 - tag) {
            const unsigned letter = tag == 1 ? 0u : 1u;
            const EOpPtr raw = detail::random_algebra_element(rng, letter, letter, 2, 3);
            const Scalar center = psi_state(raw, probe_lh, probe_lk);
            const EOpPtr centered =
                raw + EOp::scale(-center, EOp::identity());
            phi_product *= phi_state(centered, probe_lh, probe_lk);
            word.push_back(centered);
        }
        const EOpPtr product = EOp::product(word);
        const std::size_t lh = h_rank_increase(product) + 1;
        const std::size_t lk = k_rank_increase(product) + 1;

        ++report.checks;
        const Scalar psi_word = psi_state(product, lh, lk);
        if (psi_word != 0) {
            report.fail("psi(word) = " + to_string(psi_word) + " != 0; word = "
                        + e_op_to_json(product).dump());
        }
        ++report.checks;
        const Scalar phi_word = phi_state(product, lh, lk);
        if (phi_word != phi_product) {
            report.fail("phi(word) = " + to_string(phi_word) + " != product of letters "
                        + to_string(phi_product) + "; word = "
                        + e_op_to_json(product).dump());
        }
    }
    return report;
}

// cR-additivity over the two-letter model operators.
inline VerifyReport verify_mainthm_add(std::size_t trials, std::uint64_t seed,
                                       std::size_t order)
{
    VerifyReport report{"mainthm-add"};
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<EOpPtr> alphas;
        Poly f_sum;
        for (unsigned i = 0; i < 2; ++i) {
            const FockOpPtr b_raw = detail::random_fock_expr(rng, {i}, 2, 2);
            const Poly f = rng.poly(3);
            f_sum = f_sum + f;
            alphas.push_back(construct_model(ModelKind::Additive, EOp::pi(b_raw), i, f));
        }
        const EOpPtr alpha = alphas[0] + alphas[1];
        const std::size_t lh = order * std::max<std::size_t>(1, h_rank_increase(alpha)) + 1;
        const std::size_t lk = order + 1;
        const TwoStateLaw law = state_pair_moments(alpha, order, lh, lk);

        ++report.checks;
        const TruncatedSeries cr = transform_from_moments(TransformKind::cR, law);
        if (cr != detail::z_times(f_sum, order)) {
            report.fail("cR of alpha_1 + alpha_2 differs from z (f_1 + f_2)");
        }
    }
    return report;
}

// cT-multiplicativity over the two-letter model operators, with the d_i taken
// as pi-images of multiplicative Haagerup operators on orthogonal H-letters.
inline VerifyReport verify_mainthm_mul(std::size_t trials, std::uint64_t seed,
                                       std::size_t order)
{
    VerifyReport report{"mainthm-mul"};
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        std::vector<EOpPtr> betas;
        Poly f_prod = Poly::constant(1);
        for (unsigned i = 0; i < 2; ++i) {
            const Poly h = rng.poly(2, /*nonzero_constant=*/true);
            const EOpPtr d =
                EOp::pi(haagerup_operator(HaagerupKind::Multiplicative, h, i));
            const Poly f = rng.poly(3, /*nonzero_constant=*/true);
            f_prod = f_prod * f;
            betas.push_back(construct_model(ModelKind::Multiplicative, d, i, f));
        }
        const EOpPtr beta = betas[0] * betas[1];
        const std::size_t lh = order * std::max<std::size_t>(1, h_rank_increase(beta)) + 1;
        const std::size_t lk = order * 2 + 1;
        const TwoStateLaw law = state_pair_moments(beta, order, lh, lk);

        ++report.checks;
        const TruncatedSeries ct = transform_from_moments(TransformKind::cT, law);
        if (ct != TruncatedSeries::from_poly(f_prod, order - 1)) {
            report.fail("cT of beta_1 beta_2 differs from f_1 f_2");
        }
        for (std::size_t n = 1; n <= order; ++n) {
            ++report.checks;
            const Scalar rhs = detail::multiplicative_recurrence_rhs(
                n, law.phi_moments(), law.psi_moments(), f_prod);
            if (law.phi_moment(n) != rhs) {
                report.fail("product recurrence fails at n=" + std::to_string(n));
            }
        }
    }
    return report;
}

// Triple agreement of the transform, axiomatic and operator convolution paths.
inline VerifyReport verify_crosscheck(std::size_t trials, std::uint64_t seed,
                                      std::size_t order)
{
    VerifyReport report{"crosscheck"};
    Rng rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        {
            ++report.checks;
            const auto rep = cross_check(ConvolutionKind::Add, rng.law(order),
                                         rng.law(order), order);
            if (!rep.agree) {
                report.fail("additive cross-check disagrees: "
                            + cross_check_report_to_json(rep).dump());
            }
        }
        {
            ++report.checks;
            const auto rep =
                cross_check(ConvolutionKind::Mul, rng.law(order, true, true),
                            rng.law(order, true, true), order);
            if (!rep.agree) {
                report.fail("multiplicative cross-check disagrees: "
                            + cross_check_report_to_json(rep).dump());
            }
        }
    }
    return report;
}

// With phi = psi the c-free transforms collapse onto the free ones and the
// c-free convolutions onto the free convolutions.
inline VerifyReport verify_collapse(std::size_t trials, std::uint64_t seed,
                                    std::size_t order)
{
    VerifyReport report{"collapse"};
    Rng rng(seed);
    auto collapsed = [&](bool nonzero_first) {
        auto psi = rng.law(order, nonzero_first).psi_moments();
        return TwoStateLaw(psi, psi);
    };
    for (std::size_t trial = 0; trial < trials; ++trial) {
        {
            const TwoStateLaw law = collapsed(false);
            ++report.checks;
            if (transform_from_moments(TransformKind::cR, law)
                != transform_from_moments(TransformKind::R, law)) {
                report.fail("cR != R for phi = psi");
            }
        }
        {
            const TwoStateLaw law = collapsed(true);
            ++report.checks;
            if (transform_from_moments(TransformKind::cT, law)
                != transform_from_moments(TransformKind::T, law)) {
                report.fail("cT != T for phi = psi");
            }
        }
        {
            const TwoStateLaw x = collapsed(false);
            const TwoStateLaw y = collapsed(false);
            const TwoStateLaw out = cfree_convolve(ConvolutionKind::Add, x, y, order);
            ++report.checks;
            if (out.phi_moments() != out.psi_moments()) {
                report.fail("additive c-free convolution of collapsed laws "
                            "is not collapsed");
            }
        }
        {
            const TwoStateLaw x = collapsed(true);
            const TwoStateLaw y = collapsed(true);
            const TwoStateLaw out = cfree_convolve(ConvolutionKind::Mul, x, y, order);
            ++report.checks;
            if (out.phi_moments() != out.psi_moments()) {
                report.fail("multiplicative c-free convolution of collapsed laws "
                            "is not collapsed");
            }
        }
    }
    return report;
}

inline VerifyReport run_verify_suite(const std::string& suite, std::size_t trials,
                                     std::uint64_t seed, std::size_t order)
{
    if (suite == "remark1") return verify_remark1(trials, seed);
    if (suite == "lemma1") return verify_lemma1(trials, seed);
    if (suite == "eqiii") return verify_eqiii(trials, seed);
    if (suite == "crthm") return verify_crthm(trials, seed, order);
    if (suite == "ct") return verify_ct(trials, seed, order);
    if (suite == "algcfree") return verify_algcfree(trials, seed, /*max_len=*/5);
    if (suite == "mainthm-add") return verify_mainthm_add(trials, seed, order);
    if (suite == "mainthm-mul") return verify_mainthm_mul(trials, seed, order);
    if (suite == "crosscheck") return verify_crosscheck(trials, seed, order);
    if (suite == "collapse") return verify_collapse(trials, seed, order);
    throw domain_error("unknown verification suite '" + suite + "'");
}

} // namespace cfree
