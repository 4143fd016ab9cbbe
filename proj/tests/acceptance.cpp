// Acceptance gate: one line per criterion, exact equality throughout.
// Exits 0 iff every criterion passes.

#include <chrono>
#include <cstdio>
#include <string>

#include "cfree/convolution.hpp"
#include "cfree/rng.hpp"
#include "cfree/verify.hpp"

using namespace cfree;

namespace {

bool all_pass = true;

void report(int number, const std::string& name, bool pass, double seconds,
            const std::string& detail)
{
    std::printf("%s: %d. %s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
                name.c_str(), seconds, detail.empty() ? "" : " - ", detail.c_str());
    all_pass = all_pass && pass;
}

template <typename F>
void criterion(int number, const std::string& name, F&& body)
{
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    std::string detail;
    try {
        detail = body();
        pass = detail.empty();
    } catch (const std::exception& e) {
        detail = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report(number, name, pass, seconds, detail);
}

std::string merge(std::initializer_list<VerifyReport> reports)
{
    for (const auto& r : reports) {
        if (!r.pass) {
            return r.suite + ": " + r.detail;
        }
    }
    return {};
}

TruncatedSeries z_times(const Poly& f, std::size_t order)
{
    return TruncatedSeries::from_poly(f, order).shifted_up();
}

std::string check_round_trips()
{
    Rng rng(1001);
    for (int trial = 0; trial < 100; ++trial) {
        // psi(X) pinned to 1 so every kind is defined; phi(X) nonzero for cS
        TwoStateLaw law = rng.law(12, true, true);
        std::vector<Scalar> psi = law.psi_moments();
        psi[0] = 1;
        law = TwoStateLaw(psi, law.phi_moments());

        const auto r = transform_from_moments(TransformKind::R, law);
        if (moments_from_transform(TransformKind::R, r) != law.psi_moments()) {
            return "R round trip failed at trial " + std::to_string(trial);
        }
        const auto t = transform_from_moments(TransformKind::T, law);
        if (moments_from_transform(TransformKind::T, t) != law.psi_moments()) {
            return "T round trip failed at trial " + std::to_string(trial);
        }
        const auto s = transform_from_moments(TransformKind::S, law);
        if (moments_from_transform(TransformKind::T, series_reciprocal(s))
            != law.psi_moments()) {
            return "S round trip failed at trial " + std::to_string(trial);
        }
        const auto cr = transform_from_moments(TransformKind::cR, law);
        if (moments_from_transform(TransformKind::cR, cr, law.psi_moments())
            != law.phi_moments()) {
            return "cR round trip failed at trial " + std::to_string(trial);
        }
        const auto ct = transform_from_moments(TransformKind::cT, law);
        if (moments_from_transform(TransformKind::cT, ct, law.psi_moments())
            != law.phi_moments()) {
            return "cT round trip failed at trial " + std::to_string(trial);
        }
        const auto cs = transform_from_moments(TransformKind::cS, law);
        if (moments_from_transform(TransformKind::cT, series_reciprocal(cs),
                                   law.psi_moments())
            != law.phi_moments()) {
            return "cS round trip failed at trial " + std::to_string(trial);
        }
    }
    return {};
}

std::string check_free_transforms()
{
    Rng rng(2002);
    for (int trial = 0; trial < 20; ++trial) {
        const Poly f1 = rng.poly(3);
        const Poly f2 = rng.poly(3);
        const auto a1 = haagerup_operator(HaagerupKind::Additive, f1, 0);
        const auto a2 = haagerup_operator(HaagerupKind::Additive, f2, 1);
        auto law_of = [](const FockOpPtr& op) {
            const auto m = vacuum_moments(op, 6, 25);
            return TwoStateLaw(m, m);
        };
        if (transform_from_moments(TransformKind::R, law_of(a1)) != z_times(f1, 6)
            || transform_from_moments(TransformKind::R, law_of(a2)) != z_times(f2, 6)) {
            return "R of a Haagerup additive operator mismatch";
        }
        if (transform_from_moments(TransformKind::R, law_of(a1 + a2))
            != z_times(f1 + f2, 6)) {
            return "R-additivity mismatch";
        }
        const Poly g1 = rng.poly(3, true);
        const Poly g2 = rng.poly(3, true);
        const auto b1 = haagerup_operator(HaagerupKind::Multiplicative, g1, 0);
        const auto b2 = haagerup_operator(HaagerupKind::Multiplicative, g2, 1);
        if (transform_from_moments(TransformKind::T, law_of(b1))
                != TruncatedSeries::from_poly(g1, 5)
            || transform_from_moments(TransformKind::T, law_of(b2))
                   != TruncatedSeries::from_poly(g2, 5)) {
            return "T of a Haagerup multiplicative operator mismatch";
        }
        if (transform_from_moments(TransformKind::T, law_of(b1 * b2))
            != TruncatedSeries::from_poly(g1 * g2, 5)) {
            return "T-multiplicativity mismatch";
        }
    }
    return {};
}

std::string check_truncation_stability()
{
    Rng rng(8008);
    for (int trial = 0; trial < 10; ++trial) {
        const Poly f = rng.poly(3);
        const auto fock = haagerup_operator(HaagerupKind::Additive, f, 0);
        const auto base = vacuum_moments(fock, 6, 6);
        for (std::size_t extra = 1; extra <= 3; ++extra) {
            if (vacuum_moments(fock, 6, 6 + extra) != base) {
                return "fock vacuum moments changed under a larger rank";
            }
        }

        const EOpPtr alpha =
            construct_model(ModelKind::Additive, EOp::pi(fock), 0, rng.poly(3));
        const std::size_t lh = 6 * std::max<std::size_t>(1, h_rank_increase(alpha)) + 1;
        const std::size_t lk = 7;
        const TwoStateLaw ref = state_pair_moments(alpha, 6, lh, lk);
        for (std::size_t extra = 1; extra <= 3; ++extra) {
            if (state_pair_moments(alpha, 6, lh + extra, lk + extra) != ref) {
                return "state pair moments changed under larger ranks";
            }
        }
    }
    return {};
}

} // namespace

int main()
{
    criterion(1, "transform round trips, 100 laws at N=12, all six kinds",
              check_round_trips);
    criterion(2, "free R/T transforms of Haagerup operators, 20 pairs",
              check_free_transforms);
    criterion(3, "operator identity suite", [] {
        return merge({verify_remark1(20, 3001), verify_lemma1(20, 3002),
                      verify_eqiii(20, 3003)});
    });
    criterion(4, "model transforms cR = zF and cT = F with moment recurrences", [] {
        return merge({verify_crthm(20, 4001, 6), verify_ct(20, 4002, 6)});
    });
    criterion(5, "c-freeness of the generated algebras, words up to length 5", [] {
        return merge({verify_algcfree(20, 5001, 5)});
    });
    criterion(6, "three-path convolution cross-check, 20 pairs each kind", [] {
        return merge({verify_crosscheck(20, 6001, 6)});
    });
    criterion(7, "two-state collapse at N=8, 20 laws", [] {
        return merge({verify_collapse(20, 7001, 8)});
    });
    criterion(8, "truncation stability under raised ranks", check_truncation_stability);
    return all_pass ? 0 : 1;
}
