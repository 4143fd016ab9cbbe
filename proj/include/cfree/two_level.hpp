#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "cfree/fock.hpp"
#include "cfree/law.hpp"
#include "cfree/poly.hpp"
#include "cfree/scalar.hpp"

namespace cfree {

using KWord = std::vector<unsigned>;

// Basis word of E = T(H) + T(H) (x) T(K): either a word of the first summand
// (Left) or a pair of words for the tensor summand (Right). Left(empty) is
// the psi-vacuum; Right(empty, empty) is Omega, the phi-vacuum.
struct EBasis {
    bool left = true;
    HWord h;
    KWord k; // empty for Left

    static EBasis psi_vacuum() { return EBasis{true, {}, {}}; }
    static EBasis omega() { return EBasis{false, {}, {}}; }

    bool is_omega() const { return !left && h.empty() && k.empty(); }

    friend auto operator<=>(const EBasis&, const EBasis&) = default;
};

class EVector {
public:
    EVector() = default;

    static EVector basis(EBasis b)
    {
        EVector v;
        v.entries_[std::move(b)] = 1;
        return v;
    }

    void add(const EBasis& b, const Scalar& c)
    {
        if (c == 0) {
            return;
        }
        auto it = entries_.find(b);
        if (it == entries_.end()) {
            entries_.emplace(b, c);
        } else {
            it->second += c;
            if (it->second == 0) {
                entries_.erase(it);
            }
        }
    }

    void add(const EVector& other, const Scalar& scale = Scalar(1))
    {
        for (const auto& [b, c] : other.entries_) {
            add(b, c * scale);
        }
    }

    Scalar coefficient(const EBasis& b) const
    {
        auto it = entries_.find(b);
        return it == entries_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return entries_.empty(); }

    const std::map<EBasis, Scalar>& entries() const { return entries_; }

    friend bool operator==(const EVector& a, const EVector& b) = default;

private:
    std::map<EBasis, Scalar> entries_;
};

// Operator expression over the generators pi(.), A*_eta, A_{eta,n} and
// A_{eta,f(x)}, closed under sum, composition and scalar multiples.
class EOp;
using EOpPtr = std::shared_ptr<const EOp>;

class EOp {
public:
    enum class Kind { Zero, Identity, Pi, AStar, AN, AF, Sum, Product, Scale };

    static EOpPtr zero() { return make(Kind::Zero); }

    // The global identity of L(E); note pi(Id) is Id_{E_0}, not this.
    static EOpPtr identity() { return make(Kind::Identity); }

    static EOpPtr pi(FockOpPtr a)
    {
        auto n = make(Kind::Pi);
        n->fock_ = std::move(a);
        return n;
    }

    static EOpPtr a_star(unsigned letter)
    {
        auto n = make(Kind::AStar);
        n->letter_ = letter;
        return n;
    }

    static EOpPtr a_n(unsigned letter, std::size_t power)
    {
        auto n = make(Kind::AN);
        n->letter_ = letter;
        n->power_ = power;
        return n;
    }

    static EOpPtr a_f(unsigned letter, Poly f)
    {
        auto n = make(Kind::AF);
        n->letter_ = letter;
        n->poly_ = std::move(f);
        return n;
    }

    static EOpPtr sum(std::vector<EOpPtr> terms)
    {
        auto n = make(Kind::Sum);
        n->children_ = std::move(terms);
        return n;
    }

    // Composition; children.front() is applied last.
    static EOpPtr product(std::vector<EOpPtr> factors)
    {
        auto n = make(Kind::Product);
        n->children_ = std::move(factors);
        return n;
    }

    static EOpPtr scale(Scalar factor, EOpPtr child)
    {
        auto n = make(Kind::Scale);
        n->factor_ = std::move(factor);
        n->children_ = {std::move(child)};
        return n;
    }

    Kind kind() const { return kind_; }
    unsigned letter() const { return letter_; }
    std::size_t power() const { return power_; }
    const Poly& poly() const { return poly_; }
    const FockOpPtr& fock() const { return fock_; }
    const Scalar& factor() const { return factor_; }
    const std::vector<EOpPtr>& children() const { return children_; }

private:
    static std::shared_ptr<EOp> make(Kind k)
    {
        auto n = std::make_shared<EOp>();
        n->kind_ = k;
        return n;
    }

    Kind kind_ = Kind::Zero;
    unsigned letter_ = 0;
    std::size_t power_ = 0;
    Poly poly_;
    FockOpPtr fock_;
    Scalar factor_ = 0;
    std::vector<EOpPtr> children_;
};

inline EOpPtr operator+(const EOpPtr& a, const EOpPtr& b)
{
    return EOp::sum({a, b});
}

inline EOpPtr operator*(const EOpPtr& a, const EOpPtr& b)
{
    return EOp::product({a, b});
}

inline EOpPtr operator*(const Scalar& s, const EOpPtr& a)
{
    return EOp::scale(s, a);
}

// Rank-increase bounds per application, used to size truncation ranks.
inline std::size_t h_rank_increase(const EOpPtr& op)
{
    switch (op->kind()) {
    case EOp::Kind::Pi:
        return rank_increase(op->fock());
    case EOp::Kind::Scale:
        return h_rank_increase(op->children()[0]);
    case EOp::Kind::Sum: {
        std::size_t best = 0;
        for (const auto& c : op->children()) {
            best = std::max(best, h_rank_increase(c));
        }
        return best;
    }
    case EOp::Kind::Product: {
        std::size_t total = 0;
        for (const auto& c : op->children()) {
            total += h_rank_increase(c);
        }
        return total;
    }
    default:
        return 0;
    }
}

inline std::size_t k_rank_increase(const EOpPtr& op)
{
    switch (op->kind()) {
    case EOp::Kind::AStar:
        return 1;
    case EOp::Kind::Scale:
        return k_rank_increase(op->children()[0]);
    case EOp::Kind::Sum: {
        std::size_t best = 0;
        for (const auto& c : op->children()) {
            best = std::max(best, k_rank_increase(c));
        }
        return best;
    }
    case EOp::Kind::Product: {
        std::size_t total = 0;
        for (const auto& c : op->children()) {
            total += k_rank_increase(c);
        }
        return total;
    }
    default:
        return 0;
    }
}

// Generator semantics:
//   pi(a)     = (a (x) Id) o (Id - P_Omega) on the tensor summand, a itself
//               on the Left summand; in particular pi(a) Omega = 0 and
//               pi(Id) = Id_{E_0}.
//   a_star(k) : Right(empty, u) -> Right(empty, k.u), zero elsewhere.
//   a_n(k, n) : Right(empty, k^n) -> Omega (n >= 1), zero elsewhere;
//               a_n(k, 0) = Id_{C Omega}.
//   a_f(k, F) = sum_p F_p a_n(k, p).
inline EVector apply_e(const EOpPtr& op, const EVector& v, std::size_t max_h_rank,
                       std::size_t max_k_rank)
{
    EVector out;
    switch (op->kind()) {
    case EOp::Kind::Zero:
        break;
    case EOp::Kind::Identity:
        out = v;
        break;
    case EOp::Kind::Pi:
        for (const auto& [b, c] : v.entries()) {
            if (b.is_omega()) {
                continue;
            }
            const FockVector image =
                apply_fock(op->fock(), FockVector::basis(b.h), max_h_rank);
            for (const auto& [hw, hc] : image.entries()) {
                out.add(EBasis{b.left, hw, b.k}, c * hc);
            }
        }
        break;
    case EOp::Kind::AStar:
        for (const auto& [b, c] : v.entries()) {
            if (b.left || !b.h.empty()) {
                continue;
            }
            if (b.k.size() + 1 > max_k_rank) {
                throw truncation_error("K truncation overflow: creation past rank "
                                       + std::to_string(max_k_rank));
            }
            KWord longer;
            longer.reserve(b.k.size() + 1);
            longer.push_back(op->letter());
            longer.insert(longer.end(), b.k.begin(), b.k.end());
            out.add(EBasis{false, {}, std::move(longer)}, c);
        }
        break;
    case EOp::Kind::AN:
        for (const auto& [b, c] : v.entries()) {
            if (b.left || !b.h.empty() || b.k.size() != op->power()) {
                continue;
            }
            if (std::all_of(b.k.begin(), b.k.end(),
                            [&](unsigned l) { return l == op->letter(); })) {
                out.add(EBasis::omega(), c);
            }
        }
        break;
    case EOp::Kind::AF:
        for (const auto& [b, c] : v.entries()) {
            if (b.left || !b.h.empty()) {
                continue;
            }
            if (std::all_of(b.k.begin(), b.k.end(),
                            [&](unsigned l) { return l == op->letter(); })) {
                out.add(EBasis::omega(), c * op->poly().coeff(b.k.size()));
            }
        }
        break;
    case EOp::Kind::Sum:
        for (const auto& child : op->children()) {
            out.add(apply_e(child, v, max_h_rank, max_k_rank));
        }
        break;
    case EOp::Kind::Product: {
        EVector cur = v;
        for (auto it = op->children().rbegin(); it != op->children().rend(); ++it) {
            cur = apply_e(*it, cur, max_h_rank, max_k_rank);
        }
        out = std::move(cur);
        break;
    }
    case EOp::Kind::Scale:
        out.add(apply_e(op->children()[0], v, max_h_rank, max_k_rank), op->factor());
        break;
    }
    return out;
}

// phi(x) = <x Omega, Omega>.
inline Scalar phi_state(const EOpPtr& op, std::size_t max_h_rank, std::size_t max_k_rank)
{
    return apply_e(op, EVector::basis(EBasis::omega()), max_h_rank, max_k_rank)
        .coefficient(EBasis::omega());
}

// psi(x) = <x omega, omega> at the T(H)-vacuum Left(empty).
inline Scalar psi_state(const EOpPtr& op, std::size_t max_h_rank, std::size_t max_k_rank)
{
    return apply_e(op, EVector::basis(EBasis::psi_vacuum()), max_h_rank, max_k_rank)
        .coefficient(EBasis::psi_vacuum());
}

// The pair (psi(op^n), phi(op^n)) for n = 1..n_max.
inline TwoStateLaw state_pair_moments(const EOpPtr& op, std::size_t n_max,
                                      std::size_t max_h_rank, std::size_t max_k_rank)
{
    std::vector<Scalar> psi;
    std::vector<Scalar> phi;
    psi.reserve(n_max);
    phi.reserve(n_max);
    EVector left = EVector::basis(EBasis::psi_vacuum());
    EVector omega = EVector::basis(EBasis::omega());
    for (std::size_t n = 1; n <= n_max; ++n) {
        left = apply_e(op, left, max_h_rank, max_k_rank);
        omega = apply_e(op, omega, max_h_rank, max_k_rank);
        psi.push_back(left.coefficient(EBasis::psi_vacuum()));
        phi.push_back(omega.coefficient(EBasis::omega()));
    }
    return TwoStateLaw(std::move(psi), std::move(phi));
}

enum class ModelKind { Additive, Multiplicative };

// The model operators with prescribed c-free transforms:
//   additive       b + A*_eta + A_{eta,F(x)}        with cR = z F(z),
//   multiplicative d + d A*_eta + A_{eta,F(x)}      with cT = F(z),
// the latter requiring psi(d) != 0 and F(0) != 0.
inline EOpPtr construct_model(ModelKind kind, const EOpPtr& base, unsigned k_letter,
                              const Poly& f)
{
    switch (kind) {
    case ModelKind::Additive:
        return base + EOp::a_star(k_letter) + EOp::a_f(k_letter, f);
    case ModelKind::Multiplicative: {
        if (f.coeff(0) == 0) {
            throw domain_error("multiplicative model requires F(0) != 0");
        }
        const std::size_t hr = h_rank_increase(base) + 1;
        if (psi_state(base, hr, 1) == 0) {
            throw domain_error("multiplicative model requires psi(d) != 0");
        }
        return base + base * EOp::a_star(k_letter) + EOp::a_f(k_letter, f);
    }
    }
    throw domain_error("unknown model kind");
}

} // namespace cfree
