#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "cfree/poly.hpp"
#include "cfree/scalar.hpp"

namespace cfree {

// Basis word of the full Fock space T(H) over orthonormal letters e_i:
// the sequence of letter indices, leftmost = outermost tensor factor.
// The empty word is the vacuum.
using HWord = std::vector<unsigned>;

// Sparse vector of T(H); no explicit zeros are stored.
class FockVector {
public:
    FockVector() = default;

    static FockVector vacuum()
    {
        FockVector v;
        v.entries_[HWord{}] = 1;
        return v;
    }

    static FockVector basis(HWord w)
    {
        FockVector v;
        v.entries_[std::move(w)] = 1;
        return v;
    }

    void add(const HWord& w, const Scalar& c)
    {
        if (c == 0) {
            return;
        }
        auto it = entries_.find(w);
        if (it == entries_.end()) {
            entries_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second == 0) {
                entries_.erase(it);
            }
        }
    }

    void add(const FockVector& other, const Scalar& scale = Scalar(1))
    {
        for (const auto& [w, c] : other.entries_) {
            add(w, c * scale);
        }
    }

    Scalar coefficient(const HWord& w) const
    {
        auto it = entries_.find(w);
        return it == entries_.end() ? Scalar(0) : it->second;
    }

    bool is_zero() const { return entries_.empty(); }

    const std::map<HWord, Scalar>& entries() const { return entries_; }

    friend bool operator==(const FockVector& a, const FockVector& b) = default;

private:
    std::map<HWord, Scalar> entries_;
};

// Operator expression over the generators {create(i), annihilate(i), Id, 0},
// closed under sum, composition and scalar multiples. Expressions are
// immutable trees evaluated lazily on vectors; nothing is ever materialized
// as a matrix.
class FockOp;
using FockOpPtr = std::shared_ptr<const FockOp>;

class FockOp {
public:
    enum class Kind { Zero, Identity, Create, Annihilate, Sum, Product, Scale };

    static FockOpPtr zero() { return make(Kind::Zero); }
    static FockOpPtr identity() { return make(Kind::Identity); }

    static FockOpPtr create(unsigned letter)
    {
        auto n = make(Kind::Create);
        n->letter_ = letter;
        return n;
    }

    static FockOpPtr annihilate(unsigned letter)
    {
        auto n = make(Kind::Annihilate);
        n->letter_ = letter;
        return n;
    }

    static FockOpPtr sum(std::vector<FockOpPtr> terms)
    {
        auto n = make(Kind::Sum);
        n->children_ = std::move(terms);
        return n;
    }

    // Composition; children.front() is applied last.
    static FockOpPtr product(std::vector<FockOpPtr> factors)
    {
        auto n = make(Kind::Product);
        n->children_ = std::move(factors);
        return n;
    }

    static FockOpPtr scale(Scalar factor, FockOpPtr child)
    {
        auto n = make(Kind::Scale);
        n->factor_ = std::move(factor);
        n->children_ = {std::move(child)};
        return n;
    }

    Kind kind() const { return kind_; }
    unsigned letter() const { return letter_; }
    const Scalar& factor() const { return factor_; }
    const std::vector<FockOpPtr>& children() const { return children_; }

private:
    static std::shared_ptr<FockOp> make(Kind k)
    {
        auto n = std::make_shared<FockOp>();
        n->kind_ = k;
        return n;
    }

    Kind kind_ = Kind::Zero;
    unsigned letter_ = 0;
    Scalar factor_ = 0;
    std::vector<FockOpPtr> children_;
};

inline FockOpPtr operator+(const FockOpPtr& a, const FockOpPtr& b)
{
    return FockOp::sum({a, b});
}

inline FockOpPtr operator*(const FockOpPtr& a, const FockOpPtr& b)
{
    return FockOp::product({a, b});
}

inline FockOpPtr operator*(const Scalar& s, const FockOpPtr& a)
{
    return FockOp::scale(s, a);
}

// f(x) = sum_k f_k x^k with x^0 = Id.
inline FockOpPtr apply_poly(const Poly& f, const FockOpPtr& x)
{
    std::vector<FockOpPtr> terms;
    FockOpPtr power = FockOp::identity();
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        if (f.coeff(k) != 0) {
            terms.push_back(FockOp::scale(f.coeff(k), power));
        }
        power = (k == 0) ? x : FockOpPtr(FockOp::product({x, power}));
    }
    if (terms.empty()) {
        return FockOp::zero();
    }
    return FockOp::sum(std::move(terms));
}

// Upper bound on how much one application of op can raise the tensor rank.
// Annihilation is counted as no increase; used to size truncation ranks.
inline std::size_t rank_increase(const FockOpPtr& op)
{
    switch (op->kind()) {
    case FockOp::Kind::Zero:
    case FockOp::Kind::Identity:
    case FockOp::Kind::Annihilate:
        return 0;
    case FockOp::Kind::Create:
        return 1;
    case FockOp::Kind::Scale:
        return rank_increase(op->children()[0]);
    case FockOp::Kind::Sum: {
        std::size_t best = 0;
        for (const auto& c : op->children()) {
            best = std::max(best, rank_increase(c));
        }
        return best;
    }
    case FockOp::Kind::Product: {
        std::size_t total = 0;
        for (const auto& c : op->children()) {
            total += rank_increase(c);
        }
        return total;
    }
    }
    return 0;
}

// Applies op to v within truncation rank max_rank. A creation that would
// exceed max_rank throws; it is never dropped.
inline FockVector apply_fock(const FockOpPtr& op, const FockVector& v, std::size_t max_rank)
{
    FockVector out;
    switch (op->kind()) {
    case FockOp::Kind::Zero:
        break;
    case FockOp::Kind::Identity:
        out = v;
        break;
    case FockOp::Kind::Create:
        for (const auto& [w, c] : v.entries()) {
            if (w.size() + 1 > max_rank) {
                throw truncation_error("fock truncation overflow: creation past rank "
                                       + std::to_string(max_rank));
            }
            HWord longer;
            longer.reserve(w.size() + 1);
            longer.push_back(op->letter());
            longer.insert(longer.end(), w.begin(), w.end());
            out.add(longer, c);
        }
        break;
    case FockOp::Kind::Annihilate:
        for (const auto& [w, c] : v.entries()) {
            // <v_1, e> strips a matching leading letter; the vacuum and
            // mismatched letters go to zero.
            if (!w.empty() && w.front() == op->letter()) {
                out.add(HWord(w.begin() + 1, w.end()), c);
            }
        }
        break;
    case FockOp::Kind::Sum:
        for (const auto& child : op->children()) {
            out.add(apply_fock(child, v, max_rank));
        }
        break;
    case FockOp::Kind::Product: {
        FockVector cur = v;
        for (auto it = op->children().rbegin(); it != op->children().rend(); ++it) {
            cur = apply_fock(*it, cur, max_rank);
        }
        out = std::move(cur);
        break;
    }
    case FockOp::Kind::Scale:
        out.add(apply_fock(op->children()[0], v, max_rank), op->factor());
        break;
    }
    return out;
}

// <op^n omega, omega> for n = 1..n_max.
inline std::vector<Scalar> vacuum_moments(const FockOpPtr& op, std::size_t n_max,
                                          std::size_t max_rank)
{
    if (max_rank < n_max) {
        throw truncation_error("vacuum_moments: truncation rank below requested order");
    }
    std::vector<Scalar> moments;
    moments.reserve(n_max);
    FockVector v = FockVector::vacuum();
    for (std::size_t n = 1; n <= n_max; ++n) {
        v = apply_fock(op, v, max_rank);
        moments.push_back(v.coefficient(HWord{}));
    }
    return moments;
}

enum class HaagerupKind { Additive, Multiplicative };

// The model operators of the free layer: a*_e + f(a_e), with R = z f(z),
// and (Id + a*_e) f(a_e), with T = f(z) when f(0) != 0.
inline FockOpPtr haagerup_operator(HaagerupKind kind, const Poly& f, unsigned letter)
{
    const FockOpPtr fa = apply_poly(f, FockOp::annihilate(letter));
    switch (kind) {
    case HaagerupKind::Additive:
        return FockOp::create(letter) + fa;
    case HaagerupKind::Multiplicative:
        if (f.coeff(0) == 0) {
            throw domain_error("multiplicative haagerup operator requires f(0) != 0");
        }
        return (FockOp::identity() + FockOp::create(letter)) * fa;
    }
    throw domain_error("unknown haagerup kind");
}

} // namespace cfree
