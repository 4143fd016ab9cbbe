#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cfree/law.hpp"
#include "cfree/poly.hpp"
#include "cfree/scalar.hpp"

namespace cfree {

enum class StateKind { Phi, Psi };

// One letter of an alternating word: a polynomial evaluated at the generator
// of algebra 1 or algebra 2.
struct WordLetter {
    int tag = 1; // 1 or 2
    Poly p;
};

using AlternatingWord = std::vector<WordLetter>;

// Computes mixed phi/psi-moments of a c-free pair directly from the defining
// axioms, by centering recursion: every letter is split into its
// psi-centered part plus a scalar, scalars are expanded out (merging the
// neighbours they expose), and on a fully centered alternating word psi
// vanishes while phi factorizes. No Fock space, no transforms: this is the
// independent oracle the operator and transform paths are checked against.
class AxiomaticOracle {
public:
    AxiomaticOracle(TwoStateLaw law1, TwoStateLaw law2)
        : laws_{std::move(law1), std::move(law2)}
    {
    }

    Scalar expectation(StateKind state, const AlternatingWord& word)
    {
        auto [scale, normalized] = normalize(word);
        if (scale == 0) {
            return Scalar(0);
        }
        return scale * eval(state, normalized);
    }

    // The law of X + Y or X Y under both states, from the axioms alone.
    TwoStateLaw convolve(bool multiplicative, std::size_t n_max)
    {
        std::vector<Scalar> psi;
        std::vector<Scalar> phi;
        for (std::size_t n = 1; n <= n_max; ++n) {
            Scalar psi_n(0);
            Scalar phi_n(0);
            if (multiplicative) {
                AlternatingWord word;
                for (std::size_t j = 0; j < n; ++j) {
                    word.push_back({1, Poly::monomial(1, 1)});
                    word.push_back({2, Poly::monomial(1, 1)});
                }
                psi_n = expectation(StateKind::Psi, word);
                phi_n = expectation(StateKind::Phi, word);
            } else {
                // (X + Y)^n expanded into 2^n tag sequences.
                for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
                    AlternatingWord word;
                    for (std::size_t j = 0; j < n; ++j) {
                        word.push_back({(mask >> j) & 1 ? 2 : 1, Poly::monomial(1, 1)});
                    }
                    psi_n += expectation(StateKind::Psi, word);
                    phi_n += expectation(StateKind::Phi, word);
                }
            }
            psi.push_back(std::move(psi_n));
            phi.push_back(std::move(phi_n));
        }
        return TwoStateLaw(std::move(psi), std::move(phi));
    }

private:
    // phi or psi of p(X_tag) via the marginal law.
    Scalar moment(StateKind state, int tag, const Poly& p) const
    {
        const TwoStateLaw& law = laws_[static_cast<std::size_t>(tag - 1)];
        if (!p.is_zero() && p.degree() > law.order()) {
            throw domain_error("insufficient moment data: word degree "
                               + std::to_string(p.degree()) + " exceeds law order "
                               + std::to_string(law.order()));
        }
        Scalar acc = p.coeff(0);
        for (std::size_t k = 1; k <= p.degree(); ++k) {
            if (p.coeff(k) != 0) {
                acc += p.coeff(k)
                       * (state == StateKind::Phi ? law.phi_moment(k) : law.psi_moment(k));
            }
        }
        return acc;
    }

    // Merges adjacent same-tag letters and pulls constant letters out as a
    // scalar prefactor; the returned word strictly alternates.
    static std::pair<Scalar, AlternatingWord> normalize(const AlternatingWord& word)
    {
        Scalar scale(1);
        AlternatingWord out;
        for (const auto& letter : word) {
            if (letter.p.is_zero()) {
                return {Scalar(0), {}};
            }
            if (letter.p.degree() == 0) {
                scale *= letter.p.coeff(0);
                continue;
            }
            if (!out.empty() && out.back().tag == letter.tag) {
                out.back().p = out.back().p * letter.p;
            } else {
                out.push_back(letter);
            }
        }
        return {std::move(scale), std::move(out)};
    }

    static std::string memo_key(StateKind state, const AlternatingWord& word)
    {
        std::string key = state == StateKind::Phi ? "P" : "S";
        for (const auto& letter : word) {
            key += '|';
            key += static_cast<char>('0' + letter.tag);
            for (const auto& c : letter.p.coeffs()) {
                key += ':';
                key += to_string(c);
            }
        }
        return key;
    }

    Scalar eval(StateKind state, const AlternatingWord& word)
    {
        if (word.empty()) {
            return Scalar(1);
        }
        if (word.size() == 1) {
            return moment(state, word[0].tag, word[0].p);
        }
        const std::string key = memo_key(state, word);
        if (auto it = memo_.find(key); it != memo_.end()) {
            return it->second;
        }

        const std::size_t m = word.size();
        std::vector<Scalar> centers(m);
        for (std::size_t j = 0; j < m; ++j) {
            centers[j] = moment(StateKind::Psi, word[j].tag, word[j].p);
        }

        Scalar total(0);
        // Fully centered alternating word: psi vanishes, phi factorizes over
        // the letters (each contributing phi - psi of its polynomial).
        if (state == StateKind::Phi) {
            Scalar prod(1);
            for (std::size_t j = 0; j < m && prod != 0; ++j) {
                prod *= moment(StateKind::Phi, word[j].tag, word[j].p) - centers[j];
            }
            total += prod;
        }

        // Remaining terms of the centering expansion: pick a nonempty set of
        // positions replaced by their psi-scalar, center the rest, recurse.
        for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
            Scalar coeff(1);
            for (std::size_t j = 0; j < m && coeff != 0; ++j) {
                if ((mask >> j) & 1) {
                    coeff *= centers[j];
                }
            }
            if (coeff == 0) {
                continue;
            }
            AlternatingWord rest;
            for (std::size_t j = 0; j < m; ++j) {
                if (!((mask >> j) & 1)) {
                    rest.push_back({word[j].tag,
                                    word[j].p - Poly::constant(centers[j])});
                }
            }
            total += coeff * expectation(state, rest);
        }

        memo_.emplace(key, total);
        return total;
    }

    std::vector<TwoStateLaw> laws_;
    std::unordered_map<std::string, Scalar> memo_;
};

inline Scalar expectation_of_word(StateKind state, const AlternatingWord& word,
                                  const TwoStateLaw& law1, const TwoStateLaw& law2)
{
    AxiomaticOracle oracle(law1, law2);
    return oracle.expectation(state, word);
}

enum class ConvolutionKind { Add, Mul };

inline TwoStateLaw convolve_axiomatic(ConvolutionKind kind, const TwoStateLaw& law1,
                                      const TwoStateLaw& law2, std::size_t n_max)
{
    if (n_max > law1.order() || n_max > law2.order()) {
        throw domain_error("insufficient moment data for axiomatic convolution");
    }
    AxiomaticOracle oracle(law1, law2);
    return oracle.convolve(kind == ConvolutionKind::Mul, n_max);
}

} // namespace cfree
