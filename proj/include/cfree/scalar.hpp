#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfree {

// Exact rational scalar. Always kept in canonical form (positive
// denominator, gcd(|num|, den) = 1) by boost::multiprecision.
using Scalar = boost::multiprecision::cpp_rational;

// Violated mathematical precondition (zero moment, non-invertible series, ...).
class domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A tensor word would exceed the configured truncation rank. This is a hard
// error: dropping the word silently would corrupt later low-rank components.
class truncation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string to_string(const Scalar& s)
{
    return s.str();
}

// Accepts "p", "-p" and "p/q" forms.
inline Scalar scalar_from_string(std::string_view text)
{
    try {
        Scalar s{std::string(text)};
        return s;
    } catch (const std::exception&) {
        throw domain_error("cannot parse rational from '" + std::string(text) + "'");
    }
}

} // namespace cfree
