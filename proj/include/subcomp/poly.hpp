#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "subcomp/errors.hpp"

namespace subcomp {

// Sparse bivariate polynomial over arbitrary-precision integers. Terms are
// kept in lexicographic (x-degree, y-degree) order with no zero coefficients,
// which makes iteration, equality and serialization canonical.
struct bipoly {
    std::map<std::pair<int, int>, mpz_class> terms;

    static bipoly zero() { return {}; }
    static bipoly one() { return monomial(0, 0, 1); }
    static bipoly monomial(int i, int j, mpz_class c);

    bool is_zero() const { return terms.empty(); }
    mpz_class coeff(int i, int j) const;

    int deg_x() const; // throws on the zero polynomial
    int deg_y() const;
    // max x-degree over monomials with y-degree >= j_min; nullopt if none.
    std::optional<int> max_deg_x_with_y_at_least(int j_min) const;
    // max y-degree over monomials with x-degree == i; nullopt if none.
    std::optional<int> deg_y_of_x_slice(int i) const;

    mpz_class eval(const mpz_class& x, const mpz_class& y) const;

    std::string to_text() const;
    nlohmann::json to_json() const; // [[i, j, "coeff"], ...] in term order
    static bipoly from_text(const std::string& s);
    static bipoly from_json(const nlohmann::json& j);

    bool operator==(const bipoly&) const = default;
};

bipoly operator+(const bipoly& a, const bipoly& b);
bipoly operator-(const bipoly& a, const bipoly& b);
bipoly operator*(const bipoly& a, const bipoly& b);

// Dense univariate polynomial with signed arbitrary-precision coefficients.
// coeffs[k] multiplies x^k; the zero polynomial is the empty vector and the
// highest coefficient is nonzero otherwise.
struct unipoly {
    std::vector<mpz_class> coeffs;

    static unipoly zero() { return {}; }
    static unipoly from_coeffs(std::vector<mpz_class> ascending); // trims zeros
    static unipoly monomial(int k, mpz_class c);

    bool is_zero() const { return coeffs.empty(); }
    mpz_class coeff(int k) const;
    int degree() const; // throws on the zero polynomial
    mpz_class eval(const mpz_class& x) const;

    std::string to_text() const; // descending powers, e.g. "x^3 - 2*x"
    nlohmann::json to_json() const; // [[k, "coeff"], ...] ascending, zeros skipped
    static unipoly from_text(const std::string& s);
    static unipoly from_json(const nlohmann::json& j);

    bool operator==(const unipoly&) const = default;
};

unipoly operator+(const unipoly& a, const unipoly& b);
unipoly operator-(const unipoly& a, const unipoly& b);
unipoly operator*(const unipoly& a, const unipoly& b);

} // namespace subcomp
