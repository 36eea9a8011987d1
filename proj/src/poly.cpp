#include "subcomp/poly.hpp"

#include <algorithm>
#include <cctype>

namespace subcomp {

namespace {

mpz_class int_pow(const mpz_class& base, int e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

mpz_class parse_mpz(const std::string& s) {
    if (s.empty()) throw malformed_input_error("polynomial: empty coefficient");
    try {
        return mpz_class(s);
    } catch (const std::invalid_argument&) {
        throw malformed_input_error("polynomial: bad coefficient \"" + s + "\"");
    }
}

// Shared term grammar for both polynomial flavors:
//   poly := ['-'] term ((' + ' | ' - ') term)*
//   term := factor ('*' factor)*     factor := digits | 'x'['^'digits] | 'y'['^'digits]
struct parsed_term {
    int i = 0, j = 0;
    mpz_class c = 1;
};

std::vector<parsed_term> parse_terms(const std::string& s, bool allow_y) {
    std::vector<parsed_term> out;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    };
    skip_ws();
    if (pos == s.size()) throw malformed_input_error("polynomial: empty input");
    bool negative = false;
    if (s[pos] == '-' || s[pos] == '+') {
        negative = s[pos] == '-';
        ++pos;
    }
    while (true) {
        skip_ws();
        parsed_term term;
        bool saw_factor = false;
        bool explicit_coeff = false;
        while (pos < s.size()) {
            char c = s[pos];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::size_t start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (explicit_coeff)
                    throw malformed_input_error("polynomial: two numeric factors in one term");
                term.c = parse_mpz(s.substr(start, pos - start));
                explicit_coeff = true;
            } else if (c == 'x' || c == 'y') {
                if (c == 'y' && !allow_y)
                    throw malformed_input_error("polynomial: unexpected variable 'y'");
                ++pos;
                int e = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    std::size_t start = pos;
                    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                    if (start == pos) throw malformed_input_error("polynomial: missing exponent");
                    e = std::stoi(s.substr(start, pos - start));
                }
                (c == 'x' ? term.i : term.j) += e;
            } else {
                throw malformed_input_error(std::string("polynomial: unexpected character '") + c +
                                            "'");
            }
            saw_factor = true;
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                skip_ws();
                continue;
            }
            break;
        }
        if (!saw_factor) throw malformed_input_error("polynomial: missing term");
        if (negative) term.c = -term.c;
        out.push_back(std::move(term));
        skip_ws();
        if (pos == s.size()) break;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else {
            throw malformed_input_error(std::string("polynomial: unexpected character '") + s[pos] +
                                        "'");
        }
    }
    return out;
}

void append_term_text(std::string& out, const mpz_class& c, int i, int j) {
    mpz_class a = c;
    if (out.empty()) {
        if (a < 0) {
            out += "-";
            a = -a;
        }
    } else {
        out += a < 0 ? " - " : " + ";
        if (a < 0) a = -a;
    }
    std::string body;
    if (i > 0) body += i == 1 ? "x" : "x^" + std::to_string(i);
    if (j > 0) {
        if (!body.empty()) body += "*";
        body += j == 1 ? "y" : "y^" + std::to_string(j);
    }
    if (body.empty()) {
        out += a.get_str();
    } else {
        if (a != 1) out += a.get_str() + "*";
        out += body;
    }
}

} // namespace

bipoly bipoly::monomial(int i, int j, mpz_class c) {
    bipoly p;
    if (c != 0) p.terms.emplace(std::make_pair(i, j), std::move(c));
    return p;
}

mpz_class bipoly::coeff(int i, int j) const {
    auto it = terms.find({i, j});
    return it == terms.end() ? mpz_class(0) : it->second;
}

int bipoly::deg_x() const {
    if (terms.empty())
        throw invalid_argument_error("degree of the zero polynomial is undefined");
    int d = 0;
    for (const auto& [ij, c] : terms) d = std::max(d, ij.first);
    return d;
}

int bipoly::deg_y() const {
    if (terms.empty())
        throw invalid_argument_error("degree of the zero polynomial is undefined");
    int d = 0;
    for (const auto& [ij, c] : terms) d = std::max(d, ij.second);
    return d;
}

std::optional<int> bipoly::max_deg_x_with_y_at_least(int j_min) const {
    std::optional<int> d;
    for (const auto& [ij, c] : terms)
        if (ij.second >= j_min && (!d || ij.first > *d)) d = ij.first;
    return d;
}

std::optional<int> bipoly::deg_y_of_x_slice(int i) const {
    std::optional<int> d;
    for (const auto& [ij, c] : terms)
        if (ij.first == i && (!d || ij.second > *d)) d = ij.second;
    return d;
}

mpz_class bipoly::eval(const mpz_class& x, const mpz_class& y) const {
    mpz_class sum = 0;
    for (const auto& [ij, c] : terms) sum += c * int_pow(x, ij.first) * int_pow(y, ij.second);
    return sum;
}

std::string bipoly::to_text() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [ij, c] : terms) append_term_text(out, c, ij.first, ij.second);
    return out;
}

nlohmann::json bipoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [ij, c] : terms)
        arr.push_back(nlohmann::json::array({ij.first, ij.second, c.get_str()}));
    return arr;
}

bipoly bipoly::from_text(const std::string& s) {
    std::string trimmed = s;
    trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                                 [](unsigned char c) { return c == '\r' || c == '\n'; }),
                  trimmed.end());
    if (trimmed.find_first_not_of(" \t") == std::string::npos)
        throw malformed_input_error("polynomial: empty input");
    {
        std::size_t first = trimmed.find_first_not_of(" \t");
        std::size_t last = trimmed.find_last_not_of(" \t");
        trimmed = trimmed.substr(first, last - first + 1);
    }
    if (trimmed == "0") return zero();
    bipoly p;
    for (const auto& t : parse_terms(trimmed, true)) p = p + monomial(t.i, t.j, t.c);
    return p;
}

bipoly bipoly::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw malformed_input_error("polynomial JSON: expected array of triples");
    bipoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() ||
            !t[1].is_number_integer() || !t[2].is_string())
            throw malformed_input_error("polynomial JSON: expected [i, j, \"coeff\"] triples");
        p = p + monomial(t[0].get<int>(), t[1].get<int>(), parse_mpz(t[2].get<std::string>()));
    }
    return p;
}

bipoly operator+(const bipoly& a, const bipoly& b) {
    bipoly r = a;
    for (const auto& [ij, c] : b.terms) {
        auto [it, fresh] = r.terms.try_emplace(ij, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

bipoly operator-(const bipoly& a, const bipoly& b) {
    bipoly r = a;
    for (const auto& [ij, c] : b.terms) {
        auto [it, fresh] = r.terms.try_emplace(ij, -c);
        if (!fresh) {
            it->second -= c;
            if (it->second == 0) r.terms.erase(it);
        }
    }
    return r;
}

bipoly operator*(const bipoly& a, const bipoly& b) {
    bipoly r;
    for (const auto& [ij, c] : a.terms)
        for (const auto& [kl, d] : b.terms) {
            std::pair<int, int> key{ij.first + kl.first, ij.second + kl.second};
            auto [it, fresh] = r.terms.try_emplace(key, c * d);
            if (!fresh) {
                it->second += c * d;
                if (it->second == 0) r.terms.erase(it);
            }
        }
    return r;
}

unipoly unipoly::from_coeffs(std::vector<mpz_class> ascending) {
    while (!ascending.empty() && ascending.back() == 0) ascending.pop_back();
    unipoly p;
    p.coeffs = std::move(ascending);
    return p;
}

unipoly unipoly::monomial(int k, mpz_class c) {
    unipoly p;
    if (c != 0) {
        p.coeffs.assign(static_cast<std::size_t>(k) + 1, mpz_class(0));
        p.coeffs.back() = std::move(c);
    }
    return p;
}

mpz_class unipoly::coeff(int k) const {
    if (k < 0 || static_cast<std::size_t>(k) >= coeffs.size()) return 0;
    return coeffs[static_cast<std::size_t>(k)];
}

int unipoly::degree() const {
    if (coeffs.empty())
        throw invalid_argument_error("degree of the zero polynomial is undefined");
    return static_cast<int>(coeffs.size()) - 1;
}

mpz_class unipoly::eval(const mpz_class& x) const {
    mpz_class sum = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) sum = sum * x + *it;
    return sum;
}

std::string unipoly::to_text() const {
    if (coeffs.empty()) return "0";
    std::string out;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
        if (coeffs[static_cast<std::size_t>(k)] != 0)
            append_term_text(out, coeffs[static_cast<std::size_t>(k)], k, 0);
    return out;
}

nlohmann::json unipoly::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k] != 0) arr.push_back(nlohmann::json::array({k, coeffs[k].get_str()}));
    return arr;
}

unipoly unipoly::from_text(const std::string& s) {
    bipoly b = bipoly::from_text(s);
    std::vector<mpz_class> cs;
    for (const auto& [ij, c] : b.terms) {
        if (ij.second != 0)
            throw malformed_input_error("polynomial: univariate input contains 'y'");
        if (static_cast<std::size_t>(ij.first) >= cs.size())
            cs.resize(static_cast<std::size_t>(ij.first) + 1, mpz_class(0));
        cs[static_cast<std::size_t>(ij.first)] = c;
    }
    return from_coeffs(std::move(cs));
}

unipoly unipoly::from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw malformed_input_error("polynomial JSON: expected array of pairs");
    std::vector<mpz_class> cs;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer() || !t[1].is_string())
            throw malformed_input_error("polynomial JSON: expected [k, \"coeff\"] pairs");
        int k = t[0].get<int>();
        if (k < 0) throw malformed_input_error("polynomial JSON: negative exponent");
        if (static_cast<std::size_t>(k) >= cs.size())
            cs.resize(static_cast<std::size_t>(k) + 1, mpz_class(0));
        cs[static_cast<std::size_t>(k)] += parse_mpz(t[1].get<std::string>());
    }
    return from_coeffs(std::move(cs));
}

unipoly operator+(const unipoly& a, const unipoly& b) {
    std::vector<mpz_class> cs(std::max(a.coeffs.size(), b.coeffs.size()), mpz_class(0));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) cs[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) cs[k] += b.coeffs[k];
    return unipoly::from_coeffs(std::move(cs));
}

unipoly operator-(const unipoly& a, const unipoly& b) {
    std::vector<mpz_class> cs(std::max(a.coeffs.size(), b.coeffs.size()), mpz_class(0));
    for (std::size_t k = 0; k < a.coeffs.size(); ++k) cs[k] += a.coeffs[k];
    for (std::size_t k = 0; k < b.coeffs.size(); ++k) cs[k] -= b.coeffs[k];
    return unipoly::from_coeffs(std::move(cs));
}

unipoly operator*(const unipoly& a, const unipoly& b) {
    if (a.is_zero() || b.is_zero()) return unipoly::zero();
    std::vector<mpz_class> cs(a.coeffs.size() + b.coeffs.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs.size(); ++j) cs[i + j] += a.coeffs[i] * b.coeffs[j];
    return unipoly::from_coeffs(std::move(cs));
}

} // namespace subcomp
