#pragma once

#include "rational_map.hpp"

#include <cctype>
#include <sstream>

namespace fracperm {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "p^n" or bare "p"
inline std::pair<u64, u32> parse_field_spec(const std::string& s) {
    size_t caret = s.find('^');
    try {
        if (caret == std::string::npos) {
            size_t used = 0;
            u64 p = std::stoull(s, &used);
            if (used != s.size()) throw ParseError("trailing characters in field spec: " + s);
            return {p, 1};
        }
        size_t u1 = 0, u2 = 0;
        u64 p = std::stoull(s.substr(0, caret), &u1);
        u64 n = std::stoull(s.substr(caret + 1), &u2);
        if (u1 != caret || u2 != s.size() - caret - 1 || n == 0)
            throw ParseError("malformed field spec: " + s);
        return {p, u32(n)};
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed field spec: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("field spec out of range: " + s);
    }
}

namespace detail {

struct PolyParser {
    const Field& F;
    std::string s;
    size_t i = 0;

    PolyParser(const Field& f, std::string str) : F(f), s(std::move(str)) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }

    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }

    u64 read_uint() {
        skip_ws();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a number at position " + std::to_string(i) + " in '" + s + "'");
        u64 v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + u64(s[i] - '0');
            if (v > (u64(1) << 40)) throw ParseError("number too large in '" + s + "'");
            ++i;
        }
        return v;
    }

    // term := factor (['*'] factor)*; factor := INT | w['^'INT] | x['^'INT]
    // returns (coefficient, x-exponent)
    std::pair<u64, u64> term() {
        u64 coeff = 1, xexp = 0;
        bool any = false;
        for (;;) {
            skip_ws();
            if (i >= s.size()) break;
            char c = s[i];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                u64 v = read_uint();
                coeff = F.mul(coeff, F.from_int(i64(v % F.p())));
                any = true;
            } else if (c == 'w' || c == 'x') {
                ++i;
                u64 e = 1;
                if (eat('^')) e = read_uint();
                if (c == 'w') {
                    if (F.n() == 1)
                        throw ParseError("generator symbol w is not available over a prime field");
                    coeff = F.mul(coeff, F.powu(F.primitive(), e));
                } else {
                    xexp += e;
                }
                any = true;
            } else if (c == '*') {
                ++i;
                continue;
            } else {
                break;
            }
        }
        if (!any) throw ParseError("empty term in '" + s + "'");
        return {coeff, xexp};
    }

    UniPoly expr() {
        std::vector<u64> acc;
        bool neg = eat('-');
        for (;;) {
            auto [c, e] = term();
            if (neg) c = F.neg(c);
            if (acc.size() <= e) acc.resize(e + 1, 0);
            acc[e] = F.add(acc[e], c);
            skip_ws();
            if (eat('+')) neg = false;
            else if (eat('-')) neg = true;
            else break;
        }
        skip_ws();
        if (i != s.size()) throw ParseError("unexpected character at position " + std::to_string(i) + " in '" + s + "'");
        return UniPoly(F, std::move(acc));
    }
};

inline std::string strip_outer_parens(std::string t) {
    auto trim = [](std::string& v) {
        size_t a = v.find_first_not_of(" \t");
        size_t b = v.find_last_not_of(" \t");
        v = a == std::string::npos ? "" : v.substr(a, b - a + 1);
    };
    trim(t);
    while (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (size_t j = 0; j + 1 < t.size(); ++j) {
            if (t[j] == '(') ++depth;
            else if (t[j] == ')') --depth;
            if (depth == 0) { wraps = false; break; }
        }
        if (!wraps) break;
        t = t.substr(1, t.size() - 2);
        trim(t);
    }
    return t;
}

}  // namespace detail

// coefficients are integers mod p or powers of the field generator w
inline UniPoly parse_poly(const Field& F, const std::string& text) {
    detail::PolyParser p(F, detail::strip_outer_parens(text));
    return p.expr();
}

// "N/D" split at the single top-level slash; either side may be
// parenthesized; a missing slash means denominator 1
inline RationalMap parse_fraction(const Field& F, const std::string& text) {
    int depth = 0;
    size_t slash = std::string::npos;
    for (size_t j = 0; j < text.size(); ++j) {
        if (text[j] == '(') ++depth;
        else if (text[j] == ')') --depth;
        else if (text[j] == '/' && depth == 0) {
            if (slash != std::string::npos) throw ParseError("more than one top-level '/' in '" + text + "'");
            slash = j;
        }
    }
    if (slash == std::string::npos) return RationalMap(parse_poly(F, text));
    UniPoly num = parse_poly(F, text.substr(0, slash));
    UniPoly den = parse_poly(F, text.substr(slash + 1));
    if (den.is_zero()) throw ParseError("zero denominator in '" + text + "'");
    return RationalMap(std::move(num), std::move(den));
}

// element rendered as a polynomial in the generator w
inline std::string format_elem(const Field& F, u64 code) {
    if (code < F.p()) return std::to_string(code);
    auto d = F.digits(code);
    std::string out;
    for (size_t i = d.size(); i-- > 0;) {
        if (!d[i]) continue;
        if (!out.empty()) out += "+";
        if (i == 0) out += std::to_string(d[i]);
        else {
            if (d[i] != 1) out += std::to_string(d[i]) + "*";
            out += i == 1 ? "w" : "w^" + std::to_string(i);
        }
    }
    return "(" + (out.empty() ? "0" : out) + ")";
}

inline std::string format_poly(const UniPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        u64 c = f.coeff(i);
        if (!c) continue;
        if (!out.empty()) out += " + ";
        std::string cs = format_elem(f.field(), c);
        if (i == 0) out += cs;
        else {
            std::string xs = i == 1 ? "x" : "x^" + std::to_string(i);
            out += cs == "1" ? xs : cs + "*" + xs;
        }
    }
    return out;
}

// One verification record.  Serialized as key=value pairs in a fixed order
// so records diff cleanly; elapsed is excluded from equality comparisons.
struct Record {
    std::string family;
    u64 p = 0;
    u64 k = 0;
    std::string domain;   // "field", "mu_<d>", or "curve" for audits
    std::string verdict;  // "permutes", "not-permutes", "match", "no-match"
    std::string witness = "-";
    i64 elapsed_us = 0;

    std::string line() const {
        std::ostringstream os;
        os << "family=" << family << " p=" << p << " k=" << k << " domain=" << domain
           << " verdict=" << verdict << " witness=" << witness << " elapsed=" << elapsed_us << "us";
        return os.str();
    }

    bool same_result(const Record& o) const {
        return family == o.family && p == o.p && k == o.k && domain == o.domain &&
               verdict == o.verdict && witness == o.witness;
    }
};

inline Record parse_record(const std::string& line) {
    Record r;
    std::istringstream is(line);
    const std::vector<std::string> order = {"family", "p", "k", "domain", "verdict", "witness", "elapsed"};
    size_t idx = 0;
    std::string token;
    while (is >> token) {
        size_t eq = token.find('=');
        if (eq == std::string::npos) throw ParseError("malformed record token: " + token);
        std::string key = token.substr(0, eq), val = token.substr(eq + 1);
        if (idx >= order.size() || key != order[idx])
            throw ParseError("record keys out of order at: " + token);
        ++idx;
        if (key == "family") r.family = val;
        else if (key == "p") r.p = std::stoull(val);
        else if (key == "k") r.k = std::stoull(val);
        else if (key == "domain") r.domain = val;
        else if (key == "verdict") r.verdict = val;
        else if (key == "witness") r.witness = val;
        else if (key == "elapsed") r.elapsed_us = std::stoll(val);
    }
    if (idx != order.size()) throw ParseError("record missing fields: " + line);
    return r;
}

}  // namespace fracperm
