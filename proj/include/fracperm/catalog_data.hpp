#pragma once

#include "bipoly.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace fracperm {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grid entry in a factor template: either a constant mod p or a power of
// the candidate primitive element scanned at verification time.
struct GridToken {
    bool is_omega = false;
    i64 value = 0;  // constant, or omega exponent
};

struct FactorTemplate {
    std::string name;
    u64 p = 0;
    u32 n = 0;
    std::vector<std::vector<GridToken>> rows;  // rows[i][j]: coeff of x^i y^j

    BiPoly instantiate(const Field& F, u64 omega, bool reciprocal = false) const {
        if (F.p() != p || F.n() != n)
            throw DataError("template " + name + " instantiated in the wrong field");
        std::vector<std::vector<u64>> g;
        for (auto& row : rows) {
            std::vector<u64> r;
            for (auto& t : row)
                r.push_back(t.is_omega ? F.powu(omega, u64(t.value)) : F.from_int(t.value));
            g.push_back(std::move(r));
        }
        BiPoly b(F, std::move(g));
        return reciprocal ? b.reciprocal_transform() : b;
    }
};

struct FactorRef {
    std::string name;
    bool reciprocal = false;
    u32 multiplicity = 1;
};

// target of a factorization audit: a catalog family's curve, or an explicit
// fraction given by integer coefficient lists
struct FactTarget {
    std::string family;           // empty when explicit
    std::vector<i64> params;
    std::vector<i64> num, den;    // explicit fraction
};

struct FactorizationCase {
    std::string id;
    u64 p = 0;
    u32 n = 0;
    FactTarget target;
    std::vector<FactorRef> factors;
};

struct ResultantCase {
    std::string id;
    u64 p = 0;
    u32 n = 0;
    FactorRef lhs, rhs;
    std::vector<std::pair<u64, u32>> exps;  // (omega exponent, multiplicity)
    std::vector<i64> poly;                  // optional exact value, low-first
};

struct CatalogData {
    int version = 0;
    std::vector<std::vector<i64>> table1_params;
    std::vector<std::vector<i64>> table2_params;
    std::map<std::string, FactorTemplate> templates;
    std::vector<FactorizationCase> factorizations;
    std::vector<ResultantCase> resultants;

    const FactorTemplate& tmpl(const std::string& name) const {
        auto it = templates.find(name);
        if (it == templates.end()) throw DataError("unknown template: " + name);
        return it->second;
    }
};

namespace detail {

inline FactorRef parse_factor_ref(std::string tok) {
    FactorRef ref;
    size_t star = tok.find('*');
    if (star != std::string::npos) {
        ref.multiplicity = u32(std::stoul(tok.substr(star + 1)));
        tok = tok.substr(0, star);
    }
    if (!tok.empty() && tok.back() == '~') {
        ref.reciprocal = true;
        tok.pop_back();
    }
    ref.name = tok;
    return ref;
}

}  // namespace detail

inline CatalogData load_catalog_data(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open data file: " + path);
    CatalogData data;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw DataError(path + ":" + std::to_string(lineno) + ": " + msg);
    };
    auto next_tokens = [&](std::vector<std::string>& out) {
        out.clear();
        while (std::getline(in, line)) {
            ++lineno;
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream is(line);
            std::string t;
            while (is >> t) out.push_back(t);
            if (!out.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> tk;
    while (next_tokens(tk)) {
        if (tk[0] == "version") {
            if (tk.size() != 2) fail("version needs one argument");
            data.version = std::stoi(tk[1]);
        } else if (tk[0] == "params") {
            if (tk.size() != 2) fail("params needs a table name");
            auto& dst = tk[1] == "table1" ? data.table1_params
                      : tk[1] == "table2" ? data.table2_params
                      : (fail("unknown params table: " + tk[1]), data.table1_params);
            while (next_tokens(tk) && tk[0] != "end") {
                std::vector<i64> row;
                for (auto& t : tk) row.push_back(std::stoll(t));
                dst.push_back(std::move(row));
            }
        } else if (tk[0] == "template") {
            if (tk.size() != 2) fail("template needs a name");
            FactorTemplate t;
            t.name = tk[1];
            while (next_tokens(tk) && tk[0] != "end") {
                if (tk[0] == "field") {
                    if (tk.size() != 3) fail("field needs p and n");
                    t.p = std::stoull(tk[1]);
                    t.n = u32(std::stoul(tk[2]));
                } else if (tk[0] == "row") {
                    std::vector<GridToken> row;
                    for (size_t i = 1; i < tk.size(); ++i) {
                        GridToken g;
                        if (tk[i][0] == 'w') {
                            g.is_omega = true;
                            g.value = std::stoll(tk[i].substr(1));
                        } else {
                            g.value = std::stoll(tk[i]);
                        }
                        row.push_back(g);
                    }
                    t.rows.push_back(std::move(row));
                } else {
                    fail("unknown template directive: " + tk[0]);
                }
            }
            size_t ny = 0;
            for (auto& r : t.rows) ny = std::max(ny, r.size());
            for (auto& r : t.rows) r.resize(ny);
            if (t.p == 0 || t.rows.empty()) fail("incomplete template " + t.name);
            data.templates[t.name] = std::move(t);
        } else if (tk[0] == "factorization") {
            if (tk.size() != 2) fail("factorization needs an id");
            FactorizationCase c;
            c.id = tk[1];
            while (next_tokens(tk) && tk[0] != "end") {
                if (tk[0] == "field") {
                    c.p = std::stoull(tk[1]);
                    c.n = u32(std::stoul(tk[2]));
                } else if (tk[0] == "target") {
                    if (tk.size() < 2) fail("empty target");
                    if (tk[1] == "family") {
                        if (tk.size() < 3) fail("target family needs an id");
                        c.target.family = tk[2];
                        for (size_t i = 3; i < tk.size(); ++i)
                            c.target.params.push_back(std::stoll(tk[i]));
                    } else if (tk[1] == "frac") {
                        bool den = false;
                        for (size_t i = 2; i < tk.size(); ++i) {
                            if (tk[i] == "/") { den = true; continue; }
                            (den ? c.target.den : c.target.num).push_back(std::stoll(tk[i]));
                        }
                        if (c.target.den.empty()) fail("target frac needs a denominator");
                    } else {
                        fail("unknown target kind: " + tk[1]);
                    }
                } else if (tk[0] == "factors") {
                    for (size_t i = 1; i < tk.size(); ++i)
                        c.factors.push_back(detail::parse_factor_ref(tk[i]));
                } else {
                    fail("unknown factorization directive: " + tk[0]);
                }
            }
            if (c.p == 0 || c.factors.empty()) fail("incomplete factorization " + c.id);
            data.factorizations.push_back(std::move(c));
        } else if (tk[0] == "resultant") {
            if (tk.size() != 2) fail("resultant needs an id");
            ResultantCase c;
            c.id = tk[1];
            while (next_tokens(tk) && tk[0] != "end") {
                if (tk[0] == "field") {
                    c.p = std::stoull(tk[1]);
                    c.n = u32(std::stoul(tk[2]));
                } else if (tk[0] == "inputs") {
                    if (tk.size() != 3) fail("inputs needs exactly two templates");
                    c.lhs = detail::parse_factor_ref(tk[1]);
                    c.rhs = detail::parse_factor_ref(tk[2]);
                } else if (tk[0] == "exps") {
                    for (size_t i = 1; i < tk.size(); ++i) {
                        size_t star = tk[i].find('*');
                        u64 e = std::stoull(tk[i].substr(0, star));
                        u32 m = star == std::string::npos ? 1 : u32(std::stoul(tk[i].substr(star + 1)));
                        c.exps.push_back({e, m});
                    }
                } else if (tk[0] == "poly") {
                    for (size_t i = 1; i < tk.size(); ++i) c.poly.push_back(std::stoll(tk[i]));
                } else {
                    fail("unknown resultant directive: " + tk[0]);
                }
            }
            if (c.p == 0 || c.exps.empty()) fail("incomplete resultant " + c.id);
            data.resultants.push_back(std::move(c));
        } else {
            fail("unknown directive: " + tk[0]);
        }
    }
    if (data.version != 1) throw DataError(path + ": unsupported data version");
    return data;
}

}  // namespace fracperm
