#pragma once

#include "catalog_data.hpp"
#include "permcheck.hpp"
#include "resultant.hpp"
#include "textio.hpp"

#include <chrono>
#include <functional>

namespace fracperm {

enum class Prediction { permutes, not_permutes, unclaimed };

inline const char* to_string(Prediction p) {
    switch (p) {
        case Prediction::permutes: return "permutes";
        case Prediction::not_permutes: return "not-permutes";
        case Prediction::unclaimed: return "unclaimed";
    }
    return "?";
}

struct FamilyInfo {
    std::string id;
    std::string group;
    char size_symbol;  // the letter the size parameter goes by
    bool has_params;
    std::vector<u64> default_sizes;
    std::string summary;
};

struct InstanceOutcome {
    Record record;
    Prediction predicted = Prediction::unclaimed;
    bool mismatch = false;
};

struct FactOutcome {
    std::string id;
    bool ok = false;
    u64 omega = 0;
    u64 scalar = 0;
    bool exact = false;  // scalar == 1
    i64 elapsed_us = 0;
};

struct ResOutcome {
    std::string id;
    bool ok = false;
    u64 omega = 0;
    char sign = '?';
    bool poly_exact = false;  // matches the recorded explicit value verbatim
    i64 elapsed_us = 0;
};

struct FinaleConditions {
    bool cond_i = false;
    bool cond_ii = false;
    bool variant = false;
};

namespace detail {

inline i64 now_us() {
    using namespace std::chrono;
    return duration_cast<microseconds>(steady_clock::now().time_since_epoch()).count();
}

inline std::pair<u64, u32> prime_power(u64 q) {
    for (u64 p = 2; p <= q; ++p) {
        if (!is_prime_u64(p)) continue;
        if (q % p) continue;
        u64 v = q;
        u32 e = 0;
        while (v % p == 0) { v /= p; ++e; }
        if (v != 1) throw FieldError(std::to_string(q) + " is not a prime power");
        return {p, e};
    }
    throw FieldError(std::to_string(q) + " is not a prime power");
}

inline std::string join_params(const std::vector<i64>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace detail

// ----- map constructors -----

inline RationalMap family_map_frac(const std::string& id, const Field& F) {
    auto mk = [&](std::vector<i64> n, std::vector<i64> d) {
        return RationalMap::from_ints(F, n, d);
    };
    if (id == "conj1") return mk({0, 1, 0, 0, 0, 0, 1, -1}, {-1, 1, 0, 0, 0, 0, 1});
    if (id == "conj2") return mk({-1, 0, 0, 0, 1, 0, 1}, {0, 1, 0, 1, 0, 0, 0, -1});
    if (id == "conj3") return mk({0, 1, 0, 1, 0, -1}, {-1, 0, 1, 0, 1});
    if (id == "bin1") return mk({0, 1, 1, 1, 0, 1, 1, 1, 1}, {1, 1, 1, 1, 0, 1, 1, 1});
    if (id == "bin2") return mk({0, 1, 0, 1, 0, 1, 0, 1, 1}, {1, 1, 0, 1, 0, 1, 0, 1});
    if (id == "gsfrac1") return mk({0, 1, 1, 0, 0, 1}, {1, 0, 0, 1, 1});
    if (id == "gsfrac2") return mk({1, 1, 0, 1}, {1, 0, 1, 1});
    if (id == "gsfrac3") return mk({1, 1, 0, 0, 0, 1}, {1, 0, 0, 0, 1, 1});
    if (id == "f5even") return mk({0, 1, 0, 4, 0, 4}, {4, 0, 4, 0, 1});
    if (id == "f5odd") return mk({0, 4, 1, 0, 3, 1}, {4, 4, 0, 2, 1});
    throw FieldError("no fixed fractional map for family " + id);
}

// raw numerator/denominator, before any normalization: what the curve
// audits differentiate
inline std::pair<UniPoly, UniPoly> family_curve_fraction(const std::string& id,
                                                         const std::vector<i64>& params,
                                                         const Field& F) {
    if (id == "table1") {
        if (params.size() != 4) throw FieldError("table1 needs parameters a,b,c,d");
        UniPoly q1 = UniPoly::from_ints(F, {params[1], params[0], 1});
        UniPoly q2 = UniPoly::from_ints(F, {params[3], params[2], 1});
        UniPoly x = UniPoly::from_ints(F, {0, 1});
        return {x * q1 * q1, q2 * q2};
    }
    if (id == "table2") {
        if (params.size() != 6) throw FieldError("table2 needs parameters A1..A6");
        const auto& A = params;
        UniPoly num = UniPoly::from_ints(F, {0, A[5], A[4], A[3], A[2], A[1], A[0], -1});
        UniPoly den = UniPoly::from_ints(F, {-1, A[0], A[1], A[2], A[3], A[4], A[5]});
        return {num, den};
    }
    RationalMap g = family_map_frac(id, F);
    return {g.num(), g.den()};
}

inline RationalMap family_map(const std::string& id, const std::vector<i64>& params, const Field& F) {
    auto [n, d] = family_curve_fraction(id, params, F);
    return RationalMap(std::move(n), std::move(d));
}

// the two sparse trinomial-shaped polynomial families over F_{2^{2m}}
inline UniPoly gs_polynomial(const std::string& id, u32 m, const Field& F) {
    u64 t = u64(1) << m;
    std::vector<std::pair<u64, u64>> terms;
    if (id == "gs1") terms = {{5, 1}, {3 * t + 2, 1}, {4 * t + 1, 1}};
    else if (id == "gs2") terms = {{5, 1}, {t + 4, 1}, {5 * t, 1}};
    else throw FieldError("unknown sparse polynomial family " + id);
    std::vector<u64> c;
    for (auto& [e, v] : terms) {
        if (c.size() <= e) c.resize(e + 1, 0);
        c[e] = F.add(c[e], v);
    }
    return UniPoly(F, std::move(c));
}

// A x^{q^2-q+1} + B x^{2q-1} + C x^q + x with coefficients as codes of the
// ambient field
inline UniPoly quadrinomial_build(u64 A, u64 B, u64 C, u64 q, const Field& ambient) {
    if (A >= ambient.size() || B >= ambient.size() || C >= ambient.size())
        throw FieldError("quadrinomial coefficient code outside the ambient field");
    u64 e1 = q * (q - 1) + 1, e2 = 2 * (q - 1) + 1, e3 = q;
    std::vector<u64> c(e1 + 1, 0);
    c[1] = ambient.add(c[1], 1);
    c[e3] = ambient.add(c[e3], C);
    c[e2] = ambient.add(c[e2], B);
    c[e1] = ambient.add(c[e1], A);
    return UniPoly(ambient, std::move(c));
}

// ----- root-freeness helpers -----

// no roots of f on mu_{p^k+1} inside f's own field
inline bool no_mu_roots(const UniPoly& f, u64 p, u32 k) {
    u64 q = 1;
    for (u32 i = 0; i < k; ++i) q *= p;
    MuSubgroup mu(f.field(), q + 1);
    for (u64 z : mu.sorted())
        if (f.eval(z) == 0) return false;
    return true;
}

// no roots of f in the F_{p^k} subfield of f's own field
inline bool no_subfield_roots(const UniPoly& f, u64 p, u32 k) {
    const Field& F = f.field();
    if (F.p() != p) throw FieldError("subfield characteristic mismatch");
    for (u64 e : F.subfield_elements(k))
        if (f.eval(e) == 0) return false;
    return true;
}

// ----- quadrinomial conditions -----

// Evaluates the three sufficient conditions for A x^{q^2-q+1} + B x^{2q-1}
// + C x^q + x, with A, B, C given as codes of the ambient field and F_q the
// designated subfield.  Root counts run over the subfield exactly rather
// than through a discriminant, so coefficients outside F_q are fine.
inline FinaleConditions finale_check(u64 A, u64 B, u64 C, u64 q, const Field& ambient) {
    if (ambient.p() == 2) throw FieldError("condition check unavailable in characteristic 2");
    if (A == 0 || B == 0) throw FieldError("conditions need A and B nonzero");
    auto [p, e] = detail::prime_power(q);
    if (ambient.p() != p || ambient.n() % e != 0)
        throw FieldError("ambient field has no F_" + std::to_string(q) + " subfield");
    std::vector<u64> sub = ambient.subfield_elements(e);
    const Field& F = ambient;
    FinaleConditions out;
    u64 eq = F.add(F.sub(F.sub(F.mul(A, A), F.mul(A, C)), F.mul(B, B)), B);
    // (i): A T^2 + (1-B) T + A with two distinct roots in F_q
    if (eq == 0) {
        int roots = 0;
        for (u64 t : sub)
            if (F.add(F.add(F.mul(A, F.mul(t, t)), F.mul(F.sub(1, B), t)), A) == 0) ++roots;
        out.cond_i = roots == 2;
    }
    // (ii): q = 1 mod 3, B = (3AC + C^2 - 1)/3, and
    // 3 T^2 - 3(3A+C) T + (3A+C)^2 - 1 with two distinct roots in F_q
    if (q % 3 == 1 && F.p() != 3) {
        u64 three = F.from_int(3);
        u64 want = F.div(F.add(F.mul(three, F.mul(A, C)), F.sub(F.mul(C, C), 1)), three);
        if (B == want) {
            u64 s = F.add(F.mul(three, A), C);
            int roots = 0;
            for (u64 t : sub) {
                u64 v = F.add(F.sub(F.mul(three, F.mul(t, t)), F.mul(three, F.mul(s, t))),
                              F.sub(F.mul(s, s), 1));
                if (v == 0) ++roots;
            }
            out.cond_ii = roots == 2;
        }
    }
    // variant: same equation, (B-1)/A outside F_q
    if (eq == 0) {
        u64 r = F.div(F.sub(B, 1), A);
        out.variant = !F.in_subfield(r, e);
    }
    return out;
}

// ----- the catalog -----

inline std::vector<FamilyInfo> catalog() {
    std::vector<FamilyInfo> v;
    auto add = [&](std::string id, std::string group, char sym, bool par,
                   std::vector<u64> sizes, std::string summary) {
        v.push_back({std::move(id), std::move(group), sym, par, std::move(sizes), std::move(summary)});
    };
    add("conj1", "conj1", 'k', false, {1, 2, 3, 4, 5, 6},
        "degree-7 fraction on mu_{3^k+1}; claimed for even k");
    add("conj2", "conj2", 'k', false, {1, 2, 3, 4, 5, 6},
        "degree-7 fraction on mu_{3^k+1}; claimed for all k");
    add("conj3", "conj3", 'k', false, {1, 2, 3, 4, 5, 6},
        "degree-5 fraction on mu_{3^k+1}; claimed for k not 2 mod 4");
    add("bin1", "bin", 'n', false, {2, 3, 4, 5, 6, 7, 8, 9, 10},
        "degree-8 fraction on mu_{2^n+1}; permutes iff n not 0 mod 7");
    add("bin2", "bin", 'n', false, {2, 3, 4, 5, 6, 7, 8, 9, 10},
        "degree-8 fraction on mu_{2^n+1}; permutes iff n not 0 mod 7");
    add("gs1", "gs", 'm', false, {1, 2, 3, 4, 5, 6},
        "sparse polynomial on F_{2^{2m}}; permutes iff m = 2 mod 4");
    add("gs2", "gs", 'm', false, {1, 2, 3, 4, 5, 6},
        "sparse polynomial on F_{2^{2m}}; permutes iff m = 2 mod 4");
    add("gsfrac1", "gsfrac", 'm', false, {1, 2, 3, 4, 5, 6},
        "quintic fraction on mu_{2^m+1}; claimed for m = 2 mod 4");
    add("gsfrac2", "gsfrac", 'm', false, {1, 2, 3, 4, 5, 6},
        "cubic fraction on mu_{2^m+1}; claimed for m = 2 mod 4");
    add("gsfrac3", "gsfrac", 'm', false, {1, 2, 3, 4, 5, 6},
        "quintic fraction on mu_{2^m+1}; claimed for m = 2 mod 4");
    add("f5even", "f5even", 'k', false, {1, 2, 3, 4},
        "quintic fraction on mu_{5^k+1}; claimed for even k");
    add("f5odd", "f5odd", 'k', false, {1, 3, 5},
        "quintic fraction on F_{5^k}; claimed for odd k");
    add("table1", "table1", 'k', true, {1, 3},
        "x(x^2+ax+b)^2/(x^2+cx+d)^2 on F_{5^k}; ten rows claimed for odd k");
    add("table2", "table2", 'k', true, {1, 3},
        "degree-7 fractions on mu_{3^k+1} (fail for odd k) and F_{3^k}");
    add("finale", "finale", 'q', true, {5, 7, 9},
        "quadrinomial over F_{q^2}; claimed under conditions (i) or (ii)");
    add("quad", "quad", 'q', true, {5},
        "quadrinomial with F_{q^2} coefficients; claimed under the variant condition");
    return v;
}

// size of the largest field one instance of the family touches, the gate
// the bulk runner budgets by
inline u64 instance_cost(const std::string& id, u64 size) {
    auto pw = [](u64 b, u64 e) {
        u64 r = 1;
        while (e--) r *= b;
        return r;
    };
    if (id == "conj1" || id == "conj2" || id == "conj3" || id == "table2") return pw(3, 2 * size);
    if (id == "bin1" || id == "bin2" || id == "gs1" || id == "gs2" || id == "gsfrac1" ||
        id == "gsfrac2" || id == "gsfrac3")
        return pw(2, 2 * size);
    if (id == "f5even") return pw(5, 2 * size);
    if (id == "f5odd" || id == "table1") return pw(5, size);
    if (id == "finale") return size * size;
    if (id == "quad") return size * size * size * size;
    throw FieldError("unknown family " + id);
}

// ----- verification -----

class Families {
public:
    explicit Families(CatalogData data) : data_(std::move(data)) {}

    const CatalogData& data() const { return data_; }

    bool known_family(const std::string& id) const {
        for (auto& f : catalog())
            if (f.id == id) return true;
        return false;
    }

    Prediction predicted(const std::string& id, const std::vector<i64>& params, u64 size,
                         const std::string& domain) const {
        if (id == "conj1") return size % 2 == 0 ? Prediction::permutes : Prediction::unclaimed;
        if (id == "conj2") return Prediction::permutes;
        if (id == "conj3") return size % 4 == 2 ? Prediction::unclaimed : Prediction::permutes;
        if (id == "bin1" || id == "bin2")
            return size % 7 == 0 ? Prediction::not_permutes : Prediction::permutes;
        if (id == "gs1" || id == "gs2")
            return size % 4 == 2 ? Prediction::permutes : Prediction::not_permutes;
        if (id == "gsfrac1" || id == "gsfrac2" || id == "gsfrac3")
            return size % 4 == 2 ? Prediction::permutes : Prediction::unclaimed;
        if (id == "f5even") return size % 2 == 0 ? Prediction::permutes : Prediction::unclaimed;
        if (id == "f5odd") return size % 2 == 1 ? Prediction::permutes : Prediction::unclaimed;
        if (id == "table1") {
            bool listed = false;
            for (auto& r : data_.table1_params) listed = listed || r == params;
            return listed && size % 2 == 1 ? Prediction::permutes : Prediction::unclaimed;
        }
        if (id == "table2") {
            if (domain.rfind("mu", 0) == 0)
                return size % 2 == 1 ? Prediction::not_permutes : Prediction::unclaimed;
            return Prediction::unclaimed;
        }
        if (id == "finale") {
            auto [p, e] = detail::prime_power(size);
            const Field& amb = Field::make(p, 2 * e);
            if (params.size() != 3) throw FieldError("finale needs parameters A,B,C");
            auto c = finale_check(u64(params[0]), u64(params[1]), u64(params[2]), size, amb);
            return c.cond_i || c.cond_ii ? Prediction::permutes : Prediction::unclaimed;
        }
        if (id == "quad") {
            auto [p, e] = detail::prime_power(size);
            const Field& amb = Field::make(p, 4 * e);
            if (params.size() != 3) throw FieldError("quad needs parameters A,B,C");
            auto c = finale_check(u64(params[0]), u64(params[1]), u64(params[2]), size, amb);
            return c.variant ? Prediction::permutes : Prediction::unclaimed;
        }
        throw FieldError("unknown family " + id);
    }

    // single instance; table2 yields a subgroup record and a field record
    std::vector<InstanceOutcome> verify_instance(const std::string& id, const std::vector<i64>& params,
                                                 u64 size, unsigned workers = 1) const {
        std::vector<InstanceOutcome> out;
        i64 t0 = detail::now_us();
        auto finish = [&](Record rec, Prediction pred) {
            rec.elapsed_us = detail::now_us() - t0;
            InstanceOutcome o;
            o.predicted = pred;
            o.mismatch = (pred == Prediction::permutes && rec.verdict != "permutes") ||
                         (pred == Prediction::not_permutes && rec.verdict != "not-permutes");
            o.record = std::move(rec);
            out.push_back(std::move(o));
        };
        auto perm_str = [](bool b) { return b ? "permutes" : "not-permutes"; };

        if (id == "conj1" || id == "conj2" || id == "conj3" || id == "bin1" || id == "bin2" ||
            id == "gsfrac1" || id == "gsfrac2" || id == "gsfrac3" || id == "f5even") {
            u64 p = id[0] == 'c' ? 3 : (id[0] == 'f' ? 5 : 2);
            u64 q = 1;
            for (u64 i = 0; i < size; ++i) q *= p;
            const Field& amb = Field::make(p, u32(2 * size));
            MuSubgroup mu(amb, q + 1);
            RationalMap g = family_map_frac(id, amb);
            PermReport r = permutes_set(g, mu);
            finish({id, p, size, "mu_" + std::to_string(q + 1), perm_str(r.permutes), r.witness.str()},
                   predicted(id, params, size, "mu"));
            return out;
        }
        if (id == "gs1" || id == "gs2") {
            const Field& F = Field::make(2, u32(2 * size));
            UniPoly f = gs_polynomial(id, u32(size), F);
            PermReport r = is_pp_brute(f, u64(1) << 26, workers);
            finish({id, 2, size, "field", perm_str(r.permutes), r.witness.str()},
                   predicted(id, params, size, "field"));
            return out;
        }
        if (id == "f5odd" || id == "table1") {
            const Field& F = Field::make(5, u32(size));
            RationalMap g = family_map(id, params, F);
            std::vector<u64> all(F.size());
            for (u64 i = 0; i < F.size(); ++i) all[i] = i;
            PermReport r = permutes_set(g, all);
            std::string fam = id == "table1" ? id + "[" + detail::join_params(params) + "]" : id;
            finish({fam, 5, size, "field", perm_str(r.permutes), r.witness.str()},
                   predicted(id, params, size, "field"));
            return out;
        }
        if (id == "table2") {
            u64 q = 1;
            for (u64 i = 0; i < size; ++i) q *= 3;
            std::string fam = id + "[" + detail::join_params(params) + "]";
            {
                const Field& amb = Field::make(3, u32(2 * size));
                MuSubgroup mu(amb, q + 1);
                RationalMap g = family_map(id, params, amb);
                PermReport r = permutes_set(g, mu);
                finish({fam, 3, size, "mu_" + std::to_string(q + 1), perm_str(r.permutes), r.witness.str()},
                       predicted(id, params, size, "mu"));
            }
            t0 = detail::now_us();
            {
                const Field& F = Field::make(3, u32(size));
                RationalMap g = family_map(id, params, F);
                std::vector<u64> all(F.size());
                for (u64 i = 0; i < F.size(); ++i) all[i] = i;
                PermReport r = permutes_set(g, all);
                finish({fam, 3, size, "field", perm_str(r.permutes), r.witness.str()},
                       predicted(id, params, size, "field"));
            }
            return out;
        }
        if (id == "finale" || id == "quad") {
            auto [p, e] = detail::prime_power(size);
            u32 amb_deg = id == "finale" ? 2 * e : 4 * e;
            const Field& amb = Field::make(p, amb_deg);
            if (params.size() != 3) throw FieldError(id + " needs parameters A,B,C");
            UniPoly f = quadrinomial_build(u64(params[0]), u64(params[1]), u64(params[2]), size, amb);
            PermReport r = is_pp_brute(f, u64(1) << 26, workers);
            std::string fam = id + "[" + detail::join_params(params) + "]";
            finish({fam, p, size, "field", perm_str(r.permutes), r.witness.str()},
                   predicted(id, params, size, "field"));
            return out;
        }
        throw FieldError("unknown family " + id);
    }

    // all instances of a family at one size: parameter rows for the table
    // families, qualifying coefficient sweeps for the quadrinomial ones
    std::vector<InstanceOutcome> verify_family(const std::string& id, const std::vector<i64>& params,
                                               u64 size, unsigned workers = 1) const {
        if (!params.empty()) return verify_instance(id, params, size, workers);
        if (id == "table1" || id == "table2") {
            const auto& rows = id == "table1" ? data_.table1_params : data_.table2_params;
            std::vector<InstanceOutcome> out;
            for (auto& r : rows)
                for (auto& o : verify_instance(id, r, size, workers)) out.push_back(o);
            return out;
        }
        if (id == "finale" || id == "quad") {
            std::vector<InstanceOutcome> out;
            for (auto& trip : sweep_triples(id, size))
                for (auto& o : verify_instance(id, trip, size, workers)) out.push_back(o);
            return out;
        }
        return verify_instance(id, params, size, workers);
    }

    // the qualifying coefficient triples the family's claim quantifies over
    std::vector<std::vector<i64>> sweep_triples(const std::string& id, u64 size) const {
        auto [p, e] = detail::prime_power(size);
        std::vector<std::vector<i64>> out;
        if (id == "finale") {
            const Field& amb = Field::make(p, 2 * e);
            std::vector<u64> sub = amb.subfield_elements(e);
            for (u64 A : sub) {
                if (!A) continue;
                for (u64 B : sub) {
                    if (!B) continue;
                    for (u64 C : sub) {
                        auto c = finale_check(A, B, C, size, amb);
                        if (c.cond_i || c.cond_ii) out.push_back({i64(A), i64(B), i64(C)});
                    }
                }
            }
            return out;
        }
        if (id == "quad") {
            const Field& amb = Field::make(p, 4 * e);
            std::vector<u64> sub = amb.subfield_elements(2 * e);
            for (u64 A : sub) {
                if (!A) continue;
                for (u64 B : sub) {
                    if (!B) continue;
                    // C is forced by the variant equation: C = (A^2 - B^2 + B)/A
                    u64 C = amb.div(amb.add(amb.sub(amb.mul(A, A), amb.mul(B, B)), B), A);
                    auto c = finale_check(A, B, C, size, amb);
                    if (c.variant) out.push_back({i64(A), i64(B), i64(C)});
                }
            }
            return out;
        }
        throw FieldError("family " + id + " has no coefficient sweep");
    }

    FactOutcome verify_factorization(const FactorizationCase& c) const {
        FactOutcome out;
        out.id = c.id;
        i64 t0 = detail::now_us();
        const Field& F = Field::make(c.p, c.n);
        UniPoly num(F), den(F);
        if (!c.target.family.empty()) {
            auto [n, d] = family_curve_fraction(c.target.family, c.target.params, F);
            num = n;
            den = d;
        } else {
            num = UniPoly::from_ints(F, c.target.num);
            den = UniPoly::from_ints(F, c.target.den);
        }
        BiPoly dq = difference_quotient(num, den);
        for (u64 w : F.primitives()) {
            BiPoly prod = BiPoly::from_int_grid(F, {{1}});
            for (auto& ref : c.factors) {
                BiPoly fac = data_.tmpl(ref.name).instantiate(F, w, ref.reciprocal);
                for (u32 i = 0; i < ref.multiplicity; ++i) prod = prod * fac;
            }
            auto s = prod.scalar_multiple_of(dq);
            if (s) {
                out.ok = true;
                out.omega = w;
                out.scalar = *s;
                out.exact = *s == 1;
                break;
            }
        }
        out.elapsed_us = detail::now_us() - t0;
        return out;
    }

    FactOutcome verify_factorization(const std::string& id) const {
        for (auto& c : data_.factorizations)
            if (c.id == id) return verify_factorization(c);
        throw DataError("unknown factorization case: " + id);
    }

    ResOutcome verify_resultant(const ResultantCase& c) const {
        ResOutcome out;
        out.id = c.id;
        i64 t0 = detail::now_us();
        const Field& F = Field::make(c.p, c.n);
        UniPoly expect = c.poly.empty() ? UniPoly(F) : UniPoly::from_ints(F, c.poly);
        for (u64 w : F.primitives()) {
            BiPoly lhs = data_.tmpl(c.lhs.name).instantiate(F, w, c.lhs.reciprocal);
            BiPoly rhs = data_.tmpl(c.rhs.name).instantiate(F, w, c.rhs.reciprocal);
            UniPoly raw = resultant_y(lhs, rhs);
            UniPoly R = raw.monic();
            for (char sign : {'+', '-'}) {
                UniPoly prod = UniPoly::from_ints(F, {1});
                for (auto& [e, m] : c.exps) {
                    u64 root = F.powu(w, e);
                    if (sign == '-') root = F.neg(root);
                    UniPoly lin(F, {F.neg(root), 1});
                    for (u32 i = 0; i < m; ++i) prod = prod * lin;
                }
                if (R == prod.monic()) {
                    out.omega = w;
                    out.sign = sign;
                    out.ok = expect.is_zero() || R == expect.monic();
                    out.poly_exact = !expect.is_zero() && raw == expect;
                    break;
                }
            }
            if (out.sign != '?') break;
        }
        out.elapsed_us = detail::now_us() - t0;
        return out;
    }

    ResOutcome verify_resultant(const std::string& id) const {
        for (auto& c : data_.resultants)
            if (c.id == id) return verify_resultant(c);
        throw DataError("unknown resultant case: " + id);
    }

    // brute sweep of all parameter quadruples that permute F_{5^k} for
    // every k in ks; a denominator zero disqualifies immediately
    std::vector<std::vector<i64>> search_table1(const std::vector<u64>& ks = {1, 3}) const {
        std::vector<std::vector<i64>> survivors;
        for (i64 a = 0; a < 5; ++a)
            for (i64 b = 0; b < 5; ++b)
                for (i64 c = 0; c < 5; ++c)
                    for (i64 d = 0; d < 5; ++d) {
                        bool ok = true;
                        for (u64 k : ks) {
                            const Field& F = Field::make(5, u32(k));
                            RationalMap g = family_map("table1", {a, b, c, d}, F);
                            std::vector<u64> all(F.size());
                            for (u64 i = 0; i < F.size(); ++i) all[i] = i;
                            if (!permutes_set(g, all).permutes) { ok = false; break; }
                        }
                        if (ok) survivors.push_back({a, b, c, d});
                    }
        return survivors;
    }

private:
    CatalogData data_;
};

}  // namespace fracperm
