#pragma once

#include "rational_map.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace fracperm {

// Failure evidence from a permutation scan.  Scans run in ascending order
// of integer encodings, so the witness is deterministic: the first z whose
// image is undefined (pole), lands outside the target set (escape, b = the
// stray value), or repeats an earlier image (collision, a = the earlier
// preimage, b = the current one).
struct Witness {
    enum class Kind { none, pole, escape, collision };
    Kind kind = Kind::none;
    u64 a = 0, b = 0;

    std::string str() const {
        switch (kind) {
            case Kind::none: return "-";
            case Kind::pole: return "pole:" + std::to_string(a);
            case Kind::escape: return "escape:" + std::to_string(a) + "->" + std::to_string(b);
            case Kind::collision: return "collision:" + std::to_string(a) + "," + std::to_string(b);
        }
        return "-";
    }
};

struct PermReport {
    bool permutes = false;
    Witness witness;
};

// mu_d, the d-th roots of unity, living inside an explicitly chosen ambient
// field.  Elements are stored in generator-power order; scans use a sorted
// copy so witnesses follow integer-encoding order.
class MuSubgroup {
public:
    MuSubgroup(const Field& ambient, u64 d) : f_(&ambient), d_(d) {
        if (d == 0 || (ambient.size() - 1) % d != 0)
            throw FieldError("mu_" + std::to_string(d) + " does not embed in F_" + ambient.name());
        gen_ = ambient.powu(ambient.primitive(), (ambient.size() - 1) / d);
        elems_.reserve(d);
        u64 z = 1;
        for (u64 i = 0; i < d; ++i) {
            elems_.push_back(z);
            z = ambient.mul(z, gen_);
        }
        sorted_ = elems_;
        std::sort(sorted_.begin(), sorted_.end());
    }

    const Field& ambient() const { return *f_; }
    u64 d() const { return d_; }
    u64 generator() const { return gen_; }
    const std::vector<u64>& elements() const { return elems_; }
    const std::vector<u64>& sorted() const { return sorted_; }

    bool contains(u64 e) const {
        return std::binary_search(sorted_.begin(), sorted_.end(), e);
    }

private:
    const Field* f_;
    u64 d_, gen_ = 0;
    std::vector<u64> elems_;
    std::vector<u64> sorted_;
};

// mu_d with the canonical ambient F_{p^{2k}} for q = p^k; requires d | q^2-1
inline MuSubgroup mu_subgroup(u64 p, u32 k, u64 d) {
    const Field& amb = Field::make(p, 2 * k);
    u64 q = 1;
    for (u32 i = 0; i < k; ++i) q *= p;
    if (d == 0 || (q * q - 1) % d != 0)
        throw FieldError("mu_" + std::to_string(d) + " does not divide the unit group of F_" + amb.name());
    return MuSubgroup(amb, d);
}

namespace detail {

// ascending scan of sorted S under an arbitrary partial map
inline PermReport scan_set(const Field& F, const std::vector<u64>& sorted_S,
                           const std::function<std::optional<u64>(u64)>& img) {
    (void)F;
    PermReport rep;
    std::unordered_map<u64, u64> seen;
    seen.reserve(sorted_S.size() * 2);
    for (u64 z : sorted_S) {
        auto v = img(z);
        if (!v) {
            rep.witness = {Witness::Kind::pole, z, 0};
            return rep;
        }
        if (!std::binary_search(sorted_S.begin(), sorted_S.end(), *v)) {
            rep.witness = {Witness::Kind::escape, z, *v};
            return rep;
        }
        auto [it, fresh] = seen.emplace(*v, z);
        if (!fresh) {
            rep.witness = {Witness::Kind::collision, it->second, z};
            return rep;
        }
    }
    rep.permutes = true;
    return rep;
}

}  // namespace detail

// Does g map S bijectively onto itself?  S is given by its sorted integer
// encodings inside g's field.
inline PermReport permutes_set(const RationalMap& g, const std::vector<u64>& sorted_S) {
    return detail::scan_set(g.field(), sorted_S, [&](u64 z) { return g.eval(z); });
}

inline PermReport permutes_set(const RationalMap& g, const MuSubgroup& mu) {
    if (&g.field() != &mu.ambient()) throw FieldError("map and subgroup from different field contexts");
    return permutes_set(g, mu.sorted());
}

// Full-field brute-force permutation check for a polynomial.  Marking can
// fan out over worker threads; the witness is always re-derived by a serial
// ascending rescan so it does not depend on the worker count.
inline PermReport is_pp_brute(const UniPoly& f, u64 eval_cap = u64(1) << 26, unsigned workers = 1) {
    const Field& F = f.field();
    u64 N = F.size();
    if (N > eval_cap) throw CapError("brute-force evaluation cap exceeded for F_" + F.name());
    bool dup = false;
    if (workers > 1 && N >= 4096) {
        std::vector<std::atomic<uint8_t>> mark(N);
        for (auto& m : mark) m.store(0, std::memory_order_relaxed);
        std::atomic<bool> found{false};
        std::vector<std::thread> pool;
        u64 chunk = (N + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                u64 lo = w * chunk, hi = std::min(N, lo + chunk);
                for (u64 z = lo; z < hi; ++z) {
                    u64 v = f.eval(z);
                    if (mark[v].exchange(1, std::memory_order_relaxed))
                        found.store(true, std::memory_order_relaxed);
                }
            });
        }
        for (auto& t : pool) t.join();
        dup = found.load();
    } else {
        std::vector<uint8_t> mark(N, 0);
        for (u64 z = 0; z < N; ++z) {
            u64 v = f.eval(z);
            if (mark[v]) { dup = true; break; }
            mark[v] = 1;
        }
    }
    PermReport rep;
    if (!dup) {
        rep.permutes = true;
        return rep;
    }
    // canonical witness: first collision in ascending order
    std::vector<u64> first(N, ~u64(0));
    for (u64 z = 0; z < N; ++z) {
        u64 v = f.eval(z);
        if (first[v] != ~u64(0)) {
            rep.witness = {Witness::Kind::collision, first[v], z};
            return rep;
        }
        first[v] = z;
    }
    throw FieldError("collision vanished on rescan");
}

// x^r h(x^s) for s = (q-1)/d assembled as a dense polynomial
inline UniPoly plz_polynomial(u64 r, u64 d, const UniPoly& h) {
    const Field& F = h.field();
    u64 s = (F.size() - 1) / d;
    std::vector<u64> c;
    for (size_t i = 0; i < h.coeffs().size(); ++i) {
        u64 e = r + s * i;
        if (c.size() <= e) c.resize(e + 1, 0);
        c[e] = F.add(c[e], h.coeffs()[i]);
    }
    return UniPoly(F, std::move(c));
}

struct PlzReport {
    u64 q = 0, s = 0;
    bool gcd_ok = false;
    bool mu_ok = false;
    bool is_pp = false;
    // gcd(r, s) and gcd(r mod d, s) can disagree; the unreduced exponent is
    // the one the criterion reads, this flag surfaces the discrepancy
    bool reduced_gcd_differs = false;
    Witness witness;
};

// x^r h(x^{(q-1)/d}) permutes F_q iff gcd(r, (q-1)/d) = 1 and
// z^r h(z)^{(q-1)/d} permutes mu_d
inline PlzReport plz_check(u64 r, u64 d, const UniPoly& h) {
    const Field& F = h.field();
    u64 q = F.size();
    if (r == 0) throw FieldError("exponent r must be positive");
    if (d == 0 || (q - 1) % d != 0) throw FieldError("index d must divide q - 1");
    PlzReport rep;
    rep.q = q;
    rep.s = (q - 1) / d;
    rep.gcd_ok = std::gcd(r, rep.s) == 1;
    u64 rr = r % d == 0 ? d : r % d;
    rep.reduced_gcd_differs = (std::gcd(rr, rep.s) == 1) != rep.gcd_ok;
    MuSubgroup mu(F, d);
    auto scan = detail::scan_set(F, mu.sorted(), [&](u64 z) -> std::optional<u64> {
        return F.mul(F.powu(z, r), F.powu(h.eval(z), rep.s));
    });
    rep.mu_ok = scan.permutes;
    rep.witness = scan.witness;
    rep.is_pp = rep.gcd_ok && rep.mu_ok;
    return rep;
}

// Numerator/denominator pair of z^r h(z)^{q-1} restricted to mu_{q+1},
// kept unreduced: z^{r-l} rev(h)/h with the monomial folded into whichever
// side keeps both polynomial (l = deg h).  Requires h's coefficients in the
// F_q subfield of its quadratic ambient field.
struct FracAssociate {
    UniPoly num, den;
    RationalMap to_map() const { return RationalMap(num, den); }
};

inline FracAssociate fractional_associate(u64 r, const UniPoly& h, u64 q) {
    const Field& F = h.field();
    if (F.size() != q * q) throw FieldError("ambient field must be the quadratic extension of F_q");
    if (h.is_zero()) throw FieldError("zero polynomial has no fractional associate");
    u32 half = F.n() / 2;
    if (!h.coeffs_in_subfield(half)) throw FieldError("coefficients must lie in the F_q subfield");
    if (r == 0) throw FieldError("exponent r must be positive");
    u64 l = u64(h.deg());
    UniPoly rev = h.reversal();
    if (r >= l) {
        UniPoly num = UniPoly::monomial(F, 1, u32(r - l)) * rev;
        return {num, h};
    }
    UniPoly den = UniPoly::monomial(F, 1, u32(l - r)) * h;
    return {rev, den};
}

// first zero of H on mu x mu off the diagonal, scanning lexicographically
// over sorted mu elements
inline std::optional<std::pair<u64, u64>> curve_mu_point_search(const BiPoly& H, const MuSubgroup& mu) {
    if (&H.field() != &mu.ambient()) throw FieldError("curve and subgroup from different field contexts");
    for (u64 a : mu.sorted())
        for (u64 b : mu.sorted()) {
            if (a == b) continue;
            if (H.eval(a, b) == 0) return std::make_pair(a, b);
        }
    return std::nullopt;
}

}  // namespace fracperm
