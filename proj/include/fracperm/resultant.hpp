#pragma once

#include "bipoly.hpp"

#include <optional>

namespace fracperm {

// Arithmetic adapters so the evaluation-interpolation resultant can sample
// either in the base field or in an ephemeral quadratic extension of it.
// The extension exists only inside this translation unit's call stack; its
// elements never leak into results (projection back is checked).

struct BaseOps {
    const Field* F;
    using E = u64;
    E zero() const { return 0; }
    E one() const { return 1; }
    E from_base(u64 c) const { return c; }
    E add(E a, E b) const { return F->add(a, b); }
    E sub(E a, E b) const { return F->sub(a, b); }
    E mul(E a, E b) const { return F->mul(a, b); }
    E neg(E a) const { return F->neg(a); }
    E inv(E a) const { return F->inv(a); }
    bool is_zero(E a) const { return a == 0; }
    u64 count() const { return F->size(); }
    E element(u64 idx) const { return idx; }
    std::optional<u64> to_base(E a) const { return a; }
};

// Quadratic extension represented as pairs a + b t over the base field:
// p odd uses t^2 = s with s the first non-square; p = 2 uses t^2 = t + s
// with s the first element of absolute trace 1.
struct TowerOps {
    const Field* F;
    bool char2 = false;
    u64 s = 0;

    static TowerOps build(const Field& f) {
        TowerOps t;
        t.F = &f;
        if (f.p() == 2) {
            t.char2 = true;
            for (u64 c = 1; c < f.size(); ++c) {
                u64 tr = 0, x = c;
                for (u32 i = 0; i < f.n(); ++i) {
                    tr = f.add(tr, x);
                    x = f.mul(x, x);
                }
                if (tr == 1) { t.s = c; break; }
            }
            if (t.s == 0) throw FieldError("no trace-one element for quadratic extension");
        } else {
            u64 half = (f.size() - 1) / 2;
            for (u64 c = 1; c < f.size(); ++c) {
                if (f.powu(c, half) != 1) { t.s = c; break; }
            }
            if (t.s == 0) throw FieldError("no non-square for quadratic extension");
        }
        return t;
    }

    using E = std::pair<u64, u64>;
    E zero() const { return {0, 0}; }
    E one() const { return {1, 0}; }
    E from_base(u64 c) const { return {c, 0}; }
    E add(E a, E b) const { return {F->add(a.first, b.first), F->add(a.second, b.second)}; }
    E sub(E a, E b) const { return {F->sub(a.first, b.first), F->sub(a.second, b.second)}; }
    E neg(E a) const { return {F->neg(a.first), F->neg(a.second)}; }
    bool is_zero(E a) const { return a.first == 0 && a.second == 0; }

    E mul(E a, E b) const {
        u64 ac = F->mul(a.first, b.first);
        u64 bd = F->mul(a.second, b.second);
        u64 cross = F->add(F->mul(a.first, b.second), F->mul(a.second, b.first));
        if (char2) {
            // t^2 = t + s
            return {F->add(ac, F->mul(bd, s)), F->add(cross, bd)};
        }
        // t^2 = s
        return {F->add(ac, F->mul(bd, s)), cross};
    }

    E inv(E a) const {
        if (is_zero(a)) throw FieldError("division by zero in quadratic extension");
        if (char2) {
            // conjugate is a + b(t+1); norm = a^2 + ab + s b^2
            u64 nrm = F->add(F->add(F->mul(a.first, a.first), F->mul(a.first, a.second)),
                             F->mul(s, F->mul(a.second, a.second)));
            u64 in = F->inv(nrm);
            return {F->mul(F->add(a.first, a.second), in), F->mul(a.second, in)};
        }
        // norm = a^2 - s b^2
        u64 nrm = F->sub(F->mul(a.first, a.first), F->mul(s, F->mul(a.second, a.second)));
        u64 in = F->inv(nrm);
        return {F->mul(a.first, in), F->neg(F->mul(a.second, in))};
    }

    u64 count() const { return F->size() * F->size(); }
    // base-field points come first so results stay projectable when possible
    E element(u64 idx) const { return {idx % F->size(), idx / F->size()}; }
    std::optional<u64> to_base(E a) const {
        if (a.second != 0) return std::nullopt;
        return a.first;
    }
};

namespace detail {

// Sylvester determinant of A (degree m) and B (degree n), coefficient
// vectors low-first with nonzero leads; Gaussian elimination over K.
template <class K>
typename K::E sylvester_resultant(const K& k, std::vector<typename K::E> A, std::vector<typename K::E> B) {
    using E = typename K::E;
    size_t m = A.size() - 1, n = B.size() - 1;
    if (m == 0 && n == 0) return k.one();
    size_t dim = m + n;
    std::vector<std::vector<E>> S(dim, std::vector<E>(dim, k.zero()));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) S[i][i + j] = A[m - j];
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) S[n + i][i + j] = B[n - j];
    E det = k.one();
    bool negate = false;
    for (size_t col = 0; col < dim; ++col) {
        size_t piv = col;
        while (piv < dim && k.is_zero(S[piv][col])) ++piv;
        if (piv == dim) return k.zero();
        if (piv != col) {
            std::swap(S[piv], S[col]);
            negate = !negate;
        }
        det = k.mul(det, S[col][col]);
        E ip = k.inv(S[col][col]);
        for (size_t r = col + 1; r < dim; ++r) {
            if (k.is_zero(S[r][col])) continue;
            E f = k.mul(S[r][col], ip);
            for (size_t c = col; c < dim; ++c)
                S[r][c] = k.sub(S[r][c], k.mul(f, S[col][c]));
        }
    }
    return negate ? k.neg(det) : det;
}

template <class K>
std::vector<typename K::E> lagrange_interpolate(const K& k,
                                                const std::vector<typename K::E>& xs,
                                                const std::vector<typename K::E>& vs) {
    using E = typename K::E;
    size_t n = xs.size();
    // master = prod_j (x - x_j), grown one factor at a time in place
    std::vector<E> master(n + 1, k.zero());
    master[0] = k.one();
    size_t len = 1;
    for (size_t j = 0; j < n; ++j) {
        master[len] = k.zero();
        for (size_t i = len; i-- > 0;) {
            master[i + 1] = k.add(master[i + 1], master[i]);
            master[i] = k.mul(master[i], k.neg(xs[j]));
        }
        ++len;
    }
    std::vector<E> out(n, k.zero());
    std::vector<E> q(n, k.zero());
    for (size_t i = 0; i < n; ++i) {
        // synthetic division of master by (x - x_i)
        E carry = master[n];
        for (size_t d = n; d-- > 0;) {
            q[d] = carry;
            carry = k.add(master[d], k.mul(carry, xs[i]));
        }
        // carry == master(x_i) == 0
        E qi = k.zero();
        E xp = k.one();
        for (size_t d = 0; d < n; ++d) {
            qi = k.add(qi, k.mul(q[d], xp));
            xp = k.mul(xp, xs[i]);
        }
        E scale = k.mul(vs[i], k.inv(qi));
        for (size_t d = 0; d < n; ++d) out[d] = k.add(out[d], k.mul(q[d], scale));
    }
    return out;
}

template <class K>
std::optional<UniPoly> resultant_y_in(const K& k, const Field& base, const BiPoly& F, const BiPoly& G) {
    using E = typename K::E;
    size_t bound = size_t(F.deg_x()) * G.deg_y() + size_t(F.deg_y()) * G.deg_x();
    size_t need = bound + 1;
    UniPoly LF = F.y_slice(F.deg_y());
    UniPoly LG = G.y_slice(G.deg_y());
    std::vector<E> xs, vs;
    xs.reserve(need);
    vs.reserve(need);
    for (u64 idx = 0; idx < k.count() && xs.size() < need; ++idx) {
        E a = k.element(idx);
        // leading y-coefficients must survive specialization
        auto eval_uni_at = [&](const UniPoly& P) {
            E r = k.zero();
            for (size_t i = P.coeffs().size(); i-- > 0;) r = k.add(k.mul(r, a), k.from_base(P.coeffs()[i]));
            return r;
        };
        if (k.is_zero(eval_uni_at(LF)) || k.is_zero(eval_uni_at(LG))) continue;
        std::vector<E> A(F.deg_y() + 1), B(G.deg_y() + 1);
        for (int j = 0; j <= F.deg_y(); ++j) A[j] = eval_uni_at(F.y_slice(j));
        for (int j = 0; j <= G.deg_y(); ++j) B[j] = eval_uni_at(G.y_slice(j));
        xs.push_back(a);
        vs.push_back(sylvester_resultant(k, std::move(A), std::move(B)));
    }
    if (xs.size() < need) return std::nullopt;
    auto coeffs = lagrange_interpolate(k, xs, vs);
    std::vector<u64> out;
    out.reserve(coeffs.size());
    for (auto& c : coeffs) {
        auto b = k.to_base(c);
        if (!b) throw FieldError("resultant interpolation left the base field");
        out.push_back(*b);
    }
    return UniPoly(base, std::move(out));
}

}  // namespace detail

// Resultant of F and G with respect to y, an element of F[x].  Computed by
// specializing x at enough points (degree bound dx(F) dy(G) + dy(F) dx(G)),
// taking Sylvester determinants, and interpolating; sample points move to a
// quadratic extension when the base field is too small.
inline UniPoly resultant_y(const BiPoly& F, const BiPoly& G) {
    F.check(G);
    const Field& K = F.field();
    if (F.is_zero() || G.is_zero()) return UniPoly(K);
    int dyF = F.deg_y(), dyG = G.deg_y();
    if (dyF <= 0 && dyG <= 0) throw FieldError("resultant needs a main variable in at least one input");
    if (dyF == 0 || dyG == 0) {
        // Res(c, B) = c^{deg B} with c free of y
        const BiPoly& cpoly = dyF == 0 ? F : G;
        int e = dyF == 0 ? dyG : dyF;
        UniPoly c = cpoly.y_slice(0);
        UniPoly r(K, {1});
        for (int i = 0; i < e; ++i) r = r * c;
        return r;
    }
    BaseOps base{&K};
    if (auto r = detail::resultant_y_in(base, K, F, G)) return *r;
    TowerOps tower = TowerOps::build(K);
    if (auto r = detail::resultant_y_in(tower, K, F, G)) return *r;
    throw FieldError("field too small to interpolate the resultant");
}

}  // namespace fracperm
