#pragma once

#include "field.hpp"

#include <initializer_list>
#include <optional>

namespace fracperm {

// Dense univariate polynomial, coefficients low-degree-first, canonical
// (no trailing zeros).  The zero polynomial has an empty vector and deg -1.
class UniPoly {
public:
    explicit UniPoly(const Field& f) : f_(&f) {}
    UniPoly(const Field& f, std::vector<u64> codes) : f_(&f), c_(std::move(codes)) { trim(); }

    static UniPoly from_ints(const Field& f, const std::vector<i64>& ints) {
        std::vector<u64> c;
        c.reserve(ints.size());
        for (i64 v : ints) c.push_back(f.from_int(v));
        return UniPoly(f, std::move(c));
    }

    static UniPoly monomial(const Field& f, u64 coeff, u32 degree) {
        std::vector<u64> c(degree + 1, 0);
        c[degree] = coeff;
        return UniPoly(f, std::move(c));
    }

    const Field& field() const { return *f_; }
    const std::vector<u64>& coeffs() const { return c_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    u64 coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    u64 lead() const { return c_.empty() ? 0 : c_.back(); }

    void check(const UniPoly& o) const {
        if (f_ != o.f_) throw FieldError("polynomials from different field contexts");
    }

    u64 eval(u64 x) const {
        u64 r = 0;
        for (size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
        return r;
    }

    UniPoly operator+(const UniPoly& o) const {
        check(o);
        std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
        return UniPoly(*f_, std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const {
        check(o);
        std::vector<u64> r(std::max(c_.size(), o.c_.size()), 0);
        for (size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
        return UniPoly(*f_, std::move(r));
    }

    UniPoly operator*(const UniPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return UniPoly(*f_);
        std::vector<u64> r(c_.size() + o.c_.size() - 1, 0);
        for (size_t i = 0; i < c_.size(); ++i) {
            if (!c_[i]) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
        }
        return UniPoly(*f_, std::move(r));
    }

    UniPoly operator-() const {
        std::vector<u64> r(c_);
        for (auto& v : r) v = f_->neg(v);
        return UniPoly(*f_, std::move(r));
    }

    bool operator==(const UniPoly& o) const { check(o); return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    UniPoly scaled(u64 s) const {
        std::vector<u64> r(c_);
        for (auto& v : r) v = f_->mul(v, s);
        return UniPoly(*f_, std::move(r));
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return scaled(f_->inv(lead()));
    }

    // quotient/remainder by nonzero divisor
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        check(d);
        if (d.is_zero()) throw FieldError("polynomial division by zero");
        std::vector<u64> rem(c_), quo;
        int dd = d.deg();
        if (deg() >= dd) quo.assign(deg() - dd + 1, 0);
        u64 il = f_->inv(d.lead());
        for (int i = deg(); i >= dd; --i) {
            u64 c = rem[i];
            if (!c) continue;
            u64 q = f_->mul(c, il);
            quo[i - dd] = q;
            for (int j = 0; j <= dd; ++j)
                rem[i - dd + j] = f_->sub(rem[i - dd + j], f_->mul(q, d.coeff(j)));
        }
        return {UniPoly(*f_, std::move(quo)), UniPoly(*f_, std::move(rem))};
    }

    // exact quotient; throws if the division leaves a remainder
    UniPoly exact_div(const UniPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw FieldError("inexact polynomial division");
        return q;
    }

    // coefficients mirrored: x^deg * p(1/x); an involution only up to the
    // canonical trim when the constant term vanishes
    UniPoly reversal() const {
        std::vector<u64> r(c_.rbegin(), c_.rend());
        return UniPoly(*f_, std::move(r));
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly(*f_);
        std::vector<u64> r(c_.size() - 1, 0);
        for (size_t i = 1; i < c_.size(); ++i) {
            u64 m = f_->from_int(i64(i % f_->p()));
            r[i - 1] = f_->mul(c_[i], m);
        }
        return UniPoly(*f_, std::move(r));
    }

    bool coeffs_in_subfield(u32 m) const {
        for (u64 v : c_)
            if (!f_->in_subfield(v, m)) return false;
        return true;
    }

    // frobenius applied coefficientwise: c -> c^{p^m}
    UniPoly coeff_frobenius(u32 m) const {
        u64 pm = 1;
        for (u32 i = 0; i < m; ++i) pm *= f_->p();
        std::vector<u64> r(c_);
        for (auto& v : r) v = f_->powu(v, pm);
        return UniPoly(*f_, std::move(r));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    const Field* f_;
    std::vector<u64> c_;
};

inline UniPoly reversal(const UniPoly& h) { return h.reversal(); }

inline u64 eval_uni(const UniPoly& f, u64 x) { return f.eval(x); }

// monic gcd; gcd(0, 0) = 0
inline UniPoly gcd_uni(UniPoly a, UniPoly b) {
    a.check(b);
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Does the monic quadratic-style test: f of degree exactly 2 over the field
// of f has two distinct roots in the subfield F_{p^m} iff its discriminant
// is a nonzero square there.  Characteristic 2 is rejected (no discriminant
// criterion); so is any f whose coefficients leave the subfield.
inline bool quadratic_distinct_roots_in(const UniPoly& f, u32 m) {
    const Field& F = f.field();
    if (f.deg() != 2) throw FieldError("quadratic root test needs degree exactly 2");
    if (F.p() == 2) throw FieldError("quadratic root test unavailable in characteristic 2");
    if (!f.coeffs_in_subfield(m)) throw FieldError("quadratic root test: coefficients outside the target subfield");
    u64 a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    u64 disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)));
    if (disc == 0) return false;
    u64 pm = 1;
    for (u32 i = 0; i < m; ++i) pm *= F.p();
    return F.powu(disc, (pm - 1) / 2) == 1;
}

// the two roots when quadratic_distinct_roots_in holds and the square root
// exists in the ambient field; empty otherwise
inline std::vector<u64> quadratic_roots(const UniPoly& f) {
    const Field& F = f.field();
    if (f.deg() != 2 || F.p() == 2) return {};
    u64 a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    u64 disc = F.sub(F.mul(b, b), F.mul(F.from_int(4), F.mul(a, c)));
    if (disc == 0) return {};
    if (F.powu(disc, (F.size() - 1) / 2) != 1) return {};
    u64 s = F.elem_exp(F.elem_log(disc) / 2);
    u64 i2a = F.inv(F.mul(F.from_int(2), a));
    return {F.mul(F.sub(F.neg(b), s), i2a), F.mul(F.add(F.neg(b), s), i2a)};
}

}  // namespace fracperm
