#pragma once

#include "unipoly.hpp"

#include <optional>

namespace fracperm {

// Dense bivariate polynomial over a field context: coefficient grid
// g[i][j] of x^i y^j, canonical (no all-zero top row/column).  The zero
// polynomial has an empty grid.
class BiPoly {
public:
    explicit BiPoly(const Field& f) : f_(&f) {}

    BiPoly(const Field& f, std::vector<std::vector<u64>> grid) : f_(&f), g_(std::move(grid)) {
        for (auto& row : g_)
            if (g_.size() && row.size() != g_[0].size())
                throw FieldError("ragged bivariate coefficient grid");
        trim();
    }

    // short rows are padded with zeros on the right
    static BiPoly from_int_grid(const Field& f, const std::vector<std::vector<i64>>& rows) {
        size_t ny = 0;
        for (auto& r : rows) ny = std::max(ny, r.size());
        std::vector<std::vector<u64>> g;
        for (auto& r : rows) {
            std::vector<u64> row(ny, 0);
            for (size_t j = 0; j < r.size(); ++j) row[j] = f.from_int(r[j]);
            g.push_back(std::move(row));
        }
        return BiPoly(f, std::move(g));
    }

    // p(x) as a bivariate in x
    static BiPoly from_uni_x(const UniPoly& p) {
        std::vector<std::vector<u64>> g;
        for (u64 c : p.coeffs()) g.push_back({c});
        return BiPoly(p.field(), std::move(g));
    }

    // p(y) as a bivariate in y
    static BiPoly from_uni_y(const UniPoly& p) {
        std::vector<std::vector<u64>> g;
        if (!p.is_zero()) g.push_back(p.coeffs());
        return BiPoly(p.field(), std::move(g));
    }

    const Field& field() const { return *f_; }
    bool is_zero() const { return g_.empty(); }
    int deg_x() const { return static_cast<int>(g_.size()) - 1; }
    int deg_y() const { return g_.empty() ? -1 : static_cast<int>(g_[0].size()) - 1; }

    u64 at(size_t i, size_t j) const {
        if (i >= g_.size() || g_.empty() || j >= g_[0].size()) return 0;
        return g_[i][j];
    }

    void check(const BiPoly& o) const {
        if (f_ != o.f_) throw FieldError("bivariate operands from different field contexts");
    }

    u64 eval(u64 x, u64 y) const {
        u64 r = 0;
        for (size_t i = g_.size(); i-- > 0;) {
            u64 row = 0;
            for (size_t j = g_[i].size(); j-- > 0;) row = f_->add(f_->mul(row, y), g_[i][j]);
            r = f_->add(f_->mul(r, x), row);
        }
        return r;
    }

    // partial evaluation x = a, result as a polynomial in y
    UniPoly eval_x(u64 a) const {
        std::vector<u64> out(deg_y() + 1, 0);
        for (size_t j = 0; j < out.size(); ++j) {
            u64 r = 0;
            for (size_t i = g_.size(); i-- > 0;) r = f_->add(f_->mul(r, a), g_[i][j]);
            out[j] = r;
        }
        return UniPoly(*f_, std::move(out));
    }

    // coefficient of y^j as a polynomial in x
    UniPoly y_slice(size_t j) const {
        std::vector<u64> out;
        for (auto& row : g_) out.push_back(j < row.size() ? row[j] : 0);
        return UniPoly(*f_, std::move(out));
    }

    BiPoly operator+(const BiPoly& o) const { return combined(o, false); }
    BiPoly operator-(const BiPoly& o) const { return combined(o, true); }

    BiPoly operator*(const BiPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return BiPoly(*f_);
        std::vector<std::vector<u64>> r(
            g_.size() + o.g_.size() - 1,
            std::vector<u64>(g_[0].size() + o.g_[0].size() - 1, 0));
        for (size_t i = 0; i < g_.size(); ++i)
            for (size_t j = 0; j < g_[i].size(); ++j) {
                u64 c = g_[i][j];
                if (!c) continue;
                for (size_t k = 0; k < o.g_.size(); ++k)
                    for (size_t l = 0; l < o.g_[k].size(); ++l)
                        r[i + k][j + l] = f_->add(r[i + k][j + l], f_->mul(c, o.g_[k][l]));
            }
        return BiPoly(*f_, std::move(r));
    }

    BiPoly operator-() const {
        auto r = g_;
        for (auto& row : r)
            for (auto& v : row) v = f_->neg(v);
        return BiPoly(*f_, std::move(r));
    }

    bool operator==(const BiPoly& o) const { check(o); return g_ == o.g_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    BiPoly scaled(u64 s) const {
        auto r = g_;
        for (auto& row : r)
            for (auto& v : row) v = f_->mul(v, s);
        return BiPoly(*f_, std::move(r));
    }

    // smallest nonzero coefficient position in (i, j) scan order
    u64 lead_scan() const {
        for (auto& row : g_)
            for (u64 v : row)
                if (v) return v;
        return 0;
    }

    // s with other == s * this, if any
    std::optional<u64> scalar_multiple_of(const BiPoly& o) const {
        check(o);
        if (is_zero() || o.is_zero()) return is_zero() == o.is_zero() ? std::optional<u64>(1) : std::nullopt;
        if (deg_x() != o.deg_x() || deg_y() != o.deg_y()) return std::nullopt;
        u64 s = 0;
        for (size_t i = 0; i < g_.size(); ++i)
            for (size_t j = 0; j < g_[i].size(); ++j) {
                u64 a = g_[i][j], b = o.g_[i][j];
                if ((a == 0) != (b == 0)) return std::nullopt;
                if (a == 0) continue;
                u64 r = f_->div(b, a);
                if (s == 0) s = r;
                else if (s != r) return std::nullopt;
            }
        return s;
    }

    // grid mirrored in both variables: x^dx y^dy * p(1/x, 1/y)
    BiPoly reciprocal_transform() const {
        std::vector<std::vector<u64>> r(g_.size());
        for (size_t i = 0; i < g_.size(); ++i) {
            auto& src = g_[g_.size() - 1 - i];
            r[i].assign(src.rbegin(), src.rend());
        }
        return BiPoly(*f_, std::move(r));
    }

    BiPoly swap_xy() const {
        if (is_zero()) return *this;
        std::vector<std::vector<u64>> r(g_[0].size(), std::vector<u64>(g_.size(), 0));
        for (size_t i = 0; i < g_.size(); ++i)
            for (size_t j = 0; j < g_[i].size(); ++j) r[j][i] = g_[i][j];
        return BiPoly(*f_, std::move(r));
    }

private:
    BiPoly combined(const BiPoly& o, bool subtract) const {
        check(o);
        size_t nx = std::max(g_.size(), o.g_.size());
        size_t ny = 0;
        if (!g_.empty()) ny = g_[0].size();
        if (!o.g_.empty()) ny = std::max(ny, o.g_[0].size());
        std::vector<std::vector<u64>> r(nx, std::vector<u64>(ny, 0));
        for (size_t i = 0; i < nx; ++i)
            for (size_t j = 0; j < ny; ++j)
                r[i][j] = subtract ? f_->sub(at(i, j), o.at(i, j)) : f_->add(at(i, j), o.at(i, j));
        return BiPoly(*f_, std::move(r));
    }

    void trim() {
        auto row_zero = [](const std::vector<u64>& r) {
            for (u64 v : r)
                if (v) return false;
            return true;
        };
        while (!g_.empty() && row_zero(g_.back())) g_.pop_back();
        if (g_.empty()) return;
        size_t ny = g_[0].size();
        while (ny > 0) {
            bool col_zero = true;
            for (auto& row : g_)
                if (row[ny - 1]) { col_zero = false; break; }
            if (!col_zero) break;
            --ny;
        }
        if (ny == 0) {
            g_.clear();
            return;
        }
        for (auto& row : g_) row.resize(ny);
    }

    const Field* f_;
    std::vector<std::vector<u64>> g_;
};

inline u64 eval_bi(const BiPoly& f, u64 x, u64 y) { return f.eval(x, y); }

// Exact quotient F / G with y as the main variable; division steps happen in
// (F[x])[y], every leading-slice division must be exact, and the result is
// verified by multiplication.  Throws when F is not a multiple of G.
inline BiPoly exact_divide(const BiPoly& F, const BiPoly& G) {
    F.check(G);
    if (G.is_zero()) throw FieldError("bivariate division by zero");
    const Field& K = F.field();
    if (F.is_zero()) return BiPoly(K);
    int dyG = G.deg_y();
    UniPoly Ly = G.y_slice(dyG);
    BiPoly R = F, Q(K);
    std::vector<UniPoly> qslices;
    int steps = F.deg_y() - dyG;
    if (steps < 0) throw FieldError("inexact bivariate division: main degree too small");
    for (int k = steps; k >= 0; --k) qslices.push_back(UniPoly(K));
    while (!R.is_zero() && R.deg_y() >= dyG) {
        int dy = R.deg_y();
        UniPoly Ry = R.y_slice(dy);
        UniPoly q(K);
        try {
            q = Ry.exact_div(Ly);
        } catch (const FieldError&) {
            throw FieldError("inexact bivariate division: leading slice not divisible");
        }
        if (dy - dyG > steps) throw FieldError("inexact bivariate division");
        qslices[dy - dyG] = q;
        // R -= q(x) y^{dy-dyG} * G
        BiPoly term = BiPoly::from_uni_x(q);
        BiPoly ypow(K);
        {
            std::vector<std::vector<u64>> g(1, std::vector<u64>(dy - dyG + 1, 0));
            g[0][dy - dyG] = 1;
            ypow = BiPoly(K, std::move(g));
        }
        R = R - term * ypow * G;
        if (!R.is_zero() && R.deg_y() >= dy) throw FieldError("bivariate division failed to reduce");
    }
    if (!R.is_zero()) throw FieldError("inexact bivariate division: nonzero remainder");
    // assemble Q from slices
    BiPoly acc(K);
    for (int k = 0; k <= steps; ++k) {
        if (qslices[k].is_zero()) continue;
        std::vector<std::vector<u64>> g(1, std::vector<u64>(k + 1, 0));
        g[0][k] = 1;
        acc = acc + BiPoly::from_uni_x(qslices[k]) * BiPoly(K, std::move(g));
    }
    if (acc * G != F) throw FieldError("bivariate division verification failed");
    return acc;
}

inline BiPoly reciprocal_transform(const BiPoly& F) { return F.reciprocal_transform(); }

}  // namespace fracperm
