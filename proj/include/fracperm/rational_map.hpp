#pragma once

#include "bipoly.hpp"

#include <optional>

namespace fracperm {

// Univariate fraction N(x)/D(x) in lowest terms with monic denominator.
// A polynomial is the D = 1 case.
class RationalMap {
public:
    RationalMap(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den)) {
        num_.check(den_);
        if (den_.is_zero()) throw FieldError("rational map with zero denominator");
        UniPoly g = gcd_uni(num_, den_);
        if (g.deg() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        u64 il = den_.field().inv(den_.lead());
        num_ = num_.scaled(il);
        den_ = den_.scaled(il);
    }

    explicit RationalMap(UniPoly num) : num_(std::move(num)), den_(num_.field(), {1}) {}

    static RationalMap from_ints(const Field& f, const std::vector<i64>& num, const std::vector<i64>& den) {
        return RationalMap(UniPoly::from_ints(f, num), UniPoly::from_ints(f, den));
    }

    const Field& field() const { return num_.field(); }
    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_polynomial() const { return den_.deg() == 0; }

    // value at x, or nothing on a denominator zero
    std::optional<u64> eval(u64 x) const {
        u64 d = den_.eval(x);
        if (d == 0) return std::nullopt;
        return field().div(num_.eval(x), d);
    }

private:
    UniPoly num_, den_;
};

// N(x) D(y) - N(y) D(x): vanishes exactly on pairs the map cannot separate
// (and on the diagonal).  Takes the fraction as given, no normalization.
inline BiPoly curve_numerator(const UniPoly& num, const UniPoly& den) {
    num.check(den);
    BiPoly Nx = BiPoly::from_uni_x(num);
    BiPoly Ny = BiPoly::from_uni_y(num);
    BiPoly Dx = BiPoly::from_uni_x(den);
    BiPoly Dy = BiPoly::from_uni_y(den);
    return Nx * Dy - Ny * Dx;
}

inline BiPoly curve_numerator(const RationalMap& g) { return curve_numerator(g.num(), g.den()); }

// the curve numerator divided by (x - y); the division is always exact
inline BiPoly difference_quotient(const UniPoly& num, const UniPoly& den) {
    BiPoly H = curve_numerator(num, den);
    if (H.is_zero()) return H;
    BiPoly xy = BiPoly::from_int_grid(num.field(), {{0, -1}, {1}});
    return exact_divide(H, xy);
}

inline BiPoly difference_quotient(const RationalMap& g) {
    return difference_quotient(g.num(), g.den());
}

}  // namespace fracperm
