#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracperm {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// a configured work or size cap was exceeded; callers distinguish this
// from malformed input
struct CapError : FieldError {
    using FieldError::FieldError;
};

namespace detail {

inline bool is_prime_u64(u64 p) {
    if (p < 2) return false;
    for (u64 d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Bootstrap arithmetic on F_p[x] coefficient vectors (low-degree-first),
// used only while constructing a field modulus.
inline std::vector<u32> pol_trim(std::vector<u32> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

inline std::vector<u32> pol_mul(const std::vector<u32>& a, const std::vector<u32>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u32> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<u32>((r[i + j] + u64(a[i]) * b[j]) % p);
    return pol_trim(std::move(r));
}

inline u64 inv_mod_prime(u64 a, u64 p) {
    u64 r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// remainder of a by monic m
inline std::vector<u32> pol_mod(std::vector<u32> a, const std::vector<u32>& m, u64 p) {
    while (a.size() >= m.size()) {
        u64 c = a.back();
        if (c) {
            size_t off = a.size() - m.size();
            for (size_t j = 0; j + 1 < m.size(); ++j)
                a[off + j] = static_cast<u32>((a[off + j] + (p - c) * m[j]) % p);
        }
        a.pop_back();
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

inline std::vector<u32> pol_gcd(std::vector<u32> a, std::vector<u32> b, u64 p) {
    while (!b.empty()) {
        u64 lc = b.back();
        if (lc != 1) {
            u64 il = inv_mod_prime(lc, p);
            for (auto& c : b) c = static_cast<u32>(c * il % p);
        }
        auto r = pol_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline std::vector<u32> pol_powmod_x(u64 e, const std::vector<u32>& m, u64 p) {
    std::vector<u32> base = pol_mod({0, 1}, m, p);
    std::vector<u32> r = {1};
    while (e) {
        if (e & 1) r = pol_mod(pol_mul(r, base, p), m, p);
        base = pol_mod(pol_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

// monic m of degree n >= 2 without roots already screened out; irreducible
// iff gcd(x^{p^k} - x, m) = 1 for all k <= n/2
inline bool is_irreducible(const std::vector<u32>& m, u64 p) {
    size_t n = m.size() - 1;
    for (size_t k = 1; k <= n / 2; ++k) {
        u64 e = 1;
        for (size_t i = 0; i < k; ++i) e *= p;
        auto g = pol_powmod_x(e, m, p);
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<u32>((g[1] + p - 1) % p);
        g = pol_trim(std::move(g));
        if (pol_gcd(m, g, p).size() != 1) return false;
    }
    return true;
}

inline u64 pol_eval(const std::vector<u32>& a, u64 x, u64 p) {
    u64 r = 0;
    for (size_t i = a.size(); i-- > 0;) r = (r * x + a[i]) % p;
    return r;
}

// Lexicographically smallest monic irreducible of degree n over F_p,
// candidates ordered coefficient-low-first with c_0 varying slowest.
// Degree 7 over F_2 is pinned to x^7 + x + 1 rather than the lex-smallest
// x^7 + x^3 + 1; the pin is part of the published field conventions.
inline std::vector<u32> smallest_modulus(u64 p, u32 n) {
    if (p == 2 && n == 7) return {1, 1, 0, 0, 0, 0, 0, 1};
    if (n == 1) return {0, 1};
    u64 total = 1;
    for (u32 i = 0; i < n; ++i) total *= p;
    // c_0 = 0 would make 0 a root, so start past that whole block
    for (u64 t = total / p; t < total; ++t) {
        std::vector<u32> cand(n + 1, 0);
        cand[n] = 1;
        for (u32 j = 0; j < n; ++j) {
            u64 place = 1;
            for (u32 s = 0; s < n - 1 - j; ++s) place *= p;
            cand[j] = static_cast<u32>(t / place % p);
        }
        bool root = false;
        for (u64 x = 1; x < p && !root; ++x) root = pol_eval(cand, x, p) == 0;
        if (root) continue;
        if (is_irreducible(cand, p)) return cand;
    }
    throw FieldError("no irreducible modulus found");
}

}  // namespace detail

// Finite field F_{p^n} with dense exp/log tables.  Elements are integer
// codes sum c_i p^i with c_0 least significant; code 0 is zero.  Instances
// are immutable and shared through make(); two contexts are the same field
// only if they are the same object, and every cross-context operation is a
// hard error (no implicit embeddings anywhere).
class Field {
public:
    static u64& size_cap() {
        static u64 cap = u64(1) << 22;
        return cap;
    }

    static const Field& make(u64 p, u32 n) {
        if (!detail::is_prime_u64(p))
            throw FieldError("characteristic must be prime: " + std::to_string(p));
        if (n < 1) throw FieldError("extension degree must be positive");
        u64 N = 1;
        for (u32 i = 0; i < n; ++i) {
            if (N > size_cap() / p) throw CapError("field size cap exceeded for " + std::to_string(p) + "^" + std::to_string(n));
            N *= p;
        }
        static std::map<std::pair<u64, u32>, std::unique_ptr<Field>> registry;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto& slot = registry[{p, n}];
        if (!slot) slot.reset(new Field(p, n));
        return *slot;
    }

    u64 p() const { return p_; }
    u32 n() const { return n_; }
    u64 size() const { return N_; }
    const std::vector<u32>& modulus() const { return mod_; }
    std::string name() const { return std::to_string(p_) + "^" + std::to_string(n_); }

    u64 add(u64 a, u64 b) const {
        if (p_ == 2) return a ^ b;
        u64 r = 0, place = 1;
        while (a || b) {
            r += (a % p_ + b % p_) % p_ * place;
            place *= p_;
            a /= p_;
            b /= p_;
        }
        return r;
    }

    u64 neg(u64 a) const {
        if (p_ == 2) return a;
        u64 r = 0, place = 1;
        while (a) {
            u64 d = a % p_;
            if (d) r += (p_ - d) * place;
            place *= p_;
            a /= p_;
        }
        return r;
    }

    u64 sub(u64 a, u64 b) const { return add(a, neg(b)); }

    u64 mul(u64 a, u64 b) const {
        if (a == 0 || b == 0) return 0;
        u64 s = u64(log_[a]) + log_[b];
        if (s >= N_ - 1) s -= N_ - 1;
        return exp_[s];
    }

    u64 inv(u64 a) const {
        if (a == 0) throw FieldError("division by zero in F_" + name());
        u64 l = log_[a];
        return exp_[l == 0 ? 0 : N_ - 1 - l];
    }

    u64 div(u64 a, u64 b) const { return mul(a, inv(b)); }

    // a^e for e >= 0, with 0^0 = 1
    u64 powu(u64 a, u64 e) const {
        if (a == 0) return e == 0 ? 1 : 0;
        if (N_ == 2) return 1;
        return exp_[u64(log_[a]) * (e % (N_ - 1)) % (N_ - 1)];
    }

    // a^e for any integer e; negative e needs a != 0
    u64 pows(u64 a, i64 e) const {
        if (e >= 0) return powu(a, u64(e));
        return inv(powu(a, u64(-e)));
    }

    u64 elem_log(u64 a) const {
        if (a == 0) throw FieldError("log of zero");
        return log_[a];
    }

    u64 elem_exp(u64 k) const { return exp_[k % (N_ - 1)]; }

    u64 order(u64 a) const {
        if (a == 0) throw FieldError("multiplicative order of zero");
        return (N_ - 1) / std::gcd(N_ - 1, u64(log_[a]));
    }

    u64 primitive() const { return gen_; }

    std::vector<u64> primitives(u64 cap = u64(1) << 16) const {
        if (N_ > cap) throw CapError("field too large for primitive enumeration cap");
        std::vector<u64> out;
        for (u64 a = 1; a < N_; ++a)
            if (order(a) == N_ - 1) out.push_back(a);
        return out;
    }

    // e fixed by the Frobenius power x -> x^{p^m}; requires m | n.
    // This is the only sanctioned membership test for subfields.
    bool in_subfield(u64 e, u32 m) const {
        if (m == 0 || n_ % m != 0)
            throw FieldError("no subfield of degree " + std::to_string(m) + " in F_" + name());
        if (e == 0) return true;
        u64 pm = 1;
        for (u32 i = 0; i < m; ++i) pm *= p_;
        return u64(log_[e]) * ((pm - 1) % (N_ - 1)) % (N_ - 1) == 0;
    }

    std::vector<u64> subfield_elements(u32 m) const {
        std::vector<u64> out;
        for (u64 e = 0; e < N_; ++e)
            if (in_subfield(e, m)) out.push_back(e);
        return out;
    }

    u64 from_int(i64 k) const {
        i64 r = k % i64(p_);
        if (r < 0) r += i64(p_);
        return u64(r);
    }

    std::vector<u32> digits(u64 code) const {
        std::vector<u32> d(n_, 0);
        for (u32 i = 0; i < n_ && code; ++i) {
            d[i] = static_cast<u32>(code % p_);
            code /= p_;
        }
        return d;
    }

    u64 encode(const std::vector<u32>& d) const {
        u64 c = 0;
        for (size_t i = d.size(); i-- > 0;) c = c * p_ + d[i] % p_;
        return c;
    }

private:
    Field(u64 p, u32 n) : p_(p), n_(n) {
        N_ = 1;
        for (u32 i = 0; i < n; ++i) N_ *= p;
        mod_ = detail::smallest_modulus(p, n);
        build_tables();
    }

    void build_tables() {
        exp_.assign(N_ - 1, 0);
        log_.assign(N_, 0);
        for (u64 g = 1; g < N_; ++g) {
            if (fill_exp(g)) {
                gen_ = g;
                break;
            }
        }
        if (gen_ == 0 && N_ > 2) throw FieldError("no generator found");
        if (N_ == 2) gen_ = 1;
        for (u64 k = 0; k + 1 < N_; ++k) log_[exp_[k]] = static_cast<u32>(k);
    }

    // Fills exp_ with successive powers of g.  Returns false as soon as a
    // power hits 1 early; completing all N-2 steps proves g generates the
    // multiplicative group.
    bool fill_exp(u64 g) {
        if (g == 0) return false;
        exp_[0] = 1;
        if (p_ == 2) {
            u64 modmask = 0;
            for (u32 i = 0; i <= n_; ++i)
                if (mod_[i]) modmask |= u64(1) << i;
            u64 cur = 1;
            for (u64 k = 1; k + 1 < N_; ++k) {
                u64 acc = 0, tmp = cur, gg = g;
                while (gg) {
                    if (gg & 1) acc ^= tmp;
                    tmp <<= 1;
                    if (tmp >> n_ & 1) tmp ^= modmask;
                    gg >>= 1;
                }
                cur = acc;
                if (cur == 1) return false;
                exp_[k] = static_cast<u32>(cur);
            }
        } else {
            std::vector<u32> cd = digits(1), gd = digits(g), buf(2 * n_, 0);
            for (u64 k = 1; k + 1 < N_; ++k) {
                std::fill(buf.begin(), buf.end(), 0);
                for (u32 i = 0; i < n_; ++i) {
                    if (!cd[i]) continue;
                    for (u32 j = 0; j < n_; ++j)
                        buf[i + j] = static_cast<u32>((buf[i + j] + u64(cd[i]) * gd[j]) % p_);
                }
                for (u32 i = 2 * n_ - 1; i >= n_; --i) {
                    u32 c = buf[i];
                    if (!c) continue;
                    buf[i] = 0;
                    for (u32 j = 0; j < n_; ++j)
                        buf[i - n_ + j] = static_cast<u32>((buf[i - n_ + j] + u64(p_ - c) * mod_[j]) % p_);
                }
                u64 code = 0;
                for (u32 i = n_; i-- > 0;) code = code * p_ + buf[i];
                std::copy(buf.begin(), buf.begin() + n_, cd.begin());
                if (code == 1) return false;
                exp_[k] = static_cast<u32>(code);
            }
        }
        return true;
    }

    u64 p_, n_, N_ = 0, gen_ = 0;
    std::vector<u32> mod_;
    std::vector<u32> exp_;
    std::vector<u32> log_;
};

// Checked element: carries its context; mixing contexts is a hard error.
struct Elem {
    const Field* f = nullptr;
    u64 code = 0;

    Elem() = default;
    Elem(const Field& fld, u64 c) : f(&fld), code(c) {}

    void check(const Elem& o) const {
        if (f != o.f) throw FieldError("elements from different field contexts");
    }
    Elem operator+(const Elem& o) const { check(o); return {*f, f->add(code, o.code)}; }
    Elem operator-(const Elem& o) const { check(o); return {*f, f->sub(code, o.code)}; }
    Elem operator*(const Elem& o) const { check(o); return {*f, f->mul(code, o.code)}; }
    Elem operator/(const Elem& o) const { check(o); return {*f, f->div(code, o.code)}; }
    Elem operator-() const { return {*f, f->neg(code)}; }
    bool operator==(const Elem& o) const { check(o); return code == o.code; }
    bool operator!=(const Elem& o) const { return !(*this == o); }
    Elem pow(i64 e) const { return {*f, f->pows(code, e)}; }
    bool is_zero() const { return code == 0; }
};

}  // namespace fracperm
