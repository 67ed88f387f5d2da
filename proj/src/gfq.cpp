#include "f4tori/gfq.hpp"

#include <algorithm>
#include <numeric>

namespace f4tori {

bool is_odd_prime_power(i64 q, i64& p_out, int& e_out) {
    if (q < 3 || q % 2 == 0) return false;
    i64 p = 0;
    for (i64 d = 3; d * d <= q; d += 2)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) p = q;
    i64 v = q;
    int e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    if (v != 1) return false;
    p_out = p;
    e_out = e;
    return true;
}

Field::Field(i64 q, int k, i64 max_q) : q_(q), k_(k) {
    require(k >= 1 && k <= 24, "field extension degree out of range");
    i64 p;
    int e;
    require(is_odd_prime_power(q, p, e), "q must be an odd prime power");
    require(q <= max_q, "q exceeds the configured bound");
    p_ = p;
    deg_ = e * k;
    u128 o = 1;
    for (int i = 0; i < k; ++i) {
        o *= (u128)q;
        require(o < ((u128)1 << 63), "field too large for exact 64-bit exponents");
    }
    order_ = (u64)(o - 1);
}

u64 Field::pow(u64 a, i64 e) const {
    i128 v = (i128)(a % order_) * (i128)e % (i128)order_;
    if (v < 0) v += order_;
    return (u64)v;
}

bool Field::root_of_minus_one_exists(i64 m) const {
    u64 am = m < 0 ? (u64)(-m) : (u64)m;
    require(am != 0, "zero exponent for a root of -1");
    return order_ % (2 * am) == 0;
}

u64 Field::root_of_minus_one(i64 m) const {
    u64 am = m < 0 ? (u64)(-m) : (u64)m;
    require(am != 0, "zero exponent for a root of -1");
    require(order_ % (2 * am) == 0,
            "no root: 2m does not divide the multiplicative order; enlarge k");
    u64 z = order_ / (2 * am);
    return m < 0 ? inv(z) : z;
}

// --- polynomial realization ---

namespace {

std::vector<int> poly_trim(std::vector<int> a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& mod, i64 p) {
    std::vector<i64> t(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) t[i + j] = (t[i + j] + (i64)a[i] * b[j]) % p;
    // reduce by the monic modulus
    int dm = (int)mod.size() - 1;
    for (int i = (int)t.size() - 1; i >= dm; --i) {
        i64 c = t[i] % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j)
            t[i - dm + j] = ((t[i - dm + j] - c * mod[j]) % p + p) % p;
    }
    std::vector<int> r(dm, 0);
    for (int i = 0; i < dm && i < (int)t.size(); ++i) r[i] = (int)((t[i] % p + p) % p);
    return r;
}

std::vector<int> poly_powmod(std::vector<int> b, u128 e, const std::vector<int>& mod, i64 p) {
    std::vector<int> r{1};
    r.resize(mod.size() - 1, 0);
    b.resize(mod.size() - 1, 0);
    while (e) {
        if (e & 1) r = poly_mulmod(r, b, mod, p);
        b = poly_mulmod(b, b, mod, p);
        e >>= 1;
    }
    return r;
}

bool poly_is_one(const std::vector<int>& a) {
    if (a.empty() || a[0] != 1) return false;
    for (size_t i = 1; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

bool poly_is_x(const std::vector<int>& a) {
    if (a.size() < 2 || a[0] != 0 || a[1] != 1) return false;
    for (size_t i = 2; i < a.size(); ++i)
        if (a[i] != 0) return false;
    return true;
}

// x^{p^d} mod f, by repeated p-powering.
std::vector<int> x_frobenius_power(const std::vector<int>& mod, i64 p, int d) {
    std::vector<int> x(mod.size() - 1, 0);
    if (mod.size() - 1 > 1)
        x[1] = 1;
    else
        x[0] = (int)(((-mod[0]) % p + p) % p);  // degree-1 modulus: x = -c0
    for (int i = 0; i < d; ++i) x = poly_powmod(x, (u128)p, mod, p);
    return x;
}

bool is_irreducible(const std::vector<int>& mod, i64 p) {
    int d = (int)mod.size() - 1;
    // x^{p^d} == x and gcd-free at proper divisors: x^{p^{d/l}} != x.
    auto xf = x_frobenius_power(mod, p, d);
    std::vector<int> x(mod.size() - 1, 0);
    if (d > 1) x[1] = 1;
    else x[0] = (int)(((-mod[0]) % p + p) % p);
    if (poly_trim(xf) != poly_trim(x)) return false;
    for (int l = 2; l <= d; ++l) {
        if (d % l != 0) continue;
        auto xe = x_frobenius_power(mod, p, d / l);
        if (poly_trim(xe) == poly_trim(x)) return false;
    }
    return true;
}

}  // namespace

void Field::realize() const {
    if (realized_) return;
    // Deterministic irreducible polynomial: monic of degree deg_ over F_p with
    // lexicographically least coefficient vector (c_{deg-1}, ..., c_0).
    std::vector<int> mod(deg_ + 1, 0);
    mod[deg_] = 1;
    bool found = false;
    std::vector<int> cnt(deg_, 0);
    while (!found) {
        for (int i = 0; i < deg_; ++i) mod[i] = cnt[deg_ - 1 - i];
        if (is_irreducible(mod, p_)) {
            found = true;
            break;
        }
        int i = deg_ - 1;
        while (i >= 0 && cnt[i] == p_ - 1) cnt[i--] = 0;
        require(i >= 0, "no irreducible polynomial found");
        cnt[i] += 1;
    }
    mod_ = mod;

    factors_.clear();
    u64 n = order_;
    for (u64 d = 2; d * d <= n; ++d)
        while (n % d == 0) {
            if (factors_.empty() || factors_.back() != d) factors_.push_back(d);
            n /= d;
        }
    if (n > 1) factors_.push_back(n);

    // Least primitive generator in the element enumeration order
    // (coefficient vectors (c_{deg-1},...,c_0) ascending).
    std::vector<int> ecnt(deg_, 0);
    while (true) {
        int i = deg_ - 1;
        while (i >= 0 && ecnt[i] == (int)p_ - 1) ecnt[i--] = 0;
        require(i >= 0, "no primitive generator found");
        ecnt[i] += 1;
        std::vector<int> cand(deg_, 0);
        for (int t = 0; t < deg_; ++t) cand[t] = ecnt[deg_ - 1 - t];
        bool primitive = true;
        for (u64 f : factors_) {
            auto e = poly_powmod(cand, (u128)(order_ / f), mod_, p_);
            if (poly_is_one(e)) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            auto full = poly_powmod(cand, (u128)order_, mod_, p_);
            require(poly_is_one(full), "generator order check failed");
            gen_ = cand;
            break;
        }
    }
    realized_ = true;
    (void)poly_is_x;
}

const std::vector<int>& Field::modulus() const {
    realize();
    return mod_;
}

Field::Poly Field::generator_poly() const {
    realize();
    return Poly{gen_};
}

Field::Poly Field::to_poly(u64 dlog) const {
    realize();
    return Poly{poly_powmod(gen_, (u128)(dlog % order_), mod_, p_)};
}

Field::Poly Field::poly_mul(const Poly& a, const Poly& b) const {
    realize();
    return Poly{poly_mulmod(a.c, b.c, mod_, p_)};
}

Field::Poly Field::poly_pow(const Poly& a, u128 e) const {
    realize();
    return Poly{poly_powmod(a.c, e, mod_, p_)};
}

}  // namespace f4tori
