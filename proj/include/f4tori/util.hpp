#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace f4tori {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// 4x4 integer matrix, used for root-basis actions and exponent calculus.
struct Mat4 {
    std::array<std::array<i64, 4>, 4> a{};

    static Mat4 identity() {
        Mat4 m;
        for (int i = 0; i < 4; ++i) m.a[i][i] = 1;
        return m;
    }

    Mat4 operator*(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                i64 s = 0;
                for (int k = 0; k < 4; ++k) s += a[i][k] * o.a[k][j];
                r.a[i][j] = s;
            }
        return r;
    }

    Mat4 operator+(const Mat4& o) const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.a[i][j] = a[i][j] + o.a[i][j];
        return r;
    }

    bool operator==(const Mat4& o) const { return a == o.a; }

    Mat4 negated() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.a[i][j] = -a[i][j];
        return r;
    }
};

inline u64 mulmod(u64 x, u64 y, u64 m) { return (u64)((u128)x * y % m); }

inline u64 addmod(u64 x, u64 y, u64 m) {
    u64 s = x + y;
    if (s >= m || s < x) s -= m;
    return s;
}

inline u64 negmod(u64 x, u64 m) { return x == 0 ? 0 : m - x; }

inline u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// x*B^T-free row action: y_i = sum_j B[i][j]*x_j  (mod m), entries of B may be negative.
inline std::array<u64, 4> apply_mat_mod(const Mat4& B, const std::array<u64, 4>& x, u64 m) {
    std::array<u64, 4> y{};
    for (int i = 0; i < 4; ++i) {
        i128 s = 0;
        for (int j = 0; j < 4; ++j) s += (i128)B.a[i][j] * (i128)x[j];
        i128 r = s % (i128)m;
        if (r < 0) r += m;
        y[i] = (u64)r;
    }
    return y;
}

inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Extended gcd: g = gcd(a,b), a*x + b*y = g.
inline i128 egcd128(i128 a, i128 b, i128& x, i128& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? -a : a;
    }
    i128 x1, y1;
    i128 g = egcd128(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline std::string to_string_i128(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    u128 u = neg ? (u128)(-v) : (u128)v;
    std::string s;
    while (u) {
        s.insert(s.begin(), char('0' + (int)(u % 10)));
        u /= 10;
    }
    if (neg) s.insert(s.begin(), '-');
    return s;
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

}  // namespace f4tori
