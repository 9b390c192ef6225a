#ifndef TQF_INTS_HPP
#define TQF_INTS_HPP

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tqf {

using i64 = long long;
using i128 = __int128;

inline i128 iabs(i128 x) { return x < 0 ? -x : x; }

inline i64 checked_narrow(i128 x) {
    if (x > i128(INT64_MAX) || x < i128(INT64_MIN))
        throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<i64>(x);
}

inline std::string to_string(i128 x) {
    if (x == 0) return "0";
    bool neg = x < 0;
    i128 v = neg ? -x : x;
    std::string s;
    while (v > 0) {
        s += char('0' + int(v % 10));
        v /= 10;
    }
    if (neg) s += '-';
    return std::string(s.rbegin(), s.rend());
}

inline i128 gcd128(i128 a, i128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// floor(a/b), exact for negative a
inline i128 floor_div(i128 a, i128 b) {
    if (b < 0) { a = -a; b = -b; }
    i128 q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b) {
    if (b < 0) { a = -a; b = -b; }
    i128 q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

// largest r with r*r <= n (n >= 0)
inline i128 isqrt(i128 n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    if (n == 0) return 0;
    i128 r = (i128)std::sqrt((double)(i64)(n > i128(INT64_MAX) ? INT64_MAX : (i64)n));
    if (n > i128(INT64_MAX)) {
        // rough initial guess from long double
        long double ld = 0;
        i128 t = n;
        long double scale = 1;
        while (t > i128(INT64_MAX)) { t >>= 2; scale *= 2; }
        ld = sqrtl((long double)(i64)t) * scale;
        r = (i128)ld;
    }
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

inline int valuation(i128 n, i64 p) {
    if (n == 0) return -1;  // convention: caller must handle
    int v = 0;
    n = iabs(n);
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

inline i128 unit_part(i128 n, i64 p) {
    if (n == 0) throw std::domain_error("unit_part of zero");
    while (n % p == 0) n /= p;
    return n;
}

// Legendre symbol (a/p) for odd prime p; a may be any integer prime to p.
inline int legendre(i128 a, i64 p) {
    i128 m = a % p;
    if (m < 0) m += p;
    if (m == 0) throw std::domain_error("legendre of multiple of p");
    // Euler criterion by fast exponentiation mod p
    i64 base = (i64)m, e = (p - 1) / 2, mod = p;
    i64 r = 1;
    while (e) {
        if (e & 1) r = (i64)((i128)r * base % mod);
        base = (i64)((i128)base * base % mod);
        e >>= 1;
    }
    return r == 1 ? 1 : (r == mod - 1 ? -1 : 0);
}

inline bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using Mat3 = std::array<std::array<i128, 3>, 3>;
using Vec3 = std::array<i128, 3>;

inline Vec3 mat_vec(const Mat3& m, const Vec3& v) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i)
        r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
}

inline Mat3 mat_mul(const Mat3& a, const Mat3& b) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
    return r;
}

inline i128 det3(const Mat3& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
         - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
         + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

inline Mat3 mat_transpose(const Mat3& m) {
    Mat3 r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = m[j][i];
    return r;
}

inline Mat3 identity3() {
    return Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
}

// U^T * F * U
inline Mat3 congruence(const Mat3& f, const Mat3& u) {
    return mat_mul(mat_transpose(u), mat_mul(f, u));
}

// adjugate: adj(m) * m = det(m) * I
inline Mat3 adjugate(const Mat3& m) {
    Mat3 a{};
    a[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    a[0][1] = -(m[0][1] * m[2][2] - m[0][2] * m[2][1]);
    a[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    a[1][0] = -(m[1][0] * m[2][2] - m[1][2] * m[2][0]);
    a[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    a[1][2] = -(m[0][0] * m[1][2] - m[0][2] * m[1][0]);
    a[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    a[2][1] = -(m[0][0] * m[2][1] - m[0][1] * m[2][0]);
    a[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return a;
}

// Column-style Hermite normal form of a 3 x n integer matrix given as columns.
// Returns a 3x3 basis matrix (columns) of the lattice generated by the input
// columns; input must have full rank 3.
Mat3 hnf_basis(const std::array<Vec3, 6>& cols, int ncols);

}  // namespace tqf

#endif
