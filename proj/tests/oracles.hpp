#pragma once

// Reference computations used only by the tests. Each one takes a different
// route from the library code it checks.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qtoric/polynomial.hpp"

namespace oracle {

using qtoric::Rational;

inline Rational binomial(long n, long k) {
    Rational r = 1;
    for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline Rational factorial(long n) {
    Rational r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

// B_0..B_m with B_1 = -1/2, from sum_{k<=m} C(m+1,k) B_k = 0.
inline std::vector<Rational> bernoulli(long m) {
    std::vector<Rational> b(m + 1);
    b[0] = 1;
    for (long n = 1; n <= m; ++n) {
        Rational s = 0;
        for (long k = 0; k < n; ++k) s += binomial(n + 1, k) * b[k];
        b[n] = -s / (n + 1);
    }
    return b;
}

// Coefficients of (x/2)/sinh(x/2) up to x^d via x/sinh x = sum (2 - 2^{2k}) B_{2k} x^{2k}/(2k)!.
inline std::vector<Rational> ahat_taylor(long d) {
    const auto b = bernoulli(d + 1);
    std::vector<Rational> c(d + 1, 0);
    for (long k = 0; 2 * k <= d; ++k) {
        Rational pow4 = 1, pow2k = 1;
        for (long i = 0; i < k; ++i) pow4 *= 4;
        for (long i = 0; i < 2 * k; ++i) pow2k *= 2;
        c[2 * k] = (2 - pow2k) * b[2 * k] / factorial(2 * k) / pow4;
    }
    return c;
}

// Series in q with Laurent-polynomial coefficients in E = e^{x/2}:
// key (q power, E power).
using Laurent = std::map<std::pair<long, long>, Rational>;

inline Laurent mul(const Laurent& a, const Laurent& b, long q_order) {
    Laurent out;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            if (ka.first + kb.first <= q_order) out[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
    return out;
}

inline Laurent one() { return {{{0, 0}, 1}}; }

// 1 / (1 - c E^e q^k) as a geometric series.
inline Laurent geometric(long k, long e, long c, long q_order) {
    Laurent out;
    Rational cp = 1;
    for (long s = 0; s * k <= q_order; ++s) {
        out[{s * k, s * e}] += cp;
        cp *= c;
    }
    return out;
}

// 1 + c E^e q^k
inline Laurent binom_term(long k, long e, long c) {
    Laurent out = one();
    out[{k, e}] += c;
    return out;
}

// Expands sum c E^a q^j into coefficients [j][d] of q^j x^d using E^a = e^{a x / 2}.
inline std::vector<std::vector<Rational>> to_x(const Laurent& l, long q_order, long d) {
    std::vector<std::vector<Rational>> out(q_order + 1, std::vector<Rational>(d + 1, 0));
    for (const auto& [k, c] : l) {
        Rational pw = 1;
        for (long i = 0; i <= d; ++i) {
            out[k.first][i] += c * pw / factorial(i);
            pw *= Rational(k.second) / 2;
        }
    }
    return out;
}

enum class Kind { Q1, Q2, Q3 };

// Q1, Q2 = (1-e^-x) * tail, Q3 via products of geometric series in q.
inline std::vector<std::vector<Rational>> q_factor(Kind kind, long q_order, long d) {
    Laurent f = one();
    if (kind == Kind::Q2) f = binom_term(0, -2, -1);
    if (kind == Kind::Q3) f = {{{0, 1}, 1}, {{0, -1}, 1}};
    for (long k = 1; k <= q_order; ++k) {
        if (kind == Kind::Q1) {
            f = mul(f, binom_term(k, 0, -1), q_order);
            f = mul(f, binom_term(k, 0, -1), q_order);
            f = mul(f, geometric(k, 2, 1, q_order), q_order);
            f = mul(f, geometric(k, -2, 1, q_order), q_order);
        } else {
            const long s = kind == Kind::Q2 ? -1 : 1;
            f = mul(f, binom_term(k, 2, s), q_order);
            f = mul(f, binom_term(k, -2, s), q_order);
            f = mul(f, geometric(k, 0, -s, q_order), q_order);
            f = mul(f, geometric(k, 0, -s, q_order), q_order);
        }
    }
    return to_x(f, q_order, d);
}

// Brute-force minimum number of colors of a graph given by adjacency lists.
inline int chromatic_number(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    for (int k = 1; k <= n; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool ok = true;
            for (int i = 0; i < n && ok; ++i)
                for (int j : adj[i])
                    if (c[i] == c[j]) ok = false;
            if (ok) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

}  // namespace oracle
