#pragma once

#include <cstdint>
#include <stdexcept>

namespace reeskit {

// Arithmetic in the prime field F_p. Coefficients are kept in [0, p).
// p is assumed prime and < 2^31 so products fit in int64_t.

inline int64_t fp_normalize(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    return a;
}

inline int64_t fp_add(int64_t a, int64_t b, int64_t p) {
    int64_t s = a + b;
    if (s >= p) s -= p;
    return s;
}

inline int64_t fp_sub(int64_t a, int64_t b, int64_t p) {
    int64_t s = a - b;
    if (s < 0) s += p;
    return s;
}

inline int64_t fp_neg(int64_t a, int64_t p) { return a == 0 ? 0 : p - a; }

inline int64_t fp_mul(int64_t a, int64_t b, int64_t p) { return (a * b) % p; }

inline int64_t fp_pow(int64_t a, int64_t e, int64_t p) {
    int64_t r = 1 % p;
    a %= p;
    while (e > 0) {
        if (e & 1) r = fp_mul(r, a, p);
        a = fp_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline int64_t fp_inv(int64_t a, int64_t p) {
    a = fp_normalize(a, p);
    if (a == 0) throw std::domain_error("fp_inv: division by zero");
    // extended Euclid
    int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("fp_inv: modulus not prime or zero divisor");
    return fp_normalize(t, p);
}

inline bool fp_is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace reeskit
