#include "jtab/gfp.hpp"

#include <ostream>

namespace jtab {

uint32_t Fp::p_ = 65537;

void Fp::set_modulus(uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
        throw std::domain_error("Fp: modulus must be a prime below 2^31");
    p_ = p;
}

Fp Fp::inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    /* extended Euclid on (v, p) */
    int64_t a = v_, b = p_, x0 = 1, x1 = 0;
    while (b != 0) {
        int64_t q = a / b;
        int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    x0 %= static_cast<int64_t>(p_);
    if (x0 < 0) x0 += p_;
    return from_raw(static_cast<uint32_t>(x0));
}

Fp Fp::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Fp base = *this, acc = Fp(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; d++)
        if (n % d == 0) return false;
    return true;
}

} // namespace jtab
