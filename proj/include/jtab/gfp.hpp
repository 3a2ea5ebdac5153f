#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>

#include <Eigen/Core>

namespace jtab {

/* Residue mod a runtime prime p, NTL-style: the modulus is a process-wide
 * context set once before any arithmetic (the CLI sets it from --prime).
 * p must be prime and < 2^31 so products fit in int64.
 */
class Fp {
public:
    static void set_modulus(uint32_t p);
    static uint32_t modulus() { return p_; }

    Fp() : v_(0) {}
    Fp(long long x) {
        long long m = x % static_cast<long long>(p_);
        v_ = static_cast<uint32_t>(m < 0 ? m + p_ : m);
    }
    Fp(int x) : Fp(static_cast<long long>(x)) {}

    uint32_t value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, Fp b) {
        uint32_t s = a.v_ + b.v_;
        return from_raw(s >= p_ ? s - p_ : s);
    }
    friend Fp operator-(Fp a, Fp b) {
        return from_raw(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + p_ - b.v_);
    }
    friend Fp operator*(Fp a, Fp b) {
        return from_raw(static_cast<uint32_t>(static_cast<uint64_t>(a.v_) * b.v_ % p_));
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
    Fp operator-() const { return from_raw(v_ == 0 ? 0 : p_ - v_); }
    Fp& operator+=(Fp o) { return *this = *this + o; }
    Fp& operator-=(Fp o) { return *this = *this - o; }
    Fp& operator*=(Fp o) { return *this = *this * o; }
    Fp& operator/=(Fp o) { return *this = *this / o; }
    friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }
    friend bool operator!=(Fp a, Fp b) { return a.v_ != b.v_; }

    Fp inverse() const;
    Fp pow(long long e) const;

private:
    uint32_t v_;
    static uint32_t p_;
    static Fp from_raw(uint32_t v) {
        Fp f;
        f.v_ = v;
        return f;
    }
};

std::ostream& operator<<(std::ostream& os, Fp x);

bool is_prime(uint64_t n);

} // namespace jtab

namespace Eigen {
template <>
struct NumTraits<jtab::Fp> : GenericNumTraits<jtab::Fp> {
    typedef jtab::Fp Real;
    typedef jtab::Fp NonInteger;
    typedef jtab::Fp Nested;
    typedef jtab::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 1,
        MulCost = 3
    };
    static inline Real epsilon() { return jtab::Fp(0); }
    static inline Real dummy_precision() { return jtab::Fp(0); }
    static inline int digits10() { return 0; }
};
} // namespace Eigen

namespace jtab {

using MatFp = Eigen::Matrix<Fp, Eigen::Dynamic, Eigen::Dynamic>;
using VecFp = Eigen::Matrix<Fp, Eigen::Dynamic, 1>;

/* rank by Gaussian elimination (the expression is evaluated and reduced on a
 * copy)
 */
template <typename Derived>
int rank_gfp(const Eigen::MatrixBase<Derived>& expr) {
    MatFp m = expr;
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); col++) {
        int pivot = -1;
        for (int row = rank; row < m.rows(); row++)
            if (!m(row, col).is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        m.row(pivot).swap(m.row(rank));
        Fp inv = m(rank, col).inverse();
        for (int row = pivot + 1; row < m.rows(); row++) {
            if (m(row, col).is_zero()) continue;
            Fp f = m(row, col) * inv;
            m.row(row) -= f * m.row(rank);
        }
        rank++;
    }
    return rank;
}

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& expr) {
    MatFp m = expr;
    for (int i = 0; i < m.rows(); i++)
        for (int j = 0; j < m.cols(); j++)
            if (!m(i, j).is_zero()) return false;
    return true;
}

} // namespace jtab
