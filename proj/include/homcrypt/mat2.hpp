#pragma once

#include <cstddef>
#include <string>

#include "homcrypt/integer.hpp"

namespace homcrypt {

// 2x2 integer matrix with exact arbitrary-precision entries.
struct Mat2Z {
    Integer m11, m12, m21, m22;

    bool operator==(const Mat2Z&) const = default;

    static Mat2Z identity() { return {1, 0, 0, 1}; }

    Integer det() const { return m11 * m22 - m12 * m21; }

    bool is_identity() const { return m11 == 1 && m12 == 0 && m21 == 0 && m22 == 1; }
    bool is_neg_identity() const { return m11 == -1 && m12 == 0 && m21 == 0 && m22 == -1; }

    Mat2Z operator*(const Mat2Z& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }

    Mat2Z operator-() const { return {-m11, -m12, -m21, -m22}; }
};

inline Mat2Z mat_mul(const Mat2Z& a, const Mat2Z& b) { return a * b; }

// Exact inverse via the adjugate; only defined for det = +-1.
inline Mat2Z mat_inv(const Mat2Z& a) {
    Integer d = a.det();
    if (d == 1)
        return {a.m22, -a.m12, -a.m21, a.m11};
    if (d == -1)
        return {-a.m22, a.m12, a.m21, -a.m11};
    throw NotUnimodular();
}

// Square-and-multiply; negative exponents go through mat_inv.
inline Mat2Z mat_pow(const Mat2Z& a, const Integer& e) {
    if (e < 0)
        return mat_pow(mat_inv(a), -e);
    Mat2Z result = Mat2Z::identity();
    Mat2Z base = a;
    Integer k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            result = result * base;
        base = base * base;
        k >>= 1;
    }
    return result;
}

// Total bit size of all four entries; used to cap the decomposition loop.
inline std::size_t mat_bit_size(const Mat2Z& a) {
    return bit_size_int(a.m11) + bit_size_int(a.m12) + bit_size_int(a.m21) + bit_size_int(a.m22);
}

// Canonical serialization: four decimal entries, row major, space separated.
inline std::string mat_to_string(const Mat2Z& a) {
    return a.m11.get_str() + " " + a.m12.get_str() + " " + a.m21.get_str() + " " + a.m22.get_str();
}

} // namespace homcrypt
