#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "homcrypt/errors.hpp"

namespace homcrypt {

using Integer  = mpz_class;
using Rational = mpq_class;

// Bit size l(a): l(0) = 1, l(a) = floor(log2 |a|) + 1 otherwise; sign contributes nothing.
inline std::size_t bit_size_int(const Integer& a) {
    return mpz_sizeinbase(a.get_mpz_t(), 2);
}

// l(S) = sum of l(a) over a in S.
inline std::size_t bit_size_set(const std::vector<Integer>& s) {
    if (s.empty())
        throw EmptySet();
    std::size_t total = 0;
    for (const auto& a : s)
        total += bit_size_int(a);
    return total;
}

inline Integer floor_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& num, const Integer& den) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline Integer rational_floor(const Rational& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline Integer rational_ceil(const Rational& q) {
    return ceil_div(q.get_num(), q.get_den());
}

inline Integer pow2(unsigned long bits) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, bits);
    return r;
}

} // namespace homcrypt
