#pragma once

#include <string>

#include "homcrypt/mat2.hpp"

namespace homcrypt {

// Where a point sits relative to the open unit disk D.
enum class DiskPosition { Inside, Outside, Boundary };

// A point of the rational projective line: a rational in lowest terms or infinity.
// Infinity counts as lying outside the closed unit disk.
struct ProjectivePoint {
    bool infinite = false;
    Rational value; // meaningful only when !infinite

    static ProjectivePoint infinity() { return {true, Rational(0)}; }
    static ProjectivePoint from(Rational q) {
        q.canonicalize();
        return {false, q};
    }

    bool operator==(const ProjectivePoint& o) const {
        if (infinite != o.infinite)
            return false;
        return infinite || value == o.value;
    }

    DiskPosition position() const {
        if (infinite)
            return DiskPosition::Outside;
        int c = cmp(abs(value.get_num()), abs(value.get_den()));
        if (c < 0)
            return DiskPosition::Inside;
        if (c > 0)
            return DiskPosition::Outside;
        return DiskPosition::Boundary;
    }

    std::string to_string() const {
        return infinite ? "inf" : value.get_str();
    }
};

// Linear fractional action z -> (m11 z + m12) / (m21 z + m22), exact, total.
// A vanishing denominator maps to infinity; infinity maps to m11/m21.
inline ProjectivePoint mobius_apply(const Mat2Z& m, const ProjectivePoint& z) {
    Integer num, den;
    if (z.infinite) {
        num = m.m11;
        den = m.m21;
    } else {
        const Integer& p = z.value.get_num();
        const Integer& q = z.value.get_den();
        num = m.m11 * p + m.m12 * q;
        den = m.m21 * p + m.m22 * q;
    }
    if (den == 0)
        return ProjectivePoint::infinity();
    return ProjectivePoint::from(Rational(num, den));
}

} // namespace homcrypt
