#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homcrypt/mat2.hpp"
#include "homcrypt/projective.hpp"
#include "homcrypt/rep_solver.hpp"
#include "homcrypt/rng.hpp"

using namespace homcrypt;

namespace {

const Mat2Z A2 = a_power(2, 1);
const Mat2Z B2 = b_power(2, 1);

Mat2Z random_unimodular(Rng& rng, int syllables) {
    Mat2Z m = Mat2Z::identity();
    for (int i = 0; i < syllables; ++i) {
        Integer k = rng.range(1, 4) * (rng.coin() ? 1 : -1);
        m = m * (i % 2 == 0 ? a_power(rng.range(2, 5), k) : b_power(rng.range(2, 5), k));
    }
    return m;
}

ProjectivePoint random_point(Rng& rng) {
    if (rng.below(8) == 0)
        return ProjectivePoint::infinity();
    Integer num = rng.range(-20, 20);
    Integer den = rng.range(1, 12);
    return ProjectivePoint::from(Rational(num, den));
}

} // namespace

TEST_CASE("mat_mul examples") {
    Mat2Z m{3, 1, 4, 1};
    CHECK(Mat2Z::identity() * m == m);
    CHECK(m * Mat2Z::identity() == m);
    CHECK(A2 * B2 == Mat2Z{5, 2, 2, 1});
    CHECK(A2 * mat_inv(A2) == Mat2Z::identity());
}

TEST_CASE("mat_inv examples") {
    CHECK(mat_inv(Mat2Z::identity()) == Mat2Z::identity());
    CHECK(mat_inv(Mat2Z{1, 2, 0, 1}) == Mat2Z{1, -2, 0, 1});
    Mat2Z m{5, 2, 2, 1};
    CHECK(mat_inv(m) == Mat2Z{1, -2, -2, 5});
    CHECK(m * mat_inv(m) == Mat2Z::identity());
    CHECK(mat_inv(Mat2Z{0, 1, -1, 0}) == Mat2Z{0, -1, 1, 0}); // det +1 rotation
    CHECK_THROWS_AS(mat_inv(Mat2Z{2, 0, 0, 2}), NotUnimodular);
}

TEST_CASE("mat_pow") {
    CHECK(mat_pow(B2, 3) == Mat2Z{1, 0, 6, 1});
    CHECK(mat_pow(A2, -2) == Mat2Z{1, -4, 0, 1});
    CHECK(mat_pow(Mat2Z{5, 2, 2, 1}, 0) == Mat2Z::identity());
}

TEST_CASE("mobius examples") {
    ProjectivePoint half = ProjectivePoint::from(Rational(1, 2));
    CHECK(mobius_apply(Mat2Z::identity(), half) == half);
    CHECK(mobius_apply(A2, ProjectivePoint::from(Rational(2))) ==
          ProjectivePoint::from(Rational(4)));
    // B2^-1 = [[1,0],[-2,1]] sends 1/2 through the point at infinity
    CHECK(mobius_apply(mat_inv(B2), half).infinite);
    // and infinity maps to m11/m21
    CHECK(mobius_apply(B2, ProjectivePoint::infinity()) ==
          ProjectivePoint::from(Rational(1, 2)));
    CHECK(mobius_apply(A2, ProjectivePoint::infinity()).infinite);
}

TEST_CASE("disk classification") {
    CHECK(ProjectivePoint::from(Rational(1, 2)).position() == DiskPosition::Inside);
    CHECK(ProjectivePoint::from(Rational(2)).position() == DiskPosition::Outside);
    CHECK(ProjectivePoint::from(Rational(-7, 3)).position() == DiskPosition::Outside);
    CHECK(ProjectivePoint::from(Rational(1)).position() == DiskPosition::Boundary);
    CHECK(ProjectivePoint::from(Rational(-1)).position() == DiskPosition::Boundary);
    CHECK(ProjectivePoint::infinity().position() == DiskPosition::Outside);
}

TEST_CASE("bit sizes") {
    CHECK(bit_size_int(0) == 1);
    CHECK(bit_size_int(5) == 3);
    CHECK(bit_size_int(-8) == 4);
    CHECK(bit_size_int(1) == 1);
    CHECK(bit_size_set({1}) == 1);
    CHECK(bit_size_set({1, 2}) == 3);
    CHECK(bit_size_set({3, -5}) == 5);
    CHECK_THROWS_AS(bit_size_set({}), EmptySet);
}

TEST_CASE("mat_mul is associative on random triples") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Mat2Z a = random_unimodular(rng, 3);
        Mat2Z b = random_unimodular(rng, 3);
        Mat2Z c = random_unimodular(rng, 3);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("mobius is a group action") {
    Rng rng(12);
    for (int t = 0; t < 300; ++t) {
        Mat2Z a = random_unimodular(rng, 2);
        Mat2Z b = random_unimodular(rng, 2);
        ProjectivePoint z = random_point(rng);
        CHECK(mobius_apply(a * b, z) == mobius_apply(a, mobius_apply(b, z)));
    }
}

TEST_CASE("kernel of the action contains -I") {
    Rng rng(13);
    Mat2Z neg_i{-1, 0, 0, -1};
    for (int t = 0; t < 100; ++t) {
        ProjectivePoint z = random_point(rng);
        CHECK(mobius_apply(neg_i, z) == z);
    }
}

TEST_CASE("mobius results are in lowest terms") {
    Rng rng(14);
    for (int t = 0; t < 200; ++t) {
        Mat2Z a = random_unimodular(rng, 3);
        ProjectivePoint z = random_point(rng);
        ProjectivePoint w = mobius_apply(a, z);
        if (!w.infinite) {
            CHECK(gcd(w.value.get_num(), w.value.get_den()) == 1);
            CHECK(w.value.get_den() > 0);
        }
    }
}

TEST_CASE("matrix serialization") {
    CHECK(mat_to_string(Mat2Z{-3, 0, 7, 1}) == "-3 0 7 1");
    Mat2Z big = mat_pow(Mat2Z{5, 2, 2, 1}, 200);
    CHECK(big.m11.get_str().size() > 100); // entries grow into hundreds of digits
    CHECK(big.det() == 1);
}
