#pragma once

#include <string>
#include <vector>

#include "homcrypt/concrete_group.hpp"

namespace homcrypt {

// A finite commutative ring with identity, given by its element list and the
// Cayley tables of addition and multiplication.
struct FiniteRing {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> add;
    std::vector<std::vector<int>> mul;
    int zero = 0;
    int one = 1;

    int size() const { return static_cast<int>(labels.size()); }
    int plus(int a, int b) const { return add[a][b]; }
    int times(int a, int b) const { return mul[a][b]; }
    int neg(int a) const;
    int minus(int a, int b) const { return plus(a, neg(b)); }

    // Multiplicative inverse, or -1 when a is not a unit.
    int unit_inverse(int a) const;

    // a scaled by a nonnegative integer (repeated addition).
    int int_scale(unsigned long k, int a) const;

    // Exhaustive ring-law check: abelian (+), associative commutative (*),
    // identities, distributivity.
    void validate() const;

    int index_of_label(const std::string& label) const; // -1 when absent
};

// Unit group R^* as a concrete group; ring_elements[i] is the ring index of
// unit-group element i. Identity (ring one) comes first.
struct UnitGroup {
    ConcreteGroup group;
    std::vector<int> ring_elements;
};

UnitGroup unit_group(const FiniteRing& r);

// The Theorem hypothesis in computable form: |R^*| >= 2, i.e. R is not a
// direct sum of copies of Z2.
bool ring_eligible(const FiniteRing& r);

// Ring fixtures.
FiniteRing make_zn(int m);                                     // Z_m
FiniteRing make_gf4();                                         // F_4 = F_2[x]/(x^2+x+1)
FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b);

} // namespace homcrypt
