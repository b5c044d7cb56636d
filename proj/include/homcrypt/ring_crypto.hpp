#pragma once

#include <map>
#include <string>

#include "homcrypt/finite_ring.hpp"
#include "homcrypt/group_crypto.hpp"

namespace homcrypt {

// Ring-layer public key: R's tables, the unit group with its embedding back
// into R, and a group-scheme public key over H = R^*.
struct RingPublicKey {
    FiniteRing ring;
    UnitGroup units;
    PublicKey group_pk;
};

// Finite formal sum of ring coefficients attached to group-element matrices,
// keyed by the canonical matrix serialization so equal elements merge.
struct GroupRingElement {
    struct Term {
        Mat2Z g;
        int coeff; // ring element index, never zero
    };
    std::map<std::string, Term> terms;

    std::size_t support_size() const { return terms.size(); }
    void add_term(const Mat2Z& g, int coeff, const FiniteRing& r);
};

std::pair<RingPublicKey, SecretKey> ring_keygen(const FiniteRing& r, const KeygenParams& params,
                                                Rng& rng);

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b, const FiniteRing& r);
GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b, const FiniteRing& r);

// Encode r as sum c_j u_j over t random units (the last coefficient solved via
// a unit inverse), then encrypt each unit with the group scheme.
GroupRingElement ring_encrypt(const RingPublicKey& pk, int element, Rng& rng, std::size_t t,
                              std::size_t mask_len = 2);

// f(sum r_g g) = sum r_g phi(g), evaluated through the group-layer decryption.
int ring_decrypt(const SecretKey& sk, const RingPublicKey& pk, const GroupRingElement& e);

} // namespace homcrypt
