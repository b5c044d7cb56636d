#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "homcrypt/concrete_group.hpp"
#include "homcrypt/presentation.hpp"
#include "homcrypt/rep_solver.hpp"
#include "homcrypt/rng.hpp"

namespace homcrypt {

struct KeygenParams {
    unsigned lambda = 16;        // bit strength of n and the S magnitudes
    std::size_t mask_len_min = 1; // relator syllables in each key mask
    std::size_t mask_len_max = 3;
};

// Trapdoor: the conjugate basis (n, S), which generator owns which basis
// letter, and the relator masks folded into the public matrices.
struct SecretKey {
    ConjugateBasis cb;
    std::vector<std::pair<std::string, Integer>> assignment; // generator -> s value
    std::vector<std::pair<std::string, Word>> masks;         // generator -> relator word

    Integer s_for(const std::string& generator) const;
    const std::string* generator_for(const Integer& s) const;
};

struct PublicGenerator {
    std::string name;
    Mat2Z matrix;  // y = x_s * matrix(mask), det 1
    int element;   // image in the concrete group
};

struct PublicKey {
    Presentation presentation;
    ConcreteGroup group;
    std::vector<PublicGenerator> generators;

    const PublicGenerator* find(const std::string& name) const;
    std::map<std::string, Mat2Z> generator_matrices() const;
};

struct Ciphertext {
    Mat2Z m;
};

std::pair<PublicKey, SecretKey> keygen(const Presentation& p, const ConcreteGroup& cg,
                                       const KeygenParams& params, Rng& rng);

// M_r * M_h: the plaintext word folded over the public matrices, masked by a
// random relator-word image. mask_len = 0 gives the bare M_h.
Ciphertext encrypt(const PublicKey& pk, const Word& plaintext, Rng& rng, std::size_t mask_len);

// Solve for the X(n,S)-word of the ciphertext, pull basis letters back to
// generator names, evaluate in the concrete group. Returns the element index.
int decrypt(const SecretKey& sk, const PublicKey& pk, const Ciphertext& c);

inline Ciphertext ciphertext_mul(const Ciphertext& a, const Ciphertext& b) {
    return {a.m * b.m};
}

Ciphertext rerandomize(const PublicKey& pk, const Ciphertext& c, Rng& rng, std::size_t mask_len);

// Append extra public pairs built by Nielsen-style moves on the existing
// ones (inverse, or product of two), named ext1, ext2, ...
PublicKey extend_public_key(const PublicKey& pk, Rng& rng, std::size_t count);

} // namespace homcrypt
