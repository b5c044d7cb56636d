#pragma once

#include <string>
#include <utility>
#include <vector>

#include "homcrypt/rng.hpp"
#include "homcrypt/word.hpp"

namespace homcrypt {

inline constexpr const char* kGeneratorAlphabet = "gens";
inline constexpr const char* kRelatorAlphabet   = "rels";

// H = <X; R>: generator names plus a nonempty list of freely reduced relator
// words over those generators.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    // Relator letters r1..rk, in relator order.
    std::string relator_letter(std::size_t i) const { return "r" + std::to_string(i + 1); }
    // Index for a relator letter, or npos.
    std::size_t relator_index(const std::string& letter) const;

    void validate() const; // throws VerificationError on structural defects
};

// A freely reduced word of `length` syllables over the relator alphabet plus
// its expansion into generator letters (substitute each relator, reduce).
std::pair<Word, Word> random_relator_word(const Presentation& p, Rng& rng, std::size_t length);

// Expand a relator-alphabet word into a generator-alphabet word.
Word expand_relator_word(const Presentation& p, const Word& relword);

} // namespace homcrypt
