#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homcrypt/integer.hpp"

namespace homcrypt {

// One maximal run letter^exponent; exponent is never zero in a normalized word.
struct Syllable {
    std::string letter;
    Integer exponent;

    bool operator==(const Syllable&) const = default;
};

// Freely reduced word in normalized syllable form: adjacent syllables carry
// distinct letters, no zero exponents. The empty word is the identity.
struct Word {
    std::string alphabet;
    std::vector<Syllable> syllables;

    bool operator==(const Word& o) const { return syllables == o.syllables; }

    bool empty() const { return syllables.empty(); }
    std::size_t syllable_count() const { return syllables.size(); }

    // Number of single letters after expanding exponents.
    Integer letter_length() const {
        Integer n = 0;
        for (const auto& s : syllables)
            n += abs(s.exponent);
        return n;
    }

    Word inverse() const {
        Word r{alphabet, {}};
        r.syllables.reserve(syllables.size());
        for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
            r.syllables.push_back({it->letter, -it->exponent});
        return r;
    }

    std::string to_string() const;
};

// Merge a raw syllable sequence into normalized freely reduced form.
Word free_reduce(const std::string& alphabet, const std::vector<Syllable>& raw);

inline Word concat(const Word& a, const Word& b) {
    std::vector<Syllable> raw = a.syllables;
    raw.insert(raw.end(), b.syllables.begin(), b.syllables.end());
    return free_reduce(a.alphabet, raw);
}

// l(w) = sum of l(exponent) over syllables; 0 for the empty word.
inline std::size_t word_bit_size(const Word& w) {
    std::size_t total = 0;
    for (const auto& s : w.syllables)
        total += bit_size_int(s.exponent);
    return total;
}

// Apply the substitution homomorphism letter -> image word, then reduce.
Word substitute(const Word& w, const std::function<const Word&(const std::string&)>& image,
                const std::string& target_alphabet);

// "a b^-1 c^2" <-> Word. Tokens are letter or letter^exponent.
Word parse_word(const std::string& alphabet, const std::string& text);

} // namespace homcrypt
