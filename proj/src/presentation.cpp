#include "homcrypt/presentation.hpp"

#include <algorithm>
#include <set>

#include "homcrypt/errors.hpp"

namespace homcrypt {

std::size_t Presentation::relator_index(const std::string& letter) const {
    for (std::size_t i = 0; i < relators.size(); ++i)
        if (relator_letter(i) == letter)
            return i;
    return static_cast<std::size_t>(-1);
}

void Presentation::validate() const {
    if (generators.empty())
        throw VerificationError("presentation has no generators");
    std::set<std::string> seen(generators.begin(), generators.end());
    if (seen.size() != generators.size())
        throw VerificationError("duplicate generator name in presentation");
    if (relators.empty())
        throw VerificationError("presentation has no relators");
    for (const auto& r : relators) {
        if (r.empty())
            throw VerificationError("empty relator word");
        for (const auto& s : r.syllables)
            if (!seen.count(s.letter))
                throw VerificationError("relator uses unknown generator: " + s.letter);
        // normalized syllable form is freely reduced by construction; check anyway
        for (std::size_t i = 0; i + 1 < r.syllables.size(); ++i)
            if (r.syllables[i].letter == r.syllables[i + 1].letter)
                throw VerificationError("relator word is not in normalized syllable form");
    }
}

Word expand_relator_word(const Presentation& p, const Word& relword) {
    return substitute(
        relword,
        [&](const std::string& letter) -> const Word& {
            std::size_t i = p.relator_index(letter);
            if (i == static_cast<std::size_t>(-1))
                throw UnknownGenerator(letter);
            return p.relators[i];
        },
        kGeneratorAlphabet);
}

std::pair<Word, Word> random_relator_word(const Presentation& p, Rng& rng, std::size_t length) {
    if (length < 1)
        throw Error("relator word length must be >= 1");
    const std::size_t k = p.relators.size();
    Word w{kRelatorAlphabet, {}};
    if (k == 1) {
        // Single relator: adjacent-distinct letters are impossible, so the word
        // collapses to one syllable r1^(+-length).
        Integer e = Integer(static_cast<unsigned long>(length));
        w.syllables.push_back({p.relator_letter(0), rng.coin() ? e : -e});
    } else {
        std::size_t prev = k; // sentinel
        for (std::size_t i = 0; i < length; ++i) {
            std::size_t pick = rng.below(prev == k ? k : k - 1);
            if (prev != k && pick >= prev)
                ++pick; // skip the previous letter
            w.syllables.push_back({p.relator_letter(pick), rng.coin() ? Integer(1) : Integer(-1)});
            prev = pick;
        }
    }
    return {w, expand_relator_word(p, w)};
}

} // namespace homcrypt
