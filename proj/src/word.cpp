#include "homcrypt/word.hpp"

#include <sstream>

#include "homcrypt/errors.hpp"

namespace homcrypt {

Word free_reduce(const std::string& alphabet, const std::vector<Syllable>& raw) {
    Word out{alphabet, {}};
    auto& stack = out.syllables;
    for (const auto& s : raw) {
        if (s.exponent == 0)
            continue;
        if (!stack.empty() && stack.back().letter == s.letter) {
            stack.back().exponent += s.exponent;
            if (stack.back().exponent == 0)
                stack.pop_back();
        } else {
            stack.push_back(s);
        }
    }
    return out;
}

Word substitute(const Word& w, const std::function<const Word&(const std::string&)>& image,
                const std::string& target_alphabet) {
    std::vector<Syllable> raw;
    for (const auto& s : w.syllables) {
        const Word& img = image(s.letter);
        if (!mpz_fits_slong_p(s.exponent.get_mpz_t()))
            throw Error("substitution exponent too large to expand");
        long e = s.exponent.get_si();
        const Word expanded = e < 0 ? img.inverse() : img;
        long reps = e < 0 ? -e : e;
        for (long i = 0; i < reps; ++i)
            raw.insert(raw.end(), expanded.syllables.begin(), expanded.syllables.end());
    }
    return free_reduce(target_alphabet, raw);
}

std::string Word::to_string() const {
    if (syllables.empty())
        return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& s : syllables) {
        if (!first)
            os << ' ';
        first = false;
        os << s.letter;
        // "1" alone denotes the identity word, so a letter spelled "1" always
        // carries an explicit exponent
        if (s.exponent != 1 || s.letter == "1")
            os << '^' << s.exponent.get_str();
    }
    return os.str();
}

Word parse_word(const std::string& alphabet, const std::string& text) {
    std::istringstream is(text);
    std::vector<Syllable> raw;
    std::string tok;
    while (is >> tok) {
        if (tok == "1" && raw.empty() && is.peek() == EOF)
            break; // explicit identity word
        auto caret = tok.find('^');
        std::string letter = tok.substr(0, caret);
        Integer exp = 1;
        if (caret != std::string::npos) {
            std::string e = tok.substr(caret + 1);
            try {
                exp = Integer(e);
            } catch (const std::invalid_argument&) {
                throw ParseError("bad exponent in word token: " + tok);
            }
        }
        if (letter.empty())
            throw ParseError("empty letter in word token: " + tok);
        raw.push_back({letter, exp});
    }
    return free_reduce(alphabet, raw);
}

} // namespace homcrypt
