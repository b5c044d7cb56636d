#include "homcrypt/group_crypto.hpp"

#include <set>

#include "homcrypt/errors.hpp"

namespace homcrypt {

Integer SecretKey::s_for(const std::string& generator) const {
    for (const auto& [name, s] : assignment)
        if (name == generator)
            return s;
    throw UnknownGenerator(generator);
}

const std::string* SecretKey::generator_for(const Integer& s) const {
    for (const auto& [name, sv] : assignment)
        if (sv == s)
            return &name;
    return nullptr;
}

const PublicGenerator* PublicKey::find(const std::string& name) const {
    for (const auto& g : generators)
        if (g.name == name)
            return &g;
    return nullptr;
}

std::map<std::string, Mat2Z> PublicKey::generator_matrices() const {
    std::map<std::string, Mat2Z> out;
    for (const auto& g : generators)
        out.emplace(g.name, g.matrix);
    return out;
}

std::pair<PublicKey, SecretKey> keygen(const Presentation& p, const ConcreteGroup& cg,
                                       const KeygenParams& params, Rng& rng) {
    p.validate();
    if (p.generators.size() < 2)
        throw TooFewGenerators();
    if (cg.size() < 2)
        throw IdentityGroup();
    if (!verify_presentation(cg, p))
        throw PresentationMismatch("relators or generating set fail on the Cayley table");

    const Integer bound = pow2(params.lambda);

    SecretKey sk;
    sk.cb.n = rng.range_mpz(2, bound);
    std::set<Integer> s_set;
    while (s_set.size() < p.generators.size())
        s_set.insert(rng.range_mpz(-bound, bound));
    sk.cb.s_values.assign(s_set.begin(), s_set.end());

    for (std::size_t i = 0; i < p.generators.size(); ++i) {
        sk.assignment.emplace_back(p.generators[i], sk.cb.s_values[i]);
        std::size_t len = static_cast<std::size_t>(
            rng.range(static_cast<std::int64_t>(params.mask_len_min),
                      static_cast<std::int64_t>(params.mask_len_max)));
        sk.masks.emplace_back(p.generators[i], random_relator_word(p, rng, len).first);
    }

    // y_h = x_{s_h} * product of secret basis letters along the mask expansion.
    const auto basis = basis_matrices(sk.cb);
    auto secret_matrix_of = [&](const std::string& gen) -> const Mat2Z& {
        return basis.at(sk.s_for(gen));
    };

    PublicKey pk;
    pk.presentation = p;
    pk.group = cg;
    for (const auto& [gen, mask] : sk.masks) {
        Word expansion = expand_relator_word(p, mask);
        Mat2Z mask_matrix = Mat2Z::identity();
        for (const auto& syl : expansion.syllables)
            mask_matrix = mask_matrix * mat_pow(secret_matrix_of(syl.letter), syl.exponent);
        pk.generators.push_back(
            {gen, secret_matrix_of(gen) * mask_matrix, cg.generator_assignment.at(gen)});
    }
    return {pk, sk};
}

namespace {

Mat2Z public_word_matrix(const PublicKey& pk, const Word& w) {
    Mat2Z acc = Mat2Z::identity();
    for (const auto& s : w.syllables) {
        const PublicGenerator* g = pk.find(s.letter);
        if (!g)
            throw UnknownGenerator(s.letter);
        acc = acc * mat_pow(g->matrix, s.exponent);
    }
    return acc;
}

Mat2Z random_kernel_matrix(const PublicKey& pk, Rng& rng, std::size_t mask_len) {
    if (mask_len == 0)
        return Mat2Z::identity();
    Word expansion = random_relator_word(pk.presentation, rng, mask_len).second;
    return public_word_matrix(pk, expansion);
}

} // namespace

Ciphertext encrypt(const PublicKey& pk, const Word& plaintext, Rng& rng, std::size_t mask_len) {
    Mat2Z m_h = public_word_matrix(pk, plaintext);
    Mat2Z m_r = random_kernel_matrix(pk, rng, mask_len);
    return {m_r * m_h};
}

int decrypt(const SecretKey& sk, const PublicKey& pk, const Ciphertext& c) {
    Word xw = x_representation(c.m, sk.cb);
    std::vector<Syllable> raw;
    for (const auto& syl : xw.syllables) {
        const std::string* gen = sk.generator_for(letter_to_s(syl.letter));
        if (!gen)
            throw UnmappedBasisLetter(syl.letter);
        raw.push_back({*gen, syl.exponent});
    }
    return evaluate_word(pk.group, free_reduce(kGeneratorAlphabet, raw));
}

Ciphertext rerandomize(const PublicKey& pk, const Ciphertext& c, Rng& rng, std::size_t mask_len) {
    return {random_kernel_matrix(pk, rng, mask_len) * c.m};
}

PublicKey extend_public_key(const PublicKey& pk, Rng& rng, std::size_t count) {
    PublicKey out = pk;
    std::size_t serial = 0;
    for (const auto& g : out.generators)
        if (g.name.rfind("ext", 0) == 0)
            ++serial; // keep numbering fresh across repeated extensions
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t pool = out.generators.size();
        std::string name = "ext" + std::to_string(++serial);
        if (rng.coin()) {
            const auto& g = out.generators[rng.below(pool)];
            out.generators.push_back(
                {name, mat_inv(g.matrix), out.group.inv(g.element)});
        } else {
            const auto& g1 = out.generators[rng.below(pool)];
            const auto& g2 = out.generators[rng.below(pool)];
            out.generators.push_back(
                {name, g1.matrix * g2.matrix, out.group.mul(g1.element, g2.element)});
        }
    }
    return out;
}

} // namespace homcrypt
