#include "homcrypt/ring_crypto.hpp"

#include "homcrypt/errors.hpp"

namespace homcrypt {

void GroupRingElement::add_term(const Mat2Z& g, int coeff, const FiniteRing& r) {
    if (coeff == r.zero)
        return;
    std::string key = mat_to_string(g);
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), Term{g, coeff});
        return;
    }
    it->second.coeff = r.plus(it->second.coeff, coeff);
    if (it->second.coeff == r.zero)
        terms.erase(it);
}

std::pair<RingPublicKey, SecretKey> ring_keygen(const FiniteRing& r, const KeygenParams& params,
                                                Rng& rng) {
    if (!ring_eligible(r))
        throw IneligibleRing();

    RingPublicKey pk;
    pk.ring = r;
    pk.units = unit_group(r);

    AbelianDecomposition decomp = abelian_decomposition(pk.units.group);
    ConcreteGroup h = pk.units.group;
    for (const auto& [name, element] : decomp.assignment)
        h.generator_assignment[name] = element;

    auto [gpk, sk] = keygen(decomp.presentation, h, params, rng);
    pk.group_pk = std::move(gpk);
    return {std::move(pk), std::move(sk)};
}

GroupRingElement gr_add(const GroupRingElement& a, const GroupRingElement& b, const FiniteRing& r) {
    GroupRingElement out = a;
    for (const auto& [key, term] : b.terms)
        out.add_term(term.g, term.coeff, r);
    return out;
}

GroupRingElement gr_mul(const GroupRingElement& a, const GroupRingElement& b, const FiniteRing& r) {
    GroupRingElement out;
    for (const auto& [ka, ta] : a.terms)
        for (const auto& [kb, tb] : b.terms)
            out.add_term(ta.g * tb.g, r.times(ta.coeff, tb.coeff), r);
    return out;
}

GroupRingElement ring_encrypt(const RingPublicKey& pk, int element, Rng& rng, std::size_t t,
                              std::size_t mask_len) {
    if (t < 2)
        throw Error("ring encryption needs t >= 2 terms");
    const FiniteRing& r = pk.ring;
    if (!ring_eligible(r))
        throw IneligibleRing();
    if (element < 0 || element >= r.size())
        throw Error("ring element index out of range");

    const std::size_t nunits = pk.units.ring_elements.size();
    std::vector<int> units(t), coeffs(t);
    int partial = r.zero; // sum of c_j u_j over the first t-1 terms
    for (std::size_t j = 0; j + 1 < t; ++j) {
        units[j] = static_cast<int>(rng.below(nunits));
        coeffs[j] = static_cast<int>(rng.below(static_cast<std::size_t>(r.size())));
        partial = r.plus(partial, r.times(coeffs[j], pk.units.ring_elements[units[j]]));
    }
    units[t - 1] = static_cast<int>(rng.below(nunits));
    int u_last = pk.units.ring_elements[units[t - 1]];
    coeffs[t - 1] = r.times(r.minus(element, partial), r.unit_inverse(u_last));

    GroupRingElement out;
    for (std::size_t j = 0; j < t; ++j) {
        if (coeffs[j] == r.zero)
            continue;
        Word w = word_for_element(pk.group_pk.group, units[j]);
        Ciphertext c = encrypt(pk.group_pk, w, rng, mask_len);
        out.add_term(c.m, coeffs[j], r);
    }
    return out;
}

int ring_decrypt(const SecretKey& sk, const RingPublicKey& pk, const GroupRingElement& e) {
    const FiniteRing& r = pk.ring;
    int acc = r.zero;
    for (const auto& [key, term] : e.terms) {
        int unit = decrypt(sk, pk.group_pk, Ciphertext{term.g});
        acc = r.plus(acc, r.times(term.coeff, pk.units.ring_elements[unit]));
    }
    return acc;
}

} // namespace homcrypt
