#pragma once

#include <string>

#include "homcrypt/group_crypto.hpp"
#include "homcrypt/hom_eval.hpp"
#include "homcrypt/ring_crypto.hpp"

namespace homcrypt {

// Line-oriented text formats (presentations, groups, rings, matrices,
// ciphertexts, words, attack inputs) and JSON key files. Large integers are
// decimal strings throughout; every format carries `format: 1`.

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

Presentation parse_presentation(const std::string& text);
std::string format_presentation(const Presentation& p);

ConcreteGroup parse_concrete_group(const std::string& text);
std::string format_concrete_group(const ConcreteGroup& cg);

FiniteRing parse_ring(const std::string& text);
std::string format_ring(const FiniteRing& r);

Mat2Z parse_matrix_file(const std::string& text);
std::string format_matrix_file(const Mat2Z& m);

Word parse_word_file(const std::string& text, const std::string& alphabet);
std::string format_word_file(const Word& w);

std::string format_public_key(const PublicKey& pk);
PublicKey parse_public_key(const std::string& text);

std::string format_secret_key(const SecretKey& sk);
SecretKey parse_secret_key(const std::string& text);

std::string format_ring_public_key(const RingPublicKey& pk);
RingPublicKey parse_ring_public_key(const std::string& text);

std::string format_group_ring_element(const GroupRingElement& e);
GroupRingElement parse_group_ring_element(const std::string& text, const FiniteRing& r);

// Attack input: dimensions, kernel generators, transversal with image labels,
// and the ring tables resolved from a referenced ring file.
struct AttackInput {
    PresentedHomomorphism hom;
    std::string ring_path; // as written in the file
};

AttackInput parse_attack_input(const std::string& text, const std::string& ring_text);
std::string format_attack_input(const PresentedHomomorphism& ph, const std::string& ring_path);

MatZm parse_matzm_file(const std::string& text);
std::string format_matzm_file(const MatZm& m);

} // namespace homcrypt
