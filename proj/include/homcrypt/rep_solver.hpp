#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "homcrypt/mat2.hpp"
#include "homcrypt/projective.hpp"
#include "homcrypt/word.hpp"

namespace homcrypt {

inline constexpr const char* kFreeAlphabet  = "AB";      // letters "A", "B"
inline constexpr const char* kBasisAlphabet = "X(n,S)";  // letters are decimal s values

// A_n = [[1,n],[0,1]], B_n = [[1,0],[n,1]]; for n >= 2 they generate a free group.
Mat2Z a_power(const Integer& n, const Integer& k); // A_n^k, closed form
Mat2Z b_power(const Integer& n, const Integer& k); // B_n^k, closed form

// Parameters of the two-tracker decomposition. Probe points are fixed at
// z = 1/2 (inside D) and z' = 2 (outside).
struct PingPongParams {
    Integer n;
    std::size_t iteration_cap = 0; // 0: derive from the input matrix size

    static std::size_t default_cap(const Mat2Z& m) { return 4 * mat_bit_size(m) + 8; }
};

// The conjugate basis X(n,S) = { A^-s B A^s : s in S }.
struct ConjugateBasis {
    Integer n;
    std::vector<Integer> s_values;

    void validate() const; // n >= 2, S nonempty with distinct entries
};

std::string x_letter(const Integer& s);
Integer letter_to_s(const std::string& letter);

// x_s = A_n^-s B_n A_n^s for each s in S.
std::map<Integer, Mat2Z> basis_matrices(const ConjugateBasis& cb);

enum class Side { A, B };

// The unique k (if any) with A^k z inside D (for z outside) resp. B^k z
// outside D (for z inside). Exact rational interval arithmetic; candidates
// are verified by applying the power and classifying the image, which also
// covers the image passing through infinity. Throws BoundaryPoint on |z| = 1.
std::optional<std::pair<Side, Integer>> compute_k(const ProjectivePoint& z, const Integer& n);

struct PingPongResult {
    Word word;              // over letters A, B; product reproduces the input
    std::size_t iterations; // loop iterations; equals word.syllable_count()
};

// X_n-representation of M in the free group <A_n, B_n>, by running the two
// projective-orbit trackers in lockstep. Throws NotInFreeGroup when both
// trackers die or the iteration cap is exceeded.
PingPongResult pingpong_decompose(const Mat2Z& m, const PingPongParams& params);

// Rewrite an {A,B}-word as a word over the conjugate basis letters x_s, or
// nullopt when the word is not in <A^-s B A^s : s in S>.
std::optional<Word> conjugate_rewrite(const Word& w, const std::vector<Integer>& s_values);

// Full solver: X_n-representation then conjugate rewrite. Throws NotInGroup.
Word x_representation(const Mat2Z& m, const ConjugateBasis& cb);

// Expand an X(n,S)-word back into the free alphabet {A, B}.
Word expand_x_word(const Word& xw);

// Product of basis matrices along an X(n,S)-word.
Mat2Z x_word_matrix(const Word& xw, const ConjugateBasis& cb);

// Product of named generator matrices along a word.
Mat2Z word_matrix(const Word& w, const std::map<std::string, Mat2Z>& gens);

// Independent breadth-first oracle: shortest word over the given generators
// whose product is M, or nullopt within the letter-count bound.
std::optional<Word> brute_force_representation(const Mat2Z& m,
                                               const std::vector<std::pair<std::string, Mat2Z>>& gens,
                                               std::size_t max_letters);

} // namespace homcrypt
