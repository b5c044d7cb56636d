#pragma once

#include <map>
#include <string>
#include <vector>

#include "homcrypt/presentation.hpp"
#include "homcrypt/word.hpp"

namespace homcrypt {

// A finite group given by its Cayley table. Element 0 is the identity.
// Generator names are bound to elements so words evaluate by table products;
// this supplies the solved word problem the decryption step relies on.
struct ConcreteGroup {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table; // table[i][j] = index of g_i * g_j
    std::vector<int> inverse;
    std::map<std::string, int> generator_assignment;

    int size() const { return static_cast<int>(labels.size()); }
    int mul(int i, int j) const { return table[i][j]; }
    int inv(int i) const { return inverse[i]; }

    // g^e by square-and-multiply over the table; e may be any Integer.
    int pow(int g, const Integer& e) const;

    // Fills `inverse` from the table; throws if some element has none.
    void compute_inverses();

    // Full group-law check (identity, inverses, associativity). O(n^3), desk scale.
    void validate() const;

    // Subgroup generated by the given elements (closure under products).
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;

    bool is_abelian() const;
};

// Table product of the assigned generator images along the word.
int evaluate_word(const ConcreteGroup& cg, const Word& w);

// True iff every relator evaluates to the identity and the assigned
// generators generate all of cg. Requires every presentation generator
// to have an assignment.
bool verify_presentation(const ConcreteGroup& cg, const Presentation& p);

// Shortest word in the assigned generators evaluating to the element,
// by breadth-first search over the table.
Word word_for_element(const ConcreteGroup& cg, int element);

// Direct decomposition of a finite abelian group into cyclic factors,
// invariant-factor style, with a presentation ready for the cryptosystem
// (a redundant second generator is added when the group is cyclic).
struct AbelianDecomposition {
    std::vector<int> generators;          // one element per cyclic factor
    std::vector<unsigned long> orders;    // matching factor orders
    Presentation presentation;            // over names g1, g2, ...
    std::vector<std::pair<std::string, int>> assignment; // presentation name -> element
};

AbelianDecomposition abelian_decomposition(const ConcreteGroup& cg);

} // namespace homcrypt
