#include "homcrypt/concrete_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "homcrypt/errors.hpp"

namespace homcrypt {

int ConcreteGroup::pow(int g, const Integer& e) const {
    Integer k = e;
    int base = g;
    if (k < 0) {
        base = inv(g);
        k = -k;
    }
    int acc = 0;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t()))
            acc = mul(acc, base);
        base = mul(base, base);
        k >>= 1;
    }
    return acc;
}

void ConcreteGroup::compute_inverses() {
    const int n = size();
    inverse.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (table[i][j] == 0 && table[j][i] == 0) {
                inverse[i] = j;
                break;
            }
        }
        if (inverse[i] < 0)
            throw VerificationError("element without inverse: " + labels[i]);
    }
}

void ConcreteGroup::validate() const {
    const int n = size();
    if (n == 0)
        throw VerificationError("empty group");
    if (static_cast<int>(table.size()) != n)
        throw VerificationError("table row count mismatch");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw VerificationError("table column count mismatch");
        for (int v : row)
            if (v < 0 || v >= n)
                throw VerificationError("table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        if (table[0][i] != i || table[i][0] != i)
            throw VerificationError("element 0 is not a two-sided identity");
    if (static_cast<int>(inverse.size()) != n)
        throw VerificationError("inverse table size mismatch");
    for (int i = 0; i < n; ++i)
        if (table[i][inverse[i]] != 0 || table[inverse[i]][i] != 0)
            throw VerificationError("invalid inverse entry");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw VerificationError("multiplication table is not associative");
    for (const auto& [name, g] : generator_assignment)
        if (g < 0 || g >= n)
            throw VerificationError("generator assigned out of range: " + name);
}

std::vector<int> ConcreteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::vector<bool> seen(size(), false);
    std::deque<int> queue;
    seen[0] = true;
    queue.push_back(0);
    std::vector<int> step = gens;
    for (int g : gens)
        step.push_back(inv(g));
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int g : step) {
            int nxt = mul(cur, g);
            if (!seen[nxt]) {
                seen[nxt] = true;
                queue.push_back(nxt);
            }
        }
    }
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
        if (seen[i])
            out.push_back(i);
    return out;
}

bool ConcreteGroup::is_abelian() const {
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (table[i][j] != table[j][i])
                return false;
    return true;
}

int evaluate_word(const ConcreteGroup& cg, const Word& w) {
    int acc = 0;
    for (const auto& s : w.syllables) {
        auto it = cg.generator_assignment.find(s.letter);
        if (it == cg.generator_assignment.end())
            throw UnknownGenerator(s.letter);
        acc = cg.mul(acc, cg.pow(it->second, s.exponent));
    }
    return acc;
}

bool verify_presentation(const ConcreteGroup& cg, const Presentation& p) {
    std::vector<int> gens;
    for (const auto& name : p.generators) {
        auto it = cg.generator_assignment.find(name);
        if (it == cg.generator_assignment.end())
            return false;
        gens.push_back(it->second);
    }
    for (const auto& r : p.relators)
        if (evaluate_word(cg, r) != 0)
            return false;
    return static_cast<int>(cg.generated_subgroup(gens).size()) == cg.size();
}

Word word_for_element(const ConcreteGroup& cg, int element) {
    if (element == 0)
        return Word{kGeneratorAlphabet, {}};
    struct Move {
        std::string letter;
        int sign;
        int image;
    };
    std::vector<Move> moves;
    for (const auto& [name, g] : cg.generator_assignment) {
        moves.push_back({name, 1, g});
        moves.push_back({name, -1, cg.inv(g)});
    }
    std::vector<int> parent(cg.size(), -1), via(cg.size(), -1);
    std::deque<int> queue{0};
    std::vector<bool> seen(cg.size(), false);
    seen[0] = true;
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (std::size_t m = 0; m < moves.size(); ++m) {
            int nxt = cg.mul(cur, moves[m].image);
            if (!seen[nxt]) {
                seen[nxt] = true;
                parent[nxt] = cur;
                via[nxt] = static_cast<int>(m);
                if (nxt == element)
                    queue.clear();
                else
                    queue.push_back(nxt);
                if (nxt == element)
                    break;
            }
        }
    }
    if (!seen[element])
        throw VerificationError("element not generated by assigned generators");
    std::vector<Syllable> raw;
    for (int cur = element; cur != 0; cur = parent[cur])
        raw.push_back({moves[via[cur]].letter, Integer(moves[via[cur]].sign)});
    std::reverse(raw.begin(), raw.end());
    return free_reduce(kGeneratorAlphabet, raw);
}

namespace {

// Order of g relative to a subgroup: least t >= 1 with g^t in the subgroup.
int relative_order(const ConcreteGroup& cg, int g, const std::vector<bool>& in_sub) {
    int acc = g;
    int t = 1;
    while (!in_sub[acc]) {
        acc = cg.mul(acc, g);
        ++t;
    }
    return t;
}

} // namespace

AbelianDecomposition abelian_decomposition(const ConcreteGroup& cg) {
    if (cg.size() == 1)
        throw NotNonidentity();
    if (!cg.is_abelian())
        throw NotAbelian();

    const int n = cg.size();
    std::vector<bool> in_sub(n, false);
    in_sub[0] = true;
    int sub_size = 1;

    AbelianDecomposition out;
    while (sub_size < n) {
        // Pick the element of maximal order relative to the current subgroup
        // whose cyclic group meets that subgroup trivially (g^t = identity).
        int best = -1, best_order = 0;
        for (int g = 0; g < n; ++g) {
            if (in_sub[g])
                continue;
            int t = relative_order(cg, g, in_sub);
            if (t > best_order && cg.pow(g, t) == 0) {
                best = g;
                best_order = t;
            }
        }
        if (best < 0)
            throw Error("internal: abelian decomposition found no independent generator");
        out.generators.push_back(best);
        out.orders.push_back(static_cast<unsigned long>(best_order));
        // Extend the subgroup by the new generator.
        std::vector<int> gens = out.generators;
        in_sub.assign(n, false);
        sub_size = 0;
        for (int e : cg.generated_subgroup(gens)) {
            in_sub[e] = true;
            ++sub_size;
        }
    }

    // Sanity: the factors multiply out to the whole group.
    unsigned long prod = 1;
    for (unsigned long d : out.orders)
        prod *= d;
    if (prod != static_cast<unsigned long>(n))
        throw Error("internal: abelian decomposition orders do not multiply to |G|");

    // Presentation with relators g_i^{d_i} and all commutators.
    Presentation& p = out.presentation;
    for (std::size_t i = 0; i < out.generators.size(); ++i) {
        std::string name = "g" + std::to_string(i + 1);
        p.generators.push_back(name);
        out.assignment.emplace_back(name, out.generators[i]);
        p.relators.push_back(
            free_reduce(kGeneratorAlphabet, {{name, Integer(out.orders[i])}}));
    }
    if (out.generators.size() == 1) {
        // Cyclic group: the cryptosystem needs two generators, so add the
        // redundant g2 = g1^2 with its defining relator.
        std::string name = "g2";
        p.generators.push_back(name);
        out.assignment.emplace_back(name, cg.mul(out.generators[0], out.generators[0]));
        p.relators.push_back(free_reduce(
            kGeneratorAlphabet, {{name, Integer(1)}, {"g1", Integer(-2)}}));
    }
    for (std::size_t i = 0; i < p.generators.size(); ++i)
        for (std::size_t j = i + 1; j < p.generators.size(); ++j)
            p.relators.push_back(free_reduce(kGeneratorAlphabet,
                                             {{p.generators[i], Integer(1)},
                                              {p.generators[j], Integer(1)},
                                              {p.generators[i], Integer(-1)},
                                              {p.generators[j], Integer(-1)}}));
    return out;
}

} // namespace homcrypt
