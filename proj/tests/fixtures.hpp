#pragma once

// Desk-scale fixture groups built from explicit models (permutations,
// quaternion units, modular addition), with matching presentations.

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "homcrypt/concrete_group.hpp"
#include "homcrypt/presentation.hpp"

namespace homcrypt::fixtures {

struct GroupFixture {
    std::string name;
    ConcreteGroup group;
    Presentation presentation;
};

// Generic closure: multiply out the generators until the element set is
// stable, identity first. Elements are opaque keys with a composition law.
template <typename T>
ConcreteGroup close_group(const T& identity,
                          const std::vector<std::pair<std::string, T>>& gens,
                          const std::function<T(const T&, const T&)>& compose,
                          const std::function<std::string(const T&)>& label) {
    std::vector<T> elems{identity};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (const auto& [gname, g] : gens) {
            T next = compose(elems[i], g);
            bool known = false;
            for (const auto& e : elems)
                if (e == next) {
                    known = true;
                    break;
                }
            if (!known)
                elems.push_back(next);
        }
    auto index_of = [&](const T& x) {
        for (std::size_t i = 0; i < elems.size(); ++i)
            if (elems[i] == x)
                return static_cast<int>(i);
        return -1;
    };
    ConcreteGroup cg;
    for (const auto& e : elems)
        cg.labels.push_back(label(e));
    cg.table.assign(elems.size(), std::vector<int>(elems.size()));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            cg.table[i][j] = index_of(compose(elems[i], elems[j]));
    cg.compute_inverses();
    for (const auto& [gname, g] : gens)
        cg.generator_assignment[gname] = index_of(g);
    return cg;
}

using Perm = std::vector<int>;

inline Perm perm_compose(const Perm& g, const Perm& h) {
    Perm out(g.size());
    for (std::size_t x = 0; x < g.size(); ++x)
        out[x] = g[h[x]];
    return out;
}

inline ConcreteGroup permutation_group(const std::vector<std::pair<std::string, Perm>>& gens) {
    const std::size_t deg = gens.front().second.size();
    Perm id(deg);
    for (std::size_t i = 0; i < deg; ++i)
        id[i] = static_cast<int>(i);
    return close_group<Perm>(
        id, gens, perm_compose,
        [](const Perm& p) {
            std::string s = "p";
            for (int v : p)
                s += std::to_string(v);
            return s;
        });
}

inline GroupFixture make_s3() {
    GroupFixture f;
    f.name = "S3";
    f.group = permutation_group({{"a", {1, 2, 0}}, {"b", {1, 0, 2}}});
    f.presentation.generators = {"a", "b"};
    f.presentation.relators = {
        parse_word(kGeneratorAlphabet, "a^3"),
        parse_word(kGeneratorAlphabet, "b^2"),
        parse_word(kGeneratorAlphabet, "a b a b"),
    };
    return f;
}

inline GroupFixture make_d4() {
    GroupFixture f;
    f.name = "D4";
    f.group = permutation_group({{"r", {1, 2, 3, 0}}, {"s", {0, 3, 2, 1}}});
    f.presentation.generators = {"r", "s"};
    f.presentation.relators = {
        parse_word(kGeneratorAlphabet, "r^4"),
        parse_word(kGeneratorAlphabet, "s^2"),
        parse_word(kGeneratorAlphabet, "r s r s"),
    };
    return f;
}

inline GroupFixture make_q8() {
    // (sign, unit) with units 1, i, j, k.
    using Q = std::pair<int, int>;
    static const int unit_sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const int unit_prod[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    auto compose = [](const Q& a, const Q& b) {
        return Q{a.first * b.first * unit_sign[a.second][b.second],
                 unit_prod[a.second][b.second]};
    };
    auto label = [](const Q& q) {
        static const char* names[4] = {"1", "i", "j", "k"};
        return std::string(q.first > 0 ? "" : "-") + names[q.second];
    };
    GroupFixture f;
    f.name = "Q8";
    f.group = close_group<Q>({1, 0}, {{"i", {1, 1}}, {"j", {1, 2}}}, compose, label);
    f.presentation.generators = {"i", "j"};
    f.presentation.relators = {
        parse_word(kGeneratorAlphabet, "i^4"),
        parse_word(kGeneratorAlphabet, "i^2 j^-2"),
        parse_word(kGeneratorAlphabet, "j i j^-1 i"),
    };
    return f;
}

inline ConcreteGroup make_cyclic(int n, const std::vector<std::pair<std::string, int>>& gens) {
    ConcreteGroup cg;
    for (int i = 0; i < n; ++i)
        cg.labels.push_back(i == 0 ? "e" : "z" + std::to_string(i));
    cg.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            cg.table[i][j] = (i + j) % n;
    cg.compute_inverses();
    for (const auto& [name, g] : gens)
        cg.generator_assignment[name] = g;
    return cg;
}

inline GroupFixture make_z6() {
    GroupFixture f;
    f.name = "Z6";
    f.group = make_cyclic(6, {{"a", 1}, {"b", 2}});
    f.presentation.generators = {"a", "b"};
    f.presentation.relators = {
        parse_word(kGeneratorAlphabet, "a^6"),
        parse_word(kGeneratorAlphabet, "b a^-2"),
        parse_word(kGeneratorAlphabet, "a b a^-1 b^-1"),
    };
    return f;
}

inline std::vector<GroupFixture> all_group_fixtures() {
    return {make_s3(), make_d4(), make_q8(), make_z6()};
}

} // namespace homcrypt::fixtures
