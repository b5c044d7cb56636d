#include "homcrypt/finite_ring.hpp"

#include "homcrypt/errors.hpp"

namespace homcrypt {

int FiniteRing::neg(int a) const {
    for (int b = 0; b < size(); ++b)
        if (add[a][b] == zero)
            return b;
    throw VerificationError("ring element without additive inverse: " + labels[a]);
}

int FiniteRing::unit_inverse(int a) const {
    for (int b = 0; b < size(); ++b)
        if (mul[a][b] == one && mul[b][a] == one)
            return b;
    return -1;
}

int FiniteRing::int_scale(unsigned long k, int a) const {
    int acc = zero;
    for (unsigned long i = 0; i < k; ++i)
        acc = plus(acc, a);
    return acc;
}

void FiniteRing::validate() const {
    const int n = size();
    if (n == 0)
        throw VerificationError("empty ring");
    auto check_table = [&](const std::vector<std::vector<int>>& t, const char* what) {
        if (static_cast<int>(t.size()) != n)
            throw VerificationError(std::string(what) + " table row count mismatch");
        for (const auto& row : t) {
            if (static_cast<int>(row.size()) != n)
                throw VerificationError(std::string(what) + " table column count mismatch");
            for (int v : row)
                if (v < 0 || v >= n)
                    throw VerificationError(std::string(what) + " table entry out of range");
        }
    };
    check_table(add, "addition");
    check_table(mul, "multiplication");
    if (zero < 0 || zero >= n || one < 0 || one >= n)
        throw VerificationError("zero/one index out of range");

    for (int a = 0; a < n; ++a) {
        if (add[zero][a] != a || add[a][zero] != a)
            throw VerificationError("zero is not an additive identity");
        if (mul[one][a] != a || mul[a][one] != a)
            throw VerificationError("one is not a multiplicative identity");
        neg(a); // throws when missing
        for (int b = 0; b < n; ++b) {
            if (add[a][b] != add[b][a])
                throw VerificationError("addition is not commutative");
            if (mul[a][b] != mul[b][a])
                throw VerificationError("multiplication is not commutative");
            for (int c = 0; c < n; ++c) {
                if (add[add[a][b]][c] != add[a][add[b][c]])
                    throw VerificationError("addition is not associative");
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw VerificationError("multiplication is not associative");
                if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
                    throw VerificationError("distributivity fails");
            }
        }
    }
}

int FiniteRing::index_of_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels[i] == label)
            return i;
    return -1;
}

UnitGroup unit_group(const FiniteRing& r) {
    UnitGroup ug;
    // identity (ring one) first per the ConcreteGroup convention
    ug.ring_elements.push_back(r.one);
    for (int a = 0; a < r.size(); ++a)
        if (a != r.one && r.unit_inverse(a) >= 0)
            ug.ring_elements.push_back(a);

    const int k = static_cast<int>(ug.ring_elements.size());
    std::vector<int> unit_index(r.size(), -1);
    for (int i = 0; i < k; ++i)
        unit_index[ug.ring_elements[i]] = i;

    ug.group.labels.reserve(k);
    for (int i = 0; i < k; ++i)
        ug.group.labels.push_back(r.labels[ug.ring_elements[i]]);
    ug.group.table.assign(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            ug.group.table[i][j] = unit_index[r.times(ug.ring_elements[i], ug.ring_elements[j])];
    ug.group.compute_inverses();
    return ug;
}

bool ring_eligible(const FiniteRing& r) {
    int units = 0;
    for (int a = 0; a < r.size(); ++a)
        if (r.unit_inverse(a) >= 0 && ++units >= 2)
            return true;
    return false;
}

FiniteRing make_zn(int m) {
    FiniteRing r;
    for (int i = 0; i < m; ++i)
        r.labels.push_back(std::to_string(i));
    r.add.assign(m, std::vector<int>(m));
    r.mul.assign(m, std::vector<int>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            r.add[i][j] = (i + j) % m;
            r.mul[i][j] = (i * j) % m;
        }
    r.zero = 0;
    r.one = m == 1 ? 0 : 1;
    return r;
}

FiniteRing make_gf4() {
    // Elements 0, 1, w, w+1 with w^2 = w + 1.
    FiniteRing r;
    r.labels = {"0", "1", "w", "w+1"};
    auto bits = [](int i) { return std::pair<int, int>{i & 1, i >> 1}; }; // (c0, c1): c0 + c1*w
    auto idx = [](int c0, int c1) { return c0 + 2 * c1; };
    r.add.assign(4, std::vector<int>(4));
    r.mul.assign(4, std::vector<int>(4));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            auto [a0, a1] = bits(i);
            auto [b0, b1] = bits(j);
            r.add[i][j] = idx(a0 ^ b0, a1 ^ b1);
            // (a0 + a1 w)(b0 + b1 w) = a0 b0 + (a0 b1 + a1 b0) w + a1 b1 w^2
            int c0 = (a0 * b0 + a1 * b1) & 1;
            int c1 = (a0 * b1 + a1 * b0 + a1 * b1) & 1;
            r.mul[i][j] = idx(c0, c1);
        }
    r.zero = 0;
    r.one = 1;
    return r;
}

FiniteRing direct_product(const FiniteRing& a, const FiniteRing& b) {
    FiniteRing r;
    const int n = a.size() * b.size();
    auto idx = [&](int i, int j) { return i * b.size() + j; };
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            r.labels.push_back("(" + a.labels[i] + "," + b.labels[j] + ")");
    r.add.assign(n, std::vector<int>(n));
    r.mul.assign(n, std::vector<int>(n));
    for (int i1 = 0; i1 < a.size(); ++i1)
        for (int j1 = 0; j1 < b.size(); ++j1)
            for (int i2 = 0; i2 < a.size(); ++i2)
                for (int j2 = 0; j2 < b.size(); ++j2) {
                    r.add[idx(i1, j1)][idx(i2, j2)] = idx(a.add[i1][i2], b.add[j1][j2]);
                    r.mul[idx(i1, j1)][idx(i2, j2)] = idx(a.mul[i1][i2], b.mul[j1][j2]);
                }
    r.zero = idx(a.zero, b.zero);
    r.one = idx(a.one, b.one);
    return r;
}

} // namespace homcrypt
