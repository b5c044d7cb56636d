#include "homcrypt/rep_solver.hpp"

#include <deque>
#include <set>

#include "homcrypt/errors.hpp"

namespace homcrypt {

Mat2Z a_power(const Integer& n, const Integer& k) { return {1, n * k, 0, 1}; }
Mat2Z b_power(const Integer& n, const Integer& k) { return {1, 0, n * k, 1}; }

void ConjugateBasis::validate() const {
    if (n < 2)
        throw VerificationError("conjugate basis needs n >= 2");
    if (s_values.empty())
        throw VerificationError("conjugate basis needs a nonempty S");
    std::set<Integer> distinct(s_values.begin(), s_values.end());
    if (distinct.size() != s_values.size())
        throw VerificationError("S values must be pairwise distinct");
}

std::string x_letter(const Integer& s) { return s.get_str(); }

Integer letter_to_s(const std::string& letter) {
    try {
        return Integer(letter);
    } catch (const std::invalid_argument&) {
        throw Error("not a basis letter: " + letter);
    }
}

std::map<Integer, Mat2Z> basis_matrices(const ConjugateBasis& cb) {
    cb.validate();
    std::map<Integer, Mat2Z> out;
    const Mat2Z b = b_power(cb.n, 1);
    for (const auto& s : cb.s_values)
        out.emplace(s, a_power(cb.n, -s) * b * a_power(cb.n, s));
    return out;
}

namespace {

// Integers strictly inside the open rational interval (lo, hi). For n >= 2 the
// intervals below have length 2/n <= 1, so there is at most one; the bounds are
// handled exactly via floor/ceil of rationals.
std::vector<Integer> integers_in_open_interval(const Rational& lo, const Rational& hi) {
    Integer kmin = rational_floor(lo) + 1;
    Integer kmax = rational_ceil(hi) - 1;
    std::vector<Integer> out;
    for (Integer k = kmin; k <= kmax; ++k)
        out.push_back(k);
    return out;
}

} // namespace

std::optional<std::pair<Side, Integer>> compute_k(const ProjectivePoint& z, const Integer& n) {
    const DiskPosition pos = z.position();
    if (pos == DiskPosition::Boundary)
        throw BoundaryPoint();

    if (pos == DiskPosition::Outside) {
        // A side: |z + kn| < 1 for finite z; no power of A brings infinity back.
        if (z.infinite)
            return std::nullopt;
        Rational lo = (Rational(-1) - z.value) / n;
        Rational hi = (Rational(1) - z.value) / n;
        for (const Integer& k : integers_in_open_interval(lo, hi)) {
            if (k == 0)
                continue;
            if (mobius_apply(a_power(n, k), z).position() == DiskPosition::Inside)
                return std::make_pair(Side::A, k);
        }
        return std::nullopt;
    }

    // B side: z inside D, need B^k z outside. Dividing |knz + 1| < |z| by |z|
    // turns the condition into |kn + 1/z| < 1, the A-side interval at 1/z.
    if (z.value == 0)
        return std::nullopt;
    Rational w = Rational(1) / z.value;
    Rational lo = (Rational(-1) - w) / n;
    Rational hi = (Rational(1) - w) / n;
    for (const Integer& k : integers_in_open_interval(lo, hi)) {
        if (k == 0)
            continue;
        if (mobius_apply(b_power(n, k), z).position() == DiskPosition::Outside)
            return std::make_pair(Side::B, k);
    }
    return std::nullopt;
}

namespace {

struct Tracker {
    Mat2Z l;
    ProjectivePoint point;
    std::vector<Syllable> word;
    bool dead = false;
};

// One tracker step: pick C from the orbit point, set L := C L, record C^-1.
// The representation factors come out leftmost first, so C^-1 is appended on
// the right of the accumulated word.
void advance(Tracker& t, const Integer& n) {
    if (t.point.position() == DiskPosition::Boundary) {
        t.dead = true;
        return;
    }
    auto ck = compute_k(t.point, n);
    if (!ck) {
        t.dead = true;
        return;
    }
    const auto& [side, k] = *ck;
    const Mat2Z c = side == Side::A ? a_power(n, k) : b_power(n, k);
    t.l = c * t.l;
    t.point = mobius_apply(c, t.point);
    t.word.push_back({side == Side::A ? "A" : "B", -k});
    if (t.l.is_neg_identity())
        t.dead = true;
}

} // namespace

PingPongResult pingpong_decompose(const Mat2Z& m, const PingPongParams& params) {
    if (params.n < 2)
        throw VerificationError("ping-pong decomposition needs n >= 2");
    if (m.det() != 1)
        throw NotInFreeGroup("determinant is not 1");

    const std::size_t cap =
        params.iteration_cap ? params.iteration_cap : PingPongParams::default_cap(m);

    const ProjectivePoint inside = ProjectivePoint::from(Rational(1, 2));
    const ProjectivePoint outside = ProjectivePoint::from(Rational(2));
    Tracker trackers[2] = {
        {m, mobius_apply(m, inside), {}, false},
        {m, mobius_apply(m, outside), {}, false},
    };
    if (m.is_neg_identity())
        throw NotInFreeGroup("-I has order two, free groups are torsion-free");

    for (std::size_t iter = 0;; ++iter) {
        for (auto& t : trackers)
            if (!t.dead && t.l.is_identity())
                return {free_reduce(kFreeAlphabet, t.word), iter};
        if (trackers[0].dead && trackers[1].dead)
            throw NotInFreeGroup("both orbit trackers died");
        if (iter >= cap)
            throw NotInFreeGroup("iteration cap exceeded");
        for (auto& t : trackers)
            if (!t.dead)
                advance(t, params.n);
    }
}

std::optional<Word> conjugate_rewrite(const Word& w, const std::vector<Integer>& s_values) {
    const std::set<Integer> s_set(s_values.begin(), s_values.end());
    const auto& syl = w.syllables;
    std::vector<Syllable> out;

    // Peel A^a B^b prefixes: emit x_{-a}^b and fold A^{-a} into the next
    // leading A power (g = A^a B^b A^c ... = (A^a B A^-a)^b A^{a+c} ...).
    std::size_t i = 0;
    Integer a = 0;
    if (i < syl.size() && syl[i].letter == "A") {
        a = syl[i].exponent;
        ++i;
    }
    for (;;) {
        if (i >= syl.size())
            return a == 0 ? std::make_optional(Word{kBasisAlphabet, out}) : std::nullopt;
        if (syl[i].letter != "B")
            throw Error("conjugate_rewrite expects a word over letters A, B");
        if (!s_set.count(-a))
            return std::nullopt;
        out.push_back({x_letter(-a), syl[i].exponent});
        ++i;
        Integer c = 0;
        if (i < syl.size() && syl[i].letter == "A") {
            c = syl[i].exponent;
            ++i;
        }
        a += c;
    }
}

Word x_representation(const Mat2Z& m, const ConjugateBasis& cb) {
    cb.validate();
    PingPongResult pp;
    try {
        pp = pingpong_decompose(m, PingPongParams{cb.n});
    } catch (const NotInFreeGroup& e) {
        throw NotInGroup(e.what());
    }
    auto xw = conjugate_rewrite(pp.word, cb.s_values);
    if (!xw)
        throw NotInGroup("free-group word does not lie in the conjugate basis subgroup");
    return *xw;
}

Word expand_x_word(const Word& xw) {
    std::vector<Syllable> raw;
    for (const auto& s : xw.syllables) {
        Integer sv = letter_to_s(s.letter);
        // x_s^e = A^-s B^e A^s
        raw.push_back({"A", -sv});
        raw.push_back({"B", s.exponent});
        raw.push_back({"A", sv});
    }
    return free_reduce(kFreeAlphabet, raw);
}

Mat2Z x_word_matrix(const Word& xw, const ConjugateBasis& cb) {
    const auto basis = basis_matrices(cb);
    Mat2Z acc = Mat2Z::identity();
    for (const auto& s : xw.syllables) {
        auto it = basis.find(letter_to_s(s.letter));
        if (it == basis.end())
            throw Error("X-word letter outside S: " + s.letter);
        acc = acc * mat_pow(it->second, s.exponent);
    }
    return acc;
}

Mat2Z word_matrix(const Word& w, const std::map<std::string, Mat2Z>& gens) {
    Mat2Z acc = Mat2Z::identity();
    for (const auto& s : w.syllables) {
        auto it = gens.find(s.letter);
        if (it == gens.end())
            throw UnknownGenerator(s.letter);
        acc = acc * mat_pow(it->second, s.exponent);
    }
    return acc;
}

std::optional<Word> brute_force_representation(
    const Mat2Z& m, const std::vector<std::pair<std::string, Mat2Z>>& gens,
    std::size_t max_letters) {
    if (m.is_identity())
        return Word{"oracle", {}};

    struct Node {
        Mat2Z mat;
        std::vector<Syllable> letters;
    };
    std::deque<Node> queue{{Mat2Z::identity(), {}}};
    std::set<std::string> seen{mat_to_string(Mat2Z::identity())};

    struct Move {
        std::string letter;
        int sign;
        Mat2Z mat;
    };
    std::vector<Move> moves;
    for (const auto& [name, g] : gens) {
        moves.push_back({name, 1, g});
        moves.push_back({name, -1, mat_inv(g)});
    }

    while (!queue.empty()) {
        Node cur = std::move(queue.front());
        queue.pop_front();
        if (cur.letters.size() >= max_letters)
            continue;
        for (const auto& mv : moves) {
            // skip immediate cancellation so queued words stay reduced
            if (!cur.letters.empty() && cur.letters.back().letter == mv.letter &&
                ((mv.sign > 0) != (cur.letters.back().exponent > 0)))
                continue;
            Mat2Z nxt = cur.mat * mv.mat;
            std::string key = mat_to_string(nxt);
            if (seen.count(key))
                continue;
            std::vector<Syllable> letters = cur.letters;
            letters.push_back({mv.letter, Integer(mv.sign)});
            if (nxt == m)
                return free_reduce("oracle", letters);
            seen.insert(std::move(key));
            queue.push_back({std::move(nxt), std::move(letters)});
        }
    }
    return std::nullopt;
}

} // namespace homcrypt
