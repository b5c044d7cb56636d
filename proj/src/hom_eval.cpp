#include "homcrypt/hom_eval.hpp"

#include <numeric>
#include <tuple>

#include "homcrypt/errors.hpp"

namespace homcrypt {

MatZm MatZm::identity(int n, std::int64_t m) {
    MatZm e = zero(n, m);
    for (int i = 0; i < n; ++i)
        e.a[i * n + i] = 1 % m;
    return e;
}

void MatZm::reduce() {
    for (auto& v : a) {
        v %= m;
        if (v < 0)
            v += m;
    }
}

namespace {

void require_compatible(const MatZm& x, const MatZm& y) {
    if (x.n != y.n || x.m != y.m)
        throw Error("matrix ring dimension/modulus mismatch");
}

} // namespace

MatZm mz_add(const MatZm& x, const MatZm& y) {
    require_compatible(x, y);
    MatZm out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i)
        out.a[i] = (out.a[i] + y.a[i]) % x.m;
    return out;
}

MatZm mz_sub(const MatZm& x, const MatZm& y) {
    require_compatible(x, y);
    MatZm out = x;
    for (std::size_t i = 0; i < out.a.size(); ++i) {
        out.a[i] = (out.a[i] - y.a[i]) % x.m;
        if (out.a[i] < 0)
            out.a[i] += x.m;
    }
    return out;
}

MatZm mz_mul(const MatZm& x, const MatZm& y) {
    require_compatible(x, y);
    MatZm out = MatZm::zero(x.n, x.m);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            std::int64_t xik = x.at(i, k);
            if (xik == 0)
                continue;
            for (int j = 0; j < x.n; ++j)
                out.a[i * x.n + j] = (out.a[i * x.n + j] + xik * y.at(k, j)) % x.m;
        }
    return out;
}

MatZm mz_scale(std::int64_t k, const MatZm& x) {
    MatZm out = x;
    k %= x.m;
    if (k < 0)
        k += x.m;
    for (auto& v : out.a)
        v = (v * k) % x.m;
    return out;
}

std::vector<std::pair<std::int64_t, std::int64_t>> char_decompose(std::int64_t m) {
    if (m < 2)
        throw Error("characteristic must be >= 2");
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t rest = m;
    for (std::int64_t p = 2; p * p <= rest || (rest > 1 && p <= rest); ++p) {
        if (rest % p != 0)
            continue;
        std::int64_t q = 1;
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        out.emplace_back(q, m / q);
    }
    return out;
}

ZmModule::ZmModule(std::int64_t m, std::size_t width)
    : m_(m), width_(width), pivot_rows_(width) {}

namespace {

std::int64_t mod_norm(std::int64_t v, std::int64_t m) {
    v %= m;
    return v < 0 ? v + m : v;
}

// Extended Euclid: returns (g, x, y) with x*a + y*b = g = gcd(a, b).
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t r0 = a, r1 = b, x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        x0 -= q * x1;
        std::swap(x0, x1);
        y0 -= q * y1;
        std::swap(y0, y1);
    }
    return {r0, x0, y0};
}

} // namespace

void ZmModule::canonicalize_above() {
    // Ascending pivot columns; bring every other row's entry at that column
    // into [0, pivot). Only columns >= j change, so one pass is stable.
    for (std::size_t j = 0; j < width_; ++j) {
        const auto& pivot = pivot_rows_[j];
        if (pivot.empty())
            continue;
        std::int64_t d = pivot[j];
        for (std::size_t i = 0; i < j; ++i) {
            auto& row = pivot_rows_[i];
            if (row.empty() || row[j] == 0)
                continue;
            std::int64_t q = row[j] / d;
            if (q == 0)
                continue;
            for (std::size_t k = j; k < width_; ++k)
                row[k] = mod_norm(row[k] - q * pivot[k], m_);
        }
    }
}

bool ZmModule::insert(std::vector<std::int64_t> v) {
    for (auto& x : v)
        x = mod_norm(x, m_);
    bool grew = false;
    std::vector<std::vector<std::int64_t>> work{std::move(v)};
    while (!work.empty()) {
        std::vector<std::int64_t> cur = std::move(work.back());
        work.pop_back();
        for (std::size_t j = 0; j < width_; ++j) {
            if (cur[j] == 0)
                continue;
            auto& row = pivot_rows_[j];
            if (row.empty()) {
                // Claim the pivot with the canonical generator g = gcd(cur[j], m):
                // scale cur so its leading entry becomes g, requeue the residual
                // of the original vector and the annihilator row. The three
                // derived vectors span exactly what cur spanned.
                std::int64_t g = std::gcd(cur[j], m_);
                auto [one, unit, ignored] = ext_gcd((cur[j] / g) % (m_ / g), m_ / g);
                if (one != 1)
                    throw Error("internal: pivot normalization failed");
                unit = mod_norm(unit, m_ / g);
                std::vector<std::int64_t> pivot(width_), residual(width_), ann(width_);
                for (std::size_t k = 0; k < width_; ++k)
                    pivot[k] = mod_norm(cur[k] * unit, m_);
                std::int64_t q = cur[j] / g;
                for (std::size_t k = 0; k < width_; ++k) {
                    residual[k] = mod_norm(cur[k] - q * pivot[k], m_);
                    ann[k] = mod_norm(pivot[k] * (m_ / g), m_);
                }
                row = std::move(pivot);
                grew = true;
                work.push_back(std::move(residual));
                work.push_back(std::move(ann));
                break;
            }
            std::int64_t d = row[j];
            if (cur[j] % d == 0) {
                std::int64_t q = cur[j] / d;
                for (std::size_t k = j; k < width_; ++k)
                    cur[k] = mod_norm(cur[k] - q * row[k], m_);
                continue; // leading entry cleared, move right
            }
            // Shrink the pivot: combined = x*cur + y*row has leading entry
            // gcd(cur[j], d); requeue the residuals of both originals so the
            // span is preserved exactly.
            auto [g, x, y] = ext_gcd(cur[j], d);
            std::vector<std::int64_t> combined(width_);
            for (std::size_t k = 0; k < width_; ++k)
                combined[k] = mod_norm(x * cur[k] + y * row[k], m_);
            std::vector<std::int64_t> row_residual(width_), cur_residual(width_);
            std::int64_t qr = d / g, qc = cur[j] / g;
            for (std::size_t k = 0; k < width_; ++k) {
                row_residual[k] = mod_norm(row[k] - qr * combined[k], m_);
                cur_residual[k] = mod_norm(cur[k] - qc * combined[k], m_);
            }
            pivot_rows_[j].clear();
            work.push_back(std::move(combined));
            work.push_back(std::move(row_residual));
            work.push_back(std::move(cur_residual));
            break;
        }
    }
    if (grew)
        canonicalize_above();
    return grew;
}

std::vector<std::vector<std::int64_t>> ZmModule::rows() const {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& row : pivot_rows_)
        if (!row.empty())
            out.push_back(row);
    return out;
}

bool ZmModule::contains(std::vector<std::int64_t> v) const {
    for (auto& x : v)
        x = mod_norm(x, m_);
    for (std::size_t j = 0; j < width_; ++j) {
        if (v[j] == 0)
            continue;
        const auto& row = pivot_rows_[j];
        if (row.empty() || v[j] % row[j] != 0)
            return false;
        std::int64_t q = v[j] / row[j];
        for (std::size_t k = j; k < width_; ++k)
            v[k] = mod_norm(v[k] - q * row[k], m_);
    }
    return true;
}

namespace {

std::vector<std::int64_t> vectorize(const MatZm& x) { return x.a; }

} // namespace

ZmModule kernel_closure(const PresentedHomomorphism& ph,
                        const std::vector<MatZm>& algebra_generators) {
    std::vector<MatZm> multipliers = algebra_generators;
    if (multipliers.empty()) {
        multipliers = ph.transversal;
        multipliers.insert(multipliers.end(), ph.kernel_generators.begin(),
                           ph.kernel_generators.end());
    }

    ZmModule nf(ph.m, static_cast<std::size_t>(ph.n) * ph.n);
    for (const auto& g : ph.kernel_generators)
        nf.insert(vectorize(g));

    // Multiply the current span by the algebra generators until stable. The
    // span also multiplies by itself so ideal products of kernel elements are
    // covered.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<std::int64_t>> snapshot = nf.rows();
        for (const auto& rv : snapshot) {
            MatZm v{ph.n, ph.m, rv};
            std::vector<MatZm> partners = multipliers;
            for (const auto& rw : snapshot)
                partners.push_back(MatZm{ph.n, ph.m, rw});
            for (const auto& p : partners) {
                if (nf.insert(vectorize(mz_mul(p, v))))
                    grew = true;
                if (nf.insert(vectorize(mz_mul(v, p))))
                    grew = true;
            }
        }
    }
    return nf;
}

bool kernel_membership(const ZmModule& nf, const MatZm& x) {
    return nf.contains(x.a);
}

int evaluate_homomorphism(const PresentedHomomorphism& ph, const ZmModule& nf, const MatZm& a) {
    for (std::size_t i = 0; i < ph.transversal.size(); ++i)
        if (kernel_membership(nf, mz_sub(ph.transversal[i], a)))
            return ph.images[i];
    throw NoTransversalMatch();
}

int evaluate_via_components(const PresentedHomomorphism& ph, const ZmModule& nf, const MatZm& a) {
    int acc = ph.ring.zero;
    for (const auto& [q, qprime] : char_decompose(ph.m)) {
        // t_q = (q')^{-1} mod q, so that sum over q of t_q q' = 1 (mod m).
        std::int64_t t = 0;
        for (std::int64_t c = 0; c < q; ++c)
            if ((c * (qprime % q)) % q == 1 % q) {
                t = c;
                break;
            }
        int fq = evaluate_homomorphism(ph, nf, mz_scale(qprime, a));
        acc = ph.ring.plus(acc, ph.ring.int_scale(static_cast<unsigned long>(t), fq));
    }
    return acc;
}

} // namespace homcrypt
