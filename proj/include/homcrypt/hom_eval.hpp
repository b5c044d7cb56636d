#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homcrypt/finite_ring.hpp"

namespace homcrypt {

// Element of Mat_n(Z_m) with entries reduced into [0, m).
struct MatZm {
    int n = 0;
    std::int64_t m = 0;
    std::vector<std::int64_t> a; // row major, n*n entries

    static MatZm zero(int n, std::int64_t m) { return {n, m, std::vector<std::int64_t>(n * n, 0)}; }
    static MatZm identity(int n, std::int64_t m);

    std::int64_t at(int i, int j) const { return a[i * n + j]; }
    void reduce();

    bool operator==(const MatZm&) const = default;
};

MatZm mz_add(const MatZm& x, const MatZm& y);
MatZm mz_sub(const MatZm& x, const MatZm& y);
MatZm mz_mul(const MatZm& x, const MatZm& y);
MatZm mz_scale(std::int64_t k, const MatZm& x);

// Highest prime powers q dividing m, with cofactors q' = m/q.
std::vector<std::pair<std::int64_t, std::int64_t>> char_decompose(std::int64_t m);

// Canonical spanning form of an additive submodule of Z_m^width: rows keyed by
// pivot column, pivots dividing m, entries above pivots reduced, closed under
// the annihilator rows that make divisibility-based reduction a complete
// membership test (Howell form).
class ZmModule {
public:
    ZmModule(std::int64_t m, std::size_t width);

    // Add a vector to the module; returns true when the span grew.
    bool insert(std::vector<std::int64_t> v);

    bool contains(std::vector<std::int64_t> v) const;

    // Rows sorted by pivot column; canonical for the module.
    std::vector<std::vector<std::int64_t>> rows() const;

    std::int64_t modulus() const { return m_; }
    std::size_t width() const { return width_; }

private:
    void canonicalize_above();

    std::int64_t m_;
    std::size_t width_;
    std::vector<std::vector<std::int64_t>> pivot_rows_; // indexed by pivot column, may be empty
};

// A ring homomorphism f: A -> R given without its formula: kernel ideal
// generators, a transversal of ker(f) in A, and f on the transversal.
struct PresentedHomomorphism {
    int n = 0;
    std::int64_t m = 0;
    std::vector<MatZm> kernel_generators;
    std::vector<MatZm> transversal;
    std::vector<int> images; // ring element index per transversal entry
    FiniteRing ring;
};

// Close the kernel generators into the full ideal's additive normal form.
// `algebra_generators` must additively span A together with products; the
// transversal plus kernel generators always qualify, so callers may pass an
// empty list to use them.
ZmModule kernel_closure(const PresentedHomomorphism& ph,
                        const std::vector<MatZm>& algebra_generators = {});

bool kernel_membership(const ZmModule& nf, const MatZm& x);

// Scan the transversal for the unique x with x - a in ker(f); return f(x).
int evaluate_homomorphism(const PresentedHomomorphism& ph, const ZmModule& nf, const MatZm& a);

// Same evaluation routed through the characteristic decomposition:
// f(a) = sum over q of t_q * f(q' a) with t_q = (q')^-1 mod q.
int evaluate_via_components(const PresentedHomomorphism& ph, const ZmModule& nf, const MatZm& a);

} // namespace homcrypt
