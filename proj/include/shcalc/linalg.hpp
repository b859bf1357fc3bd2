#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shc {

using i64 = long long;

struct MathError : std::runtime_error {
    explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

i64 checked_mul(i64 a, i64 b);
i64 checked_add(i64 a, i64 b);
i64 gcd_i64(i64 a, i64 b);
i64 mod_pos(i64 a, i64 m);

/* Dense integer matrix, row-major. Sizes here stay small (a few hundred);
 * all arithmetic is exact with overflow checks. */
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<i64> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    static IntMat identity(int n);

    i64& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    i64 at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    IntMat mul(const IntMat& other) const;
    std::vector<i64> mul_vec(const std::vector<i64>& v) const;
    IntMat transpose() const;
    IntMat hstack(const IntMat& other) const;
    IntMat col_slice(int from, int to) const;
    IntMat col(int c) const;
    bool is_zero() const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

/* Smith normal form u*a*v = d with u, v unimodular; divisors d1 | d2 | ... */
struct SnfResult {
    IntMat d, u, v;
    int rank = 0;
    std::vector<i64> divisors;  // the nonzero diagonal entries, positive, dividing chain
};

SnfResult smith_normal_form(const IntMat& a);
IntMat inverse_unimodular(const IntMat& u);

/* Columns form a basis of ker(a) over Z (a saturated sublattice). */
IntMat kernel_basis(const IntMat& a);

/* Solve a*x = b exactly over Z; returns false if no integral solution. */
bool solve_exact(const IntMat& a, const std::vector<i64>& b, std::vector<i64>& x);
bool solve_exact_mat(const IntMat& a, const IntMat& b, IntMat& x);

/* Column-style Hermite reduction: basis (independent columns) of the lattice
 * spanned by the columns of g. */
IntMat lattice_basis(const IntMat& g);

/* Lattice sum span(a) + span(b) and preimage {x : m*x in span(l)}. */
IntMat lattice_sum(const IntMat& a, const IntMat& b);
IntMat lattice_preimage(const IntMat& m, const IntMat& l);
bool lattice_contains(const IntMat& basis, const std::vector<i64>& v);

/* The finite(ly generated) abelian group span(k)/span(b), b inside span(k),
 * both sublattices of the ambient Z^n. Keeps enough data to express any
 * ambient vector of span(k) in generator coordinates. */
struct Subquotient {
    std::vector<i64> invariant_factors;  // ascending divisibility; 0 marks a free summand
    IntMat gens;                         // ambient lifts, one column per kept generator
    i64 order() const;                   // 0 if a free summand is present
    bool is_trivial() const { return invariant_factors.empty(); }

    std::vector<i64> coords(const std::vector<i64>& ambient_vec) const;
    std::vector<i64> reduce(const std::vector<i64>& coords_vec) const;

    // internals
    IntMat kbasis;    // basis of span(k)
    IntMat uinv_cols; // change of basis: generator index -> kbasis coords
    IntMat umat;      // kbasis coords -> diagonal coords
    std::vector<int> kept;  // indices of diagonal coords kept as generators
    std::vector<i64> diag;  // full diagonal (1s included)
};

Subquotient make_subquotient(const IntMat& k, const IntMat& b);

/* F2 vectors and matrices on packed words. */
struct F2Vec {
    int n = 0;
    std::vector<uint64_t> w;
    F2Vec() = default;
    explicit F2Vec(int n_) : n(n_), w((n_ + 63) / 64, 0) {}
    bool get(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        if (v)
            w[i >> 6] |= uint64_t(1) << (i & 63);
        else
            w[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void operator^=(const F2Vec& o) {
        for (size_t i = 0; i < w.size(); ++i)
            w[i] ^= o.w[i];
    }
    bool is_zero() const;
    bool operator==(const F2Vec& o) const { return n == o.n && w == o.w; }
    bool operator<(const F2Vec& o) const { return w < o.w; }
};

struct F2Mat {
    int rows = 0, cols = 0;
    std::vector<F2Vec> r;
    F2Mat() = default;
    F2Mat(int rr, int cc) : rows(rr), cols(cc), r(rr, F2Vec(cc)) {}
    bool get(int i, int j) const { return r[i].get(j); }
    void set(int i, int j, bool v) { r[i].set(j, v); }
    F2Mat transpose() const;
    F2Vec mul_vec(const F2Vec& v) const;  // rows act as functionals
};

/* Row space tools: rank, span membership, kernel. Rows are vectors. */
int f2_rank(F2Mat m);
struct F2Rref {
    F2Mat m;                 // reduced rows (nonzero ones first)
    std::vector<int> pivots; // pivot column per nonzero row
    int rank = 0;
};
F2Rref f2_rref(F2Mat m);
bool f2_in_span(const F2Rref& rr, F2Vec v);
/* Solve x * m = target for x (row combination), m given by its rref with history. */
struct F2Solver {
    F2Mat rows;             // eliminated rows
    F2Mat combo;            // combination history
    std::vector<int> pivots;
    int n = 0, k = 0;
    explicit F2Solver(const F2Mat& m);
    bool solve(const F2Vec& target, F2Vec& out_combo) const;
};
F2Mat f2_kernel(const F2Mat& m);  // rows span {x : x * m = 0}

/* Sparse integer matrices for the bar-complex oracle. Entries are tiny
 * (bar differentials are +-1) but the shapes get large. */
struct SparseIntMat {
    int rows = 0, cols = 0;
    std::vector<std::vector<std::pair<int, i64>>> col;  // per column: (row, value), sorted by row
    SparseIntMat() = default;
    SparseIntMat(int r, int c) : rows(r), cols(c), col(c) {}
    void add(int r, int c, i64 v);
    void finalize();  // sort/merge duplicates
    size_t nnz() const;
};

/* Nontrivial invariant factors (ascending) of the sparse matrix. */
std::vector<i64> sparse_snf_divisors(SparseIntMat m, int dense_limit = 4096);
int sparse_rank_modp(const SparseIntMat& m, uint32_t p);

/* Canonicalize a multiset of cyclic orders into an invariant-factor chain
 * d1 | d2 | ... (drops 1s). */
std::vector<i64> invariant_factors_from_divisors(std::vector<i64> divisors);

}  // namespace shc
