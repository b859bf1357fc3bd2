#include "shcalc/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <numeric>

namespace shc {

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw MathError("integer overflow in multiplication");
    return r;
}

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw MathError("integer overflow in addition");
    return r;
}

i64 gcd_i64(i64 a, i64 b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

i64 mod_pos(i64 a, i64 m) {
    if (m <= 0)
        return a;
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::mul(const IntMat& other) const {
    if (cols != other.rows)
        throw MathError("IntMat::mul shape mismatch");
    IntMat out(rows, other.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            i64 x = at(i, k);
            if (!x)
                continue;
            for (int j = 0; j < other.cols; ++j)
                if (other.at(k, j))
                    out.at(i, j) = checked_add(out.at(i, j), checked_mul(x, other.at(k, j)));
        }
    return out;
}

std::vector<i64> IntMat::mul_vec(const std::vector<i64>& v) const {
    if (static_cast<int>(v.size()) != cols)
        throw MathError("IntMat::mul_vec shape mismatch");
    std::vector<i64> out(rows, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (at(i, j) && v[j])
                out[i] = checked_add(out[i], checked_mul(at(i, j), v[j]));
    return out;
}

IntMat IntMat::transpose() const {
    IntMat out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

IntMat IntMat::hstack(const IntMat& other) const {
    if (rows != other.rows)
        throw MathError("IntMat::hstack shape mismatch");
    IntMat out(rows, cols + other.cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j)
            out.at(i, j) = at(i, j);
        for (int j = 0; j < other.cols; ++j)
            out.at(i, cols + j) = other.at(i, j);
    }
    return out;
}

IntMat IntMat::col_slice(int from, int to) const {
    IntMat out(rows, to - from);
    for (int i = 0; i < rows; ++i)
        for (int j = from; j < to; ++j)
            out.at(i, j - from) = at(i, j);
    return out;
}

IntMat IntMat::col(int c) const { return col_slice(c, c + 1); }

bool IntMat::is_zero() const {
    for (i64 x : a)
        if (x)
            return false;
    return true;
}

namespace {

void row_swap(IntMat& m, int i, int j) {
    for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(i, c), m.at(j, c));
}
void col_swap(IntMat& m, int i, int j) {
    for (int r = 0; r < m.rows; ++r)
        std::swap(m.at(r, i), m.at(r, j));
}
// row[i] += q * row[j]
void row_axpy(IntMat& m, int i, int j, i64 q) {
    for (int c = 0; c < m.cols; ++c)
        if (m.at(j, c))
            m.at(i, c) = checked_add(m.at(i, c), checked_mul(q, m.at(j, c)));
}
void col_axpy(IntMat& m, int i, int j, i64 q) {
    for (int r = 0; r < m.rows; ++r)
        if (m.at(r, j))
            m.at(r, i) = checked_add(m.at(r, i), checked_mul(q, m.at(r, j)));
}
void row_neg(IntMat& m, int i) {
    for (int c = 0; c < m.cols; ++c)
        m.at(i, c) = -m.at(i, c);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& a) {
    SnfResult res;
    res.d = a;
    res.u = IntMat::identity(a.rows);
    res.v = IntMat::identity(a.cols);
    IntMat& d = res.d;
    int t = 0;
    const int tmax = std::min(a.rows, a.cols);
    while (t < tmax) {
        // locate smallest nonzero entry in the remaining block
        int pi = -1, pj = -1;
        i64 best = 0;
        for (int i = t; i < d.rows; ++i)
            for (int j = t; j < d.cols; ++j) {
                i64 v = std::abs(d.at(i, j));
                if (v && (pi < 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (pi < 0)
            break;
        row_swap(d, t, pi);
        row_swap(res.u, t, pi);
        col_swap(d, t, pj);
        col_swap(res.v, t, pj);
        bool clean = false;
        while (!clean) {
            clean = true;
            // eliminate column t
            for (int i = t + 1; i < d.rows; ++i) {
                if (!d.at(i, t))
                    continue;
                i64 q = d.at(i, t) / d.at(t, t);
                row_axpy(d, i, t, -q);
                row_axpy(res.u, i, t, -q);
                if (d.at(i, t)) {  // remainder smaller than pivot: swap up and restart
                    row_swap(d, t, i);
                    row_swap(res.u, t, i);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // eliminate row t
            for (int j = t + 1; j < d.cols; ++j) {
                if (!d.at(t, j))
                    continue;
                i64 q = d.at(t, j) / d.at(t, t);
                col_axpy(d, j, t, -q);
                col_axpy(res.v, j, t, -q);
                if (d.at(t, j)) {
                    col_swap(d, t, j);
                    col_swap(res.v, t, j);
                    clean = false;
                    break;
                }
            }
            if (!clean)
                continue;
            // pivot must divide the rest of the block
            i64 p = d.at(t, t);
            for (int i = t + 1; i < d.rows && clean; ++i)
                for (int j = t + 1; j < d.cols && clean; ++j)
                    if (d.at(i, j) % p) {
                        row_axpy(d, t, i, 1);
                        row_axpy(res.u, t, i, 1);
                        clean = false;
                    }
        }
        if (d.at(t, t) < 0) {
            row_neg(d, t);
            row_neg(res.u, t);
        }
        ++t;
    }
    res.rank = 0;
    for (int i = 0; i < tmax; ++i)
        if (d.at(i, i)) {
            res.divisors.push_back(d.at(i, i));
            ++res.rank;
        }
    return res;
}

IntMat inverse_unimodular(const IntMat& u) {
    IntMat x;
    if (!solve_exact_mat(u, IntMat::identity(u.rows), x))
        throw MathError("matrix is not unimodular");
    return x;
}

IntMat kernel_basis(const IntMat& a) {
    if (a.rows == 0) {
        return IntMat::identity(a.cols);
    }
    SnfResult s = smith_normal_form(a);
    return s.v.col_slice(s.rank, a.cols);
}

bool solve_exact(const IntMat& a, const std::vector<i64>& b, std::vector<i64>& x) {
    IntMat bm(static_cast<int>(b.size()), 1);
    for (size_t i = 0; i < b.size(); ++i)
        bm.at(static_cast<int>(i), 0) = b[i];
    IntMat xm;
    if (!solve_exact_mat(a, bm, xm))
        return false;
    x.assign(a.cols, 0);
    for (int i = 0; i < a.cols; ++i)
        x[i] = xm.at(i, 0);
    return true;
}

bool solve_exact_mat(const IntMat& a, const IntMat& b, IntMat& x) {
    if (a.rows != b.rows)
        throw MathError("solve_exact_mat shape mismatch");
    SnfResult s = smith_normal_form(a);
    IntMat ub = s.u.mul(b);
    IntMat y(a.cols, b.cols);
    for (int j = 0; j < b.cols; ++j) {
        for (int i = 0; i < a.rows; ++i) {
            i64 di = (i < std::min(a.rows, a.cols)) ? s.d.at(i, i) : 0;
            i64 rhs = ub.at(i, j);
            if (di == 0) {
                if (rhs != 0)
                    return false;
            } else {
                if (rhs % di != 0)
                    return false;
                if (i < a.cols)
                    y.at(i, j) = rhs / di;
            }
        }
    }
    x = s.v.mul(y);
    return true;
}

IntMat lattice_basis(const IntMat& g) {
    SnfResult s = smith_normal_form(g);
    // span(g) = span(u^-1 * d): the first `rank` columns of u^-1 scaled by divisors
    IntMat uinv = inverse_unimodular(s.u);
    IntMat out(g.rows, s.rank);
    for (int j = 0; j < s.rank; ++j)
        for (int i = 0; i < g.rows; ++i)
            out.at(i, j) = checked_mul(uinv.at(i, j), s.d.at(j, j));
    return out;
}

IntMat lattice_sum(const IntMat& a, const IntMat& b) {
    if (a.cols == 0)
        return lattice_basis(b);
    if (b.cols == 0)
        return lattice_basis(a);
    return lattice_basis(a.hstack(b));
}

IntMat lattice_preimage(const IntMat& m, const IntMat& l) {
    // {x : m x in span(l)} = projection to the x-block of ker([m | -l])
    IntMat stacked = m.hstack(l);
    IntMat k = kernel_basis(stacked);
    IntMat xblock = IntMat(m.cols, k.cols);
    for (int i = 0; i < m.cols; ++i)
        for (int j = 0; j < k.cols; ++j)
            xblock.at(i, j) = k.at(i, j);
    return lattice_basis(xblock);
}

bool lattice_contains(const IntMat& basis, const std::vector<i64>& v) {
    std::vector<i64> x;
    return solve_exact(basis, v, x);
}

i64 Subquotient::order() const {
    i64 o = 1;
    for (i64 f : invariant_factors) {
        if (f == 0)
            return 0;
        o = checked_mul(o, f);
    }
    return o;
}

std::vector<i64> Subquotient::coords(const std::vector<i64>& ambient_vec) const {
    std::vector<i64> x;
    if (!solve_exact(kbasis, ambient_vec, x))
        throw MathError("vector is not in the subgroup lattice");
    std::vector<i64> y = umat.mul_vec(x);
    std::vector<i64> out;
    out.reserve(kept.size());
    for (size_t t = 0; t < kept.size(); ++t)
        out.push_back(mod_pos(y[kept[t]], invariant_factors[t]));
    return out;
}

std::vector<i64> Subquotient::reduce(const std::vector<i64>& coords_vec) const {
    std::vector<i64> out(coords_vec.size());
    for (size_t i = 0; i < coords_vec.size(); ++i)
        out[i] = mod_pos(coords_vec[i], invariant_factors[i]);
    return out;
}

Subquotient make_subquotient(const IntMat& k, const IntMat& b) {
    Subquotient q;
    q.kbasis = lattice_basis(k);
    int z = q.kbasis.cols;
    IntMat rel(z, 0);
    if (b.cols > 0) {
        if (!solve_exact_mat(q.kbasis, b, rel))
            throw MathError("relations do not lie in the subgroup lattice");
    }
    SnfResult s = smith_normal_form(rel.rows ? rel : IntMat(z, 0));
    q.umat = s.u;
    IntMat uinv = inverse_unimodular(s.u);
    q.diag.assign(z, 0);
    for (int i = 0; i < std::min(z, rel.cols); ++i)
        q.diag[i] = s.d.at(i, i);
    for (int i = 0; i < z; ++i) {
        i64 d = (i < static_cast<int>(q.diag.size())) ? q.diag[i] : 0;
        if (d == 1)
            continue;  // killed generator
        q.kept.push_back(i);
        q.invariant_factors.push_back(d);
    }
    // ambient lifts: kbasis * uinv columns
    q.uinv_cols = IntMat(z, static_cast<int>(q.kept.size()));
    for (size_t t = 0; t < q.kept.size(); ++t)
        for (int i = 0; i < z; ++i)
            q.uinv_cols.at(i, static_cast<int>(t)) = uinv.at(i, q.kept[t]);
    q.gens = q.kbasis.mul(q.uinv_cols);
    return q;
}

bool F2Vec::is_zero() const {
    for (uint64_t x : w)
        if (x)
            return false;
    return true;
}

F2Mat F2Mat::transpose() const {
    F2Mat out(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (get(i, j))
                out.set(j, i, true);
    return out;
}

F2Vec F2Mat::mul_vec(const F2Vec& v) const {
    F2Vec out(rows);
    for (int i = 0; i < rows; ++i) {
        uint64_t acc = 0;
        for (size_t b = 0; b < r[i].w.size(); ++b)
            acc ^= r[i].w[b] & v.w[b];
        out.set(i, __builtin_parityll(acc));
    }
    return out;
}

F2Rref f2_rref(F2Mat m) {
    F2Rref out;
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int piv = -1;
        for (int i = rank; i < m.rows; ++i)
            if (m.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(m.r[piv], m.r[rank]);
        for (int i = 0; i < m.rows; ++i)
            if (i != rank && m.get(i, c))
                m.r[i] ^= m.r[rank];
        out.pivots.push_back(c);
        ++rank;
    }
    out.rank = rank;
    out.m = std::move(m);
    return out;
}

int f2_rank(F2Mat m) { return f2_rref(std::move(m)).rank; }

bool f2_in_span(const F2Rref& rr, F2Vec v) {
    for (int i = 0; i < rr.rank; ++i)
        if (v.get(rr.pivots[i]))
            v ^= rr.m.r[i];
    return v.is_zero();
}

F2Solver::F2Solver(const F2Mat& m) : n(m.cols), k(m.rows) {
    rows = m;
    combo = F2Mat(k, k);
    for (int i = 0; i < k; ++i)
        combo.set(i, i, true);
    int rank = 0;
    for (int c = 0; c < n && rank < k; ++c) {
        int piv = -1;
        for (int i = rank; i < k; ++i)
            if (rows.get(i, c)) {
                piv = i;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(rows.r[piv], rows.r[rank]);
        std::swap(combo.r[piv], combo.r[rank]);
        for (int i = 0; i < k; ++i)
            if (i != rank && rows.get(i, c)) {
                rows.r[i] ^= rows.r[rank];
                combo.r[i] ^= combo.r[rank];
            }
        pivots.push_back(c);
        ++rank;
    }
}

bool F2Solver::solve(const F2Vec& target, F2Vec& out_combo) const {
    F2Vec v = target;
    F2Vec c(k);
    for (size_t i = 0; i < pivots.size(); ++i)
        if (v.get(pivots[i])) {
            v ^= rows.r[i];
            c ^= combo.r[i];
        }
    if (!v.is_zero())
        return false;
    out_combo = c;
    return true;
}

F2Mat f2_kernel(const F2Mat& m) {
    F2Solver s(m);
    std::vector<int> free_rows;
    for (int i = static_cast<int>(s.pivots.size()); i < m.rows; ++i)
        free_rows.push_back(i);
    F2Mat out(static_cast<int>(free_rows.size()), m.rows);
    for (size_t t = 0; t < free_rows.size(); ++t)
        out.r[t] = s.combo.r[free_rows[t]];
    return out;
}

void SparseIntMat::add(int r, int c, i64 v) {
    if (v)
        col[c].push_back({r, v});
}

void SparseIntMat::finalize() {
    for (auto& cc : col) {
        std::sort(cc.begin(), cc.end());
        std::vector<std::pair<int, i64>> merged;
        for (auto& [r, v] : cc) {
            if (!merged.empty() && merged.back().first == r)
                merged.back().second += v;
            else
                merged.push_back({r, v});
        }
        cc.clear();
        for (auto& [r, v] : merged)
            if (v)
                cc.push_back({r, v});
    }
}

size_t SparseIntMat::nnz() const {
    size_t n = 0;
    for (auto& cc : col)
        n += cc.size();
    return n;
}

namespace {

std::vector<std::pair<int, i64>> col_axpy_sparse(const std::vector<std::pair<int, i64>>& x,
                                                 const std::vector<std::pair<int, i64>>& y, i64 q) {
    std::vector<std::pair<int, i64>> out;
    out.reserve(x.size() + y.size());
    size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
        if (j >= y.size() || (i < x.size() && x[i].first < y[j].first)) {
            out.push_back(x[i++]);
        } else if (i >= x.size() || y[j].first < x[i].first) {
            out.push_back({y[j].first, checked_mul(q, y[j].second)});
            ++j;
        } else {
            i64 v = checked_add(x[i].second, checked_mul(q, y[j].second));
            if (v)
                out.push_back({x[i].first, v});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

std::vector<i64> sparse_snf_divisors(SparseIntMat m, int dense_limit) {
    m.finalize();
    std::vector<i64> divisors;
    std::vector<bool> col_done(m.cols, false);
    // row -> live columns index
    std::vector<std::vector<int>> row_cols(m.rows);
    for (int c = 0; c < m.cols; ++c)
        for (auto& [r, v] : m.col[c])
            row_cols[r].push_back(c);

    auto live_nnz_row = [&](int r) {
        int n = 0;
        for (int c : row_cols[r])
            if (!col_done[c])
                ++n;
        return n;
    };

    int unit_count = 0;
    while (true) {
        // greedy unit pivot: min fill estimate
        int best_c = -1, best_r = -1;
        long best_score = -1;
        for (int c = 0; c < m.cols; ++c) {
            if (col_done[c] || m.col[c].empty())
                continue;
            for (auto& [r, v] : m.col[c]) {
                if (v != 1 && v != -1)
                    continue;
                long score = static_cast<long>(m.col[c].size() - 1) * (live_nnz_row(r) - 1);
                if (best_score < 0 || score < best_score) {
                    best_score = score;
                    best_c = c;
                    best_r = r;
                }
                if (best_score == 0)
                    break;
            }
            if (best_score == 0)
                break;
        }
        if (best_c < 0)
            break;
        // eliminate best_r from all other live columns
        i64 pivval = 0;
        for (auto& [r, v] : m.col[best_c])
            if (r == best_r)
                pivval = v;
        std::vector<int> touched = row_cols[best_r];
        for (int c : touched) {
            if (c == best_c || col_done[c])
                continue;
            i64 v = 0;
            for (auto& [r, val] : m.col[c])
                if (r == best_r)
                    v = val;
            if (!v)
                continue;
            i64 q = -v * pivval;  // pivval is +-1
            m.col[c] = col_axpy_sparse(m.col[c], m.col[best_c], q);
            for (auto& [r, val] : m.col[c])
                row_cols[r].push_back(c);
        }
        col_done[best_c] = true;
        m.col[best_c].clear();
        ++unit_count;
    }
    for (int i = 0; i < unit_count; ++i)
        divisors.push_back(1);

    // collect the residual into a dense matrix
    std::map<int, int> row_ids;
    int live_cols = 0;
    for (int c = 0; c < m.cols; ++c)
        if (!col_done[c] && !m.col[c].empty())
            ++live_cols;
    if (live_cols > 0) {
        for (int c = 0; c < m.cols; ++c)
            if (!col_done[c])
                for (auto& [r, v] : m.col[c])
                    if (!row_ids.count(r))
                        row_ids[r] = static_cast<int>(row_ids.size());
        if (static_cast<int>(row_ids.size()) > dense_limit || live_cols > dense_limit)
            throw MathError("sparse SNF residual too large");
        IntMat dense(static_cast<int>(row_ids.size()), live_cols);
        int j = 0;
        for (int c = 0; c < m.cols; ++c) {
            if (col_done[c])
                continue;
            for (auto& [r, v] : m.col[c])
                dense.at(row_ids[r], j) = v;
            ++j;
        }
        SnfResult s = smith_normal_form(dense);
        for (i64 d : s.divisors)
            divisors.push_back(d);
    }
    return invariant_factors_from_divisors(divisors);
}

std::vector<i64> invariant_factors_from_divisors(std::vector<i64> divisors) {
    // split into prime powers, then rebuild the divisibility chain
    std::map<i64, std::vector<int>> exps;  // prime -> exponents
    for (i64 d : divisors) {
        if (d < 0)
            d = -d;
        if (d <= 1)
            continue;
        for (i64 p = 2; p * p <= d; ++p) {
            if (d % p)
                continue;
            int e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            exps[p].push_back(e);
        }
        if (d > 1)
            exps[d].push_back(1);
    }
    size_t chain_len = 0;
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<i64> chain(chain_len, 1);
    for (auto& [p, es] : exps) {
        // largest exponents align with the end of the chain
        for (size_t i = 0; i < es.size(); ++i) {
            size_t pos = chain_len - es.size() + i;
            i64 pe = 1;
            for (int e = 0; e < es[i]; ++e)
                pe = checked_mul(pe, p);
            chain[pos] = checked_mul(chain[pos], pe);
        }
    }
    return chain;
}

int sparse_rank_modp(const SparseIntMat& min, uint32_t p) {
    // column-based elimination mod p
    std::vector<std::vector<std::pair<int, uint32_t>>> cols(min.cols);
    for (int c = 0; c < min.cols; ++c)
        for (auto& [r, v] : min.col[c]) {
            uint32_t vv = static_cast<uint32_t>(mod_pos(v, p));
            if (vv)
                cols[c].push_back({r, vv});
        }
    auto modinv = [&](uint32_t a) {
        // p is prime
        uint64_t base = a, result = 1;
        uint32_t e = p - 2;
        while (e) {
            if (e & 1)
                result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<uint32_t>(result);
    };
    std::vector<int> pivot_of_row(min.rows, -1);
    std::vector<int> pivot_row_of_col(min.cols, -1);
    int rank = 0;
    // process columns in order of sparsity
    std::vector<int> order(min.cols);
    for (int i = 0; i < min.cols; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return cols[a].size() < cols[b].size(); });
    for (int c : order) {
        auto& col = cols[c];
        // reduce against existing pivots
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto& [r, v] : col) {
                int pc = pivot_of_row[r];
                if (pc >= 0 && pc != c) {
                    // col -= v / pivot_val * cols[pc]
                    uint32_t pv = 0;
                    for (auto& [rr, vv] : cols[pc])
                        if (rr == pivot_row_of_col[pc] && pivot_row_of_col[pc] == r)
                            pv = vv;
                    // only the pivot row entry matters; pivot col normalized below
                    (void)pv;
                    uint32_t factor = v;  // pivot cols are normalized to 1 at pivot row
                    std::vector<std::pair<int, uint32_t>> out;
                    out.reserve(col.size() + cols[pc].size());
                    size_t i = 0, j = 0;
                    auto& pcol = cols[pc];
                    while (i < col.size() || j < pcol.size()) {
                        if (j >= pcol.size() || (i < col.size() && col[i].first < pcol[j].first))
                            out.push_back(col[i++]);
                        else if (i >= col.size() || pcol[j].first < col[i].first) {
                            uint64_t nv = (uint64_t)(p - factor) * pcol[j].second % p;
                            if (nv)
                                out.push_back({pcol[j].first, (uint32_t)nv});
                            ++j;
                        } else {
                            uint64_t nv = (col[i].second + (uint64_t)(p - factor) * pcol[j].second) % p;
                            if (nv)
                                out.push_back({col[i].first, (uint32_t)nv});
                            ++i;
                            ++j;
                        }
                    }
                    col = std::move(out);
                    changed = true;
                    break;
                }
            }
        }
        if (col.empty())
            continue;
        // pick sparsest-row entry as pivot (first entry works fine)
        int pr = col.front().first;
        uint32_t pv = col.front().second;
        uint32_t inv = modinv(pv);
        for (auto& [r, v] : col)
            v = static_cast<uint32_t>((uint64_t)v * inv % p);
        pivot_of_row[pr] = c;
        pivot_row_of_col[c] = pr;
        // normalize so pivot row lookup works: move pivot entry first
        std::stable_partition(col.begin(), col.end(), [&](auto& e) { return e.first == pr; });
        ++rank;
    }
    return rank;
}

}  // namespace shc
