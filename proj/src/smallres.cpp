#include "shcalc/smallres.hpp"

#include <cassert>
#include <functional>

namespace shc {

namespace {

void enumerate_tuples(int nfac, int deg, std::vector<int>& cur, int pos,
                      std::vector<std::vector<int>>& out) {
    if (pos == nfac - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = 0; e <= deg; ++e) {
        cur[pos] = e;
        enumerate_tuples(nfac, deg - e, cur, pos + 1, out);
    }
}

}  // namespace

SmallResolution::SmallResolution(FiniteAbelianGroup g, int max_degree)
    : g_(std::move(g)), max_degree_(max_degree) {
    order_ = g_.order();
    int r = static_cast<int>(g_.rank());
    strides_.assign(r, 1);
    for (int k = r - 2; k >= 0; --k)
        strides_[k] = strides_[k + 1] * g_.factors[k + 1];
    tuples_.resize(max_degree_ + 2);
    tuple_idx_.resize(max_degree_ + 2);
    for (int n = 0; n <= max_degree_ + 1; ++n) {
        if (r == 0) {
            if (n == 0)
                tuples_[n].push_back({});
        } else {
            std::vector<int> cur(r, 0);
            enumerate_tuples(r, n, cur, 0, tuples_[n]);
        }
        for (size_t i = 0; i < tuples_[n].size(); ++i)
            tuple_idx_[n][tuples_[n][i]] = static_cast<int>(i);
    }
    delta_.resize(max_degree_ + 1);
}

int SmallResolution::tuple_index(int deg, const std::vector<int>& e) const {
    auto it = tuple_idx_[deg].find(e);
    if (it == tuple_idx_[deg].end())
        throw MathError("unknown exponent tuple");
    return it->second;
}

int SmallResolution::gindex(const std::vector<i64>& x) const {
    i64 idx = 0;
    for (size_t k = 0; k < g_.rank(); ++k)
        idx += mod_pos(x[k], g_.factors[k]) * strides_[k];
    return static_cast<int>(idx);
}

std::vector<i64> SmallResolution::gelement(int idx) const {
    std::vector<i64> x(g_.rank());
    for (size_t k = 0; k < g_.rank(); ++k) {
        x[k] = idx / strides_[k];
        idx = static_cast<int>(idx % strides_[k]);
    }
    return x;
}

SmallResolution::Elem SmallResolution::basis_elem(int deg, int gidx, int tidx) const {
    Elem e = zero(deg);
    e[static_cast<size_t>(gidx) * rank(deg) + tidx] = 1;
    return e;
}

SmallResolution::Elem SmallResolution::diff(int deg, const Elem& x) const {
    Elem out = zero(deg - 1);
    int rk = rank(deg), rk1 = rank(deg - 1);
    int r = static_cast<int>(g_.rank());
    for (int gi = 0; gi < order_; ++gi) {
        std::vector<i64> gv = gelement(gi);
        for (int t = 0; t < rk; ++t) {
            i64 c = x[static_cast<size_t>(gi) * rk + t];
            if (!c)
                continue;
            const std::vector<int>& e = tuples_[deg][t];
            int sign = 1;
            for (int k = 0; k < r; ++k) {
                if (e[k] > 0) {
                    std::vector<int> e2 = e;
                    e2[k] -= 1;
                    int t2 = tuple_index(deg - 1, e2);
                    if (e[k] % 2 == 1) {
                        // d(w_odd) = (g_k - 1) w_even
                        std::vector<i64> gv2 = gv;
                        gv2[k] += 1;
                        out[static_cast<size_t>(gindex(gv2)) * rk1 + t2] += sign * c;
                        out[static_cast<size_t>(gi) * rk1 + t2] -= sign * c;
                    } else {
                        // d(w_even) = N_k w_odd
                        std::vector<i64> gv2 = gv;
                        for (i64 j = 0; j < g_.factors[k]; ++j) {
                            gv2[k] = j;
                            out[static_cast<size_t>(gindex(gv2)) * rk1 + t2] += sign * c;
                        }
                    }
                }
                if (e[k] % 2 == 1)
                    sign = -sign;
            }
        }
    }
    return out;
}

SmallResolution::Elem SmallResolution::homotopy(int deg, const Elem& x) const {
    Elem out = zero(deg + 1);
    int rk = rank(deg), rk1 = rank(deg + 1);
    int r = static_cast<int>(g_.rank());
    for (int gi = 0; gi < order_; ++gi) {
        std::vector<i64> gv = gelement(gi);
        for (int t = 0; t < rk; ++t) {
            i64 c = x[static_cast<size_t>(gi) * rk + t];
            if (!c)
                continue;
            const std::vector<int>& e = tuples_[deg][t];
            // s = sum_k (eta eps)_{<k} (x) s_k (x) id_{>k}; the k-th term needs
            // e_j = 0 for all j < k, and replaces those group coordinates by 0.
            for (int k = 0; k < r; ++k) {
                if (k > 0 && e[k - 1] != 0)
                    break;  // some earlier exponent nonzero: eta eps kills it
                bool earlier_zero = true;
                for (int j = 0; j < k; ++j)
                    if (e[j] != 0)
                        earlier_zero = false;
                if (!earlier_zero)
                    break;
                std::vector<int> e2 = e;
                e2[k] += 1;
                int t2 = tuple_index(deg + 1, e2);
                std::vector<i64> gv2 = gv;
                for (int j = 0; j < k; ++j)
                    gv2[j] = 0;
                if (e[k] % 2 == 0) {
                    // s(g^j w_even) = sum_{i<j} g^i w_odd
                    for (i64 i = 0; i < gv[k]; ++i) {
                        gv2[k] = i;
                        out[static_cast<size_t>(gindex(gv2)) * rk1 + t2] += c;
                    }
                } else {
                    // s(g^j w_odd) = [j = m-1] w_even
                    if (gv[k] == g_.factors[k] - 1) {
                        gv2[k] = 0;
                        out[static_cast<size_t>(gindex(gv2)) * rk1 + t2] += c;
                    }
                }
            }
        }
    }
    return out;
}

SmallResolution::Elem SmallResolution::translate(int gidx, int deg, const Elem& x) const {
    Elem out = zero(deg);
    int rk = rank(deg);
    std::vector<i64> gv = gelement(gidx);
    for (int gi = 0; gi < order_; ++gi) {
        std::vector<i64> sum = gelement(gi);
        for (size_t k = 0; k < g_.rank(); ++k)
            sum[k] += gv[k];
        int target = gindex(sum);
        for (int t = 0; t < rk; ++t) {
            i64 c = x[static_cast<size_t>(gi) * rk + t];
            if (c)
                out[static_cast<size_t>(target) * rk + t] += c;
        }
    }
    return out;
}

const IntMat& SmallResolution::delta(int deg) const {
    if (!delta_[deg]) {
        int rk = rank(deg), rk1 = rank(deg + 1);
        auto m = std::make_unique<IntMat>(rk1, rk);
        int r = static_cast<int>(g_.rank());
        for (int t2 = 0; t2 < rk1; ++t2) {
            const std::vector<int>& e2 = tuples_[deg + 1][t2];
            int sign = 1;
            for (int k = 0; k < r; ++k) {
                if (e2[k] > 0) {
                    std::vector<int> e = e2;
                    e[k] -= 1;
                    int t = tuple_index(deg, e);
                    // epsilon(g-1) = 0, epsilon(N) = m_k
                    if (e2[k] % 2 == 0)
                        m->at(t2, t) += sign * g_.factors[k];
                }
                if (e2[k] % 2 == 1)
                    sign = -sign;
            }
        }
        delta_[deg] = std::move(m);
    }
    return *delta_[deg];
}

std::vector<i64> SmallResolution::trivialize(int deg, const Elem& x) const {
    int rk = rank(deg);
    std::vector<i64> out(rk, 0);
    for (int gi = 0; gi < order_; ++gi)
        for (int t = 0; t < rk; ++t)
            out[t] = checked_add(out[t], x[static_cast<size_t>(gi) * rk + t]);
    return out;
}

SmallChainMap::SmallChainMap(const GroupHom& f, const SmallResolution& dom,
                             const SmallResolution& cod, int max_degree)
    : dom_(dom), cod_(cod), f_(f) {
    if (!(f.dom == dom.group()) || !(f.cod == cod.group()))
        throw MathError("chain map groups mismatch");
    images_.resize(max_degree + 1);
    images_[0].push_back(cod_.basis_elem(0, 0, 0));
    for (int n = 1; n <= max_degree; ++n) {
        images_[n].resize(dom_.rank(n));
        for (int t = 0; t < dom_.rank(n); ++t) {
            // psi(w_e) = s_cod( psi(d w_e) ), pushing group coefficients through f
            SmallResolution::Elem dx =
                dom_.diff(n, dom_.basis_elem(n, 0, t));
            SmallResolution::Elem acc = cod_.zero(n - 1);
            int rk1 = dom_.rank(n - 1);
            for (int gi = 0; gi < dom_.group_order(); ++gi) {
                std::vector<i64> a = dom_.gelement(gi);
                int fgi = cod_.gindex(f_.apply(a));
                for (int t1 = 0; t1 < rk1; ++t1) {
                    i64 c = dx[static_cast<size_t>(gi) * rk1 + t1];
                    if (!c)
                        continue;
                    SmallResolution::Elem term =
                        cod_.translate(fgi, n - 1, images_[n - 1][t1]);
                    for (size_t i = 0; i < acc.size(); ++i)
                        acc[i] += c * term[i];
                }
            }
            images_[n][t] = cod_.homotopy(n - 1, acc);
        }
    }
}

IntMat SmallChainMap::trivialized(int deg) const {
    IntMat m(dom_.rank(deg), cod_.rank(deg));
    for (int t = 0; t < dom_.rank(deg); ++t) {
        std::vector<i64> row = cod_.trivialize(deg, images_[deg][t]);
        for (int j = 0; j < cod_.rank(deg); ++j)
            m.at(t, j) = row[j];
    }
    return m;
}

void SmallChainMap::self_check(int max_degree) const {
    for (int n = 1; n <= max_degree; ++n) {
        for (int t = 0; t < dom_.rank(n); ++t) {
            // d(psi(w)) must equal psi(d w)
            SmallResolution::Elem lhs = cod_.diff(n, images_[n][t]);
            SmallResolution::Elem dx = dom_.diff(n, dom_.basis_elem(n, 0, t));
            SmallResolution::Elem rhs = cod_.zero(n - 1);
            int rk1 = dom_.rank(n - 1);
            for (int gi = 0; gi < dom_.group_order(); ++gi) {
                std::vector<i64> a = dom_.gelement(gi);
                int fgi = cod_.gindex(f_.apply(a));
                for (int t1 = 0; t1 < rk1; ++t1) {
                    i64 c = dx[static_cast<size_t>(gi) * rk1 + t1];
                    if (!c)
                        continue;
                    SmallResolution::Elem term = cod_.translate(fgi, n - 1, images_[n - 1][t1]);
                    for (size_t i = 0; i < rhs.size(); ++i)
                        rhs[i] += c * term[i];
                }
            }
            if (lhs != rhs)
                throw MathError("chain map self check failed");
        }
    }
}

}  // namespace shc
