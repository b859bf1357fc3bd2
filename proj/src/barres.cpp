#include "shcalc/barres.hpp"

#include <algorithm>
#include <cassert>

namespace shc {

void xor_into(BarComparison::BarElem& dst, const BarComparison::BarBasis& b) {
    auto it = dst.find(b);
    if (it == dst.end())
        dst.insert(b);
    else
        dst.erase(it);
}

void xor_into(BarComparison::TensorElem& dst, const BarComparison::TensorBasis& b) {
    auto it = dst.find(b);
    if (it == dst.end())
        dst.insert(b);
    else
        dst.erase(it);
}

BarComparison::BarComparison(const SmallResolution& w) : w_(w) {
    order_ = static_cast<int>(w_.group_order());
    if (order_ > 4096)
        throw MathError("bar comparison: group too large");
    if (w_.group().order() % 2 == 1 && w_.group().order() > 1)
        throw MathError("bar comparison: 2-group expected");
    for (i64 m : w_.group().factors)
        if (m % 2 != 0)
            throw MathError("bar comparison: 2-group expected");
    mul_.assign(order_, std::vector<int>(order_));
    for (int a = 0; a < order_; ++a) {
        std::vector<i64> av = w_.gelement(a);
        for (int b = 0; b < order_; ++b) {
            std::vector<i64> bv = w_.gelement(b);
            std::vector<i64> cv(av.size());
            for (size_t k = 0; k < av.size(); ++k)
                cv[k] = av[k] + bv[k];
            mul_[a][b] = w_.gindex(cv);
        }
    }
    u_.resize(w_.max_degree() + 2);
    dmaps_.resize(8);
}

BarComparison::BarElem BarComparison::bar_diff(const BarElem& x) const {
    BarElem out;
    for (const BarBasis& b : x) {
        int n = static_cast<int>(b.size()) - 1;
        if (n == 0)
            continue;
        // (g0 g1)[g2..gn]
        BarBasis t0;
        t0.push_back(static_cast<uint16_t>(mul_[b[0]][b[1]]));
        t0.insert(t0.end(), b.begin() + 2, b.end());
        xor_into(out, t0);
        // inner face maps
        for (int i = 1; i < n; ++i) {
            BarBasis t(b.begin(), b.begin() + i);
            t.push_back(static_cast<uint16_t>(mul_[b[i]][b[i + 1]]));
            t.insert(t.end(), b.begin() + i + 2, b.end());
            xor_into(out, t);
        }
        // drop the last letter
        BarBasis tn(b.begin(), b.end() - 1);
        xor_into(out, tn);
    }
    return out;
}

BarComparison::BarElem BarComparison::bar_homotopy(const BarElem& x) const {
    BarElem out;
    for (const BarBasis& b : x) {
        BarBasis t;
        t.push_back(0);  // identity in front
        t.insert(t.end(), b.begin(), b.end());
        xor_into(out, t);
    }
    return out;
}

void BarComparison::ensure_u(int deg) {
    if (!u_[deg].empty() || w_.rank(deg) == 0)
        return;
    if (deg == 0) {
        u_[0].resize(1);
        xor_into(u_[0][0], BarBasis{0});
        return;
    }
    ensure_u(deg - 1);
    u_[deg].resize(w_.rank(deg));
    int rk1 = w_.rank(deg - 1);
    for (int t = 0; t < w_.rank(deg); ++t) {
        SmallResolution::Elem dx = w_.diff(deg, w_.basis_elem(deg, 0, t));
        BarElem acc;
        for (int gi = 0; gi < order_; ++gi)
            for (int t1 = 0; t1 < rk1; ++t1) {
                if (mod_pos(dx[static_cast<size_t>(gi) * rk1 + t1], 2) == 0)
                    continue;
                for (const BarBasis& b : u_[deg - 1][t1]) {
                    BarBasis tb = b;
                    tb[0] = static_cast<uint16_t>(mul_[gi][b[0]]);
                    xor_into(acc, tb);
                }
            }
        u_[deg][t] = bar_homotopy(acc);
    }
}

const BarComparison::BarElem& BarComparison::u_image(int deg, int tuple) {
    ensure_u(deg);
    return u_[deg][tuple];
}

std::vector<std::pair<int, int>> BarComparison::v_word_full(const BarBasis& word) {
    auto it = v_full_.find(word);
    if (it != v_full_.end())
        return it->second;
    std::vector<std::pair<int, int>> result;
    int n = static_cast<int>(word.size());
    if (n == 0) {
        result.push_back({0, 0});
        v_full_[word] = result;
        return result;
    }
    // v([g1..gn]) = s_W( v(d [g1..gn]) ), with d at module-generator level
    SmallResolution::Elem acc = w_.zero(n - 1);
    int rk1 = w_.rank(n - 1);
    auto add_term = [&](int translate_g, const BarBasis& sub) {
        std::vector<std::pair<int, int>> vt = v_word_full(sub);
        for (auto& [gi, t] : vt) {
            int g2 = mul_[translate_g][gi];
            acc[static_cast<size_t>(g2) * rk1 + t] ^= 1;
        }
    };
    // g1 * [g2..gn]
    add_term(word[0], BarBasis(word.begin() + 1, word.end()));
    // inner faces
    for (int i = 0; i + 1 < n; ++i) {
        BarBasis t(word.begin(), word.begin() + i);
        t.push_back(static_cast<uint16_t>(mul_[word[i]][word[i + 1]]));
        t.insert(t.end(), word.begin() + i + 2, word.end());
        add_term(0, t);
    }
    // drop last
    add_term(0, BarBasis(word.begin(), word.end() - 1));

    for (auto& c : acc)
        c = mod_pos(c, 2);
    SmallResolution::Elem lifted = w_.homotopy(n - 1, acc);
    int rk = w_.rank(n);
    for (int gi = 0; gi < order_; ++gi)
        for (int t = 0; t < rk; ++t)
            if (mod_pos(lifted[static_cast<size_t>(gi) * rk + t], 2))
                result.push_back({gi, t});
    v_full_[word] = result;
    return result;
}

const F2Vec& BarComparison::v_word_trivialized(const BarBasis& word) {
    auto it = v_trivial_.find(word);
    if (it != v_trivial_.end())
        return it->second;
    std::vector<std::pair<int, int>> full = v_word_full(word);
    F2Vec v(w_.rank(static_cast<int>(word.size())));
    for (auto& [gi, t] : full)
        v.set(t, !v.get(t));
    return v_trivial_[word] = v;
}

bool BarComparison::eval_bar_cochain(const F2Vec& c, const BarBasis& word) {
    const F2Vec& tv = v_word_trivialized(word);
    uint64_t acc = 0;
    for (size_t i = 0; i < tv.w.size(); ++i)
        acc ^= tv.w[i] & c.w[i];
    return __builtin_parityll(acc);
}

const BarComparison::TensorElem& BarComparison::cup_coproduct(int i, const BarBasis& word) {
    if (i >= static_cast<int>(dmaps_.size()))
        throw MathError("cup-i index too large");
    auto& memo = dmaps_[i];
    auto it = memo.find(word);
    if (it != memo.end())
        return it->second;
    TensorElem out;
    int n = static_cast<int>(word.size());
    if (i == 0) {
        // Alexander-Whitney: sum of front face (x) translated back face
        for (int k = 0; k <= n; ++k) {
            BarBasis left;
            left.push_back(0);
            left.insert(left.end(), word.begin(), word.begin() + k);
            int g = 0;
            for (int j = 0; j < k; ++j)
                g = mul_[g][word[j]];
            BarBasis right;
            right.push_back(static_cast<uint16_t>(g));
            right.insert(right.end(), word.begin() + k, word.end());
            xor_into(out, {left, right});
        }
        return memo[word] = out;
    }
    // D_i = s_ten( (1+T) D_{i-1}([w]) + D_i(d[w]) )
    TensorElem pre;
    const TensorElem& prev = cup_coproduct(i - 1, word);
    for (const TensorBasis& tb : prev) {
        xor_into(pre, tb);
        xor_into(pre, {tb.second, tb.first});
    }
    if (n > 0) {
        auto add_translated = [&](int g, const BarBasis& sub) {
            const TensorElem& sx = cup_coproduct(i, sub);
            for (const TensorBasis& tb : sx) {
                TensorBasis moved = tb;
                moved.first[0] = static_cast<uint16_t>(mul_[g][tb.first[0]]);
                moved.second[0] = static_cast<uint16_t>(mul_[g][tb.second[0]]);
                xor_into(pre, moved);
            }
        };
        add_translated(word[0], BarBasis(word.begin() + 1, word.end()));
        for (int k = 0; k + 1 < n; ++k) {
            BarBasis t(word.begin(), word.begin() + k);
            t.push_back(static_cast<uint16_t>(mul_[word[k]][word[k + 1]]));
            t.insert(t.end(), word.begin() + k + 2, word.end());
            add_translated(0, t);
        }
        add_translated(0, BarBasis(word.begin(), word.end() - 1));
    }
    // tensor homotopy: s (x) 1 + (eta eps) (x) s
    for (const TensorBasis& tb : pre) {
        BarBasis sl = tb.first;
        BarBasis left;
        left.push_back(0);
        left.insert(left.end(), sl.begin(), sl.end());
        xor_into(out, {left, tb.second});
        if (tb.first.size() == 1) {  // left factor has degree 0
            BarBasis el{0};
            BarBasis sr;
            sr.push_back(0);
            sr.insert(sr.end(), tb.second.begin(), tb.second.end());
            xor_into(out, {el, sr});
        }
    }
    return memo[word] = out;
}

bool BarComparison::cup_i_value(int i, const F2Vec& c, int p, const F2Vec& c2, int q,
                                const BarBasis& word) {
    if (static_cast<int>(word.size()) != p + q - i)
        throw MathError("cup_i_value degree mismatch");
    const TensorElem& d = cup_coproduct(i, word);
    bool acc = false;
    for (const TensorBasis& tb : d) {
        if (static_cast<int>(tb.first.size()) - 1 != p ||
            static_cast<int>(tb.second.size()) - 1 != q)
            continue;
        BarBasis lw(tb.first.begin() + 1, tb.first.end());
        BarBasis rw(tb.second.begin() + 1, tb.second.end());
        if (eval_bar_cochain(c, lw) && eval_bar_cochain(c2, rw))
            acc = !acc;
    }
    return acc;
}

void BarComparison::self_check(int max_degree) {
    // ds + sd = 1 - eta eps on bar basis elements
    for (int g = 0; g < std::min(order_, 4); ++g) {
        BarElem x;
        xor_into(x, BarBasis{static_cast<uint16_t>(g)});
        BarElem hs = bar_diff(bar_homotopy(x));
        BarElem expect;
        xor_into(expect, BarBasis{static_cast<uint16_t>(g)});
        xor_into(expect, BarBasis{0});
        if (hs != expect)
            throw MathError("bar homotopy identity failed in degree 0");
    }
    // u is a chain map mod 2
    for (int n = 1; n <= max_degree; ++n) {
        for (int t = 0; t < w_.rank(n); ++t) {
            BarElem lhs = bar_diff(u_image(n, t));
            SmallResolution::Elem dx = w_.diff(n, w_.basis_elem(n, 0, t));
            BarElem rhs;
            int rk1 = w_.rank(n - 1);
            for (int gi = 0; gi < order_; ++gi)
                for (int t1 = 0; t1 < rk1; ++t1) {
                    if (mod_pos(dx[static_cast<size_t>(gi) * rk1 + t1], 2) == 0)
                        continue;
                    for (const BarBasis& b : u_image(n - 1, t1)) {
                        BarBasis tb = b;
                        tb[0] = static_cast<uint16_t>(mul_[gi][b[0]]);
                        xor_into(rhs, tb);
                    }
                }
            if (lhs != rhs)
                throw MathError("comparison u is not a chain map");
        }
    }
}

}  // namespace shc
