#pragma once

#include "shcalc/linalg.hpp"
#include "shcalc/smallres.hpp"

#include <map>
#include <set>
#include <vector>

namespace shc {

/* Mod-2 bar resolution machinery for a finite abelian 2-group, tied to its
 * small resolution: comparison chain maps in both directions (built by
 * lifting against contracting homotopies) and the cup-i coproducts used by
 * the Steenrod oracle. Everything here is F2-linear and exact. */
class BarComparison {
  public:
    /* A bar basis element g0*[g1|...|gn] as indices; word() drops g0. */
    using BarBasis = std::vector<uint16_t>;
    using BarElem = std::set<BarBasis>;  // F2 sum
    using TensorBasis = std::pair<BarBasis, BarBasis>;
    using TensorElem = std::set<TensorBasis>;

    explicit BarComparison(const SmallResolution& w);

    int mul(int a, int b) const { return mul_[a][b]; }

    BarElem bar_diff(const BarElem& x) const;
    BarElem bar_homotopy(const BarElem& x) const;

    /* u: W -> Bar, image of the module generator w_e (F2 coefficients). */
    const BarElem& u_image(int deg, int tuple);
    /* v: Bar -> W applied to a module generator [g1|...|gn]; returns the
     * trivialized mod-2 vector over W tuples of that degree (enough for
     * trivial-coefficient cochain transport). */
    const F2Vec& v_word_trivialized(const BarBasis& word);

    /* Value at `word` of the bar cochain corresponding to the W-monomial
     * cochain `c` in degree deg(word). */
    bool eval_bar_cochain(const F2Vec& c, const BarBasis& word);

    /* Cup-i coproduct D_i([word]) with left-degree p (only pairs whose left
     * factor has word length p are kept when p >= 0). */
    const TensorElem& cup_coproduct(int i, const BarBasis& word);

    /* (c ^_i c2)(word): both c, c2 given as W-monomial cochains of degrees
     * p and q, |word| = p + q - i. */
    bool cup_i_value(int i, const F2Vec& c, int p, const F2Vec& c2, int q, const BarBasis& word);

    /* Transport a bar-level cochain value function back through u: the
     * W-cochain vector in degree deg. */
    template <typename Fn>
    F2Vec transport_to_small(int deg, Fn&& value_at_word) {
        F2Vec out(w_.rank(deg));
        for (int t = 0; t < w_.rank(deg); ++t) {
            bool acc = false;
            for (const BarBasis& b : u_image(deg, t)) {
                BarBasis word(b.begin() + 1, b.end());
                if (value_at_word(word))
                    acc = !acc;
            }
            out.set(t, acc);
        }
        return out;
    }

    void self_check(int max_degree);

  private:
    const SmallResolution& w_;
    int order_;
    std::vector<std::vector<int>> mul_;
    std::vector<std::vector<BarElem>> u_;                    // [deg][tuple]
    std::map<BarBasis, F2Vec> v_trivial_;                    // word -> trivialized W vector
    std::map<BarBasis, std::vector<std::pair<int, int>>> v_full_;  // word -> W elem (sparse (gidx,tuple))
    std::vector<std::map<BarBasis, TensorElem>> dmaps_;      // [i][word]

    std::vector<std::pair<int, int>> v_word_full(const BarBasis& word);
    void ensure_u(int deg);
};

/* F2 symmetric difference helpers. */
void xor_into(BarComparison::BarElem& dst, const BarComparison::BarBasis& b);
void xor_into(BarComparison::TensorElem& dst, const BarComparison::TensorBasis& b);

}  // namespace shc
