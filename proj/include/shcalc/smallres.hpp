#pragma once

#include "shcalc/abelian.hpp"
#include "shcalc/linalg.hpp"

#include <map>
#include <memory>
#include <vector>

namespace shc {

/* Free resolution of Z over Z[G] for finite abelian G: one periodic
 * resolution per cyclic factor, tensored. Module basis of W_n: exponent
 * tuples e with |e| = n. Z-basis: (group element, tuple).
 *
 * Elements of W_n are dense coefficient vectors indexed by
 * gidx * rank(n) + tuple_index. */
class SmallResolution {
  public:
    using Elem = std::vector<i64>;

    explicit SmallResolution(FiniteAbelianGroup g, int max_degree);

    const FiniteAbelianGroup& group() const { return g_; }
    int max_degree() const { return max_degree_; }
    int rank(int deg) const { return static_cast<int>(tuples_[deg].size()); }
    const std::vector<std::vector<int>>& tuples(int deg) const { return tuples_[deg]; }
    int tuple_index(int deg, const std::vector<int>& e) const;
    i64 group_order() const { return order_; }

    int gindex(const std::vector<i64>& x) const;     // element -> index
    std::vector<i64> gelement(int idx) const;        // index -> element

    Elem zero(int deg) const { return Elem(static_cast<size_t>(order_) * rank(deg), 0); }
    Elem basis_elem(int deg, int gidx, int tidx) const;

    Elem diff(int deg, const Elem& x) const;       // W_deg -> W_{deg-1}
    Elem homotopy(int deg, const Elem& x) const;   // W_deg -> W_{deg+1}
    Elem translate(int gidx, int deg, const Elem& x) const;

    /* Cochain differential with trivial coefficients: vector of values on
     * tuples -> values on degree+1 tuples. Entries are 0 or +-m_k. */
    const IntMat& delta(int deg) const;

    /* Apply the augmentation to the group-ring coefficients: W_n elem ->
     * integer vector over tuples. */
    std::vector<i64> trivialize(int deg, const Elem& x) const;

  private:
    FiniteAbelianGroup g_;
    int max_degree_;
    i64 order_;
    std::vector<i64> strides_;
    std::vector<std::vector<std::vector<int>>> tuples_;
    std::vector<std::map<std::vector<int>, int>> tuple_idx_;
    mutable std::vector<std::unique_ptr<IntMat>> delta_;
};

/* Chain map W(dom) -> W(cod) covering a group homomorphism, built degreewise
 * by lifting against the contracting homotopy of the codomain resolution. */
class SmallChainMap {
  public:
    SmallChainMap(const GroupHom& f, const SmallResolution& dom, const SmallResolution& cod,
                  int max_degree);

    /* Image of the module generator w_e (degree deg, tuple index t). */
    const SmallResolution::Elem& gen_image(int deg, int t) const { return images_[deg][t]; }

    /* Trivialized matrix: pullback of trivial-coefficient cochains.
     * Shape rank_dom(deg) x rank_cod(deg); pulled cochain = mat * cochain. */
    IntMat trivialized(int deg) const;

    void self_check(int max_degree) const;  // asserts d o psi = psi o d

  private:
    const SmallResolution& dom_;
    const SmallResolution& cod_;
    GroupHom f_;
    std::vector<std::vector<SmallResolution::Elem>> images_;  // [deg][tuple]
};

}  // namespace shc
