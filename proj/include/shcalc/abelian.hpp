#pragma once

#include "shcalc/linalg.hpp"

#include <string>
#include <vector>

namespace shc {

/* A finite abelian group as an ordered list of cyclic factor orders.
 * The order of the factors matters for naming and for homomorphism
 * matrices; canonicalize() is the isomorphism-invariant form. */
struct FiniteAbelianGroup {
    std::vector<i64> factors;
    std::vector<std::string> prefixes;  // per-factor generator name prefix

    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<i64> f, std::vector<std::string> p = {});

    size_t rank() const { return factors.size(); }
    i64 order() const;
    bool is_trivial() const { return factors.empty(); }
    bool has_odd_order() const;
    i64 two_part(size_t k) const;  // largest power of 2 dividing factor k

    std::string describe() const;  // e.g. "Z/4 + Z/2"
    std::string key() const;       // stable cache key for the ordered factor list

    bool operator==(const FiniteAbelianGroup& o) const { return factors == o.factors; }
    bool operator<(const FiniteAbelianGroup& o) const { return factors < o.factors; }
};

/* Primary decomposition sorted by (prime asc, exponent desc). Rejects factors < 2. */
FiniteAbelianGroup canonicalize(const FiniteAbelianGroup& g);

/* Default generator-name prefixes:
 *  - factors with 2-part >= 4 draw from x, y, w, v, u
 *  - order-2 factors draw from z, s, r when mixed with larger 2-power factors,
 *    from c, d, e, f otherwise (a single Z/2 gets t)
 *  - odd-order factors keep a placeholder (they carry no mod-2 generators) */
std::vector<std::string> default_prefixes(const std::vector<i64>& factors);

/* Homomorphism f: dom -> cod given by an integer matrix: the j-th generator
 * of dom maps to sum_i m(i,j) * (i-th generator of cod). */
struct GroupHom {
    FiniteAbelianGroup dom, cod;
    IntMat m;

    GroupHom() = default;
    GroupHom(FiniteAbelianGroup d, FiniteAbelianGroup c, IntMat mat);

    bool well_defined() const;
    std::vector<i64> apply(const std::vector<i64>& x) const;  // element mapping
    static GroupHom identity(const FiniteAbelianGroup& g);
    static GroupHom projection(const FiniteAbelianGroup& g, size_t factor);
    GroupHom compose(const GroupHom& inner) const;  // this o inner
};

}  // namespace shc
