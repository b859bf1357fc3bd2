#pragma once

#include "shcalc/abelian.hpp"
#include "shcalc/linalg.hpp"
#include "shcalc/smallres.hpp"

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

namespace shc {

/* ---------- mod-2 ring presentation ---------- */

struct RingGenerator {
    std::string name;
    int degree;     // 1 or 2
    bool exterior;  // exterior iff the factor's 2-part is >= 4 and degree == 1
    int factor;     // index into the group's factor list
};

using Monomial = std::vector<uint8_t>;  // exponent per ring generator

struct Mod2Class {
    int degree = 0;
    std::vector<Monomial> support;  // sorted in the fixed monomial order, xor semantics

    bool is_zero() const { return support.empty(); }
    bool operator==(const Mod2Class& o) const { return degree == o.degree && support == o.support; }
};

struct Mod2RingPresentation {
    FiniteAbelianGroup group;
    std::vector<RingGenerator> generators;  // ordered by (factor, degree)
    int max_degree = 0;
    std::vector<std::vector<Monomial>> basis;  // per degree, fixed monomial order

    int gen_index(const std::string& name) const;
    int monomial_degree(const Monomial& m) const;
    int basis_index(int degree, const Monomial& m) const;
    std::string monomial_name(const Monomial& m) const;

    Mod2Class cls(int degree, std::vector<Monomial> support) const;  // normalizes
    Mod2Class zero(int degree) const { return Mod2Class{degree, {}}; }
    Mod2Class one() const;
    Mod2Class generator(const std::string& name) const;
    Mod2Class add(const Mod2Class& a, const Mod2Class& b) const;
    Mod2Class mul(const Mod2Class& a, const Mod2Class& b) const;
    std::optional<Monomial> mul_monomials(const Monomial& a, const Monomial& b) const;

    F2Vec to_vec(const Mod2Class& c) const;
    Mod2Class from_vec(int degree, const F2Vec& v) const;
    std::string to_string(const Mod2Class& c) const;
    Mod2Class parse(const std::string& text) const;  // "x1y1+x2^2", "0", "1"
};

/* monomial order: graded, then descending lexicographic on exponents */
bool monomial_less(const Monomial& a, const Monomial& b);

/* ---------- presentations of cohomology groups ---------- */

struct AbelianGroupPresentation {
    int degree = 0;
    bool infinite_marker = false;          // degree 0: Z (integral) or k^x (= Q/Z)
    std::vector<i64> invariant_factors;    // ascending divisibility, all >= 2
    std::vector<std::string> labels;       // one per generator
    IntMat gen_cochains;                   // cochain lifts, one column per generator
    std::vector<i64> gen_dens;             // denominator per generator (1 for integral)

    i64 order() const;
    bool is_trivial() const { return !infinite_marker && invariant_factors.empty(); }
    std::string describe() const;  // e.g. "Z/4 + Z/2^2", "0", "k^x"
    size_t num_gens() const { return invariant_factors.size(); }
};

std::string describe_factors(const std::vector<i64>& fac);

/* ---------- the per-group engine ---------- */

class GroupCohomology {
  public:
    GroupCohomology(const FiniteAbelianGroup& g, int max_degree);

    const FiniteAbelianGroup& group() const { return g_; }
    const FiniteAbelianGroup& two_part_group() const { return g2_; }
    int max_degree() const { return max_degree_; }
    const SmallResolution& resolution() const { return *res_; }
    const SmallResolution& two_part_resolution() const { return *res2_; }

    const Mod2RingPresentation& ring() const { return ring_; }
    int mod2_dim(int degree) const;

    const AbelianGroupPresentation& integral(int degree) const;
    const AbelianGroupPresentation& kx(int degree) const;

    /* coordinates of an integral degree-d cocycle in integral(d) */
    std::vector<i64> integral_coords(int degree, const std::vector<i64>& cocycle) const;
    /* coordinates of a Q/Z cocycle num/den in kx(d) */
    std::vector<i64> kx_coords(int degree, const std::vector<i64>& num, i64 den) const;

    /* exp map t -> (-1)^t: mod-2 class -> kx(degree) coordinates */
    std::vector<i64> exp_map(const Mod2Class& c) const;

    /* mod-2 monomial cochain on the full complex (inflated from the 2-part) */
    std::vector<i64> inflate_mod2(int degree, const F2Vec& v) const;

    bool has_odd_part() const { return odd_part_; }

  private:
    FiniteAbelianGroup g_, g2_;
    int max_degree_;
    bool odd_part_ = false;
    std::shared_ptr<SmallResolution> res_, res2_;
    std::shared_ptr<SmallChainMap> inflation_;  // W(G) -> W(G2) covering G ->> G2
    Mod2RingPresentation ring_;
    std::vector<AbelianGroupPresentation> integral_, kx_;
    std::vector<Subquotient> integral_sq_;
    std::vector<std::vector<int>> mono_to_tuple_;  // per degree, basis idx -> W(G2) tuple idx
    std::vector<IntMat> inflate_;                  // per degree: full-complex matrix

    void build_ring();
    void build_presentations();
};

/* ---------- shared cache (concurrent readers, single writer) ---------- */

class CohCache {
  public:
    static CohCache& instance();
    std::shared_ptr<const GroupCohomology> engine(const FiniteAbelianGroup& g, int min_degree = 8);
    /* chain map W(f.dom) -> W(f.cod); wrapper keeps both engines alive */
    struct HomData {
        std::shared_ptr<const GroupCohomology> dom, cod;
        std::shared_ptr<const SmallChainMap> map;
        GroupHom f;
    };
    std::shared_ptr<const HomData> hom(const GroupHom& f, int min_degree = 8);
    void clear();

  private:
    std::shared_mutex mu_;
    std::map<std::string, std::shared_ptr<const GroupCohomology>> engines_;
    std::map<std::string, std::shared_ptr<const HomData>> homs_;
};

/* ---------- spec-level operations ---------- */

Mod2Class cup_product(const GroupCohomology& gc, const Mod2Class& a, const Mod2Class& b);

/* pullback along f of classes on B(f.cod), via the lifted chain map */
Mod2Class pullback_mod2(const GroupHom& f, const Mod2Class& c);
std::vector<i64> pullback_integral(const GroupHom& f, int degree, const std::vector<i64>& coords);
std::vector<i64> pullback_kx(const GroupHom& f, int degree, const std::vector<i64>& coords);

}  // namespace shc
