#include "shcalc/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace shc {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<i64> f, std::vector<std::string> p)
    : factors(std::move(f)), prefixes(std::move(p)) {
    for (i64 m : factors)
        if (m < 2)
            throw MathError("cyclic factor order must be >= 2");
    if (prefixes.empty())
        prefixes = default_prefixes(factors);
    if (prefixes.size() != factors.size())
        throw MathError("one name prefix per factor expected");
}

i64 FiniteAbelianGroup::order() const {
    i64 o = 1;
    for (i64 m : factors)
        o = checked_mul(o, m);
    return o;
}

bool FiniteAbelianGroup::has_odd_order() const { return order() % 2 == 1; }

i64 FiniteAbelianGroup::two_part(size_t k) const {
    i64 m = factors[k];
    i64 t = 1;
    while (m % 2 == 0) {
        m /= 2;
        t *= 2;
    }
    return t;
}

std::string FiniteAbelianGroup::describe() const {
    if (factors.empty())
        return "0";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i)
            os << " + ";
        os << "Z/" << factors[i];
    }
    return os.str();
}

std::string FiniteAbelianGroup::key() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i)
            os << ",";
        os << factors[i];
    }
    return os.str();
}

FiniteAbelianGroup canonicalize(const FiniteAbelianGroup& g) {
    std::vector<std::pair<i64, i64>> pp;  // (prime, power)
    for (i64 m : g.factors) {
        if (m < 2)
            throw MathError("cyclic factor order must be >= 2");
        for (i64 p = 2; p * p <= m; ++p) {
            if (m % p)
                continue;
            i64 q = 1;
            while (m % p == 0) {
                m /= p;
                q = checked_mul(q, p);
            }
            pp.push_back({p, q});
        }
        if (m > 1)
            pp.push_back({m, m});
    }
    std::sort(pp.begin(), pp.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first)
            return a.first < b.first;
        return a.second > b.second;  // exponent descending within a prime
    });
    std::vector<i64> out;
    for (auto& [p, q] : pp)
        out.push_back(q);
    return FiniteAbelianGroup(out);
}

std::vector<std::string> default_prefixes(const std::vector<i64>& factors) {
    static const char* big[] = {"x", "y", "w", "v", "u"};
    static const char* small_mixed[] = {"z", "s", "r"};
    static const char* small_pure[] = {"c", "d", "e", "f", "g"};
    bool any_big = false;
    int n_two = 0;
    for (i64 m : factors) {
        i64 t = 1;
        i64 mm = m;
        while (mm % 2 == 0) {
            mm /= 2;
            t *= 2;
        }
        if (t >= 4)
            any_big = true;
        if (t == 2)
            ++n_two;
    }
    std::vector<std::string> out;
    size_t ib = 0, is = 0;
    for (size_t k = 0; k < factors.size(); ++k) {
        i64 t = 1;
        i64 mm = factors[k];
        while (mm % 2 == 0) {
            mm /= 2;
            t *= 2;
        }
        if (t >= 4)
            out.push_back(big[std::min<size_t>(ib++, 4)]);
        else if (t == 2) {
            if (any_big)
                out.push_back(small_mixed[std::min<size_t>(is++, 2)]);
            else if (n_two == 1)
                out.push_back("t");
            else
                out.push_back(small_pure[std::min<size_t>(is++, 4)]);
        } else {
            out.push_back("o");  // odd factor, no mod-2 generators
        }
    }
    return out;
}

GroupHom::GroupHom(FiniteAbelianGroup d, FiniteAbelianGroup c, IntMat mat)
    : dom(std::move(d)), cod(std::move(c)), m(std::move(mat)) {
    if (m.rows != static_cast<int>(cod.rank()) || m.cols != static_cast<int>(dom.rank()))
        throw MathError("homomorphism matrix shape mismatch");
    if (!well_defined())
        throw MathError("matrix does not define a homomorphism (columns must respect factor orders)");
}

bool GroupHom::well_defined() const {
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.rows; ++i)
            if (checked_mul(m.at(i, j), dom.factors[j]) % cod.factors[i] != 0)
                return false;
    return true;
}

std::vector<i64> GroupHom::apply(const std::vector<i64>& x) const {
    std::vector<i64> y = m.mul_vec(x);
    for (size_t i = 0; i < cod.factors.size(); ++i)
        y[i] = mod_pos(y[i], cod.factors[i]);
    return y;
}

GroupHom GroupHom::identity(const FiniteAbelianGroup& g) {
    return GroupHom(g, g, IntMat::identity(static_cast<int>(g.rank())));
}

GroupHom GroupHom::projection(const FiniteAbelianGroup& g, size_t factor) {
    FiniteAbelianGroup cyc({g.factors[factor]}, {g.prefixes[factor]});
    IntMat m(1, static_cast<int>(g.rank()));
    m.at(0, static_cast<int>(factor)) = 1;
    return GroupHom(g, cyc, m);
}

GroupHom GroupHom::compose(const GroupHom& inner) const {
    if (!(inner.cod == dom))
        throw MathError("homomorphism composition mismatch");
    return GroupHom(inner.dom, cod, m.mul(inner.m));
}

}  // namespace shc
