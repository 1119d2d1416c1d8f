#pragma once

/*
 * Bigraded invariant complexes.
 *
 * Symplectic side: A^{p,q} has p fiber indices (mask `fiber`, default e1..e3)
 * and q base indices. L = omega ^ ., Lambda = sum_k i(E_{k+3}) i(E_k),
 * d^Lambda = d Lambda - Lambda d. Tseng-Yau:
 *     h^{p,q} = dim(ker d cap ker d^Lambda on A^{p,q}) - rank(d d^Lambda on A^{p+1,q-1}).
 *
 * Complex side: rewrite the algebra in the coframe (psi^1..3, conj psi^1..3);
 * Lambda^{p,q} has p of the first three indices. Bott-Chern:
 *     h^{p,q} = dim(ker del cap ker delbar on Lambda^{p,q}) - rank(del delbar on Lambda^{p-1,q-1}).
 */

#include "semiflat/catalog.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace semiflat {

inline constexpr Mask default_fiber = 0x7;

inline std::pair<int, int> bidegree(Mask m, Mask fiber = default_fiber)
{
    return {grade_of(m & fiber), grade_of(m & ~fiber)};
}

inline std::vector<Mask> bidegree_masks(int p, int q, Mask fiber = default_fiber, int n = 6)
{
    std::vector<Mask> out;
    if (p < 0 || q < 0)
        return out;
    for (Mask m = 0; m < (Mask(1) << n); ++m)
        if (bidegree(m, fiber) == std::make_pair(p, q))
            out.push_back(m);
    return out;
}

inline Form delta_project(const Form& phi, int p, int q, Mask fiber = default_fiber)
{
    return phi.filter([&](Mask m) { return bidegree(m, fiber) == std::make_pair(p, q); });
}

// d(A^{p,q}) lies in A^{p,q+1} for every monomial.
inline bool d_bidegree_check(const LieAlgebra& g, Mask fiber = default_fiber)
{
    for (Mask m = 0; m < (Mask(1) << g.dim()); ++m) {
        const auto [p, q] = bidegree(m, fiber);
        const Form dm = g.d(Form::monomial(g.dim(), m));
        for (const auto& [k, c] : dm.terms())
            if (bidegree(k, fiber) != std::make_pair(p, q + 1))
                return false;
    }
    return true;
}

inline Form lefschetz_L(const Form& omega, const Form& phi) { return omega.wedge(phi); }

inline Form lambda_op(const Form& phi)
{
    const int h = phi.n() / 2;
    Form r(phi.n());
    for (int k = 0; k < h; ++k)
        r += phi.contract(k).contract(k + h);
    return r;
}

inline Form d_lambda(const LieAlgebra& g, const Form& phi)
{
    return g.d(lambda_op(phi)) - lambda_op(g.d(phi));
}

inline Form distinguished_omega(int n = 6)
{
    Form w(n);
    for (int k = 0; k < n / 2; ++k)
        w += Form::product(n, {k, k + n / 2});
    return w;
}

using Table4 = std::array<std::array<int, 4>, 4>;  // [p][q]

struct TYCell {
    int dim = 0;
    int kernel = 0;
    int image = 0;
    bool image_is_pure = false;  // Im(dd^L) cap A^{p,q} == dd^L(A^{p+1,q-1})
};

inline TYCell tseng_yau_cell(const LieAlgebra& g, int p, int q, Mask fiber = default_fiber)
{
    const int n = g.dim();
    TYCell c;
    const auto dom = monomials(n, bidegree_masks(p, q, fiber, n));
    // d phi and d^L phi have different grades, so one kernel computation covers both.
    auto both = [&g](const Form& x) { return g.d(x) + d_lambda(g, x); };
    c.kernel = static_cast<int>(map_kernel(both, dom).size());
    auto ddl = [&g](const Form& x) { return g.d(d_lambda(g, x)); };
    const auto src = monomials(n, bidegree_masks(p + 1, q - 1, fiber, n));
    c.image = static_cast<int>(image_rank(ddl, src));
    c.dim = c.kernel - c.image;

    SparseSpan all_images;
    for (const auto& x : monomials(n, masks_of_grade(n, p + q)))
        all_images.insert(ddl(x));
    SparseSpan sum = all_images;
    const auto target = bidegree_masks(p, q, fiber, n);
    for (Mask m : target)
        sum.insert(Form::monomial(n, m));
    const std::size_t meet = all_images.rank() + target.size() - sum.rank();
    c.image_is_pure = meet == static_cast<std::size_t>(c.image);
    return c;
}

inline int tseng_yau_dim(const LieAlgebra& g, int p, int q, Mask fiber = default_fiber)
{
    if (!d_bidegree_check(g, fiber))
        throw MathError("d is not of pure bidegree (0,1) for this fiber split");
    return tseng_yau_cell(g, p, q, fiber).dim;
}

struct TYTable {
    Table4 h{};
    bool images_pure = true;
};

inline TYTable tseng_yau_table(const LieAlgebra& g, Mask fiber = default_fiber)
{
    if (!d_bidegree_check(g, fiber))
        throw MathError("d is not of pure bidegree (0,1) for this fiber split");
    TYTable t;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            const auto c = tseng_yau_cell(g, p, q, fiber);
            t.h[p][q] = c.dim;
            t.images_pure = t.images_pure && c.image_is_pure;
        }
    return t;
}

// The algebra rewritten in the coframe (psi, conj psi).
struct ComplexFrame {
    LieAlgebra cg;

    explicit ComplexFrame(const SU3Structure& s)
    {
        if (!integrable(s))
            throw MathError("almost complex structure is not integrable");
        cg = s.g.change_coframe(complex_coframe_matrix(s.factors()));
    }

    Form d(const Form& phi) const { return cg.d(phi); }

    Form del(const Form& phi) const
    {
        Form r(6);
        for (const auto& [m, c] : phi.terms()) {
            const auto [p, q] = bidegree(m);
            r += delta_project(cg.d(Form::monomial(6, m, c)), p + 1, q);
        }
        return r;
    }

    Form delbar(const Form& phi) const
    {
        Form r(6);
        for (const auto& [m, c] : phi.terms()) {
            const auto [p, q] = bidegree(m);
            r += delta_project(cg.d(Form::monomial(6, m, c)), p, q + 1);
        }
        return r;
    }
};

inline int bott_chern_dim(const ComplexFrame& cf, int p, int q)
{
    const auto dom = monomials(6, bidegree_masks(p, q));
    auto both = [&cf](const Form& x) { return cf.del(x) + cf.delbar(x); };
    const int ker = static_cast<int>(map_kernel(both, dom).size());
    int img = 0;
    if (p >= 1 && q >= 1) {
        auto ddb = [&cf](const Form& x) { return cf.del(cf.delbar(x)); };
        img = static_cast<int>(image_rank(ddb, monomials(6, bidegree_masks(p - 1, q - 1))));
    }
    return ker - img;
}

inline int bott_chern_dim(const SU3Structure& s, int p, int q)
{
    return bott_chern_dim(ComplexFrame(s), p, q);
}

inline Table4 bott_chern_table(const SU3Structure& s)
{
    const ComplexFrame cf(s);
    Table4 t{};
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            t[p][q] = bott_chern_dim(cf, p, q);
    return t;
}

struct MirrorNumbers {
    TYTable ty;  // on the IIA side, indexed [p][q]
    Table4 bc{};  // on the IIB side
    bool all_equal = true;  // ty[3-p][q] == bc[p][q] for all cells
};

inline MirrorNumbers mirror_numbers_check(const MirrorPair& pair)
{
    MirrorNumbers r;
    r.ty = tseng_yau_table(pair.iia.g, pair.fiber);
    r.bc = bott_chern_table(pair.iib);
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q)
            if (r.ty.h[3 - p][q] != r.bc[p][q])
                r.all_equal = false;
    return r;
}

inline std::array<int, 7> ty_vector(const TYTable& t)
{
    std::array<int, 7> v{};
    for (std::size_t k = 0; k < 7; ++k) {
        const auto [p, q] = table2_columns()[k];
        v[k] = t.h[p][q];
    }
    return v;
}

inline std::array<int, 7> bc_vector(const Table4& bc)
{
    std::array<int, 7> v{};
    for (std::size_t k = 0; k < 7; ++k) {
        const auto [p, q] = table2_columns()[k];
        v[k] = bc[3 - p][q];
    }
    return v;
}

// Structural identities checked operator-wise on all 64 monomials.
struct SymplecticIdentities {
    bool sl2 = true;               // [Lambda, L] = (3-k) on k-forms
    bool dlambda_squared = true;   // d^L d^L = 0
    bool anticommute = true;       // d d^L + d^L d = 0
    bool dlambda_bidegree = true;  // d^L maps A^{p,q} into A^{p-1,q}
};

inline SymplecticIdentities symplectic_identities(const LieAlgebra& g, Mask fiber = default_fiber)
{
    SymplecticIdentities r;
    const int n = g.dim();
    const Form omega = distinguished_omega(n);
    for (Mask m = 0; m < (Mask(1) << n); ++m) {
        const Form x = Form::monomial(n, m);
        const int k = grade_of(m);
        const Form lhs = lambda_op(lefschetz_L(omega, x)) - lefschetz_L(omega, lambda_op(x));
        if (!(lhs == x * CScalar(long(n / 2 - k))))
            r.sl2 = false;
        const Form dl = d_lambda(g, x);
        if (!d_lambda(g, dl).is_zero())
            r.dlambda_squared = false;
        if (!(g.d(dl) + d_lambda(g, g.d(x))).is_zero())
            r.anticommute = false;
        const auto [p, q] = bidegree(m, fiber);
        for (const auto& [t, c] : dl.terms())
            if (bidegree(t, fiber) != std::make_pair(p - 1, q))
                r.dlambda_bidegree = false;
    }
    return r;
}

struct ComplexIdentities {
    bool del_squared = true;
    bool delbar_squared = true;
    bool anticommute = true;
    bool d_splits = true;  // d = del + delbar
};

inline ComplexIdentities complex_identities(const SU3Structure& s)
{
    ComplexIdentities r;
    const ComplexFrame cf(s);
    for (Mask m = 0; m < 64; ++m) {
        const Form x = Form::monomial(6, m);
        if (!cf.del(cf.del(x)).is_zero())
            r.del_squared = false;
        if (!cf.delbar(cf.delbar(x)).is_zero())
            r.delbar_squared = false;
        if (!(cf.del(cf.delbar(x)) + cf.delbar(cf.del(x))).is_zero())
            r.anticommute = false;
        if (!(cf.d(x) == cf.del(x) + cf.delbar(x)))
            r.d_splits = false;
    }
    return r;
}

}  // namespace semiflat
