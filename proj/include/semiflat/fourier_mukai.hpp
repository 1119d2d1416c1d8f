#pragma once

/*
 * Formal semi-flat Fourier-Mukai model with constant coefficients.
 *
 *   complex side (z-model, 6 generators):    dz_1..3 (0..2), dzbar_1..3 (3..5)
 *   polarized complex side:                  dthv_1..3 (0..2), dr_1..3 (3..5)
 *   symplectic side (6 generators):          dth_1..3 (0..2), eta_1..3 (3..5)
 *   product (9 generators):                  dthv (0..2), dth (3..5), dr/eta (6..8)
 *
 * FT(phi) integrates P(phi) ^ exp(sum_k dthv_k ^ dth_k) over the dthv fiber,
 * reading a monomial written as rest ^ dthv_123 as rest.
 */

#include "semiflat/exterior.hpp"

#include <array>
#include <utility>
#include <vector>

namespace semiflat {

namespace fm {

inline constexpr int n_side = 6;
inline constexpr int n_product = 9;

// Relabel generator i of a form through map[i] into a form of dimension n.
inline Form relabel(const Form& phi, const std::vector<int>& map, int n)
{
    Form r(n);
    for (const auto& [m, c] : phi.terms()) {
        std::vector<int> idx;
        for (int i : indices_of(m))
            idx.push_back(map.at(i));
        r += Form::product(n, idx) * c;
    }
    return r;
}

// Coefficient extraction along a 3-dimensional fiber: rest ^ fiber -> rest.
inline Form integrate_fiber(const Form& phi, Mask fiber)
{
    Form r(phi.n());
    for (const auto& [m, c] : phi.terms()) {
        if ((m & fiber) != fiber)
            continue;
        const Mask rest = m & ~fiber;
        r.add_term(rest, wedge_sign(rest, fiber) < 0 ? -c : c);
    }
    return r;
}

// exp(s * sum_k dthv_k ^ dth_k) on the product.
inline Form kernel_exponential(long s)
{
    Form F(n_product);
    for (int k = 0; k < 3; ++k)
        F += Form::product(n_product, {k, k + 3}) * CScalar(s);
    return exp_truncated(F);
}

}  // namespace fm

// a_IJ dz_I ^ dzbar_J -> a_IJ dthv_I ^ dr_J: same coefficients on the same masks.
inline Form polarization_switch(const Form& phi)
{
    if (phi.n() != fm::n_side)
        throw MathError("polarization switch acts on the 6-generator complex model");
    return phi;
}

inline Form polarization_switch_inverse(const Form& phi) { return polarization_switch(phi); }

// Complex model -> symplectic model.
inline Form fm_transform(const Form& phi)
{
    const Form lifted = fm::relabel(polarization_switch(phi), {0, 1, 2, 6, 7, 8}, fm::n_product);
    const Form integrand = lifted.wedge(fm::kernel_exponential(1));
    const Form pushed = fm::integrate_fiber(integrand, 0x7);
    Form out(fm::n_side);
    for (const auto& [m, c] : pushed.terms())
        out.add_term(m >> 3, c);  // dth (3..5) -> 0..2, dr (6..8) -> 3..5
    return out;
}

// Symplectic model -> complex model.
inline Form fm_inverse(const Form& phi)
{
    if (phi.n() != fm::n_side)
        throw MathError("inverse transform acts on the 6-generator symplectic model");
    const Form lifted = fm::relabel(phi, {3, 4, 5, 6, 7, 8}, fm::n_product);
    const Form integrand = lifted.wedge(fm::kernel_exponential(-1));
    const Form pushed = fm::integrate_fiber(integrand, 0x38);
    Form out(fm::n_side);
    for (const auto& [m, c] : pushed.terms()) {
        const Mask thv = m & 0x7;
        const Mask r = (m >> 6) & 0x7;
        out.add_term(thv | (r << 3), c);
    }
    return polarization_switch_inverse(out);
}

// 2 omega-check = i sum_k dz_k ^ dzbar_k in the complex model.
inline Form fm_two_omega_check()
{
    Form w(fm::n_side);
    for (int k = 0; k < 3; ++k)
        w += Form::product(fm::n_side, {k, k + 3}) * CScalar::i();
    return w;
}

// wedge_k (dth_k + i eta_k) in the symplectic model.
inline Form fm_holomorphic_volume()
{
    Form r = Form::constant(fm::n_side, 1);
    for (int k = 0; k < 3; ++k)
        r = r.wedge(Form::basis(fm::n_side, k) + Form::basis(fm::n_side, k + 3) * CScalar::i());
    return r;
}

struct FMReport {
    bool lemma = false;             // FT(exp(2 omega-check)) == Omega
    bool ft_of_one_top_fiber = false;
    int ft_of_one_sign = 0;         // FT(1) = sign * dth_123
    bool inverse_roundtrip = false;  // fm_inverse(fm_transform(x)) == x on all 64 monomials
    bool bijective = false;          // A^{p,q} -> A^{3-p,q} bijectively for all (p,q)
    std::array<std::array<int, 4>, 4> ranks{};
};

inline FMReport fm_verify()
{
    FMReport r;
    r.lemma = fm_transform(exp_truncated(fm_two_omega_check())) == fm_holomorphic_volume();
    const Form one = fm_transform(Form::constant(fm::n_side, 1));
    const CScalar c = one.coeff(0x7);
    r.ft_of_one_top_fiber = one.size() == 1 && (c == CScalar(1) || c == CScalar(-1));
    r.ft_of_one_sign = c == CScalar(1) ? 1 : (c == CScalar(-1) ? -1 : 0);

    r.inverse_roundtrip = true;
    for (Mask m = 0; m < 64; ++m) {
        const Form x = Form::monomial(fm::n_side, m);
        if (!(fm_inverse(fm_transform(x)) == x))
            r.inverse_roundtrip = false;
    }

    r.bijective = true;
    for (int p = 0; p <= 3; ++p)
        for (int q = 0; q <= 3; ++q) {
            SparseSpan img;
            std::size_t count = 0;
            for (Mask m = 0; m < 64; ++m) {
                if (grade_of(m & 0x7) != p || grade_of(m & 0x38) != q)
                    continue;
                ++count;
                const Form y = fm_transform(Form::monomial(fm::n_side, m));
                for (const auto& [t, c2] : y.terms())
                    if (grade_of(t & 0x7) != 3 - p || grade_of(t & 0x38) != q)
                        r.bijective = false;
                img.insert(y);
            }
            r.ranks[p][q] = static_cast<int>(img.rank());
            if (img.rank() != count)
                r.bijective = false;
        }
    return r;
}

}  // namespace semiflat
