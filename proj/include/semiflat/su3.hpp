#pragma once

/*
 * SU(3)-structures (omega, Omega) on 6-dimensional Lie algebras.
 *
 * J acts on frame vectors; column j of J holds the coordinates of J E_j.
 * T^{0,1} = {v : i_v Omega = 0} is the -i eigenspace, so for
 * Omega = (e1+i e4)(e2+i e5)(e3+i e6) one gets J E_k = E_{k+3}.
 */

#include "semiflat/lie.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace semiflat {

// Antisymmetric matrix W(i,j) = omega(E_i, E_j) of a 2-form.
inline RMatrix two_form_matrix(const Form& omega)
{
    const int n = omega.n();
    RMatrix w(n, n);
    for (const auto& [m, c] : omega.terms()) {
        if (grade_of(m) != 2)
            throw MathError("expected a 2-form");
        if (!c.is_real())
            throw MathError("expected a real 2-form");
        const auto idx = indices_of(m);
        w(idx[0], idx[1]) = c.re();
        w(idx[1], idx[0]) = -c.re();
    }
    return w;
}

// i_v Omega = 0 for v in the returned basis (complex coordinate vectors).
inline std::vector<std::vector<CScalar>> contraction_kernel(const Form& Omega)
{
    const int n = Omega.n();
    std::vector<Form> dom;
    for (int j = 0; j < n; ++j)
        dom.push_back(Form::basis(n, j));
    std::vector<std::vector<CScalar>> out;
    auto contract = [&Omega](const Form& v) {
        std::vector<CScalar> coords(Omega.n());
        for (const auto& [m, c] : v.terms())
            coords[indices_of(m)[0]] = c;
        return Omega.contract(coords);
    };
    for (const auto& k : map_kernel(contract, dom)) {
        std::vector<CScalar> coords(n);
        for (const auto& [m, c] : k.terms())
            coords[indices_of(m)[0]] = c;
        out.push_back(std::move(coords));
    }
    return out;
}

struct AcsResult {
    std::optional<RMatrix> J;
    std::string failure;  // empty on success
    std::vector<std::vector<CScalar>> t01;
};

inline AcsResult acs_from_three_form(const Form& Omega)
{
    AcsResult r;
    if (Omega.n() != 6)
        throw MathError("almost complex structures are built on 6-dimensional frames");
    if (Omega.is_zero()) {
        r.failure = "Omega is zero";
        return r;
    }
    r.t01 = contraction_kernel(Omega);
    if (r.t01.size() != 3) {
        r.failure = "contraction kernel has dimension " + std::to_string(r.t01.size());
        return r;
    }
    CMatrix P(6, 6);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 6; ++i) {
            P(i, j) = r.t01[j][i];
            P(i, j + 3) = r.t01[j][i].conj();
        }
    auto Pinv = try_inverse(P);
    if (!Pinv) {
        r.failure = "contraction kernel meets its conjugate";
        return r;
    }
    const CScalar mi = -CScalar::i();
    const CMatrix D = CMatrix::diagonal({mi, mi, mi, CScalar::i(), CScalar::i(), CScalar::i()});
    auto J = real_matrix(P * D * *Pinv);
    if (!J) {
        r.failure = "induced endomorphism is not real";
        return r;
    }
    r.J = *J;
    return r;
}

// (i_xi Omega) ^ Omega = 0 for every basis bivector xi: the Pluecker relations.
inline bool decomposability_check(const Form& Omega)
{
    const int n = Omega.n();
    const int k = Omega.max_grade();
    if (Omega.is_zero())
        return true;
    if (!Omega.is_homogeneous(k))
        return false;
    if (k <= 1)
        return true;
    for (Mask xi : masks_of_grade(n, k - 1)) {
        Form c = Omega;
        for (int i : indices_of(xi))
            c = c.contract(i);
        if (!c.wedge(Omega).is_zero())
            return false;
    }
    return true;
}

// The weaker single-vector test (i_v Omega) ^ Omega = 0 for frame vectors v.
inline bool vector_contraction_test(const Form& Omega)
{
    for (int i = 0; i < Omega.n(); ++i)
        if (!Omega.contract(i).wedge(Omega).is_zero())
            return false;
    return true;
}

// Write a decomposable 3-form as psi1 ^ psi2 ^ psi3.
inline std::optional<std::array<Form, 3>> factorize_three_form(const Form& Omega)
{
    const int n = Omega.n();
    if (Omega.is_zero() || !Omega.is_homogeneous(3) || !decomposability_check(Omega))
        return std::nullopt;
    const auto ker = contraction_kernel(Omega);
    if (static_cast<int>(ker.size()) != n - 3)
        return std::nullopt;
    // annihilator of the kernel
    CMatrix K(ker.size(), n);
    for (std::size_t a = 0; a < ker.size(); ++a)
        for (int i = 0; i < n; ++i)
            K(a, i) = ker[a][i];
    const auto ann = kernel(K);
    if (ann.size() != 3)
        return std::nullopt;
    std::array<Form, 3> psi{Form::one_form(ann[0]), Form::one_form(ann[1]), Form::one_form(ann[2])};
    const Form prod = psi[0].wedge(psi[1]).wedge(psi[2]);
    const Mask lead = Omega.terms().begin()->first;
    const CScalar scale = Omega.coeff(lead) / prod.coeff(lead);
    psi[0] *= scale;
    return psi;
}

// The normalization constant relating Omega ^ conj(Omega) to omega^3 for the
// flat structure: (-1)^{n(n-1)/2} (-2i)^n / n! with n = 3.
inline CScalar normalization_constant()
{
    return CScalar(Scalar(0), Scalar(Rational(-4, 3)));
}

// The constant (-2i)^3 / 3! as printed without the reordering sign.
inline CScalar verbatim_normalization_constant()
{
    return CScalar(Scalar(0), Scalar(Rational(4, 3)));
}

struct SU3Structure {
    LieAlgebra g;
    Form omega;
    Form Omega;
    std::optional<std::array<Form, 3>> psi;

    static SU3Structure from_factors(LieAlgebra g, Form omega, std::array<Form, 3> psi)
    {
        Form Omega = psi[0].wedge(psi[1]).wedge(psi[2]);
        return {std::move(g), std::move(omega), std::move(Omega), std::move(psi)};
    }

    // Flat omega = sum e^k ^ e^{k+3}, Omega = wedge(e^k + i e^{k+3}) on the given algebra.
    static SU3Structure distinguished(LieAlgebra g)
    {
        const int n = g.dim();
        if (n != 6)
            throw MathError("distinguished SU(3)-structures need dimension 6");
        Form omega(n);
        std::array<Form, 3> psi;
        for (int k = 0; k < 3; ++k) {
            omega += Form::product(n, {k, k + 3});
            psi[k] = Form::basis(n, k) + Form::basis(n, k + 3) * CScalar::i();
        }
        return from_factors(std::move(g), std::move(omega), std::move(psi));
    }

    std::array<Form, 3> factors() const
    {
        if (psi)
            return *psi;
        auto f = factorize_three_form(Omega);
        if (!f)
            throw MathError("Omega is not decomposable");
        return *f;
    }
};

struct SU3Report {
    bool decomposable = false;
    bool j_exists = false;
    bool omega_real = false;
    bool omega_type_11 = false;
    bool positive = false;
    bool normalized = false;
    std::optional<RMatrix> J;
    std::vector<Scalar> minors;
    std::optional<CScalar> normalization_ratio;  // (Omega ^ conj Omega) / (c * omega^3)
    std::optional<CScalar> verbatim_ratio;       // same against (-2i)^3/3!
    std::string failure;

    bool ok() const { return decomposable && j_exists && omega_real && omega_type_11 && positive && normalized; }
};

inline SU3Report su3_check(const SU3Structure& s)
{
    SU3Report r;
    if (s.g.dim() != 6 || s.omega.n() != 6 || s.Omega.n() != 6)
        throw MathError("SU(3)-structures live on 6-dimensional algebras");
    r.decomposable = decomposability_check(s.Omega) && s.Omega.is_homogeneous(3);
    r.omega_real = s.omega.is_real() && s.omega.is_homogeneous(2);
    auto acs = acs_from_three_form(s.Omega);
    r.j_exists = acs.J.has_value();
    if (!r.j_exists)
        r.failure = acs.failure;
    r.J = acs.J;

    const Form top_omega = wedge_power(s.omega, 3);
    const Form top_Omega = s.Omega.wedge(s.Omega.conj());
    const Mask full = 0x3f;
    if (!top_omega.coeff(full).is_zero()) {
        r.normalization_ratio = top_Omega.coeff(full) / (normalization_constant() * top_omega.coeff(full));
        r.verbatim_ratio = top_Omega.coeff(full) / (verbatim_normalization_constant() * top_omega.coeff(full));
        r.normalized = *r.normalization_ratio == CScalar(1);
    }

    if (r.j_exists && r.omega_real) {
        const RMatrix W = two_form_matrix(s.omega);
        const RMatrix& J = *r.J;
        r.omega_type_11 = J.transpose() * W * J == W;
        const RMatrix G = W * J;  // G(v,w) = omega(v, J w)
        bool pos = G == G.transpose();
        for (std::size_t k = 1; k <= 6; ++k) {
            r.minors.push_back(leading_minor(G, k));
            if (r.minors.back().sign() <= 0)
                pos = false;
        }
        r.positive = pos;
    }
    if (r.failure.empty() && !r.ok()) {
        if (!r.decomposable)
            r.failure = "Omega is not decomposable";
        else if (!r.omega_real)
            r.failure = "omega is not a real 2-form";
        else if (!r.omega_type_11)
            r.failure = "omega is not of type (1,1)";
        else if (!r.positive)
            r.failure = "omega(., J.) is not positive definite";
        else
            r.failure = "normalization fails with ratio " +
                        (r.normalization_ratio ? r.normalization_ratio->str() : std::string("undefined"));
    }
    return r;
}

inline bool is_type_IIA(const SU3Structure& s)
{
    return s.g.d(s.omega).is_zero() && s.g.d(s.Omega.real_part()).is_zero();
}

inline bool is_type_IIB(const SU3Structure& s)
{
    return s.g.d(s.omega.wedge(s.omega)).is_zero() && s.g.d(s.Omega).is_zero();
}

// Coframe (psi^1, psi^2, psi^3, conj psi^1, conj psi^2, conj psi^3) as a change-of-coframe matrix.
inline CMatrix complex_coframe_matrix(const std::array<Form, 3>& psi)
{
    const int n = psi[0].n();
    CMatrix A(n, n);
    for (int k = 0; k < 3; ++k)
        for (int i = 0; i < n; ++i) {
            const CScalar c = psi[k].coeff(Mask(1) << i);
            A(k, i) = c;
            A(k + 3, i) = c.conj();
        }
    return A;
}

// d(Lambda^{1,0}) has no (0,2) part: integrability computed from the 1-form side.
inline bool integrable(const SU3Structure& s)
{
    const auto psi = s.factors();
    const CMatrix A = complex_coframe_matrix(psi);
    if (!try_inverse(A))
        return false;
    const LieAlgebra cg = s.g.change_coframe(A);
    for (int k = 0; k < 3; ++k)
        for (const auto& [m, c] : cg.de(k).terms())
            if ((m & 0x7u) == 0)
                return false;
    return true;
}

}  // namespace semiflat
