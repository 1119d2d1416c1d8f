#pragma once

/*
 * Semidirect-product mirror construction from 3-dimensional affine Lie data.
 *
 * Frame of both 6-dimensional algebras: fiber vectors Y_1..Y_3 (indices 0..2)
 * then base vectors X_1..X_3 (indices 3..5), with
 *
 *     [X_i, X_j] = c^k_ij X_k,     [X_i, Y_k] = sum_j (P_i)_jk Y_j,     [Y, Y] = 0,
 *
 * where P_i = R_i on the complex (IIB) side and P_i = -R_i^T on the
 * symplectic (IIA) side. The dual coframe of this frame is the listing frame.
 * The distinguished frame keeps the fiber covectors and replaces the base ones
 * by e^{3+k} = sum_j tau_kj f^{3+j}, so that they represent dr.
 */

#include "semiflat/salamon.hpp"
#include "semiflat/su3.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace semiflat {

struct AffineStructureData {
    std::string name;
    std::string title;
    LieAlgebra base;
    std::array<RMatrix, 3> rho;  // R_i = d rho(E_i)
    RMatrix tau;                 // dD at the identity
    Params params;
    std::string provenance;
};

struct AffineReport {
    bool homomorphism = false;
    bool left_symmetric = false;
    bool commutator = false;
    bool tau_invertible = false;
    std::vector<std::string> failures;

    bool ok() const { return homomorphism && left_symmetric && commutator && tau_invertible; }
};

namespace detail {

inline Scalar real_constant(const LieAlgebra& g, int i, int j, int k)
{
    const CScalar c = g.structure_constant(i, j, k);
    if (!c.is_real())
        throw MathError("affine base algebra must be real");
    return c.re();
}

inline RMatrix combine(const std::array<RMatrix, 3>& mats, const std::vector<Scalar>& x)
{
    RMatrix r(3, 3);
    for (int i = 0; i < 3; ++i)
        if (!x[i].is_zero())
            r += mats[i] * x[i];
    return r;
}

inline std::vector<Scalar> unit_vector(int i)
{
    std::vector<Scalar> v(3, Scalar(0));
    v[i] = Scalar(1);
    return v;
}

}  // namespace detail

inline AffineReport affine_data_check(const AffineStructureData& a)
{
    AffineReport r;
    if (a.base.dim() != 3)
        throw MathError("affine data needs a 3-dimensional base");
    r.homomorphism = true;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            RMatrix rhs(3, 3);
            for (int k = 0; k < 3; ++k)
                rhs += a.rho[k] * detail::real_constant(a.base, i, j, k);
            if (!(commutator(a.rho[i], a.rho[j]) == rhs)) {
                r.homomorphism = false;
                r.failures.push_back("[R" + std::to_string(i + 1) + ",R" + std::to_string(j + 1) + "] mismatch");
            }
        }
    const auto tau_inv = try_inverse(a.tau);
    r.tau_invertible = tau_inv.has_value();
    if (!tau_inv) {
        r.failures.push_back("tau is singular");
        return r;
    }
    // left multiplication L_x y = x.y = tau^{-1} R_x tau y
    std::array<RMatrix, 3> L;
    for (int i = 0; i < 3; ++i)
        L[i] = *tau_inv * a.rho[i] * a.tau;
    auto mul = [&](const std::vector<Scalar>& x, const std::vector<Scalar>& y) {
        return detail::combine(L, x) * y;
    };
    r.commutator = true;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const auto ei = detail::unit_vector(i), ej = detail::unit_vector(j);
            auto lhs = mul(ei, ej);
            const auto yx = mul(ej, ei);
            for (int k = 0; k < 3; ++k)
                if (!(lhs[k] - yx[k] == detail::real_constant(a.base, i, j, k))) {
                    r.commutator = false;
                    r.failures.push_back("E" + std::to_string(i + 1) + ".E" + std::to_string(j + 1) +
                                         " - E" + std::to_string(j + 1) + ".E" + std::to_string(i + 1) +
                                         " is not the bracket");
                    break;
                }
        }
    r.left_symmetric = true;
    for (int i = 0; i < 3 && r.left_symmetric; ++i)
        for (int j = 0; j < 3 && r.left_symmetric; ++j)
            for (int k = 0; k < 3; ++k) {
                const auto ei = detail::unit_vector(i), ej = detail::unit_vector(j), ek = detail::unit_vector(k);
                const auto a1 = mul(mul(ei, ej), ek);
                const auto a2 = mul(ei, mul(ej, ek));
                const auto b1 = mul(mul(ej, ei), ek);
                const auto b2 = mul(ej, mul(ei, ek));
                for (int c = 0; c < 3; ++c)
                    if (!(a1[c] - a2[c] == b1[c] - b2[c])) {
                        r.left_symmetric = false;
                        break;
                    }
                if (!r.left_symmetric) {
                    r.failures.push_back("associator not symmetric");
                    break;
                }
            }
    return r;
}

// 6-dimensional semidirect product with fiber action P_i.
inline LieAlgebra semidirect_algebra(const LieAlgebra& base, const std::array<RMatrix, 3>& P)
{
    std::vector<std::vector<std::vector<Scalar>>> c(6, std::vector<std::vector<Scalar>>(6, std::vector<Scalar>(6, Scalar(0))));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k)
                c[3 + i][3 + j][3 + k] = detail::real_constant(base, i, j, k);
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 3; ++j) {
                c[3 + i][k][j] = P[i](j, k);  // [X_i, Y_k]
                c[k][3 + i][j] = -P[i](j, k);
            }
    return LieAlgebra::from_brackets(6, c);
}

// Coframe change e^{3+k} = sum_j tau_kj f^{3+j}, fiber unchanged.
inline CMatrix distinguished_frame_matrix(const RMatrix& tau)
{
    CMatrix A = CMatrix::identity(6);
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
            A(3 + k, 3 + j) = CScalar(tau(k, j));
    return A;
}

struct MirrorPair {
    std::string name;
    Params params;
    LieAlgebra iia_listing;  // g(A) in the frame dual to (Y, X)
    LieAlgebra iib_listing;  // the mirror in the same kind of frame
    SU3Structure iia;        // distinguished frame, omega = sum e^k e^{k+3}
    SU3Structure iib;
    Mask fiber = 0x7;
};

inline MirrorPair build_mirror_pair(const AffineStructureData& a)
{
    const auto report = affine_data_check(a);
    if (!report.ok()) {
        std::string why;
        for (const auto& f : report.failures)
            why += (why.empty() ? "" : "; ") + f;
        throw MathError("affine data for " + a.name + " fails its checks: " + why);
    }
    std::array<RMatrix, 3> dual;
    for (int i = 0; i < 3; ++i)
        dual[i] = -a.rho[i].transpose();
    MirrorPair p;
    p.name = a.name;
    p.params = a.params;
    p.iia_listing = semidirect_algebra(a.base, dual);
    p.iib_listing = semidirect_algebra(a.base, a.rho);
    const CMatrix A = distinguished_frame_matrix(a.tau);
    p.iia = SU3Structure::distinguished(p.iia_listing.change_coframe(A));
    p.iib = SU3Structure::distinguished(p.iib_listing.change_coframe(A));
    return p;
}

struct Mismatch {
    std::string side;  // "IIA" or "IIB"
    int index = 0;     // 1-based coframe index
    std::string expected;
    std::string computed;
};

struct ListingReport {
    bool iia = false;
    bool iib = false;
    std::vector<Mismatch> mismatches;

    bool ok() const { return iia && iib; }
};

inline std::vector<Mismatch> compare_differentials(const std::string& side, const LieAlgebra& expected,
                                                   const LieAlgebra& computed)
{
    std::vector<Mismatch> out;
    if (expected.dim() != computed.dim()) {
        out.push_back({side, 0, "dimension " + std::to_string(expected.dim()),
                       "dimension " + std::to_string(computed.dim())});
        return out;
    }
    for (int k = 0; k < expected.dim(); ++k)
        if (!(expected.de(k) == computed.de(k)))
            out.push_back({side, k + 1, render_terms(expected.de(k)), render_terms(computed.de(k))});
    return out;
}

inline ListingReport verify_against_listing(const MirrorPair& p, const std::string& expected_iia,
                                            const std::string& expected_iib)
{
    ListingReport r;
    auto a = compare_differentials("IIA", parse_salamon(expected_iia, p.params), p.iia_listing);
    auto b = compare_differentials("IIB", parse_salamon(expected_iib, p.params), p.iib_listing);
    r.iia = a.empty();
    r.iib = b.empty();
    r.mismatches = a;
    r.mismatches.insert(r.mismatches.end(), b.begin(), b.end());
    return r;
}

struct HolonomyGenerator {
    std::string name;
    RMatrix M;
    std::optional<std::vector<Scalar>> t;  // nullopt when the translation leaves the field
};

struct LatticeBasis {
    RMatrix P;  // columns generate the lattice
};

struct HolonomyEntry {
    std::string name;
    RMatrix conjugate;  // P^{-1} M P
    bool integral = false;
    Scalar det;
    bool unimodular = false;
    std::string translation;  // "in lattice", "not in lattice", "not representable"
};

struct HolonomyReport {
    std::vector<HolonomyEntry> entries;
    bool strict = false;
    bool ok() const
    {
        for (const auto& e : entries) {
            if (!e.integral || !e.unimodular)
                return false;
            if (strict && e.translation == "not in lattice")
                return false;
        }
        return true;
    }
};

inline bool is_integral(const RMatrix& m)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_integer())
                return false;
    return true;
}

// P^{-1} M P integral with determinant +-1 for every generator.
inline HolonomyReport holonomy_preserves_lattice(const std::vector<HolonomyGenerator>& gens, const LatticeBasis& basis,
                                                 bool strict = false)
{
    const auto Pinv = try_inverse(basis.P);
    if (!Pinv)
        throw MathError("lattice basis is singular");
    HolonomyReport r;
    r.strict = strict;
    for (const auto& g : gens) {
        HolonomyEntry e;
        e.name = g.name;
        e.conjugate = *Pinv * g.M * basis.P;
        e.integral = is_integral(e.conjugate);
        e.det = determinant(e.conjugate);
        e.unimodular = e.det == Scalar(1) || e.det == Scalar(-1);
        if (!g.t) {
            e.translation = "not representable";
        } else {
            const auto coords = *Pinv * *g.t;
            bool in = true;
            for (const auto& x : coords)
                in = in && x.is_integer();
            e.translation = in ? "in lattice" : "not in lattice";
        }
        r.entries.push_back(std::move(e));
    }
    return r;
}

// Xi_t with e^t = u = (m + sqrt(m^2-4))/2: columns (1,0,0), (0,1,1), (0,u,1/u).
inline LatticeBasis lattice_basis(long m)
{
    const Scalar u = quadratic_unit(m);
    const Scalar v = u.inverse();
    return {RMatrix{{1, 0, 0}, {0, 1, u}, {0, 1, v}}};
}

inline std::vector<HolonomyGenerator> untwisted_generators(long m)
{
    const Scalar u = quadratic_unit(m);
    const Scalar v = u.inverse();
    const Scalar z(0), one(1);
    return {
        {"n1: diag(1,u,1/u)", RMatrix::diagonal({one, u, v}), std::nullopt},
        {"n2: identity", RMatrix::identity(3), std::vector<Scalar>{z, one, one}},
        {"n3: identity", RMatrix::identity(3), std::vector<Scalar>{z, u, v}},
    };
}

inline std::vector<HolonomyGenerator> twisted_generators(long m)
{
    const Scalar u = quadratic_unit(m);
    const Scalar v = u.inverse();
    const Scalar z(0), one(1);
    return {
        {"n1: diag(1,u,1/u)", RMatrix::diagonal({one, u, v}), std::nullopt},
        {"n2: [[1,1,1],[0,1,0],[0,0,1]]", RMatrix{{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}, std::vector<Scalar>{one, one, one}},
        {"n3: [[1,u,1/u],[0,1,0],[0,0,1]]", RMatrix{{1, u, v}, {0, 1, 0}, {0, 0, 1}}, std::vector<Scalar>{one, u, v}},
    };
}

// n3 generator read off the general linear part directly (entries swapped relative to the list above).
inline HolonomyGenerator twisted_n3_direct(long m)
{
    const Scalar u = quadratic_unit(m);
    const Scalar v = u.inverse();
    return {"n3 (direct): [[1,1/u,u],[0,1,0],[0,0,1]]", RMatrix{{1, v, u}, {0, 1, 0}, {0, 0, 1}},
            std::vector<Scalar>{Scalar(1), u, v}};
}

}  // namespace semiflat
