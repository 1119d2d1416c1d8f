#include "semiflat/catalog.hpp"

#include <gtest/gtest.h>

using namespace semiflat;

namespace {

Form e(std::initializer_list<int> one_based)
{
    std::vector<int> idx;
    for (int i : one_based)
        idx.push_back(i - 1);
    return Form::product(6, idx);
}

Form psi(int a, int b) { return e({a}) + e({b}) * CScalar::i(); }

SU3Structure flat()
{
    return SU3Structure::from_factors(LieAlgebra::abelian(6), e({1, 4}) + e({2, 5}) + e({3, 6}),
                                      {psi(1, 4), psi(2, 5), psi(3, 6)});
}

}  // namespace

TEST(SU3, AlmostComplexStructureOfFlatOmega)
{
    const auto acs = acs_from_three_form(flat().Omega);
    ASSERT_TRUE(acs.J.has_value()) << acs.failure;
    const RMatrix& J = *acs.J;
    EXPECT_EQ(J * J, RMatrix::identity(6) * Scalar(-1));
    // J E_k = E_{k+3}, hence J* e^k = -e^{k+3} and J* e^{k+3} = e^k
    for (int k = 0; k < 3; ++k) {
        EXPECT_EQ(J(k + 3, k), Scalar(1));
        EXPECT_EQ(J(k, k + 3), Scalar(-1));
    }
    // T^{0,1} is the contraction kernel, spanned by E_k + i E_{k+3}
    ASSERT_EQ(acs.t01.size(), 3u);
    for (int k = 0; k < 3; ++k) {
        std::vector<CScalar> v(6, CScalar(0));
        v[k] = 1;
        v[k + 3] = CScalar::i();
        EXPECT_TRUE(flat().Omega.contract(v).is_zero());
    }
}

TEST(SU3, RealThreeFormHasNoComplexStructure)
{
    const auto acs = acs_from_three_form(e({1, 2, 3}));
    EXPECT_FALSE(acs.J.has_value());
    EXPECT_FALSE(acs.failure.empty());
}

TEST(SU3, TableRowFourHasComplexStructure)
{
    const Form Omega = psi(3, 1).wedge(psi(2, 4)).wedge(psi(5, 6));
    const auto acs = acs_from_three_form(Omega);
    ASSERT_TRUE(acs.J.has_value());
    EXPECT_EQ(*acs.J * *acs.J, RMatrix::identity(6) * Scalar(-1));
}

TEST(SU3, Decomposability)
{
    EXPECT_TRUE(decomposability_check(e({1, 2, 3})));
    EXPECT_FALSE(decomposability_check(e({1, 2, 3}) + e({4, 5, 6})));
    EXPECT_FALSE(vector_contraction_test(e({1, 2, 3}) + e({4, 5, 6})));
    EXPECT_FALSE(decomposability_check(e({1, 2}) + e({3, 4})));
    for (const auto& r : table1_rows())
        EXPECT_TRUE(decomposability_check(table1_structure(r).Omega)) << r.row;
}

TEST(SU3, FactorizationRecoversProduct)
{
    for (const auto& r : table1_rows()) {
        const Form Omega = table1_structure(r).Omega;
        const auto f = factorize_three_form(Omega);
        ASSERT_TRUE(f.has_value()) << r.row;
        EXPECT_EQ((*f)[0].wedge((*f)[1]).wedge((*f)[2]), Omega) << r.row;
    }
    EXPECT_FALSE(factorize_three_form(e({1, 2, 3}) + e({4, 5, 6})).has_value());
}

TEST(SU3, FlatStructurePassesEverything)
{
    const auto s = flat();
    const auto r = su3_check(s);
    EXPECT_TRUE(r.ok()) << r.failure;
    EXPECT_TRUE(is_type_IIA(s));
    EXPECT_TRUE(is_type_IIB(s));
    EXPECT_EQ(*r.normalization_ratio, CScalar(1));
    EXPECT_EQ(*r.verbatim_ratio, CScalar(-1));
    for (const auto& m : r.minors)
        EXPECT_EQ(m.sign(), 1);
}

TEST(SU3, NormalizationConstant)
{
    const auto s = flat();
    const Form lhs = s.Omega.wedge(s.Omega.conj());
    const Form rhs = wedge_power(s.omega, 3) * normalization_constant();
    EXPECT_EQ(lhs, rhs);
    // (-2i)^3 / 3! = 4i/3
    const CScalar m2i(Scalar(0), Scalar(-2));
    EXPECT_EQ(m2i * m2i * m2i / CScalar(6), verbatim_normalization_constant());
}

TEST(SU3, NegatedOmegaIsNotPositive)
{
    auto s = flat();
    s.omega = -s.omega;
    const auto r = su3_check(s);
    EXPECT_TRUE(r.j_exists);
    EXPECT_TRUE(r.omega_type_11);
    EXPECT_FALSE(r.positive);
    EXPECT_FALSE(r.ok());
}

TEST(SU3, OmegaOfWrongTypeDetected)
{
    auto s = flat();
    s.omega = e({1, 2}) + e({3, 4}) + e({5, 6});
    const auto r = su3_check(s);
    EXPECT_FALSE(r.omega_type_11);
}

TEST(SU3, TableOneRowsAsListed)
{
    for (const auto& row : table1_rows()) {
        const auto s = table1_structure(row);
        const auto r = su3_check(s);
        EXPECT_TRUE(r.decomposable && r.j_exists && r.omega_real && r.omega_type_11) << row.row;
        if (row.row == 3) {
            // prefactor 1+i has modulus sqrt 2
            EXPECT_TRUE(r.positive);
            EXPECT_EQ(*r.normalization_ratio, CScalar(2));
            EXPECT_TRUE(is_type_IIA(s));
        } else if (row.row == 5) {
            EXPECT_FALSE(r.positive);
            EXPECT_FALSE(is_type_IIA(s));
        } else {
            EXPECT_TRUE(r.ok()) << row.row << ": " << r.failure;
            EXPECT_TRUE(is_type_IIA(s)) << row.row;
        }
    }
}

TEST(SU3, TableOneCorrectedRows)
{
    for (const Rational& alpha : {Rational(3, 7), Rational(-2), Rational(5)})
        for (const auto& row : table1_corrections(alpha)) {
            const auto s = table1_structure(row);
            const auto r = su3_check(s);
            EXPECT_TRUE(r.ok()) << row.row << ": " << r.failure;
            EXPECT_TRUE(is_type_IIA(s)) << row.row;
        }
}

TEST(SU3, TableOneLambdaFamily)
{
    for (const auto& l : {Rational(1, 2), Rational(-1), Rational(2), Rational(3)}) {
        const auto s = table1_structure(table1_rows(l)[1]);
        EXPECT_TRUE(su3_check(s).ok()) << l;
        EXPECT_TRUE(is_type_IIA(s)) << l;
    }
}

TEST(SU3, MirrorOfRowOneIsTypeIIB)
{
    const auto p = build_mirror_pair(affine_structure("R3-twisted"));
    EXPECT_TRUE(is_type_IIB(p.iib));
    EXPECT_TRUE(su3_check(p.iib).ok());
    // the printed abstract algebra with the literal factors e^k + i e^{k+3} is not integrable
    const auto lit = SU3Structure::distinguished(parse_salamon("(0,0,0,0,0,12+34)"));
    EXPECT_FALSE(integrable(lit));
    EXPECT_FALSE(is_type_IIB(lit));
}

TEST(SU3, ClosedOmegaIffIntegrableOnMirrors)
{
    for (const auto& l : suite_lambdas())
        for (const auto& a : affine_catalog(l)) {
            const auto p = build_mirror_pair(a);
            EXPECT_TRUE(p.iib.g.d(p.iib.Omega).is_zero()) << a.name;
            EXPECT_TRUE(integrable(p.iib)) << a.name;
            EXPECT_TRUE(is_type_IIA(p.iia)) << a.name;
            EXPECT_TRUE(is_type_IIB(p.iib)) << a.name;
            EXPECT_TRUE(su3_check(p.iia).ok()) << a.name;
            EXPECT_TRUE(su3_check(p.iib).ok()) << a.name;
        }
    // a non-integrable structure: dOmega has a (2,2) part
    const auto s = SU3Structure::distinguished(parse_salamon("(0,0,0,0,0,12+34)"));
    EXPECT_FALSE(s.g.d(s.Omega).is_zero());
}
