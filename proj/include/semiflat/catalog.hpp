#pragma once

// Embedded data: the five affine structures, the eight IIA algebras and the
// seven mirror rows, each with a provenance note.

#include "semiflat/mirror.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace semiflat {

inline std::vector<std::string> affine_names()
{
    return {"R3-twisted", "H3-untwisted", "H3-twisted", "E11-untwisted", "E11-twisted"};
}

inline Rational default_lambda() { return Rational(1, 2); }

// lambda is only read by H3-twisted and must avoid 0 and 1.
inline AffineStructureData affine_structure(const std::string& name, const Rational& lambda = default_lambda())
{
    const RMatrix Z(3, 3);
    const RMatrix I = RMatrix::identity(3);
    auto E = [](int i, int j) { return RMatrix::unit(3, i - 1, j - 1); };
    const LieAlgebra abelian3 = parse_salamon("(0,0,0)");
    const LieAlgebra h3 = parse_salamon("(0,0,-12)");    // [E1,E2] = E3
    const LieAlgebra e11 = parse_salamon("(0,-12,13)");  // [E1,E2] = E2, [E1,E3] = -E3
    const RMatrix diag011 = RMatrix::diagonal({Scalar(0), Scalar(1), Scalar(-1)});

    if (name == "R3-twisted")
        return {name, "A(R^3, twisted)", abelian3, {E(3, 2), E(3, 1), Z}, I, {},
                "abelian R^3 with developing map x -> (x1, x2, x3 + x1 x2)"};
    if (name == "H3-untwisted")
        return {name, "A(H3(R), 0)", h3, {E(3, 2), Z, Z}, I, {},
                "Heisenberg group with developing map g -> (x1, x2, x3)"};
    if (name == "H3-twisted") {
        if (lambda == 0 || lambda == 1)
            throw MathError("lambda must avoid 0 and 1");
        return {name, "A(H3(R), twisted, lambda)", h3, {E(3, 2), E(3, 1), Z},
                RMatrix::diagonal({Scalar(1), Scalar(lambda), Scalar(lambda - 1)}), {{"lambda", lambda}},
                "Heisenberg group with developing map g -> (x1, lambda x2, (lambda-1) x3 + x1 x2)"};
    }
    if (name == "E11-untwisted")
        return {name, "A(E(1,1), 0)", e11, {diag011, Z, Z}, I, {},
                "E(1,1) with developing map g -> (x1, x2, x3)"};
    if (name == "E11-twisted")
        return {name, "A(E(1,1), twisted)", e11, {diag011, E(1, 3), E(1, 2)}, I, {},
                "E(1,1) with developing map g -> (x1 + x2 x3, x2, x3)"};
    throw MathError("unknown affine structure '" + name + "'");
}

inline std::vector<AffineStructureData> affine_catalog(const Rational& lambda = default_lambda())
{
    std::vector<AffineStructureData> out;
    for (const auto& n : affine_names())
        out.push_back(affine_structure(n, lambda));
    return out;
}

// Coframe differentials of both sides in the frame dual to (Y, X), as listed with each construction.
struct ConstructionListing {
    std::string affine;
    std::string iia;
    std::string iib;
    std::string provenance;
};

inline std::vector<ConstructionListing> construction_listings()
{
    return {
        {"R3-twisted", "(-35,-34,0,0,0,0)", "(0,0,24+15,0,0,0)", "coframe listing of the twisted R^3 pair"},
        {"H3-untwisted", "(0,-34,0,0,0,-45)", "(0,0,24,0,0,-45)", "coframe listing of the untwisted H3 pair"},
        {"H3-twisted", "(-35,-34,0,0,0,-45)", "(0,0,24+15,0,0,-45)", "coframe listing of the twisted H3 pair (f frame)"},
        {"E11-untwisted", "(0,-24,34,0,-45,46)", "(0,24,-34,0,-45,46)", "coframe listing of the untwisted E(1,1) pair"},
        {"E11-twisted", "(0,-24-16,34-15,0,-45,46)", "(-35-26,24,-34,0,-45,46)",
         "coframe listing of the twisted E(1,1) pair"},
    };
}

inline const ConstructionListing& construction_listing(const std::string& affine)
{
    static const auto all = construction_listings();
    for (const auto& l : all)
        if (l.affine == affine)
            return l;
    throw MathError("no listing for '" + affine + "'");
}

struct Table1Row {
    int row = 0;
    std::string algebra;
    std::string omega;
    std::array<std::string, 3> psi;
    std::string prefactor = "1";
    Params params;
    bool completely_solvable = false;
    bool mirror_constructible = false;
    std::string affine;  // affine structure producing it, if any
    std::string provenance;
};

inline Rational default_alpha() { return Rational(3, 7); }

inline std::vector<Table1Row> table1_rows(const Rational& lambda = default_lambda(), const Rational& alpha = default_alpha())
{
    const Params L{{"lambda", lambda}};
    const Params A{{"alpha", alpha}};
    return {
        {1, "(0,0,0,0,12,13)", "e14+e26+e35", {"e1+ie4", "e2+ie6", "e3+ie5"}, "1", {}, true, true, "R3-twisted",
         "IIA list row 1; nilpotent"},
        {2, "(0,0,0,12,13,23)", "e61+lambda e52+(1-lambda)e34", {"e6+ie1", "e5+i lambda e2", "e3+i(1-lambda)e4"}, "1", L,
         true, true, "H3-twisted", "IIA list row 2; nilpotent, lambda family"},
        {3, "(0,-13,-12,0,-46,-45)", "e14+e23+e56", {"e1+ie4", "e2+ie3", "e5+ie6"}, "1+i", {}, true, false, "",
         "IIA list row 3; E(1,1) x E(1,1), no Lagrangian semidirect splitting"},
        {4, "(15,-25,-35,45,0,0)", "e31+e24+e56", {"e3+ie1", "e2+ie4", "e5+ie6"}, "1", {}, true, true, "E11-untwisted",
         "IIA list row 4"},
        {5, "(alpha 15+25,-15+alpha 25,-alpha 35+45,-35-alpha 45,0,0)", "e13+e24+e56", {"e3+ie1", "e2+ie4", "e5+ie6"},
         "1", A, false, false, "", "IIA list row 5; alpha family, not completely solvable"},
        {6, "(23,-36,26,26-56,36+46,0)", "-2e16+e34-e25", {"-2e1+ie6", "e3+ie4", "e5+ie2"}, "1", {}, false, false, "",
         "IIA list row 6; not completely solvable"},
        {7, "(16+35,-26+45,36,-46,0,0)", "e14+e23+e56", {"e1+ie4", "e2+ie3", "e5+ie6"}, "1", {}, true, true,
         "E11-twisted", "IIA list row 7"},
        {8, "(-16+25,-15-26,36-45,35+46,0,0)", "e14+e23+e65", {"e1+ie4", "e2+ie3", "e6+ie5"}, "1", {}, false, false, "",
         "IIA list row 8; not completely solvable"},
    };
}

// Corrected structures for the two rows whose printed data does not satisfy the definitions.
inline std::vector<Table1Row> table1_corrections(const Rational& alpha = default_alpha())
{
    const Params A{{"alpha", alpha}};
    return {
        {3, "(0,-13,-12,0,-46,-45)", "e14+e23+e56", {"e1+ie4", "e2+ie3", "e5+ie6"}, "(1+i)/sqrt(2)", {}, true, false,
         "", "row 3 with unit-modulus prefactor (1+i)/sqrt(2)"},
        {5, "(alpha 15+25,-15+alpha 25,-alpha 35+45,-35-alpha 45,0,0)", "e13+e24+e56", {"e1+ie3", "e2+ie4", "e5+ie6"}, "1",
         A, false, false, "", "row 5 with first factor e1+ie3"},
    };
}

inline SU3Structure table1_structure(const Table1Row& r)
{
    const LieAlgebra g = parse_salamon(r.algebra, r.params);
    const Form omega = parse_form(r.omega, 6, r.params, 2);
    std::array<Form, 3> psi;
    for (int k = 0; k < 3; ++k)
        psi[k] = parse_form(r.psi[k], 6, r.params, 1);
    const CScalar pre = detail::CoefficientParser(detail::normalize_text(r.prefactor), r.params).parse();
    psi[0] *= pre;
    return SU3Structure::from_factors(g, omega, psi);
}

struct Table2Row {
    int row = 0;
    std::string label;
    std::string affine;
    std::vector<Rational> lambdas;  // empty: no parameter
    std::string iia_algebra;        // printed "Lie algebra" column
    std::string iib_algebra;        // printed "Mirror Lie algebra" column
    std::array<int, 7> numbers;
    std::string provenance;
};

// Column (p,q) of the Tseng-Yau side; Bott-Chern partner is (3-p, q).
inline const std::array<std::pair<int, int>, 7>& table2_columns()
{
    static const std::array<std::pair<int, int>, 7> cols{
        {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}}};
    return cols;
}

// Bott-Chern bidegrees as printed in the column headers.
inline const std::array<std::pair<int, int>, 7>& table2_printed_bc_headers()
{
    static const std::array<std::pair<int, int>, 7> cols{
        {{2, 0}, {3, 1}, {1, 0}, {2, 1}, {3, 2}, {1, 1}, {3, 2}}};
    return cols;
}

inline std::vector<Table2Row> table2_rows()
{
    const std::string h6 = "(0,0,0,0,12,13)";
    const std::string n_h3t = "(0,0,0,12,13,23)";
    const std::string m_h3t = "(0,0,0,0,12,14+23)";
    return {
        {1, "A(R^3, twisted)", "R3-twisted", {}, h6, "(0,0,0,0,0,12+34)", {1, 3, 2, 6, 3, 4, 7}, "mirror table row 1"},
        {2, "A(H3(R), 0)", "H3-untwisted", {}, h6, h6, {2, 2, 2, 6, 3, 5, 6}, "mirror table row 2"},
        {3, "A(H3(R), twisted, lambda=-1)", "H3-twisted", {Rational(-1)}, n_h3t, m_h3t, {1, 2, 2, 6, 3, 4, 7},
         "mirror table row 3"},
        {4, "A(H3(R), twisted, lambda=1/2,2)", "H3-twisted", {Rational(1, 2), Rational(2)}, n_h3t, m_h3t,
         {1, 2, 2, 6, 3, 5, 6}, "mirror table row 4"},
        {5, "A(H3(R), twisted, generic lambda)", "H3-twisted", {Rational(3), Rational(5, 3)}, n_h3t, m_h3t,
         {1, 2, 2, 6, 3, 4, 6}, "mirror table row 5; generic lambda sampled"},
        {6, "A(E(1,1), 0)", "E11-untwisted", {}, "(15,-25,-35,45,0,0)", "(15,-25,-35,45,0,0)", {1, 1, 1, 3, 1, 3, 3},
         "mirror table row 6"},
        {7, "A(E(1,1), twisted)", "E11-twisted", {}, "(16+35,-26+45,36,-46,0,0)", "(24+35,26,36,-46,-56,0)",
         {1, 1, 0, 2, 1, 2, 1}, "mirror table row 7; complex side is a Lie-algebra level statement only"},
    };
}

// Every admissible instance of a row: one per lambda sample, or one without parameters.
inline std::vector<AffineStructureData> table2_instances(const Table2Row& r)
{
    std::vector<AffineStructureData> out;
    if (r.lambdas.empty())
        out.push_back(affine_structure(r.affine));
    for (const auto& l : r.lambdas)
        out.push_back(affine_structure(r.affine, l));
    return out;
}

inline std::vector<Rational> suite_lambdas()
{
    return {Rational(-1), Rational(1, 2), Rational(2), Rational(3)};
}

}  // namespace semiflat
