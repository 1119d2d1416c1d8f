// Acceptance suite: one line per criterion, then erratum lines.
// Exit 0 iff every failure is one of the known, analyzed catalog errata
// and each erratum check confirms the analysis.

#include "semiflat/commands.hpp"

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace semiflat;

namespace {

struct Line {
    int id;
    bool pass;
    std::string detail;
};

std::vector<AffineStructureData> every_structure()
{
    std::vector<AffineStructureData> out;
    for (const auto& name : affine_names()) {
        if (name == "H3-twisted")
            for (const auto& l : suite_lambdas())
                out.push_back(affine_structure(name, l));
        else
            out.push_back(affine_structure(name));
    }
    return out;
}

std::string label(const AffineStructureData& a)
{
    return a.params.empty() ? a.name : a.name + "[" + detail::params_str(a.params) + "]";
}

Line table2_numbers(double& seconds)
{
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    int checked = 0;
    std::string bad;
    for (const auto& row : table2_rows())
        for (const auto& a : table2_instances(row)) {
            const auto m = mirror_numbers_check(build_mirror_pair(a));
            const bool hit = ty_vector(m.ty) == row.numbers && bc_vector(m.bc) == row.numbers;
            ok = ok && hit;
            ++checked;
            if (!hit)
                bad += " row " + std::to_string(row.row) + " " + label(a);
        }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream os;
    os << checked << " instances of 7 rows, TY and BC vs printed integers, " << seconds << " s";
    if (ok && seconds >= 30)
        os << " (over 30 s budget)";
    return {1, ok && seconds < 30, os.str() + bad};
}

Line mirror_identity()
{
    bool ok = true;
    int pairs = 0;
    std::string bad;
    auto check = [&](const AffineStructureData& a) {
        const bool hit = mirror_numbers_check(build_mirror_pair(a)).all_equal;
        ok = ok && hit;
        ++pairs;
        if (!hit)
            bad += " " + label(a);
    };
    for (const auto& a : every_structure())
        check(a);
    for (const auto& row : table2_rows())
        for (const auto& a : table2_instances(row))
            check(a);
    return {2, ok, std::to_string(pairs) + " pairs x 16 cells" + bad};
}

struct Table1Outcome {
    Line line;
    bool known_only = false;
};

Table1Outcome table1()
{
    bool ok = true;
    bool named_pass = true;
    bool known_only = true;
    std::string failed;
    for (const auto& lam : suite_lambdas())
        for (const auto& alpha : {Rational(3, 7), Rational(-2), Rational(5)})
            for (const auto& r : table1_rows(lam, alpha)) {
                const SU3Structure s = table1_structure(r);
                const SU3Report sr = su3_check(s);
                const bool iia = is_type_IIA(s);
                if (sr.ok() && iia)
                    continue;
                ok = false;
                if (r.row == 1 || r.row == 2 || r.row == 4 || r.row == 7)
                    named_pass = false;
                const bool row3 = r.row == 3 && sr.normalization_ratio && *sr.normalization_ratio == CScalar(2) &&
                                  sr.decomposable && sr.positive && iia;
                const bool row5 = r.row == 5 && !sr.positive && !iia;
                known_only = known_only && (row3 || row5);
                const std::string tag = " row " + std::to_string(r.row);
                if (failed.find(tag) == std::string::npos)
                    failed += tag;
            }
    std::string d = "8 rows over lambda in {-1,1/2,2,3}, alpha in {3/7,-2,5}; rows 1,2,4,7 ";
    d += named_pass ? "pass" : "FAIL";
    if (!failed.empty())
        d += "; failing:" + failed;
    return {{3, ok, d}, known_only && named_pass};
}

struct ListingOutcome {
    Line line;
    bool known_only = false;
};

ListingOutcome listings()
{
    bool ok = true;
    bool known_only = true;
    std::string bad;
    for (const auto& a : every_structure()) {
        const auto p = build_mirror_pair(a);
        const auto& l = construction_listing(a.name);
        const auto r = verify_against_listing(p, l.iia, l.iib);
        ok = ok && r.ok();
        for (const auto& m : r.mismatches) {
            bad += "; " + label(a) + " " + m.side + " d e" + std::to_string(m.index) + ": listed " + m.expected +
                   ", constructed " + m.computed;
            known_only = known_only && a.name == "E11-twisted" && m.side == "IIB" && m.index == 1;
        }
    }
    return {{4, ok, "5 affine structures, H3-twisted at lambda in {-1,1/2,2,3}, both sides" + bad}, known_only};
}

Line fourier_mukai()
{
    const auto r = fm_verify();
    std::ostringstream os;
    os << "FT(exp 2w) = Omega " << detail::yes(r.lemma) << ", bijective on all A^{p,q} " << detail::yes(r.bijective)
       << ", inverse " << detail::yes(r.inverse_roundtrip);
    return {5, r.lemma && r.bijective, os.str()};
}

Line holonomy()
{
    bool ok = true;
    std::string d;
    for (long m : {3L, 4L, 5L})
        for (bool tw : {false, true}) {
            const auto u = quadratic_unit(m);
            const auto gens = tw ? twisted_generators(m) : untwisted_generators(m);
            const auto r = holonomy_preserves_lattice(gens, lattice_basis(m), false);
            const bool unit = u + u.inverse() == Scalar(m) && u * u.galois() == Scalar(1);
            ok = ok && r.ok() && unit;
            d += (d.empty() ? "" : ", ") + std::string(tw ? "twisted" : "untwisted") + " m=" + std::to_string(m) + " " +
                 detail::yes(r.ok() && unit);
        }
    return {6, ok, d};
}

Line structure_suite()
{
    std::vector<std::pair<std::string, LieAlgebra>> algebras;
    std::vector<MirrorPair> pairs;
    for (const auto& a : every_structure()) {
        pairs.push_back(build_mirror_pair(a));
        const auto& p = pairs.back();
        algebras.emplace_back(label(a) + " IIA", p.iia.g);
        algebras.emplace_back(label(a) + " IIB", p.iib.g);
        algebras.emplace_back(label(a) + " IIA listing", p.iia_listing);
        algebras.emplace_back(label(a) + " IIB listing", p.iib_listing);
    }
    for (const auto& r : table1_rows())
        algebras.emplace_back("table1 row " + std::to_string(r.row), parse_salamon(r.algebra, r.params));
    for (const auto& r : table2_rows()) {
        algebras.emplace_back("table2 row " + std::to_string(r.row) + " IIA", parse_salamon(r.iia_algebra));
        algebras.emplace_back("table2 row " + std::to_string(r.row) + " IIB", parse_salamon(r.iib_algebra));
    }
    bool ok = true;
    std::string bad;
    for (const auto& [name, g] : algebras) {
        bool hit = g.d_squared_zero() && g.is_unimodular();
        if (hit) {
            const auto b = g.betti_numbers();
            for (std::size_t k = 0; k < b.size(); ++k)
                hit = hit && b[k] == b[b.size() - 1 - k];
        }
        ok = ok && hit;
        if (!hit)
            bad += "; " + name;
    }
    for (const auto& p : pairs) {
        const auto s = symplectic_identities(p.iia.g, p.fiber);
        const auto c = complex_identities(p.iib);
        const bool hit = s.sl2 && s.anticommute && s.dlambda_squared && c.anticommute && c.del_squared &&
                         c.delbar_squared && c.d_splits;
        ok = ok && hit;
        if (!hit)
            bad += "; identities on " + p.name;
    }
    return {7, ok,
            std::to_string(algebras.size()) + " algebras (d^2, unimodular, duality), " + std::to_string(pairs.size()) +
                " pairs ([Lambda,L], dd^L+d^Ld, del delbar+delbar del)" + bad};
}

Line two_fibrations()
{
    const auto rows = table2_rows();
    const auto p1 = build_mirror_pair(affine_structure(rows[0].affine));
    const auto p2 = build_mirror_pair(affine_structure(rows[1].affine));
    const LieAlgebra target = parse_salamon("(0,0,0,0,12,13)");
    const bool same_iia = find_signed_permutation(p1.iia_listing, target).has_value() &&
                          find_signed_permutation(p2.iia_listing, target).has_value();
    const auto t1 = ty_vector(tseng_yau_table(p1.iia.g, p1.fiber));
    const auto t2 = ty_vector(tseng_yau_table(p2.iia.g, p2.fiber));
    const std::string b1 = render_salamon(p1.iib_listing), b2 = render_salamon(p2.iib_listing);
    const bool iib_differ = p1.iib.g.betti_numbers() != p2.iib.g.betti_numbers();
    const bool ok = same_iia && t1 != t2 && b1 != b2 && iib_differ;
    return {8, ok,
            rows[0].affine + " and " + rows[1].affine + ": IIA ~ (0,0,0,0,12,13) " + detail::yes(same_iia) + ", TY " +
                detail::tuple_str(t1) + " vs " + detail::tuple_str(t2) + ", IIB " + b1 + " vs " + b2};
}

const char* names[] = {"",
                       "Table 2 TY/BC numbers",
                       "mirror number identity",
                       "Table 1 SU(3) and IIA",
                       "listed structure equations",
                       "Fourier-Mukai lemma and bijection",
                       "holonomy preserves lattice",
                       "structural property suite",
                       "two fibrations witness"};

}  // namespace

int main()
{
    try {
        double seconds = 0;
        std::vector<Line> lines;
        lines.push_back(table2_numbers(seconds));
        lines.push_back(mirror_identity());
        const auto t1 = table1();
        lines.push_back(t1.line);
        const auto ls = listings();
        lines.push_back(ls.line);
        lines.push_back(fourier_mukai());
        lines.push_back(holonomy());
        lines.push_back(structure_suite());
        lines.push_back(two_fibrations());

        int failed = 0;
        for (const auto& l : lines) {
            std::cout << "[" << (l.pass ? "PASS" : "FAIL") << "] " << l.id << ". " << names[l.id] << ": " << l.detail
                      << "\n";
            failed += !l.pass;
        }

        // Errata: corrected rows must pass for every alpha, and the failures above must be the analyzed ones.
        bool corrections = true;
        for (const auto& alpha : {Rational(3, 7), Rational(-2), Rational(5)})
            for (const auto& r : table1_corrections(alpha)) {
                const auto s = table1_structure(r);
                const bool ok = su3_check(s).ok() && is_type_IIA(s);
                corrections = corrections && ok;
            }
        for (const auto& r : table1_corrections())
            std::cout << "[" << (corrections ? "PASS" : "FAIL") << "] erratum row " << r.row << ": " << r.provenance
                      << "\n";
        std::cout << "[" << (t1.known_only ? "PASS" : "FAIL")
                  << "] erratum: criterion 3 fails only by row 3 normalization ratio 2 and row 5 positivity/IIA\n";
        std::cout << "[" << (ls.known_only ? "PASS" : "FAIL")
                  << "] erratum: criterion 4 fails only by the sign of the listed E11-twisted IIB d e1\n";

        bool unexplained = false;
        for (const auto& l : lines)
            if (!l.pass && !((l.id == 3 && t1.known_only) || (l.id == 4 && ls.known_only)))
                unexplained = true;
        unexplained = unexplained || !corrections;
        std::cout << (8 - failed) << "/8 criteria pass; "
                  << (unexplained ? "unexplained failures present" : "all failures are known catalog errata") << "\n";
        return unexplained ? 1 : 0;
    } catch (const std::exception& e) {
        std::cout << "[FAIL] acceptance aborted: " << e.what() << "\n";
        return 1;
    }
}
