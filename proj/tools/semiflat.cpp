#include "semiflat/semiflat.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <string>
#include <vector>

using namespace semiflat;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

Rational rational_arg(const std::string& name, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const MathError&) {
        throw ParseError("--" + name + ": not a rational number: '" + text + "'");
    }
}

Params params_arg(const std::vector<std::string>& items)
{
    Params p;
    for (const auto& s : items) {
        const auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("--param expects name=value, got '" + s + "'");
        p[s.substr(0, eq)] = rational_arg("param", s.substr(eq + 1));
    }
    return p;
}

int emit(const Report& r, bool json)
{
    if (json)
        std::cout << r.body.dump(2) << "\n";
    else
        std::cout << r.text << (r.pass ? "PASS" : "FAIL") << "\n";
    return r.pass ? exit_pass : exit_fail;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Semi-flat mirror pairs on solvable Lie algebras: exact checks and cohomology"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Emit the JSON report instead of text");

    std::string spec, lambda_text = "1/2", alpha_text = "3/7", algebra, omega;
    std::vector<std::string> psi, param_items;
    int row = 0;
    long m = 3;
    bool all_pq = false, twisted = false, strict = false;

    auto* check = app.add_subcommand("check", "Jacobi, unimodularity and Betti numbers of a Salamon spec");
    check->add_option("--spec", spec, "Structure equations, e.g. (0,0,0,0,12,13)")->required();
    check->add_option("--param", param_items, "Parameter binding name=p/q");

    auto* su3 = app.add_subcommand("su3", "SU(3)-structure checks");
    su3->require_subcommand(1);
    auto* su3_check_cmd = su3->add_subcommand("check", "Check a catalog row or an explicit structure");
    su3_check_cmd->add_option("--row", row, "Table 1 row (1-8)")->check(CLI::Range(1, 8));
    su3_check_cmd->add_option("--spec", spec, "Structure equations");
    su3_check_cmd->add_option("--omega", omega, "Symplectic form, e.g. e14+e25+e36");
    su3_check_cmd->add_option("--psi", psi, "Three complex 1-forms whose product is Omega")->expected(3);
    su3_check_cmd->add_option("--lambda", lambda_text, "Row 2 parameter");
    su3_check_cmd->add_option("--alpha", alpha_text, "Row 5 parameter");
    su3_check_cmd->add_option("--param", param_items, "Parameter binding name=p/q");

    auto* mirror = app.add_subcommand("mirror", "Mirror construction and lattice holonomy");
    mirror->require_subcommand(1);
    auto* build = mirror->add_subcommand("build", "Build both algebras from affine data and verify them");
    build->add_option("--affine", algebra, "Affine structure name")->required()->check(CLI::IsMember(affine_names()));
    build->add_option("--lambda", lambda_text, "H3-twisted parameter");
    build->add_option("--m", m, "Unused by build; accepted for symmetry with holonomy");
    auto* holonomy = mirror->add_subcommand("holonomy", "E(1,1) holonomy against the lattice");
    holonomy->add_option("--m", m, "Integer trace m >= 3")->check(CLI::Range(3L, 1000000L));
    holonomy->add_flag("--twisted", twisted, "Use the twisted generators");
    holonomy->add_flag("--strict", strict, "Also require translations to be lattice vectors");

    auto* coh = app.add_subcommand("cohomology", "Tseng-Yau or Bott-Chern dimensions");
    coh->require_subcommand(1);
    std::string kind;
    for (const char* k : {"ty", "bc"}) {
        auto* sub = coh->add_subcommand(k, std::string(k) == "ty" ? "Tseng-Yau numbers of the IIA side"
                                                                  : "Bott-Chern numbers of the IIB side");
        sub->add_option("--algebra", algebra, "Salamon spec or affine structure name")->required();
        sub->add_flag("--all-pq", all_pq, "Print all 16 cells");
        sub->add_option("--lambda", lambda_text, "H3-twisted parameter");
        sub->add_option("--param", param_items, "Parameter binding name=p/q");
        if (std::string(k) == "bc")
            sub->add_option("--psi", psi, "Three (1,0)-forms defining J on a raw spec")->expected(3);
        sub->callback([&kind, k] { kind = k; });
    }

    auto* fm = app.add_subcommand("fm", "Formal Fourier-Mukai transform");
    fm->require_subcommand(1);
    auto* fm_verify_cmd = fm->add_subcommand("verify", "Lemma, inverse and bijectivity checks");

    auto* t1 = app.add_subcommand("table1", "Verify every IIA structure of the first table");
    t1->add_option("--lambda", lambda_text, "Row 2 parameter");
    t1->add_option("--alpha", alpha_text, "Row 5 parameter");
    auto* t2 = app.add_subcommand("table2", "Reproduce the mirror table");

    auto* cat = app.add_subcommand("catalog", "Embedded data");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "List catalog entries with provenance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_pass : exit_usage;
    }

    try {
        const Params params = params_arg(param_items);
        const Rational lambda = rational_arg("lambda", lambda_text);
        if (*check)
            return emit(cmd_check(spec, params), json);
        if (*su3_check_cmd) {
            if (row > 0) {
                const auto rows = table1_rows(lambda, rational_arg("alpha", alpha_text));
                const auto& r = rows.at(row - 1);
                return emit(su3_report(table1_structure(r), "row " + std::to_string(row) + ": " + r.provenance), json);
            }
            if (spec.empty() || omega.empty() || psi.size() != 3)
                throw ParseError("su3 check needs --row, or --spec with --omega and three --psi forms");
            return emit(cmd_su3(spec, omega, {psi[0], psi[1], psi[2]}, params), json);
        }
        if (*build)
            return emit(cmd_mirror_build(algebra, lambda), json);
        if (*holonomy)
            return emit(cmd_holonomy(m, twisted, strict), json);
        if (!kind.empty())
            return emit(cmd_cohomology(kind, algebra, all_pq, lambda, params, psi), json);
        if (*fm_verify_cmd)
            return emit(cmd_fm(), json);
        if (*t1)
            return emit(cmd_table1(lambda, rational_arg("alpha", alpha_text)), json);
        if (*t2)
            return emit(cmd_table2(), json);
        if (*cat_list)
            return emit(cmd_catalog(), json);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_fail;
    }
    return exit_usage;
}
