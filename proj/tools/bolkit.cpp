// bolkit: exact verification and construction tool for Bol algebras,
// Lie triple systems and their quadratic structures.

#include "bolkit/extensions.hpp"
#include "bolkit/json_io.hpp"
#include "bolkit/pder.hpp"
#include "bolkit/reps.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

using namespace bolkit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct RunReport {
    std::string command;
    json payload = json::object();
    std::vector<std::pair<std::string, CheckReport>> checks;
    double seconds = 0;

    bool pass() const
    {
        for (const auto& [name, rep] : checks)
            if (!rep.pass())
                return false;
        return true;
    }
};

void print_report(const RunReport& run, bool as_json)
{
    if (as_json) {
        json j;
        j["command"] = run.command;
        j["status"] = run.pass() ? "pass" : "fail";
        j["seconds"] = run.seconds;
        json checks = json::object();
        for (const auto& [name, rep] : run.checks)
            checks[name] = report_to_json(rep);
        j["checks"] = std::move(checks);
        if (!run.payload.empty())
            j["result"] = run.payload;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "command: " << run.command << "\n";
    for (const auto& [name, rep] : run.checks) {
        std::cout << "  " << name << ": " << (rep.pass() ? "pass" : "FAIL");
        if (!rep.pass()) {
            std::cout << " (" << rep.total_violations << " violations, first at "
                      << rep.first_failed_identity() << ")";
            for (const Violation& v : rep.violations) {
                std::cout << "\n    " << v.identity << " @ (";
                for (std::size_t i = 0; i < v.indices.size(); ++i)
                    std::cout << (i ? "," : "") << v.indices[i];
                std::cout << ") residual [";
                for (std::size_t i = 0; i < v.residual.size(); ++i)
                    std::cout << (i ? "," : "") << to_string(v.residual[i]);
                std::cout << "]";
            }
        }
        std::cout << "\n";
    }
    if (!run.payload.empty())
        std::cout << run.payload.dump(2) << "\n";
    std::cout << "status: " << (run.pass() ? "pass" : "fail") << " (" << run.seconds << "s)\n";
}

// A source is either a JSON file path or a built-in catalog name.
AlgebraFile load_algebra(const std::string& src)
{
    std::ifstream in(src);
    if (in) {
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("JSON parse error in ") + src + ": " + e.what());
        }
        return algebra_from_json(j);
    }
    CatalogEntry entry = catalog(src);
    return AlgebraFile{entry.algebra, entry.form};
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("JSON parse error in ") + path + ": " + e.what());
    }
}

SymForm require_form(const AlgebraFile& af, const std::string& src)
{
    if (!af.form)
        throw std::invalid_argument("input '" + src + "' carries no bilinear form");
    return SymForm{*af.form};
}

int run_checks(RunReport& run, bool as_json)
{
    print_report(run, as_json);
    return run.pass() ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"bolkit: exact computations with Bol algebras and their quadratic structures"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable reports");

    std::string src, rep_file, cocycle_file, check_kind = "all", btilde_kind = "paper";
    std::size_t depth = 1;
    bool want_dual = false, want_thm34 = false;

    auto* c_verify = app.add_subcommand("verify", "run axiom checkers on an algebra");
    c_verify->add_option("input", src, "algebra file or catalog name")->required();
    c_verify->add_option("--check", check_kind, "bol|lts|maltsev|quadratic|all");

    auto* c_forms = app.add_subcommand("forms", "invariant bilinear form space");
    c_forms->add_option("input", src)->required();

    auto* c_pder = app.add_subcommand("pder", "pseudoderivation space");
    c_pder->add_option("input", src)->required();

    auto* c_rep = app.add_subcommand("rep", "check a representation");
    c_rep->add_option("input", src)->required();
    c_rep->add_option("--rep", rep_file, "representation JSON file")->required();
    c_rep->add_flag("--dual", want_dual, "also check the dual triple");
    c_rep->add_flag("--thm34", want_thm34, "report the dual-representation conditions");

    auto* c_coadj = app.add_subcommand("coadjoint", "coadjoint representation");
    c_coadj->add_option("input", src)->required();

    auto* c_extend = app.add_subcommand("extend", "T*-extension");
    c_extend->add_option("input", src)->required();
    c_extend->add_option("--cocycle", cocycle_file, "cocycle JSON file");
    c_extend->add_option("--btilde", btilde_kind, "paper|hyperbolic");

    auto* c_chain = app.add_subcommand("chain", "iterated trivial extensions");
    c_chain->add_option("input", src)->required();
    c_chain->add_option("--depth", depth, "number of links")->required();

    auto* c_catalog = app.add_subcommand("catalog", "built-in algebras");
    std::string cat_name;
    c_catalog->add_option("name", cat_name, "catalog entry to emit");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    auto t0 = std::chrono::steady_clock::now();
    try {
        RunReport run;
        for (int i = 0; i < argc; ++i)
            run.command += std::string(i ? " " : "") + argv[i];

        auto finish = [&](RunReport& r) {
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            return run_checks(r, as_json);
        };

        if (app.got_subcommand(c_catalog)) {
            if (cat_name.empty()) {
                if (as_json) {
                    std::cout << json(catalog_names()).dump(2) << "\n";
                } else {
                    for (const std::string& n : catalog_names())
                        std::cout << n << "\n";
                }
                return kExitPass;
            }
            CatalogEntry e = catalog(cat_name);
            std::cout << algebra_to_json(e.algebra, e.form).dump(2) << "\n";
            return kExitPass;
        }

        if (app.got_subcommand(c_verify)) {
            AlgebraFile af = load_algebra(src);
            RunReport& r = run;
            if (check_kind == "bol" || check_kind == "all")
                r.checks.emplace_back("bol", check_bol(af.algebra));
            if (check_kind == "lts" || check_kind == "all")
                r.checks.emplace_back("lts", check_lts(af.algebra));
            if (check_kind == "maltsev")
                r.checks.emplace_back("maltsev", check_maltsev(af.algebra.binary));
            if (check_kind == "quadratic" || (check_kind == "all" && af.form)) {
                SymForm b = require_form(af, src);
                QuadraticVerdict v = check_quadratic(af.algebra, b);
                CheckReport qr;
                qr.begin_identity("quadratic");
                if (!v.pass)
                    qr.record("quadratic", {}, {Rational(1)}, {Rational(0)});
                r.payload["quadratic"] = {{"pass", v.pass}, {"reason", v.reason}};
                r.checks.emplace_back("quadratic", std::move(qr));
            }
            if (r.checks.empty())
                throw std::invalid_argument("unknown --check kind: " + check_kind);
            return finish(r);
        }

        if (app.got_subcommand(c_forms)) {
            AlgebraFile af = load_algebra(src);
            FormSpace fs = invariant_form_space(af.algebra);
            json basis = json::array();
            for (const SymForm& f : fs.basis)
                basis.push_back(matrix_to_json(f.gram));
            run.payload["basis"] = std::move(basis);
            run.payload["dimension"] = fs.basis.size();
            run.payload["exists_nondegenerate"] = fs.exists_nondeg;
            return finish(run);
        }

        if (app.got_subcommand(c_pder)) {
            AlgebraFile af = load_algebra(src);
            std::vector<PseudoDer> basis = pder_space(af.algebra);
            json arr = json::array();
            for (const PseudoDer& p : basis)
                arr.push_back(pder_to_json(p));
            run.payload["basis"] = std::move(arr);
            run.payload["dimension"] = basis.size();
            return finish(run);
        }

        if (app.got_subcommand(c_rep)) {
            AlgebraFile af = load_algebra(src);
            Representation rep = representation_from_json(load_json_file(rep_file), af.algebra.dim);
            run.checks.emplace_back("representation", check_representation(af.algebra, rep));
            if (want_dual)
                run.checks.emplace_back("dual", check_representation(af.algebra, dual_rep(rep)));
            if (want_thm34) {
                Thm34Flags f = check_thm34_conditions(af.algebra, rep);
                run.payload["thm34"] = {{"cond34", f.cond34}, {"cond35", f.cond35}};
            }
            return finish(run);
        }

        if (app.got_subcommand(c_coadj)) {
            AlgebraFile af = load_algebra(src);
            Representation coadj = coadjoint_rep(af.algebra);
            run.checks.emplace_back("coadjoint", check_representation(af.algebra, coadj));
            run.payload["representation"] = representation_to_json(coadj);
            if (af.form) {
                SymForm b = require_form(af, src);
                run.payload["b_sharp_intertwines"] =
                    check_rep_iso(adjoint_rep(af.algebra), coadj, b_sharp(b));
            }
            return finish(run);
        }

        if (app.got_subcommand(c_extend)) {
            AlgebraFile af = load_algebra(src);
            SymForm b = require_form(af, src);
            Cocycle23 c = cocycle_file.empty() ? Cocycle23::zero(af.algebra.dim)
                                               : cocycle_from_json(load_json_file(cocycle_file));
            if (btilde_kind != "paper" && btilde_kind != "hyperbolic")
                throw std::invalid_argument("--btilde must be paper or hyperbolic");
            BtildeVariant variant =
                btilde_kind == "paper" ? BtildeVariant::Paper : BtildeVariant::Hyperbolic;
            TStarExtension ext = tstar_extend(af.algebra, b, c, variant);
            run.checks.emplace_back("extension-bol", ext.bol_report);
            BtildeInvariance inv = check_btilde_invariance(ext, c);
            run.payload["algebra"] = algebra_to_json(ext.algebra, ext.btilde.gram);
            run.payload["provenance"] = {{"source", src},
                                         {"base_dimension", ext.base_dim},
                                         {"btilde", btilde_kind},
                                         {"cocycle", cocycle_file.empty() ? "trivial" : cocycle_file}};
            run.payload["btilde_invariant"] = inv.invariant;
            run.payload["holds45"] = inv.holds45;
            run.payload["holds46"] = inv.holds46;
            return finish(run);
        }

        if (app.got_subcommand(c_chain)) {
            AlgebraFile af = load_algebra(src);
            SymForm b = require_form(af, src);
            std::vector<TStarExtension> chain = extension_chain(af.algebra, b, depth);
            json links = json::array();
            for (std::size_t k = 0; k < chain.size(); ++k) {
                run.checks.emplace_back("link-" + std::to_string(k + 1) + "-bol",
                                        chain[k].bol_report);
                QuadraticVerdict v = check_quadratic(chain[k].algebra, chain[k].btilde);
                CheckReport qr;
                qr.begin_identity("quadratic");
                if (!v.pass)
                    qr.record("quadratic", {}, {Rational(1)}, {Rational(0)});
                run.checks.emplace_back("link-" + std::to_string(k + 1) + "-quadratic",
                                        std::move(qr));
                links.push_back(algebra_to_json(chain[k].algebra, chain[k].btilde.gram));
            }
            run.payload["links"] = std::move(links);
            return finish(run);
        }

        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
