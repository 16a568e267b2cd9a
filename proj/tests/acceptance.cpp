// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout (tolerance zero). Returns nonzero if any criterion fails.
// With --deep, the extension-tower criterion additionally builds the
// dimension-16 link under a 10-minute budget.

#include "bolkit/extensions.hpp"
#include "bolkit/json_io.hpp"
#include "bolkit/pder.hpp"
#include "bolkit/reps.hpp"
#include "helpers.hpp"

#include <chrono>
#include <cstring>
#include <limits>
#include <functional>
#include <iostream>
#include <sstream>

using namespace bolkit;

namespace {

bool g_deep = false;
std::vector<std::string> g_notes;

void note(const std::string& s) { g_notes.push_back(s); }

SymForm catalog_form(const std::string& name)
{
    CatalogEntry e = catalog(name);
    if (!e.form)
        throw std::logic_error("catalog entry " + name + " has no form");
    return SymForm{*e.form};
}

std::size_t count_of(const CheckReport& rep, const std::string& name)
{
    for (const auto& [id, count] : rep.identity_counts)
        if (id == name)
            return count;
    return static_cast<std::size_t>(-1);
}

std::vector<std::string> quadratic_names()
{
    return {"zero_2", "example_2_8", "sl2_bol", "m7_bol"};
}

// ---------------------------------------------------------------- criterion 1

bool criterion1_axioms()
{
    for (const std::string& name : catalog_names())
        if (!check_bol(catalog(name).algebra).pass() ||
            !check_lts(catalog(name).algebra).pass())
            return false;

    const std::pair<long, long> type_i[] = {{0, 0}, {1, 0}, {-1, 0}, {1, 1}, {1, -1}, {-1, -1}};
    for (auto [e1, e2] : type_i)
        if (!check_bol(canonical_2d(CanonicalType::I, Rational(e1), Rational(e2))).pass())
            return false;
    for (long beta : {-3L, -1L, 0L, 1L, 2L})
        for (long eps : {-1L, 0L, 1L})
            if (!check_bol(canonical_2d(CanonicalType::IIi, Rational(beta), Rational(eps)))
                     .pass())
                return false;
    if (!check_bol(canonical_2d(CanonicalType::IIii)).pass())
        return false;

    // each axiom must be violable, and reported first at the right name
    auto expect_first = [](const BolAlgebra& a, const std::string& id) {
        CheckReport rep = check_bol(a);
        return !rep.pass() && rep.first_failed_identity() == id;
    };

    BolAlgebra t01 = catalog("example_2_3").algebra;
    t01.binary.at(1, 0, 1) = -1;
    if (!expect_first(t01, "T01"))
        return false;

    BolAlgebra t02 = catalog("example_2_3").algebra;
    for (std::size_t z = 0; z < 2; ++z)
        for (std::size_t k = 0; k < 2; ++k)
            t02.ternary.at(1, 0, z, k) = t02.ternary.at(0, 1, z, k);
    if (!expect_first(t02, "T02"))
        return false;

    // dimension 4: in dimension 2 the antisymmetry T02 already forces the
    // cyclic sum to vanish, so a T1-only mutant needs more room
    BolAlgebra t1 = BolAlgebra::zero(4);
    t1.ternary.at(0, 1, 2, 3) = 1;
    t1.ternary.at(1, 0, 2, 3) = -1;
    if (!expect_first(t1, "T1"))
        return false;

    BolAlgebra t2 = BolAlgebra::zero(2);
    t2.ternary.at(0, 1, 0, 0) = 1;
    t2.ternary.at(1, 0, 0, 0) = -1;
    CheckReport t2rep = check_bol(t2);
    if (t2rep.pass() || t2rep.first_failed_identity() != "T2" || count_of(t2rep, "T3") != 0)
        return false;

    BolAlgebra t3 = catalog("sl2_bol").algebra;
    for (Rational& q : t3.ternary.data())
        q *= 2;
    CheckReport t3rep = check_bol(t3);
    if (t3rep.pass() || t3rep.first_failed_identity() != "T3" || count_of(t3rep, "T2") != 0)
        return false;
    return true;
}

// ---------------------------------------------------------------- criterion 2

bool criterion2_invariance_equivalence()
{
    std::mt19937_64 rng(220531);
    std::vector<BolAlgebra> samples;
    for (const std::string& name : {"zero_2", "example_2_8", "type_I_1_1", "type_I_1_m1",
                                    "sl2_bol", "m7_bol"})
        samples.push_back(catalog(name).algebra);
    for (int t = 0; t < 20; ++t) {
        Tensor3 lie = testutil::rnd_solvable_lie(rng, 2 + t % 3);
        if (!testutil::jacobi_holds(lie))
            return false;
        BolAlgebra a = BolAlgebra::zero(lie.dim0());
        a.ternary = testutil::lts_tensor_from_lie(lie);
        if (!check_lts(a).pass())
            return false;
        samples.push_back(std::move(a));
    }

    for (const BolAlgebra& a : samples) {
        auto [right, left] = lemma22_solution_spaces(a);
        std::vector<Vec> rv, lv;
        for (const SymForm& f : right)
            rv.push_back({f.gram.data().begin(), f.gram.data().end()});
        for (const SymForm& f : left)
            lv.push_back({f.gram.data().begin(), f.gram.data().end()});
        if (!subspace_equal(rv, lv))
            return false;
        for (int t = 0; t < 100; ++t) {
            SymForm f{testutil::rnd_symmetric(rng, a.dim)};
            if (check_right_invariant(a, f).pass() != check_left_invariant(a, f).pass())
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 3

bool criterion3_two_dim_classification()
{
    // no 2-dimensional type II table carries a nondegenerate invariant form
    for (long beta : {-3L, -1L, 0L, 1L, 2L})
        for (long eps : {-1L, 0L, 1L})
            if (invariant_form_space(canonical_2d(CanonicalType::IIi, Rational(beta),
                                                  Rational(eps)))
                    .exists_nondeg)
                return false;
    if (invariant_form_space(canonical_2d(CanonicalType::IIii)).exists_nondeg)
        return false;

    if (!invariant_form_space(catalog("example_2_8").algebra).exists_nondeg)
        return false;

    // type I tables: decision re-verified by brute force over the basis
    const std::pair<long, long> type_i[] = {{0, 0}, {1, 0}, {-1, 0}, {1, 1}, {1, -1}, {-1, -1}};
    bool some_admit = false;
    for (auto [e1, e2] : type_i) {
        BolAlgebra a = canonical_2d(CanonicalType::I, Rational(e1), Rational(e2));
        FormSpace fs = invariant_form_space(a);
        for (const SymForm& f : fs.basis)
            if (!f.is_symmetric() || !check_associative(a, f).pass() ||
                !check_right_invariant(a, f).pass())
                return false;
        bool oracle = false;
        std::vector<long> coef(fs.basis.size(), -3);
        while (!fs.basis.empty()) {
            Matrix sum(2, 2);
            for (std::size_t i = 0; i < fs.basis.size(); ++i)
                sum = sum + fs.basis[i].gram.scaled(Rational(coef[i]));
            if (!determinant(sum).is_zero()) {
                oracle = true;
                break;
            }
            std::size_t pos = 0;
            while (pos < coef.size() && coef[pos] == 3)
                coef[pos++] = -3;
            if (pos == coef.size())
                break;
            ++coef[pos];
        }
        if (oracle != fs.exists_nondeg)
            return false;
        some_admit = some_admit || fs.exists_nondeg;
    }
    return some_admit;
}

// ---------------------------------------------------------------- criterion 4

bool criterion4_phi_invariance()
{
    for (const std::string& name : quadratic_names()) {
        BolAlgebra a = catalog(name).algebra;
        SymForm b = catalog_form(name);
        std::vector<PseudoDer> space = pder_space(a);
        for (const PseudoDer& p : space) {
            Prop25Flags f = check_prop25(a, b, p);
            if (!f.phi_satisfies_24)
                return false;
            if (f.phi_satisfies_22 != f.rchi_all_skew)
                return false;
            // with a trivial companion vector both conditions always hold
            if (vec_is_zero(p.chi) && !(f.phi_satisfies_22 && f.rchi_all_skew))
                return false;
        }
        for (std::size_t i = 0; i < a.dim; ++i)
            for (std::size_t j = 0; j < a.dim; ++j) {
                Prop25Flags f = check_prop25(a, b, inner_pder(a, i, j));
                if (!f.phi_satisfies_24 || f.phi_satisfies_22 != f.rchi_all_skew)
                    return false;
            }

        ExactSequenceDims d = exact_sequence_dims(a, b);
        if (d.dim_kernel + d.dim_image != d.dim_pder || d.dim_pder != space.size())
            return false;
        if (d.kernel_basis.size() != d.dim_kernel)
            return false;
        for (const PseudoDer& p : d.kernel_basis) {
            if (!is_pseudoderivation(a, p).pass())
                return false;
            if (!phi(b, p).gram.is_zero() || !is_b_skew(b, p.pi))
                return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- criterion 5

bool criterion5_coadjoint()
{
    std::vector<std::pair<BolAlgebra, SymForm>> pairs;
    for (const std::string& name : quadratic_names())
        pairs.emplace_back(catalog(name).algebra, catalog_form(name));
    CatalogEntry e28 = catalog("example_2_8");
    TStarExtension ext = tstar_extend(e28.algebra, SymForm{*e28.form}, Cocycle23::zero(2));
    pairs.emplace_back(ext.algebra, ext.btilde);

    for (const auto& [a, b] : pairs) {
        Representation coadj = coadjoint_rep(a);
        if (!check_representation(a, coadj).pass())
            return false;
        if (!check_rep_iso(adjoint_rep(a), coadj, b_sharp(b)))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 6

bool criterion6_duality()
{
    // the dual always keeps (R1) and the third-order axioms
    for (const std::string& name : catalog_names()) {
        BolAlgebra a = catalog(name).algebra;
        CheckReport rep = check_representation(a, coadjoint_rep(a));
        for (const std::string& id : {"R1", "R31", "R32", "R33"})
            if (count_of(rep, id) != 0)
                return false;
    }

    // forward direction: both sufficient conditions => the dual passes
    std::mt19937_64 rng(3401);
    std::vector<BolAlgebra> zero_binary{catalog("example_2_8").algebra,
                                        catalog("type_I_1_1").algebra};
    for (int t = 0; t < 8; ++t)
        zero_binary.push_back(testutil::rnd_solvable_lts(rng, 2 + t % 3));
    for (const BolAlgebra& a : zero_binary) {
        Representation adj = adjoint_rep(a);
        Thm34Flags f = check_thm34_conditions(a, adj);
        if (!f.cond34 || !f.cond35)
            return false;
        if (!check_representation(a, dual_rep(adj)).pass())
            return false;
    }

    // the conditions are not necessary: record the observed counterexample
    BolAlgebra sl2 = catalog("sl2_bol").algebra;
    Thm34Flags f = check_thm34_conditions(sl2, adjoint_rep(sl2));
    bool coadj_ok = check_representation(sl2, coadjoint_rep(sl2)).pass();
    std::ostringstream os;
    os << "      note: sl2_bol regular action has cond(3.4)=" << (f.cond34 ? "true" : "false")
       << ", cond(3.5)=" << (f.cond35 ? "true" : "false")
       << ", yet its coadjoint check " << (coadj_ok ? "passes" : "fails")
       << " (conditions are sufficient, not necessary)";
    note(os.str());
    // internal consistency: the verdicts must be stable and coherent
    if (!coadj_ok || f.cond35)
        return false;
    Thm34Flags again = check_thm34_conditions(sl2, adjoint_rep(sl2));
    return again.cond34 == f.cond34 && again.cond35 == f.cond35;
}

// ---------------------------------------------------------------- criterion 7

bool criterion7_extension_tower()
{
    CatalogEntry e = catalog("example_2_8");
    for (BtildeVariant variant : {BtildeVariant::Paper, BtildeVariant::Hyperbolic}) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<TStarExtension> chain =
            extension_chain(e.algebra, SymForm{*e.form}, 2, variant);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (chain.size() != 2 || chain[0].algebra.dim != 4 || chain[1].algebra.dim != 8)
            return false;
        for (const TStarExtension& ext : chain) {
            if (!ext.bol_report.pass())
                return false;
            if (!check_quadratic(ext.algebra, ext.btilde).pass)
                return false;
            BtildeInvariance inv = check_btilde_invariance(ext, Cocycle23::zero(ext.base_dim));
            if (!inv.invariant || !inv.holds45 || !inv.holds46)
                return false;
        }
        if (secs > 60.0)
            return false;
    }

    if (g_deep) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<TStarExtension> chain = extension_chain(e.algebra, SymForm{*e.form}, 3);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (chain.back().algebra.dim != 16 || !chain.back().bol_report.pass())
            return false;
        if (!check_quadratic(chain.back().algebra, chain.back().btilde).pass)
            return false;
        std::ostringstream os;
        os << "      note: depth-3 tower (dim 16) verified in " << secs << "s";
        note(os.str());
        if (secs > 600.0)
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 8

bool criterion8_omega_symmetries()
{
    for (std::size_t n : {1u, 2u, 3u}) {
        auto [via46, via47] = prop42_spaces(n);
        if (!subspace_equal(via46, via47))
            return false;
    }
    return true;
}

// ---------------------------------------------------------------- criterion 9

bool criterion9_lts_crosscheck()
{
    // zero-binary bases: the doubled ternary must match the split null
    // extension by the coadjoint action, assembled from scratch
    for (const std::string& name : {"example_2_8", "type_I_1_1", "type_I_1_m1"}) {
        BolAlgebra a = catalog(name).algebra;
        if (!a.binary.is_zero())
            return false;
        FormSpace fs = invariant_form_space(a);
        if (!fs.exists_nondeg)
            return false;
        // locate a nondegenerate member
        SymForm b = fs.basis.front();
        std::vector<long> coef(fs.basis.size(), -3);
        while (!b.is_nondegenerate()) {
            Matrix sum(a.dim, a.dim);
            for (std::size_t i = 0; i < fs.basis.size(); ++i)
                sum = sum + fs.basis[i].gram.scaled(Rational(coef[i]));
            b = SymForm{sum};
            std::size_t pos = 0;
            while (pos < coef.size() && coef[pos] == 3)
                coef[pos++] = -3;
            if (pos == coef.size())
                break;
            ++coef[pos];
        }
        if (!check_quadratic(a, b).pass)
            return false;

        const std::size_t n = a.dim;
        TStarExtension ext = tstar_extend(a, b, Cocycle23::zero(n));
        Representation co = coadjoint_rep(a);
        Tensor4 want(2 * n, 2 * n, 2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l) {
                        want.at(i, j, k, l) = a.ternary.at(i, j, k, l);
                        want.at(n + k, i, j, n + l) = co.theta[i][j].at(l, k);
                        want.at(i, n + k, j, n + l) = -co.theta[i][j].at(l, k);
                        want.at(i, j, n + k, n + l) = co.d[i][j].at(l, k);
                    }
        if (!(ext.algebra.ternary == want) || !ext.algebra.binary.is_zero())
            return false;
        if (!check_lts(ext.algebra).pass())
            return false;
    }
    return true;
}

// --------------------------------------------------------------- criterion 10

bool criterion10_serialization()
{
    std::mt19937_64 rng(101010);
    std::uniform_int_distribution<long long> num(std::numeric_limits<long long>::min(),
                                                 std::numeric_limits<long long>::max());
    std::uniform_int_distribution<unsigned long long> den(
        1, std::numeric_limits<unsigned long long>::max());
    auto wild = [&]() {
        if (rng() % 4 == 0)
            return Rational(0);
        Rational q(num(rng));
        if (rng() % 2)
            q /= Rational(den(rng));
        return q;
    };

    for (int t = 0; t < 100; ++t) {
        std::size_t n = 1 + t % 4;
        BolAlgebra a = BolAlgebra::zero(n);
        for (Rational& q : a.binary.data())
            q = wild();
        for (Rational& q : a.ternary.data())
            q = wild();
        Matrix g(n, n);
        for (Rational& q : g.data())
            q = wild();
        std::string text = algebra_to_json(a, g).dump();
        AlgebraFile back = algebra_from_json(json::parse(text));
        if (!(back.algebra.binary == a.binary) || !(back.algebra.ternary == a.ternary) ||
            !back.form || !(*back.form == g))
            return false;
        // a second trip must give the identical byte stream
        if (algebra_to_json(back.algebra, back.form).dump() != text)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv)
{
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--deep") == 0)
            g_deep = true;

    struct Criterion {
        std::string label;
        std::function<bool()> run;
    };
    const Criterion criteria[] = {
        {"criterion 1: catalog and canonical tables satisfy the axioms; each axiom is "
         "violable and reported first",
         criterion1_axioms},
        {"criterion 2: right and left invariance cut the same form space on triple systems",
         criterion2_invariance_equivalence},
        {"criterion 3: two-dimensional tables admitting a nondegenerate invariant form",
         criterion3_two_dim_classification},
        {"criterion 4: phi invariance properties and rank-nullity on pseudoderivations",
         criterion4_phi_invariance},
        {"criterion 5: coadjoint is a representation isomorphic to the regular one via b",
         criterion5_coadjoint},
        {"criterion 6: duals keep the triple-system axioms; sufficient conditions verified",
         criterion6_duality},
        {"criterion 7: double-extension tower (dims 4, 8) within budget, both pairings",
         criterion7_extension_tower},
        {"criterion 8: the two omega symmetry constraints are equivalent (n = 1, 2, 3)",
         criterion8_omega_symmetries},
        {"criterion 9: doubled ternary equals the independently assembled coadjoint extension",
         criterion9_lts_crosscheck},
        {"criterion 10: serialization is bit-exact over 100 randomized rational tables",
         criterion10_serialization},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        g_notes.clear();
        bool ok = false;
        try {
            ok = c.run();
        } catch (const std::exception& e) {
            std::cout << "FAIL  " << c.label << " (exception: " << e.what() << ")\n";
            ++failures;
            continue;
        }
        std::cout << (ok ? "PASS  " : "FAIL  ") << c.label << "\n";
        for (const std::string& n : g_notes)
            std::cout << n << "\n";
        if (!ok)
            ++failures;
    }
    if (failures == 0)
        std::cout << "acceptance: all criteria passed" << (g_deep ? " (deep)" : "") << "\n";
    else
        std::cout << "acceptance: " << failures << " criterion(s) failed\n";
    return failures == 0 ? 0 : 1;
}
