#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <unistd.h>
#include <vector>

#include "pado/charts.hpp"
#include "pado/cnj.hpp"
#include "pado/diff_op.hpp"
#include "pado/factorials.hpp"
#include "pado/generation.hpp"
#include "pado/gl_action.hpp"
#include "pado/hopf.hpp"
#include "pado/ideal.hpp"
#include "pado/pbw.hpp"
#include "pado/section_lattice.hpp"
#include "pado/theorems.hpp"
#include "pado/torsion.hpp"

using namespace pado;

namespace {

struct Outcome {
    bool pass = true;
    std::string note;
};

std::string mono_str(const Mono& m) {
    std::string s = "(";
    for (int i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(m[i]);
    return s + ")";
}

/* same deterministic generator the unit tests freeze */
struct Lcg {
    std::uint64_t s;
    explicit Lcg(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() { return s = s * 6364136223846793005ULL + 1442695040888963407ULL; }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

Poly seeded_poly(Lcg& rng, long p, int maxdeg) {
    Poly f;
    for (int k = 0; k <= maxdeg; ++k) {
        long c = rng.range(-6, 6);
        long e = rng.range(0, 2);
        if (c != 0) f.add_coeff(k, Rat(c) * Rat(pow_int(Int(p), static_cast<unsigned long>(e))));
    }
    return f;
}

// 1. scaled duality pairing is the kronecker delta on the full stated grid
Outcome criterion_pairing_delta() {
    Outcome out;
    PairingTable table(6);
    const std::vector<Mono>& index = table.index();
    std::optional<std::tuple<unsigned, Mono, Mono, Rat, long, long>> best;
    unsigned long pairs = 0;
    for (long p : {2L, 3L, 5L})
        for (long n = 0; n <= 2; ++n) {
            LevelParams lp(p, 0, static_cast<int>(n));
            for (const Mono& nu : index)
                for (const Mono& mu : index) {
                    Rat v = table.scaled_entry(nu, mu, lp);
                    ++pairs;
                    Rat expect = nu == mu ? Rat(1) : Rat(0);
                    if (v == expect) continue;
                    out.pass = false;
                    unsigned w = mono_weight(nu) + mono_weight(mu);
                    if (!best || std::tuple(w, nu, mu) <
                                     std::tuple(std::get<0>(*best), std::get<1>(*best),
                                                std::get<2>(*best)))
                        best = {w, nu, mu, v, p, n};
                }
        }
    if (out.pass) {
        out.note = "all " + std::to_string(pairs) + " pairings are deltas";
    } else {
        auto [w, nu, mu, v, p, n] = *best;
        out.note = "minimal counterexample: pairing(E_" + mono_str(nu) + ", dual_" +
                   mono_str(mu) + ") = " + v.get_str() + " at p=" + std::to_string(p) +
                   " n=" + std::to_string(n) + "; the matrix is only unitriangular by weight" +
                   " (delta holds when |nu| <= |mu|)";
    }
    return out;
}

// 2. level basis products re-expand with p-integral coordinates
Outcome criterion_closure() {
    Outcome out;
    long pairs = 0;
    for (long p : {2L, 3L})
        for (int m = 0; m <= 2; ++m) {
            ClosureReport cr = check_subalgebra_closure(LevelParams(p, m, 0), 6);
            pairs += cr.pairs_checked;
            if (!cr.ok) {
                out.pass = false;
                out.note = "closure fails at p=" + std::to_string(p) + " m=" + std::to_string(m);
                if (cr.bad)
                    out.note += ": B_" + mono_str(cr.bad->left) + " * B_" +
                                mono_str(cr.bad->right) + " has vp=" +
                                std::to_string(cr.bad->valuation) + " at B_" +
                                mono_str(cr.bad->target);
                return out;
            }
        }
    out.note = std::to_string(pairs) + " products re-expanded";
    return out;
}

// 3. factorial-ratio and q-binomial valuations are nonnegative
Outcome criterion_valuations() {
    Outcome out;
    for (long p : {2L, 3L, 5L})
        for (int m = 0; m <= 3; ++m) {
            LevelParams lp(p, m, 0);
            for (unsigned long i = 0; i <= 200; ++i)
                for (unsigned long j = 0; i + j <= 200; ++j)
                    if (!p_integral(integrality_ratio(i, j, lp), p)) {
                        out.pass = false;
                        out.note = "ratio (i,j)=(" + std::to_string(i) + "," +
                                   std::to_string(j) + ") at p=" + std::to_string(p) +
                                   " m=" + std::to_string(m);
                        return out;
                    }
            for (unsigned long nu = 0; nu <= 300; ++nu)
                for (unsigned long k = 0; k <= nu; ++k)
                    if (vp(qbinomial_ratio(nu, k, lp), p) < 0) {
                        out.pass = false;
                        out.note = "q-binomial (nu,k)=(" + std::to_string(nu) + "," +
                                   std::to_string(k) + ") at p=" + std::to_string(p) +
                                   " m=" + std::to_string(m);
                        return out;
                    }
        }
    out.note = "i+j <= 200 and nu <= 300 for p in {2,3,5}, m <= 3";
    return out;
}

// 4. euler-operator binomials equal divided monomial operators
Outcome criterion_euler_binomial() {
    Outcome out;
    DiffOp xd = DiffOp::term(Chart::X, 1, Poly::variable());
    for (unsigned long nu = 0; nu <= 12; ++nu) {
        DiffOp lhs = binomial_of_operator(xd, nu);
        DiffOp rhs = DiffOp::term(Chart::X, static_cast<int>(nu),
                                  Poly::monomial(static_cast<int>(nu), Rat(1) / Rat(factorial(nu))));
        if (!(lhs == rhs)) {
            out.pass = false;
            out.note = "identity fails at nu=" + std::to_string(nu);
            return out;
        }
    }
    out.note = "exact operator identities for nu <= 12";
    return out;
}

// 5. recentering coefficients are p-integral in the admissible range
Outcome criterion_recentering_integral() {
    Outcome out;
    for (long p : {2L, 3L, 5L}) {
        long n_lo = p == 2 ? 2 : 1;
        for (long n = n_lo; n <= 3; ++n) {
            LevelParams lp(p, 0, static_cast<int>(n));
            for (unsigned long nu = 0; nu <= 50; ++nu)
                if (!cnj_integral(nu, lp)) {
                    out.pass = false;
                    out.note = "nu=" + std::to_string(nu) + " at p=" + std::to_string(p) +
                               " n=" + std::to_string(n);
                    return out;
                }
        }
    }
    out.note = "nu <= 50, n up to 3 (n >= 2 at p = 2)";
    return out;
}

// 6. taylor ideal criterion matches the lattice oracle on monomial inputs
Outcome criterion_ideal_oracle() {
    Outcome out;
    long inputs = 0;
    for (long p : {2L, 3L})
        for (unsigned n = 0; n <= 2; ++n)
            for (int d = 0; d <= 3; ++d) {
                IdealSpec spec{p, n, d};
                for (int j = 0; j <= 6; ++j)
                    for (long e = 0; e <= 4; ++e) {
                        Poly f = Poly::monomial(
                            j, Rat(pow_int(Int(p), static_cast<unsigned long>(e))));
                        ++inputs;
                        if (ideal_membership(f, spec) != ideal_membership_oracle(f, spec)) {
                            out.pass = false;
                            out.note = "x^" + std::to_string(j) + " * p^" + std::to_string(e) +
                                       " at p=" + std::to_string(p) + " n=" + std::to_string(n) +
                                       " d=" + std::to_string(d);
                            return out;
                        }
                    }
            }
    out.note = std::to_string(inputs) + " inputs agree on both routes";
    return out;
}

// 7. chart extension equals section-lattice membership, bases and seeded symbols
Outcome criterion_extension_vs_lattice() {
    Outcome out;
    for (long p : {2L, 3L})
        for (unsigned n = 0; n <= 2; ++n)
            for (int d = 0; d <= 5; ++d) {
                SectionLattice l = global_section_lattice(p, n, d);
                Rat full(pow_int(Int(p),
                                 static_cast<unsigned long>(n) * static_cast<unsigned long>(d)));
                for (int k = 0; k <= 2 * d; ++k)
                    for (const Rat& c : {Rat(1), full}) {
                        Poly f = Poly::monomial(k, c);
                        if (extension_test(GradedSymbol(d, f), p, n) !=
                            lattice_contains_symbol(l, f)) {
                            out.pass = false;
                            out.note = "base symbol x^" + std::to_string(k) + " (scale " +
                                       c.get_str() + ") at p=" + std::to_string(p) +
                                       " n=" + std::to_string(n) + " d=" + std::to_string(d);
                            return out;
                        }
                    }
            }
    Lcg rng(424242);
    struct Cell {
        long p;
        unsigned n;
        int d;
    };
    std::vector<Cell> cells;
    for (long p : {2L, 3L})
        for (unsigned n = 0; n <= 2; ++n)
            for (int d = 1; d <= 5; ++d) cells.push_back({p, n, d});
    for (int trial = 0; trial < 200; ++trial) {
        const Cell& c = cells[static_cast<std::size_t>(trial) % cells.size()];
        SectionLattice l = global_section_lattice(c.p, c.n, c.d);
        Poly f = seeded_poly(rng, c.p, 2 * c.d);
        if (extension_test(GradedSymbol(c.d, f), c.p, c.n) != lattice_contains_symbol(l, f)) {
            out.pass = false;
            out.note = "seeded trial " + std::to_string(trial) + " at p=" + std::to_string(c.p) +
                       " n=" + std::to_string(c.n) + " d=" + std::to_string(c.d);
            return out;
        }
    }
    out.note = "lattice bases and 200 seeded symbols agree on both routes";
    return out;
}

// 8. two-sided lattice bounds, degree-one exactness, and the three witnesses
Outcome criterion_sandwich() {
    Outcome out;
    for (long p : {2L, 3L})
        for (unsigned n = 0; n <= 3; ++n)
            for (int d = 1; d <= 8; ++d)
                for (int m = 0; m <= 1; ++m) {
                    SectionLattice l = global_section_lattice(p, n, d);
                    SandwichReport sr = sandwich_check(l);
                    (void)level_scale(d, LevelParams(p, m, 0));
                    if (!sr.lower_ok || !sr.upper_ok) {
                        out.pass = false;
                        out.note = "inclusion fails at p=" + std::to_string(p) +
                                   " n=" + std::to_string(n) + " d=" + std::to_string(d) +
                                   " (lower=" + (sr.lower_ok ? "true" : "false") +
                                   " upper=" + (sr.upper_ok ? "true" : "false") + ")";
                        return out;
                    }
                }
    for (long p : {2L, 3L})
        for (unsigned n = 0; n <= 3; ++n) {
            SectionLattice l = global_section_lattice(p, n, 1);
            Rat pn(pow_int(Int(p), n));
            bool contains = lattice_contains_symbol(l, Poly::monomial(0, pn)) &&
                            lattice_contains_symbol(l, Poly::monomial(1, pn)) &&
                            lattice_contains_symbol(l, Poly::monomial(2, pn));
            if (!contains || optimal_exponent(l) != static_cast<long>(n)) {
                out.pass = false;
                out.note = "degree-one lattice differs from p^n times the base at p=" +
                           std::to_string(p) + " n=" + std::to_string(n);
                return out;
            }
        }
    {
        SectionLattice l = global_section_lattice(3, 1, 3);
        Poly f = Poly::monomial(3, Rat(9)) + Poly::monomial(1, Rat(-9));
        if (!lattice_contains_symbol(l, f)) {
            out.pass = false;
            out.note = "9(x^3 - x) missing from the (n=1, d=3) lattice at p=3";
            return out;
        }
    }
    for (long p : {2L, 3L, 5L}) {
        SectionLattice l = global_section_lattice(p, 1, static_cast<int>(p));
        if (optimal_exponent(l) > p - 1) {
            out.pass = false;
            out.note = "degree-p exponent exceeds p-1 at p=" + std::to_string(p);
            return out;
        }
    }
    for (long p : {2L, 3L})
        for (unsigned long k = 1; k <= 3; ++k) {
            Poly base = Poly::monomial(static_cast<int>(p), Rat(1)) + Poly::monomial(1, Rat(-1));
            Poly f = base.pow(k) *
                     Rat(pow_int(Int(p), k * static_cast<unsigned long>(p - 1)));
            SectionLattice l =
                global_section_lattice(p, 1, static_cast<int>(k) * static_cast<int>(p));
            if (!lattice_contains_symbol(l, f)) {
                out.pass = false;
                out.note = "frobenius-power witness fails at p=" + std::to_string(p) +
                           " k=" + std::to_string(k);
                return out;
            }
        }
    out.note = "inclusions on the full grid, degree-one exactness, and all witnesses";
    return out;
}

// 9. graded generation certificates and the torsion exponent bound
Outcome criterion_generation_torsion() {
    Outcome out;
    long cases = 0;
    for (long p : {2L, 3L})
        for (int m = 0; m <= 1; ++m) {
            LevelParams lp(p, m, 0);
            long pm = lp.pm().get_si();
            for (int d = 0; d <= 4 * pm; ++d)
                for (int k = 0; k <= 2 * d; ++k) {
                    GenerationStep g = graded_generation(d, k, lp);
                    ++cases;
                    if (!g.certified()) {
                        out.pass = false;
                        out.note = "uncertified step (d,k)=(" + std::to_string(d) + "," +
                                   std::to_string(k) + ") at p=" + std::to_string(p) +
                                   " m=" + std::to_string(m);
                        return out;
                    }
                }
            TorsionReport tr = torsion_bound(lp, static_cast<int>(4 * pm));
            if (!tr.within_apriori || !tr.all_exact || !tr.covers_range) {
                out.pass = false;
                out.note = "torsion report fails at p=" + std::to_string(p) +
                           " m=" + std::to_string(m) + " (N=" + std::to_string(tr.bound) +
                           " apriori=" + std::to_string(tr.apriori) + ")";
                return out;
            }
        }
    out.note = std::to_string(cases) + " generation steps certified; N(m) within the bound";
    return out;
}

// 10. graded map injective and p^N-cosurjective through degree 6
Outcome criterion_graded_iso() {
    Outcome out;
    for (long p : {2L, 3L})
        for (int m = 0; m <= 1; ++m) {
            Theorem1Report t1 = theorem1_graded_check(LevelParams(p, m, 0), 6);
            if (!t1.ok) {
                out.pass = false;
                out.note = "graded check fails at p=" + std::to_string(p) +
                           " m=" + std::to_string(m);
                return out;
            }
        }
    out.note = "degrees <= 6 for p in {2,3}, m in {0,1}";
    return out;
}

// 11. model inclusions both ways plus the exponent-chain sweep
Outcome criterion_model_inclusions() {
    Outcome out;
    for (long p : {2L, 3L})
        for (int n = 0; n <= 3; ++n)
            for (int m = 0; m <= 1; ++m) {
                Theorem2Report t2 = theorem2_check(LevelParams(p, m, n), 6);
                if (!t2.ok) {
                    out.pass = false;
                    out.note = "inclusion check fails at p=" + std::to_string(p) +
                               " n=" + std::to_string(n) + " m=" + std::to_string(m);
                    if (t2.first_bad_generator)
                        out.note += " generator B_" + mono_str(*t2.first_bad_generator);
                    return out;
                }
            }
    for (long p : {2L, 3L, 5L})
        for (long n = 0; n <= 6; ++n) {
            long np = n_prime(p, static_cast<int>(n));
            for (long d = 1; d <= 12; ++d) {
                long c = (d * (p - 1) + p) / (p + 1);
                if (n * c < d * np) {
                    out.pass = false;
                    out.note = "chain fails at p=" + std::to_string(p) +
                               " n=" + std::to_string(n) + " d=" + std::to_string(d);
                    return out;
                }
            }
        }
    out.note = "generator tests, recentering expansions, chain sweep, lattice bounds";
    return out;
}

// 12. comultiplication laws as exact polynomial identities
Outcome criterion_hopf() {
    Outcome out;
    for (long p : {2L, 3L}) {
        HopfReport hr = check_hopf(p, 3);
        if (!hr.ok) {
            out.pass = false;
            out.note = "law fails at p=" + std::to_string(p) +
                       (hr.failure ? ": " + *hr.failure : "");
            return out;
        }
    }
    out.note = "coassociativity, counit, grouplike determinant, transition maps for n <= 3";
    return out;
}

std::string g_verify_path;

// 13. verify all --quick is deterministic and exits cleanly
Outcome criterion_determinism() {
    Outcome out;
    if (g_verify_path.empty()) {
        out.pass = false;
        out.note = "path to the verify binary was not supplied";
        return out;
    }
    std::string base = "/tmp/acceptance-quick-" + std::to_string(getpid());
    std::string f1 = base + "-a.json", f2 = base + "-b.json";
    auto run = [&](const std::string& file) {
        std::string cmd = "'" + g_verify_path + "' all --quick > '" + file + "' 2>/dev/null";
        int st = std::system(cmd.c_str());
        return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    };
    int c1 = run(f1);
    int c2 = run(f2);
    auto slurp = [](const std::string& file) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    std::string a = slurp(f1), b = slurp(f2);
    std::remove(f1.c_str());
    std::remove(f2.c_str());
    if (c1 != 0 || c2 != 0) {
        out.pass = false;
        out.note = "exit codes " + std::to_string(c1) + ", " + std::to_string(c2);
        return out;
    }
    if (a.empty() || a != b) {
        out.pass = false;
        out.note = "reports differ between runs";
        return out;
    }
    out.note = "two runs byte-identical, both exit 0";
    return out;
}

struct Criterion {
    const char* label;
    std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {"scaled duality pairing is the kronecker delta", criterion_pairing_delta},
    {"level basis products close p-integrally through weight 6", criterion_closure},
    {"factorial and q-binomial ratio valuations are nonnegative", criterion_valuations},
    {"euler-operator binomials equal divided monomial operators", criterion_euler_binomial},
    {"recentering coefficients are p-integral", criterion_recentering_integral},
    {"taylor ideal criterion matches the lattice oracle", criterion_ideal_oracle},
    {"chart extension equals section-lattice membership", criterion_extension_vs_lattice},
    {"two-sided lattice bounds and witnesses hold", criterion_sandwich},
    {"graded generation is certified and torsion is bounded", criterion_generation_torsion},
    {"graded map is injective and p^N-cosurjective", criterion_graded_iso},
    {"model inclusions hold in both directions", criterion_model_inclusions},
    {"comultiplication laws hold exactly", criterion_hopf},
    {"verify all --quick is deterministic", criterion_determinism},
};

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    if (argc > 1 && std::string(argv[1]) != "all") {
        only = std::atoi(argv[1]);
        if (only < 1 || only > static_cast<int>(kCriteria.size())) {
            std::fprintf(stderr, "usage: %s [1..%zu|all] [path-to-verify]\n", argv[0],
                         kCriteria.size());
            return 2;
        }
    }
    if (argc > 2) {
        g_verify_path = argv[2];
    } else {
        std::filesystem::path self(argv[0]);
        std::filesystem::path sibling = self.parent_path() / "verify";
        if (std::filesystem::exists(sibling)) g_verify_path = sibling.string();
    }

    int failures = 0;
    for (std::size_t i = 0; i < kCriteria.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only) continue;
        Outcome out = kCriteria[i].run();
        if (!out.pass) ++failures;
        std::printf("criterion %2zu: %s  %s%s%s\n", i + 1, out.pass ? "PASS" : "FAIL",
                    kCriteria[i].label, out.note.empty() ? "" : " -- ", out.note.c_str());
        std::fflush(stdout);
    }
    if (!only)
        std::printf("acceptance: %d of %zu criteria failed\n", failures, kCriteria.size());
    return failures == 0 ? 0 : 1;
}
