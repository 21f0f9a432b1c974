#include "metaplus/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "metaplus/hecke.hpp"
#include "metaplus/localfield.hpp"
#include "metaplus/plusq.hpp"
#include "metaplus/pseries.hpp"
#include "metaplus/sampling.hpp"
#include "metaplus/weilrep.hpp"

namespace metaplus {

namespace {

using Clock = std::chrono::steady_clock;

std::string num(cplx z) {
    std::ostringstream os;
    os << std::setprecision(12);
    if (std::abs(z.imag()) < 1e-15)
        os << z.real();
    else
        os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

class Recorder {
  public:
    Recorder(SuiteReport& report, const SuiteConfig& cfg) : report_(report), cfg_(cfg), start_(Clock::now()) {}

    void add(std::string name, std::string anchor, bool pass, std::string lhs, std::string rhs, double tol,
             std::string counterexample = {}) {
        CaseResult c;
        c.suite = report_.suite;
        c.name = std::move(name);
        c.anchor = std::move(anchor);
        c.status = pass ? "pass" : "fail";
        c.lhs = std::move(lhs);
        c.rhs = std::move(rhs);
        c.tol = tol;
        if (!pass) c.counterexample = counterexample.empty() ? "lhs = " + c.lhs + ", rhs = " + c.rhs : counterexample;
        c.ms = elapsed();
        report_.cases.push_back(std::move(c));
    }
    void numeric(const NumericCheck& n, std::string anchor, double tol) {
        add(n.name, std::move(anchor), n.pass, num(n.value), num(n.expected), tol);
    }
    void error(const std::string& name, const std::string& what) {
        CaseResult c;
        c.suite = report_.suite;
        c.name = name;
        c.anchor = "suite execution";
        c.status = "error";
        c.counterexample = what;
        c.ms = elapsed();
        report_.cases.push_back(std::move(c));
    }
    // Runs body, turning an escaping exception into an error case.
    void guarded(const std::string& name, const std::function<void()>& body) {
        try {
            body();
        } catch (const std::exception& e) {
            error(name, e.what());
        }
    }

  private:
    double elapsed() {
        if (!cfg_.timing) return 0;
        auto now = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(now - start_).count();
        start_ = now;
        return ms;
    }
    SuiteReport& report_;
    const SuiteConfig& cfg_;
    Clock::time_point start_;
};

std::uint64_t suite_seed(const SuiteConfig& cfg, const std::string& suite, int p) {
    std::uint64_t h = 1469598103934665603ull;
    for (char ch : suite) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
    return cfg.seed * 0x9e3779b97f4a7c15ull + h + static_cast<std::uint64_t>(p);
}

std::string p_tag(int p) { return " p=" + std::to_string(p); }

void suite_weil(const SuiteConfig& cfg, Recorder& rec) {
    for (int p : cfg.primes) {
        rec.guarded("weil" + p_tag(p), [&] {
            int prec = cfg.precision_for(p);
            int mismatches = 0, checked = 0;
            std::string first;
            for (int c : {0, 1}) {
                AdditiveCharacter psi(p, c, first_nonresidue(p), prec);
                for (const PadicNumber& a : square_class_representatives(p, -2, 2)) {
                    OracleResult o = weil_index_oracle(a, psi);
                    ++checked;
                    if (o.value != weil_index(a, psi) && mismatches++ == 0)
                        first = "c=" + std::to_string(c) + " a=" + a.to_string() + ": oracle " + o.value.to_string() +
                                ", closed form " + weil_index(a, psi).to_string();
                }
            }
            rec.add("closed form = integral oracle" + p_tag(p), "alpha_psi(a) on every square class",
                    mismatches == 0, std::to_string(mismatches) + " mismatches / " + std::to_string(checked), "0",
                    0, first);

            AdditiveCharacter psi(p, 0, first_nonresidue(p), prec);
            auto reps = square_class_representatives(p, -1, 2);
            PadicNumber one = psi.make(1);
            int conj_bad = 0, hilbert_bad = 0;
            std::string conj_first, hilbert_first;
            for (const PadicNumber& a : reps) {
                if (weil_index(-a, psi) != weil_index(a, psi).conj() && conj_bad++ == 0) conj_first = "a=" + a.to_string();
                for (const PadicNumber& b : reps) {
                    Mu8 lhs = weil_index(one, psi) * weil_index(a * b, psi) / (weil_index(a, psi) * weil_index(b, psi));
                    if (lhs != Mu8::sign(hilbert_symbol(a, b)) && hilbert_bad++ == 0)
                        hilbert_first = "a=" + a.to_string() + " b=" + b.to_string() + ": " + lhs.to_string();
                }
            }
            rec.add("alpha(-a) = conj alpha(a)" + p_tag(p), "alpha_psi(-a) = conj(alpha_psi(a))", conj_bad == 0,
                    std::to_string(conj_bad) + " failures", "0", 0, conj_first);
            rec.add("alpha(1)alpha(ab)/(alpha(a)alpha(b)) = (a,b)" + p_tag(p), "Weil index quotient is the Hilbert symbol",
                    hilbert_bad == 0, std::to_string(hilbert_bad) + " failures", "0", 0, hilbert_first);
            if (p != 2) {
                AdditiveCharacter psi1(p, 1, first_nonresidue(p), prec);
                ExactScalar sum(p);
                PadicNumber dp = psi1.delta() * psi1.pi_power(1);
                for (long long u = 1; u < p; ++u) sum += ExactScalar::from_mu8(p, weil_index(dp * psi1.make(u), psi1));
                rec.add("unit-class sum of alpha(delta pi u)" + p_tag(p), "odd q: sum over units vanishes", sum.is_zero(),
                        sum.to_string(), "0", 0);
            }
        });
    }
}

void suite_cocycle(const SuiteConfig& cfg, Recorder& rec) {
    for (int p : cfg.primes) {
        rec.guarded("cocycle" + p_tag(p), [&] {
            Sampler s(p, suite_seed(cfg, "cocycle", p));
            int prec = cfg.precision_for(p);
            int checked = 0, bad = 0, undetermined = 0;
            std::string first;
            for (int i = 0; i < cfg.samples; ++i) {
                RationalMat2 r1 = s.sl2(), r2 = s.sl2(), r3 = s.sl2();
                bool done = false;
                for (int pr : {prec, 2 * prec}) {
                    try {
                        Mp2Element g1 = r1.lift(p, pr), g2 = r2.lift(p, pr), g3 = r3.lift(p, pr);
                        int lhs = kubota_cocycle(g1.g, g2.g) * kubota_cocycle(g1.g * g2.g, g3.g);
                        int rhs = kubota_cocycle(g1.g, g2.g * g3.g) * kubota_cocycle(g2.g, g3.g);
                        if ((lhs != rhs || !((g1 * g2) * g3).equals(g1 * (g2 * g3))) && bad++ == 0)
                            first = "g1=" + g1.to_string() + " g2=" + g2.to_string() + " g3=" + g3.to_string();
                        ++checked;
                        done = true;
                        break;
                    } catch (const InsufficientPrecision&) {
                    }
                }
                if (!done) ++undetermined;
            }
            rec.add("cocycle identity on random triples" + p_tag(p),
                    "c(g1,g2)c(g1g2,g3) = c(g1,g2g3)c(g2,g3)", bad == 0 && undetermined == 0,
                    std::to_string(bad) + " failures, " + std::to_string(undetermined) + " undetermined / " +
                        std::to_string(cfg.samples),
                    "0 failures, 0 undetermined", 0, first);
        });
    }
}

void suite_epsilon(const SuiteConfig& cfg, Recorder& rec) {
    for (int p : cfg.primes) {
        rec.guarded("epsilon" + p_tag(p), [&] {
            AdditiveCharacter psi(p, 0, p == 2 ? 3 : first_nonresidue(p), cfg.precision_for(p));
            Sampler s(p, suite_seed(cfg, "epsilon", p));
            Level l = Level::gamma0_4(p);
            int bad = 0, genuine_bad = 0, undetermined = 0;
            std::string first;
            int prec = cfg.precision_for(p);
            for (int i = 0; i < cfg.samples; ++i) {
                RationalMat2 r1 = s.level_element(l, 0), r2 = s.level_element(l, 0);
                bool done = false;
                for (int pr : {prec, std::min(2 * prec, max_precision(p))}) {
                    try {
                        AdditiveCharacter psi_pr(p, 0, psi.eta(), pr);
                        Mp2Element g1 = r1.lift(p, pr), g2 = r2.lift(p, pr);
                        if (epsilon(g1 * g2, psi_pr) != epsilon(g1, psi_pr) * epsilon(g2, psi_pr) && bad++ == 0)
                            first = "g1=" + g1.to_string() + " g2=" + g2.to_string();
                        Mp2Element flipped = g1;
                        flipped.sign = -flipped.sign;
                        if (epsilon(flipped, psi_pr) != epsilon(g1, psi_pr) * Mu8::sign(-1)) ++genuine_bad;
                        done = true;
                        break;
                    } catch (const InsufficientPrecision&) {
                    }
                }
                if (!done) ++undetermined;
            }
            rec.add("epsilon(g1 g2) = epsilon(g1) epsilon(g2)" + p_tag(p), "epsilon is a character of Gamma0(4)~",
                    bad == 0 && undetermined == 0,
                    std::to_string(bad) + " failures, " + std::to_string(undetermined) + " undetermined / " +
                        std::to_string(cfg.samples),
                    "0 failures, 0 undetermined", 0, first);
            rec.add("epsilon(-g) = -epsilon(g)" + p_tag(p), "epsilon is genuine", genuine_bad == 0,
                    std::to_string(genuine_bad) + " failures", "0", 0);

            int eig_bad = 0;
            std::string eig_first;
            int n = std::max(1, cfg.samples / 4);
            for (int i = 0; i < n; ++i) {
                Mp2Element g = s.level_element(l, 0).lift(p);
                Mu8 expected = epsilon(g, psi).inverse();
                Mu8 got = Mu8{true, 0};
                try {
                    got = snap_mu8(proportionality(weil_action(g, phi0(p), psi), phi0(p), cfg.tol_numeric),
                                   cfg.tol_numeric);
                } catch (const DomainError&) {
                }
                if (got != expected && eig_bad++ == 0)
                    eig_first = "g=" + g.to_string() + ": got " + got.to_string() + ", expected " + expected.to_string();
            }
            rec.add("omega(g) phi0 = epsilon(g)^-1 phi0" + p_tag(p), "phi0 spans the epsilon^-1 isotypic line",
                    eig_bad == 0, std::to_string(eig_bad) + " failures / " + std::to_string(n), "0", 0, eig_first);
        });
    }
}

std::vector<Level> hecke_levels(int p) {
    if (p == 2) return {Level::gamma0_4(2)};
    return {Level::maximal(), Level::iwahori(), Level::iwahori_opposite()};
}

void suite_hecke(const SuiteConfig& cfg, Recorder& rec) {
    for (int p : cfg.primes) {
        for (const Level& lv : hecke_levels(p)) {
            rec.guarded("hecke" + p_tag(p) + " " + lv.name(), [&] {
                HeckeAlgebra alg(p, lv);
                for (const RelationResult& r : relation_suite(alg))
                    rec.add(r.name, "Hecke algebra relation (normalized operators)", r.pass, r.lhs, r.rhs, 0);
            });
        }
    }
}

void suite_pgl2(const SuiteConfig& cfg, Recorder& rec) {
    for (int p : cfg.primes) {
        for (auto type : {Pgl2HeckeAlgebra::Maximal, Pgl2HeckeAlgebra::Iwahori}) {
            rec.guarded("pgl2" + p_tag(p), [&] {
                Pgl2HeckeAlgebra alg(p, type);
                for (const RelationResult& r : pgl2_relation_suite(alg))
                    rec.add(r.name, "PGL2 Hecke algebra relation", r.pass, r.lhs, r.rhs, 0);
            });
        }
    }
}

void suite_pseries(const SuiteConfig& cfg, Recorder& rec) {
    std::vector<cplx> grid = cfg.grid();
    for (int p : cfg.primes) {
        rec.guarded("pseries" + p_tag(p), [&] {
            for (const NumericCheck& n : eigen_suite(p, grid, 0, 1, cfg.tol_numeric))
                rec.numeric(n, p == 2 ? "E^K projection of the principal series" : "eigenvalue formula on fixed vectors",
                            cfg.tol_numeric);
            if (p == 2) return;
            HeckeAlgebra alg(p, Level::iwahori());
            StandardOps ops = standard_ops(alg);
            for (int sign : {1, -1}) {
                PrincipalSeries ps(alg, sign * std::sqrt(static_cast<double>(p)));
                ExactMatrix t = exact_action_matrix(ops.T(1), ps, sign), u = exact_action_matrix(ops.U(1), ps, sign);
                std::vector<ExactScalar> st = exact_steinberg_table(ps);
                std::vector<ExactScalar> minus = {-st[0], -st[1]};
                std::string at = sign > 0 ? " q^s=+sqrt(q)" : " q^s=-sqrt(q)";
                auto show = [](const std::vector<ExactScalar>& v) { return "(" + v[0].to_string() + ", " + v[1].to_string() + ")"; };
                std::vector<ExactScalar> tu = exact_apply(exact_multiply(t, u), st);
                std::vector<ExactScalar> ut = exact_apply(exact_multiply(u, t), st);
                rec.add("exact T1 U1 f = -f" + p_tag(p) + at, "new-form criterion on the Steinberg vector", tu == minus,
                        show(tu), show(minus), 0);
                rec.add("exact U1 T1 f = -f" + p_tag(p) + at, "new-form criterion on the Steinberg vector", ut == minus,
                        show(ut), show(minus), 0);
            }
        });
    }
}

void suite_whittaker(const SuiteConfig& cfg, Recorder& rec) {
    std::vector<cplx> grid = cfg.grid();
    for (int p : cfg.primes) {
        if (p == 2) continue;
        for (int c : {0, 1}) {
            rec.guarded("whittaker" + p_tag(p), [&] {
                for (NumericCheck n : whittaker_suite(p, grid, c, 1, cfg.tol_numeric)) {
                    n.name += p_tag(p) + " c=" + std::to_string(c);
                    rec.numeric(n, "Whittaker functional closed form", cfg.tol_numeric);
                }
                HeckeAlgebra alg(p, Level::iwahori(), c);
                int worst = -1000;
                for (cplx s : grid) {
                    PrincipalSeries ps(alg, q_power(p, s));
                    for (long long xi : {1LL, first_nonresidue(p)}) {
                        worst = std::max(worst, whittaker(f2(ps), xi).depth);
                        worst = std::max(worst, whittaker(f1(ps) + f2(ps), xi).depth);
                    }
                }
                for (int sign : {1, -1}) {
                    PrincipalSeries ps(alg, sign * std::sqrt(static_cast<double>(p)));
                    for (long long xi : {1LL, first_nonresidue(p)})
                        worst = std::max(worst, whittaker(steinberg_fixed(ps), xi).depth);
                }
                rec.add("stabilization depth <= c+2" + p_tag(p) + " c=" + std::to_string(c),
                        "truncated Whittaker integrals stabilize", worst <= c + 2, std::to_string(worst),
                        "<= " + std::to_string(c + 2), 0);
            });
        }
    }
}

void suite_plus(const SuiteConfig& cfg, Recorder& rec) {
    int N = cfg.truncation;
    int k = cfg.k;
    rec.guarded("plus dimensions", [&] {
        GlobalConfig g = make_config(k, N);
        std::vector<QExpansion> plus = plus_subspace(halfint_basis(k, N), g);
        std::vector<QExpansion> cusp = cusp_plus_subspace(g);
        int expected = dim_level_one(2 * k);
        rec.add("dim plus space k=" + std::to_string(k), "dim M+_{k+1/2}(Gamma0(4)) = dim M_2k(SL2(Z))",
                static_cast<int>(plus.size()) == expected, std::to_string(plus.size()), std::to_string(expected), 0);
        rec.add("dim cusp plus space k=" + std::to_string(k), "dim S+_{k+1/2}(Gamma0(4)) = dim S_2k(SL2(Z))",
                static_cast<int>(cusp.size()) == std::max(0, expected - 1), std::to_string(cusp.size()),
                std::to_string(std::max(0, expected - 1)), 0);
        if (k == 6) {
            ShimuraReport r = shimura_eigen_check(g, 3);
            rec.add("T(9) eigenvalue on the cusp plus form", "Shimura lift: T(p^2) eigenvalue = tau(p)", r.pass,
                    r.eigenvalue.str(), r.tau.str(), 0, r.detail);
        }
    });
    rec.guarded("plus membership", [&] {
        bool th = plus_member(theta(N), make_config(0, N));
        rec.add("theta in plus space", "Kohnen plus condition", th, th ? "member" : "not a member", "member", 0);
        QExpansion t3 = theta(N).pow(3);
        bool t3m = plus_member(t3, make_config(1, N));
        rec.add("theta^3 not in plus space, c(2) = 12", "Kohnen plus condition", !t3m && t3[2] == 12,
                std::string(t3m ? "member" : "not a member") + ", c(2) = " + t3[2].str(), "not a member, c(2) = 12", 0);
    });
    rec.guarded("plus dimension chain", [&] {
        for (int kk : {2, 4, 6, 8}) {
            GlobalConfig g = make_config(kk, N);
            int d = static_cast<int>(plus_subspace(halfint_basis(kk, N), g).size());
            rec.add("dimension chain k=" + std::to_string(kk), "dim M+_{k+1/2}(Gamma0(4)) = dim M_2k(SL2(Z))",
                    d == dim_level_one(2 * kk), std::to_string(d), std::to_string(dim_level_one(2 * kk)), 0);
        }
    });
    rec.guarded("lambda components", [&] {
        GlobalConfig g = make_config(k, N);
        std::vector<QExpansion> basis = plus_subspace(halfint_basis(k, N), g);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool ok = lambda_identity_holds(basis[i], g);
            rec.add("sum_lambda f_lambda = f(z/4), plus basis element " + std::to_string(i), "lambda component identity", ok,
                    ok ? "equal" : "differs", "equal", 0);
        }
    });
}

void suite_shimura(const SuiteConfig& cfg, Recorder& rec) {
    GlobalConfig g = make_config(6, cfg.truncation);
    for (int p : {3, 5, 7}) {
        if (g.truncation < 20 * p * p) continue;
        rec.guarded("shimura" + p_tag(p), [&] {
            ShimuraReport r = shimura_eigen_check(g, p);
            rec.add("T(" + std::to_string(p * p) + ") eigenvalue = tau(" + std::to_string(p) + ")",
                    "Shimura lift: T(p^2) eigenvalue = tau(p)", r.pass, r.eigenvalue.str(), r.tau.str(), 0, r.detail);
        });
    }
}

using SuiteFn = void (*)(const SuiteConfig&, Recorder&);
const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = {
        {"weil", suite_weil},       {"cocycle", suite_cocycle},     {"epsilon", suite_epsilon},
        {"hecke", suite_hecke},     {"pgl2", suite_pgl2},           {"pseries", suite_pseries},
        {"whittaker", suite_whittaker}, {"plus", suite_plus},       {"shimura", suite_shimura},
    };
    return r;
}

}  // namespace

int SuiteConfig::precision_for(int p) const {
    auto it = precision.find(p);
    return it == precision.end() || it->second == 0 ? default_precision(p) : it->second;
}

std::vector<cplx> SuiteConfig::grid() const { return s_grid.empty() ? default_s_grid() : s_grid; }

void SuiteConfig::validate() const {
    if (primes.empty()) throw ConfigError("primes: empty prime set");
    for (int p : primes)
        if (p < 2 || p > 31 || !is_prime(p)) throw ConfigError("primes: " + std::to_string(p) + " is not a prime <= 31");
    for (const auto& [p, n] : precision) {
        if (p < 2 || !is_prime(p)) throw ConfigError("precision: " + std::to_string(p) + " is not a prime");
        if (n < 1 || n > max_precision(p))
            throw ConfigError("precision: " + std::to_string(n) + " outside [1, " + std::to_string(max_precision(p)) +
                              "] for p = " + std::to_string(p));
    }
    if (!(tol_numeric > 0) || !(tol_fine > 0)) throw ConfigError("tolerances: must be positive");
    if (truncation < 1) throw ConfigError("trunc: must be >= 1");
    if (k < 0 || k > 40) throw ConfigError("k: must lie in [0, 40]");
    if (samples < 1) throw ConfigError("samples: must be >= 1");
}

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.status != "pass"; }));
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [n, fn] : registry()) out.push_back(n);
        return out;
    }();
    return names;
}

std::vector<SuiteReport> run(const std::vector<std::string>& selectors, const SuiteConfig& cfg) {
    cfg.validate();
    for (const std::string& s : selectors)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw ConfigError("unknown suite '" + s + "'");
    std::vector<SuiteReport> out;
    for (const auto& [name, fn] : registry()) {
        if (!selectors.empty() && std::find(selectors.begin(), selectors.end(), name) == selectors.end()) continue;
        SuiteReport report;
        report.suite = name;
        Recorder rec(report, cfg);
        rec.guarded(name, [&] { fn(cfg, rec); });
        std::stable_sort(report.cases.begin(), report.cases.end(),
                         [](const CaseResult& a, const CaseResult& b) { return a.name < b.name; });
        out.push_back(std::move(report));
    }
    std::stable_sort(out.begin(), out.end(), [](const SuiteReport& a, const SuiteReport& b) { return a.suite < b.suite; });
    return out;
}

bool all_passed(const std::vector<SuiteReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.failures() == 0; });
}

std::string emit_json(const std::vector<SuiteReport>& reports) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SuiteReport& r : reports) {
        for (const CaseResult& c : r.cases) {
            nlohmann::ordered_json rec;
            rec["suite"] = c.suite;
            rec["case"] = c.name;
            rec["anchor"] = c.anchor;
            rec["status"] = c.status;
            rec["lhs"] = c.lhs;
            rec["rhs"] = c.rhs;
            if (c.tol == 0)
                rec["tol"] = "exact";
            else
                rec["tol"] = c.tol;
            rec["ms"] = c.ms;
            if (c.status != "pass") rec["counterexample"] = c.counterexample;
            arr.push_back(std::move(rec));
        }
    }
    return arr.dump(arr.empty() ? -1 : 2);
}

std::string emit_text(const std::vector<SuiteReport>& reports) {
    std::ostringstream os;
    auto clip = [](const std::string& s, std::size_t w) { return s.size() <= w ? s : s.substr(0, w - 3) + "..."; };
    os << std::left << std::setw(6) << "STATUS" << ' ' << std::setw(10) << "SUITE" << ' ' << std::setw(64) << "CASE"
       << ' ' << std::setw(24) << "LHS" << ' ' << std::setw(24) << "RHS" << ' ' << "TOL" << '\n';
    std::size_t total = 0, failed = 0;
    for (const SuiteReport& r : reports) {
        for (const CaseResult& c : r.cases) {
            ++total;
            std::ostringstream tol;
            if (c.tol == 0)
                tol << "exact";
            else
                tol << c.tol;
            os << std::left << std::setw(6) << c.status << ' ' << std::setw(10) << c.suite << ' ' << std::setw(64)
               << clip(c.name, 64) << ' ' << std::setw(24) << clip(c.lhs, 24) << ' ' << std::setw(24)
               << clip(c.rhs, 24) << ' ' << tol.str();
            if (c.ms > 0) os << "  " << std::fixed << std::setprecision(1) << c.ms << " ms" << std::defaultfloat;
            os << '\n';
            if (c.status != "pass") {
                ++failed;
                os << "       counterexample: " << c.counterexample << '\n';
            }
        }
    }
    os << total << " cases, " << failed << " failed\n";
    return os.str();
}

cplx parse_complex(const std::string& text) {
    std::string t;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
    if (t.empty()) throw ConfigError("s-grid: empty value");
    auto to_double = [&](const std::string& s) {
        if (s.empty() || s == "+") return 1.0;
        if (s == "-") return -1.0;
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception&) {
            throw ConfigError("s-grid: cannot parse '" + text + "'");
        }
        if (used != s.size()) throw ConfigError("s-grid: cannot parse '" + text + "'");
        return v;
    };
    if (t.back() != 'i') return {to_double(t), 0.0};
    std::string body = t.substr(0, t.size() - 1);
    // split at the last sign that is not part of an exponent
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;)
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    if (split == std::string::npos) return {0.0, to_double(body)};
    return {to_double(body.substr(0, split)), to_double(body.substr(split))};
}

SuiteConfig parse_config(const std::string& text, SuiteConfig base) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config: top level must be an object");
    SuiteConfig cfg = std::move(base);
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        const nlohmann::json& v = it.value();
        try {
            if (key == "primes") {
                cfg.primes = v.get<std::vector<int>>();
            } else if (key == "precision") {
                if (!v.is_object()) throw ConfigError("precision: expected an object {\"p\": digits}");
                for (auto pit = v.begin(); pit != v.end(); ++pit) {
                    int p = 0;
                    try {
                        p = std::stoi(pit.key());
                    } catch (const std::exception&) {
                        throw ConfigError("precision: key '" + pit.key() + "' is not a prime");
                    }
                    cfg.precision[p] = pit.value().get<int>();
                }
            } else if (key == "s_grid") {
                cfg.s_grid.clear();
                for (const auto& e : v) cfg.s_grid.push_back(e.is_number() ? cplx(e.get<double>(), 0) : parse_complex(e.get<std::string>()));
            } else if (key == "tolerances") {
                for (auto tit = v.begin(); tit != v.end(); ++tit) {
                    if (tit.key() == "numeric")
                        cfg.tol_numeric = tit.value().get<double>();
                    else if (tit.key() == "fine")
                        cfg.tol_fine = tit.value().get<double>();
                    else
                        throw ConfigError("tolerances: unknown key '" + tit.key() + "'");
                }
            } else if (key == "trunc") {
                cfg.truncation = v.get<int>();
            } else if (key == "k") {
                cfg.k = v.get<int>();
            } else if (key == "samples") {
                cfg.samples = v.get<int>();
            } else if (key == "seed") {
                cfg.seed = v.get<std::uint64_t>();
            } else {
                throw ConfigError("config: unknown key '" + key + "'");
            }
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("config: bad value for key '" + key + "': " + e.what());
        }
    }
    return cfg;
}

SuiteConfig load_config(const std::string& path, SuiteConfig base) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

}  // namespace metaplus
