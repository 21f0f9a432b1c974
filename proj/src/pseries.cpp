#include "metaplus/pseries.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace metaplus {

namespace {

cplx cpow_int(cplx z, int n) {
    cplx r = 1.0;
    cplx b = n >= 0 ? z : 1.0 / z;
    for (int i = 0; i < std::abs(n); ++i) r *= b;
    return r;
}

std::string fmt(cplx z) {
    std::ostringstream os;
    os.precision(4);
    if (z.imag() == 0)
        os << z.real();
    else
        os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

NumericCheck check(std::string name, cplx value, cplx expected, double tol) {
    bool ok = std::abs(value - expected) <= tol * std::max(1.0, std::abs(expected));
    return {std::move(name), ok, value, expected};
}

NumericCheck check_vec(std::string name, const PrincipalSeriesVector& f, const PrincipalSeriesVector& g, double tol) {
    double err = (f.table() - g.table()).cwiseAbs().maxCoeff();
    double scale = std::max(1.0, g.table().cwiseAbs().maxCoeff());
    return {std::move(name), err <= tol * scale, err, 0.0};
}

}  // namespace

cplx q_power(int q, cplx s) { return std::exp(s * std::log(static_cast<double>(q))); }

PrincipalSeries::PrincipalSeries(const HeckeAlgebra& alg, cplx qs) : alg_(&alg), qs_(qs) {
    const AdditiveCharacter& psi = alg.psi();
    cells_.push_back(mp2_identity(psi.prime(), psi.precision()));
    names_.push_back("I");
    if (!alg.is_maximal()) {
        cells_.push_back(weyl(psi.delta()));
        names_.push_back("w_delta");
    }
    if (psi.prime() == 2) {
        cells_.push_back(u_flat(psi.make(2) * psi.delta()));
        names_.push_back("u_flat(2 delta)");
    }
    // Probe B ∩ h Gamma h^-1 with unipotent and torus elements.
    std::vector<Mp2Element> probes;
    for (long long y : {1, 2, 3}) probes.push_back(u_sharp(psi.make(y) / psi.delta()));
    for (long long a : {-1, 2, 3, 5}) probes.push_back(torus(psi.make(a)));
    for (const Mp2Element& h : cells_) {
        bool ok = true;
        for (const Mp2Element& b : probes) {
            Mp2Element g = h.inverse() * b * h;
            if (!alg.in_gamma(g.g)) continue;
            cplx lhs = character(b.g.a) * double(b.sign);
            cplx rhs = epsilon(g, psi).inverse().to_complex();
            if (std::abs(lhs - rhs) > 1e-9) ok = false;
        }
        supported_.push_back(ok);
    }
}

std::size_t PrincipalSeries::fixed_dimension() const {
    return static_cast<std::size_t>(std::count(supported_.begin(), supported_.end(), true));
}

cplx PrincipalSeries::character(const PadicNumber& a) const {
    const AdditiveCharacter& psi = alg_->psi();
    int v = a.valuation();
    cplx phase = (weil_index(psi.make(1), psi) / weil_index(a, psi)).to_complex();
    return phase * cpow_int(qs_, -v) * std::pow(static_cast<double>(q()), -v);
}

PrincipalSeries::Decomposition PrincipalSeries::decompose(const Mp2Element& g) const {
    const AdditiveCharacter& psi = alg_->psi();
    Iwasawa iw = iwasawa_decompose(g, psi);
    const Mat2& k = iw.k.g;
    Mp2Element bpart = u_sharp(iw.b0) * torus(iw.a0);
    std::size_t cell = 0;
    const Level& lv = alg_->level();
    PadicNumber cn = k.c / psi.delta();
    int vc = cn.is_zero() ? 1 << 20 : cn.valuation();
    auto ldu = [&] { bpart = bpart * u_sharp(k.b / k.d) * torus(k.d.inverse()); };
    auto bruhat = [&] {
        bpart = bpart * u_sharp(k.a / k.c) * torus(cn.inverse());
        cell = 1;
    };
    if (lv == Level::iwahori()) {
        if (vc == 0) bruhat();
    } else if (lv == Level::iwahori_opposite()) {
        if (k.d.is_unit())
            ldu();
        else
            bruhat();
    } else if (psi.prime() == 2) {
        if (vc == 0) {
            bruhat();
        } else if (vc == 1) {
            ldu();
            cell = 2;
        }
    }
    bpart.sign = 1;
    Mp2Element gamma = (bpart * cells_[cell]).inverse() * g;
    if (!alg_->in_gamma(gamma.g)) throw InsufficientPrecision("PrincipalSeries::decompose: residual left Gamma");
    return {cell, bpart.g.a, gamma};
}

PrincipalSeriesVector::PrincipalSeriesVector(const PrincipalSeries& ps, Eigen::VectorXcd table)
    : ps_(&ps), table_(std::move(table)) {
    if (static_cast<std::size_t>(table_.size()) != ps.dimension())
        throw DomainError("PrincipalSeriesVector: table size does not match the number of cells");
    for (std::size_t i = 0; i < ps.dimension(); ++i)
        if (!ps.supports(i) && std::abs(table_[static_cast<Eigen::Index>(i)]) > 1e-9)
            throw DomainError("PrincipalSeriesVector: nonzero value on the unsupported cell " + ps.cell_names()[i]);
}

PrincipalSeriesVector PrincipalSeriesVector::cell(const PrincipalSeries& ps, std::size_t i, cplx value) {
    Eigen::VectorXcd t = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ps.dimension()));
    t[static_cast<Eigen::Index>(i)] = value;
    return {ps, t};
}

cplx PrincipalSeriesVector::operator()(const Mp2Element& g) const {
    PrincipalSeries::Decomposition d = ps_->decompose(g);
    cplx t = table_[static_cast<Eigen::Index>(d.cell)];
    if (t == 0.0) return 0.0;
    return ps_->character(d.A) * t * epsilon(d.gamma, ps_->psi()).inverse().to_complex();
}

PrincipalSeriesVector PrincipalSeriesVector::operator+(const PrincipalSeriesVector& o) const {
    return {*ps_, table_ + o.table_};
}
PrincipalSeriesVector PrincipalSeriesVector::operator-(const PrincipalSeriesVector& o) const {
    return {*ps_, table_ - o.table_};
}
PrincipalSeriesVector PrincipalSeriesVector::operator*(cplx z) const { return {*ps_, table_ * z}; }

bool approx_equal(const PrincipalSeriesVector& f, const PrincipalSeriesVector& g, double tol) {
    return (f.table() - g.table()).cwiseAbs().maxCoeff() <= tol;
}

PrincipalSeriesVector act(const HeckeElement& X, const PrincipalSeriesVector& f) {
    const PrincipalSeries& ps = f.space();
    const HeckeAlgebra& alg = X.algebra();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ps.dimension()));
    for (const auto& [label, coef] : X.coefficients()) {
        for (const Mp2Element& gj : alg.coset_reps(label)) {
            cplx x = X.evaluate(gj).to_complex();
            if (x == 0.0) continue;
            for (std::size_t i = 0; i < ps.dimension(); ++i) out[static_cast<Eigen::Index>(i)] += x * f(ps.cells()[i] * gj);
        }
    }
    return {ps, out};
}

Eigen::MatrixXcd action_matrix(const HeckeElement& X, const PrincipalSeries& ps) {
    auto n = static_cast<Eigen::Index>(ps.dimension());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        if (ps.supports(static_cast<std::size_t>(j)))
            m.col(j) = act(X, PrincipalSeriesVector::cell(ps, static_cast<std::size_t>(j))).table();
    return m;
}

PrincipalSeriesVector act_kernel(const IdempotentKernels& ker, Kernel which, const PrincipalSeriesVector& f) {
    const PrincipalSeries& ps = f.space();
    const std::vector<Mp2Element>& cosets = which == Kernel::eK ? ker.k_cosets() : ker.E_cosets();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(ps.dimension()));
    for (const Mp2Element& k : cosets) {
        cplx x = which == Kernel::eK ? ker.eK(k) : ker.EK(k);
        if (std::abs(x) < 1e-14) continue;
        for (std::size_t i = 0; i < ps.dimension(); ++i) out[static_cast<Eigen::Index>(i)] += x * f(ps.cells()[i] * k);
    }
    return {ps, out};
}

Eigen::MatrixXcd kernel_matrix(const IdempotentKernels& ker, Kernel which, const PrincipalSeries& ps) {
    auto n = static_cast<Eigen::Index>(ps.dimension());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (Eigen::Index j = 0; j < n; ++j)
        if (ps.supports(static_cast<std::size_t>(j)))
            m.col(j) = act_kernel(ker, which, PrincipalSeriesVector::cell(ps, static_cast<std::size_t>(j))).table();
    return m;
}

int numerical_rank(const Eigen::MatrixXcd& m, double tol) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    int r = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) r += svd.singularValues()[i] > tol;
    return r;
}

PrincipalSeriesVector f0(const PrincipalSeries& ps) {
    if (!ps.algebra().is_maximal()) throw DomainError("f0: requires the maximal level");
    return PrincipalSeriesVector::cell(ps, 0);
}

PrincipalSeriesVector f1(const PrincipalSeries& ps) {
    if (ps.dimension() != 2) throw DomainError("f1: requires an Iwahori level");
    return PrincipalSeriesVector::cell(ps, ps.algebra().level() == Level::iwahori() ? 0 : 1);
}

PrincipalSeriesVector f2(const PrincipalSeries& ps) {
    if (ps.dimension() != 2) throw DomainError("f2: requires an Iwahori level");
    return PrincipalSeriesVector::cell(ps, ps.algebra().level() == Level::iwahori() ? 1 : 0);
}

PrincipalSeriesVector f_plus(const PrincipalSeries& ps, const IdempotentKernels& ker) {
    if (ps.q() != 2) throw DomainError("f_plus: requires p = 2");
    const AdditiveCharacter& psi = ps.psi();
    double scale = ker.volume() / 2.0;
    Mp2Element w = ker.w2delta();
    Eigen::VectorXcd t(static_cast<Eigen::Index>(ps.dimension()));
    for (std::size_t i = 0; i < ps.dimension(); ++i) {
        Iwasawa iw = iwasawa_decompose(ps.cells()[i] * w, psi);
        t[static_cast<Eigen::Index>(i)] = ps.character(iw.a0) * scale * std::conj(ker.eK(iw.k));
    }
    return {ps, t};
}

PrincipalSeriesVector f_plus_cell(const PrincipalSeries& ps, const IdempotentKernels& ker, std::size_t cell) {
    PrincipalSeriesVector f = f_plus(ps, ker);
    return PrincipalSeriesVector::cell(ps, cell, f.table()[static_cast<Eigen::Index>(cell)]);
}

ExactMatrix exact_action_matrix(const HeckeElement& X, const PrincipalSeries& ps, int sign) {
    int q = ps.q();
    if (std::abs(ps.qs() - sign * std::sqrt(static_cast<double>(q))) > 1e-9)
        throw DomainError("exact_action_matrix: q^s must equal sign * sqrt(q)");
    const HeckeAlgebra& alg = X.algebra();
    const AdditiveCharacter& psi = ps.psi();
    std::size_t n = ps.dimension();
    ExactMatrix m(n, std::vector<ExactScalar>(n, ExactScalar::zero(q)));
    Mu8 alpha1 = weil_index(psi.make(1), psi);
    for (const auto& [label, coef] : X.coefficients()) {
        for (const Mp2Element& gj : alg.coset_reps(label)) {
            ExactScalar x = X.evaluate(gj);
            if (x.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i) {
                PrincipalSeries::Decomposition d = ps.decompose(ps.cells()[i] * gj);
                if (!ps.supports(d.cell)) continue;
                // |A|^(s+1) = sign^v q^(-3v/2)
                int v = d.A.valuation();
                Mu8 phase = alpha1 / weil_index(d.A, psi) * epsilon(d.gamma, psi).inverse();
                ExactScalar chi = ExactScalar::monomial(q, Rational(v % 2 != 0 ? sign : 1), 0, -3 * v) * phase;
                m[i][d.cell] += x * chi;
            }
        }
    }
    return m;
}

ExactMatrix exact_multiply(const ExactMatrix& a, const ExactMatrix& b) {
    int q = a.empty() ? 0 : a[0][0].q();
    ExactMatrix out(a.size(), std::vector<ExactScalar>(b.empty() ? 0 : b[0].size(), ExactScalar::zero(q)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < out[i].size(); ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

std::vector<ExactScalar> exact_steinberg_table(const PrincipalSeries& ps) {
    if (!(ps.algebra().level() == Level::iwahori())) throw DomainError("exact_steinberg_table: requires Gamma0(pi)");
    int q = ps.q();
    return {ExactScalar::one(q), ExactScalar(q, Rational(-1, q))};
}

std::vector<ExactScalar> exact_apply(const ExactMatrix& m, const std::vector<ExactScalar>& v) {
    std::vector<ExactScalar> out(m.size(), ExactScalar::zero(v.empty() ? 0 : v[0].q()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
    return out;
}

SteinbergTag steinberg_tag(int q, int sign, long long eta) {
    if (q % 2 == 0) throw DomainError("steinberg_tag: q must be odd");
    if (sign != 1 && sign != -1) throw DomainError("steinberg_tag: sign must be +1 or -1");
    return {sign, sign * legendre(eta, q) == -1};
}

PrincipalSeriesVector steinberg_fixed(const PrincipalSeries& ps) {
    if (!(ps.algebra().level() == Level::iwahori())) throw DomainError("steinberg_fixed: requires Gamma0(pi)");
    double q = ps.q();
    if (std::abs(ps.qs() * ps.qs() - q) > 1e-9 * q) throw DomainError("steinberg_fixed: requires q^(2s) = q");
    return f1(ps) - f2(ps) * cplx(1.0 / q);
}

cplx whittaker_truncated(const PrincipalSeriesVector& f, long long xi, int depth) {
    const PrincipalSeries& ps = f.space();
    const AdditiveCharacter& psi = ps.psi();
    int p = ps.q();
    int beta = ps.algebra().level().beta;
    int c = psi.index();
    int n = depth + beta - c;
    if (n < 0) throw DomainError("whittaker_truncated: depth below the invariance lattice");
    // psi1(xi x) = psi(xi eta^-1 x)
    PadicNumber k = psi.make(xi) / psi.make(psi.eta());
    PadicNumber step = psi.pi_power(-depth);
    Mp2Element w = weyl(psi.delta());
    long long count = 1;
    for (int i = 0; i < n; ++i) count *= p;
    cplx acc = 0.0;
    for (long long t = 0; t < count; ++t) {
        PadicNumber x = psi.make(t) * step;
        acc += f(w * u_sharp(x)) * std::conj(psi.value(k * x).to_complex());
    }
    return acc * std::pow(static_cast<double>(p), c - beta);
}

WhittakerValue whittaker(const PrincipalSeriesVector& f, long long xi, int max_extra) {
    const PrincipalSeries& ps = f.space();
    int start = ps.psi().index() - ps.algebra().level().beta;
    cplx prev = whittaker_truncated(f, xi, start);
    for (int d = start + 1; d <= start + max_extra; ++d) {
        cplx cur = whittaker_truncated(f, xi, d);
        if (std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur))) return {cur, d - 1};
        prev = cur;
    }
    throw DomainError("whittaker: truncations did not stabilize");
}

cplx pairing(const PrincipalSeriesVector& f, const PrincipalSeriesVector& g) {
    const PrincipalSeries& ps = f.space();
    const AdditiveCharacter& psi = ps.psi();
    const HeckeAlgebra& alg = ps.algebra();
    int p = ps.q();
    PadicNumber delta = psi.delta();
    std::vector<Mp2Element> reps;
    int r = p / 2 + 1;
    for (int a = -r; a <= r; ++a)
        for (int b = -r; b <= r; ++b)
            for (int c = -r; c <= r; ++c)
                for (int d = -r; d <= r; ++d) {
                    if (a * d - b * c != 1) continue;
                    Mp2Element k{Mat2{psi.make(a), psi.make(b) / delta, psi.make(c) * delta, psi.make(d)}, 1};
                    bool fresh = true;
                    for (const Mp2Element& x : reps)
                        if (alg.in_gamma((x.inverse() * k).g)) {
                            fresh = false;
                            break;
                        }
                    if (fresh) reps.push_back(k);
                }
    cplx acc = 0.0;
    for (const Mp2Element& k : reps) acc += f(k) * std::conj(g(k));
    return acc / static_cast<double>(reps.size());
}

bool parameter_flip_holds(const AdditiveCharacter& psi, long long xi, const PadicNumber& a) {
    PadicNumber x = psi.make(xi);
    if (!x.is_unit() || is_square(x)) throw DomainError("parameter_flip_holds: xi must be a non-square unit");
    Mu8 lhs = weil_index(psi.make(1), psi) * weil_index(x * a, psi) / (weil_index(a, psi) * weil_index(x, psi));
    return lhs == Mu8::sign(a.valuation() % 2 == 0 ? 1 : -1);
}

std::vector<cplx> default_s_grid() { return {0.0, 0.3, -0.3, 0.5, -0.5, cplx(0.25, 0.6)}; }

std::vector<NumericCheck> eigen_suite(int p, const std::vector<cplx>& s_grid, int c_psi, long long eta, double tol) {
    std::vector<NumericCheck> out;
    double q = p;
    double rq = std::sqrt(q);
    if (p != 2) {
        HeckeAlgebra g1(p, Level::maximal(), c_psi, eta);
        StandardOps o1 = standard_ops(g1);
        for (cplx s : s_grid) {
            cplx z = q_power(p, s);
            PrincipalSeries ps(g1, z);
            PrincipalSeriesVector f = act(o1.T(1), f0(ps));
            out.push_back(check("Gamma1 T1 f0 s=" + fmt(s), f.table()[0], rq * (z + 1.0 / z), tol));
        }
        for (Level lv : {Level::iwahori(), Level::iwahori_opposite()}) {
            HeckeAlgebra g2(p, lv, c_psi, eta);
            StandardOps o2 = standard_ops(g2);
            std::string tag = lv.name() + " ";
            for (cplx s : s_grid) {
                cplx z = q_power(p, s);
                PrincipalSeries ps(g2, z);
                std::string at = " s=" + fmt(s);
                out.push_back(check_vec(tag + "U0 f1 = f2" + at, act(o2.U(0), f1(ps)), f2(ps), tol));
                out.push_back(check_vec(tag + "U0 f2 = q f1 + (q-1) f2" + at, act(o2.U(0), f2(ps)),
                                        f1(ps) * cplx(q) + f2(ps) * cplx(q - 1), tol));
                out.push_back(check_vec(tag + "U1 f1 = q^(-1/2-s) f2" + at, act(o2.U(1), f1(ps)),
                                        f2(ps) * (1.0 / (rq * z)), tol));
                out.push_back(check_vec(tag + "U1 f2 = q^(1/2+s) f1" + at, act(o2.U(1), f2(ps)), f1(ps) * (rq * z),
                                        tol));
                // new-form criterion: T1 U1 f = -f = U1 T1 f has no solution off the Steinberg points
                if (std::abs(z * z - q) < 1e-6 || std::abs(z * z - 1.0 / q) < 1e-6) continue;
                Eigen::MatrixXcd t = action_matrix(o2.T(1), ps), u = action_matrix(o2.U(1), ps);
                Eigen::MatrixXcd stack(4, 2);
                stack << t * u + Eigen::MatrixXcd::Identity(2, 2), u * t + Eigen::MatrixXcd::Identity(2, 2);
                out.push_back(check(tag + "new-form nullity" + at, 2 - numerical_rank(stack), 0.0, tol));
            }
        }
        HeckeAlgebra g2(p, Level::iwahori(), c_psi, eta);
        StandardOps o2 = standard_ops(g2);
        for (int sign : {1, -1}) {
            PrincipalSeries ps(g2, sign * rq);
            PrincipalSeriesVector st = steinberg_fixed(ps);
            std::string at = sign > 0 ? " q^s=+sqrt(q)" : " q^s=-sqrt(q)";
            cplx lam = ps.qs() / rq;
            out.push_back(check_vec("Steinberg T1 eigenvalue q^(s-1/2)" + at, act(o2.T(1), st), st * lam, tol));
            out.push_back(check_vec("Steinberg U1 eigenvalue -q^(s-1/2)" + at, act(o2.U(1), st), st * (-lam), tol));
            out.push_back(check_vec("Steinberg T1 U1 f = -f" + at, act(o2.T(1), act(o2.U(1), st)), st * cplx(-1), tol));
            out.push_back(check_vec("Steinberg U1 T1 f = -f" + at, act(o2.U(1), act(o2.T(1), st)), st * cplx(-1), tol));
            Eigen::MatrixXcd t = action_matrix(o2.T(1), ps), u = action_matrix(o2.U(1), ps);
            Eigen::MatrixXcd stack(4, 2);
            stack << t * u + Eigen::MatrixXcd::Identity(2, 2), u * t + Eigen::MatrixXcd::Identity(2, 2);
            out.push_back(check("Steinberg new-form nullity" + at, 2 - numerical_rank(stack), 1.0, tol));
            PrincipalSeries dual(g2, 1.0 / std::conj(ps.qs()));
            out.push_back(check("Steinberg orthogonal to f1'+f2'" + at, pairing(st, f1(dual) + f2(dual)), 0.0, tol));
        }
        return out;
    }

    HeckeAlgebra alg(2, Level::gamma0_4(2), c_psi, eta);
    StandardOps ops = standard_ops(alg);
    IdempotentKernels ker(alg.psi());
    const AdditiveCharacter& psi = alg.psi();
    cplx a2d = weil_index(psi.make(2) * psi.delta(), psi).to_complex();
    cplx ad = weil_index(psi.delta(), psi).to_complex();
    for (cplx s : s_grid) {
        cplx z = q_power(2, s);
        PrincipalSeries ps(alg, z);
        std::string at = " s=" + fmt(s);
        PrincipalSeriesVector fp = f_plus(ps, ker);
        Eigen::MatrixXcd E = kernel_matrix(ker, Kernel::EK, ps);
        out.push_back(check("dim Gamma0(4)-fixed space" + at, double(ps.fixed_dimension()), 2.0, tol));
        out.push_back(check("rank E^K" + at, numerical_rank(E), 1.0, tol));
        out.push_back(check_vec("E^K f+ = f+" + at, act_kernel(ker, Kernel::EK, fp), fp, tol));
        out.push_back(check("f+(I)" + at, fp.table()[0], std::conj(a2d) * rq * z, tol));
        out.push_back(check("f+(w_delta)" + at, fp.table()[1], std::conj(a2d * ad) / (2.0 * z), tol));
        out.push_back(check("f+(u_flat(2 delta))" + at, fp.table()[2], 0.0, tol));
        PrincipalSeriesVector fi = f_plus_cell(ps, ker, 0);
        PrincipalSeriesVector tf = act(ops.T(1), fp);
        cplx hi = std::pow(q, 1.5) * z, lo = rq / z;
        out.push_back(check_vec("T1 f+ = q^(3/2+s) f+ + (q^(1/2-s) - q^(3/2+s)) f+_I" + at, tf,
                                fp * hi + fi * (lo - hi), tol));
        double c1 = 1.0 / (1.0 + 1.0 / q);
        out.push_back(check_vec("E^K f+_I = (1+1/q)^-1 f+" + at, act_kernel(ker, Kernel::EK, fi), fp * c1, tol));
        PrincipalSeriesVector comp = act_kernel(ker, Kernel::EK, tf);
        cplx lam = c1 * rq * (z + 1.0 / z);
        out.push_back(check_vec("E^K T1 f+ = (1+1/q)^-1 q^(1/2)(q^s+q^-s) f+" + at, comp, fp * lam, tol));
    }
    return out;
}

std::vector<NumericCheck> whittaker_suite(int p, const std::vector<cplx>& s_grid, int c_psi, long long eta,
                                          double tol) {
    if (p == 2) throw DomainError("whittaker_suite: requires odd p");
    std::vector<NumericCheck> out;
    HeckeAlgebra alg(p, Level::iwahori(), c_psi, eta);
    double q = p, rq = std::sqrt(q);
    double qc = std::pow(q, c_psi);
    int nonres = 2;
    while (legendre(nonres, p) != -1) ++nonres;
    for (long long xi : {1LL, static_cast<long long>(nonres)}) {
        int chi = legendre(xi, p) * legendre(eta, p);
        std::string tag = " xi=" + std::to_string(xi);
        for (cplx s : s_grid) {
            cplx z = q_power(p, s);
            PrincipalSeries ps(alg, z);
            std::string at = tag + " s=" + fmt(s);
            out.push_back(check("W(f2)" + at, whittaker(f2(ps), xi).value, qc, tol));
            out.push_back(check("W(f1+f2)" + at, whittaker(f1(ps) + f2(ps), xi).value,
                                qc * (1.0 + double(chi) / (rq * z)), tol));
        }
        for (int sign : {1, -1}) {
            PrincipalSeries ps(alg, sign * rq);
            cplx expected = qc / q * (rq / ps.qs() * double(chi) - 1.0);
            std::string at = tag + (sign > 0 ? " q^s=+sqrt(q)" : " q^s=-sqrt(q)");
            out.push_back(check("W(Steinberg)" + at, whittaker(steinberg_fixed(ps), xi).value, expected, tol));
        }
    }
    return out;
}

}  // namespace metaplus
