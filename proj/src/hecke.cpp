#include "metaplus/hecke.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <sstream>

namespace metaplus {

namespace {

constexpr long kBig = LONG_MAX / 4;

long val(const PadicNumber& x) { return x.is_zero() ? kBig : x.valuation(); }

long long ipow_ll(int p, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

std::string DoubleCosetLabel::to_string() const {
    switch (kind) {
        case Torus: return "m(pi^" + std::to_string(m) + ")";
        case Weyl: return "w(delta pi^" + std::to_string(m) + ")";
        default: return "other";
    }
}

HeckeAlgebra::HeckeAlgebra(int p, const Level& level, int c_psi, long long eta)
    : psi_(p, c_psi, eta, max_precision(p)), level_(level) {
    bool ok = (p == 2) ? level == Level::gamma0_4(2)
                       : (level == Level::maximal() || level == Level::iwahori() || level == Level::iwahori_opposite());
    if (!ok) throw DomainError("HeckeAlgebra: unsupported level " + level.name() + " at p = " + std::to_string(p));
}

bool HeckeAlgebra::legal(const DoubleCosetLabel& l) const {
    switch (l.kind) {
        case DoubleCosetLabel::Torus: return !is_maximal() || l.m >= 0;
        case DoubleCosetLabel::Weyl: return has_weyl_labels();
        default: return false;
    }
}

Mp2Element HeckeAlgebra::representative(const DoubleCosetLabel& l) const {
    if (l.kind == DoubleCosetLabel::Torus) return torus(pi_pow(l.m));
    if (l.kind == DoubleCosetLabel::Weyl) return weyl(psi_.delta() * pi_pow(l.m));
    throw DomainError("representative: no representative for " + l.to_string());
}

Mu8 HeckeAlgebra::epsilon_rep(const DoubleCosetLabel& l) const {
    if (l.kind == DoubleCosetLabel::Torus) return weil_index(pi_pow(l.m), psi_) / weil_index(psi_.make(1), psi_);
    if (l.kind == DoubleCosetLabel::Weyl) {
        if (prime() == 2) return weil_index(psi_.delta() * pi_pow(l.m), psi_).conj();
        return weil_index(psi_.delta() * pi_pow(l.m), psi_);
    }
    throw DomainError("epsilon_rep: undefined on " + l.to_string());
}

CanonicalForm HeckeAlgebra::canonicalize(const Mp2Element& g) const {
    const Mat2& m = g.g;
    PadicNumber delta = psi_.delta();
    PadicNumber bn = m.b * delta, cn = m.c / delta;
    long s = level_.beta - level_.gamma, theta = level_.beta + level_.gamma;
    auto dbl = [](long v) { return v >= kBig ? kBig : 2 * v; };
    // Doubled weights of a, d, b, c; the pivot is the lightest entry.
    long w[4] = {dbl(val(m.a)), dbl(val(m.d)), val(bn) >= kBig ? kBig : 2 * val(bn) - s,
                 val(cn) >= kBig ? kBig : 2 * val(cn) + s};
    int piv = 0;
    for (int i = 1; i < 4; ++i)
        if (w[i] < w[piv]) piv = i;
    auto far = [&](int i) { return w[i] >= kBig || w[i] - w[piv] >= theta; };

    CanonicalForm out;
    Mp2Element id = mp2_identity(prime(), psi_.precision());
    int k = 0;
    bool is_torus = true, found = true;
    switch (piv) {
        case 0:
            if (!far(2) || !far(3)) {
                found = false;
                break;
            }
            k = static_cast<int>(val(m.a));
            out.left = u_flat(m.c / m.a);
            out.right = torus(m.a / pi_pow(k)) * u_sharp(m.b / m.a);
            break;
        case 1:
            if (!far(2) || !far(3)) {
                found = false;
                break;
            }
            k = -static_cast<int>(val(m.d));
            out.left = u_sharp(m.b / m.d);
            out.right = torus(m.d.inverse() / pi_pow(k)) * u_flat(m.c / m.d);
            break;
        case 2: {
            if (!far(0) || !far(1)) {
                found = false;
                break;
            }
            is_torus = false;
            PadicNumber y = -bn.inverse();
            k = static_cast<int>(val(y));
            out.left = u_flat(m.d / m.b);
            out.right = torus(y / pi_pow(k)) * u_flat(m.a / m.b);
            break;
        }
        default:
            if (!far(0) || !far(1)) {
                found = false;
                break;
            }
            is_torus = false;
            k = static_cast<int>(val(cn));
            out.left = u_sharp(m.a / m.c);
            out.right = torus(cn / pi_pow(k)) * u_sharp(m.d / m.c);
            break;
    }
    if (!found) {
        out.label = {DoubleCosetLabel::Other, 0};
        out.left = id;
        out.right = id;
        out.rep = g;
        return out;
    }
    out.label = is_torus ? DoubleCosetLabel::torus(k) : DoubleCosetLabel::weyl(k);
    if (is_maximal()) {
        Mp2Element wd = weyl(delta);
        if (!is_torus) {
            // w_{delta pi^k} = w_delta m(pi^k)
            out.left = out.left * wd;
            out.label = DoubleCosetLabel::torus(k);
        }
        if (out.label.m < 0) {
            // m(pi^k) = w_delta^-1 m(pi^-k) w_delta
            out.left = out.left * wd.inverse();
            out.right = wd * out.right;
            out.label.m = -out.label.m;
        }
    }
    out.rep = representative(out.label);
    Mp2Element prod = out.left * out.rep * out.right;
    if (prod.sign != g.sign) out.right.sign = -out.right.sign;
    return out;
}

long long HeckeAlgebra::coset_count(const DoubleCosetLabel& l) const {
    if (!legal(l)) return 0;
    int p = prime();
    if (l.kind == DoubleCosetLabel::Torus) {
        if (l.m == 0) return 1;
        if (is_maximal()) return ipow_ll(p, 2 * l.m) + ipow_ll(p, 2 * l.m - 1);
        return ipow_ll(p, 2 * std::abs(l.m));
    }
    int n = level_.beta + 2 * l.m - level_.gamma;
    return ipow_ll(p, std::abs(n));
}

std::vector<Mp2Element> HeckeAlgebra::coset_reps(const DoubleCosetLabel& l) const {
    if (!legal(l)) throw DomainError("coset_reps: illegal label " + l.to_string());
    int p = prime();
    PadicNumber dinv = psi_.delta().inverse(), delta = psi_.delta();
    Mp2Element rep = representative(l);
    std::vector<Mp2Element> out;
    auto sharp = [&](int shift, long long count) {
        for (long long s = 0; s < count; ++s) out.push_back(u_sharp(dinv * pi_pow(shift) * psi_.make(s)) * rep);
    };
    auto flat = [&](int shift, long long count) {
        for (long long s = 0; s < count; ++s) out.push_back(u_flat(delta * pi_pow(shift) * psi_.make(s)) * rep);
    };
    if (l.kind == DoubleCosetLabel::Torus) {
        if (l.m == 0) return {rep};
        if (is_maximal()) {
            sharp(0, ipow_ll(p, 2 * l.m));
            Mp2Element wd = weyl(delta);
            for (long long s = 0; s < ipow_ll(p, 2 * l.m - 1); ++s)
                out.push_back(wd * u_sharp(dinv * pi_pow(1) * psi_.make(s)) * rep);
        } else if (l.m > 0) {
            sharp(level_.beta, ipow_ll(p, 2 * l.m));
        } else {
            flat(level_.gamma, ipow_ll(p, -2 * l.m));
        }
        return out;
    }
    int n = level_.beta + 2 * l.m - level_.gamma;
    if (n >= 0)
        flat(level_.gamma, ipow_ll(p, n));
    else
        sharp(level_.beta, ipow_ll(p, -n));
    return out;
}

std::vector<Mp2Element> HeckeAlgebra::right_coset_reps(const DoubleCosetLabel& l) const {
    DoubleCosetLabel inv = label_of(representative(l).inverse());
    std::vector<Mp2Element> out;
    for (const Mp2Element& g : coset_reps(inv)) out.push_back(g.inverse());
    return out;
}

std::vector<DoubleCosetLabel> HeckeAlgebra::labels(int window) const {
    std::vector<DoubleCosetLabel> out;
    for (int m = is_maximal() ? 0 : -window; m <= window; ++m) out.push_back(DoubleCosetLabel::torus(m));
    if (has_weyl_labels())
        for (int m = -window; m <= window; ++m) out.push_back(DoubleCosetLabel::weyl(m));
    return out;
}

HeckeElement HeckeElement::basis(const HeckeAlgebra& alg, const DoubleCosetLabel& l, const ExactScalar& c) {
    if (!alg.legal(l)) throw DomainError("HeckeElement: illegal label " + l.to_string());
    HeckeElement x(alg);
    x.set(l, c);
    return x;
}

HeckeElement HeckeElement::identity(const HeckeAlgebra& alg) {
    return basis(alg, DoubleCosetLabel::torus(0), ExactScalar::one(alg.prime()));
}

ExactScalar HeckeElement::coefficient(const DoubleCosetLabel& l) const {
    auto it = coeffs_.find(l);
    return it == coeffs_.end() ? ExactScalar::zero(alg_->prime()) : it->second;
}

void HeckeElement::set(const DoubleCosetLabel& l, const ExactScalar& c) {
    if (c.is_zero())
        coeffs_.erase(l);
    else
        coeffs_[l] = c;
}

int HeckeElement::max_abs_label() const {
    int r = 0;
    for (const auto& kv : coeffs_) r = std::max(r, std::abs(kv.first.m));
    return r;
}

long long HeckeElement::coset_total() const {
    long long t = 0;
    for (const auto& kv : coeffs_) t += alg_->coset_count(kv.first);
    return t;
}

ExactScalar HeckeElement::evaluate(const Mp2Element& g) const {
    int q = alg_->prime();
    CanonicalForm cf = alg_->canonicalize(g);
    if (cf.label.kind == DoubleCosetLabel::Other) return ExactScalar::zero(q);
    auto it = coeffs_.find(cf.label);
    if (it == coeffs_.end()) return ExactScalar::zero(q);
    Mu8 z = alg_->epsilon_gamma(cf.left) * alg_->epsilon_rep(cf.label) * alg_->epsilon_gamma(cf.right);
    return it->second * z;
}

HeckeElement HeckeElement::operator+(const HeckeElement& o) const {
    HeckeElement r = *this;
    if (!r.alg_) r.alg_ = o.alg_;
    for (const auto& kv : o.coeffs_) r.set(kv.first, r.coefficient(kv.first) + kv.second);
    return r;
}

HeckeElement HeckeElement::operator-(const HeckeElement& o) const { return *this + o * ExactScalar(o.alg_->prime(), -1); }

HeckeElement HeckeElement::operator*(const ExactScalar& c) const {
    HeckeElement r(*alg_);
    for (const auto& kv : coeffs_) r.set(kv.first, kv.second * c);
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    HeckeElement d = *this - o;
    return d.coeffs_.empty();
}

std::string HeckeElement::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& kv : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << kv.second.to_string() << ") X[" << kv.first.to_string() << "]";
    }
    return os.str();
}

ExactScalar convolve_at(const HeckeElement& X, const HeckeElement& Y, const Mp2Element& g) {
    const HeckeAlgebra& alg = X.algebra();
    ExactScalar sum = ExactScalar::zero(alg.prime());
    if (X.coset_total() <= Y.coset_total()) {
        for (const auto& kv : X.coefficients())
            for (const Mp2Element& gi : alg.coset_reps(kv.first)) {
                ExactScalar y = Y.evaluate(gi.inverse() * g);
                if (!y.is_zero()) sum += X.evaluate(gi) * y;
            }
    } else {
        for (const auto& kv : Y.coefficients())
            for (const Mp2Element& hj : alg.right_coset_reps(kv.first)) {
                ExactScalar x = X.evaluate(g * hj.inverse());
                if (!x.is_zero()) sum += x * Y.evaluate(hj);
            }
    }
    return sum;
}

HeckeElement convolve(const HeckeElement& X, const HeckeElement& Y) {
    const HeckeAlgebra& alg = X.algebra();
    HeckeElement out(alg);
    if (X.coefficients().empty() || Y.coefficients().empty()) return out;
    if (alg.prime() == 2) {
        // Only same-sign torus products stay on the torus labels.
        auto sign_of = [](const HeckeElement& Z, int s) {
            for (const auto& kv : Z.coefficients())
                if (kv.first.m * s > 0) return true;
            return false;
        };
        if ((sign_of(X, 1) && sign_of(Y, -1)) || (sign_of(X, -1) && sign_of(Y, 1)))
            throw DomainError("convolve: mixed-sign torus product leaves the torus labels at p = 2");
    }
    int window = X.max_abs_label() + Y.max_abs_label() + 2;
    for (const DoubleCosetLabel& l : alg.labels(window)) {
        ExactScalar v = convolve_at(X, Y, alg.representative(l));
        out.set(l, v * alg.epsilon_rep(l).inverse());
    }
    return out;
}

StandardOps standard_ops(const HeckeAlgebra& alg) { return {&alg}; }

HeckeElement StandardOps::identity() const { return HeckeElement::identity(*alg); }

HeckeElement StandardOps::T(int m) const {
    int q = alg->prime();
    int idx = alg->level() == Level::iwahori_opposite() ? -m : m;
    return HeckeElement::basis(*alg, DoubleCosetLabel::torus(idx), ExactScalar::monomial(q, 1, 0, -std::abs(m)));
}

HeckeElement StandardOps::U(int m) const {
    int q = alg->prime();
    int idx = alg->level() == Level::iwahori_opposite() ? -m : m;
    return HeckeElement::basis(*alg, DoubleCosetLabel::weyl(idx), ExactScalar::monomial(q, 1, 0, -std::abs(m)));
}

HeckeElement StandardOps::T1_local() const { return T(1); }

HeckeElement StandardOps::U1_local() const {
    int idx = alg->level() == Level::iwahori_opposite() ? -1 : 1;
    return HeckeElement::basis(*alg, DoubleCosetLabel::weyl(idx), ExactScalar::one(alg->prime()));
}

namespace {

RelationResult check(const std::string& name, const HeckeElement& lhs, const HeckeElement& rhs) {
    RelationResult r;
    r.name = name;
    r.pass = lhs == rhs;
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    return r;
}

// Non-torus cosets at p = 2 must carry no mass.
bool vanishes_off_torus(const HeckeAlgebra& alg, const HeckeElement& X, const HeckeElement& Y) {
    const AdditiveCharacter& psi = alg.psi();
    std::vector<Mp2Element> probes = {weyl(psi.delta()), u_flat(psi.delta() * psi.make(2)),
                                      u_flat(psi.delta() * psi.make(6)), weyl(psi.delta()) * torus(psi.make(2))};
    for (const Mp2Element& g : probes)
        if (!convolve_at(X, Y, g).is_zero()) return false;
    return true;
}

}  // namespace

std::vector<RelationResult> relation_suite(const HeckeAlgebra& alg, int mmax) {
    int q = alg.prime();
    StandardOps ops = standard_ops(alg);
    ExactScalar Q(q, Rational(q));
    std::vector<RelationResult> out;
    std::string group = q == 2 ? "Gamma0(4)" : alg.level().name();
    auto tag = [&](const std::string& s) { return group + " p=" + std::to_string(q) + ": " + s; };
    if (alg.is_maximal()) {
        HeckeElement t1 = ops.T(1);
        out.push_back(check(tag("T1*T1 = q+1+T2"), convolve(t1, t1),
                            ops.identity() * ExactScalar(q, Rational(q + 1)) + ops.T(2)));
        for (int m = 2; m <= mmax; ++m)
            out.push_back(check(tag("T1*T" + std::to_string(m) + " = qT" + std::to_string(m - 1) + "+T" +
                                    std::to_string(m + 1)),
                                convolve(t1, ops.T(m)), ops.T(m - 1) * Q + ops.T(m + 1)));
        return out;
    }
    auto additive = [&](int m1, int m2) {
        std::string n = "T" + std::to_string(m1) + "*T" + std::to_string(m2) + " = T" + std::to_string(m1 + m2);
        HeckeElement lhs = convolve(ops.T(m1), ops.T(m2));
        RelationResult r = check(tag(n), lhs, ops.T(m1 + m2));
        if (q == 2 && r.pass && !vanishes_off_torus(alg, ops.T(m1), ops.T(m2))) {
            r.pass = false;
            r.lhs += " (mass off the torus cosets)";
        }
        out.push_back(r);
    };
    if (!alg.has_weyl_labels()) {
        for (int m1 = -mmax; m1 <= mmax; ++m1)
            for (int m2 = -mmax; m2 <= mmax; ++m2)
                if (m1 * m2 >= 0 && std::abs(m1 + m2) <= mmax && m1 != 0 && m2 != 0 && std::abs(m1) <= std::abs(m2))
                    additive(m1, m2);
        return out;
    }
    HeckeElement u0 = ops.U(0), u1 = ops.U(1);
    out.push_back(check(tag("U0*U1 = T1"), convolve(u0, u1), ops.T(1)));
    out.push_back(check(tag("U1*U0 = T-1"), convolve(u1, u0), ops.T(-1)));
    for (int m = 0; m < mmax; ++m) {
        out.push_back(check(tag("U1*T" + std::to_string(m) + " = U" + std::to_string(m + 1)), convolve(u1, ops.T(m)),
                            ops.U(m + 1)));
        out.push_back(check(tag("U0*T" + std::to_string(-m) + " = U" + std::to_string(-m)),
                            convolve(u0, ops.T(-m)), ops.U(-m)));
    }
    out.push_back(check(tag("U0*U0 = (q-1)U0+q"), convolve(u0, u0),
                        u0 * ExactScalar(q, Rational(q - 1)) + ops.identity() * Q));
    out.push_back(check(tag("U1*U1 = 1"), convolve(u1, u1), ops.identity()));
    for (int m1 = -mmax; m1 <= mmax; ++m1)
        for (int m2 = m1; m2 <= mmax; ++m2)
            if (m1 * m2 >= 0 && m1 != 0 && m2 != 0 && std::abs(m1 + m2) <= mmax && std::min(std::abs(m1), std::abs(m2)) <= 2)
                additive(m1, m2);
    return out;
}

// ---------------------------------------------------------------------------
// PGL2

Pgl2HeckeAlgebra::Pgl2HeckeAlgebra(int p, Type type, int c_psi) : psi_(p, c_psi, 1, max_precision(p)), type_(type) {}

DoubleCosetLabel Pgl2HeckeAlgebra::label_of(const Mat2& g) const {
    PadicNumber delta = psi_.delta();
    PadicNumber bn = g.b * delta, cn = g.c / delta;
    long vdet = g.det().valuation();
    if (type_ == Maximal) {
        long mn = std::min(std::min(val(g.a), val(g.d)), std::min(val(bn), val(cn)));
        return DoubleCosetLabel::torus(static_cast<int>(vdet - 2 * mn));
    }
    auto dbl = [](long v, long s) { return v >= kBig ? kBig : 2 * v + s; };
    long w[4] = {dbl(val(g.a), 0), dbl(val(g.d), 0), dbl(val(bn), 1), dbl(val(cn), -1)};
    int piv = 0;
    for (int i = 1; i < 4; ++i)
        if (w[i] < w[piv]) piv = i;
    switch (piv) {
        case 0: return DoubleCosetLabel::torus(static_cast<int>(2 * val(g.a) - vdet));
        case 1: return DoubleCosetLabel::torus(static_cast<int>(vdet - 2 * val(g.d)));
        case 2: return DoubleCosetLabel::weyl(static_cast<int>(vdet - 2 * val(bn)));
        default: return DoubleCosetLabel::weyl(static_cast<int>(2 * val(cn) - vdet));
    }
}

Mat2 Pgl2HeckeAlgebra::representative(const DoubleCosetLabel& l) const {
    PadicNumber zero = PadicNumber::zero(prime()), one = psi_.make(1);
    if (l.kind == DoubleCosetLabel::Torus) return {psi_.pi_power(l.m), zero, zero, one};
    return {zero, psi_.delta().inverse(), psi_.pi_power(l.m) * psi_.delta(), zero};
}

std::vector<Mat2> Pgl2HeckeAlgebra::coset_reps(const DoubleCosetLabel& l) const {
    int p = prime();
    PadicNumber zero = PadicNumber::zero(p), dinv = psi_.delta().inverse(), delta = psi_.delta();
    std::vector<Mat2> out;
    if (type_ == Maximal) {
        if (l.kind != DoubleCosetLabel::Torus || l.m < 0) throw DomainError("pgl2 coset_reps: illegal label");
        for (int i = 0; i <= l.m; ++i)
            for (long long x = 0; x < ipow_ll(p, i); ++x) {
                bool primitive = i == 0 || i == l.m || x % p != 0;
                if (primitive) out.push_back({psi_.pi_power(i), dinv * psi_.make(x), zero, psi_.pi_power(l.m - i)});
            }
        return out;
    }
    Mat2 id{psi_.make(1), zero, zero, psi_.make(1)};
    Mat2 prefix = id;
    int m = l.m;
    if (l.kind == DoubleCosetLabel::Weyl) {
        // W_m = W_1 diag(pi^(m-1), 1) with W_1 normalizing the Iwahori subgroup.
        prefix = representative(DoubleCosetLabel::weyl(1));
        m -= 1;
    }
    Mat2 t{psi_.pi_power(m), zero, zero, psi_.make(1)};
    for (long long s = 0; s < ipow_ll(p, std::abs(m)); ++s) {
        Mat2 u = m >= 0 ? Mat2{psi_.make(1), dinv * psi_.make(s), zero, psi_.make(1)}
                        : Mat2{psi_.make(1), zero, delta * psi_.pi_power(1) * psi_.make(s), psi_.make(1)};
        out.push_back(prefix * u * t);
    }
    return out;
}

std::vector<DoubleCosetLabel> Pgl2HeckeAlgebra::labels(int window) const {
    std::vector<DoubleCosetLabel> out;
    for (int m = type_ == Maximal ? 0 : -window; m <= window; ++m) out.push_back(DoubleCosetLabel::torus(m));
    if (type_ == Iwahori)
        for (int m = -window; m <= window; ++m) out.push_back(DoubleCosetLabel::weyl(m));
    return out;
}

long long Pgl2Element::evaluate(const Mat2& g) const {
    auto it = coeffs.find(alg->label_of(g));
    return it == coeffs.end() ? 0 : it->second;
}

bool Pgl2Element::operator==(const Pgl2Element& o) const {
    auto nz = [](const std::map<DoubleCosetLabel, long long>& m) {
        std::map<DoubleCosetLabel, long long> r;
        for (const auto& kv : m)
            if (kv.second != 0) r.insert(kv);
        return r;
    };
    return nz(coeffs) == nz(o.coeffs);
}

std::string Pgl2Element::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& kv : coeffs) {
        if (kv.second == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << kv.second << " X[" << kv.first.to_string() << "]";
    }
    return first ? "0" : os.str();
}

Pgl2Element pgl2_basis(const Pgl2HeckeAlgebra& alg, const DoubleCosetLabel& l, long long c) {
    Pgl2Element e;
    e.alg = &alg;
    e.coeffs[l] = c;
    return e;
}

Pgl2Element pgl2_add(const Pgl2Element& a, const Pgl2Element& b, long long cb) {
    Pgl2Element r = a;
    for (const auto& kv : b.coeffs) r.coeffs[kv.first] += cb * kv.second;
    return r;
}

Pgl2Element pgl2_convolve(const Pgl2Element& X, const Pgl2Element& Y) {
    const Pgl2HeckeAlgebra& alg = *X.alg;
    Pgl2Element out;
    out.alg = &alg;
    int window = 0;
    for (const auto& kv : X.coeffs) window = std::max(window, std::abs(kv.first.m));
    int wy = 0;
    for (const auto& kv : Y.coeffs) wy = std::max(wy, std::abs(kv.first.m));
    window += wy + 2;
    std::vector<std::pair<Mat2, long long>> cosets;
    for (const auto& kv : X.coeffs)
        for (const Mat2& g : alg.coset_reps(kv.first)) cosets.push_back({g, kv.second});
    for (const DoubleCosetLabel& l : alg.labels(window)) {
        Mat2 r = alg.representative(l);
        long long sum = 0;
        for (const auto& [g, c] : cosets) {
            Mat2 adj{g.d, -g.b, -g.c, g.a};
            sum += c * Y.evaluate(adj * r);
        }
        if (sum != 0) out.coeffs[l] = sum;
    }
    return out;
}

namespace {

RelationResult pcheck(const std::string& name, const Pgl2Element& lhs, const Pgl2Element& rhs) {
    return {name, lhs == rhs, lhs.to_string(), rhs.to_string()};
}

}  // namespace

std::vector<RelationResult> pgl2_relation_suite(const Pgl2HeckeAlgebra& alg, int mmax) {
    int q = alg.prime();
    std::vector<RelationResult> out;
    auto T = [&](int m) { return pgl2_basis(alg, DoubleCosetLabel::torus(m)); };
    auto U = [&](int m) { return pgl2_basis(alg, DoubleCosetLabel::weyl(m)); };
    Pgl2Element one = T(0);
    std::string pre = std::string(alg.type() == Pgl2HeckeAlgebra::Maximal ? "PGL2 K'" : "PGL2 I") +
                      " p=" + std::to_string(q) + ": ";
    if (alg.type() == Pgl2HeckeAlgebra::Maximal) {
        out.push_back(pcheck(pre + "T1*T1 = q+1+T2", pgl2_convolve(T(1), T(1)), pgl2_add(T(2), one, q + 1)));
        for (int m = 2; m <= mmax; ++m)
            out.push_back(pcheck(pre + "T1*T" + std::to_string(m) + " = qT" + std::to_string(m - 1) + "+T" +
                                     std::to_string(m + 1),
                                 pgl2_convolve(T(1), T(m)), pgl2_add(T(m + 1), T(m - 1), q)));
        out.push_back(pcheck(pre + "1*T3 = T3", pgl2_convolve(one, T(3)), T(3)));
        return out;
    }
    out.push_back(pcheck(pre + "U0*U1 = T1", pgl2_convolve(U(0), U(1)), T(1)));
    out.push_back(pcheck(pre + "U1*U0 = T-1", pgl2_convolve(U(1), U(0)), T(-1)));
    for (int m = 0; m < mmax; ++m) {
        out.push_back(pcheck(pre + "U1*T" + std::to_string(m) + " = U" + std::to_string(m + 1),
                             pgl2_convolve(U(1), T(m)), U(m + 1)));
        out.push_back(pcheck(pre + "U0*T" + std::to_string(-m) + " = U" + std::to_string(-m),
                             pgl2_convolve(U(0), T(-m)), U(-m)));
    }
    out.push_back(pcheck(pre + "U0*U0 = (q-1)U0+q", pgl2_convolve(U(0), U(0)), pgl2_add(pgl2_basis(alg, DoubleCosetLabel::weyl(0), q - 1), one, q)));
    out.push_back(pcheck(pre + "U1*U1 = 1", pgl2_convolve(U(1), U(1)), one));
    for (int m1 = -mmax; m1 <= mmax; ++m1)
        for (int m2 = m1; m2 <= mmax; ++m2)
            if (m1 * m2 >= 0 && m1 != 0 && m2 != 0 && std::abs(m1 + m2) <= mmax && std::min(std::abs(m1), std::abs(m2)) <= 2)
                out.push_back(pcheck(pre + "T" + std::to_string(m1) + "*T" + std::to_string(m2) + " = T" +
                                         std::to_string(m1 + m2),
                                     pgl2_convolve(T(m1), T(m2)), T(m1 + m2)));
    out.push_back(pcheck(pre + "1*U1 = U1", pgl2_convolve(one, U(1)), U(1)));
    return out;
}

}  // namespace metaplus
