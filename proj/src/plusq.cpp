#include "metaplus/plusq.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace metaplus {

namespace {

BigInt big_pow(long long b, int e) {
    BigInt r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << "/" << denominator(r);
    return os.str();
}

QExpansion from_integers(const std::vector<BigInt>& v, int twice_weight, int level) {
    QExpansion f(static_cast<int>(v.size()) - 1, twice_weight, level);
    for (std::size_t i = 0; i < v.size(); ++i) f[static_cast<int>(i)] = Rational(v[i]);
    return f;
}

// prod_{n >= 1} (1 - q^(step n))^e truncated at N; e may be negative.
void multiply_eta_power(std::vector<BigInt>& c, int step, int e) {
    int N = static_cast<int>(c.size()) - 1;
    for (int n = step; n <= N; n += step) {
        for (int t = 0; t < std::abs(e); ++t) {
            if (e > 0)
                for (int i = N; i >= n; --i) c[i] -= c[i - n];
            else
                for (int i = n; i <= N; ++i) c[i] += c[i - n];
        }
    }
}

std::vector<Rational> cyclotomic_poly(int M) {
    thread_local std::map<int, std::vector<Rational>> cache;
    auto it = cache.find(M);
    if (it != cache.end()) return it->second;
    // X^M - 1 divided by Phi_d for every proper divisor d
    std::vector<Rational> num(static_cast<std::size_t>(M) + 1, Rational(0));
    num[0] = -1;
    num[M] = 1;
    for (int d = 1; d < M; ++d) {
        if (M % d) continue;
        std::vector<Rational> den = cyclotomic_poly(d);
        int dn = static_cast<int>(den.size()) - 1;
        std::vector<Rational> q(num.size() - static_cast<std::size_t>(dn), Rational(0));
        for (int i = static_cast<int>(num.size()) - 1; i >= dn; --i) {
            Rational lead = num[i];
            q[i - dn] = lead;
            for (int j = 0; j <= dn; ++j) num[i - dn + j] -= lead * den[j];
        }
        num = q;
    }
    cache[M] = num;
    return num;
}

int lcm_int(int a, int b) { return std::lcm(a, b); }

}  // namespace

QExpansion::QExpansion(int bound, int twice_weight, int level, int den)
    : c_(static_cast<std::size_t>(bound) + 1, Rational(0)), twice_weight_(twice_weight), level_(level), den_(den) {
    if (bound < 0) throw DomainError("QExpansion: negative truncation bound");
    if (den < 1) throw DomainError("QExpansion: exponent denominator must be positive");
}

int QExpansion::k() const {
    if (!half_integral()) throw DomainError("QExpansion::k: integral weight");
    return (twice_weight_ - 1) / 2;
}

Rational QExpansion::coeff(int n) const {
    if (n < 0 || n > bound()) return 0;
    return c_[static_cast<std::size_t>(n)];
}

bool QExpansion::is_zero() const {
    for (const Rational& r : c_)
        if (r != 0) return false;
    return true;
}

QExpansion QExpansion::operator+(const QExpansion& o) const {
    if (den_ != o.den_ || twice_weight_ != o.twice_weight_)
        throw DomainError("QExpansion::+: weight or exponent denominators differ");
    QExpansion r(std::min(bound(), o.bound()), twice_weight_, level_, den_);
    for (int n = 0; n <= r.bound(); ++n) r[n] = (*this)[n] + o[n];
    return r;
}

QExpansion QExpansion::operator-(const QExpansion& o) const { return *this + o * Rational(-1); }

QExpansion QExpansion::operator*(const QExpansion& o) const {
    if (den_ != o.den_) throw DomainError("QExpansion::*: exponent denominators differ");
    QExpansion r(std::min(bound(), o.bound()), twice_weight_ + o.twice_weight_, std::max(level_, o.level_), den_);
    int N = r.bound();
    for (int i = 0; i <= N; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j)
            if (o.c_[j] != 0) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

QExpansion QExpansion::operator*(const Rational& s) const {
    QExpansion r = *this;
    for (Rational& x : r.c_) x *= s;
    return r;
}

QExpansion QExpansion::pow(int e) const {
    if (e < 0) throw DomainError("QExpansion::pow: negative exponent");
    QExpansion r(bound(), 0, level_, den_);
    r[0] = 1;
    QExpansion b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

bool QExpansion::operator==(const QExpansion& o) const {
    return den_ == o.den_ && twice_weight_ == o.twice_weight_ && c_ == o.c_;
}

QExpansion QExpansion::truncated(int b) const {
    if (b > bound()) throw DomainError("QExpansion::truncated: bound exceeds the available terms");
    QExpansion r(b, twice_weight_, level_, den_);
    for (int n = 0; n <= b; ++n) r[n] = (*this)[n];
    return r;
}

QExpansion QExpansion::dilated_down(int m) const {
    QExpansion r = *this;
    r.den_ = den_ * m;
    return r;
}

std::ostream& operator<<(std::ostream& os, const QExpansion& f) {
    bool first = true;
    for (int n = 0; n <= f.bound(); ++n) {
        if (f[n] == 0) continue;
        if (!first) os << " + ";
        os << rational_str(f[n]) << " q^" << n;
        if (f.den() != 1) os << "/" << f.den();
        first = false;
    }
    if (first) os << "0";
    return os << " + O(q^" << f.bound() + 1 << (f.den() != 1 ? "/" + std::to_string(f.den()) : "") << ")";
}

void write_expansion(std::ostream& os, const QExpansion& f) {
    os << "# weight " << f.twice_weight() << "/2\n";
    os << "# level " << f.level() << "\n";
    os << "# den " << f.den() << "\n";
    os << "# bound " << f.bound() << "\n";
    for (int n = 0; n <= f.bound(); ++n) os << n << " " << rational_str(f[n]) << "\n";
}

QExpansion read_expansion(std::istream& is) {
    int twice = 0, level = 4, den = 1, bound = -1;
    std::vector<std::pair<int, Rational>> rows;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        if (line[0] == '#') {
            std::string hash, key, val;
            ls >> hash >> key >> val;
            if (key == "weight") {
                auto slash = val.find('/');
                twice = slash == std::string::npos ? 2 * std::stoi(val) : std::stoi(val.substr(0, slash));
            } else if (key == "level") {
                level = std::stoi(val);
            } else if (key == "den") {
                den = std::stoi(val);
            } else if (key == "bound") {
                bound = std::stoi(val);
            }
            continue;
        }
        int n;
        std::string c;
        if (!(ls >> n >> c) || n < 0) throw DomainError("read_expansion: malformed line '" + line + "'");
        rows.emplace_back(n, parse_rational(c));
    }
    if (bound < 0)
        for (const auto& r : rows) bound = std::max(bound, r.first);
    if (bound < 0) throw DomainError("read_expansion: empty expansion");
    QExpansion f(bound, twice, level, den);
    for (const auto& [n, c] : rows) {
        if (n > bound) throw DomainError("read_expansion: index beyond the declared bound");
        f[n] = c;
    }
    return f;
}

void GlobalConfig::validate() const {
    if (k < 0) throw DomainError("GlobalConfig: k must be nonnegative");
    if (f == 0 || f % 2 == 0) throw DomainError("GlobalConfig: f must be an odd nonzero integer");
    if ((f > 0) != (k % 2 == 0)) throw DomainError("GlobalConfig: sgn f must equal (-1)^k");
    if (level_multiplier < 1 || level_multiplier % 2 == 0)
        throw DomainError("GlobalConfig: level multiplier must be odd and positive");
    for (long long d = 3; d * d <= level_multiplier; d += 2)
        if (level_multiplier % (d * d) == 0) throw DomainError("GlobalConfig: level multiplier must be square-free");
    if (truncation < 1) throw DomainError("GlobalConfig: truncation must be positive");
}

GlobalConfig make_config(int k, int truncation, long long level_multiplier) {
    GlobalConfig cfg{k, k % 2 == 0 ? 1 : -1, level_multiplier, truncation};
    cfg.validate();
    return cfg;
}

QExpansion theta(int N) {
    QExpansion f(N, 1);
    f[0] = 1;
    for (int l = 1; l * l <= N; ++l) f[l * l] += 2;
    return f;
}

QExpansion eisenstein_f2(int N) {
    QExpansion f(N, 4);
    for (int n = 1; n <= N; n += 2) {
        Rational s = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) s += d;
        f[n] = s;
    }
    return f;
}

QExpansion ramanujan_delta(int N) {
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1, 0);
    if (N >= 1) c[1] = 1;
    // q * prod (1 - q^n)^24: shift first, then multiply
    multiply_eta_power(c, 1, 24);
    return from_integers(c, 24, 1);
}

QExpansion fricke_f2_base(int N) {
    std::vector<BigInt> c(static_cast<std::size_t>(N) + 1, 0);
    c[0] = 1;
    multiply_eta_power(c, 1, 8);
    multiply_eta_power(c, 2, -4);
    return from_integers(c, 4, 4);
}

int rational_rank(RationalMatrix m) {
    int rank = 0;
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
        const std::vector<Rational>& pr = m[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / pr[col];
            for (std::size_t j = col; j < cols; ++j) m[r][j] -= f * pr[j];
        }
        ++rank;
    }
    return rank;
}

std::vector<std::vector<Rational>> rational_nullspace(RationalMatrix m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
        std::size_t piv = row;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[row]);
        Rational inv = 1 / m[row][col];
        for (Rational& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t j = 0; j < ncols; ++j) m[r][j] -= f * m[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
        std::vector<Rational> v(ncols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
        basis.push_back(v);
    }
    return basis;
}

std::vector<QExpansion> halfint_basis(int k, int N) {
    if (k < 0) throw DomainError("halfint_basis: k must be nonnegative");
    QExpansion th = theta(N), f2 = eisenstein_f2(N);
    std::vector<QExpansion> out;
    for (int a = 0; 4 * a <= 2 * k + 1; ++a) out.push_back(th.pow(2 * k + 1 - 4 * a) * f2.pow(a));
    RationalMatrix m;
    for (const QExpansion& f : out) {
        std::vector<Rational> row;
        for (int n = 0; n <= N; ++n) row.push_back(f[n]);
        m.push_back(row);
    }
    if (rational_rank(m) != static_cast<int>(out.size()) || static_cast<int>(out.size()) != k / 2 + 1)
        throw DomainError("halfint_basis: product basis is linearly dependent up to q^" + std::to_string(N));
    return out;
}

int sturm_bound(int k, long long level_multiplier) {
    long long index = 6;
    long long m = level_multiplier;
    for (long long p = 3; p <= m; p += 2)
        if (m % p == 0) {
            index *= p + 1;
            while (m % p == 0) m /= p;
        }
    long long num = (2LL * k + 1) * index;
    return static_cast<int>((num + 23) / 24);
}

bool plus_allowed(int n, long long f) {
    long long r = ((n % 4) + 4) % 4;
    long long fr = ((f % 4) + 4) % 4;
    return r == 0 || r == fr;
}

namespace {

void require_bound(int bound, const GlobalConfig& cfg) {
    int need = 4 * sturm_bound(cfg.k, cfg.level_multiplier);
    if (bound < need)
        throw InconclusiveError("plus condition: truncation " + std::to_string(bound) + " below the bound " +
                                std::to_string(need));
}

std::vector<QExpansion> combine(const std::vector<QExpansion>& basis, const std::vector<std::vector<Rational>>& null) {
    std::vector<QExpansion> out;
    for (const auto& v : null) {
        QExpansion f = basis[0] * Rational(0);
        for (std::size_t a = 0; a < basis.size(); ++a)
            if (v[a] != 0) f = f + basis[a] * v[a];
        out.push_back(f);
    }
    return out;
}

RationalMatrix forbidden_rows(const std::vector<QExpansion>& basis, const GlobalConfig& cfg) {
    RationalMatrix rows;
    int N = basis[0].bound();
    for (const QExpansion& b : basis) N = std::min(N, b.bound());
    for (int n = 0; n <= N; ++n) {
        if (plus_allowed(n, cfg.f)) continue;
        std::vector<Rational> row;
        bool nonzero = false;
        for (const QExpansion& b : basis) {
            row.push_back(b[n]);
            nonzero = nonzero || b[n] != 0;
        }
        if (nonzero) rows.push_back(row);
    }
    return rows;
}

}  // namespace

bool plus_member(const QExpansion& f, const GlobalConfig& cfg) {
    cfg.validate();
    if (f.half_integral() && f.k() != cfg.k) throw DomainError("plus_member: weight does not match the configuration");
    require_bound(f.bound(), cfg);
    for (int n = 0; n <= f.bound(); ++n)
        if (!plus_allowed(n, cfg.f) && f[n] != 0) return false;
    return true;
}

std::vector<QExpansion> plus_subspace(const std::vector<QExpansion>& basis, const GlobalConfig& cfg) {
    cfg.validate();
    if (basis.empty()) return {};
    for (const QExpansion& b : basis) require_bound(b.bound(), cfg);
    return combine(basis, rational_nullspace(forbidden_rows(basis, cfg), basis.size()));
}

std::vector<QExpansion> cusp_plus_subspace(const GlobalConfig& cfg) {
    cfg.validate();
    if (cfg.level_multiplier != 1) throw DomainError("cusp_plus_subspace: only level 4 is supported");
    int N = cfg.truncation;
    std::vector<QExpansion> basis = halfint_basis(cfg.k, N);
    for (const QExpansion& b : basis) require_bound(b.bound(), cfg);
    // Images under W4: theta | W4 = theta, F2 | W4 = eta(z)^8 / (16 eta(2z)^4).
    QExpansion th = theta(N), g = fricke_f2_base(N) * Rational(1, 16);
    RationalMatrix rows = forbidden_rows(basis, cfg);
    std::vector<Rational> at_inf, at_zero;
    for (std::size_t a = 0; a < basis.size(); ++a) {
        at_inf.push_back(basis[a][0]);
        QExpansion w = th.pow(2 * cfg.k + 1 - 4 * static_cast<int>(a)) * g.pow(static_cast<int>(a));
        at_zero.push_back(w[0]);
    }
    rows.push_back(at_inf);
    rows.push_back(at_zero);
    // the cusp 1/2 is automatic: every product has a positive power of theta
    return combine(basis, rational_nullspace(rows, basis.size()));
}

QExpansion hecke_Tp2(const QExpansion& f, int p) {
    if (!f.half_integral()) throw DomainError("hecke_Tp2: requires half-integral weight");
    if (p <= 2 || !is_prime(p)) throw DomainError("hecke_Tp2: p must be an odd prime");
    if (f.den() != 1) throw DomainError("hecke_Tp2: requires integral exponents");
    int k = f.k();
    if (k < 1) throw DomainError("hecke_Tp2: requires k >= 1");
    int p2 = p * p;
    int out = f.bound() / p2;
    if (out < 1) throw DomainError("hecke_Tp2: truncation below p^2");
    QExpansion g(out, f.twice_weight(), f.level());
    Rational pk1(big_pow(p, k - 1)), p2k1(big_pow(p, 2 * k - 1));
    long long s = k % 2 == 0 ? 1 : -1;
    for (int n = 0; n <= out; ++n) {
        Rational b = f[p2 * n];
        if (n % p != 0) b += pk1 * legendre(s * n, p) * f[n];
        if (n % p2 == 0) b += p2k1 * f[n / p2];
        g[n] = b;
    }
    return g;
}

Cyclotomic::Cyclotomic(int M) : M_(M) {
    if (M < 1) throw DomainError("Cyclotomic: order must be positive");
    c_.assign(cyclotomic_poly(M).size() - 1, Rational(0));
}

Cyclotomic Cyclotomic::root(int M, long long j, const Rational& r) {
    Cyclotomic z(M);
    long long e = ((j % M) + M) % M;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly[static_cast<std::size_t>(e)] = r;
    z.reduce(poly);
    return z;
}

Cyclotomic Cyclotomic::rational(const Rational& r) { return root(1, 0, r); }

void Cyclotomic::reduce(std::vector<Rational> poly) {
    std::vector<Rational> phi = cyclotomic_poly(M_);
    std::size_t d = phi.size() - 1;
    for (std::size_t i = poly.size(); i-- > d;) {
        Rational lead = poly[i];
        if (lead == 0) continue;
        for (std::size_t j = 0; j <= d; ++j) poly[i - d + j] -= lead * phi[j];
    }
    poly.resize(d, Rational(0));
    c_ = poly;
}

Cyclotomic Cyclotomic::lifted(int L) const {
    if (L % M_) throw DomainError("Cyclotomic::lifted: order must divide the target");
    if (L == M_) return *this;
    int step = L / M_;
    std::vector<Rational> poly(c_.size() * static_cast<std::size_t>(step) + 1, Rational(0));
    for (std::size_t j = 0; j < c_.size(); ++j) poly[j * static_cast<std::size_t>(step)] = c_[j];
    Cyclotomic z(L);
    z.reduce(poly);
    return z;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    int L = lcm_int(M_, o.M_);
    Cyclotomic a = lifted(L), b = o.lifted(L);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    int L = lcm_int(M_, o.M_);
    Cyclotomic a = lifted(L), b = o.lifted(L);
    std::vector<Rational> poly(a.c_.size() + b.c_.size(), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) poly[i + j] += a.c_[i] * b.c_[j];
    Cyclotomic z(L);
    z.reduce(poly);
    return z;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic z = *this;
    for (Rational& x : z.c_) x *= r;
    return z;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    int L = lcm_int(M_, o.M_);
    return lifted(L).c_ == o.lifted(L).c_;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational Cyclotomic::rational_part() const {
    if (!is_rational()) throw DomainError("Cyclotomic: value is not rational");
    return c_[0];
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> acc = 0.0;
    for (std::size_t j = 0; j < c_.size(); ++j)
        acc += c_[j].convert_to<double>() * std::polar(1.0, 2 * M_PI * static_cast<double>(j) / M_);
    return acc;
}

CycloExpansion CycloExpansion::from(const QExpansion& f) {
    CycloExpansion e{f.den(), f.twice_weight(), {}};
    for (int n = 0; n <= f.bound(); ++n) e.c.push_back(Cyclotomic::rational(f[n]));
    return e;
}

QExpansion CycloExpansion::to_rational() const {
    QExpansion f(static_cast<int>(c.size()) - 1, twice_weight, 4, den);
    for (std::size_t n = 0; n < c.size(); ++n) f[static_cast<int>(n)] = c[n].rational_part();
    return f;
}

bool CycloExpansion::operator==(const CycloExpansion& o) const {
    if (den != o.den || c.size() != o.c.size()) return false;
    for (std::size_t n = 0; n < c.size(); ++n)
        if (!(c[n] == o.c[n])) return false;
    return true;
}

CycloExpansion fourier_translate(const CycloExpansion& f, const Rational& x) {
    CycloExpansion g = f;
    BigInt dx = denominator(x), nx = numerator(x);
    if (dx * f.den > 1 << 20) throw DomainError("fourier_translate: denominator too large");
    int R = static_cast<int>(dx) * f.den;
    for (std::size_t n = 0; n < g.c.size(); ++n) {
        BigInt j = (nx * static_cast<long long>(n)) % R;
        g.c[n] = g.c[n] * Cyclotomic::root(R, static_cast<long long>(j));
    }
    return g;
}

CycloExpansion fourier_translate(const QExpansion& f, const Rational& x) {
    return fourier_translate(CycloExpansion::from(f), x);
}

ScaledExpansion scaling_translate(const QExpansion& f, const Rational& a) {
    if (a <= 0) throw DomainError("scaling_translate: a must be a positive rational");
    BigInt u = numerator(a), v = denominator(a);
    if (u * u * f.den() > 1 << 20 || (f.bound() + 1) * v * v > 1 << 20)
        throw DomainError("scaling_translate: expansion too large");
    int u2 = static_cast<int>(u * u), v2 = static_cast<int>(v * v);
    QExpansion g(f.bound() * v2, f.twice_weight(), f.level(), f.den() * u2);
    int w = f.twice_weight() / 2;  // k for weight k + 1/2, w for weight w
    Rational scale = 1;
    for (int i = 0; i < w; ++i) scale /= a;
    for (int n = 0; n <= f.bound(); ++n) g[n * v2] = f[n] * scale;
    Rational radicand = f.half_integral() ? Rational(1) / a : Rational(1);
    return {g, radicand};
}

std::vector<QExpansion> lambda_components(const QExpansion& f, const GlobalConfig& cfg) {
    cfg.validate();
    CycloExpansion g = CycloExpansion::from(f.dilated_down(4));
    std::vector<QExpansion> out;
    for (int lam : {0, 1}) {
        CycloExpansion acc = fourier_translate(g, Rational(0));
        for (Cyclotomic& z : acc.c) z = Cyclotomic::rational(0);
        for (int t = 0; t < 4; ++t) {
            CycloExpansion tr = fourier_translate(g, Rational(cfg.f * t));
            Cyclotomic w = Cyclotomic::root(4, -lam * lam * t, Rational(1, 4));
            for (std::size_t n = 0; n < acc.c.size(); ++n) acc.c[n] = acc.c[n] + tr.c[n] * w;
        }
        out.push_back(acc.to_rational());
    }
    return out;
}

bool lambda_identity_holds(const QExpansion& f, const GlobalConfig& cfg) {
    std::vector<QExpansion> comps = lambda_components(f, cfg);
    return comps[0] + comps[1] == f.dilated_down(4);
}

int dim_level_one(int w) {
    if (w < 0 || w % 2) return 0;
    return w % 12 == 2 ? w / 12 : w / 12 + 1;
}

ShimuraReport shimura_eigen_check(const GlobalConfig& cfg, int p) {
    cfg.validate();
    if (cfg.k != 6) throw DomainError("shimura_eigen_check: only k = 6 (weight 12) is supported");
    if (cfg.truncation < p * p * 20) throw InconclusiveError("shimura_eigen_check: truncation below 20 p^2");
    ShimuraReport r;
    std::vector<QExpansion> cusp = cusp_plus_subspace(cfg);
    if (cusp.size() != 1) {
        r.detail = "cusp plus subspace has dimension " + std::to_string(cusp.size());
        return r;
    }
    QExpansion f = cusp[0];
    QExpansion g = hecke_Tp2(f, p);
    int n0 = 1;
    while (n0 <= g.bound() && f[n0] == 0) ++n0;
    if (n0 > g.bound()) {
        r.detail = "no nonzero coefficient within the image bound";
        return r;
    }
    r.eigenvalue = g[n0] / f[n0];
    r.tau = ramanujan_delta(p)[p];
    bool eigen = g == f.truncated(g.bound()) * r.eigenvalue;
    r.pass = eigen && r.eigenvalue == r.tau;
    std::ostringstream os;
    os << "T(" << p * p << ") eigenvalue " << rational_str(r.eigenvalue) << ", tau(" << p << ") = " << rational_str(r.tau)
       << (eigen ? "" : ", image is not proportional");
    r.detail = os.str();
    return r;
}

}  // namespace metaplus
