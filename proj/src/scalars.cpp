#include "metaplus/scalars.hpp"

#include <cmath>
#include <sstream>

namespace metaplus {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Mu8 Mu8::inverse() const {
    if (zero) throw DomainError("Mu8: inverse of zero");
    return zeta(-e);
}

cplx Mu8::to_complex() const {
    if (zero) return {0.0, 0.0};
    return std::polar(1.0, kPi * e / 4.0);
}

std::string Mu8::to_string() const {
    if (zero) return "0";
    return "z8^" + std::to_string(e);
}

Mu8 snap_mu8(cplx z, double tol) {
    Mu8 best = Mu8::one();
    double dist = std::abs(z);
    Mu8 zero{true, 0};
    if (dist < tol) return zero;
    for (int e = 0; e < 8; ++e) {
        double d = std::abs(z - Mu8::zeta(e).to_complex());
        if (d < dist) {
            dist = d;
            best = Mu8::zeta(e);
        }
    }
    if (dist > tol) throw DomainError("snap_mu8: value is not an eighth root of unity");
    return best;
}

void ExactScalar::adopt(int q) {
    if (q_ == 0) q_ = q;
}

ExactScalar ExactScalar::monomial(int q, const Rational& r, int j, int m) {
    ExactScalar out(q);
    j = ((j % 8) + 8) % 8;
    Rational coef = r;
    if (j >= 4) {
        coef = -coef;
        j -= 4;
    }
    int h = ((m % 2) + 2) % 2;
    int k = (m - h) / 2;
    Rational qk(1);
    for (int i = 0; i < std::abs(k); ++i) qk *= q;
    if (k < 0) qk = 1 / qk;
    coef *= qk;
    if (h == 1 && q == 2) {
        // sqrt2 = zeta - zeta^3
        ExactScalar a = monomial(q, coef, j + 1, 0);
        ExactScalar b = monomial(q, -coef, j + 3, 0);
        return a + b;
    }
    out.c_[j][h] = coef;
    return out;
}

ExactScalar ExactScalar::from_mu8(int q, const Mu8& z) {
    if (z.zero) return zero(q);
    return monomial(q, Rational(1), z.e, 0);
}

bool ExactScalar::is_zero() const {
    for (auto& row : c_)
        for (auto& x : row)
            if (x != 0) return false;
    return true;
}

ExactScalar ExactScalar::operator+(const ExactScalar& o) const {
    ExactScalar r = *this;
    r.adopt(o.q_);
    if (o.q_ != 0 && r.q_ != o.q_) throw DomainError("ExactScalar: mismatched q");
    for (int j = 0; j < 4; ++j)
        for (int h = 0; h < 2; ++h) r.c_[j][h] += o.c_[j][h];
    return r;
}

ExactScalar ExactScalar::operator-() const {
    ExactScalar r = *this;
    for (auto& row : r.c_)
        for (auto& x : row) x = -x;
    return r;
}

ExactScalar ExactScalar::operator-(const ExactScalar& o) const { return *this + (-o); }

ExactScalar ExactScalar::operator*(const ExactScalar& o) const {
    int q = q_ ? q_ : o.q_;
    if (q_ && o.q_ && q_ != o.q_) throw DomainError("ExactScalar: mismatched q");
    ExactScalar r(q);
    for (int j1 = 0; j1 < 4; ++j1)
        for (int h1 = 0; h1 < 2; ++h1) {
            if (c_[j1][h1] == 0) continue;
            for (int j2 = 0; j2 < 4; ++j2)
                for (int h2 = 0; h2 < 2; ++h2) {
                    if (o.c_[j2][h2] == 0) continue;
                    Rational v = c_[j1][h1] * o.c_[j2][h2];
                    int j = j1 + j2;
                    if (j >= 4) {
                        j -= 4;
                        v = -v;
                    }
                    int h = h1 + h2;
                    if (h == 2) {
                        v *= q;
                        h = 0;
                    }
                    r.c_[j][h] += v;
                }
        }
    return r;
}

ExactScalar ExactScalar::operator*(const Mu8& z) const {
    if (z.zero) return zero(q_);
    ExactScalar r(q_);
    for (int j = 0; j < 4; ++j)
        for (int h = 0; h < 2; ++h) {
            int jj = j + z.e;
            Rational v = c_[j][h];
            while (jj >= 4) {
                jj -= 4;
                v = -v;
            }
            r.c_[jj][h] += v;
        }
    return r;
}

ExactScalar ExactScalar::operator*(const Rational& s) const {
    ExactScalar r = *this;
    for (auto& row : r.c_)
        for (auto& x : row) x *= s;
    return r;
}

bool ExactScalar::operator==(const ExactScalar& o) const { return (*this - o).is_zero(); }

ExactScalar ExactScalar::conj() const {
    // zeta^j -> zeta^{-j} = -zeta^{4-j}
    ExactScalar r(q_);
    for (int h = 0; h < 2; ++h) {
        r.c_[0][h] += c_[0][h];
        for (int j = 1; j < 4; ++j) r.c_[4 - j][h] -= c_[j][h];
    }
    return r;
}

cplx ExactScalar::to_complex() const {
    cplx acc{0, 0};
    double sq = std::sqrt(static_cast<double>(q_ ? q_ : 1));
    for (int j = 0; j < 4; ++j)
        for (int h = 0; h < 2; ++h) {
            if (c_[j][h] == 0) continue;
            double v = c_[j][h].convert_to<double>() * (h ? sq : 1.0);
            acc += v * std::polar(1.0, kPi * j / 4.0);
        }
    return acc;
}

std::string ExactScalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int h = 0; h < 2; ++h)
        for (int j = 0; j < 4; ++j) {
            if (c_[j][h] == 0) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[j][h] << ")";
            if (j) os << "*z8^" << j;
            if (h) os << "*sqrt(" << q_ << ")";
        }
    if (first) os << "0";
    return os.str();
}

}  // namespace metaplus
