#include "mubforge/cyclotomic.hpp"

#include <sstream>
#include <stdexcept>

#include "mubforge/errors.hpp"

namespace mubforge {

namespace {

bool is_odd_prime(int n) {
    if (n < 3 || n % 2 == 0) return false;
    for (int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace

bool conductor_supported(int conductor) {
    return conductor == 4 || is_odd_prime(conductor);
}

int cyclotomic_degree(int conductor) {
    if (conductor == 4) return 2;
    if (is_odd_prime(conductor)) return conductor - 1;
    throw std::invalid_argument("unsupported conductor " + std::to_string(conductor));
}

CyclotomicNumber::CyclotomicNumber(int conductor)
    : conductor_(conductor), coeffs_(cyclotomic_degree(conductor)) {}

CyclotomicNumber::CyclotomicNumber(int conductor, const Rational& r)
    : CyclotomicNumber(conductor) {
    coeffs_[0] = r;
}

CyclotomicNumber::CyclotomicNumber(int conductor, std::vector<Rational> coeffs)
    : conductor_(conductor), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<size_t>(cyclotomic_degree(conductor)))
        throw std::invalid_argument("coefficient vector has wrong length");
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (size_t k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_[k].is_zero()) return false;
    return true;
}

void CyclotomicNumber::require_same_conductor(const CyclotomicNumber& o) const {
    if (conductor_ != o.conductor_)
        throw std::invalid_argument("conductor mismatch: " + std::to_string(conductor_) +
                                    " vs " + std::to_string(o.conductor_));
}

// zeta^e in the power basis: for n = 4, zeta^2 = -1; for n = p prime,
// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
void CyclotomicNumber::accumulate_power(long e, const Rational& c) {
    const int phi = static_cast<int>(coeffs_.size());
    if (e < phi) {
        coeffs_[static_cast<size_t>(e)] += c;
        return;
    }
    if (conductor_ == 4) {
        // e in {2, 3}: zeta^2 = -1, zeta^3 = -zeta.
        coeffs_[static_cast<size_t>(e - 2)] -= c;
        return;
    }
    // e == p - 1 for an odd prime p.
    for (auto& coef : coeffs_) coef -= c;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r(conductor_);
    for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    require_same_conductor(o);
    CyclotomicNumber r(conductor_);
    for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    require_same_conductor(o);
    for (size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    require_same_conductor(o);
    CyclotomicNumber r(conductor_);
    for (size_t k = 0; k < coeffs_.size(); ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    require_same_conductor(o);
    CyclotomicNumber r(conductor_);
    const long n = conductor_;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        for (size_t k = 0; k < o.coeffs_.size(); ++k) {
            if (o.coeffs_[k].is_zero()) continue;
            r.accumulate_power(static_cast<long>(j + k) % n, coeffs_[j] * o.coeffs_[k]);
        }
    }
    return r;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    CyclotomicNumber r(conductor_);
    const long n = conductor_;
    for (size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j].is_zero()) continue;
        r.accumulate_power((static_cast<long>(j) * (n - 1)) % n, coeffs_[j]);
    }
    return r;
}

CyclotomicNumber CyclotomicNumber::norm_squared() const {
    return *this * conjugate();
}

// Inverse by solving M y = e_0 where M is the matrix of multiplication by
// *this in the power basis. phi(n) <= 30 here, so a plain exact Gaussian
// elimination is plenty.
CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CyclotomicNumber: inverse of zero");
    const int phi = static_cast<int>(coeffs_.size());

    // Column j of M holds the coordinates of (*this) * zeta^j.
    std::vector<std::vector<Rational>> m(phi, std::vector<Rational>(phi + 1));
    for (int j = 0; j < phi; ++j) {
        CyclotomicNumber col = *this * root_of_unity(conductor_, j);
        for (int i = 0; i < phi; ++i) m[i][j] = col.coeffs_[static_cast<size_t>(i)];
    }
    m[0][phi] = Rational(1); // right-hand side e_0

    for (int col = 0, row = 0; col < phi && row < phi; ++col, ++row) {
        int pivot = -1;
        for (int i = row; i < phi; ++i)
            if (!m[i][col].is_zero()) { pivot = i; break; }
        if (pivot < 0) throw std::domain_error("CyclotomicNumber: singular multiplication map");
        std::swap(m[row], m[static_cast<size_t>(pivot)]);
        const Rational inv = m[row][col].inverse();
        for (int j = col; j <= phi; ++j) m[row][j] = m[row][j] * inv;
        for (int i = 0; i < phi; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            const Rational f = m[i][col];
            for (int j = col; j <= phi; ++j) m[i][j] = m[i][j] - f * m[row][j];
        }
    }

    std::vector<Rational> y(static_cast<size_t>(phi));
    for (int i = 0; i < phi; ++i) y[static_cast<size_t>(i)] = m[i][phi];
    return CyclotomicNumber(conductor_, std::move(y));
}

bool CyclotomicNumber::equals_rational(const Rational& r) const {
    if (coeffs_[0] != r) return false;
    return is_rational();
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

std::complex<double> CyclotomicNumber::embed() const {
    static const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        const double angle = two_pi * static_cast<double>(k) / conductor_;
        acc += coeffs_[k].to_double() * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return acc;
}

std::string CyclotomicNumber::str() const {
    const char* sym = conductor_ == 4 ? "i" : "z";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        const std::string c = coeffs_[k].str();
        if (!first && coeffs_[k].sign() > 0) os << "+";
        if (k == 0) {
            os << c;
        } else {
            if (c == "1") { }
            else if (c == "-1") os << "-";
            else os << c << "*";
            os << sym;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    if (first) return "0";
    return os.str();
}

CyclotomicNumber root_of_unity(int conductor, long k) {
    long e = k % conductor;
    if (e < 0) e += conductor;
    std::vector<Rational> coeffs(static_cast<size_t>(cyclotomic_degree(conductor)));
    const int phi = static_cast<int>(coeffs.size());
    if (e < phi) {
        coeffs[static_cast<size_t>(e)] = Rational(1);
    } else if (conductor == 4) {
        coeffs[static_cast<size_t>(e - 2)] = Rational(-1);
    } else {
        for (auto& c : coeffs) c = Rational(-1);
    }
    return CyclotomicNumber(conductor, std::move(coeffs));
}

} // namespace mubforge
