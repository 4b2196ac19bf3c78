#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mubforge/rational.hpp"

namespace mubforge {

/// An exact element of the cyclotomic field Q(zeta_n), stored in the power
/// basis 1, zeta, ..., zeta^{phi(n)-1} reduced modulo the n-th cyclotomic
/// polynomial. Supported conductors are 4 and odd primes, which is exactly
/// what the constructions here need: Q(i) in characteristic 2 and Q(zeta_p)
/// in odd characteristic p.
///
/// The reduced power-basis form is unique, so equality is coefficient-wise
/// and every verification predicate downstream is an exact comparison.
class CyclotomicNumber {
public:
    /// Zero in Q(zeta_n).
    explicit CyclotomicNumber(int conductor);
    /// The rational r viewed inside Q(zeta_n).
    CyclotomicNumber(int conductor, const Rational& r);
    /// From an explicit coefficient vector of length phi(conductor).
    CyclotomicNumber(int conductor, std::vector<Rational> coeffs);

    static CyclotomicNumber zero(int conductor) { return CyclotomicNumber(conductor); }
    static CyclotomicNumber one(int conductor) { return {conductor, Rational(1)}; }

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    /// True iff the value lies in Q (all non-constant coordinates vanish).
    bool is_rational() const;
    /// The constant coordinate; meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    CyclotomicNumber operator-() const;
    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);

    /// Exact multiplicative inverse. Throws std::domain_error on zero.
    CyclotomicNumber inverse() const;

    /// Galois automorphism zeta -> zeta^{n-1}; complex conjugation under any
    /// embedding sending zeta to a primitive n-th root of unity.
    CyclotomicNumber conjugate() const;

    /// x * conjugate(x). Always fixed by conjugate(), i.e. real.
    CyclotomicNumber norm_squared() const;

    bool equals_rational(const Rational& r) const;

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return !(a == b);
    }

    /// Numerical evaluation at zeta_n = exp(2*pi*i/n). Export only; never
    /// used inside a verification path.
    std::complex<double> embed() const;

    /// Compact human-readable form: "1/2-1/2*i" for conductor 4,
    /// polynomial in z otherwise.
    std::string str() const;

private:
    void require_same_conductor(const CyclotomicNumber& o) const;
    // Adds c * zeta^e (0 <= e < n) onto the reduced coefficient vector.
    void accumulate_power(long e, const Rational& c);

    int conductor_;
    std::vector<Rational> coeffs_;
};

/// phi(n) for a supported conductor (phi(4)=2, phi(p)=p-1).
int cyclotomic_degree(int conductor);

/// True for 4 and odd primes; the only conductors this engine supports.
bool conductor_supported(int conductor);

/// zeta_n^k reduced to the power basis. k may be any integer.
CyclotomicNumber root_of_unity(int conductor, long k);

} // namespace mubforge
