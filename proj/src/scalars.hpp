#pragma once
/**
 * @file scalars.hpp
 * @brief Exact scalar arithmetic: arbitrary-precision rationals and
 *        elements of cyclotomic fields Q(zeta_N).
 *
 * Background:
 *  - Q(zeta_N) is the splitting field of x^N - 1; as a Q-vector space it
 *    has basis {zeta_N^j : 0 <= j < phi(N)} where phi is Euler's totient
 *    and zeta_N = exp(2*pi*i/N).
 *  - An element is stored as its representative polynomial reduced modulo
 *    the N-th cyclotomic polynomial Phi_N (degree phi(N), monic, integer
 *    coefficients). The representation at a fixed order is canonical:
 *    two elements of the same order are equal iff their coefficient
 *    vectors coincide.
 *  - Mixed-order arithmetic embeds both operands into Q(zeta_M) with
 *    M = lcm of the orders, using zeta_N = zeta_M^(M/N).
 *  - Inverses are computed with the extended Euclidean algorithm in Q[x]
 *    against Phi_N (which is irreducible over Q, so every nonzero
 *    residue is a unit).
 *
 * All operations are exact; `approximate()` is the only lossy map.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace twochar {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" (or "p" for integers) rendering; denominator > 0.
std::string rational_to_string(const Rational& r);

/// Inverse of rational_to_string; accepts optional sign and "p/q".
Rational rational_from_string(const std::string& text);

long euler_phi(long n);
std::vector<long> divisors(long n);

class Cyclotomic {
public:
    /// Zero of Q = Q(zeta_1).
    Cyclotomic();

    /// Rational constant (order 1).
    explicit Cyclotomic(const Rational& value);

    /// Element of Q(zeta_order) with the given phi(order) coefficients.
    Cyclotomic(long order, std::vector<Rational> coefficients);

    static Cyclotomic zero();
    static Cyclotomic one();

    /// zeta_N^k; (N, k mod N) is reduced by their gcd so the stored order
    /// is the true order of the root of unity.
    static Cyclotomic root_of_unity(long N, long k);

    long order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeff_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;

    /// The value as a rational; throws validation_error when irrational.
    Rational rational_value() const;

    /// Image under Q(zeta_order) -> Q(zeta_M); requires order | M.
    Cyclotomic embedded(long M) const;

    /// Equivalent element of the smallest cyclotomic subfield Q(zeta_d),
    /// d | order, that contains it. Used for canonical printing/serialization.
    Cyclotomic reduced_order() const;

    Cyclotomic operator-() const;
    Cyclotomic inverse() const;

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& b);
    Cyclotomic& operator-=(const Cyclotomic& b);
    Cyclotomic& operator*=(const Cyclotomic& b);

    bool operator==(const Cyclotomic& b) const;
    bool operator!=(const Cyclotomic& b) const { return !(*this == b); }

    /// (real, imaginary) parts as doubles.
    std::pair<double, double> approximate() const;

    /// Deterministic human-readable form, e.g. "1/2 - z3^2" (z3 = zeta_3),
    /// always rendered at the minimal order.
    std::string to_string() const;

    /// Monic Phi_N as ascending integer coefficients (cached).
    static const std::vector<Integer>& cyclotomic_polynomial(long N);

private:
    long order_;
    std::vector<Rational> coeff_;
};

/// Free-function aliases used throughout the library.
inline Cyclotomic root_of_unity(long N, long k) { return Cyclotomic::root_of_unity(N, k); }
std::pair<double, double> approximate_complex(const Cyclotomic& x);

} // namespace twochar
