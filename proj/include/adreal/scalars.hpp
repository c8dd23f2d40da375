#pragma once

// Exact scalars: Q, Q(i) and the rational quaternions.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace adreal {

/// Arbitrary precision rational; gmpxx keeps results in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// a + b i with rational coordinates.
struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(long v) : re(v), im(0) {}
    Gaussian(Rational r) : re(std::move(r)), im(0) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Gaussian unit_i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }
    bool is_imaginary() const { return sgn(re) == 0; }

    Gaussian conj() const { return {re, -im}; }
    /// |z|^2
    Rational norm() const { return re * re + im * im; }
    Gaussian inverse() const;

    Gaussian& operator+=(const Gaussian& o);
    Gaussian& operator-=(const Gaussian& o);
    Gaussian& operator*=(const Gaussian& o);
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const Gaussian& a, const Gaussian& b) { return !(a == b); }
};

/// Total order by (Re, Im); used to make canonical forms comparable.
bool lex_less(const Gaussian& a, const Gaussian& b);

Gaussian pow(Gaussian base, unsigned exp);

Gaussian parse_gaussian(std::string_view text);
std::string to_string(const Gaussian& z);
std::ostream& operator<<(std::ostream& os, const Gaussian& z);

/// a0 + a1 i + a2 j + a3 k with rational coefficients.
struct Quaternion {
    Rational a0;
    Rational a1;
    Rational a2;
    Rational a3;

    Quaternion() = default;
    Quaternion(long v) : a0(v), a1(0), a2(0), a3(0) {}
    Quaternion(Rational r) : a0(std::move(r)), a1(0), a2(0), a3(0) {}
    Quaternion(const Gaussian& z) : a0(z.re), a1(z.im), a2(0), a3(0) {}
    Quaternion(Rational w, Rational x, Rational y, Rational z)
        : a0(std::move(w)), a1(std::move(x)), a2(std::move(y)), a3(std::move(z)) {}

    static Quaternion unit_i() { return {0, 1, 0, 0}; }
    static Quaternion unit_j() { return {0, 0, 1, 0}; }
    static Quaternion unit_k() { return {0, 0, 0, 1}; }

    bool is_zero() const { return sgn(a0) == 0 && sgn(a1) == 0 && sgn(a2) == 0 && sgn(a3) == 0; }
    /// True when the j and k coordinates vanish.
    bool is_complex() const { return sgn(a2) == 0 && sgn(a3) == 0; }

    Quaternion conj() const { return {a0, -a1, -a2, -a3}; }
    /// q * conj(q)
    Rational norm() const { return a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3; }
    Quaternion inverse() const;

    /// (z1, z2) with q = z1 + z2 j.
    std::pair<Gaussian, Gaussian> complex_split() const;
    static Quaternion from_split(const Gaussian& z1, const Gaussian& z2);

    Quaternion& operator+=(const Quaternion& o);
    Quaternion& operator-=(const Quaternion& o);
    Quaternion& operator*=(const Quaternion& o);

    friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
    friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
    friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
    friend Quaternion operator-(const Quaternion& a) { return {-a.a0, -a.a1, -a.a2, -a.a3}; }
    friend bool operator==(const Quaternion& a, const Quaternion& b)
    {
        return a.a0 == b.a0 && a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3;
    }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

inline Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline Quaternion quat_conjugate(const Quaternion& q) { return q.conj(); }
inline std::pair<Gaussian, Gaussian> complex_split(const Quaternion& q) { return q.complex_split(); }

Quaternion parse_quaternion(std::string_view text);
std::string to_string(const Quaternion& q);
std::ostream& operator<<(std::ostream& os, const Quaternion& q);

// Uniform helpers used by the matrix templates.
inline Rational conj(const Rational& q) { return q; }
inline Gaussian conj(const Gaussian& z) { return z.conj(); }
inline Quaternion conj(const Quaternion& q) { return q.conj(); }
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const Gaussian& z) { return z.is_zero(); }
inline bool is_zero(const Quaternion& q) { return q.is_zero(); }

} // namespace adreal
