#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "phasestar/errors.hpp"

namespace phasestar {

/// Arbitrary-precision rational, kept in lowest terms with positive denominator
/// by the backing type.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Element of Q(i): re + im*i with exact rational parts.
///
/// The zero element is the unique value with both parts zero; cpp_rational
/// guarantees reduced fractions and positive denominators, so structural
/// equality is semantic equality.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}
    GaussianRational(long n) : re(n) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }
    static GaussianRational of(long num, long den) { return {Rational(num) / den}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    bool is_one() const { return re == 1 && im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// re^2 + im^2; zero only for the zero element.
    Rational norm() const { return re * re + im * im; }

    GaussianRational operator-() const { return {-re, -im}; }

    GaussianRational& operator+=(const GaussianRational& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussianRational& operator-=(const GaussianRational& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussianRational& operator*=(const GaussianRational& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussianRational& operator/=(const GaussianRational& o) {
        if (o.is_zero()) throw Error("division by zero in Q(i)");
        Rational n = o.norm();
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

    bool operator==(const GaussianRational&) const = default;
};

/// "n" for integers, "n/d" otherwise; minus sign leads.
std::string rational_to_string(const Rational& r);

/// Standalone canonical form: "0", "3/4", "i", "-2*i", "(1/2 - 3*i)".
std::string to_string(const GaussianRational& c);

} // namespace phasestar
