#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "kuga/errors.hpp"
#include "kuga/rational.hpp"

namespace kuga {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

using cplx = std::complex<double>;

/// A root of unity e^{2*pi*i*a/k} stored as the reduced exponent a/k in
/// [0, 1). All verdict-bearing arithmetic on roots of unity happens here,
/// exactly; floating point only enters through snap().
class UnityExponent {
  public:
    UnityExponent() = default; // the trivial root, 0/1

    UnityExponent(long long numerator, long long denominator) {
        if (denominator < 1)
            throw std::invalid_argument("UnityExponent: denominator must be >= 1");
        long long n = numerator % denominator;
        if (n < 0)
            n += denominator;
        long long g = std::gcd(n, denominator);
        num_ = n / g;
        den_ = denominator / g;
    }

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }

    /// Multiplicative order of the root, i.e. the reduced denominator.
    long long order() const { return den_; }

    bool is_identity() const { return num_ == 0; }

    Rational as_rational() const { return Rational(num_, den_); }

    std::complex<double> value() const {
        return std::polar(1.0, kTwoPi * static_cast<double>(num_) /
                                   static_cast<double>(den_));
    }

    friend UnityExponent multiply(const UnityExponent& a, const UnityExponent& b) {
        long long l = std::lcm(a.den_, b.den_);
        return UnityExponent(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
    }
    UnityExponent operator*(const UnityExponent& o) const {
        return multiply(*this, o);
    }

    /// m-th power, negative m giving inverse powers.
    UnityExponent power(long long m) const {
        long long e = (num_ * m) % den_;
        return UnityExponent(e, den_);
    }
    UnityExponent inverse() const { return power(-1); }

    bool operator==(const UnityExponent& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const UnityExponent& o) const { return !(*this == o); }
    bool operator<(const UnityExponent& o) const {
        return as_rational() < o.as_rational();
    }

    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    long long num_ = 0;
    long long den_ = 1;
};

/// Snap a numeric complex value onto the nearest root of unity of order at
/// most max_order, preferring the smallest denominator among candidates
/// within tol. Rejects values that are not on the unit circle. Throwing here
/// means the acting matrix does not have finite order, or the point being
/// linearized is not actually fixed.
inline UnityExponent snap(std::complex<double> z, long long max_order,
                          double tol = 1e-9) {
    if (max_order < 1)
        throw std::invalid_argument("snap: max_order must be >= 1");
    if (!(tol > 0))
        throw std::invalid_argument("snap: tol must be positive");
    if (std::abs(std::abs(z) - 1.0) > tol)
        throw NotARootOfUnity("snap: |z| deviates from 1 beyond tolerance");
    for (long long k = 1; k <= max_order; ++k) {
        for (long long a = 0; a < k; ++a) {
            if (std::gcd(a, k) != 1)
                continue; // already seen with a smaller denominator
            if (std::abs(z - UnityExponent(a, k).value()) <= tol)
                return UnityExponent(a, k);
        }
    }
    throw NotARootOfUnity("snap: no root of unity of order <= " +
                          std::to_string(max_order) + " within tolerance");
}

/// Tags recording which coordinate block a type slot linearizes.
enum class SlotLabel { base_h2, base_f, base_v, base_torus, fiber };

inline const char* slot_label_name(SlotLabel l) {
    switch (l) {
    case SlotLabel::base_h2:
        return "base-H2";
    case SlotLabel::base_f:
        return "base-F";
    case SlotLabel::base_v:
        return "base-V";
    case SlotLabel::base_torus:
        return "base-torus";
    case SlotLabel::fiber:
        return "fiber";
    }
    return "?";
}

/// The type 1/k(a_1, ..., a_m) of a torsion element acting on a tangent
/// space: an order k and eigenvalue exponents a_j relative to a primitive
/// k-th root of unity.
class SingularityType {
  public:
    SingularityType(long long order, std::vector<long long> exponents,
                    std::vector<SlotLabel> labels = {})
        : order_(order), exponents_(std::move(exponents)),
          labels_(std::move(labels)) {
        if (order_ < 1)
            throw ExponentOutOfRange("SingularityType: order must be >= 1");
        for (long long a : exponents_)
            if (a < 0 || a >= order_)
                throw ExponentOutOfRange(
                    "SingularityType: exponent out of [0, order)");
        if (!labels_.empty() && labels_.size() != exponents_.size())
            throw std::invalid_argument(
                "SingularityType: label count mismatch");
    }

    long long order() const { return order_; }
    const std::vector<long long>& exponents() const { return exponents_; }
    const std::vector<SlotLabel>& labels() const { return labels_; }

    Rational rst_sum() const {
        long long s = 0;
        for (long long a : exponents_)
            s += a;
        return Rational(s, order_);
    }

    /// True iff exactly one exponent is nonzero. The all-zero type is the
    /// identity, not a quasi-reflection.
    bool is_quasi_reflection() const {
        int nonzero = 0;
        for (long long a : exponents_)
            if (a != 0)
                ++nonzero;
        return nonzero == 1;
    }

    bool is_trivial() const {
        for (long long a : exponents_)
            if (a != 0)
                return false;
        return true;
    }

    /// Same type written over a multiple of the current order; used to put
    /// table rows over a common denominator.
    SingularityType rescaled(long long new_order) const {
        if (new_order % order_ != 0)
            throw ExponentOutOfRange(
                "rescaled: new order must be a multiple of the current one");
        long long f = new_order / order_;
        std::vector<long long> exps;
        exps.reserve(exponents_.size());
        for (long long a : exponents_)
            exps.push_back(a * f);
        return SingularityType(new_order, std::move(exps), labels_);
    }

    bool operator==(const SingularityType& o) const {
        return order_ == o.order_ && exponents_ == o.exponents_;
    }

    /// Canonical rendering, e.g. "1/6(4, 5, 0, 5, 0)".
    std::string str() const {
        std::ostringstream os;
        os << "1/" << order_ << "(";
        for (std::size_t i = 0; i < exponents_.size(); ++i) {
            if (i)
                os << ", ";
            os << exponents_[i];
        }
        os << ")";
        return os.str();
    }

  private:
    long long order_;
    std::vector<long long> exponents_;
    std::vector<SlotLabel> labels_;
};

inline Rational rst_sum(const SingularityType& t) { return t.rst_sum(); }
inline bool is_quasi_reflection(const SingularityType& t) {
    return t.is_quasi_reflection();
}

} // namespace kuga
