#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace equidist {

/// Arbitrary-precision signed integer.
using Int = mpz_class;

bool fits_int64(const Int& n);
long long to_int64(const Int& n);

/// Canonical rational number.
///
/// Invariants: gcd(|num|, den) = 1 and den >= 1 at all times; zero is 0/1.
/// Equality is structural, so canonically equal values are bit-equal, which
/// keeps serialized certificates reproducible.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(int v) : num_(v), den_(1) {}
    Rat(long v) : num_(v), den_(1) {}
    Rat(long long v) : num_(static_cast<long>(v)), den_(1) {}
    Rat(const Int& v) : num_(v), den_(1) {}
    Rat(Int num, Int den);
    Rat(int num, int den) : Rat(Int(num), Int(den)) {}

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on bad input.
    static Rat parse(const std::string& text);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sgn() const { return mpz_sgn(num_.get_mpz_t()); }

    Rat abs() const;
    Rat square() const { return *this * *this; }
    Rat reciprocal() const;  // throws on zero

    friend Rat operator-(const Rat& x);
    friend Rat operator+(const Rat& x, const Rat& y);
    friend Rat operator-(const Rat& x, const Rat& y);
    friend Rat operator*(const Rat& x, const Rat& y);
    friend Rat operator/(const Rat& x, const Rat& y);  // throws on zero divisor

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    friend bool operator==(const Rat& x, const Rat& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rat& x, const Rat& y) { return !(x == y); }
    friend bool operator<(const Rat& x, const Rat& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const Rat& x, const Rat& y) { return y < x; }
    friend bool operator<=(const Rat& x, const Rat& y) { return !(y < x); }
    friend bool operator>=(const Rat& x, const Rat& y) { return !(x < y); }

    /// "p" when integral, "p/q" otherwise.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

private:
    void canonicalize();

    Int num_;
    Int den_;  // always >= 1
};

enum class Sign { negative = -1, zero = 0, positive = 1 };

/// Exact element a + b*sqrt(d) of a real quadratic extension of the rationals.
///
/// Canonical form: d is square-free and d >= 2 whenever b != 0; pure
/// rationals always carry d = 1, so values arriving from different code
/// paths compare equal componentwise.
class QuadExt {
public:
    QuadExt() : a_(0), b_(0), d_(1) {}
    QuadExt(Rat a) : a_(std::move(a)), b_(0), d_(1) {}
    QuadExt(const Int& a) : a_(a), b_(0), d_(1) {}
    QuadExt(int a) : a_(a), b_(0), d_(1) {}

    /// Builds a + b*sqrt(d) and canonicalizes: square factors of d move into
    /// b, and sqrt(1) collapses into the rational part. d must be >= 0.
    QuadExt(Rat a, Rat b, const Int& d);

    const Rat& rational_part() const { return a_; }
    const Rat& surd_coeff() const { return b_; }
    const Int& radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    QuadExt square() const { return *this * *this; }

    friend QuadExt operator-(const QuadExt& x);
    friend QuadExt operator+(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y);
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y);

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadExt& x, const QuadExt& y) { return !(x == y); }

    /// "A + B*sqrt(D)" with canonical spacing; bare "A" for rationals.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

private:
    Rat a_;
    Rat b_;
    Int d_;
};

/// n = s^2 * q with q square-free; n must be >= 1.
std::pair<Int, Int> squarefree_decompose(const Int& n);

/// The nonnegative rational square root of x, if one exists.
std::optional<Rat> rational_sqrt(const Rat& x);

/// sqrt(x) = coeff * sqrt(radicand) with radicand square-free (1 when sqrt(x)
/// is rational) and coeff >= 0; x must be >= 0.
std::pair<Rat, Int> sqrt_as_surd(const Rat& x);

/// Exact sign of a + b*sqrt(d), decided by comparing a^2 against b^2*d with
/// case analysis on the signs of a and b. No floating point: the sign of
/// alpha - sqrt(beta) gates correctness-critical branches downstream.
Sign sign_of(const QuadExt& x);

inline Sign sign_of(const Rat& x) {
    return x.sgn() < 0 ? Sign::negative : (x.sgn() > 0 ? Sign::positive : Sign::zero);
}

}  // namespace equidist
