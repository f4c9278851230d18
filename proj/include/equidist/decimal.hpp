#pragma once

#include "equidist/exactnum.hpp"

namespace equidist {

/// Fixed-point decimal: value = mant * 10^-scale, mant an exact integer.
///
/// Every operation truncates toward zero at the result scale, so each step
/// contributes strictly less than one ulp (10^-scale) of error. That makes
/// end-to-end error bounds a matter of counting operations, which is how the
/// witness renderer certifies its output digits.
class Decimal {
public:
    Decimal() : mant_(0), scale_(0) {}
    Decimal(Int mant, int scale);

    static Decimal of_rat(const Rat& x, int scale);
    static Decimal of_int(const Int& x, int scale) { return of_rat(Rat(x), scale); }

    const Int& mantissa() const { return mant_; }
    int scale() const { return scale_; }
    int sgn() const { return mpz_sgn(mant_.get_mpz_t()); }

    Decimal rescaled(int scale) const;
    Decimal abs() const;

    friend Decimal operator-(const Decimal& x);
    friend Decimal operator+(const Decimal& x, const Decimal& y);
    friend Decimal operator-(const Decimal& x, const Decimal& y);
    friend Decimal operator*(const Decimal& x, const Decimal& y);

    Decimal div(const Decimal& o, int scale) const;

    /// Floor square root at the given scale; requires a nonnegative value.
    Decimal sqrt(int scale) const;

    friend bool operator<(const Decimal& x, const Decimal& y);
    friend bool operator==(const Decimal& x, const Decimal& y);
    friend bool operator<=(const Decimal& x, const Decimal& y) { return !(y < x); }

    /// Plain decimal string with exactly scale() fractional digits.
    std::string str() const;
    /// Truncated to `digits` fractional digits.
    std::string str(int digits) const;

private:
    Int mant_;
    int scale_;
};

/// Evaluates a + b*sqrt(d) numerically; absolute error < 2*10^-scale.
Decimal eval(const QuadExt& x, int scale);
Decimal eval(const Rat& x, int scale);

}  // namespace equidist
