#include "equidist/decimal.hpp"

namespace equidist {

namespace {

Int pow10(unsigned long k) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, k);
    return p;
}

// Truncated quotient toward zero.
Int tdiv(const Int& a, const Int& b) {
    Int q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

Decimal::Decimal(Int mant, int scale) : mant_(std::move(mant)), scale_(scale) {
    if (scale < 0) throw std::domain_error("Decimal: negative scale");
}

Decimal Decimal::of_rat(const Rat& x, int scale) {
    return Decimal(tdiv(x.num() * pow10(scale), x.den()), scale);
}

Decimal Decimal::rescaled(int scale) const {
    if (scale == scale_) return *this;
    if (scale > scale_) return Decimal(mant_ * pow10(scale - scale_), scale);
    return Decimal(tdiv(mant_, pow10(scale_ - scale)), scale);
}

Decimal Decimal::abs() const {
    Decimal r = *this;
    mpz_abs(r.mant_.get_mpz_t(), r.mant_.get_mpz_t());
    return r;
}

Decimal operator-(const Decimal& x) { return Decimal(-x.mant_, x.scale_); }

Decimal operator+(const Decimal& x, const Decimal& y) {
    int s = std::max(x.scale_, y.scale_);
    return Decimal(x.rescaled(s).mant_ + y.rescaled(s).mant_, s);
}

Decimal operator-(const Decimal& x, const Decimal& y) { return x + -y; }

Decimal operator*(const Decimal& x, const Decimal& y) {
    int s = std::max(x.scale_, y.scale_);
    return Decimal(x.mant_ * y.mant_, x.scale_ + y.scale_).rescaled(s);
}

Decimal Decimal::div(const Decimal& o, int scale) const {
    if (o.mant_ == 0) throw std::domain_error("Decimal: division by zero");
    // value = mant * 10^(scale + o.scale - this->scale) / o.mant at target scale
    Int num = mant_;
    int shift = scale + o.scale_ - scale_;
    if (shift >= 0)
        num *= pow10(shift);
    else
        num = tdiv(num, pow10(-shift));
    return Decimal(tdiv(num, o.mant_), scale);
}

Decimal Decimal::sqrt(int scale) const {
    if (sgn() < 0) throw std::domain_error("Decimal: sqrt of negative value");
    // floor(sqrt(mant * 10^(2*scale - this->scale)))
    Int m = mant_;
    int shift = 2 * scale - scale_;
    if (shift >= 0)
        m *= pow10(shift);
    else
        m = tdiv(m, pow10(-shift));
    Int r;
    mpz_sqrt(r.get_mpz_t(), m.get_mpz_t());
    return Decimal(std::move(r), scale);
}

bool operator<(const Decimal& x, const Decimal& y) {
    int s = std::max(x.scale_, y.scale_);
    return x.rescaled(s).mant_ < y.rescaled(s).mant_;
}

bool operator==(const Decimal& x, const Decimal& y) {
    int s = std::max(x.scale_, y.scale_);
    return x.rescaled(s).mant_ == y.rescaled(s).mant_;
}

std::string Decimal::str() const {
    Int a;
    mpz_abs(a.get_mpz_t(), mant_.get_mpz_t());
    std::string digits = a.get_str();
    if (static_cast<int>(digits.size()) <= scale_)
        digits.insert(0, scale_ + 1 - digits.size(), '0');
    std::string out;
    if (sgn() < 0) out += '-';
    out += digits.substr(0, digits.size() - scale_);
    if (scale_ > 0) {
        out += '.';
        out += digits.substr(digits.size() - scale_);
    }
    return out;
}

std::string Decimal::str(int digits) const { return rescaled(digits).str(); }

Decimal eval(const Rat& x, int scale) { return Decimal::of_rat(x, scale); }

Decimal eval(const QuadExt& x, int scale) {
    if (x.is_rational()) return Decimal::of_rat(x.rational_part(), scale);
    // Work with enough guard digits that the b*sqrt(d) product error stays
    // below half an output ulp: err <= (|b| + sqrt(d) + 2) * 10^-guard.
    int guard = scale + 4;
    Int bound = x.surd_coeff().num();
    mpz_abs(bound.get_mpz_t(), bound.get_mpz_t());
    bound = tdiv(bound, x.surd_coeff().den()) + 2;
    Int sd;
    mpz_sqrt(sd.get_mpz_t(), x.radicand().get_mpz_t());
    bound += sd;
    guard += static_cast<int>(bound.get_str().size());
    Decimal root = Decimal::of_int(x.radicand(), guard).sqrt(guard);
    Decimal r = Decimal::of_rat(x.rational_part(), guard) +
                Decimal::of_rat(x.surd_coeff(), guard) * root;
    return r.rescaled(scale);
}

}  // namespace equidist
