#include "equidist/exactnum.hpp"

#include "equidist/numtheory.hpp"

namespace equidist {

bool fits_int64(const Int& n) {
    return n.fits_slong_p() || (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63);
}

long long to_int64(const Int& n) {
    if (!fits_int64(n)) throw std::overflow_error("integer does not fit in 64 bits");
    return mpz_get_si(n.get_mpz_t());
}

Rat::Rat(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    canonicalize();
}

void Rat::canonicalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g;
    mpz_gcd(g.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    auto parse_int = [](const std::string& s) {
        if (s.empty()) throw std::invalid_argument("Rat: empty integer");
        size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("Rat: sign without digits");
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                throw std::invalid_argument("Rat: invalid digit in \"" + s + "\"");
        return Int(s, 10);
    };
    if (slash == std::string::npos) return Rat(parse_int(text));
    return Rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rat Rat::abs() const {
    Rat r = *this;
    mpz_abs(r.num_.get_mpz_t(), r.num_.get_mpz_t());
    return r;
}

Rat Rat::reciprocal() const {
    if (is_zero()) throw std::domain_error("Rat: reciprocal of zero");
    return Rat(den_, num_);
}

Rat operator-(const Rat& x) {
    Rat r = x;
    r.num_ = -r.num_;
    return r;
}

Rat operator+(const Rat& x, const Rat& y) {
    return Rat(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

Rat operator-(const Rat& x, const Rat& y) {
    return Rat(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

Rat operator*(const Rat& x, const Rat& y) {
    return Rat(x.num_ * y.num_, x.den_ * y.den_);
}

Rat operator/(const Rat& x, const Rat& y) {
    if (y.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(x.num_ * y.den_, x.den_ * y.num_);
}

std::string Rat::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

QuadExt::QuadExt(Rat a, Rat b, const Int& d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw std::domain_error("QuadExt: negative radicand");
    if (b_.is_zero() || d_ == 0) {
        if (d_ == 0) b_ = Rat(0);
        d_ = 1;
        return;
    }
    if (d_ == 1) {
        a_ += b_;
        b_ = Rat(0);
        return;
    }
    auto [s, q] = squarefree_decompose(d_);
    if (s != 1) b_ *= Rat(s);
    d_ = q;
    if (d_ == 1) {
        a_ += b_;
        b_ = Rat(0);
    }
}

QuadExt operator-(const QuadExt& x) {
    QuadExt r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

namespace {

// Shared radicand for a binary operation; pure rationals adapt to the other
// operand's field.
const Int& common_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.is_rational()) return y.radicand();
    if (y.is_rational()) return x.radicand();
    if (x.radicand() != y.radicand())
        throw std::domain_error("QuadExt: radicand mismatch (" + x.radicand().get_str() +
                                " vs " + y.radicand().get_str() + ")");
    return x.radicand();
}

}  // namespace

QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    const Int& d = common_radicand(x, y);
    return QuadExt(x.rational_part() + y.rational_part(), x.surd_coeff() + y.surd_coeff(), d);
}

QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    const Int& d = common_radicand(x, y);
    return QuadExt(x.rational_part() - y.rational_part(), x.surd_coeff() - y.surd_coeff(), d);
}

QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    const Int& d = common_radicand(x, y);
    Rat a = x.rational_part() * y.rational_part() + x.surd_coeff() * y.surd_coeff() * Rat(d);
    Rat b = x.rational_part() * y.surd_coeff() + x.surd_coeff() * y.rational_part();
    return QuadExt(std::move(a), std::move(b), d);
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string s = a_.str();
    s += b_.sgn() < 0 ? " - " : " + ";
    Rat babs = b_.abs();
    if (babs != Rat(1)) s += babs.str() + "*";
    s += "sqrt(" + d_.get_str() + ")";
    return s;
}

std::pair<Int, Int> squarefree_decompose(const Int& n) {
    if (n < 1) throw std::domain_error("squarefree_decompose: n must be >= 1");
    if (n == 1) return {Int(1), Int(1)};
    Int s = 1, q = 1;
    for (const auto& [p, e] : factorize(n)) {
        if (e % 2 == 1) q *= p;
        if (e / 2 > 0) {
            Int pk;
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
            s *= pk;
        }
    }
    return {s, q};
}

std::optional<Rat> rational_sqrt(const Rat& x) {
    if (x.sgn() < 0) return std::nullopt;
    if (x.is_zero()) return Rat(0);
    Int rn, rd;
    if (!mpz_perfect_square_p(x.num().get_mpz_t())) return std::nullopt;
    if (!mpz_perfect_square_p(x.den().get_mpz_t())) return std::nullopt;
    mpz_sqrt(rn.get_mpz_t(), x.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), x.den().get_mpz_t());
    return Rat(rn, rd);
}

std::pair<Rat, Int> sqrt_as_surd(const Rat& x) {
    if (x.sgn() < 0) throw std::domain_error("sqrt_as_surd: negative argument");
    if (x.is_zero()) return {Rat(0), Int(1)};
    // sqrt(p/q) = sqrt(p*q)/q
    auto [s, k] = squarefree_decompose(x.num() * x.den());
    return {Rat(s, x.den()), k};
}

Sign sign_of(const QuadExt& x) {
    const int sa = x.rational_part().sgn();
    const int sb = x.surd_coeff().sgn();
    if (sb == 0) return sa < 0 ? Sign::negative : (sa > 0 ? Sign::positive : Sign::zero);
    if (sa == 0) return sb < 0 ? Sign::negative : Sign::positive;
    if (sa > 0 && sb > 0) return Sign::positive;
    if (sa < 0 && sb < 0) return Sign::negative;
    // Opposite signs: |a| vs |b|*sqrt(d), compare a^2 against b^2*d.
    Rat lhs = x.rational_part().square();
    Rat rhs = x.surd_coeff().square() * Rat(x.radicand());
    if (lhs == rhs) return Sign::zero;  // impossible for irrational sqrt(d), kept for safety
    const bool rational_dominates = lhs > rhs;
    if (sa > 0) return rational_dominates ? Sign::positive : Sign::negative;
    return rational_dominates ? Sign::negative : Sign::positive;
}

}  // namespace equidist
