#include "equidist/theta.hpp"

#include "equidist/numtheory.hpp"

#include <cctype>
#include <cstring>

namespace equidist {

namespace {

ThetaClass canon_rational(const Rat& r, std::size_t at) {
    if (r.sgn() <= 0) throw ParseError("theta must be positive", at);
    return RationalSide{r};
}

// theta = lambda * sqrt(m).
ThetaClass canon_surd(const Rat& lambda, const Rat& m, std::size_t at) {
    if (m.sgn() < 0) throw ParseError("negative radicand", at);
    auto [c, k] = sqrt_as_surd(m);
    Rat lam = lambda * c;
    if (k == 1) return canon_rational(lam, at);
    if (lam.sgn() <= 0) throw ParseError("theta must be positive", at);
    return QuadSurd{lam, k};
}

ThetaClass canon_quartic(const Rat& gamma, const Rat& delta, const Rat& t, std::size_t at);

// theta = mu * sqrt(alpha + coeff*sqrt(m)).
ThetaClass canon_sqrt(const Rat& mu, const Rat& alpha, const Rat& coeff, const Rat& m,
                      std::size_t at) {
    if (m.sgn() < 0) throw ParseError("negative radicand", at);
    auto [c, k] = sqrt_as_surd(m);
    Rat net = coeff * c;  // inner = alpha + net*sqrt(k)
    if (k == 1 || net.is_zero()) return canon_surd(mu, alpha + net, at);
    QuadExt inner(alpha, net, k);
    if (sign_of(inner) != Sign::positive) throw ParseError("theta is not positive", at);
    if (mu.sgn() <= 0) throw ParseError("theta must be positive", at);
    const Rat mu2 = mu.square();
    Rat big_alpha = mu2 * alpha;
    Rat big_beta = mu2.square() * net.square() * Rat(k);
    const int sign = net.sgn();
    if (big_alpha.sgn() > 0) return Biquadratic{big_alpha, sign, big_beta};
    if (big_alpha.is_zero()) return canon_quartic(Rat(0), Rat(1), big_beta, at);
    NonBiquadratic nb;
    nb.form = NonBiquadratic::Form::negative_alpha;
    nb.alpha = big_alpha;
    nb.sign = sign;
    nb.beta = big_beta;
    return nb;
}

// theta = gamma + delta * t^(1/4), t a nonnegative rational.
ThetaClass canon_quartic(const Rat& gamma, const Rat& delta, const Rat& t, std::size_t at) {
    if (delta.is_zero() || t.is_zero()) return canon_rational(gamma, at);
    if (auto r = rational_sqrt(t)) {
        // t^(1/4) = sqrt(r): the value drops to degree <= 2
        if (auto w = rational_sqrt(*r)) return canon_rational(gamma + delta * *w, at);
        if (gamma.is_zero()) return canon_surd(delta, *r, at);
        auto [c, k] = sqrt_as_surd(*r);
        QuadExt theta(gamma, delta * c, k);
        if (sign_of(theta) != Sign::positive) throw ParseError("theta is not positive", at);
        QuadExt sq = theta.square();
        Rat big_beta = sq.surd_coeff().square() * Rat(sq.radicand());
        return Biquadratic{sq.rational_part(), sq.surd_coeff().sgn(), big_beta};
    }
    // genuine quartic surd: check positivity of gamma + delta*t^(1/4)
    bool positive;
    if (gamma.sgn() >= 0 && delta.sgn() > 0) {
        positive = true;
    } else if (gamma.sgn() <= 0 && delta.sgn() < 0) {
        positive = false;
    } else {
        const Rat g4 = gamma.square().square();
        const Rat d4t = delta.square().square() * t;
        positive = gamma.sgn() > 0 ? g4 > d4t : d4t > g4;
    }
    if (!positive) throw ParseError("theta is not positive", at);
    // delta*(p/q)^(1/4) = (delta/q)*(p*q^3)^(1/4); then pull fourth powers out
    Int radical = t.num() * t.den() * t.den() * t.den();
    Rat scale = delta / Rat(t.den());
    Int outside(1), core(1);
    for (const auto& [p, e] : factorize(radical)) {
        Int pk;
        if (e / 4 > 0) {
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 4));
            outside *= pk;
        }
        if (e % 4 > 0) {
            mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e % 4));
            core *= pk;
        }
    }
    NonBiquadratic nb;
    nb.form = gamma.is_zero() ? NonBiquadratic::Form::pure_quartic
                              : NonBiquadratic::Form::quartic_binomial;
    nb.gamma = gamma;
    nb.delta = scale * Rat(outside);
    nb.q = core;
    return nb;
}

class Parser {
public:
    explicit Parser(const std::string& text) : src_(text) {}

    ThetaClass run() {
        ThetaClass out = parse_expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool at_number() {
        skip_ws();
        return pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '-');
    }

    bool try_keyword(const char* kw) {
        skip_ws();
        const std::size_t n = std::strlen(kw);
        if (src_.compare(pos_, n, kw) == 0) {
            pos_ += n;
            return true;
        }
        return false;
    }

    bool at_keyword(const char* kw) {
        skip_ws();
        return src_.compare(pos_, std::strlen(kw), kw) == 0;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool try_char(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Int parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < src_.size() && src_[pos_] == '-') ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected integer");
        }
        return Int(src_.substr(start, pos_ - start), 10);
    }

    Rat parse_rat() {
        Int num = parse_int();
        if (try_char('/')) {
            const std::size_t den_at = pos_;
            Int den = parse_int();
            if (den == 0) throw ParseError("zero denominator", den_at);
            return Rat(std::move(num), std::move(den));
        }
        return Rat(std::move(num));
    }

    // "sqrt" "(" RAT ")" -- the innermost radicand must be rational.
    Rat parse_sqrt_of_rat() {
        if (!try_keyword("sqrt")) {
            if (at_keyword("qroot")) fail("radical nesting too deep: qroot not allowed here");
            fail("expected sqrt");
        }
        expect('(');
        skip_ws();
        if (!at_number()) {
            if (at_keyword("sqrt") || at_keyword("qroot"))
                fail("radical nesting too deep: innermost radicand must be rational");
            fail("expected rational radicand");
        }
        const std::size_t at = pos_;
        Rat m = parse_rat();
        expect(')');
        if (m.sgn() < 0) throw ParseError("negative radicand", at);
        return m;
    }

    // INNER := RAT | [RAT ("+"|"-")] [RAT "*"] "sqrt" "(" RAT ")"
    // Returned as (alpha, coeff, m) meaning alpha + coeff*sqrt(m).
    struct Inner {
        Rat alpha, coeff, m;
    };
    Inner parse_inner() {
        skip_ws();
        if (at_number()) {
            Rat first = parse_rat();
            int sgn = 0;
            if (try_char('+'))
                sgn = +1;
            else if (try_char('-'))
                sgn = -1;
            if (sgn != 0) {
                Rat coeff(1);
                if (at_number()) {
                    coeff = parse_rat();
                    expect('*');
                }
                Rat m = parse_sqrt_of_rat();
                return {first, sgn < 0 ? -coeff : coeff, m};
            }
            if (try_char('*')) {
                Rat m = parse_sqrt_of_rat();
                return {Rat(0), first, m};
            }
            return {first, Rat(0), Rat(0)};
        }
        Rat m = parse_sqrt_of_rat();
        return {Rat(0), Rat(1), m};
    }

    ThetaClass parse_expr() {
        skip_ws();
        const std::size_t at = pos_;
        if (at_number()) {
            Rat lead = parse_rat();
            skip_ws();
            if (pos_ == src_.size()) return canon_rational(lead, at);
            if (try_char('*')) {
                if (try_keyword("sqrt")) {
                    expect('(');
                    Inner in = parse_inner();
                    expect(')');
                    return canon_sqrt(lead, in.alpha, in.coeff, in.m, at);
                }
                if (try_keyword("qroot")) {
                    expect('(');
                    const std::size_t rad_at = pos_;
                    Rat t = parse_rat();
                    expect(')');
                    if (t.sgn() < 0) throw ParseError("negative radicand", rad_at);
                    return canon_quartic(Rat(0), lead, t, at);
                }
                fail("expected sqrt or qroot after '*'");
            }
            int sgn = 0;
            if (try_char('+'))
                sgn = +1;
            else if (try_char('-'))
                sgn = -1;
            if (sgn != 0) {
                Rat coeff(1);
                if (at_number()) {
                    coeff = parse_rat();
                    expect('*');
                }
                if (!try_keyword("qroot")) {
                    if (at_keyword("sqrt"))
                        fail("sums with sqrt are not in the grammar; write the value as "
                             "sqrt(alpha +- sqrt(beta))");
                    fail("expected qroot");
                }
                expect('(');
                const std::size_t rad_at = pos_;
                Rat t = parse_rat();
                expect(')');
                if (t.sgn() < 0) throw ParseError("negative radicand", rad_at);
                return canon_quartic(lead, sgn < 0 ? -coeff : coeff, t, at);
            }
            fail("expected '*', '+', '-' or end of input after number");
        }
        if (try_keyword("sqrt")) {
            expect('(');
            Inner in = parse_inner();
            expect(')');
            return canon_sqrt(Rat(1), in.alpha, in.coeff, in.m, at);
        }
        if (try_keyword("qroot")) {
            expect('(');
            const std::size_t rad_at = pos_;
            Rat t = parse_rat();
            expect(')');
            if (t.sgn() < 0) throw ParseError("negative radicand", rad_at);
            return canon_quartic(Rat(0), Rat(1), t, at);
        }
        fail("expected expression");
    }

    const std::string& src_;
    std::size_t pos_ = 0;
};

std::string rat_factor(const Rat& r) {
    // "c*" prefix, omitted when c = 1
    return r == Rat(1) ? std::string() : r.str() + "*";
}

}  // namespace

ThetaClass parse_theta(const std::string& text) { return Parser(text).run(); }

ThetaClass rescale(const ThetaClass& t, const Rat& lambda) {
    if (lambda.sgn() <= 0) throw std::invalid_argument("rescale: lambda must be positive");
    const Rat l2 = lambda.square();
    const Rat l4 = l2.square();
    if (const auto* r = std::get_if<RationalSide>(&t)) return RationalSide{r->lambda * lambda};
    if (const auto* q = std::get_if<QuadSurd>(&t)) return QuadSurd{q->lambda * lambda, q->q};
    if (const auto* b = std::get_if<Biquadratic>(&t))
        return Biquadratic{b->alpha * l2, b->sign, b->beta * l4};
    NonBiquadratic nb = std::get<NonBiquadratic>(t);
    if (nb.form == NonBiquadratic::Form::negative_alpha) {
        nb.alpha *= l2;
        nb.beta *= l4;
    } else {
        nb.gamma *= lambda;
        nb.delta *= lambda;
    }
    return nb;
}

namespace {

std::string inner_string(const Rat& alpha, int sign, const Rat& beta) {
    auto [c, k] = sqrt_as_surd(beta);
    std::string s = alpha.str();
    s += sign < 0 ? "-" : "+";
    s += rat_factor(c) + "sqrt(" + k.get_str() + ")";
    return s;
}

}  // namespace

std::string to_string(const ThetaClass& t) {
    if (const auto* r = std::get_if<RationalSide>(&t)) return r->lambda.str();
    if (const auto* q = std::get_if<QuadSurd>(&t))
        return rat_factor(q->lambda) + "sqrt(" + q->q.get_str() + ")";
    if (const auto* b = std::get_if<Biquadratic>(&t))
        return "sqrt(" + inner_string(b->alpha, b->sign, b->beta) + ")";
    const auto& nb = std::get<NonBiquadratic>(t);
    if (nb.form == NonBiquadratic::Form::negative_alpha)
        return "sqrt(" + inner_string(nb.alpha, nb.sign, nb.beta) + ")";
    std::string tail = rat_factor(nb.delta.abs()) + "qroot(" + nb.q.get_str() + ")";
    if (nb.gamma.is_zero()) return nb.delta.sgn() < 0 ? "-" + tail : tail;
    return nb.gamma.str() + (nb.delta.sgn() < 0 ? "-" : "+") + tail;
}

QuadExt theta_squared(const ThetaClass& t) {
    if (const auto* r = std::get_if<RationalSide>(&t)) return QuadExt(r->lambda.square());
    if (const auto* q = std::get_if<QuadSurd>(&t)) return QuadExt(q->lambda.square() * Rat(q->q));
    const Rat* alpha = nullptr;
    const Rat* beta = nullptr;
    int sign = +1;
    if (const auto* b = std::get_if<Biquadratic>(&t)) {
        alpha = &b->alpha;
        beta = &b->beta;
        sign = b->sign;
    } else {
        const auto& nb = std::get<NonBiquadratic>(t);
        if (nb.form == NonBiquadratic::Form::pure_quartic) {
            // (delta * q^(1/4))^2 = delta^2 * sqrt(q)
            return QuadExt(Rat(0), nb.delta.square(), nb.q);
        }
        if (nb.form == NonBiquadratic::Form::quartic_binomial)
            throw std::domain_error(
                "theta_squared: quartic binomials square outside quadratic extensions");
        alpha = &nb.alpha;
        beta = &nb.beta;
        sign = nb.sign;
    }
    auto [c, k] = sqrt_as_surd(*beta);
    return QuadExt(*alpha, sign < 0 ? -c : c, k);
}

int algebraic_degree_class(const ThetaClass& t) {
    if (std::holds_alternative<RationalSide>(t)) return 1;
    if (std::holds_alternative<QuadSurd>(t)) return 2;
    return 4;
}

}  // namespace equidist
