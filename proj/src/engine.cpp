#include "equidist/engine.hpp"

#include <algorithm>

namespace equidist {

std::string verdict_token(Verdict v) {
    switch (v) {
        case Verdict::good: return "good";
        case Verdict::not_good: return "not_good";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

std::optional<Verdict> verdict_from_token(const std::string& s) {
    if (s == "good") return Verdict::good;
    if (s == "not_good") return Verdict::not_good;
    if (s == "unknown") return Verdict::unknown;
    return std::nullopt;
}

std::string reason_token(Reason r) {
    switch (r) {
        case Reason::none: return "none";
        case Reason::non_biquadratic_form: return "non-biquadratic-form";
        case Reason::inadmissible_prime: return "inadmissible-prime";
        case Reason::alpha_nonpositive: return "alpha-nonpositive";
        case Reason::radical_two_adic_obstruction: return "radical-two-adic-obstruction";
        case Reason::alpha_squared_not_above_beta: return "alpha-squared-not-above-beta";
        case Reason::not_three_square_admissible: return "not-three-square-admissible";
        case Reason::search_exhausted: return "search-exhausted";
    }
    return "none";
}

std::optional<Reason> reason_from_token(const std::string& s) {
    for (Reason r : {Reason::non_biquadratic_form, Reason::inadmissible_prime,
                     Reason::alpha_nonpositive, Reason::radical_two_adic_obstruction,
                     Reason::alpha_squared_not_above_beta, Reason::not_three_square_admissible,
                     Reason::search_exhausted})
        if (reason_token(r) == s) return r;
    return std::nullopt;
}

std::string SurdCoord::str() const {
    if (coeff.is_zero()) return "0";
    if (radicand == 1) return coeff.str();
    if (coeff == Rat(1)) return "sqrt(" + radicand.get_str() + ")";
    if (coeff == Rat(-1)) return "-sqrt(" + radicand.get_str() + ")";
    return coeff.str() + "*sqrt(" + radicand.get_str() + ")";
}

SurdCoord make_surd(const Rat& coeff, const Rat& radicand) {
    auto [c, k] = sqrt_as_surd(radicand);
    SurdCoord out{coeff * c, k};
    if (out.coeff.is_zero()) out.radicand = 1;
    return out;
}

namespace {

QuadExt surd_value(const SurdCoord& s) { return QuadExt(Rat(0), s.coeff, s.radicand); }

std::string surd_decimal(const SurdCoord& s, int precision) {
    return eval(surd_value(s), precision).str();
}

WitnessPoint exact_point(const SurdCoord& x, const SurdCoord& y, int precision) {
    WitnessPoint p;
    p.exact = true;
    p.x_surd = x;
    p.y_surd = y;
    p.x_dec = surd_decimal(x, precision);
    p.y_dec = surd_decimal(y, precision);
    p.precision = precision;
    return p;
}

Int pick_inadmissible_prime(const Int& q, unsigned long seed) {
    Int even_bad(0);
    for (const auto& [p, e] : factorize(q, seed)) {
        if (p == 2) {
            even_bad = 2;
            continue;
        }
        if (p != 3 && p % 6 != 1) return p;  // smallest odd offender
    }
    if (even_bad == 0) throw std::logic_error("no inadmissible prime in " + q.get_str());
    return even_bad;
}

// 2-adic valuation of a nonzero rational.
long val2(const Rat& x) {
    return static_cast<long>(mpz_scan1(x.num().get_mpz_t(), 0)) -
           static_cast<long>(mpz_scan1(x.den().get_mpz_t(), 0));
}

// F1. A good biquadratic matches some primitive triangle: s1 = 2*alpha*l^2
// and 16*Delta^2 = 4*beta*l^4/3 for a single rational l. s1 = 0 (mod 4)
// would force all sides even, so v2(s1) is 0 or 1, which determines v2(l);
// 16*Delta^2 = (a+b+c)(-a+b+c)(a-b+c)(a+b-c) has all factors of one parity,
// so it is odd or divisible by 16. If the forced valuation of 4*beta*l^4/3
// lands outside {0} u [4, inf), no triangle can ever match.
bool radical_obstructed(const Rat& alpha, const Rat& beta) {
    const long v = val2(alpha * Rat(2));
    const long vl = v % 2 == 0 ? -v / 2 : (1 - v) / 2;
    const long w = val2(beta) + 2 + 4 * vl;
    return w < 0 || (w >= 1 && w <= 3);
}

constexpr Reason kFilterOrder[] = {
    Reason::radical_two_adic_obstruction,
    Reason::alpha_squared_not_above_beta,
    Reason::not_three_square_admissible,
};

void classify_biquadratic(Certificate& cert, const Rat& alpha, int sign, const Rat& beta,
                          std::int64_t max_c) {
    if (beta.sgn() <= 0) throw std::invalid_argument("classify: biquadratic beta must be positive");
    if (alpha.sgn() <= 0) {
        cert.verdict = Verdict::not_good;
        cert.reason = Reason::alpha_nonpositive;
        cert.failed_filters = {Reason::alpha_nonpositive};
        return;
    }
    const Rat two_alpha = alpha * Rat(2);
    for (Reason f : kFilterOrder) {
        bool fired = false;
        switch (f) {
            case Reason::radical_two_adic_obstruction:
                fired = radical_obstructed(alpha, beta);
                break;
            case Reason::alpha_squared_not_above_beta:
                fired = !(alpha.square() > beta);
                break;
            case Reason::not_three_square_admissible:
                fired = !three_square_admissible(two_alpha);
                if (fired) cert.obstruction_mn = two_alpha.num() * two_alpha.den();
                break;
            default:
                break;
        }
        if (fired) cert.failed_filters.push_back(f);
    }
    if (!cert.failed_filters.empty()) {
        cert.verdict = Verdict::not_good;
        cert.reason = cert.failed_filters.front();
        return;
    }
    // kappa = 48*alpha^2/beta; the first matching triangle (smallest c, then
    // lexicographic) whose s1/(2*alpha) is a rational square certifies theta.
    const Rat target = Rat(48) * alpha.square() / beta;
    for_each_kappa_match(target, max_c, [&](const PrimTriangle& tri) {
        const Rat lam2 = Rat(Int(tri.s1())) / two_alpha;
        auto lam = rational_sqrt(lam2);
        if (!lam) return true;
        cert.verdict = Verdict::good;
        cert.triangle = {{tri.a(), tri.b(), tri.c()}};
        cert.lambda = *lam;
        cert.sign = sign;
        cert.distances = {{Rat(Int(tri.a())) / *lam, Rat(Int(tri.b())) / *lam,
                           Rat(Int(tri.c())) / *lam}};
        return false;
    });
    if (cert.verdict == Verdict::good) return;
    cert.verdict = Verdict::unknown;
    cert.bound = max_c;
}

}  // namespace

Certificate classify(const ThetaClass& t, std::int64_t max_c, unsigned long seed) {
    if (max_c < 1) throw std::invalid_argument("classify: max_c must be >= 1");
    Certificate cert;
    cert.theta = t;
    if (const auto* r = std::get_if<RationalSide>(&t)) {
        cert.verdict = Verdict::good;
        cert.distances = {{Rat(0), r->lambda, r->lambda}};
        return cert;
    }
    if (const auto* qs = std::get_if<QuadSurd>(&t)) {
        if (!good_squarefree(qs->q, seed)) {
            cert.verdict = Verdict::not_good;
            cert.reason = Reason::inadmissible_prime;
            cert.prime = pick_inadmissible_prime(qs->q, seed);
            return cert;
        }
        const FormRep rep = represent_q(qs->q, seed);
        SurdWitness w = surd_witness(qs->lambda, qs->q, rep);
        cert.verdict = Verdict::good;
        cert.rep = rep;
        cert.e = w.e;
        cert.r = w.r;
        cert.s = w.s;
        cert.distances = w.distances;
        return cert;
    }
    if (const auto* b = std::get_if<Biquadratic>(&t)) {
        classify_biquadratic(cert, b->alpha, b->sign, b->beta, max_c);
        return cert;
    }
    cert.verdict = Verdict::not_good;
    cert.reason = Reason::non_biquadratic_form;
    return cert;
}

SurdWitness surd_witness(const Rat& lambda, const Int& q, const FormRep& rep, int precision) {
    if (lambda.sgn() <= 0) throw std::invalid_argument("surd_witness: lambda must be positive");
    if (rep.q != q || !rep.valid())
        throw std::invalid_argument("surd_witness: representation does not match q");
    if (rep.y == 0)
        throw std::domain_error("surd_witness: y = 0 representation (q cannot be square-free)");
    const Rat a(rep.x), b(rep.y), qr(q);
    SurdWitness w;
    w.e = -qr / (Rat(4) * b);
    w.r = (a - b) / (Rat(2) * b);
    w.s = (a + b) / (Rat(2) * b);
    if (w.r.is_zero() || w.s.is_zero())
        throw std::logic_error("surd_witness: degenerate r or s (x = +-y forces q = 4x^2)");
    const Rat scale = lambda / Rat(2);
    const Rat abs_e = w.e.abs();
    w.distances = {{qr / abs_e * scale, qr * w.r.abs() / abs_e * scale,
                    qr * w.s.abs() / abs_e * scale}};
    const Rat rho_x = a / w.e * scale;
    const Rat rho_y = (b / w.e + Rat(1)) * scale;
    w.point = exact_point(make_surd(rho_x, qr), make_surd(rho_y, Rat(3) * qr), precision);
    return w;
}

bool fundamental_relation_holds(const Rat& dA, const Rat& dB, const Rat& dC,
                                const QuadExt& theta_sq) {
    const Rat a2 = dA.square(), b2 = dB.square(), c2 = dC.square();
    const QuadExt theta4 = theta_sq.square();
    const QuadExt lhs = QuadExt(Rat(3)) * (QuadExt(a2.square() + b2.square() + c2.square()) + theta4);
    const QuadExt rhs = (QuadExt(a2 + b2 + c2) + theta_sq).square();
    return lhs == rhs;
}

bool triangle_inequality_ok(const Rat& dA, const Rat& dB, const Rat& dC,
                            const QuadExt& theta_sq) {
    const Rat* d[3] = {&dA, &dB, &dC};
    // the all-rational subset
    for (int i = 0; i < 3; ++i) {
        const Rat sum = *d[(i + 1) % 3] + *d[(i + 2) % 3];
        if (sum < *d[i]) return false;
    }
    // subsets containing theta: u + v >= theta and |u - v| <= theta,
    // both squared against theta^2
    for (int i = 0; i < 3; ++i) {
        const Rat& u = *d[(i + 1) % 3];
        const Rat& v = *d[(i + 2) % 3];
        if (sign_of(QuadExt((u + v).square()) - theta_sq) == Sign::negative) return false;
        if (sign_of(theta_sq - QuadExt((u - v).square())) == Sign::negative) return false;
    }
    return true;
}

WitnessPoint locate_point(const Rat& dA, const Rat& dB, const Rat& dC, const QuadExt& theta_sq,
                          int precision) {
    if (sign_of(theta_sq) != Sign::positive)
        throw std::domain_error("locate_point: theta^2 must be positive");
    if (theta_sq.is_rational()) {
        const Rat t = theta_sq.rational_part();
        const Rat xc = (dB.square() - dC.square()) / (Rat(2) * t);  // x = xc*sqrt(t)
        const Rat y2 = dB.square() - (xc + Rat(1, 2)).square() * t;
        if (y2.sgn() < 0)
            throw std::logic_error("locate_point: circles do not intersect; inputs inconsistent");
        const SurdCoord x = make_surd(xc, t);
        auto [cy, ky] = sqrt_as_surd(y2);
        const SurdCoord ay = make_surd(Rat(1, 2), Rat(3) * t);  // A = (0, sqrt(3t)/2)
        const Rat base = xc.square() * t + y2 + Rat(3, 4) * t;  // x^2 + y^2 + Ay^2
        for (int sgn : {+1, -1}) {
            const Rat yc = sgn < 0 ? -cy : cy;
            const QuadExt cross(Rat(0), yc * ay.coeff, Int(ky) * ay.radicand);
            if (QuadExt(dA.square()) == QuadExt(base) - QuadExt(Rat(2)) * cross)
                return exact_point(x, SurdCoord{yc, ky}, precision);
        }
        throw std::logic_error("locate_point: neither sign candidate matches the distance to A");
    }

    // numeric placement with guard digits; the printed coordinates carry
    // absolute error < 2*10^-precision
    const int w = precision + 30;
    const Decimal two = Decimal::of_int(Int(2), 0);
    const Decimal theta = eval(theta_sq, w).sqrt(w);
    const Decimal x = Decimal::of_rat(dB.square() - dC.square(), w).div(theta + theta, w);
    const Decimal xb = x + theta.div(two, w);
    Decimal u = Decimal::of_rat(dB.square(), w) - xb * xb;
    if (u.sgn() < 0) u = Decimal(Int(0), w);  // rounding dust; residual check below
    const Decimal y_abs = u.sqrt(w);
    const Decimal ay = (theta * Decimal::of_int(Int(3), w).sqrt(w)).div(two, w);
    const Decimal da = Decimal::of_rat(dA, w);

    WitnessPoint best;
    Decimal best_resid;
    bool have_best = false;
    for (int sgn : {+1, -1}) {
        const Decimal y = sgn < 0 ? -y_abs : y_abs;
        const Decimal dy = y - ay;
        const Decimal dist_a = (x * x + dy * dy).sqrt(w);
        const Decimal resid = (dist_a - da).abs();
        if (!have_best || resid < best_resid) {
            best_resid = resid;
            best.x_dec = x.str(precision);
            best.y_dec = y.str(precision);
            best.precision = precision;
            have_best = true;
        }
    }
    if (!(best_resid <= Decimal(Int(1), precision)))
        throw std::logic_error("locate_point: both sign candidates miss the distance to A "
                               "beyond certified precision");
    return best;
}

WitnessPoint witness_point(const Certificate& c, int precision) {
    if (c.verdict != Verdict::good)
        throw std::invalid_argument("witness_point: certificate is not good");
    if (!c.distances) throw std::invalid_argument("witness_point: certificate lacks distances");
    if (const auto* qs = std::get_if<QuadSurd>(&c.theta)) {
        if (!c.rep) throw std::invalid_argument("witness_point: missing representation");
        return surd_witness(qs->lambda, qs->q, *c.rep, precision).point;
    }
    const auto& d = *c.distances;
    return locate_point(d[0], d[1], d[2], theta_squared(c.theta), precision);
}

namespace {

VerifyResult fail(std::string msg) { return {false, std::move(msg)}; }

VerifyResult verify_good(const Certificate& c) {
    if (!c.distances) return fail("good certificate lacks distances");
    if (!c.failed_filters.empty()) return fail("good certificate records failed filters");
    const auto& d = *c.distances;
    for (const Rat& x : d)
        if (x.sgn() < 0) return fail("negative distance");

    if (const auto* r = std::get_if<RationalSide>(&c.theta)) {
        if (!(d[0].is_zero() && d[1] == r->lambda && d[2] == r->lambda))
            return fail("vertex witness must have distances (0, theta, theta)");
        return {true, ""};
    }

    if (const auto* qs = std::get_if<QuadSurd>(&c.theta)) {
        if (!c.rep || !c.e || !c.r || !c.s) return fail("missing surd evidence");
        if (c.rep->q != qs->q) return fail("representation is for a different q");
        const Rat a(c.rep->x), b(c.rep->y), q(qs->q);
        const Rat &e = *c.e, &r = *c.r, &s = *c.s;
        if (e.is_zero()) return fail("e must be nonzero");
        if (a.square() + Rat(3) * b.square() != q) return fail("x^2 + 3y^2 = q fails");
        if ((a + e).square() + Rat(3) * (b + e).square() != q * r.square())
            return fail("(x+e)^2 + 3(y+e)^2 = q r^2 fails");
        if ((a - e).square() + Rat(3) * (b + e).square() != q * s.square())
            return fail("(x-e)^2 + 3(y+e)^2 = q s^2 fails");
        for (const Rat& x : d)
            if (x.sgn() <= 0) return fail("distances must be strictly positive");
        if (!fundamental_relation_holds(d[0], d[1], d[2], theta_squared(c.theta)))
            return fail("fundamental relation failed");
        return {true, ""};
    }

    if (const auto* bq = std::get_if<Biquadratic>(&c.theta)) {
        if (!c.triangle || !c.lambda || !c.sign) return fail("missing triangle evidence");
        if (*c.sign != bq->sign) return fail("certificate sign differs from theta");
        std::optional<PrimTriangle> made;
        try {
            made = make_triangle((*c.triangle)[0], (*c.triangle)[1], (*c.triangle)[2]);
        } catch (const TriangleError& err) {
            return fail(std::string("invalid triangle: ") + err.what());
        }
        const PrimTriangle& tri = *made;
        const Rat& lam = *c.lambda;
        if (lam.sgn() <= 0) return fail("lambda must be positive");
        // 2*lambda^2*theta^2 = s1 +- sqrt(48*Delta^2), exactly
        const QuadExt lam_theta_sq = QuadExt(lam.square()) * theta_squared(c.theta);
        auto [rc, rk] = sqrt_as_surd(Rat(3 * Int(tri.sixteen_delta_sq())));
        const QuadExt rhs(Rat(Int(tri.s1())), *c.sign < 0 ? -rc : rc, rk);
        if (QuadExt(Rat(2)) * lam_theta_sq != rhs)
            return fail("2 lambda^2 theta^2 = s1 +- 4 Delta sqrt(3) fails");
        if (!fundamental_relation_holds(Rat(Int(tri.a())), Rat(Int(tri.b())), Rat(Int(tri.c())),
                                        lam_theta_sq))
            return fail("fundamental relation failed");
        if (!fundamental_relation_holds(d[0], d[1], d[2], theta_squared(c.theta)))
            return fail("fundamental relation failed for the emitted distances");
        std::array<Rat, 3> scaled = {d[0] * lam, d[1] * lam, d[2] * lam};
        std::sort(scaled.begin(), scaled.end());
        if (scaled[0] != Rat(Int(tri.a())) || scaled[1] != Rat(Int(tri.b())) ||
            scaled[2] != Rat(Int(tri.c())))
            return fail("distances do not match triangle and lambda");
        for (const Rat& x : d)
            if (x.sgn() <= 0) return fail("distances must be strictly positive");
        return {true, ""};
    }

    return fail("non-biquadratic theta cannot be good");
}

bool filter_fires(Reason f, const Biquadratic& b) {
    switch (f) {
        case Reason::alpha_nonpositive:
            return b.alpha.sgn() <= 0;
        case Reason::radical_two_adic_obstruction:
            return b.alpha.sgn() > 0 && radical_obstructed(b.alpha, b.beta);
        case Reason::alpha_squared_not_above_beta:
            return !(b.alpha.square() > b.beta);
        case Reason::not_three_square_admissible:
            return b.alpha.sgn() > 0 && !three_square_admissible(b.alpha * Rat(2));
        default:
            return false;
    }
}

VerifyResult verify_not_good(const Certificate& c) {
    const auto* bq = std::get_if<Biquadratic>(&c.theta);
    switch (c.reason) {
        case Reason::non_biquadratic_form:
            if (!std::holds_alternative<NonBiquadratic>(c.theta))
                return fail("form rejection requires a non-biquadratic theta");
            return {true, ""};
        case Reason::inadmissible_prime: {
            const auto* qs = std::get_if<QuadSurd>(&c.theta);
            if (!qs) return fail("prime rejection requires theta = lambda*sqrt(q)");
            if (!c.prime) return fail("missing cited prime");
            const Int& p = *c.prime;
            if (!(p == 2 || (p % 6 == 5 && is_probable_prime(p))))
                return fail("cited prime is not 2 or 5 (mod 6)");
            if (qs->q % p != 0) return fail("cited prime does not divide q");
            return {true, ""};
        }
        case Reason::alpha_nonpositive:
        case Reason::radical_two_adic_obstruction:
        case Reason::alpha_squared_not_above_beta:
        case Reason::not_three_square_admissible: {
            if (!bq) return fail("filter rejection requires a biquadratic theta");
            if (c.failed_filters.empty() || c.failed_filters.front() != c.reason)
                return fail("reason must be the first failed filter");
            for (Reason f : c.failed_filters)
                if (!filter_fires(f, *bq)) return fail("recorded filter does not fire: " +
                                                       reason_token(f));
            if (c.obstruction_mn) {
                const Rat two_alpha = bq->alpha * Rat(2);
                if (*c.obstruction_mn != two_alpha.num() * two_alpha.den())
                    return fail("cited mn does not match 2*alpha");
                Int mn = *c.obstruction_mn;
                while (mn % 4 == 0) mn /= 4;
                if (mn % 8 != 7) return fail("cited mn is not of the form 4^l(8k+7)");
            }
            return {true, ""};
        }
        default:
            return fail("invalid reason for a not_good verdict");
    }
}

}  // namespace

VerifyResult verify_certificate(const Certificate& c) {
    switch (c.verdict) {
        case Verdict::good:
            return verify_good(c);
        case Verdict::not_good:
            return verify_not_good(c);
        case Verdict::unknown: {
            if (!std::holds_alternative<Biquadratic>(c.theta))
                return fail("only biquadratic theta can be unknown");
            if (!c.bound || *c.bound < 1) return fail("unknown verdict lacks a search bound");
            return {true, ""};
        }
    }
    return fail("invalid verdict");
}

}  // namespace equidist
