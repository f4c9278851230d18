#pragma once

#include "equidist/decimal.hpp"
#include "equidist/numtheory.hpp"
#include "equidist/theta.hpp"
#include "equidist/triangles.hpp"

#include <array>
#include <optional>
#include <vector>

namespace equidist {

enum class Verdict { good, not_good, unknown };

/// Why a theta was rejected, or why the search gave up.
enum class Reason {
    none,
    non_biquadratic_form,          // algebraic-form gate
    inadmissible_prime,            // q has a prime factor that is 2 or 5 (mod 6)
    alpha_nonpositive,             // F0
    radical_two_adic_obstruction,  // F1: sqrt(beta) cannot rescale onto any
                                   // integral triangle's radical (see classify)
    alpha_squared_not_above_beta,  // F2: alpha^2 <= beta cannot be good
    not_three_square_admissible,   // F3: 2*alpha fails the three-squares test
    search_exhausted
};

std::string verdict_token(Verdict v);
std::optional<Verdict> verdict_from_token(const std::string& s);
std::string reason_token(Reason r);
std::optional<Reason> reason_from_token(const std::string& s);

/// coeff * sqrt(radicand), radicand square-free (1 = rational value).
struct SurdCoord {
    Rat coeff;
    Int radicand{1};

    std::string str() const;
    friend bool operator==(const SurdCoord&, const SurdCoord&) = default;
};

/// Renders coeff*sqrt(rad) with rad square-free from an arbitrary
/// nonnegative rational radicand.
SurdCoord make_surd(const Rat& coeff, const Rat& radicand);

/// Coordinates of the rational-distance point in the canonical frame
/// B(-theta/2, 0), C(theta/2, 0), A(0, theta*sqrt(3)/2).
///
/// Exact coordinates are pure quadratic surds; the decimal strings are always
/// present and carry absolute error < 2*10^-precision.
struct WitnessPoint {
    bool exact = false;
    SurdCoord x_surd;
    SurdCoord y_surd;
    std::string x_dec;
    std::string y_dec;
    int precision = 0;
};

/// Self-contained evidence for a verdict; verify_certificate re-checks it
/// with no access to the classifier.
struct Certificate {
    ThetaClass theta;
    Verdict verdict = Verdict::unknown;
    Reason reason = Reason::none;
    std::vector<Reason> failed_filters;  // every filter that fired, in order

    // good, degree 2
    std::optional<FormRep> rep;  // x^2 + 3y^2 = q
    std::optional<Rat> e, r, s;
    // good, degree 4
    std::optional<std::array<std::int64_t, 3>> triangle;
    std::optional<Rat> lambda;
    std::optional<int> sign;
    // good, any degree
    std::optional<std::array<Rat, 3>> distances;  // (dA, dB, dC)
    // not_good evidence
    std::optional<Int> prime;
    std::optional<Int> obstruction_mn;  // the 4^l(8k+7)-form integer behind F3
    // unknown
    std::optional<std::int64_t> bound;
};

/// Decides whether theta is good and assembles the evidence.
///
/// Rational theta: good, vertex witness. lambda*sqrt(q): good iff every
/// prime factor of q is 3 or 1 (mod 6), with the explicit construction from
/// a representation x^2 + 3y^2 = q. Quartic binomials and negative-alpha
/// forms: not good. Biquadratic theta^2 = alpha +- sqrt(beta): filters
/// F0..F3 in order, then a search for a primitive triangle whose similarity
/// invariant matches kappa = 48*alpha^2/beta and whose s1/(2*alpha) is a
/// rational square; an exhausted search is Verdict::unknown, never not_good.
///
/// F1 is a 2-adic feasibility test. A match forces s1 = 2*alpha*lambda^2 and
/// 16*Delta^2 = 4*beta*lambda^4/3 for one rational lambda; a primitive
/// triangle has s1 != 0 (mod 4), which pins v2(lambda), and its
/// 16*Delta^2 is odd or divisible by 16. When the pinned valuation makes
/// that impossible, no triangle can ever match and theta is not good.
Certificate classify(const ThetaClass& t, std::int64_t max_c,
                     unsigned long seed = kDefaultFactorSeed);

struct SurdWitness {
    Rat e, r, s;
    std::array<Rat, 3> distances;  // (dA, dB, dC), exact
    WitnessPoint point;
};

/// Witness construction for theta = lambda*sqrt(q) from x^2 + 3y^2 = q:
/// e = -q/(4y), r = (x-y)/(2y), s = (x+y)/(2y); at side 2*sqrt(q) the point
/// (x/e*sqrt(q), (y/e+1)*sqrt(3q)) has vertex distances (q, q|r|, q|s|)/|e|,
/// everything then scaled by lambda/2.
SurdWitness surd_witness(const Rat& lambda, const Int& q, const FormRep& rep,
                         int precision = 50);

/// The quartic identity 3(dA^4+dB^4+dC^4+theta^4) = (dA^2+dB^2+dC^2+theta^2)^2,
/// tested exactly in the quadratic extension carrying theta^2.
bool fundamental_relation_holds(const Rat& dA, const Rat& dB, const Rat& dC,
                                const QuadExt& theta_sq);

/// Places the point with the given vertex distances in the canonical frame:
/// x = (dB^2 - dC^2)/(2 theta), y = +-sqrt(dB^2 - (x + theta/2)^2), sign fixed
/// by the distance to A. Exact when theta^2 is rational, numeric otherwise.
/// Requires fundamental_relation_holds(dA, dB, dC, theta_sq); throws
/// std::logic_error if neither sign candidate matches.
WitnessPoint locate_point(const Rat& dA, const Rat& dB, const Rat& dC,
                          const QuadExt& theta_sq, int precision = 50);

/// Non-strict triangle inequality for every 3-subset of {dA, dB, dC, theta},
/// decided by exact sign comparisons. A sanity assertion, not a filter.
bool triangle_inequality_ok(const Rat& dA, const Rat& dB, const Rat& dC,
                            const QuadExt& theta_sq);

struct VerifyResult {
    bool ok = false;
    std::string failure;  // first failing check; empty when ok

    explicit operator bool() const { return ok; }
};

/// Independent re-check of a certificate.
VerifyResult verify_certificate(const Certificate& c);

/// Witness point for a good certificate (vertex for rational theta, the
/// surd construction for degree 2, numeric placement for biquadratic theta).
WitnessPoint witness_point(const Certificate& c, int precision = 50);

struct CertificateFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Flat JSON document, schema_version 1; round trips byte-exactly.
std::string certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const std::string& text);

}  // namespace equidist
