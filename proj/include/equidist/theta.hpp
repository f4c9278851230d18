#pragma once

#include "equidist/exactnum.hpp"

#include <variant>

namespace equidist {

/// theta = lambda, lambda > 0. Algebraic degree 1.
struct RationalSide {
    Rat lambda;

    friend bool operator==(const RationalSide&, const RationalSide&) = default;
};

/// theta = lambda * sqrt(q) with lambda > 0 and q square-free, q >= 2.
/// Algebraic degree 2.
struct QuadSurd {
    Rat lambda;
    Int q;

    friend bool operator==(const QuadSurd&, const QuadSurd&) = default;
};

/// theta^2 = alpha + sign*sqrt(beta) with alpha > 0, beta > 0, sqrt(beta)
/// irrational, and theta > 0.
struct Biquadratic {
    Rat alpha;
    int sign;  // +1 or -1
    Rat beta;

    friend bool operator==(const Biquadratic&, const Biquadratic&) = default;
};

/// Positive reals the grammar accepts but the biquadratic class excludes:
/// quartic binomials gamma + delta*q^(1/4) (gamma*delta != 0), pure quartic
/// surds delta*q^(1/4) (their square has zero rational part), and
/// sqrt(alpha +- sqrt(beta)) with alpha < 0.
struct NonBiquadratic {
    enum class Form { quartic_binomial, pure_quartic, negative_alpha };

    Form form;
    // quartic forms: theta = gamma + delta * q^(1/4), q fourth-power-free,
    // not a perfect square, q >= 2
    Rat gamma{0};
    Rat delta{0};
    Int q{0};
    // negative_alpha form: theta^2 = alpha + sign*sqrt(beta)
    Rat alpha{0};
    int sign{+1};
    Rat beta{0};

    friend bool operator==(const NonBiquadratic&, const NonBiquadratic&) = default;
};

/// Canonical algebraic class of a candidate side length.
using ThetaClass = std::variant<RationalSide, QuadSurd, Biquadratic, NonBiquadratic>;

struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

/// Parses a side-length expression and canonicalizes it.
///
/// Grammar (whitespace insensitive):
///   RAT   := integer | integer "/" integer
///   EXPR  := RAT
///          | [RAT "*"] "sqrt" "(" INNER ")"
///          | [RAT "*"] "qroot" "(" RAT ")"
///          | RAT ("+"|"-") [RAT "*"] "qroot" "(" RAT ")"
///   INNER := RAT
///          | [RAT ("+"|"-")] [RAT "*"] "sqrt" "(" RAT ")"
///
/// Canonicalization extracts square factors (sqrt(12) -> 2*sqrt(3)), merges
/// scalar factors, folds lambda*sqrt(alpha +- sqrt(beta)) into the biquadratic
/// form, and reduces quartic radicands to fourth-power-free integers. Throws
/// ParseError on syntax errors, nonpositive values, deeper radical nesting.
ThetaClass parse_theta(const std::string& text);

/// The class of lambda * theta; the variant tag never changes.
ThetaClass rescale(const ThetaClass& t, const Rat& lambda);

/// Canonical expression string; parse_theta(to_string(t)) == t.
std::string to_string(const ThetaClass& t);

/// theta^2 as an exact quadratic-extension element. Throws for quartic
/// binomials, whose square leaves every quadratic extension.
QuadExt theta_squared(const ThetaClass& t);

/// 1, 2 or 4 (biquadratic classes report 4 even when the value happens to
/// have degree 2 over the rationals; the decision procedures treat them
/// uniformly).
int algebraic_degree_class(const ThetaClass& t);

}  // namespace equidist
