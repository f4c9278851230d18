#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equidist/theta.hpp"

#include <random>

using namespace equidist;

namespace {

const Biquadratic& as_biq(const ThetaClass& t) { return std::get<Biquadratic>(t); }
const QuadSurd& as_surd(const ThetaClass& t) { return std::get<QuadSurd>(t); }
const RationalSide& as_rat(const ThetaClass& t) { return std::get<RationalSide>(t); }
const NonBiquadratic& as_nonbiq(const ThetaClass& t) { return std::get<NonBiquadratic>(t); }

}  // namespace

TEST_CASE("parse: direct surd forms") {
    ThetaClass t = parse_theta("2*sqrt(7)");
    CHECK(as_surd(t).lambda == Rat(2));
    CHECK(as_surd(t).q == 7);

    t = parse_theta("sqrt(12)");  // sqrt(12) = 2*sqrt(3)
    CHECK(as_surd(t).lambda == Rat(2));
    CHECK(as_surd(t).q == 3);

    t = parse_theta("3*sqrt(1/2)");  // 3/sqrt(2) = (3/2)*sqrt(2)
    CHECK(as_surd(t).lambda == Rat(3, 2));
    CHECK(as_surd(t).q == 2);

    t = parse_theta("sqrt(49)");
    CHECK(as_rat(t).lambda == Rat(7));
}

TEST_CASE("parse: rationals") {
    CHECK(as_rat(parse_theta("2")).lambda == Rat(2));
    CHECK(as_rat(parse_theta("7/2")).lambda == Rat(7, 2));
    CHECK(as_rat(parse_theta("  10/4 ")).lambda == Rat(5, 2));
}

TEST_CASE("parse: biquadratic forms") {
    ThetaClass t = parse_theta("sqrt(25+12*sqrt(3))");
    CHECK(as_biq(t).alpha == Rat(25));
    CHECK(as_biq(t).sign == 1);
    CHECK(as_biq(t).beta == Rat(432));  // 12*sqrt(3) = sqrt(432)

    t = parse_theta("sqrt(43-24*sqrt(3))");
    CHECK(as_biq(t).alpha == Rat(43));
    CHECK(as_biq(t).sign == -1);
    CHECK(as_biq(t).beta == Rat(1728));

    t = parse_theta("sqrt(4+sqrt(2))");
    CHECK(as_biq(t).alpha == Rat(4));
    CHECK(as_biq(t).beta == Rat(2));

    // scalar factors fold in: alpha -> 4*alpha, beta -> 16*beta
    t = parse_theta("2*sqrt(25+12*sqrt(3))");
    CHECK(as_biq(t).alpha == Rat(100));
    CHECK(as_biq(t).beta == Rat(6912));

    // 2*theta^2 = 7 + sqrt(13), i.e. theta^2 = 7/2 + sqrt(13/4)
    t = parse_theta("sqrt(7/2+1/2*sqrt(13))");
    CHECK(as_biq(t).alpha == Rat(7, 2));
    CHECK(as_biq(t).beta == Rat(13, 4));
}

TEST_CASE("parse: inner square radicands collapse") {
    // sqrt(4 + sqrt(9)) = sqrt(7)
    CHECK(as_surd(parse_theta("sqrt(4+sqrt(9))")).q == 7);
    // sqrt(4 + 3*sqrt(4)) = sqrt(10)
    CHECK(as_surd(parse_theta("sqrt(4+3*sqrt(4))")).q == 10);
    // sqrt(9/4) = 3/2
    CHECK(as_rat(parse_theta("sqrt(9/4)")).lambda == Rat(3, 2));
}

TEST_CASE("parse: quartic forms") {
    ThetaClass t = parse_theta("1 + qroot(2)");
    CHECK(as_nonbiq(t).form == NonBiquadratic::Form::quartic_binomial);
    CHECK(as_nonbiq(t).gamma == Rat(1));
    CHECK(as_nonbiq(t).delta == Rat(1));
    CHECK(as_nonbiq(t).q == 2);

    t = parse_theta("sqrt(sqrt(5))");
    CHECK(as_nonbiq(t).form == NonBiquadratic::Form::pure_quartic);
    CHECK(as_nonbiq(t).delta == Rat(1));
    CHECK(as_nonbiq(t).q == 5);
    CHECK(t == parse_theta("qroot(5)"));  // the two spellings canonicalize identically

    t = parse_theta("3-qroot(2)");  // positive: 81 > 2
    CHECK(as_nonbiq(t).form == NonBiquadratic::Form::quartic_binomial);
    CHECK(as_nonbiq(t).delta == Rat(-1));

    t = parse_theta("2*qroot(5)");
    CHECK(as_nonbiq(t).form == NonBiquadratic::Form::pure_quartic);
    CHECK(as_nonbiq(t).delta == Rat(2));
}

TEST_CASE("parse: quartic radicand reduction") {
    // qroot(32) = 2^(5/4) = 2*qroot(2)
    ThetaClass t = parse_theta("qroot(32)");
    CHECK(as_nonbiq(t).delta == Rat(2));
    CHECK(as_nonbiq(t).q == 2);

    CHECK(as_surd(parse_theta("qroot(4)")).q == 2);          // 4^(1/4) = sqrt(2)
    CHECK(as_rat(parse_theta("qroot(16)")).lambda == Rat(2));  // 16^(1/4) = 2
    // qroot(1/8) = (1/2)*qroot(2): (1/8)^(1/4) = (8^3)^(1/4)/8 = (2^9)^(1/4)/8
    t = parse_theta("qroot(1/8)");
    CHECK(as_nonbiq(t).delta == Rat(1, 2));
    CHECK(as_nonbiq(t).q == 2);

    // gamma + delta*sqrt(r) with quartic spelling: qroot(q^2) folds to degree 2
    t = parse_theta("1+qroot(4)");  // 1 + sqrt(2), theta^2 = 3 + sqrt(8)
    CHECK(as_biq(t).alpha == Rat(3));
    CHECK(as_biq(t).sign == 1);
    CHECK(as_biq(t).beta == Rat(8));
}

TEST_CASE("parse: negative alpha forms") {
    ThetaClass t = parse_theta("sqrt(-1+sqrt(5))");
    CHECK(as_nonbiq(t).form == NonBiquadratic::Form::negative_alpha);
    CHECK(as_nonbiq(t).alpha == Rat(-1));
    CHECK(as_nonbiq(t).sign == 1);
    CHECK(as_nonbiq(t).beta == Rat(5));

    // sqrt(0 + sqrt(5)) is the pure quartic 5^(1/4)
    CHECK(parse_theta("sqrt(0+sqrt(5))") == parse_theta("qroot(5)"));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_theta("0"), ParseError);
    CHECK_THROWS_AS(parse_theta("-3"), ParseError);
    CHECK_THROWS_AS(parse_theta("-2*sqrt(7)"), ParseError);
    CHECK_THROWS_AS(parse_theta("sqrt(0)"), ParseError);
    CHECK_THROWS_AS(parse_theta("sqrt(-4)"), ParseError);
    CHECK_THROWS_AS(parse_theta("sqrt(1-sqrt(2))"), ParseError);   // negative value
    CHECK_THROWS_AS(parse_theta("sqrt(4-2*sqrt(4))"), ParseError); // = sqrt(0)
    CHECK_THROWS_AS(parse_theta("2-3*qroot(2)"), ParseError);      // negative value
    CHECK_THROWS_AS(parse_theta("sqrt(2+sqrt(2+sqrt(2)))"), ParseError);  // nesting
    CHECK_THROWS_AS(parse_theta("qroot(qroot(2))"), ParseError);
    CHECK_THROWS_AS(parse_theta("sqrt(qroot(2))"), ParseError);
    CHECK_THROWS_AS(parse_theta("1+sqrt(2)"), ParseError);  // not in the grammar
    CHECK_THROWS_AS(parse_theta(""), ParseError);
    CHECK_THROWS_AS(parse_theta("xyz"), ParseError);
    CHECK_THROWS_AS(parse_theta("2*"), ParseError);
    CHECK_THROWS_AS(parse_theta("sqrt(2))"), ParseError);
    CHECK_THROWS_AS(parse_theta("sqrt(1/0)"), ParseError);
    try {
        parse_theta("sqrt(25+12*sqrt(3)");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.position == 18);
    }
}

TEST_CASE("whitespace insensitivity") {
    CHECK(parse_theta(" sqrt( 25 + 12 * sqrt( 3 ) ) ") == parse_theta("sqrt(25+12*sqrt(3))"));
    CHECK(parse_theta("1 + qroot( 2 )") == parse_theta("1+qroot(2)"));
}

TEST_CASE("print canonical and round trip") {
    const char* corpus[] = {
        "5",
        "7/2",
        "sqrt(3)",
        "2*sqrt(7)",
        "1/3*sqrt(7)",
        "sqrt(12)",
        "sqrt(25+12*sqrt(3))",
        "sqrt(43-24*sqrt(3))",
        "sqrt(7/2+1/2*sqrt(13))",
        "2*sqrt(25+12*sqrt(3))",
        "sqrt(4+sqrt(2))",
        "1+qroot(2)",
        "2-qroot(5)",
        "10-3*qroot(2)",
        "qroot(5)",
        "3*qroot(32)",
        "sqrt(sqrt(5))",
        "sqrt(-1+sqrt(5))",
        "sqrt(-1/2+2/3*sqrt(7))",
    };
    for (const char* s : corpus) {
        ThetaClass once = parse_theta(s);
        ThetaClass twice = parse_theta(to_string(once));
        CHECK(once == twice);
    }
    CHECK(to_string(parse_theta("sqrt(12)")) == "2*sqrt(3)");
    CHECK(to_string(parse_theta("sqrt(25+12*sqrt(3))")) == "sqrt(25+12*sqrt(3))");
    CHECK(to_string(parse_theta("1 + qroot(2)")) == "1+qroot(2)");
    CHECK(to_string(parse_theta("sqrt(sqrt(5))")) == "qroot(5)");
}

TEST_CASE("rescale examples") {
    CHECK(rescale(parse_theta("sqrt(3)"), Rat(2)) == parse_theta("2*sqrt(3)"));
    ThetaClass t = rescale(parse_theta("sqrt(25+12*sqrt(3))"), Rat(1, 5));
    CHECK(as_biq(t).alpha == Rat(1));
    CHECK(as_biq(t).beta == Rat(432, 625));
    CHECK(rescale(parse_theta("3"), Rat(1, 3)) == parse_theta("1"));
    CHECK_THROWS_AS(rescale(parse_theta("3"), Rat(0)), std::invalid_argument);
    CHECK_THROWS_AS(rescale(parse_theta("3"), Rat(-1)), std::invalid_argument);
}

TEST_CASE("rescale composes multiplicatively") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> pick(1, 40);
    const char* corpus[] = {"5", "sqrt(3)", "sqrt(25+12*sqrt(3))", "1+qroot(2)",
                            "sqrt(-1+sqrt(5))"};
    for (const char* s : corpus) {
        ThetaClass t = parse_theta(s);
        for (int i = 0; i < 40; ++i) {
            Rat l(Int(pick(rng)), Int(pick(rng)));
            Rat m(Int(pick(rng)), Int(pick(rng)));
            CHECK(rescale(rescale(t, l), m) == rescale(t, l * m));
        }
    }
}

TEST_CASE("theta_squared") {
    CHECK(theta_squared(parse_theta("2*sqrt(7)")) == QuadExt(Rat(28)));
    CHECK(theta_squared(parse_theta("3/2")) == QuadExt(Rat(9, 4)));
    CHECK(theta_squared(parse_theta("sqrt(25+12*sqrt(3))")) == QuadExt(Rat(25), Rat(12), Int(3)));
    CHECK(theta_squared(parse_theta("sqrt(43-24*sqrt(3))")) ==
          QuadExt(Rat(43), Rat(-24), Int(3)));
    CHECK(theta_squared(parse_theta("qroot(5)")) == QuadExt(Rat(0), Rat(1), Int(5)));
    CHECK_THROWS_AS(theta_squared(parse_theta("1+qroot(2)")), std::domain_error);
}

TEST_CASE("algebraic degree classes") {
    CHECK(algebraic_degree_class(parse_theta("4")) == 1);
    CHECK(algebraic_degree_class(parse_theta("sqrt(3)")) == 2);
    CHECK(algebraic_degree_class(parse_theta("sqrt(4+sqrt(2))")) == 4);
    CHECK(algebraic_degree_class(parse_theta("1+qroot(2)")) == 4);
}

TEST_CASE("fuzz: random byte strings never crash the parser") {
    std::mt19937_64 rng(97);
    const std::string alphabet = "0123456789sqrtqroot()+-*/ .eE";
    std::uniform_int_distribution<std::size_t> len(0, 40);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    int parsed = 0;
    for (int i = 0; i < 20000; ++i) {
        std::string s;
        const std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) s += alphabet[pick(rng)];
        try {
            ThetaClass t = parse_theta(s);
            ++parsed;
            CHECK(parse_theta(to_string(t)) == t);  // whatever parses, round trips
        } catch (const ParseError&) {
        }
    }
    CHECK(parsed > 0);  // the alphabet does produce some valid inputs
}

TEST_CASE("fuzz: structured random expressions round trip") {
    std::mt19937_64 rng(89);
    std::uniform_int_distribution<long> small(1, 400);
    std::uniform_int_distribution<int> shape(0, 5);
    auto rat = [&] { return std::to_string(small(rng)) + "/" + std::to_string(small(rng)); };
    int accepted = 0;
    for (int i = 0; i < 4000; ++i) {
        std::string s;
        switch (shape(rng)) {
            case 0: s = rat(); break;
            case 1: s = "sqrt(" + rat() + ")"; break;
            case 2: s = rat() + "*sqrt(" + rat() + ")"; break;
            case 3: s = "sqrt(" + rat() + "+" + rat() + "*sqrt(" + rat() + "))"; break;
            case 4: s = "sqrt(" + rat() + "-" + rat() + "*sqrt(" + rat() + "))"; break;
            case 5: s = rat() + "+" + rat() + "*qroot(" + rat() + ")"; break;
        }
        try {
            const ThetaClass t = parse_theta(s);
            ++accepted;
            CHECK(parse_theta(to_string(t)) == t);
            // rescaling by 2 then 1/2 is the identity
            CHECK(rescale(rescale(t, Rat(2)), Rat(1, 2)) == t);
        } catch (const ParseError&) {
            // negative values under the radical etc.; rejection is fine
        }
    }
    CHECK(accepted > 2000);
}
