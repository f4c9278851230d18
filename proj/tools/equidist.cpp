// Command-line front end: classify side lengths, emit witness points,
// verify certificates, export the triangle atlas, run the built-in checks.

#include <CLI11.hpp>
#include <json.hpp>

#include "equidist/engine.hpp"

#include <fstream>
#include <iostream>

using namespace equidist;

namespace {

constexpr int kExitGood = 0;
constexpr int kExitNotGood = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitParseError = 64;
constexpr int kExitBadFile = 65;

int verdict_exit_code(Verdict v) {
    switch (v) {
        case Verdict::good: return kExitGood;
        case Verdict::not_good: return kExitNotGood;
        case Verdict::unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

std::string class_label(const ThetaClass& t) {
    if (std::holds_alternative<RationalSide>(t)) return "rational";
    if (std::holds_alternative<QuadSurd>(t)) return "quadratic surd";
    if (std::holds_alternative<Biquadratic>(t)) return "biquadratic";
    return "non-biquadratic";
}

std::string join_distances(const std::array<Rat, 3>& d) {
    return d[0].str() + ", " + d[1].str() + ", " + d[2].str();
}

void print_report(const Certificate& c) {
    std::cout << "theta: " << to_string(c.theta) << "\n";
    std::cout << "class: " << class_label(c.theta);
    if (!std::holds_alternative<NonBiquadratic>(c.theta) &&
        !std::holds_alternative<RationalSide>(c.theta))
        std::cout << " (theta^2 = " << theta_squared(c.theta).str() << ")";
    std::cout << "\n";
    std::cout << "verdict: " << verdict_token(c.verdict) << "\n";
    if (c.reason != Reason::none) std::cout << "reason: " << reason_token(c.reason) << "\n";
    if (c.failed_filters.size() > 1) {
        std::cout << "failed filters:";
        for (Reason f : c.failed_filters) std::cout << " " << reason_token(f);
        std::cout << "\n";
    }
    if (c.prime) std::cout << "prime: " << c.prime->get_str() << "\n";
    if (c.obstruction_mn) std::cout << "mn: " << c.obstruction_mn->get_str() << "\n";
    if (c.rep)
        std::cout << "representation: " << c.rep->x.get_str() << "^2 + 3*" << c.rep->y.get_str()
                  << "^2 = " << c.rep->q.get_str() << "\n";
    if (c.e) std::cout << "e: " << c.e->str() << ", r: " << c.r->str() << ", s: " << c.s->str()
                       << "\n";
    if (c.triangle)
        std::cout << "triangle: [" << (*c.triangle)[0] << ", " << (*c.triangle)[1] << ", "
                  << (*c.triangle)[2] << "]\n";
    if (c.lambda) std::cout << "lambda: " << c.lambda->str() << "\n";
    if (c.sign) std::cout << "sign: " << (*c.sign > 0 ? "+" : "-") << "\n";
    if (c.distances) std::cout << "distances: " << join_distances(*c.distances) << "\n";
    if (c.bound) std::cout << "search bound: " << *c.bound << "\n";
}

void print_point(const WitnessPoint& p) {
    std::cout << "frame: B(-theta/2, 0), C(theta/2, 0), A(0, theta*sqrt(3)/2)\n";
    if (p.exact) {
        std::cout << "point (exact):\n";
        std::cout << "  x = " << p.x_surd.str() << "\n";
        std::cout << "  y = " << p.y_surd.str() << "\n";
    } else {
        std::cout << "point (numeric, certified to " << p.precision << " digits):\n";
    }
    std::cout << "  x ~ " << p.x_dec << "\n";
    std::cout << "  y ~ " << p.y_dec << "\n";
}

int run_classify(const std::string& expr, std::int64_t bound, bool as_json, unsigned long seed) {
    Certificate c;
    try {
        c = classify(parse_theta(expr), bound, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    if (as_json) {
        std::cout << certificate_to_json(c) << "\n";
    } else {
        print_report(c);
        const VerifyResult v = verify_certificate(c);
        std::cout << "verified: " << (v.ok ? "yes" : "NO (" + v.failure + ")") << "\n";
    }
    return verdict_exit_code(c.verdict);
}

int run_witness(const std::string& expr, std::int64_t bound, int precision, bool as_json,
                unsigned long seed) {
    Certificate c;
    try {
        c = classify(parse_theta(expr), bound, seed);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    }
    if (c.verdict != Verdict::good) {
        std::cerr << "no witness: verdict is " << verdict_token(c.verdict);
        if (c.reason != Reason::none) std::cerr << " (" << reason_token(c.reason) << ")";
        std::cerr << "\n";
        return verdict_exit_code(c.verdict);
    }
    const WitnessPoint p = witness_point(c, precision);
    if (as_json) {
        nlohmann::ordered_json j;
        j["theta"] = to_string(c.theta);
        j["exact"] = p.exact;
        if (p.exact) {
            j["x"] = p.x_surd.str();
            j["y"] = p.y_surd.str();
        }
        j["x_decimal"] = p.x_dec;
        j["y_decimal"] = p.y_dec;
        j["precision"] = p.precision;
        j["distances"] = {(*c.distances)[0].str(), (*c.distances)[1].str(),
                          (*c.distances)[2].str()};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "theta: " << to_string(c.theta) << "\n";
        print_point(p);
        const auto& d = *c.distances;
        std::cout << "distances: dA = " << d[0].str() << ", dB = " << d[1].str()
                  << ", dC = " << d[2].str() << "\n";
    }
    return kExitGood;
}

int run_verify(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return kExitBadFile;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    Certificate c;
    try {
        c = certificate_from_json(text);
    } catch (const CertificateFormatError& e) {
        std::cerr << "malformed certificate: " << e.what() << "\n";
        return kExitBadFile;
    }
    const VerifyResult v = verify_certificate(c);
    if (!v.ok) {
        std::cout << "verification failed: " << v.failure << "\n";
        return kExitNotGood;
    }
    std::cout << "certificate OK: " << to_string(c.theta) << " is "
              << verdict_token(c.verdict) << "\n";
    return kExitGood;
}

int run_atlas(std::int64_t max_side, const std::string& format, const std::string& out_path) {
    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out = &file;
    }
    const bool csv = format == "csv";
    if (csv) *out << "a,b,c,s1,sixteen_delta_sq,alpha,beta,kappa\n";
    for_each_primitive_triple(max_side, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        const PrimTriangle t = make_triangle(a, b, c);
        const Int sdd(t.sixteen_delta_sq());
        if (mpz_perfect_square_p(Int(3 * sdd).get_mpz_t())) return true;  // rational radical
        const Rat alpha(Int(t.s1()), Int(2));
        const Rat beta = Rat(3 * sdd, Int(4));
        const Rat k = kappa(t);
        if (csv) {
            *out << a << "," << b << "," << c << "," << t.s1() << "," << t.sixteen_delta_sq()
                 << "," << alpha.str() << "," << beta.str() << "," << k.str() << "\n";
        } else {
            nlohmann::ordered_json j;
            j["a"] = a;
            j["b"] = b;
            j["c"] = c;
            j["s1"] = t.s1();
            j["sixteen_delta_sq"] = t.sixteen_delta_sq();
            j["alpha"] = alpha.str();
            j["beta"] = beta.str();
            j["kappa"] = k.str();
            *out << j.dump() << "\n";
        }
        return true;
    });
    return out->good() ? 0 : 1;
}

struct BuiltinCheck {
    std::string label;
    bool pass;
};

int run_exercises(std::int64_t bound, unsigned long seed) {
    std::vector<BuiltinCheck> checks;
    auto verdict_of = [&](const std::string& expr) {
        return classify(parse_theta(expr), bound, seed);
    };

    {  // 1: which small radicals are good
        bool ok = true;
        const std::pair<const char*, Verdict> expected[] = {
            {"sqrt(2)", Verdict::not_good}, {"sqrt(3)", Verdict::good},
            {"sqrt(5)", Verdict::not_good}, {"sqrt(6)", Verdict::not_good},
            {"sqrt(7)", Verdict::good},     {"sqrt(10)", Verdict::not_good},
        };
        for (const auto& [expr, want] : expected) ok &= verdict_of(expr).verdict == want;
        checks.push_back({"1: good radicals among sqrt(2..10) are exactly sqrt(3), sqrt(7)", ok});
    }
    {  // 2: sqrt(25+12*sqrt(3)) is good via the (3,4,5) triangle
        const Certificate c = verdict_of("sqrt(25+12*sqrt(3))");
        bool ok = c.verdict == Verdict::good && c.triangle &&
                  *c.triangle == std::array<std::int64_t, 3>{3, 4, 5} && c.lambda &&
                  *c.lambda == Rat(1) && verify_certificate(c).ok;
        checks.push_back({"2: sqrt(25+12*sqrt(3)) is good via triangle (3,4,5)", ok});
    }
    {  // 3: alpha^2 < beta is never good
        bool ok = true;
        for (const char* expr : {"sqrt(1+sqrt(2))", "sqrt(2+sqrt(5))", "sqrt(3+sqrt(11))"})
            ok &= verdict_of(expr).verdict == Verdict::not_good;
        checks.push_back({"3: alpha^2 < beta instances are not good", ok});
    }
    {  // 4: witness for the side sqrt(3) triangle
        const Certificate c = verdict_of("sqrt(3)");
        bool ok = c.verdict == Verdict::good && c.distances &&
                  *c.distances == std::array<Rat, 3>{Rat(2), Rat(1), Rat(1)} &&
                  verify_certificate(c).ok &&
                  fundamental_relation_holds(Rat(2), Rat(1), Rat(1), QuadExt(Rat(3)));
        checks.push_back({"4: sqrt(3) has the rational-distance point with (2,1,1)", ok});
    }
    {  // 5: quartic binomials are never good
        bool ok = true;
        for (const char* expr : {"1+qroot(2)", "2+3*qroot(5)", "7-qroot(3)"}) {
            const Certificate c = verdict_of(expr);
            ok &= c.verdict == Verdict::not_good && c.reason == Reason::non_biquadratic_form;
        }
        checks.push_back({"5: quartic binomials gamma + delta*qroot(q) are not good", ok});
    }
    {  // 6: the three-squares obstruction
        const Certificate c = verdict_of("sqrt(7/2+1/2*sqrt(13))");
        bool has_f3 = false;
        for (Reason f : c.failed_filters) has_f3 |= f == Reason::not_three_square_admissible;
        bool ok = c.verdict == Verdict::not_good && has_f3 && c.obstruction_mn == Int(7);
        const Certificate c2 = verdict_of("sqrt(15/2+1/2*sqrt(17))");  // mn = 15 = 8+7
        has_f3 = false;
        for (Reason f : c2.failed_filters) has_f3 |= f == Reason::not_three_square_admissible;
        ok &= c2.verdict == Verdict::not_good && has_f3;
        checks.push_back({"6: 2*theta^2 = alpha + sqrt(beta) with mn = 4^l(8k+7) is not good", ok});
    }

    bool all = true;
    for (const auto& [label, pass] : checks) {
        std::cout << (pass ? "PASS" : "FAIL") << "  check " << label << "\n";
        all &= pass;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decides whether an equilateral triangle of side theta admits a point at "
                 "rational distance from all three vertices, with verifiable certificates"};
    app.require_subcommand(1);

    std::string expr, path, format = "jsonl", out_path;
    std::int64_t bound = 500;
    std::int64_t max_side = 0;
    int precision = 50;
    unsigned long seed = kDefaultFactorSeed;
    bool as_json = false;

    auto add_bound = [&](CLI::App* cmd) {
        cmd->add_option("--bound", bound, "triangle search bound (max side)")
            ->envname("EQUIDIST_BOUND")
            ->check(CLI::Range(std::int64_t(1), kMaxTriangleSide));
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed", seed, "seed for the randomized factorizer");
    };

    CLI::App* c_classify = app.add_subcommand("classify", "classify a side-length expression");
    c_classify->add_option("expr", expr, "side-length expression")->required();
    add_bound(c_classify);
    add_seed(c_classify);
    c_classify->add_flag("--json", as_json, "emit the certificate as JSON");

    CLI::App* c_witness = app.add_subcommand("witness", "emit a rational-distance point");
    c_witness->add_option("expr", expr, "side-length expression")->required();
    add_bound(c_witness);
    add_seed(c_witness);
    c_witness->add_option("--precision", precision, "decimal digits for numeric coordinates")
        ->check(CLI::Range(1, 10000));
    c_witness->add_flag("--json", as_json, "emit the witness as JSON");

    CLI::App* c_verify = app.add_subcommand("verify", "re-check a certificate file");
    c_verify->add_option("path", path, "certificate JSON file")->required();

    CLI::App* c_atlas = app.add_subcommand("atlas", "export the triangle-to-theta atlas");
    c_atlas->add_option("--max-side", max_side, "largest triangle side")
        ->required()
        ->check(CLI::Range(std::int64_t(1), kMaxTriangleSide));
    c_atlas->add_option("--format", format, "jsonl or csv")
        ->check(CLI::IsMember({"jsonl", "csv"}));
    c_atlas->add_option("--out", out_path, "output file (stdout when absent)");

    CLI::App* c_exercises = app.add_subcommand("exercises", "run the built-in example checks");
    add_bound(c_exercises);
    add_seed(c_exercises);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_classify->parsed()) return run_classify(expr, bound, as_json, seed);
        if (c_witness->parsed()) return run_witness(expr, bound, precision, as_json, seed);
        if (c_verify->parsed()) return run_verify(path);
        if (c_atlas->parsed()) return run_atlas(max_side, format, out_path);
        if (c_exercises->parsed()) return run_exercises(bound, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 70;  // internal software error
    }
    return 0;
}
