#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "equidist/numtheory.hpp"

#include <random>

using namespace equidist;

namespace {

// Trial-division oracle for small n.
Factorization trial_factor(long n) {
    Factorization out;
    for (long p = 2; p * p <= n; ++p) {
        unsigned long e = 0;
        while (n % p == 0) {
            ++e;
            n /= p;
        }
        if (e) out.emplace_back(Int(p), e);
    }
    if (n > 1) out.emplace_back(Int(n), 1);
    return out;
}

bool naive_is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p)
        if (n % p == 0) return false;
    return true;
}

// Direct search for x^2 + 3y^2 = q with the x-minimal nonnegative solution.
std::optional<std::pair<long, long>> brute_rep(long q) {
    for (long x = 0; x * x <= q; ++x) {
        const long rest = q - x * x;
        if (rest % 3 != 0) continue;
        const long y2 = rest / 3;
        const long y = static_cast<long>(std::sqrt(static_cast<double>(y2)));
        for (long yy = std::max(0L, y - 1); yy <= y + 1; ++yy)
            if (yy * yy == y2) return std::make_pair(x, yy);
    }
    return std::nullopt;
}

bool naive_squarefree(long q) {
    for (long p = 2; p * p <= q; ++p)
        if (q % (p * p) == 0) return false;
    return true;
}

long next_prime_at_least(long n) {
    while (!naive_is_prime(n)) ++n;
    return n;
}

}  // namespace

TEST_CASE("is_probable_prime basics") {
    CHECK(is_probable_prime(Int(2)));
    CHECK(is_probable_prime(Int(3)));
    CHECK(!is_probable_prime(Int(1)));
    CHECK(!is_probable_prime(Int(0)));
    CHECK(is_probable_prime(Int(1000003)));
    CHECK(!is_probable_prime(Int(1000001)));  // 101 * 9901
    for (long n = 2; n <= 5000; ++n) CHECK(is_probable_prime(Int(n)) == naive_is_prime(n));
    // Mersenne prime 2^89 - 1, beyond the trial-division range
    Int m89 = (Int(1) << 89) - 1;
    CHECK(is_probable_prime(m89));
    CHECK(!is_probable_prime(m89 * m89));
}

TEST_CASE("factorize examples") {
    CHECK(factorize(Int(12)) == Factorization{{Int(2), 2}, {Int(3), 1}});
    CHECK(factorize(Int(1001)) == trial_factor(1001));
    CHECK(factorize(Int(1001)) == Factorization{{Int(7), 1}, {Int(11), 1}, {Int(13), 1}});
    CHECK(factorize(Int(10403)) == trial_factor(10403));
    CHECK(factorize(Int(10403)) == Factorization{{Int(101), 1}, {Int(103), 1}});
    CHECK(factorize(Int(2)) == Factorization{{Int(2), 1}});
    CHECK_THROWS_AS(factorize(Int(1)), std::domain_error);
}

TEST_CASE("factorize reaches the rho stage") {
    // 1000003 * 1000033 has no factor below the trial-division limit
    Int n = Int(1000003) * Int(1000033);
    CHECK(factorize(n) == Factorization{{Int(1000003), 1}, {Int(1000033), 1}});
    // prime powers survive intact
    Int p = Int(1000003);
    CHECK(factorize(p * p) == Factorization{{p, 2}});
}

TEST_CASE("factorize random cross-check against trial division") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> dist(2, 4000000);
    for (int i = 0; i < 300; ++i) {
        const long n = dist(rng);
        CHECK(factorize(Int(n)) == trial_factor(n));
    }
}

TEST_CASE("factoring budget is enforced") {
    Int m89 = (Int(1) << 89) - 1;  // prime
    CHECK_THROWS_WITH_AS(factorize(m89 * m89), doctest::Contains("factoring budget exceeded"),
                         std::runtime_error);
    // a huge prime is fine: primality needs no factoring
    Int m521 = (Int(1) << 521) - 1;  // Mersenne prime
    CHECK(factorize(m521) == Factorization{{m521, 1}});
}

TEST_CASE("legendre examples") {
    CHECK(legendre(Int(-3), Int(7)) == 1);   // -3 = 4 = 2^2 (mod 7)
    CHECK(legendre(Int(-3), Int(5)) == -1);  // squares mod 5 are 0, 1, 4
    CHECK(legendre(Int(0), Int(7)) == 0);
    CHECK_THROWS_AS(legendre(Int(2), Int(15)), std::invalid_argument);
    CHECK_THROWS_AS(legendre(Int(2), Int(2)), std::invalid_argument);
}

TEST_CASE("legendre agrees with direct square enumeration") {
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L}) {
        std::vector<bool> residue(p, false);
        for (long t = 0; t < p; ++t) residue[(t * t) % p] = true;
        for (long a = -30; a <= 30; ++a) {
            const long am = ((a % p) + p) % p;
            const int expected = am == 0 ? 0 : (residue[am] ? 1 : -1);
            CHECK(legendre(Int(a), Int(p)) == expected);
        }
    }
}

TEST_CASE("sqrt_mod examples") {
    const Int r7 = sqrt_mod(Int(-3), Int(7));
    CHECK((r7 == 2 || r7 == 5));
    const Int r13a = sqrt_mod(Int(1), Int(13));
    CHECK((r13a == 1 || r13a == 12));
    const Int r13b = sqrt_mod(Int(-3), Int(13));
    CHECK((r13b == 6 || r13b == 7));
    CHECK_THROWS_AS(sqrt_mod(Int(2), Int(5)), std::invalid_argument);
}

TEST_CASE("sqrt_mod property: 500 random residues") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> pick(3, 1000000);
    for (int i = 0; i < 500; ++i) {
        long p = next_prime_at_least(pick(rng) | 1);
        if (p == 2) continue;
        std::uniform_int_distribution<long> tpick(1, p - 1);
        const long t = tpick(rng);
        const Int a = Int(t) * Int(t) % Int(p);
        if (a == 0) continue;
        const Int r = sqrt_mod(a, Int(p));
        CHECK(r > 0);
        CHECK(r < p);
        CHECK(r * r % Int(p) == a);
    }
}

TEST_CASE("represent_prime examples") {
    auto check_rep = [](long p, long ex, long ey) {
        const FormRep rep = represent_prime(Int(p));
        CHECK(rep.valid());
        CHECK(rep.q == p);
        CHECK(rep.x == ex);
        CHECK(rep.y == ey);
        const auto oracle = brute_rep(p);
        REQUIRE(oracle.has_value());
        CHECK(rep.x == oracle->first);
        CHECK(rep.y == oracle->second);
    };
    check_rep(3, 0, 1);
    check_rep(7, 2, 1);
    check_rep(13, 1, 2);
    CHECK_THROWS_AS(represent_prime(Int(5)), std::invalid_argument);
    CHECK_THROWS_AS(represent_prime(Int(25)), std::invalid_argument);
}

TEST_CASE("represent_prime matches the brute-force minimum for p <= 1e4") {
    for (long p = 3; p <= 10000; ++p) {
        if (!naive_is_prime(p) || (p != 3 && p % 6 != 1)) continue;
        const FormRep rep = represent_prime(Int(p));
        CHECK(rep.valid());
        const auto oracle = brute_rep(p);
        REQUIRE(oracle.has_value());
        CHECK(rep.x == oracle->first);
        CHECK(rep.y == oracle->second);
    }
}

TEST_CASE("compose_reps examples") {
    const FormRep r3{Int(0), Int(1), Int(3)};
    const FormRep r7{Int(2), Int(1), Int(7)};
    const FormRep id{Int(1), Int(0), Int(1)};
    const FormRep r21 = compose_reps(r3, r7);
    CHECK(r21.x == 3);
    CHECK(r21.y == 2);
    CHECK(r21.q == 21);
    CHECK(compose_reps(id, r7).x == r7.x);
    CHECK(compose_reps(id, r7).y == r7.y);
    const FormRep r49 = compose_reps(r7, r7);
    CHECK(r49.valid());
    CHECK(r49.q == 49);
    CHECK(r49.x == 7);
    CHECK(r49.y == 0);
}

TEST_CASE("compose_reps property") {
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long> pick(-50, 50);
    for (int i = 0; i < 300; ++i) {
        const Int x1(pick(rng)), y1(pick(rng)), x2(pick(rng)), y2(pick(rng));
        const FormRep a{x1, y1, x1 * x1 + 3 * y1 * y1};
        const FormRep b{x2, y2, x2 * x2 + 3 * y2 * y2};
        const FormRep c = compose_reps(a, b);
        CHECK(c.valid());
        CHECK(c.q == a.q * b.q);
        CHECK(c.x >= 0);
        CHECK(c.y >= 0);
    }
}

TEST_CASE("good_squarefree examples") {
    CHECK(good_squarefree(Int(3)));
    CHECK(good_squarefree(Int(7)));
    CHECK(good_squarefree(Int(21)));
    CHECK(!good_squarefree(Int(2)));
    CHECK(!good_squarefree(Int(5)));
    CHECK(!good_squarefree(Int(10)));
    CHECK_THROWS_AS(good_squarefree(Int(12)), std::invalid_argument);
    CHECK_THROWS_AS(good_squarefree(Int(1)), std::invalid_argument);
}

TEST_CASE("represent_q examples") {
    const FormRep r7 = represent_q(Int(7));
    CHECK(r7.x == 2);
    CHECK(r7.y == 1);
    const FormRep r21 = represent_q(Int(21));
    CHECK(r21.x == 3);
    CHECK(r21.y == 2);
    const FormRep r3 = represent_q(Int(3));
    CHECK(r3.x == 0);
    CHECK(r3.y == 1);
    CHECK_THROWS_AS(represent_q(Int(10)), std::invalid_argument);
}

TEST_CASE("represent_q equation holds for all good q <= 2e4") {
    for (long q = 2; q <= 20000; ++q) {
        if (!naive_squarefree(q)) continue;
        if (!good_squarefree(Int(q))) continue;
        const FormRep rep = represent_q(Int(q));
        CHECK(rep.valid());
        CHECK(rep.q == q);
        CHECK(rep.y != 0);
    }
}

TEST_CASE("oracle equivalence: representable iff all primes are 3 or 1 mod 6") {
    for (long q = 2; q <= 200; ++q) {
        if (!naive_squarefree(q)) continue;
        CHECK(good_squarefree(Int(q)) == brute_rep(q).has_value());
    }
}

TEST_CASE("three_square_admissible examples") {
    CHECK(!three_square_admissible(Rat(7)));     // 7 = 8*0 + 7
    CHECK(three_square_admissible(Rat(50)));     // 50 = 25 + 25 + 0
    CHECK(!three_square_admissible(Rat(7, 9)));  // mn = 63 = 8*7 + 7
    CHECK(!three_square_admissible(Rat(28)));    // 28 = 4*7
    CHECK(three_square_admissible(Rat(1)));
    CHECK_THROWS_AS(three_square_admissible(Rat(0)), std::domain_error);
    CHECK_THROWS_AS(three_square_admissible(Rat(-7)), std::domain_error);
}

TEST_CASE("three_square_admissible is invariant under square scaling") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> pick(1, 500);
    for (int i = 0; i < 300; ++i) {
        const Rat x(Int(pick(rng)), Int(pick(rng)));
        const Rat s(Int(pick(rng)), Int(pick(rng)));
        CHECK(three_square_admissible(x) == three_square_admissible(x * s.square()));
    }
}
