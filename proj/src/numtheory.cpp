#include "equidist/numtheory.hpp"

#include <algorithm>
#include <map>

namespace equidist {

namespace {

constexpr unsigned long kTrialLimit = 1000000UL;

class RandState {
public:
    explicit RandState(unsigned long seed) {
        gmp_randinit_mt(state_);
        gmp_randseed_ui(state_, seed);
    }
    ~RandState() { gmp_randclear(state_); }
    RandState(const RandState&) = delete;
    RandState& operator=(const RandState&) = delete;

    // Uniform in [lo, hi).
    Int uniform(const Int& lo, const Int& hi) {
        Int r;
        Int span = hi - lo;
        mpz_urandomm(r.get_mpz_t(), state_, span.get_mpz_t());
        return r + lo;
    }

private:
    gmp_randstate_t state_;
};

Int powmod(const Int& base, const Int& exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// One Miller-Rabin round for witness a against n = d * 2^s + 1 (d odd).
bool mr_round(const Int& n, const Int& d, unsigned long s, const Int& a) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
    }
    return false;
}

// Largest n for which the fixed witness set below is a proven primality
// certificate (Sorenson-Webster): 3,317,044,064,679,887,385,961,981.
const Int& deterministic_mr_bound() {
    static const Int bound("3317044064679887385961981", 10);
    return bound;
}

}  // namespace

bool is_probable_prime(const Int& n, unsigned long seed) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    if (n < deterministic_mr_bound()) {
        for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
            if (!mr_round(n, d, s, Int(a))) return false;
        return true;
    }
    RandState rng(seed);
    for (int round = 0; round < 64; ++round) {
        Int a = rng.uniform(Int(2), n - 1);
        if (!mr_round(n, d, s, a)) return false;
    }
    return true;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
Int pollard_brent(const Int& n, RandState& rng) {
    if (n % 2 == 0) return Int(2);
    while (true) {
        Int y = rng.uniform(Int(1), n);
        Int c = rng.uniform(Int(1), n);
        Int m = 128, g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = r - k < m ? r - k : m;
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                    q = q * diff % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            // Backtrack one step at a time.
            do {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
        // cycle degenerated; retry with fresh parameters
    }
}

void factor_recursive(const Int& n, std::map<Int, unsigned long>& out, RandState& rng,
                      unsigned long seed) {
    if (n == 1) return;
    if (is_probable_prime(n, seed)) {
        ++out[n];
        return;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 128)
        throw std::runtime_error("factoring budget exceeded: composite cofactor " + n.get_str() +
                                 " is beyond 2^128");
    Int f = pollard_brent(n, rng);
    factor_recursive(f, out, rng, seed);
    factor_recursive(n / f, out, rng, seed);
}

}  // namespace

Factorization factorize(const Int& n, unsigned long seed) {
    if (n < 2) throw std::domain_error("factorize: n must be >= 2");
    std::map<Int, unsigned long> acc;
    Int m = n;
    for (unsigned long p = 2; p <= kTrialLimit && p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++acc[Int(p)];
            m /= p;
        }
    }
    if (m > 1) {
        if (m <= kTrialLimit * Int(kTrialLimit)) {
            // No factor <= 10^6 survived trial division, so m is prime.
            ++acc[m];
        } else {
            RandState rng(seed);
            factor_recursive(m, acc, rng, seed);
        }
    }
    Factorization result(acc.begin(), acc.end());
    return result;
}

int legendre(const Int& a, const Int& p) {
    if (p < 3 || p % 2 == 0 || !is_probable_prime(p))
        throw std::invalid_argument("legendre: p must be an odd prime");
    return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

Int sqrt_mod(const Int& a, const Int& p) {
    if (legendre(a, p) != 1)
        throw std::invalid_argument("sqrt_mod: a is not a quadratic residue mod p");
    Int am = a % p;
    if (am < 0) am += p;
    if (p % 4 == 3) return powmod(am, (p + 1) / 4, p);

    // Tonelli-Shanks. Smallest non-residue keeps the output deterministic.
    Int q = p - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Int c = powmod(z, q, p);
    Int x = powmod(am, (q + 1) / 2, p);
    Int t = powmod(am, q, p);
    unsigned long m = s;
    while (t != 1) {
        Int tt = t;
        unsigned long i = 0;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

namespace {

FormRep normalize_rep(FormRep r) {
    mpz_abs(r.x.get_mpz_t(), r.x.get_mpz_t());
    mpz_abs(r.y.get_mpz_t(), r.y.get_mpz_t());
    return r;
}

// Cornacchia descent from one root of t^2 = -3 (mod p).
std::optional<FormRep> cornacchia_attempt(const Int& p, Int t) {
    Int r0 = p, r1 = std::move(t);
    while (r1 * r1 >= p) {
        Int r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    Int rest = p - r1 * r1;
    if (rest % 3 != 0) return std::nullopt;
    Int y2 = rest / 3;
    if (!mpz_perfect_square_p(y2.get_mpz_t())) return std::nullopt;
    Int y;
    mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
    return normalize_rep({r1, y, p});
}

}  // namespace

FormRep represent_prime(const Int& p, unsigned long seed) {
    if (p == 3) return {Int(0), Int(1), Int(3)};
    if (p % 6 != 1 || !is_probable_prime(p, seed))
        throw std::invalid_argument("represent_prime: p must be 3 or a prime = 1 (mod 6)");
    Int t = sqrt_mod(Int(-3), p);
    Int other = p - t;
    std::optional<FormRep> best;
    for (const Int& root : {t, other}) {
        auto cand = cornacchia_attempt(p, root);
        if (!cand) continue;
        if (!best || cand->x < best->x || (cand->x == best->x && cand->y < best->y))
            best = cand;
    }
    if (!best) throw std::logic_error("represent_prime: descent failed for " + p.get_str());
    return *best;
}

FormRep compose_reps(const FormRep& r1, const FormRep& r2) {
    FormRep out;
    out.x = r1.x * r2.x + 3 * r1.y * r2.y;
    out.y = r1.x * r2.y - r1.y * r2.x;
    out.q = r1.q * r2.q;
    return normalize_rep(out);
}

bool good_squarefree(const Int& q, unsigned long seed) {
    if (q < 2) throw std::invalid_argument("good_squarefree: q must be >= 2");
    bool ok = true;
    for (const auto& [p, e] : factorize(q, seed)) {
        if (e > 1) throw std::invalid_argument("good_squarefree: q is not square-free");
        if (p != 3 && p % 6 != 1) ok = false;
    }
    return ok;
}

FormRep represent_q(const Int& q, unsigned long seed) {
    if (!good_squarefree(q, seed))
        throw std::invalid_argument("represent_q: q has a prime factor that is not 3 or 1 (mod 6)");
    FormRep acc{Int(1), Int(0), Int(1)};
    for (const auto& [p, e] : factorize(q, seed)) acc = compose_reps(acc, represent_prime(p, seed));
    if (acc.y == 0) throw std::logic_error("represent_q: zero y for square-free q");
    return acc;
}

bool three_square_admissible(const Rat& x) {
    if (x.sgn() <= 0) throw std::domain_error("three_square_admissible: x must be positive");
    Int mn = x.num() * x.den();
    while (mn % 4 == 0) mn /= 4;
    return mn % 8 != 7;
}

}  // namespace equidist
