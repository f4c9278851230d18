#pragma once

#include "equidist/exactnum.hpp"

#include <vector>

namespace equidist {

/// Seed for the randomized parts of the factorizer; runs are reproducible
/// for a fixed seed.
inline constexpr unsigned long kDefaultFactorSeed = 0x9e3779b9UL;

/// Complete prime factorization: (prime, exponent) pairs sorted by prime.
using Factorization = std::vector<std::pair<Int, unsigned long>>;

/// Miller-Rabin primality test. Deterministic for n below 3.3e24 (fixed
/// 13-base set); above that, 64 seeded random-base rounds (error < 2^-128).
bool is_probable_prime(const Int& n, unsigned long seed = kDefaultFactorSeed);

/// Factors n >= 2: trial division to 10^6, then Brent-cycle Pollard rho.
/// Composite cofactors beyond 2^128 throw std::runtime_error ("factoring
/// budget exceeded") instead of grinding indefinitely.
Factorization factorize(const Int& n, unsigned long seed = kDefaultFactorSeed);

/// Legendre symbol (a/p); throws std::invalid_argument unless p is an odd prime.
int legendre(const Int& a, const Int& p);

/// A square root of a modulo the odd prime p (Tonelli-Shanks), 0 < r < p.
/// Requires legendre(a, p) = +1.
Int sqrt_mod(const Int& a, const Int& p);

/// A representation x^2 + 3*y^2 = q.
struct FormRep {
    Int x;
    Int y;
    Int q;

    bool valid() const { return x * x + 3 * y * y == q; }
};

/// Writes the prime p as x^2 + 3*y^2. Defined for p = 3 and p = 1 (mod 6);
/// uses Cornacchia descent on (p, sqrt_mod(-3, p)). Output has x, y >= 0
/// with x minimal, so certificates are deterministic.
FormRep represent_prime(const Int& p, unsigned long seed = kDefaultFactorSeed);

/// Composes representations via
/// (a^2+3b^2)(c^2+3d^2) = (ac+3bd)^2 + 3(ad-bc)^2, normalized to x, y >= 0.
FormRep compose_reps(const FormRep& r1, const FormRep& r2);

/// True iff every prime factor of the square-free q >= 2 is 3 or 1 (mod 6).
/// Throws std::invalid_argument if q is not square-free or q < 2.
bool good_squarefree(const Int& q, unsigned long seed = kDefaultFactorSeed);

/// Writes square-free q with good_squarefree(q) as x^2 + 3*y^2 by composing
/// prime representations; y != 0 always (y = 0 would force q to be a square).
FormRep represent_q(const Int& q, unsigned long seed = kDefaultFactorSeed);

/// True iff the positive rational x is a sum of three rational squares,
/// i.e. num*den is not of the form 4^l*(8k+7).
bool three_square_admissible(const Rat& x);

}  // namespace equidist
