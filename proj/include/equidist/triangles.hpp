#pragma once

#include "equidist/exactnum.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace equidist {

/// Side bound that keeps every cached invariant inside int64.
inline constexpr std::int64_t kMaxTriangleSide = 30000;

struct TriangleError : std::invalid_argument {
    enum class Kind { degenerate, non_primitive, unsupported_scale };

    Kind kind;
    TriangleError(Kind k, const std::string& msg) : std::invalid_argument(msg), kind(k) {}
};

/// Primitive integral non-degenerate triangle, sides sorted a <= b <= c.
///
/// Caches s1 = a^2+b^2+c^2 and 16*Delta^2 (Delta the area), the latter via
/// the factored Heron form (a+b+c)(-a+b+c)(a-b+c)(a+b-c); non-degeneracy is
/// exactly 16*Delta^2 > 0.
class PrimTriangle {
public:
    std::int64_t a() const { return a_; }
    std::int64_t b() const { return b_; }
    std::int64_t c() const { return c_; }
    std::int64_t s1() const { return s1_; }
    std::int64_t sixteen_delta_sq() const { return sdd_; }

    friend bool operator==(const PrimTriangle&, const PrimTriangle&) = default;

private:
    friend PrimTriangle make_triangle(std::int64_t, std::int64_t, std::int64_t);

    PrimTriangle() = default;

    std::int64_t a_ = 0, b_ = 0, c_ = 0;
    std::int64_t s1_ = 0;
    std::int64_t sdd_ = 0;
};

/// Sorts, validates and builds. Degenerate (c >= a+b) and non-primitive
/// (gcd > 1) inputs raise TriangleError with distinct kinds, as does any
/// side beyond kMaxTriangleSide.
PrimTriangle make_triangle(std::int64_t a, std::int64_t b, std::int64_t c);

/// The similarity invariant (a^2+b^2+c^2)^2 / Delta^2 = 16*s1^2/(16*Delta^2),
/// exact. At least 48 for every triangle, with equality only when a = b = c.
Rat kappa(const PrimTriangle& t);

/// Visits every primitive non-degenerate triple a <= b <= c <= max_c exactly
/// once in (c, b, a)-lexicographic order. The callback receives raw sides and
/// returns false to stop early; the function returns false iff stopped.
template <class F>
bool for_each_primitive_triple(std::int64_t max_c, F&& f) {
    for (std::int64_t c = 1; c <= max_c; ++c)
        for (std::int64_t b = (c + 2) / 2; b <= c; ++b)
            for (std::int64_t a = c - b + 1; a <= b; ++a) {
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                if (!f(a, b, c)) return false;
            }
    return true;
}

/// All primitive non-degenerate triangles with c <= max_c, in (c, b, a) order.
std::vector<PrimTriangle> enumerate_primitive(std::int64_t max_c);

/// Streams every triangle whose kappa equals target exactly, in enumeration
/// order; the callback returns false to stop. The scan runs a cheap double
/// prefilter over raw triples (kappa is similarity-invariant, so the gcd
/// test is deferred to the rare prefilter hits); every candidate the
/// callback sees is primitive and confirmed in exact rational arithmetic.
template <class F>
void for_each_kappa_match(const Rat& target, std::int64_t max_c, F&& f) {
    if (target.sgn() <= 0) throw std::invalid_argument("kappa search: target must be positive");
    if (max_c < 1) throw std::invalid_argument("kappa search: max_c must be >= 1");
    if (max_c > kMaxTriangleSide)
        throw TriangleError(TriangleError::Kind::unsupported_scale,
                            "search bound exceeds supported scale");
    const double td = target.num().get_d() / target.den().get_d();
    const double tol = 1e-6 * td;
    for (std::int64_t c = 1; c <= max_c; ++c)
        for (std::int64_t b = (c + 2) / 2; b <= c; ++b) {
            const std::int64_t bc = b * b + c * c;
            for (std::int64_t a = c - b + 1; a <= b; ++a) {
                const std::int64_t s1 = a * a + bc;
                const std::int64_t sdd =
                    (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
                const double kd = 16.0 * double(s1) * double(s1) / double(sdd);
                if (!(kd - td <= tol && td - kd <= tol)) continue;
                if (std::gcd(std::gcd(a, b), c) != 1) continue;
                Int s1z(s1);
                if (Rat(16 * s1z * s1z, Int(sdd)) != target) continue;
                if (!f(make_triangle(a, b, c))) return;
            }
        }
}

/// All enumerated triangles whose kappa equals target exactly.
std::vector<PrimTriangle> search_by_kappa(const Rat& target, std::int64_t max_c);

}  // namespace equidist
