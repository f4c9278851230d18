#include "equidist/triangles.hpp"

#include <algorithm>
#include <cmath>

namespace equidist {

PrimTriangle make_triangle(std::int64_t a, std::int64_t b, std::int64_t c) {
    if (a < 1 || b < 1 || c < 1)
        throw TriangleError(TriangleError::Kind::degenerate, "sides must be positive");
    std::int64_t s[3] = {a, b, c};
    std::sort(s, s + 3);
    if (s[2] > kMaxTriangleSide)
        throw TriangleError(TriangleError::Kind::unsupported_scale,
                            "side exceeds supported scale " + std::to_string(kMaxTriangleSide));
    if (s[2] >= s[0] + s[1])
        throw TriangleError(TriangleError::Kind::degenerate,
                            "degenerate triangle: " + std::to_string(s[2]) + " >= " +
                                std::to_string(s[0]) + " + " + std::to_string(s[1]));
    if (std::gcd(std::gcd(s[0], s[1]), s[2]) != 1)
        throw TriangleError(TriangleError::Kind::non_primitive,
                            "sides have a common factor");
    PrimTriangle t;
    t.a_ = s[0];
    t.b_ = s[1];
    t.c_ = s[2];
    t.s1_ = s[0] * s[0] + s[1] * s[1] + s[2] * s[2];
    t.sdd_ = (s[0] + s[1] + s[2]) * (-s[0] + s[1] + s[2]) * (s[0] - s[1] + s[2]) *
             (s[0] + s[1] - s[2]);
    return t;
}

Rat kappa(const PrimTriangle& t) {
    Int s1(t.s1());
    return Rat(16 * s1 * s1, Int(t.sixteen_delta_sq()));
}

std::vector<PrimTriangle> enumerate_primitive(std::int64_t max_c) {
    if (max_c < 1) throw std::invalid_argument("enumerate_primitive: max_c must be >= 1");
    std::vector<PrimTriangle> out;
    for_each_primitive_triple(max_c, [&](std::int64_t a, std::int64_t b, std::int64_t c) {
        out.push_back(make_triangle(a, b, c));
        return true;
    });
    return out;
}

std::vector<PrimTriangle> search_by_kappa(const Rat& target, std::int64_t max_c) {
    std::vector<PrimTriangle> out;
    for_each_kappa_match(target, max_c, [&](const PrimTriangle& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

}  // namespace equidist
