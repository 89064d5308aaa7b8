#ifndef ONECENTER_SEB_HPP
#define ONECENTER_SEB_HPP

#include "onecenter/geometry.hpp"

#include <cstdint>
#include <vector>

namespace onecenter {

struct SebResult {
    Ball ball;
    // Sorted indices into the input: an affinely independent boundary subset
    // with CB(support) == ball and cc(support) in conv(support).
    std::vector<std::size_t> support;
};

// Smallest enclosing ball over exact rationals (Welzl, move-to-front, seeded
// deterministic shuffle). Accepts duplicate points.
SebResult seb(const std::vector<Point>& pts, std::uint64_t seed = 1);

// Independent oracle: enumerate affinely independent subsets, keep the ones
// passing is_boundary_support, return the (unique) resulting ball.
Ball seb_bruteforce(const std::vector<Point>& pts);

} // namespace onecenter

#endif
