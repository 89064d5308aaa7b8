#ifndef ONECENTER_PLOT_HPP
#define ONECENTER_PLOT_HPP

#include "onecenter/tracker.hpp"

#include <string>
#include <vector>

namespace onecenter {

// Per-arc blocks of "t,x,y" rows (samples_per_arc + 1 rows each, endpoints
// included). Byte-deterministic for a given input. d == 2 only.
std::string plot_csv(const PiecewiseCenter& pc, std::size_t samples_per_arc);

// Static points as markers, the mobile traces dashed, one polyline per arc.
// Byte-deterministic for a given input. d == 2 only.
std::string plot_svg(const PiecewiseCenter& pc, const std::vector<Point>& statics,
                     const std::vector<RatCurve>& mobiles, std::size_t samples_per_arc);

} // namespace onecenter

#endif
