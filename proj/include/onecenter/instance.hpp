#ifndef ONECENTER_INSTANCE_HPP
#define ONECENTER_INSTANCE_HPP

#include "onecenter/tracker.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace onecenter {

struct InstanceOptions {
    Rat refine_width = Rat(1, Int("1000000000000"));
    std::uint64_t seed = 1;
    bool skip_gp_check = false;
    std::size_t candidate_cap = 20000;
    std::size_t samples = 500;
};

struct InstanceConfig {
    std::size_t dimension = 0;
    std::vector<Point> statics;
    std::vector<RatCurve> mobiles;
    Interval domain;
    InstanceOptions options;

    TraceOptions trace_options() const {
        TraceOptions t;
        t.refine_width = options.refine_width;
        t.seed = options.seed;
        t.skip_gp_check = options.skip_gp_check;
        t.candidate_cap = options.candidate_cap;
        return t;
    }
};

// Parses and validates the instance JSON. Coordinates and coefficients are
// integers, "p/q" strings, or exact decimal strings; binary floats are
// rejected. Throws ValidationError on malformed input.
InstanceConfig instance_from_json(const nlohmann::json& j);
InstanceConfig load_instance_file(const std::string& path);

// Point-set input for the seb subcommand: {"dimension": d, "points": [...]}.
struct PointsFile {
    std::size_t dimension = 0;
    std::vector<Point> points;
};
PointsFile points_from_json(const nlohmann::json& j);
PointsFile load_points_file(const std::string& path);

// Exact scalar from a JSON value (integer or string literal).
Rat rat_from_json(const nlohmann::json& v);

} // namespace onecenter

#endif
