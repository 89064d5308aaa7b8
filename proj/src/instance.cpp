#include "onecenter/instance.hpp"

#include "onecenter/errors.hpp"

#include <fstream>

namespace onecenter {

Rat rat_from_json(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<std::int64_t>()));
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    if (v.is_number_float())
        throw ValidationError("binary float rejected; use an integer, \"p/q\" or a decimal string");
    throw ValidationError("expected a number literal, got: " + v.dump());
}

namespace {

Poly poly_from_json(const nlohmann::json& v) {
    if (!v.is_array()) throw ValidationError("polynomial coefficients must be an array");
    std::vector<Rat> coeffs;
    coeffs.reserve(v.size());
    for (const auto& c : v) coeffs.push_back(rat_from_json(c));
    return Poly(std::move(coeffs));
}

RatFn ratfn_from_json(const nlohmann::json& v) {
    if (!v.is_object() || !v.contains("num"))
        throw ValidationError("curve component must be an object with num/den coefficient lists");
    Poly num = poly_from_json(v.at("num"));
    Poly den = v.contains("den") ? poly_from_json(v.at("den")) : Poly::constant(Rat(1));
    if (den.is_zero()) throw ValidationError("curve component has a zero denominator polynomial");
    return RatFn(std::move(num), std::move(den));
}

Point point_from_json(const nlohmann::json& v, std::size_t dim) {
    if (!v.is_array() || v.size() != dim)
        throw ValidationError("point must be an array of exactly " + std::to_string(dim) + " coordinates");
    std::vector<Rat> coords;
    coords.reserve(dim);
    for (const auto& c : v) coords.push_back(rat_from_json(c));
    return Point(std::move(coords));
}

} // namespace

InstanceConfig instance_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    if (j.contains("format") && j.at("format").get<int>() != 1)
        throw ValidationError("unsupported config format version");

    InstanceConfig cfg;
    if (!j.contains("dimension")) throw ValidationError("config missing \"dimension\"");
    const auto dim_value = j.at("dimension");
    if (!dim_value.is_number_integer() || dim_value.get<int>() < 2)
        throw ValidationError("dimension must be an integer >= 2");
    cfg.dimension = dim_value.get<std::size_t>();

    if (!j.contains("domain") || !j.at("domain").is_array() || j.at("domain").size() != 2)
        throw ValidationError("config missing \"domain\": [lo, hi]");
    cfg.domain = Interval(rat_from_json(j.at("domain")[0]), rat_from_json(j.at("domain")[1]));
    if (!(cfg.domain.lo < cfg.domain.hi)) throw ValidationError("domain must satisfy lo < hi");

    if (!j.contains("static") || !j.at("static").is_array())
        throw ValidationError("config missing \"static\" point list");
    for (const auto& p : j.at("static")) cfg.statics.push_back(point_from_json(p, cfg.dimension));

    if (!j.contains("mobile") || !j.at("mobile").is_array())
        throw ValidationError("config missing \"mobile\" curve list");
    for (const auto& mc : j.at("mobile")) {
        if (!mc.is_array() || mc.size() != cfg.dimension)
            throw ValidationError("each mobile curve needs exactly " + std::to_string(cfg.dimension) +
                                  " components");
        std::vector<RatFn> comps;
        for (const auto& c : mc) comps.push_back(ratfn_from_json(c));
        cfg.mobiles.emplace_back(std::move(comps), cfg.domain);
    }

    if (j.contains("options")) {
        const auto& o = j.at("options");
        if (o.contains("refine_width")) {
            cfg.options.refine_width = rat_from_json(o.at("refine_width"));
            if (!(cfg.options.refine_width > 0)) throw ValidationError("refine_width must be positive");
        }
        if (o.contains("seed")) cfg.options.seed = o.at("seed").get<std::uint64_t>();
        if (o.contains("skip_gp_check")) cfg.options.skip_gp_check = o.at("skip_gp_check").get<bool>();
        if (o.contains("candidate_cap")) cfg.options.candidate_cap = o.at("candidate_cap").get<std::size_t>();
        if (o.contains("samples")) cfg.options.samples = o.at("samples").get<std::size_t>();
    }

    validate_instance(cfg.statics, cfg.mobiles, cfg.domain, cfg.trace_options());
    return cfg;
}

InstanceConfig load_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open config file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config is not valid JSON: ") + e.what());
    }
    return instance_from_json(j);
}

PointsFile points_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dimension") || !j.contains("points"))
        throw ValidationError("points file needs \"dimension\" and \"points\"");
    PointsFile pf;
    pf.dimension = j.at("dimension").get<std::size_t>();
    if (pf.dimension < 1) throw ValidationError("dimension must be positive");
    for (const auto& p : j.at("points")) pf.points.push_back(point_from_json(p, pf.dimension));
    if (pf.points.empty()) throw ValidationError("points file contains no points");
    return pf;
}

PointsFile load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open points file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("points file is not valid JSON: ") + e.what());
    }
    return points_from_json(j);
}

} // namespace onecenter
