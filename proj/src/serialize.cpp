#include "onecenter/serialize.hpp"

#include "onecenter/errors.hpp"
#include "onecenter/instance.hpp"

namespace onecenter {

namespace {

std::size_t decimal_digits_for(const Rat& width) {
    Rat bound(1);
    for (std::size_t k = 0; k <= 40; ++k) {
        if (bound <= width) return k;
        bound /= 10;
    }
    return 40;
}

OrderedJson poly_to_json(const Poly& p) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return arr;
}

Poly poly_from_json_exact(const nlohmann::json& v) {
    std::vector<Rat> coeffs;
    for (const auto& c : v) coeffs.push_back(rat_from_json(c));
    return Poly(std::move(coeffs));
}

std::vector<std::size_t> ids_from_json(const nlohmann::json& v) {
    std::vector<std::size_t> out;
    for (const auto& x : v) out.push_back(x.get<std::size_t>());
    return out;
}

AlgebraicTime algebraic_from_json(const nlohmann::json& v) {
    const auto& exact = v.at("exact");
    Poly defining = poly_from_json_exact(exact.at("defining"));
    const Rat lo = rat_from_json(exact.at("isolate")[0]);
    const Rat hi = rat_from_json(exact.at("isolate")[1]);
    return AlgebraicTime(std::move(defining), Interval(lo, hi));
}

EventKind kind_from_string(const std::string& s) {
    if (s == "START") return EventKind::Start;
    if (s == "END") return EventKind::End;
    if (s == "IN") return EventKind::In;
    if (s == "OUT") return EventKind::Out;
    if (s == "SUPPORT_CHANGE") return EventKind::SupportChange;
    throw ValidationError("unknown event kind: " + s);
}

} // namespace

OrderedJson algebraic_to_json(const AlgebraicTime& at, const Rat& width) {
    const AlgebraicTime r = refine(at, width);
    OrderedJson j;
    j["exact"]["defining"] = poly_to_json(r.defining());
    j["exact"]["isolate"] = OrderedJson::array({rat_to_string(r.lower()), rat_to_string(r.upper())});
    j["approx"] = rat_to_decimal(r.isolate().midpoint(), decimal_digits_for(width));
    return j;
}

OrderedJson ratfn_to_json(const RatFn& f) {
    OrderedJson j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

OrderedJson support_to_json(const SupportSet& s) {
    OrderedJson j;
    j["static"] = s.static_ids;
    j["mobile"] = s.mobile_ids;
    return j;
}

OrderedJson piecewise_to_json(const PiecewiseCenter& pc, const Rat& refine_width) {
    OrderedJson j;
    j["format"] = 1;
    j["dimension"] = pc.dimension;
    j["domain"] = OrderedJson::array({rat_to_string(pc.domain.lo), rat_to_string(pc.domain.hi)});

    j["arcs"] = OrderedJson::array();
    for (const auto& arc : pc.arcs) {
        OrderedJson a;
        a["span"]["start"] = algebraic_to_json(arc.start, refine_width);
        a["span"]["end"] = algebraic_to_json(arc.end, refine_width);
        a["support"] = support_to_json(arc.support);
        a["center"] = OrderedJson::array();
        for (const auto& comp : arc.curve.components) a["center"].push_back(ratfn_to_json(comp));
        a["radius_sq"] = ratfn_to_json(arc.radius_sq);
        j["arcs"].push_back(std::move(a));
    }

    j["events"] = OrderedJson::array();
    for (const auto& ev : pc.events) {
        OrderedJson e;
        e["time"] = algebraic_to_json(ev.time, refine_width);
        e["kind"] = to_string(ev.kind);
        e["joined"] = support_to_json(ev.joined);
        e["left"] = support_to_json(ev.left);
        j["events"].push_back(std::move(e));
    }
    return j;
}

PiecewiseCenter piecewise_from_json(const nlohmann::json& j) {
    PiecewiseCenter pc;
    pc.dimension = j.at("dimension").get<std::size_t>();
    pc.domain = Interval(rat_from_json(j.at("domain")[0]), rat_from_json(j.at("domain")[1]));

    for (const auto& a : j.at("arcs")) {
        Arc arc;
        arc.start = algebraic_from_json(a.at("span").at("start"));
        arc.end = algebraic_from_json(a.at("span").at("end"));
        arc.support.static_ids = ids_from_json(a.at("support").at("static"));
        arc.support.mobile_ids = ids_from_json(a.at("support").at("mobile"));
        std::vector<RatFn> comps;
        for (const auto& c : a.at("center"))
            comps.emplace_back(poly_from_json_exact(c.at("num")), poly_from_json_exact(c.at("den")));
        arc.curve = RatCurve(std::move(comps), pc.domain);
        arc.radius_sq = RatFn(poly_from_json_exact(a.at("radius_sq").at("num")),
                              poly_from_json_exact(a.at("radius_sq").at("den")));
        arc.gram_det = RatFn(Rat(1));
        pc.arcs.push_back(std::move(arc));
    }
    for (const auto& e : j.at("events")) {
        Event ev;
        ev.time = algebraic_from_json(e.at("time"));
        ev.kind = kind_from_string(e.at("kind").get<std::string>());
        ev.joined.static_ids = ids_from_json(e.at("joined").at("static"));
        ev.joined.mobile_ids = ids_from_json(e.at("joined").at("mobile"));
        ev.left.static_ids = ids_from_json(e.at("left").at("static"));
        ev.left.mobile_ids = ids_from_json(e.at("left").at("mobile"));
        pc.events.push_back(std::move(ev));
    }
    return pc;
}

OrderedJson verify_report_to_json(const VerifyReport& report, const std::vector<EventGap>& gaps,
                                  const Rat& refine_width) {
    OrderedJson j;
    j["samples"] = report.samples;
    j["exact_matches"] = report.exact_matches;
    j["max_dev"] = rat_to_string(report.max_dev);
    j["failures"] = OrderedJson::array();
    for (const auto& f : report.failures) {
        OrderedJson fj;
        fj["t"] = rat_to_string(f.t);
        OrderedJson exp = OrderedJson::array(), got = OrderedJson::array();
        for (const auto& c : f.expected.x) exp.push_back(rat_to_string(c));
        for (const auto& c : f.got.x) got.push_back(rat_to_string(c));
        fj["expected"] = std::move(exp);
        fj["got"] = std::move(got);
        j["failures"].push_back(std::move(fj));
    }

    j["continuity"] = OrderedJson::array();
    for (const auto& g : gaps) {
        OrderedJson gj;
        gj["event_index"] = g.event_index;
        gj["time_approx"] = rat_to_decimal(g.time.approx(refine_width), 12);
        gj["exact"] = g.exact;
        OrderedJson arr = OrderedJson::array();
        for (const auto& v : g.gap_abs) arr.push_back(rat_to_string(v));
        gj["gap_abs"] = std::move(arr);
        j["continuity"].push_back(std::move(gj));
    }
    return j;
}

OrderedJson seb_result_to_json(const SebResult& result) {
    OrderedJson j;
    OrderedJson center = OrderedJson::array();
    for (const auto& c : result.ball.center.x) center.push_back(rat_to_string(c));
    j["center"] = std::move(center);
    j["radius_sq"] = rat_to_string(result.ball.radius_sq);
    j["support"] = result.support;
    return j;
}

std::string json_to_text(const OrderedJson& j) { return j.dump(2) + "\n"; }

} // namespace onecenter
