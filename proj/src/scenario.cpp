// Copyright 2026 The SceneLang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scenelang/scenario.hpp"

#include "scenelang/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>

namespace scenelang
{

namespace
{

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr double kGridTolerance = 1e-6;
// A stop point counts as "on" its approach when within one lane width of a
// centerline of that group.
constexpr double kStopPointTolerance = 3.7;

std::string item(const std::string & path, std::size_t i)
{
    return path + "[" + std::to_string(i) + "]";
}

std::string key(const std::string & path, const std::string & k)
{
    return path.empty() ? k : path + "." + k;
}

const json & require_field(const json & j, const std::string & path, const std::string & k)
{
    if (!j.is_object()) {
        throw SchemaError(path, "expected an object");
    }
    auto it = j.find(k);
    if (it == j.end()) {
        throw SchemaError(key(path, k), "missing field");
    }
    return *it;
}

double as_double(const json & j, const std::string & path)
{
    if (!j.is_number()) {
        throw SchemaError(path, "expected a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        throw SchemaError(path, "expected a finite number");
    }
    return v;
}

int as_int(const json & j, const std::string & path)
{
    if (!j.is_number_integer()) {
        throw SchemaError(path, "expected an integer");
    }
    return j.get<int>();
}

bool as_bool(const json & j, const std::string & path)
{
    if (!j.is_boolean()) {
        throw SchemaError(path, "expected a boolean");
    }
    return j.get<bool>();
}

std::string as_string(const json & j, const std::string & path)
{
    if (!j.is_string()) {
        throw SchemaError(path, "expected a string");
    }
    return j.get<std::string>();
}

const json & as_array(const json & j, const std::string & path)
{
    if (!j.is_array()) {
        throw SchemaError(path, "expected an array");
    }
    return j;
}

Eigen::Vector2d as_point(const json & j, const std::string & path)
{
    const json & arr = as_array(j, path);
    if (arr.size() != 2) {
        throw SchemaError(path, "expected [x, y]");
    }
    return {as_double(arr[0], item(path, 0)), as_double(arr[1], item(path, 1))};
}

Polygon as_polygon(const json & j, const std::string & path)
{
    const json & arr = as_array(j, path);
    Polygon poly;
    poly.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        poly.push_back(as_point(arr[i], item(path, i)));
    }
    return poly;
}

ordered_json point_json(const Eigen::Vector2d & p)
{
    return ordered_json::array({p.x(), p.y()});
}

ordered_json polygon_json(const Polygon & poly)
{
    ordered_json arr = ordered_json::array();
    for (const auto & p : poly) {
        arr.push_back(point_json(p));
    }
    return arr;
}

}  // namespace

const char * to_string(AgentKind kind)
{
    switch (kind) {
        case AgentKind::kVehicle:
            return "vehicle";
        case AgentKind::kPedestrian:
            return "pedestrian";
        case AgentKind::kCyclist:
            return "cyclist";
    }
    return "vehicle";
}

const char * to_string(SignalColor color)
{
    switch (color) {
        case SignalColor::kRed:
            return "red";
        case SignalColor::kYellow:
            return "yellow";
        case SignalColor::kGreen:
            return "green";
        case SignalColor::kArrowGreen:
            return "arrow_green";
        case SignalColor::kUnknown:
            return "unknown";
    }
    return "unknown";
}

std::optional<AgentKind> agent_kind_from_string(const std::string & s)
{
    if (s == "vehicle") return AgentKind::kVehicle;
    if (s == "pedestrian") return AgentKind::kPedestrian;
    if (s == "cyclist") return AgentKind::kCyclist;
    return std::nullopt;
}

std::optional<SignalColor> signal_color_from_string(const std::string & s)
{
    if (s == "red") return SignalColor::kRed;
    if (s == "yellow") return SignalColor::kYellow;
    if (s == "green") return SignalColor::kGreen;
    if (s == "arrow_green") return SignalColor::kArrowGreen;
    if (s == "unknown") return SignalColor::kUnknown;
    return std::nullopt;
}

const Agent & Scenario::ego() const
{
    const Agent * a = find(ego_id);
    if (a == nullptr) {
        throw InvariantError("ego_id", "ego agent '" + ego_id + "' not present in agents");
    }
    return *a;
}

const Agent * Scenario::find(const std::string & agent_id) const
{
    for (const Agent & a : agents) {
        if (a.id == agent_id) {
            return &a;
        }
    }
    return nullptr;
}

int Scenario::sample_count() const
{
    return agents.empty() ? 0 : static_cast<int>(agents.front().states.size());
}

int Scenario::future_index(double horizon_s) const
{
    return current_index + static_cast<int>(std::lround(horizon_s / timestep_s));
}

double Scenario::current_time() const
{
    const Agent & e = ego();
    return e.states.at(static_cast<std::size_t>(current_index)).t;
}

bool agent_id_less(const std::string & a, const std::string & b)
{
    auto numeric = [](const std::string & s, long long & out) {
        if (s.empty()) return false;
        for (char c : s) {
            if (std::isdigit(static_cast<unsigned char>(c)) == 0) return false;
        }
        out = std::stoll(s);
        return true;
    };
    long long na = 0;
    long long nb = 0;
    const bool a_num = numeric(a, na);
    const bool b_num = numeric(b, nb);
    if (a_num && b_num) {
        if (na != nb) return na < nb;
        return a < b;
    }
    if (a_num != b_num) return a_num;  // numeric ids first
    return a < b;
}

Scenario parse_scenario(const std::string & document)
{
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error & e) {
        throw SchemaError("", std::string("invalid JSON: ") + e.what());
    }

    Scenario s;
    s.id = as_string(require_field(doc, "", "id"), "id");
    s.timestep_s = as_double(require_field(doc, "", "timestep_s"), "timestep_s");
    s.current_index = as_int(require_field(doc, "", "current_index"), "current_index");
    s.ego_id = as_string(require_field(doc, "", "ego_id"), "ego_id");

    const json & agents = as_array(require_field(doc, "", "agents"), "agents");
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const std::string apath = item("agents", i);
        Agent agent;
        agent.id = as_string(require_field(agents[i], apath, "id"), key(apath, "id"));
        const std::string kind_str =
            as_string(require_field(agents[i], apath, "kind"), key(apath, "kind"));
        auto kind = agent_kind_from_string(kind_str);
        if (!kind) {
            throw SchemaError(key(apath, "kind"), "unknown agent kind '" + kind_str + "'");
        }
        agent.kind = *kind;
        const json & states =
            as_array(require_field(agents[i], apath, "states"), key(apath, "states"));
        for (std::size_t j = 0; j < states.size(); ++j) {
            const std::string spath = item(key(apath, "states"), j);
            TrajectoryState st;
            st.t = as_double(require_field(states[j], spath, "t"), key(spath, "t"));
            st.x = as_double(require_field(states[j], spath, "x"), key(spath, "x"));
            st.y = as_double(require_field(states[j], spath, "y"), key(spath, "y"));
            st.heading_deg =
                as_double(require_field(states[j], spath, "heading"), key(spath, "heading"));
            st.speed = as_double(require_field(states[j], spath, "speed"), key(spath, "speed"));
            st.valid = as_bool(require_field(states[j], spath, "valid"), key(spath, "valid"));
            agent.states.push_back(st);
        }
        s.agents.push_back(std::move(agent));
    }

    const json & map = require_field(doc, "", "map");
    const json & lanes = as_array(require_field(map, "map", "lanes"), "map.lanes");
    for (std::size_t i = 0; i < lanes.size(); ++i) {
        const std::string lpath = item("map.lanes", i);
        Lane lane;
        lane.group = as_string(require_field(lanes[i], lpath, "group"), key(lpath, "group"));
        lane.index = as_int(require_field(lanes[i], lpath, "index"), key(lpath, "index"));
        lane.centerline =
            as_polygon(require_field(lanes[i], lpath, "centerline"), key(lpath, "centerline"));
        s.map.lanes.push_back(std::move(lane));
    }
    const json & inters =
        as_array(require_field(map, "map", "intersections"), "map.intersections");
    for (std::size_t i = 0; i < inters.size(); ++i) {
        const std::string ipath = item("map.intersections", i);
        Intersection inter;
        inter.center = as_point(require_field(inters[i], ipath, "center"), key(ipath, "center"));
        inter.branches = as_int(require_field(inters[i], ipath, "branches"), key(ipath, "branches"));
        s.map.intersections.push_back(inter);
    }
    const json & signs = as_array(require_field(map, "map", "stop_signs"), "map.stop_signs");
    for (std::size_t i = 0; i < signs.size(); ++i) {
        const std::string spath = item("map.stop_signs", i);
        StopSign sign;
        sign.position = as_point(require_field(signs[i], spath, "position"), key(spath, "position"));
        sign.approach = as_string(require_field(signs[i], spath, "approach"), key(spath, "approach"));
        s.map.stop_signs.push_back(std::move(sign));
    }
    const json & crosswalks =
        as_array(require_field(map, "map", "crosswalks"), "map.crosswalks");
    for (std::size_t i = 0; i < crosswalks.size(); ++i) {
        s.map.crosswalks.push_back(as_polygon(crosswalks[i], item("map.crosswalks", i)));
    }
    const json & bumps = as_array(require_field(map, "map", "speed_bumps"), "map.speed_bumps");
    for (std::size_t i = 0; i < bumps.size(); ++i) {
        s.map.speed_bumps.push_back(as_polygon(bumps[i], item("map.speed_bumps", i)));
    }

    const json & signals = as_array(require_field(doc, "", "signals"), "signals");
    for (std::size_t i = 0; i < signals.size(); ++i) {
        const std::string spath = item("signals", i);
        SignalState sig;
        sig.approach = as_string(require_field(signals[i], spath, "approach"), key(spath, "approach"));
        const std::string color_str =
            as_string(require_field(signals[i], spath, "color"), key(spath, "color"));
        auto color = signal_color_from_string(color_str);
        if (!color) {
            throw SchemaError(key(spath, "color"), "unknown signal color '" + color_str + "'");
        }
        sig.color = *color;
        if (signals[i].contains("stop_point") && !signals[i]["stop_point"].is_null()) {
            sig.stop_point = as_point(signals[i]["stop_point"], key(spath, "stop_point"));
        }
        s.signals.push_back(std::move(sig));
    }

    const json & flags =
        as_array(require_field(doc, "", "interactive_flags"), "interactive_flags");
    for (std::size_t i = 0; i < flags.size(); ++i) {
        s.interactive_flags.insert(as_string(flags[i], item("interactive_flags", i)));
    }

    validate(s);
    return s;
}

void validate(const Scenario & s)
{
    if (s.id.empty()) {
        throw InvariantError("id", "must be non-empty");
    }
    if (!(s.timestep_s > 0.0)) {
        throw InvariantError("timestep_s", "must be positive");
    }
    if (s.agents.empty()) {
        throw InvariantError("agents", "must be non-empty");
    }

    std::unordered_set<std::string> ids;
    const std::size_t n = s.agents.front().states.size();
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        const Agent & a = s.agents[i];
        const std::string apath = item("agents", i);
        if (a.id.empty()) {
            throw InvariantError(key(apath, "id"), "must be non-empty");
        }
        if (!ids.insert(a.id).second) {
            throw InvariantError(key(apath, "id"), "duplicate agent id '" + a.id + "'");
        }
        if (a.states.empty()) {
            throw InvariantError(key(apath, "states"), "must be non-empty");
        }
        if (a.states.size() != n) {
            throw InvariantError(
                key(apath, "states"), "all agents must share the sample count " + std::to_string(n));
        }
        for (std::size_t j = 0; j < a.states.size(); ++j) {
            const std::string spath = item(key(apath, "states"), j);
            const TrajectoryState & st = a.states[j];
            if (j > 0 && !(st.t > a.states[j - 1].t)) {
                throw InvariantError(key(spath, "t"), "timestamps must be strictly increasing");
            }
            if (j > 0 && std::abs((st.t - a.states[j - 1].t) - s.timestep_s) > kGridTolerance) {
                throw InvariantError(
                    key(spath, "t"), "samples must be timestep_s apart");
            }
            if (std::abs(st.t - s.agents.front().states[j].t) > kGridTolerance) {
                throw InvariantError(key(spath, "t"), "agents must share the sample grid");
            }
            if (!(st.heading_deg > -180.0 - 1e-9) || !(st.heading_deg <= 180.0 + 1e-9)) {
                throw InvariantError(
                    key(spath, "heading"), "heading must be normalized into (-180, 180]");
            }
            if (st.speed < 0.0) {
                throw InvariantError(key(spath, "speed"), "speed must be non-negative");
            }
        }
    }

    if (s.find(s.ego_id) == nullptr) {
        throw InvariantError("ego_id", "ego agent '" + s.ego_id + "' not present in agents");
    }
    if (s.current_index < 0 || static_cast<std::size_t>(s.current_index) >= n) {
        throw InvariantError("current_index", "out of range");
    }
    const int future = s.current_index + static_cast<int>(std::lround(3.0 / s.timestep_s));
    if (static_cast<std::size_t>(future) >= n) {
        throw InvariantError("current_index", "no sample 3.0 s after the current moment");
    }
    for (std::size_t i = 0; i < s.agents.size(); ++i) {
        if (s.agents[i].id == s.ego_id &&
            !s.agents[i].states[static_cast<std::size_t>(s.current_index)].valid) {
            throw InvariantError(
                item(key(item("agents", i), "states"), static_cast<std::size_t>(s.current_index)),
                "ego must be valid at current_index");
        }
    }

    std::set<std::string> groups;
    for (std::size_t i = 0; i < s.map.lanes.size(); ++i) {
        const Lane & lane = s.map.lanes[i];
        const std::string lpath = item("map.lanes", i);
        if (lane.group.empty()) {
            throw InvariantError(key(lpath, "group"), "must be non-empty");
        }
        if (lane.centerline.size() < 2) {
            throw InvariantError(key(lpath, "centerline"), "needs at least two points");
        }
        groups.insert(lane.group);
    }
    for (std::size_t i = 0; i < s.map.intersections.size(); ++i) {
        if (s.map.intersections[i].branches < 3) {
            throw InvariantError(
                key(item("map.intersections", i), "branches"), "branch count must be >= 3");
        }
    }
    for (std::size_t i = 0; i < s.map.stop_signs.size(); ++i) {
        if (groups.count(s.map.stop_signs[i].approach) == 0) {
            throw InvariantError(
                key(item("map.stop_signs", i), "approach"),
                "references unknown approach '" + s.map.stop_signs[i].approach + "'");
        }
    }
    auto check_polygon = [](const Polygon & poly, const std::string & path) {
        if (poly.size() < 3) {
            throw InvariantError(path, "polygon needs at least three vertices");
        }
    };
    for (std::size_t i = 0; i < s.map.crosswalks.size(); ++i) {
        check_polygon(s.map.crosswalks[i], item("map.crosswalks", i));
    }
    for (std::size_t i = 0; i < s.map.speed_bumps.size(); ++i) {
        check_polygon(s.map.speed_bumps[i], item("map.speed_bumps", i));
    }

    for (std::size_t i = 0; i < s.signals.size(); ++i) {
        const SignalState & sig = s.signals[i];
        const std::string spath = item("signals", i);
        if (groups.count(sig.approach) == 0) {
            throw InvariantError(
                key(spath, "approach"), "references unknown approach '" + sig.approach + "'");
        }
        if (sig.stop_point) {
            double best = std::numeric_limits<double>::infinity();
            for (const Lane & lane : s.map.lanes) {
                if (lane.group != sig.approach) continue;
                for (std::size_t k = 0; k + 1 < lane.centerline.size(); ++k) {
                    const Eigen::Vector2d a = lane.centerline[k];
                    const Eigen::Vector2d b = lane.centerline[k + 1];
                    const Eigen::Vector2d ab = b - a;
                    const double len2 = ab.squaredNorm();
                    double u = len2 > 0.0 ? (*sig.stop_point - a).dot(ab) / len2 : 0.0;
                    u = std::clamp(u, 0.0, 1.0);
                    best = std::min(best, ((a + u * ab) - *sig.stop_point).norm());
                }
            }
            if (best > kStopPointTolerance) {
                throw InvariantError(
                    key(spath, "stop_point"), "does not lie on the referenced approach");
            }
        }
    }

    for (const std::string & flag : s.interactive_flags) {
        if (s.find(flag) == nullptr) {
            throw InvariantError(
                "interactive_flags", "flagged agent '" + flag + "' not present in agents");
        }
    }
}

std::string serialize_scenario(const Scenario & s)
{
    ordered_json doc;
    doc["id"] = s.id;
    doc["timestep_s"] = s.timestep_s;
    doc["current_index"] = s.current_index;
    doc["ego_id"] = s.ego_id;

    ordered_json agents = ordered_json::array();
    for (const Agent & a : s.agents) {
        ordered_json agent;
        agent["id"] = a.id;
        agent["kind"] = to_string(a.kind);
        ordered_json states = ordered_json::array();
        for (const TrajectoryState & st : a.states) {
            ordered_json state;
            state["t"] = st.t;
            state["x"] = st.x;
            state["y"] = st.y;
            state["heading"] = st.heading_deg;
            state["speed"] = st.speed;
            state["valid"] = st.valid;
            states.push_back(std::move(state));
        }
        agent["states"] = std::move(states);
        agents.push_back(std::move(agent));
    }
    doc["agents"] = std::move(agents);

    ordered_json map;
    ordered_json lanes = ordered_json::array();
    for (const Lane & lane : s.map.lanes) {
        ordered_json l;
        l["group"] = lane.group;
        l["index"] = lane.index;
        l["centerline"] = polygon_json(lane.centerline);
        lanes.push_back(std::move(l));
    }
    map["lanes"] = std::move(lanes);
    ordered_json inters = ordered_json::array();
    for (const Intersection & inter : s.map.intersections) {
        ordered_json i;
        i["center"] = point_json(inter.center);
        i["branches"] = inter.branches;
        inters.push_back(std::move(i));
    }
    map["intersections"] = std::move(inters);
    ordered_json signs = ordered_json::array();
    for (const StopSign & sign : s.map.stop_signs) {
        ordered_json sj;
        sj["position"] = point_json(sign.position);
        sj["approach"] = sign.approach;
        signs.push_back(std::move(sj));
    }
    map["stop_signs"] = std::move(signs);
    ordered_json crosswalks = ordered_json::array();
    for (const Polygon & poly : s.map.crosswalks) {
        crosswalks.push_back(polygon_json(poly));
    }
    map["crosswalks"] = std::move(crosswalks);
    ordered_json bumps = ordered_json::array();
    for (const Polygon & poly : s.map.speed_bumps) {
        bumps.push_back(polygon_json(poly));
    }
    map["speed_bumps"] = std::move(bumps);
    doc["map"] = std::move(map);

    ordered_json signals = ordered_json::array();
    for (const SignalState & sig : s.signals) {
        ordered_json sj;
        sj["approach"] = sig.approach;
        sj["color"] = to_string(sig.color);
        if (sig.stop_point) {
            sj["stop_point"] = point_json(*sig.stop_point);
        }
        signals.push_back(std::move(sj));
    }
    doc["signals"] = std::move(signals);

    ordered_json flags = ordered_json::array();
    for (const std::string & flag : s.interactive_flags) {
        flags.push_back(flag);
    }
    doc["interactive_flags"] = std::move(flags);

    return doc.dump(2) + "\n";
}

std::vector<Scenario> filter_interactive(std::vector<Scenario> scenarios)
{
    std::vector<Scenario> kept;
    kept.reserve(scenarios.size());
    for (auto & s : scenarios) {
        if (!s.interactive_flags.empty()) {
            kept.push_back(std::move(s));
        }
    }
    return kept;
}

}  // namespace scenelang
