#include "sw/schedule.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sw {

Schedule builtin_schedule(const std::string& name) {
    Schedule s;
    s.name = name;
    using C = Color;
    if (name == "toric2d-3step") {
        s.rounds = {{{C::red}, {}}, {{C::blue}, {}}, {{C::green}, {}}};
    } else if (name == "toric-nd-6step" || name == "xcube-6step") {
        s.rounds = {{{C::red, C::black}, {}}, {{C::green}, {}}, {{C::blue}, {}},
                    {{C::red}, {}},           {{C::green}, {}}, {{C::blue}, {}}};
    } else if (name == "css-6step") {
        s.rounds = {{{C::blue, C::red}, OpType::XX}, {{C::green}, OpType::ZZ},
                    {{C::red}, OpType::XX},          {{C::blue}, OpType::ZZ},
                    {{C::green}, OpType::XX},        {{C::red, C::black}, OpType::ZZ}};
    } else if (name == "baconshor-2step") {
        s.rounds = {{{C::red}, {}}, {{C::green}, {}}};
    } else {
        throw std::invalid_argument("unknown schedule: " + name);
    }
    return s;
}

static Color color_from_name(const std::string& n) {
    if (n == "green") return Color::green;
    if (n == "blue") return Color::blue;
    if (n == "red") return Color::red;
    if (n == "black") return Color::black;
    throw std::invalid_argument("unknown check color: " + n);
}

static OpType optype_from_name(const std::string& n) {
    if (n == "XX") return OpType::XX;
    if (n == "YY") return OpType::YY;
    if (n == "ZZ") return OpType::ZZ;
    throw std::invalid_argument("unknown operator type: " + n);
}

Schedule schedule_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Schedule s;
    s.name = j.value("name", "custom");
    for (auto& rj : j.at("rounds")) {
        Round r;
        for (auto& c : rj.at("colors")) r.colors.insert(color_from_name(c.get<std::string>()));
        if (r.colors.empty()) throw std::invalid_argument("schedule round with no colors");
        if (rj.contains("op_override") && !rj["op_override"].is_null())
            r.op_override = optype_from_name(rj["op_override"].get<std::string>());
        s.rounds.push_back(std::move(r));
    }
    if (s.rounds.empty()) throw std::invalid_argument("schedule with no rounds");
    return s;
}

std::string schedule_to_json(const Schedule& s) {
    nlohmann::json j;
    j["name"] = s.name;
    auto rounds = nlohmann::json::array();
    for (const Round& r : s.rounds) {
        nlohmann::json rj;
        auto cols = nlohmann::json::array();
        for (Color c : r.colors) cols.push_back(color_name(c));
        rj["colors"] = std::move(cols);
        if (r.op_override) rj["op_override"] = optype_name(*r.op_override);
        rounds.push_back(std::move(rj));
    }
    j["rounds"] = std::move(rounds);
    return j.dump(2);
}

Schedule schedule_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schedule file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return schedule_from_json(ss.str());
}

} // namespace sw
