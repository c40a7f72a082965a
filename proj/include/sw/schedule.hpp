#pragma once
// Periodic measurement routines: per round, the set of check colors measured
// and an optional uniform operator-type override (for the CSS variant).
#include "sw/weave.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sw {

struct Round {
    std::set<Color> colors;
    std::optional<OpType> op_override;
};

struct Schedule {
    std::string name;
    std::vector<Round> rounds;
    size_t period() const { return rounds.size(); }
    const Round& round(size_t r) const { return rounds[r % rounds.size()]; }
};

// names: toric2d-3step, toric-nd-6step, xcube-6step, css-6step, baconshor-2step
Schedule builtin_schedule(const std::string& name);
Schedule schedule_from_json(const std::string& text);
std::string schedule_to_json(const Schedule& s);
Schedule schedule_from_file(const std::string& path);

} // namespace sw
