#pragma once
// Steady stabilizers: the center of the group generated by all measured check
// operators, plus the quotient construction that views a measurement round's
// couplings as gluing qubits into effective qubits.
#include "sw/engine.hpp"
#include "sw/schedule.hpp"
#include "sw/weave.hpp"

#include <array>
#include <string>
#include <vector>

namespace sw {

struct SSGElement {
    PauliWord op;                    // normalized, sign +1
    std::vector<int> constituents;   // indices into the generating operator list
    std::string color_class;         // "x-type" / "z-type" / "mixed"
};

// center of the group generated by the given operators (identity excluded)
std::vector<SSGElement> compute_center(const std::vector<PauliWord>& ops);
// Steady stabilizer group: central elements of the measured check group whose
// eigenvalues are pinned by the measurement cycle at every round offset
// (central loop products that are never value-determined are excluded).
// Constituents index the deduplicated (check, type) instance list of the
// schedule. The schedule-free overload picks the natural ordering for the
// diagram's color palette.
std::vector<SSGElement> compute_ssg(const InteractionDiagram& d);
std::vector<SSGElement> compute_ssg(const InteractionDiagram& d, const Schedule& s);

inline std::vector<PauliWord> ssg_words(const std::vector<SSGElement>& es) {
    std::vector<PauliWord> ws;
    ws.reserve(es.size());
    for (const SSGElement& e : es) ws.push_back(e.op);
    return ws;
}

// ---- coupling quotient (strong-coupling effective qubits) ----
// Gluing qubits along uniform-type couplings: each connected component becomes
// one effective qubit; a compatible operator maps to (X on components where its
// "flip" part is present everywhere, Z on components with odd "phase" parity).
struct EffectiveMap {
    size_t n_effective = 0;
    std::vector<int> component;          // original qubit -> effective qubit
    std::vector<std::vector<int>> members;
    OpType coupling_type = OpType::ZZ;
};

EffectiveMap make_effective_map(size_t n_qubits,
                                const std::vector<PauliWord>& couplings, OpType t);
// nullopt when w does not commute with all couplings
std::optional<PauliWord> map_through(const EffectiveMap& m, const PauliWord& w);

struct ClassicalCodeReport {
    bool uniform_round = true;
    size_t n_effective = 0;
    std::vector<PauliWord> effective_ssg;
    // [effective qubit][pauli 0=X,1=Y,2=Z] -> detected by some effective element
    std::vector<std::array<bool, 3>> detected;
    bool all_detected_some_type = true; // every effective qubit flips something
    bool is_repetition_code = false;    // consecutive same-type pair generators
    char repetition_basis = '?';
};

ClassicalCodeReport ssg_classical_code_check(const InteractionDiagram& d,
                                             const Schedule& s, size_t round_offset);

} // namespace sw
