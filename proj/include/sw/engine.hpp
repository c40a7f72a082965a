#pragma once
// Stabilizer simulation of periodic check measurements: a mixed-state tableau
// (stabilizer/destabilizer pairs plus a pool spanning the unfixed directions),
// per-round ISG snapshots, and inferred ("referred") values of steady
// stabilizers reconstructed from products of check outcomes.
#include "sw/pauli.hpp"
#include "sw/schedule.hpp"
#include "sw/weave.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace sw {

struct MeasureResult {
    int outcome = +1;
    bool deterministic = false;
};

struct Tableau {
    size_t n = 0;
    std::vector<PauliWord> stab, destab; // paired: <stab_i, destab_j> = delta_ij
    std::vector<PauliWord> pool;         // spans the rest; commutes with stab & destab

    explicit Tableau(size_t n_ = 0);
    size_t rank() const { return stab.size(); }
    // projective measurement; forced overrides the random branch only
    MeasureResult measure(const PauliWord& op, std::optional<int> forced,
                          std::mt19937_64& rng);
    // flip signs of anticommuting stabilizers (a Pauli error hitting the state)
    void apply_error(const PauliWord& e);
};

struct MeasurementRecord {
    int round = -1;
    int check_id = -1;
    OpType type = OpType::ZZ;
    int outcome = +1;
    bool deterministic = false;
};

// a (check, operator type) pair as actually measured by some round
struct CheckInstance {
    int check_id = -1;
    OpType type = OpType::ZZ;
    PauliWord word;
};

// how to infer one steady element's value at a given round offset
struct ReferralEntry {
    bool referable = false;
    bool fresh = false;  // some constituent is measured at this very offset
    int base_sign = +1;  // reordering sign with all-+1 outcomes
    std::vector<std::pair<int, int>> parts; // (instance index, round lag)
};

struct ReferralPlan {
    std::vector<std::vector<ReferralEntry>> at; // [offset][element]
};

// enumerate distinct measured operators and the per-offset instance lists
void make_instances(const InteractionDiagram& d, const Schedule& s,
                    std::vector<CheckInstance>& instances,
                    std::vector<std::vector<int>>& round_instances);

ReferralPlan build_referral_plan(const std::vector<CheckInstance>& instances,
                                 const std::vector<std::vector<int>>& round_instances,
                                 const std::vector<PauliWord>& elements,
                                 size_t n_qubits);

// per round offset, a basis of the operators whose eigenvalues are determined
// by past measurement outcomes (periodic fixed point of the recursion
// K_t = <fresh ops> * centralizer of them inside K_{t-1})
std::vector<std::vector<PauliWord>> steady_known_groups(
    const std::vector<CheckInstance>& instances,
    const std::vector<std::vector<int>>& round_instances, size_t n_qubits);

using Ledger = std::vector<std::vector<std::pair<int, int>>>; // element -> (round, value)

// a running (copyable, resumable) simulation of a schedule on a diagram
struct FloquetRun {
    const InteractionDiagram* diagram = nullptr;
    Schedule sched;
    std::vector<CheckInstance> instances;
    std::vector<std::vector<int>> round_instances; // [offset] -> instance ids
    Tableau tab;
    size_t next_round = 0;
    bool forcing = true;
    std::mt19937_64 rng;
    std::vector<std::vector<int8_t>> outcomes; // [instance][round]; 0 = unmeasured
    std::vector<MeasurementRecord> records;
    std::vector<std::vector<PauliWord>> isg; // signed generators after each round
    std::vector<PauliWord> elements;         // steady elements tracked in the ledger
    ReferralPlan plan;
    Ledger ledger;

    void init(const InteractionDiagram& d, const Schedule& s, uint64_t seed,
              bool forcing_mode, std::vector<PauliWord> tracked_elements);
    void step(); // measure one round, snapshot ISG, refer values
    void run_rounds(size_t k);
    void inject(const PauliWord& e) { tab.apply_error(e); }
};

FloquetRun run_schedule(const InteractionDiagram& d, const Schedule& s,
                        size_t n_rounds, uint64_t seed, bool forcing = true,
                        std::vector<PauliWord> tracked_elements = {});

// ---- signed/unsigned Pauli group helpers ----
// sign s with word = s * (product of generators), or nullopt if not in the group
std::optional<int> signed_member(const std::vector<PauliWord>& gens, const PauliWord& word);
bool f2_member(const std::vector<PauliWord>& gens, const PauliWord& word);
bool groups_equal_f2(const std::vector<PauliWord>& a, const std::vector<PauliWord>& b);
bool groups_equal_signed(const std::vector<PauliWord>& a, const std::vector<PauliWord>& b);

std::string trace_to_json(const FloquetRun& run);

} // namespace sw
