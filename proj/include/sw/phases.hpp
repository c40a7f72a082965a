#pragma once
// Instantaneous-phase analysis: strong-coupling effective stabilizer groups on
// lattice-edge qubits, reference stabilizer codes (toric / X-cube families),
// ground-state degeneracy, and logical-operator tracking across rounds.
#include "sw/engine.hpp"
#include "sw/lattice.hpp"
#include "sw/ssg.hpp"
#include "sw/weave.hpp"

#include <set>
#include <vector>

namespace sw {

struct ReferenceCode {
    std::string name;
    size_t n_qubits = 0; // one per lattice edge
    std::vector<PauliWord> stabilizers;
};

// vertex X-terms and plaquette Z-terms on the edges of cc
ReferenceCode reference_toric(const CellComplex& cc);
// planar vertex Z-terms (per axis pair) and top-cell X-terms on the edges of cc
ReferenceCode reference_xcube(const CellComplex& cc);

// SSG words pushed through the coupling quotient, one effective qubit per
// lattice edge (indexed by edge id)
std::vector<PauliWord> effective_group(const InteractionDiagram& d,
                                       const std::set<Color>& coupling_colors,
                                       const std::vector<PauliWord>& ssg);

int gsd(const std::vector<PauliWord>& stabilizers, size_t n_qubits);

bool verify_phase(const InteractionDiagram& d, const std::vector<PauliWord>& ssg,
                  const ReferenceCode& ref);

// closed-loop operators around one octant corner of a 3D vertex: products of
// couplings from the red/black round that survive the following green round
std::vector<PauliWord> octant_loop_ops(const InteractionDiagram& d, bool at_green_vertices);

// Z on one side qubit per plaquette chain along a lattice direction: a line
// logical of the instantaneous 3D phase
PauliWord line_logical(const InteractionDiagram& d, int axis = 0);

struct LogicalTrack {
    std::vector<PauliWord> history; // representative after each tracked round
    bool collapsed = false;
    int collapse_round = -1;
    bool returned = false; // final representative equals the initial one
};

LogicalTrack track_logical(const InteractionDiagram& d, const Schedule& s,
                           const PauliWord& initial, size_t n_steps,
                           size_t warmup_rounds);

} // namespace sw
