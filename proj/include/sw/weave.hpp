#pragma once
// Interaction diagrams: closed alternating XX/YY spin chains placed on a cell
// complex, coupled by ZZ checks where chains cross the same lattice edge.
#include "sw/lattice.hpp"
#include "sw/pauli.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sw {

enum class Color { green = 0, blue = 1, red = 2, black = 3 };
enum class OpType { XX = 0, YY = 1, ZZ = 2 };

const char* color_name(Color c);
const char* optype_name(OpType t);
// static binding: green checks measure XX, blue YY, red/black ZZ
OpType default_optype(Color c);

struct ChainQubit {
    int id = -1;
    int host_edge = -1;
    int host_chain = -1;
    int position_in_chain = -1;
};

struct Check {
    int id = -1;
    int q1 = -1, q2 = -1;
    Color color = Color::red;
    bool inner = false; // joins consecutive qubits of one chain
};

struct Chain {
    int id = -1;
    std::vector<int> qubits;  // in cyclic order
    int host_face = -1;       // plaquette placement
    int host_vertex = -1;     // vertex placement / vertical chains
    int plane_a = -1, plane_b = -1; // vertex placement: axis pair
};

struct InteractionDiagram {
    CellComplex cc; // host lattice (empty for the Bacon-Shor grid)
    std::vector<ChainQubit> qubits;
    std::vector<Check> checks;
    std::vector<Chain> chains;
    std::vector<std::vector<int>> edge_qubits; // lattice edge -> qubit ids

    size_t n_qubits() const { return qubits.size(); }
    // the two-qubit Pauli a check measures, honoring an optional type override
    PauliWord check_word(int check_id, std::optional<OpType> override_type = {}) const;
    OpType check_optype(int check_id) const { return default_optype(checks[check_id].color); }
    std::vector<int> checks_of_color(Color c) const;
    size_t count_checks(Color c, bool inner_only = false) const;
};

struct OddParity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// one chain per face; couplings generated unless parity compensation is pending
InteractionDiagram place_chains_on_plaquettes(const CellComplex& cc,
                                              const VertexColoring& coloring,
                                              bool defer_couplings = false);
// one chain per (vertex, axis pair), around the vertex inside that planar slice
InteractionDiagram place_chains_around_vertices(const CellComplex& cc);
// extra chains along the odd-parity edge loops; rebuilds couplings
InteractionDiagram add_vertical_chains(InteractionDiagram d,
                                       const std::vector<std::vector<int>>& loops);
// open (L+1)x(L+1) grid; horizontal ZZ checks red, vertical XX checks green
InteractionDiagram build_bacon_shor(int L);

std::string diagram_to_json(const InteractionDiagram& d);

} // namespace sw
