#pragma once
// Physical lattices as cell complexes: vertices, edges, faces (ordered cycles)
// and optional top cells, with incidence maps. Builders for periodic
// hypercubic lattices and the hexagonal-prism lattice, plus JSON load/save.
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sw {

enum class Boundary { periodic, open };

struct Face {
    // vertices[k] -- edges[k] -- vertices[k+1 mod len]
    std::vector<int> vertices;
    std::vector<int> edges;
};

struct CellComplex {
    size_t n_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<Face> faces;
    std::vector<std::vector<int>> ncells; // face-id lists of top cells (n >= 3)
    Boundary boundary = Boundary::periodic;

    // incidence (filled by finalize)
    std::vector<std::vector<int>> vertex_edges;
    std::vector<std::vector<int>> edge_faces;

    // optional builder metadata
    int dim = 0;                                 // ambient dimension when known
    std::vector<std::vector<int>> vertex_coord;  // per-vertex coordinates
    std::vector<int> edge_axis;                  // hypercubic: axis per edge
    std::vector<std::pair<int, int>> face_plane; // hypercubic: axis pair per face
    std::vector<int> cell_edges_cache_;          // unused placeholder

    // validate face cycles, canonicalize orientation, build incidence
    void finalize();
    std::vector<int> cell_edge_ids(int cell) const; // distinct edges of a top cell
};

struct VertexColoring {
    // true = green, false = blue
    std::vector<bool> green;
    bool is_green(int v) const { return green[v]; }
};

struct NotBipartite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParityReport {
    std::vector<int> face_count;   // per edge
    std::vector<int> odd_edges;
    bool odd_edges_form_loops = true;
    std::vector<std::vector<int>> loops; // odd edges decomposed into closed cycles
};

CellComplex build_hypercubic(int n, int L, Boundary b = Boundary::periodic);
CellComplex build_hex_prism(int Lx, int Ly, int Lz, Boundary b = Boundary::periodic);
VertexColoring two_color_vertices(const CellComplex& cc);
ParityReport edge_face_parity(const CellComplex& cc);

CellComplex lattice_from_json(const std::string& text);
std::string lattice_to_json(const CellComplex& cc);
CellComplex lattice_from_file(const std::string& path);

// hypercubic helpers (mixed-radix vertex indexing)
int hc_vertex(const std::vector<int>& coord, int L);
std::vector<int> hc_coord(int v, int n, int L);
inline int hc_edge(int v, int axis, int n) { return v * n + axis; }

} // namespace sw
