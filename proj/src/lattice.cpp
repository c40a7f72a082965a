#include "sw/lattice.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace sw {

int hc_vertex(const std::vector<int>& coord, int L) {
    int v = 0;
    for (size_t i = coord.size(); i-- > 0;) v = v * L + coord[i];
    return v;
}

std::vector<int> hc_coord(int v, int n, int L) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) {
        c[i] = v % L;
        v /= L;
    }
    return c;
}

static int hc_shift(int v, int axis, int delta, int n, int L) {
    std::vector<int> c = hc_coord(v, n, L);
    c[axis] = ((c[axis] + delta) % L + L) % L;
    return hc_vertex(c, L);
}

void CellComplex::finalize() {
    vertex_edges.assign(n_vertices, {});
    for (size_t e = 0; e < edges.size(); ++e) {
        vertex_edges[edges[e].first].push_back(int(e));
        vertex_edges[edges[e].second].push_back(int(e));
    }
    // canonicalize each face: start at smallest vertex id, direction toward
    // the smaller of the two neighbors
    for (Face& f : faces) {
        size_t m = f.vertices.size();
        if (m < 3 || f.edges.size() != m)
            throw std::runtime_error("face is not a closed cycle");
        for (size_t k = 0; k < m; ++k) {
            auto [a, b] = edges[f.edges[k]];
            int u = f.vertices[k], v = f.vertices[(k + 1) % m];
            if (!((a == u && b == v) || (a == v && b == u)))
                throw std::runtime_error("face edge does not join consecutive vertices");
        }
        size_t s = size_t(std::min_element(f.vertices.begin(), f.vertices.end()) -
                          f.vertices.begin());
        if (f.vertices[(s + m - 1) % m] < f.vertices[(s + 1) % m]) {
            // reverse cycle, keeping vertex s first
            Face g;
            g.vertices.resize(m);
            g.edges.resize(m);
            for (size_t i = 0; i < m; ++i) {
                g.vertices[i] = f.vertices[(s + m - i) % m];
                g.edges[i] = f.edges[(s + m - 1 - i) % m];
            }
            f = std::move(g);
        } else if (s != 0) {
            Face g;
            g.vertices.resize(m);
            g.edges.resize(m);
            for (size_t i = 0; i < m; ++i) {
                g.vertices[i] = f.vertices[(s + i) % m];
                g.edges[i] = f.edges[(s + i) % m];
            }
            f = std::move(g);
        }
    }
    edge_faces.assign(edges.size(), {});
    for (size_t fi = 0; fi < faces.size(); ++fi)
        for (int e : faces[fi].edges) edge_faces[e].push_back(int(fi));
}

std::vector<int> CellComplex::cell_edge_ids(int cell) const {
    std::vector<int> out;
    for (int fi : ncells[cell])
        for (int e : faces[fi].edges) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

CellComplex build_hypercubic(int n, int L, Boundary b) {
    if (n < 2 || L < 2) throw std::invalid_argument("build_hypercubic: need n >= 2 and L >= 2");
    if (b != Boundary::periodic)
        throw std::invalid_argument("build_hypercubic: only periodic boundaries supported");
    CellComplex cc;
    cc.boundary = b;
    cc.dim = n;
    int nv = 1;
    for (int i = 0; i < n; ++i) nv *= L;
    cc.n_vertices = size_t(nv);
    cc.vertex_coord.resize(nv);
    for (int v = 0; v < nv; ++v) cc.vertex_coord[v] = hc_coord(v, n, L);
    // edge id = v*n + axis
    cc.edges.resize(size_t(nv) * n);
    cc.edge_axis.resize(size_t(nv) * n);
    for (int v = 0; v < nv; ++v)
        for (int a = 0; a < n; ++a) {
            cc.edges[size_t(v) * n + a] = {v, hc_shift(v, a, +1, n, L)};
            cc.edge_axis[size_t(v) * n + a] = a;
        }
    // face id = v*C(n,2) + pair index, pairs (a,b) with a<b in lex order
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a)
        for (int bb = a + 1; bb < n; ++bb) pairs.push_back({a, bb});
    for (int v = 0; v < nv; ++v)
        for (auto [a, bb] : pairs) {
            int va = hc_shift(v, a, +1, n, L);
            int vb = hc_shift(v, bb, +1, n, L);
            int vab = hc_shift(va, bb, +1, n, L);
            Face f;
            f.vertices = {v, va, vab, vb};
            f.edges = {hc_edge(v, a, n), hc_edge(va, bb, n), hc_edge(vb, a, n),
                       hc_edge(v, bb, n)};
            cc.faces.push_back(std::move(f));
            cc.face_plane.push_back({a, bb});
        }
    if (n >= 3) {
        int np = int(pairs.size());
        for (int v = 0; v < nv; ++v) {
            std::vector<int> cell;
            for (int pi = 0; pi < np; ++pi) {
                auto [a, bb] = pairs[pi];
                std::vector<int> rest;
                for (int c = 0; c < n; ++c)
                    if (c != a && c != bb) rest.push_back(c);
                for (int mask = 0; mask < (1 << rest.size()); ++mask) {
                    int anchor = v;
                    for (size_t k = 0; k < rest.size(); ++k)
                        if (mask & (1 << k)) anchor = hc_shift(anchor, rest[k], +1, n, L);
                    cell.push_back(anchor * np + pi);
                }
            }
            cc.ncells.push_back(std::move(cell));
        }
    }
    cc.finalize();
    return cc;
}

CellComplex build_hex_prism(int Lx, int Ly, int Lz, Boundary b) {
    if (Lx < 2 || Ly < 2 || Lz < 2)
        throw std::invalid_argument("build_hex_prism: dimensions must be >= 2");
    if (b != Boundary::periodic)
        throw std::invalid_argument("build_hex_prism: only periodic boundaries supported");
    if (Lz % 2 != 0)
        throw std::invalid_argument("build_hex_prism: Lz must be even for periodic closure");
    CellComplex cc;
    cc.boundary = b;
    cc.dim = 3;
    auto mod = [](int a, int m) { return ((a % m) + m) % m; };
    // honeycomb with sublattices A (s=0) and B (s=1), extruded over Lz layers
    auto vid = [&](int s, int i, int j, int k) {
        return ((mod(k, Lz) * Lx + mod(i, Lx)) * Ly + mod(j, Ly)) * 2 + s;
    };
    cc.n_vertices = size_t(2 * Lx * Ly * Lz);
    cc.vertex_coord.resize(cc.n_vertices);
    for (int k = 0; k < Lz; ++k)
        for (int i = 0; i < Lx; ++i)
            for (int j = 0; j < Ly; ++j)
                for (int s = 0; s < 2; ++s)
                    cc.vertex_coord[vid(s, i, j, k)] = {i, j, k, s};
    // horizontal edges per layer cell (i,j): three A-B bonds; then vertical edges
    std::map<std::tuple<int, int, int, int>, int> hedge; // (k,i,j,type) -> id
    std::map<std::pair<int, int>, int> vedge;            // (vertex, k) -> id  (vertex at layer k up)
    for (int k = 0; k < Lz; ++k) {
        for (int i = 0; i < Lx; ++i)
            for (int j = 0; j < Ly; ++j) {
                int a = vid(0, i, j, k), bb = vid(1, i, j, k);
                hedge[{k, i, j, 0}] = int(cc.edges.size());
                cc.edges.push_back({a, bb}); // A(i,j)-B(i,j)
                hedge[{k, i, j, 1}] = int(cc.edges.size());
                cc.edges.push_back({bb, vid(0, i + 1, j, k)}); // B(i,j)-A(i+1,j)
                hedge[{k, i, j, 2}] = int(cc.edges.size());
                cc.edges.push_back({bb, vid(0, i, j + 1, k)}); // B(i,j)-A(i,j+1)
            }
        for (int i = 0; i < Lx; ++i)
            for (int j = 0; j < Ly; ++j)
                for (int s = 0; s < 2; ++s) {
                    int u = vid(s, i, j, k);
                    vedge[{u, k}] = int(cc.edges.size());
                    cc.edges.push_back({u, vid(s, i, j, k + 1)});
                }
    }
    // hexagon faces first (horizontal), then square faces (vertical)
    for (int k = 0; k < Lz; ++k)
        for (int i = 0; i < Lx; ++i)
            for (int j = 0; j < Ly; ++j) {
                Face f;
                f.vertices = {vid(0, i, j, k),     vid(1, i, j, k),
                              vid(0, i + 1, j, k), vid(1, i + 1, j - 1, k),
                              vid(0, i + 1, j - 1, k), vid(1, i, j - 1, k)};
                f.edges = {hedge[{k, i, j, 0}],
                           hedge[{k, i, j, 1}],
                           hedge[{k, mod(i + 1, Lx), mod(j - 1, Ly), 2}],
                           hedge[{k, mod(i + 1, Lx), mod(j - 1, Ly), 0}],
                           hedge[{k, mod(i, Lx), mod(j - 1, Ly), 1}],
                           hedge[{k, i, mod(j - 1, Ly), 2}]};
                cc.faces.push_back(std::move(f));
            }
    for (int k = 0; k < Lz; ++k)
        for (int i = 0; i < Lx; ++i)
            for (int j = 0; j < Ly; ++j)
                for (int t = 0; t < 3; ++t) {
                    int e = hedge[{k, i, j, t}];
                    int e2 = hedge[{mod(k + 1, Lz), i, j, t}];
                    auto [u, v] = cc.edges[e];
                    auto [u2, v2] = cc.edges[e2];
                    Face f;
                    f.vertices = {u, v, v2, u2};
                    f.edges = {e, vedge[{v, k}], e2, vedge[{u, k}]};
                    cc.faces.push_back(std::move(f));
                }
    cc.finalize();
    return cc;
}

VertexColoring two_color_vertices(const CellComplex& cc) {
    VertexColoring col;
    std::vector<int> c(cc.n_vertices, -1);
    for (size_t start = 0; start < cc.n_vertices; ++start) {
        if (c[start] != -1) continue;
        c[start] = 0;
        std::deque<int> q{int(start)};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int e : cc.vertex_edges[v]) {
                int u = cc.edges[e].first == v ? cc.edges[e].second : cc.edges[e].first;
                if (u == v) throw NotBipartite("self-loop edge");
                if (c[u] == -1) {
                    c[u] = 1 - c[v];
                    q.push_back(u);
                } else if (c[u] == c[v]) {
                    throw NotBipartite("lattice vertices are not 2-colorable (odd cycle)");
                }
            }
        }
    }
    col.green.resize(cc.n_vertices);
    for (size_t v = 0; v < cc.n_vertices; ++v) col.green[v] = (c[v] == 0);
    return col;
}

ParityReport edge_face_parity(const CellComplex& cc) {
    ParityReport rep;
    rep.face_count.resize(cc.edges.size());
    for (size_t e = 0; e < cc.edges.size(); ++e) {
        rep.face_count[e] = int(cc.edge_faces[e].size());
        if (rep.face_count[e] % 2 != 0) rep.odd_edges.push_back(int(e));
    }
    // decompose odd edges into closed cycles (possible iff all degrees even)
    std::map<int, std::vector<int>> adj; // vertex -> odd edge ids
    for (int e : rep.odd_edges) {
        adj[cc.edges[e].first].push_back(e);
        adj[cc.edges[e].second].push_back(e);
    }
    for (auto& [v, es] : adj)
        if (es.size() % 2 != 0) rep.odd_edges_form_loops = false;
    if (rep.odd_edges_form_loops && !rep.odd_edges.empty()) {
        std::map<int, bool> used;
        for (int e : rep.odd_edges) used[e] = false;
        for (int e0 : rep.odd_edges) {
            if (used[e0]) continue;
            std::vector<int> loop;
            int e = e0, v = cc.edges[e0].first;
            while (true) {
                used[e] = true;
                loop.push_back(e);
                v = cc.edges[e].first == v ? cc.edges[e].second : cc.edges[e].first;
                if (v == cc.edges[e0].first) break;
                bool found = false;
                for (int e2 : adj[v])
                    if (!used[e2]) {
                        e = e2;
                        found = true;
                        break;
                    }
                if (!found) break; // returned to start via the last edge
            }
            rep.loops.push_back(std::move(loop));
        }
    }
    return rep;
}

CellComplex lattice_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    CellComplex cc;
    cc.n_vertices = j.at("vertices").get<size_t>();
    for (auto& e : j.at("edges"))
        cc.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    for (auto& fj : j.at("faces")) {
        Face f;
        // a face is given as an ordered edge-id cycle; recover the vertex cycle
        f.edges = fj.get<std::vector<int>>();
        size_t m = f.edges.size();
        if (m < 3) throw std::runtime_error("lattice file: face with fewer than 3 edges");
        auto [a0, b0] = cc.edges.at(f.edges[0]);
        auto [a1, b1] = cc.edges.at(f.edges[1]);
        int v0 = (a0 == a1 || a0 == b1) ? b0 : a0;
        f.vertices.push_back(v0);
        int v = (v0 == a0) ? b0 : a0;
        for (size_t k = 1; k < m; ++k) {
            f.vertices.push_back(v);
            auto [a, b] = cc.edges.at(f.edges[k]);
            if (a != v && b != v)
                throw std::runtime_error("lattice file: face edges do not chain");
            v = (a == v) ? b : a;
        }
        if (v != v0) throw std::runtime_error("lattice file: face cycle does not close");
        cc.faces.push_back(std::move(f));
    }
    if (j.contains("ncells"))
        for (auto& c : j["ncells"]) cc.ncells.push_back(c.get<std::vector<int>>());
    if (j.contains("boundary") && j["boundary"] == "open") cc.boundary = Boundary::open;
    cc.finalize();
    return cc;
}

std::string lattice_to_json(const CellComplex& cc) {
    nlohmann::json j;
    j["vertices"] = cc.n_vertices;
    auto edges = nlohmann::json::array();
    for (auto& [a, b] : cc.edges) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    auto faces = nlohmann::json::array();
    for (auto& f : cc.faces) faces.push_back(f.edges);
    j["faces"] = std::move(faces);
    if (!cc.ncells.empty()) j["ncells"] = cc.ncells;
    j["boundary"] = cc.boundary == Boundary::open ? "open" : "periodic";
    return j.dump(2);
}

CellComplex lattice_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lattice file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return lattice_from_json(ss.str());
}

} // namespace sw
