#include "sw/weave.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace sw {

const char* color_name(Color c) {
    switch (c) {
        case Color::green: return "green";
        case Color::blue: return "blue";
        case Color::red: return "red";
        case Color::black: return "black";
    }
    return "?";
}

const char* optype_name(OpType t) {
    switch (t) {
        case OpType::XX: return "XX";
        case OpType::YY: return "YY";
        case OpType::ZZ: return "ZZ";
    }
    return "?";
}

OpType default_optype(Color c) {
    switch (c) {
        case Color::green: return OpType::XX;
        case Color::blue: return OpType::YY;
        default: return OpType::ZZ;
    }
}

PauliWord InteractionDiagram::check_word(int check_id, std::optional<OpType> override_type) const {
    const Check& c = checks[check_id];
    OpType t = override_type.value_or(default_optype(c.color));
    char p = t == OpType::XX ? 'X' : t == OpType::YY ? 'Y' : 'Z';
    return PauliWord::pair(n_qubits(), c.q1, c.q2, p);
}

std::vector<int> InteractionDiagram::checks_of_color(Color c) const {
    std::vector<int> out;
    for (const Check& ck : checks)
        if (ck.color == c) out.push_back(ck.id);
    return out;
}

size_t InteractionDiagram::count_checks(Color c, bool inner_only) const {
    size_t n = 0;
    for (const Check& ck : checks)
        if (ck.color == c && (!inner_only || ck.inner)) ++n;
    return n;
}

// planar-slice key of a qubit's chain on a given edge, or -1 when unknown;
// same-key qubits on an edge are paired by red checks (coupling-layer pattern)
static int slice_key(const InteractionDiagram& d, int qubit, int edge) {
    const Chain& ch = d.chains[d.qubits[qubit].host_chain];
    if (ch.plane_a >= 0) { // vertex placement: key = the axis paired with the edge axis
        int ea = d.cc.edge_axis.empty() ? -1 : d.cc.edge_axis[edge];
        return ch.plane_a == ea ? ch.plane_b : ch.plane_a;
    }
    if (ch.host_face >= 0 && !d.cc.face_plane.empty()) {
        auto [a, b] = d.cc.face_plane[ch.host_face];
        int ea = d.cc.edge_axis[edge];
        return a == ea ? b : a;
    }
    return -1;
}

// per edge: pair qubits into disjoint red ZZ checks (within planar slices when
// the lattice carries axis metadata, else consecutive by qubit id), then chain
// the pairs together with black ZZ checks so each edge's qubits stay connected
static void build_couplings(InteractionDiagram& d) {
    for (size_t e = 0; e < d.edge_qubits.size(); ++e) {
        std::vector<int> qs = d.edge_qubits[e];
        if (qs.empty()) continue;
        if (qs.size() % 2 != 0)
            throw OddParity("edge " + std::to_string(e) +
                            " hosts an odd number of chain qubits");
        std::sort(qs.begin(), qs.end());
        std::stable_sort(qs.begin(), qs.end(), [&](int a, int b) {
            return slice_key(d, a, int(e)) < slice_key(d, b, int(e));
        });
        std::vector<std::pair<int, int>> pairs;
        for (size_t k = 0; k + 1 < qs.size(); k += 2) pairs.push_back({qs[k], qs[k + 1]});
        for (auto [a, b] : pairs)
            d.checks.push_back({int(d.checks.size()), a, b, Color::red, false});
        for (size_t k = 0; k + 1 < pairs.size(); ++k)
            d.checks.push_back({int(d.checks.size()), pairs[k].second, pairs[k + 1].first,
                                Color::black, false});
    }
}

static void add_chain_inner_checks(InteractionDiagram& d, const Chain& ch,
                                   const std::vector<Color>& turn_colors) {
    size_t m = ch.qubits.size();
    for (size_t k = 0; k < m; ++k) {
        Color col = turn_colors[k];
        d.checks.push_back({int(d.checks.size()), ch.qubits[k], ch.qubits[(k + 1) % m],
                            col, true});
    }
}

InteractionDiagram place_chains_on_plaquettes(const CellComplex& cc,
                                              const VertexColoring& coloring,
                                              bool defer_couplings) {
    for (auto [a, b] : cc.edges)
        if (coloring.green[a] == coloring.green[b])
            throw std::invalid_argument("vertex coloring is not proper");
    InteractionDiagram d;
    d.cc = cc;
    d.edge_qubits.resize(cc.edges.size());
    for (size_t fi = 0; fi < cc.faces.size(); ++fi) {
        const Face& f = cc.faces[fi];
        size_t m = f.edges.size();
        if (m % 2 != 0)
            throw std::invalid_argument("odd face boundary: chain cannot alternate XX/YY");
        Chain ch;
        ch.id = int(d.chains.size());
        ch.host_face = int(fi);
        std::vector<Color> turns(m);
        for (size_t k = 0; k < m; ++k) {
            ChainQubit q;
            q.id = int(d.qubits.size());
            q.host_edge = f.edges[k];
            q.host_chain = ch.id;
            q.position_in_chain = int(k);
            d.qubits.push_back(q);
            ch.qubits.push_back(q.id);
            d.edge_qubits[f.edges[k]].push_back(q.id);
            // the check joining qubits k and k+1 turns at vertices[(k+1) mod m]
            int tv = f.vertices[(k + 1) % m];
            turns[k] = coloring.green[tv] ? Color::green : Color::blue;
        }
        d.chains.push_back(ch);
        add_chain_inner_checks(d, ch, turns);
    }
    bool odd = false;
    for (auto& qs : d.edge_qubits)
        if (qs.size() % 2 != 0) odd = true;
    if (odd && !defer_couplings)
        throw OddParity("some lattice edges border an odd number of plaquettes; "
                        "compensating chains required");
    if (!defer_couplings) build_couplings(d);
    return d;
}

InteractionDiagram place_chains_around_vertices(const CellComplex& cc) {
    if (cc.edge_axis.empty() || cc.vertex_coord.empty())
        throw std::invalid_argument("vertex placement requires a hypercubic lattice");
    int n = cc.dim;
    int L = 0;
    for (auto& c : cc.vertex_coord)
        for (int x : c) L = std::max(L, x + 1);
    if (L % 2 != 0)
        throw std::invalid_argument("planar slice plaquettes are not 2-colorable (odd L)");
    InteractionDiagram d;
    d.cc = cc;
    d.edge_qubits.resize(cc.edges.size());
    auto shift = [&](int v, int axis, int delta) {
        std::vector<int> c = cc.vertex_coord[v];
        c[axis] = ((c[axis] + delta) % L + L) % L;
        return hc_vertex(c, L);
    };
    for (int v = 0; v < int(cc.n_vertices); ++v) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Chain ch;
                ch.id = int(d.chains.size());
                ch.host_vertex = v;
                ch.plane_a = a;
                ch.plane_b = b;
                int vma = shift(v, a, -1), vmb = shift(v, b, -1);
                // cyclic walk around v inside the (a,b) slice: +a, +b, -a, -b
                int es[4] = {hc_edge(v, a, n), hc_edge(v, b, n), hc_edge(vma, a, n),
                             hc_edge(vmb, b, n)};
                // turning plaquettes, anchored at v, v-a, v-a-b, v-b
                int anchors[4] = {v, vma, shift(vma, b, -1), vmb};
                std::vector<Color> turns(4);
                for (int k = 0; k < 4; ++k) {
                    ChainQubit q;
                    q.id = int(d.qubits.size());
                    q.host_edge = es[k];
                    q.host_chain = ch.id;
                    q.position_in_chain = k;
                    d.qubits.push_back(q);
                    ch.qubits.push_back(q.id);
                    d.edge_qubits[es[k]].push_back(q.id);
                    const std::vector<int>& ac = cc.vertex_coord[anchors[k]];
                    turns[k] = ((ac[a] + ac[b]) % 2 == 0) ? Color::green : Color::blue;
                }
                d.chains.push_back(ch);
                add_chain_inner_checks(d, ch, turns);
            }
    }
    build_couplings(d);
    return d;
}

InteractionDiagram add_vertical_chains(InteractionDiagram d,
                                       const std::vector<std::vector<int>>& loops) {
    VertexColoring coloring = two_color_vertices(d.cc);
    for (const std::vector<int>& loop : loops) {
        if (loop.size() % 2 != 0)
            throw std::invalid_argument("compensating chain loop has odd length");
        // orient the loop: vertex sequence with vseq[k] shared by edges k-1 and k
        size_t m = loop.size();
        std::vector<int> vseq(m);
        auto [a0, b0] = d.cc.edges[loop[0]];
        auto [a1, b1] = d.cc.edges[loop[1]];
        int shared01 = (a0 == a1 || a0 == b1) ? a0 : b0;
        vseq[0] = (shared01 == a0) ? b0 : a0;
        int v = shared01;
        for (size_t k = 1; k < m; ++k) {
            vseq[k] = v;
            auto [a, b] = d.cc.edges[loop[k]];
            if (a != v && b != v) throw std::invalid_argument("loop edges do not chain");
            v = (a == v) ? b : a;
        }
        if (v != vseq[0]) throw std::invalid_argument("compensating loop is not closed");
        Chain ch;
        ch.id = int(d.chains.size());
        ch.host_vertex = vseq[0];
        std::vector<Color> turns(m);
        for (size_t k = 0; k < m; ++k) {
            ChainQubit q;
            q.id = int(d.qubits.size());
            q.host_edge = loop[k];
            q.host_chain = ch.id;
            q.position_in_chain = int(k);
            d.qubits.push_back(q);
            ch.qubits.push_back(q.id);
            d.edge_qubits[loop[k]].push_back(q.id);
            // the check joining qubits k and k+1 turns at the shared vertex
            turns[k] = coloring.green[vseq[(k + 1) % m]] ? Color::green : Color::blue;
        }
        d.chains.push_back(ch);
        add_chain_inner_checks(d, ch, turns);
    }
    // rebuild couplings from scratch with the new qubits included
    std::vector<Check> inner;
    for (Check& c : d.checks)
        if (c.inner) {
            c.id = int(inner.size());
            inner.push_back(c);
        }
    d.checks = std::move(inner);
    build_couplings(d);
    return d;
}

InteractionDiagram build_bacon_shor(int L) {
    if (L < 2) throw std::invalid_argument("build_bacon_shor: L >= 2 required");
    InteractionDiagram d;
    int W = L + 1;
    for (int r = 0; r < W; ++r)
        for (int c = 0; c < W; ++c)
            d.qubits.push_back({r * W + c, -1, -1, -1});
    for (int r = 0; r < W; ++r)
        for (int c = 0; c + 1 < W; ++c)
            d.checks.push_back({int(d.checks.size()), r * W + c, r * W + c + 1,
                                Color::red, false});
    for (int r = 0; r + 1 < W; ++r)
        for (int c = 0; c < W; ++c)
            d.checks.push_back({int(d.checks.size()), r * W + c, (r + 1) * W + c,
                                Color::green, false});
    return d;
}

std::string diagram_to_json(const InteractionDiagram& d) {
    nlohmann::json j;
    auto qs = nlohmann::json::array();
    for (const ChainQubit& q : d.qubits)
        qs.push_back({{"id", q.id},
                      {"host_edge", q.host_edge},
                      {"host_chain", q.host_chain},
                      {"position", q.position_in_chain}});
    j["qubits"] = std::move(qs);
    auto cs = nlohmann::json::array();
    for (const Check& c : d.checks)
        cs.push_back({{"id", c.id},
                      {"qubits", {c.q1, c.q2}},
                      {"color", color_name(c.color)},
                      {"type", optype_name(default_optype(c.color))},
                      {"inner", c.inner}});
    j["checks"] = std::move(cs);
    return j.dump(2);
}

} // namespace sw
