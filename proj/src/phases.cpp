#include "sw/phases.hpp"

#include <algorithm>
#include <stdexcept>

namespace sw {

ReferenceCode reference_toric(const CellComplex& cc) {
    ReferenceCode ref;
    ref.name = "toric";
    ref.n_qubits = cc.edges.size();
    for (size_t v = 0; v < cc.n_vertices; ++v) {
        PauliWord a(ref.n_qubits);
        for (int e : cc.vertex_edges[v]) a.x.set(e, true);
        ref.stabilizers.push_back(a);
    }
    for (const Face& f : cc.faces) {
        PauliWord b(ref.n_qubits);
        for (int e : f.edges) b.z.set(e, true);
        ref.stabilizers.push_back(b);
    }
    return ref;
}

ReferenceCode reference_xcube(const CellComplex& cc) {
    if (cc.edge_axis.empty() || cc.ncells.empty())
        throw std::invalid_argument("reference_xcube: hypercubic lattice with top cells required");
    ReferenceCode ref;
    ref.name = "xcube";
    ref.n_qubits = cc.edges.size();
    int n = cc.dim;
    int L = 0;
    for (auto& c : cc.vertex_coord)
        for (int x : c) L = std::max(L, x + 1);
    auto shift = [&](int v, int axis, int delta) {
        std::vector<int> c = cc.vertex_coord[v];
        c[axis] = ((c[axis] + delta) % L + L) % L;
        return hc_vertex(c, L);
    };
    for (int v = 0; v < int(cc.n_vertices); ++v)
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                PauliWord w(ref.n_qubits);
                w.z.flip(hc_edge(v, a, n));
                w.z.flip(hc_edge(shift(v, a, -1), a, n));
                w.z.flip(hc_edge(v, b, n));
                w.z.flip(hc_edge(shift(v, b, -1), b, n));
                ref.stabilizers.push_back(w);
            }
    for (size_t c = 0; c < cc.ncells.size(); ++c) {
        PauliWord w(ref.n_qubits);
        for (int e : cc.cell_edge_ids(int(c))) w.x.set(e, true);
        ref.stabilizers.push_back(w);
    }
    return ref;
}

std::vector<PauliWord> effective_group(const InteractionDiagram& d,
                                       const std::set<Color>& coupling_colors,
                                       const std::vector<PauliWord>& ssg) {
    std::vector<PauliWord> couplings;
    OpType t = OpType::ZZ;
    for (const Check& c : d.checks)
        if (coupling_colors.count(c.color)) {
            t = default_optype(c.color);
            couplings.push_back(d.check_word(c.id));
        }
    EffectiveMap m = make_effective_map(d.n_qubits(), couplings, t);
    // relabel effective qubits by host lattice edge
    size_t n_edges = d.cc.edges.size();
    std::vector<int> comp_edge(m.n_effective, -1);
    for (size_t c = 0; c < m.n_effective; ++c) {
        for (int q : m.members[c]) {
            int e = d.qubits[q].host_edge;
            if (comp_edge[c] == -1) comp_edge[c] = e;
            else if (comp_edge[c] != e)
                throw std::logic_error("coupling component spans multiple lattice edges");
        }
    }
    std::vector<PauliWord> out;
    for (const PauliWord& w : ssg) {
        auto eff = map_through(m, w);
        if (!eff) throw std::logic_error("steady element does not survive the quotient");
        PauliWord r(n_edges);
        for (size_t c = 0; c < m.n_effective; ++c) {
            if (eff->x.get(c)) r.x.set(comp_edge[c], true);
            if (eff->z.get(c)) r.z.set(comp_edge[c], true);
        }
        if (r.x.any() || r.z.any()) out.push_back(r.normalized());
    }
    return out;
}

int gsd(const std::vector<PauliWord>& stabilizers, size_t n_qubits) {
    for (size_t i = 0; i < stabilizers.size(); ++i)
        for (size_t j = i + 1; j < stabilizers.size(); ++j)
            if (!commutes(stabilizers[i], stabilizers[j]))
                throw std::invalid_argument("gsd: stabilizers do not commute");
    F2Matrix m(stabilizers.size(), 2 * n_qubits);
    for (size_t i = 0; i < stabilizers.size(); ++i)
        m.row[i] = stabilizers[i].symplectic_row();
    return int(n_qubits) - int(f2_rank(m));
}

bool verify_phase(const InteractionDiagram& d, const std::vector<PauliWord>& ssg,
                  const ReferenceCode& ref) {
    std::vector<PauliWord> eff = effective_group(d, {Color::red, Color::black}, ssg);
    return groups_equal_f2(eff, ref.stabilizers);
}

std::vector<PauliWord> octant_loop_ops(const InteractionDiagram& d, bool at_green_vertices) {
    const CellComplex& cc = d.cc;
    if (cc.dim != 3 || cc.edge_axis.empty())
        throw std::invalid_argument("octant loop operators require a 3D cubic lattice");
    VertexColoring col = two_color_vertices(cc);
    int n = cc.dim;
    int L = 0;
    for (auto& c : cc.vertex_coord)
        for (int x : c) L = std::max(L, x + 1);
    auto shift = [&](int v, int axis, int delta) {
        std::vector<int> c = cc.vertex_coord[v];
        c[axis] = ((c[axis] + delta) % L + L) % L;
        return hc_vertex(c, L);
    };
    // pair (a,b) with a<b -> face pair index in build order
    auto pair_index = [&](int a, int b) {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (i == a && j == b) return idx;
                ++idx;
            }
        return -1;
    };
    int np = n * (n - 1) / 2;
    auto qubit_on = [&](int edge, int face) {
        for (int q : d.edge_qubits[edge])
            if (d.chains[d.qubits[q].host_chain].host_face == face) return q;
        throw std::logic_error("no chain qubit for (edge, face) incidence");
    };
    std::vector<PauliWord> out;
    for (int v = 0; v < int(cc.n_vertices); ++v) {
        if (col.green[v] != at_green_vertices) continue;
        for (int mask = 0; mask < 8; ++mask) {
            bool s[3] = {bool(mask & 1), bool(mask & 2), bool(mask & 4)};
            int ev[3];
            for (int a = 0; a < 3; ++a)
                ev[a] = s[a] ? hc_edge(v, a, n) : hc_edge(shift(v, a, -1), a, n);
            PauliWord w(d.n_qubits());
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b) {
                    int anchor = v;
                    if (!s[a]) anchor = shift(anchor, a, -1);
                    if (!s[b]) anchor = shift(anchor, b, -1);
                    int face = anchor * np + pair_index(a, b);
                    w.z.set(qubit_on(ev[a], face), true);
                    w.z.set(qubit_on(ev[b], face), true);
                }
            out.push_back(w);
        }
    }
    return out;
}

PauliWord line_logical(const InteractionDiagram& d, int axis) {
    const CellComplex& cc = d.cc;
    if (cc.edge_axis.empty())
        throw std::invalid_argument("line logical requires a hypercubic lattice");
    int n = cc.dim;
    int L = 0;
    for (auto& c : cc.vertex_coord)
        for (int x : c) L = std::max(L, x + 1);
    int other = (axis + 1) % n;
    int a = std::min(axis, other), b = std::max(axis, other);
    int pidx = 0;
    {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (i == a && j == b) pidx = idx;
                ++idx;
            }
    }
    int np = n * (n - 1) / 2;
    PauliWord w(d.n_qubits());
    for (int k = 0; k < L; ++k) {
        std::vector<int> coord(n, 0);
        coord[axis] = k;
        int v = hc_vertex(coord, L);
        int face = v * np + pidx;
        int edge = hc_edge(v, axis, n);
        int qubit = -1;
        for (int q : d.edge_qubits[edge])
            if (d.chains[d.qubits[q].host_chain].host_face == face) qubit = q;
        if (qubit < 0) throw std::logic_error("line logical: missing chain qubit");
        w.z.set(qubit, true);
    }
    return w;
}

LogicalTrack track_logical(const InteractionDiagram& d, const Schedule& s,
                           const PauliWord& initial, size_t n_steps,
                           size_t warmup_rounds) {
    LogicalTrack tr;
    FloquetRun run = run_schedule(d, s, warmup_rounds, 1, true);
    PauliWord r = initial.normalized();
    for (size_t step = 0; step < n_steps; ++step) {
        size_t round = warmup_rounds + step;
        run.step();
        size_t rho = round % s.period();
        std::vector<const PauliWord*> measured;
        for (int idx : run.round_instances[rho]) measured.push_back(&run.instances[idx].word);
        bool clean = true;
        for (const PauliWord* o : measured)
            if (!commutes(r, *o)) {
                clean = false;
                break;
            }
        if (!clean) {
            // restore commutation by multiplying with elements of the previous
            // round's stabilizer group; the current round's own check words
            // (mutually commuting, now also measured) join as weight-reduction
            // moves
            std::vector<PauliWord> gens = run.isg[round - 1];
            for (const PauliWord* o : measured) gens.push_back(*o);
            F2Matrix sys(measured.size(), gens.size());
            BitVec rhs(measured.size());
            for (size_t j = 0; j < measured.size(); ++j) {
                for (size_t i = 0; i < gens.size(); ++i)
                    if (!commutes(gens[i], *measured[j])) sys.set(j, i, true);
                rhs.set(j, !commutes(r, *measured[j]));
            }
            auto sol = f2_solve(sys, rhs);
            if (!sol) {
                tr.collapsed = true;
                tr.collapse_round = int(step);
                return tr;
            }
            std::vector<BitVec> null = f2_nullspace(sys);
            auto weight = [&](const BitVec& coeff) {
                PauliWord w = r;
                for (size_t i = 0; i < gens.size(); ++i)
                    if (coeff.get(i)) {
                        w.x.xor_with(gens[i].x);
                        w.z.xor_with(gens[i].z);
                    }
                size_t c = 0;
                for (size_t k = 0; k < w.x.w.size(); ++k)
                    c += size_t(__builtin_popcountll(w.x.w[k] | w.z.w[k]));
                return c;
            };
            BitVec best = *sol;
            size_t bw = weight(best);
            bool improved = true;
            while (improved) {
                improved = false;
                for (const BitVec& nv : null) {
                    BitVec cand = bv_xor(best, nv);
                    size_t cw = weight(cand);
                    if (cw < bw) {
                        best = std::move(cand);
                        bw = cw;
                        improved = true;
                    }
                }
            }
            for (size_t i = 0; i < gens.size(); ++i)
                if (best.get(i)) {
                    r.x.xor_with(gens[i].x);
                    r.z.xor_with(gens[i].z);
                }
            r = r.normalized();
        }
        tr.history.push_back(r);
    }
    tr.returned = !tr.history.empty() && tr.history.back().same_f2(initial);
    return tr;
}

} // namespace sw
