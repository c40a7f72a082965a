#include "sw/ssg.hpp"

#include <array>
#include <functional>
#include <numeric>

namespace sw {

std::vector<SSGElement> compute_center(const std::vector<PauliWord>& ops) {
    size_t m = ops.size();
    if (m == 0) return {};
    size_t nq = ops[0].n();
    // symplectic Gram matrix over the generating operators
    F2Matrix gram(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j)
            if (!commutes(ops[i], ops[j])) {
                gram.set(i, j, true);
                gram.set(j, i, true);
            }
    std::vector<BitVec> null = f2_nullspace(gram);
    std::vector<SSGElement> out;
    F2Span indep(2 * nq);
    for (const BitVec& v : null) {
        PauliWord w(nq);
        std::vector<int> parts;
        for (size_t i = 0; i < m; ++i)
            if (v.get(i)) {
                w.x.xor_with(ops[i].x);
                w.z.xor_with(ops[i].z);
                parts.push_back(int(i));
            }
        if (!w.x.any() && !w.z.any()) continue; // a relation, not an element
        if (!indep.insert(w.symplectic_row())) continue;
        SSGElement e;
        e.op = w.normalized();
        e.constituents = std::move(parts);
        bool px = !w.z.any(), pz = !w.x.any();
        e.color_class = px ? "x-type" : pz ? "z-type" : "mixed";
        out.push_back(std::move(e));
    }
    return out;
}

// The steady stabilizers are the central elements whose eigenvalues are
// actually pinned by the measurement cycle. The raw center can also contain
// system-spanning loop products that commute with every check but are never
// value-determined (they act as logical operators); intersecting with the
// per-offset known-value groups removes them.
static std::vector<SSGElement> value_determined_center(
    const std::vector<PauliWord>& ops, const std::vector<CheckInstance>& instances,
    const std::vector<std::vector<int>>& per_round, size_t nq) {
    std::vector<SSGElement> center = compute_center(ops);
    if (center.empty()) return center;
    std::vector<BitVec> rows;
    rows.reserve(center.size());
    for (const SSGElement& e : center) rows.push_back(e.op.symplectic_row());
    for (const auto& kg : steady_known_groups(instances, per_round, nq)) {
        std::vector<BitVec> krows;
        krows.reserve(kg.size());
        for (const PauliWord& w : kg) krows.push_back(w.symplectic_row());
        rows = f2_span_intersection(rows, krows);
        if (rows.empty()) break;
    }
    F2Span span(2 * nq);
    for (const PauliWord& w : ops) span.insert(w.symplectic_row());
    std::vector<SSGElement> out;
    for (const BitVec& r : rows) {
        auto [rem, combo] = span.reduce(r);
        if (rem.any()) continue; // cannot happen: the center lies in the op span
        PauliWord w(nq);
        for (size_t q = 0; q < nq; ++q) {
            if (r.get(q)) w.x.set(q, true);
            if (r.get(nq + q)) w.z.set(q, true);
        }
        SSGElement e;
        e.op = w.normalized();
        for (size_t i = 0; i < ops.size(); ++i)
            if (i < combo.n && combo.get(i)) e.constituents.push_back(int(i));
        bool px = !w.z.any(), pz = !w.x.any();
        e.color_class = px ? "x-type" : pz ? "z-type" : "mixed";
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SSGElement> compute_ssg(const InteractionDiagram& d) {
    // pick the natural measurement ordering for the diagram's palette: two
    // colors alternate, a palette with cross-slice couplings uses the six-round
    // cycle, anything else the three-round cycle
    bool has_black = false, has_blue = false;
    for (const Check& c : d.checks) {
        if (c.color == Color::black) has_black = true;
        if (c.color == Color::blue) has_blue = true;
    }
    const char* name = has_black ? "toric-nd-6step"
                                 : (has_blue ? "toric2d-3step" : "baconshor-2step");
    return compute_ssg(d, builtin_schedule(name));
}

std::vector<SSGElement> compute_ssg(const InteractionDiagram& d, const Schedule& s) {
    std::vector<CheckInstance> instances;
    std::vector<std::vector<int>> per_round;
    make_instances(d, s, instances, per_round);
    std::vector<PauliWord> ops;
    ops.reserve(instances.size());
    for (const CheckInstance& ci : instances) ops.push_back(ci.word);
    return value_determined_center(ops, instances, per_round, d.n_qubits());
}

EffectiveMap make_effective_map(size_t n_qubits, const std::vector<PauliWord>& couplings,
                                OpType t) {
    EffectiveMap m;
    m.coupling_type = t;
    std::vector<int> parent(n_qubits);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const PauliWord& c : couplings) {
        int first = -1;
        for (size_t q = 0; q < n_qubits; ++q)
            if (c.x.get(q) || c.z.get(q)) {
                if (first < 0) first = int(q);
                else parent[find(int(q))] = find(first);
            }
    }
    std::vector<int> label(n_qubits, -1);
    m.component.resize(n_qubits);
    for (size_t q = 0; q < n_qubits; ++q) {
        int r = find(int(q));
        if (label[r] < 0) {
            label[r] = int(m.n_effective++);
            m.members.push_back({});
        }
        m.component[q] = label[r];
        m.members[label[r]].push_back(int(q));
    }
    return m;
}

std::optional<PauliWord> map_through(const EffectiveMap& m, const PauliWord& w) {
    size_t nq = w.n();
    // decompose w relative to the coupling letter T: the beta part must act on
    // whole components (these become effective X), the alpha part contributes
    // its per-component parity (effective Z)
    auto beta_bit = [&](size_t q) {
        switch (m.coupling_type) {
            case OpType::ZZ: return w.x.get(q);
            case OpType::XX: return w.z.get(q);
            case OpType::YY: return w.x.get(q) != w.z.get(q);
        }
        return false;
    };
    auto alpha_bit = [&](size_t q) {
        switch (m.coupling_type) {
            case OpType::ZZ: return w.z.get(q);
            case OpType::XX: return w.x.get(q);
            case OpType::YY: return w.z.get(q);
        }
        return false;
    };
    PauliWord eff(m.n_effective);
    std::vector<int> beta_count(m.n_effective, 0), alpha_par(m.n_effective, 0);
    for (size_t q = 0; q < nq; ++q) {
        if (beta_bit(q)) beta_count[m.component[q]]++;
        if (alpha_bit(q)) alpha_par[m.component[q]] ^= 1;
    }
    for (size_t c = 0; c < m.n_effective; ++c) {
        size_t sz = m.members[c].size();
        if (beta_count[c] != 0 && beta_count[c] != int(sz)) return std::nullopt;
        if (beta_count[c] == int(sz) && sz > 0) eff.x.set(c, true);
        if (alpha_par[c]) eff.z.set(c, true);
    }
    return eff.normalized();
}

ClassicalCodeReport ssg_classical_code_check(const InteractionDiagram& d,
                                             const Schedule& s, size_t round_offset) {
    ClassicalCodeReport rep;
    const Round& rd = s.round(round_offset);
    // the round's couplings must share one operator type for the quotient
    std::optional<OpType> t = rd.op_override;
    std::vector<PauliWord> couplings;
    for (const Check& c : d.checks) {
        if (!rd.colors.count(c.color)) continue;
        OpType ct = rd.op_override.value_or(default_optype(c.color));
        if (t && *t != ct) {
            rep.uniform_round = false;
            return rep;
        }
        t = ct;
        couplings.push_back(d.check_word(c.id, ct));
    }
    if (!t) {
        rep.uniform_round = false;
        return rep;
    }
    EffectiveMap m = make_effective_map(d.n_qubits(), couplings, *t);
    rep.n_effective = m.n_effective;
    std::vector<SSGElement> ssg = compute_ssg(d, s);
    for (const SSGElement& e : ssg) {
        auto eff = map_through(m, e.op);
        if (eff && (eff->x.any() || eff->z.any())) rep.effective_ssg.push_back(*eff);
    }
    rep.detected.assign(m.n_effective, {false, false, false});
    for (size_t q = 0; q < m.n_effective; ++q) {
        const char letters[3] = {'X', 'Y', 'Z'};
        for (int p = 0; p < 3; ++p) {
            PauliWord err = PauliWord::single(m.n_effective, q, letters[p]);
            for (const PauliWord& g : rep.effective_ssg)
                if (!commutes(g, err)) {
                    rep.detected[q][p] = true;
                    break;
                }
        }
        if (!rep.detected[q][0] && !rep.detected[q][1] && !rep.detected[q][2])
            rep.all_detected_some_type = false;
    }
    // repetition-code structure: same-type pairs on consecutive effective qubits
    for (char p : {'X', 'Z', 'Y'}) {
        if (m.n_effective < 2) break;
        std::vector<PauliWord> pairs;
        for (size_t q = 0; q + 1 < m.n_effective; ++q)
            pairs.push_back(PauliWord::pair(m.n_effective, q, q + 1, p));
        if (!rep.effective_ssg.empty() && groups_equal_f2(rep.effective_ssg, pairs)) {
            rep.is_repetition_code = true;
            rep.repetition_basis = p;
            break;
        }
    }
    return rep;
}

} // namespace sw
