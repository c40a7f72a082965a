#include "sw/engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace sw {

Tableau::Tableau(size_t n_) : n(n_) {
    pool.reserve(2 * n);
    for (size_t i = 0; i < n; ++i) pool.push_back(PauliWord::single(n, i, 'X'));
    for (size_t i = 0; i < n; ++i) pool.push_back(PauliWord::single(n, i, 'Z'));
}

static PauliWord with_sign(const PauliWord& op, int outcome) {
    PauliWord w = op.normalized();
    if (outcome < 0) w.phase = uint8_t((w.phase + 2) & 3);
    return w;
}

MeasureResult Tableau::measure(const PauliWord& op, std::optional<int> forced,
                               std::mt19937_64& rng) {
    if (!op.is_hermitian()) throw std::invalid_argument("measure: non-Hermitian operator");
    auto sample = [&]() {
        if (forced) return *forced;
        return (rng() & 1) ? -1 : +1;
    };
    // (a) anticommutes with an installed stabilizer: random outcome
    size_t p = stab.size();
    for (size_t i = 0; i < stab.size(); ++i)
        if (!commutes(stab[i], op)) {
            p = i;
            break;
        }
    if (p < stab.size()) {
        int outcome = sample();
        PauliWord old_sp = stab[p];
        for (size_t i = 0; i < stab.size(); ++i)
            if (i != p && !commutes(stab[i], op)) stab[i] = pauli_mul(stab[i], old_sp);
        for (size_t i = 0; i < destab.size(); ++i)
            if (i != p && !commutes(destab[i], op)) destab[i] = pauli_mul(destab[i], old_sp);
        for (PauliWord& f : pool)
            if (!commutes(f, op)) f = pauli_mul(f, old_sp);
        destab[p] = old_sp;
        stab[p] = with_sign(op, outcome);
        return {outcome, false};
    }
    // op commutes with every stabilizer; reconstruct its image in the group
    PauliWord c = PauliWord::identity(n);
    for (size_t i = 0; i < stab.size(); ++i)
        if (!commutes(op, destab[i])) c = pauli_mul(c, stab[i]);
    if (c.same_f2(op)) {
        // (b) already in the group: deterministic
        PauliWord t = pauli_mul(c, op);
        return {t.phase == 0 ? +1 : -1, true};
    }
    // (c) commuting but new: outcome random, rank grows
    PauliWord m = pauli_mul(c, op); // commutes with all stab & destab, not identity
    size_t j = pool.size();
    for (size_t i = 0; i < pool.size(); ++i)
        if (!commutes(pool[i], m)) {
            j = i;
            break;
        }
    if (j == pool.size())
        throw std::logic_error("tableau invariant broken: no conjugate partner found");
    PauliWord a = pool[j];
    pool.erase(pool.begin() + j);
    for (PauliWord& f : pool) {
        bool ga = !commutes(f, a);
        bool gm = !commutes(f, m);
        if (ga) f = pauli_mul(f, m);
        if (gm) f = pauli_mul(f, a);
    }
    for (size_t i = 0; i < destab.size(); ++i)
        if (!commutes(op, destab[i])) destab[i] = pauli_mul(destab[i], a);
    int outcome = sample();
    stab.push_back(with_sign(op, outcome));
    destab.push_back(a);
    return {outcome, false};
}

void Tableau::apply_error(const PauliWord& e) {
    for (PauliWord& s : stab)
        if (!commutes(s, e)) s.phase = uint8_t((s.phase + 2) & 3);
}

void make_instances(const InteractionDiagram& d, const Schedule& s,
                    std::vector<CheckInstance>& instances,
                    std::vector<std::vector<int>>& round_instances) {
    instances.clear();
    round_instances.assign(s.period(), {});
    std::map<std::pair<int, int>, int> seen; // (check, type) -> instance index
    for (size_t r = 0; r < s.period(); ++r) {
        const Round& rd = s.rounds[r];
        for (const Check& c : d.checks) {
            if (!rd.colors.count(c.color)) continue;
            OpType t = rd.op_override.value_or(default_optype(c.color));
            auto key = std::make_pair(c.id, int(t));
            auto it = seen.find(key);
            int idx;
            if (it == seen.end()) {
                idx = int(instances.size());
                seen[key] = idx;
                instances.push_back({c.id, t, d.check_word(c.id, t)});
            } else {
                idx = it->second;
            }
            round_instances[r].push_back(idx);
        }
    }
}

namespace {
// one operator whose value is currently known: base_sign times the product of
// the recorded outcomes equals the eigenvalue of the (normalized) word
struct KnownValue {
    PauliWord word; // normalized
    int base_sign = +1;
    std::vector<std::pair<int, int>> parts; // (instance index, round lag)
};

std::vector<std::pair<int, int>> parts_symdiff(std::vector<std::pair<int, int>> acc,
                                               const std::vector<std::pair<int, int>>& o) {
    for (const auto& p : o) {
        auto it = std::find(acc.begin(), acc.end(), p);
        if (it != acc.end()) acc.erase(it); // a value used twice cancels
        else acc.push_back(p);
    }
    return acc;
}

// combine pairwise-commuting known values selected by a bit vector
KnownValue combine_known(const std::vector<KnownValue>& known, const BitVec& sel,
                         size_t n_qubits) {
    KnownValue out;
    out.word = PauliWord::identity(n_qubits);
    PauliWord prod = PauliWord::identity(n_qubits);
    for (size_t i = 0; i < known.size(); ++i) {
        if (i >= sel.n || !sel.get(i)) continue;
        prod = pauli_mul(prod, known[i].word);
        out.base_sign *= known[i].base_sign;
        out.parts = parts_symdiff(std::move(out.parts), known[i].parts);
    }
    out.word = prod.normalized();
    // reordering phase between the product and its normalized form
    out.base_sign *= (pauli_mul(prod, out.word).phase == 0) ? +1 : -1;
    return out;
}

// After every round the group of operators with known eigenvalues is
//   K_t = < fresh measurements >  *  centralizer of them inside K_{t-1}.
// Iterate the recursion to its periodic fixed point and return the per-offset
// known-value basis (with lags measured from that offset's round).
std::vector<std::vector<KnownValue>> steady_known_values(
    const std::vector<CheckInstance>& instances,
    const std::vector<std::vector<int>>& round_instances, size_t n_qubits) {
    size_t period = round_instances.size();
    std::vector<std::vector<KnownValue>> per_offset(period);
    std::vector<KnownValue> known;
    const size_t warmup_periods = 8; // fixed point well before this on any input
    for (size_t t = 0; t < (warmup_periods + 1) * period; ++t) {
        size_t rho = t % period;
        for (KnownValue& k : known)
            for (auto& p : k.parts) ++p.second;
        const std::vector<int>& fresh_ids = round_instances[rho];
        // survivors: products of previous known values commuting with every
        // fresh measurement
        std::vector<KnownValue> survivors;
        if (!known.empty()) {
            F2Matrix gram(fresh_ids.size(), known.size());
            for (size_t j = 0; j < fresh_ids.size(); ++j)
                for (size_t i = 0; i < known.size(); ++i)
                    if (!commutes(known[i].word, instances[fresh_ids[j]].word))
                        gram.set(j, i, true);
            for (const BitVec& sel : f2_nullspace(gram))
                survivors.push_back(combine_known(known, sel, n_qubits));
        }
        std::vector<KnownValue> next;
        F2Span span(2 * n_qubits);
        for (int idx : fresh_ids) {
            KnownValue kv;
            kv.word = instances[idx].word.normalized();
            kv.base_sign = +1;
            kv.parts = {{idx, 0}};
            if (span.insert(kv.word.symplectic_row())) next.push_back(std::move(kv));
        }
        for (KnownValue& kv : survivors)
            if (span.insert(kv.word.symplectic_row())) next.push_back(std::move(kv));
        known = std::move(next);
        if (t >= warmup_periods * period) per_offset[rho] = known;
    }
    return per_offset;
}
} // namespace

std::vector<std::vector<PauliWord>> steady_known_groups(
    const std::vector<CheckInstance>& instances,
    const std::vector<std::vector<int>>& round_instances, size_t n_qubits) {
    auto per_offset = steady_known_values(instances, round_instances, n_qubits);
    std::vector<std::vector<PauliWord>> out(per_offset.size());
    for (size_t rho = 0; rho < per_offset.size(); ++rho)
        for (const KnownValue& k : per_offset[rho]) out[rho].push_back(k.word);
    return out;
}

ReferralPlan build_referral_plan(const std::vector<CheckInstance>& instances,
                                 const std::vector<std::vector<int>>& round_instances,
                                 const std::vector<PauliWord>& elements,
                                 size_t n_qubits) {
    size_t period = round_instances.size();
    ReferralPlan plan;
    plan.at.assign(period, std::vector<ReferralEntry>(elements.size()));
    auto per_offset = steady_known_values(instances, round_instances, n_qubits);
    for (size_t rho = 0; rho < period; ++rho) {
        const std::vector<KnownValue>& known = per_offset[rho];
        F2Span red(2 * n_qubits);
        for (const KnownValue& k : known) red.insert(k.word.symplectic_row());
        for (size_t e = 0; e < elements.size(); ++e) {
            auto [rem, combo] = red.reduce(elements[e].symplectic_row());
            if (rem.any()) continue;
            KnownValue kv = combine_known(known, combo, n_qubits);
            if (kv.parts.empty()) continue;
            PauliWord chk = pauli_mul(kv.word, elements[e]);
            ReferralEntry& entry = plan.at[rho][e];
            entry.referable = true;
            entry.base_sign = kv.base_sign * ((chk.phase == 0) ? +1 : -1);
            entry.fresh = false;
            entry.parts = kv.parts;
            for (auto [idx, lag] : kv.parts)
                if (lag == 0) entry.fresh = true;
        }
    }
    return plan;
}

void FloquetRun::init(const InteractionDiagram& d, const Schedule& s, uint64_t seed,
                      bool forcing_mode, std::vector<PauliWord> tracked_elements) {
    diagram = &d;
    sched = s;
    make_instances(d, s, instances, round_instances);
    tab = Tableau(d.n_qubits());
    next_round = 0;
    forcing = forcing_mode;
    rng.seed(seed);
    outcomes.assign(instances.size(), {});
    records.clear();
    isg.clear();
    elements = std::move(tracked_elements);
    ledger.assign(elements.size(), {});
    if (!elements.empty())
        plan = build_referral_plan(instances, round_instances, elements, d.n_qubits());
}

void FloquetRun::step() {
    size_t r = next_round++;
    size_t rho = r % sched.period();
    for (int idx : round_instances[rho]) {
        const CheckInstance& ci = instances[idx];
        MeasureResult mr = tab.measure(ci.word, forcing ? std::optional<int>(+1)
                                                        : std::nullopt,
                                       rng);
        records.push_back({int(r), ci.check_id, ci.type, mr.outcome, mr.deterministic});
        if (outcomes[idx].size() <= r) outcomes[idx].resize(r + 1, 0);
        outcomes[idx][r] = int8_t(mr.outcome);
    }
    isg.push_back(tab.stab);
    if (!elements.empty() && r >= 3 * sched.period()) {
        for (size_t e = 0; e < elements.size(); ++e) {
            const ReferralEntry& en = plan.at[rho][e];
            if (!en.referable) continue;
            int v = en.base_sign;
            for (auto [idx, lag] : en.parts) {
                size_t t = r - size_t(lag);
                int8_t o = (outcomes[idx].size() > t) ? outcomes[idx][t] : 0;
                if (o == 0) { v = 0; break; } // constituent not measured yet
                v *= o;
            }
            if (v != 0) ledger[e].push_back({int(r), v});
        }
    }
}

void FloquetRun::run_rounds(size_t k) {
    for (size_t i = 0; i < k; ++i) step();
}

FloquetRun run_schedule(const InteractionDiagram& d, const Schedule& s, size_t n_rounds,
                        uint64_t seed, bool forcing,
                        std::vector<PauliWord> tracked_elements) {
    FloquetRun run;
    run.init(d, s, seed, forcing, std::move(tracked_elements));
    run.run_rounds(n_rounds);
    return run;
}

std::optional<int> signed_member(const std::vector<PauliWord>& gens, const PauliWord& word) {
    if (gens.empty()) return word.is_identity() ? std::optional<int>(+1) : std::nullopt;
    F2Span span(2 * word.n());
    for (const PauliWord& g : gens) span.insert(g.symplectic_row());
    auto [rem, combo] = span.reduce(word.symplectic_row());
    if (rem.any()) return std::nullopt;
    PauliWord prod = PauliWord::identity(word.n());
    for (size_t i = 0; i < gens.size(); ++i)
        if (i < combo.n && combo.get(i)) prod = pauli_mul(prod, gens[i]);
    PauliWord t = pauli_mul(prod, word);
    if (t.x.any() || t.z.any()) return std::nullopt;
    return t.phase == 0 ? +1 : -1;
}

bool f2_member(const std::vector<PauliWord>& gens, const PauliWord& word) {
    F2Span span(2 * word.n());
    for (const PauliWord& g : gens) span.insert(g.symplectic_row());
    return span.contains(word.symplectic_row());
}

bool groups_equal_f2(const std::vector<PauliWord>& a, const std::vector<PauliWord>& b) {
    if (a.empty() && b.empty()) return true;
    size_t width = !a.empty() ? 2 * a[0].n() : 2 * b[0].n();
    F2Span sa(width), sb(width), sab(width);
    size_t ra = 0, rb = 0;
    for (const PauliWord& g : a) sa.insert(g.symplectic_row());
    for (const PauliWord& g : b) sb.insert(g.symplectic_row());
    ra = sa.rank();
    rb = sb.rank();
    for (const PauliWord& g : a) sab.insert(g.symplectic_row());
    for (const PauliWord& g : b) sab.insert(g.symplectic_row());
    return ra == rb && sab.rank() == ra;
}

bool groups_equal_signed(const std::vector<PauliWord>& a, const std::vector<PauliWord>& b) {
    for (const PauliWord& g : a)
        if (signed_member(b, g) != std::optional<int>(+1)) return false;
    for (const PauliWord& g : b)
        if (signed_member(a, g) != std::optional<int>(+1)) return false;
    return true;
}

std::string trace_to_json(const FloquetRun& run) {
    nlohmann::json j;
    auto recs = nlohmann::json::array();
    for (const MeasurementRecord& m : run.records)
        recs.push_back({{"round", m.round},
                        {"check", m.check_id},
                        {"type", optype_name(m.type)},
                        {"outcome", m.outcome},
                        {"deterministic", m.deterministic}});
    j["records"] = std::move(recs);
    auto isgj = nlohmann::json::array();
    for (const auto& gens : run.isg) {
        auto gj = nlohmann::json::array();
        for (const PauliWord& g : gens) gj.push_back(g.str());
        isgj.push_back(std::move(gj));
    }
    j["isg"] = std::move(isgj);
    auto lj = nlohmann::json::array();
    for (size_t e = 0; e < run.ledger.size(); ++e) {
        auto ej = nlohmann::json::array();
        for (auto [r, v] : run.ledger[e]) ej.push_back({{"round", r}, {"value", v}});
        lj.push_back(std::move(ej));
    }
    j["ledger"] = std::move(lj);
    return j.dump(2);
}

} // namespace sw
