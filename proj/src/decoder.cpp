#include "sw/decoder.hpp"

#include <algorithm>
#include <map>
#include <atomic>
#include <sstream>
#include <thread>

namespace sw {

std::vector<int> expected_flips(const std::vector<PauliWord>& ssg, const PauliWord& err) {
    std::vector<int> out;
    for (size_t i = 0; i < ssg.size(); ++i)
        if (!commutes(ssg[i], err)) out.push_back(int(i));
    return out;
}

Detection detect_flips(const Ledger& baseline, const Ledger& with_error, int after,
                       int upto) {
    Detection det;
    det.window_begin = after + 1;
    det.window_end = upto;
    for (size_t e = 0; e < baseline.size(); ++e) {
        // compare the latest common referral inside the window: earlier
        // referrals may still rest on pre-error outcomes
        int referred = 0;
        bool flip = false;
        for (size_t k = 0; k < baseline[e].size() && k < with_error[e].size(); ++k) {
            auto [rb, vb] = baseline[e][k];
            auto [re, ve] = with_error[e][k];
            if (rb != re) break; // runs must agree on referral rounds
            if (rb <= after || rb > upto) continue;
            ++referred;
            flip = vb != ve;
        }
        if (referred < 2) det.complete = false; // observed at least twice
        if (flip) det.flipped.push_back(int(e));
    }
    return det;
}

std::optional<PauliWord> decode_single(const std::vector<PauliWord>& ssg,
                                       size_t n_qubits,
                                       const std::vector<int>& flipped) {
    if (flipped.empty()) return PauliWord::identity(n_qubits);
    for (size_t q = 0; q < n_qubits; ++q)
        for (char p : {'X', 'Y', 'Z'}) {
            PauliWord cand = PauliWord::single(n_qubits, q, p);
            if (expected_flips(ssg, cand) == flipped) return cand;
        }
    return std::nullopt;
}

std::string SweepReport::csv() const {
    std::ostringstream os;
    os << "qubit,pauli,round_offset,detected,corrected\n";
    for (const SweepCase& c : cases)
        os << c.qubit << ',' << c.pauli << ',' << c.offset << ',' << (c.detected ? 1 : 0)
           << ',' << (c.corrected ? 1 : 0) << '\n';
    return os.str();
}

SweepReport sweep_single_errors(const InteractionDiagram& d, const Schedule& s,
                                int jobs) {
    size_t P = s.period();
    size_t nq = d.n_qubits();
    std::vector<SSGElement> ssg_elems = compute_ssg(d, s);
    std::vector<PauliWord> ssg = ssg_words(ssg_elems);

    // baseline run (forcing mode): warm up into the steady regime, keep a
    // resumable copy at each injection offset, and extend far enough to cover
    // every two-period observation window
    FloquetRun base;
    base.init(d, s, 1, true, ssg);
    base.run_rounds(4 * P);
    std::vector<FloquetRun> snap;
    for (size_t off = 0; off < P; ++off) {
        base.step(); // completes round 4P + off
        snap.push_back(base);
    }
    base.run_rounds(2 * P);

    // residual triviality: span of steady elements and every measured check
    F2Span trivial(2 * nq);
    for (const PauliWord& w : ssg) trivial.insert(w.symplectic_row());
    for (const CheckInstance& ci : base.instances) trivial.insert(ci.word.symplectic_row());

    SweepReport rep;
    const char paulis[3] = {'X', 'Y', 'Z'};
    for (size_t q = 0; q < nq; ++q)
        for (char p : paulis)
            for (size_t off = 0; off < P; ++off)
                rep.cases.push_back({int(q), p, int(off), false, false});

    // Pass 1: simulate every case and record its full observable fingerprint —
    // which in-window referrals flipped and which recorded outcomes changed
    // relative to the baseline. Errors with identical fingerprints cannot be
    // distinguished by any decoder reading the measurement record.
    std::vector<std::vector<int8_t>> fingerprints(rep.cases.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= rep.cases.size()) break;
            SweepCase& sc = rep.cases[i];
            int t_inj = int(4 * P) + sc.offset;
            int t_end = t_inj + int(2 * P);
            PauliWord err = PauliWord::single(nq, sc.qubit, sc.pauli);
            FloquetRun run = snap[sc.offset];
            run.inject(err);
            run.run_rounds(2 * P);
            Detection det = detect_flips(base.ledger, run.ledger, t_inj, t_end);
            std::vector<int> expect = expected_flips(ssg, err);
            sc.detected = det.complete && det.flipped == expect && !expect.empty();
            std::vector<int8_t>& fp = fingerprints[i];
            for (size_t e = 0; e < run.ledger.size(); ++e)
                for (size_t k = 0; k < run.ledger[e].size(); ++k) {
                    auto [r, v] = run.ledger[e][k];
                    if (r <= t_inj || r > t_end) continue;
                    fp.push_back(v != base.ledger[e][k].second);
                }
            for (size_t k = 0; k < run.records.size(); ++k) {
                if (run.records[k].round <= t_inj) continue;
                fp.push_back(run.records[k].outcome != base.records[k].outcome);
            }
        }
    };
    int nthreads = std::max(1, jobs);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> ts;
        for (int k = 0; k < nthreads; ++k) ts.emplace_back(worker);
        for (auto& t : ts) t.join();
    }

    // Pass 2: decode each case as the first single Pauli (lowest qubit id)
    // whose fingerprint matches. A residual is trivial when it lies in the
    // span of steady elements and measured checks, or when injecting it alone
    // is invisible: within two periods the signed instantaneous stabilizers
    // return to the clean run's (the sign flips heal under remeasurement, so
    // the two errors acted identically on the state).
    std::vector<FloquetRun> clean;
    for (size_t off = 0; off < P; ++off) {
        FloquetRun c = snap[off];
        c.run_rounds(2 * P);
        clean.push_back(std::move(c));
    }
    std::map<std::pair<int, std::string>, bool> heal_cache;
    auto residual_heals = [&](int off, const PauliWord& residual) {
        auto key = std::make_pair(off, residual.str());
        auto it = heal_cache.find(key);
        if (it != heal_cache.end()) return it->second;
        FloquetRun probe = snap[off];
        probe.inject(residual);
        probe.run_rounds(2 * P);
        bool ok = groups_equal_signed(probe.tab.stab, clean[off].tab.stab);
        heal_cache[key] = ok;
        return ok;
    };
    std::map<std::pair<int, std::vector<int8_t>>, size_t> representative;
    for (size_t i = 0; i < rep.cases.size(); ++i)
        representative.try_emplace({rep.cases[i].offset, fingerprints[i]}, i);
    for (size_t i = 0; i < rep.cases.size(); ++i) {
        SweepCase& sc = rep.cases[i];
        if (!sc.detected) continue;
        const SweepCase& cand =
            rep.cases[representative.at({sc.offset, fingerprints[i]})];
        PauliWord err = PauliWord::single(nq, sc.qubit, sc.pauli);
        PauliWord corr = PauliWord::single(nq, cand.qubit, cand.pauli);
        PauliWord residual = err;
        residual.x.xor_with(corr.x);
        residual.z.xor_with(corr.z);
        sc.corrected = (!residual.x.any() && !residual.z.any()) ||
                       trivial.contains(residual.symplectic_row()) ||
                       residual_heals(sc.offset, residual);
    }
    for (const SweepCase& c : rep.cases) {
        if (c.detected) ++rep.n_detected;
        if (c.corrected) ++rep.n_corrected;
    }
    rep.all_pass = rep.n_corrected == rep.cases.size();
    return rep;
}

} // namespace sw
