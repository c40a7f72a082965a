#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sw/decoder.hpp"
#include "sw/phases.hpp"

#include <sstream>

using namespace sw;

static InteractionDiagram square_diagram(int L) {
    CellComplex cc = build_hypercubic(2, L);
    return place_chains_on_plaquettes(cc, two_color_vertices(cc));
}

TEST_CASE("expected syndrome matches simulated referral flips") {
    InteractionDiagram d = square_diagram(4);
    Schedule s = builtin_schedule("toric2d-3step");
    std::vector<PauliWord> ssg = ssg_words(compute_ssg(d, s));
    size_t P = s.period(), nq = d.n_qubits();

    FloquetRun base;
    base.init(d, s, 1, true, ssg);
    base.run_rounds(6 * P);
    FloquetRun snap = base;
    base.run_rounds(2 * P);

    int t_inj = int(6 * P), t_end = t_inj + int(2 * P);
    for (auto [q, p] : std::vector<std::pair<int, char>>{
             {0, 'X'}, {0, 'Z'}, {7, 'Y'}, {33, 'Z'}, {63, 'X'}}) {
        PauliWord err = PauliWord::single(nq, size_t(q), p);
        FloquetRun run = snap;
        run.inject(err);
        run.run_rounds(2 * P);
        Detection det = detect_flips(base.ledger, run.ledger, t_inj, t_end);
        CHECK(det.complete);
        CHECK(det.flipped == expected_flips(ssg, err));
        CHECK(!det.flipped.empty());
    }
}

TEST_CASE("no error means no flips, across seeds") {
    InteractionDiagram d = square_diagram(4);
    Schedule s = builtin_schedule("toric2d-3step");
    std::vector<PauliWord> ssg = ssg_words(compute_ssg(d, s));
    size_t P = s.period();
    for (uint64_t seed : {1ull, 2ull, 99ull}) {
        FloquetRun base = run_schedule(d, s, 8 * P, seed, true, ssg);
        Detection det = detect_flips(base.ledger, base.ledger, int(4 * P), int(6 * P));
        CHECK(det.complete);
        CHECK(det.flipped.empty());
    }
}

TEST_CASE("every steady element is referred at least twice per window") {
    InteractionDiagram d = square_diagram(4);
    Schedule s = builtin_schedule("toric2d-3step");
    std::vector<PauliWord> ssg = ssg_words(compute_ssg(d, s));
    FloquetRun base = run_schedule(d, s, 8 * s.period(), 1, true, ssg);
    int after = int(4 * s.period()), upto = after + int(2 * s.period());
    for (const auto& entries : base.ledger) {
        int in_window = 0;
        for (auto [r, v] : entries)
            if (r > after && r <= upto) ++in_window;
        CHECK(in_window >= 2);
    }
}

TEST_CASE("syndrome-matched single-Pauli decoding") {
    InteractionDiagram d = square_diagram(4);
    std::vector<PauliWord> ssg = ssg_words(compute_ssg(d));
    size_t nq = d.n_qubits();
    PauliWord err = PauliWord::single(nq, 17, 'Y');
    auto corr = decode_single(ssg, nq, expected_flips(ssg, err));
    REQUIRE(corr.has_value());
    CHECK(expected_flips(ssg, *corr) == expected_flips(ssg, err));
    // empty syndrome decodes to identity
    auto id = decode_single(ssg, nq, {});
    REQUIRE(id.has_value());
    CHECK(id->is_identity());
}

TEST_CASE("2D L=4 sweep corrects all 576 single-Pauli cases") {
    InteractionDiagram d = square_diagram(4);
    Schedule s = builtin_schedule("toric2d-3step");
    SweepReport rep = sweep_single_errors(d, s, 4);
    CHECK(rep.cases.size() == 576);
    CHECK(rep.n_detected == 576);
    CHECK(rep.n_corrected == 576);
    CHECK(rep.all_pass);

    // csv artifact: header plus one line per case
    std::istringstream is(rep.csv());
    std::string line;
    size_t lines = 0;
    while (std::getline(is, line)) ++lines;
    CHECK(lines == 577);
}

TEST_CASE("grid code L=3 sweep corrects all 96 cases") {
    InteractionDiagram d = build_bacon_shor(3);
    Schedule s = builtin_schedule("baconshor-2step");
    SweepReport rep = sweep_single_errors(d, s, 4);
    CHECK(rep.cases.size() == 96);
    CHECK(rep.n_detected == 96);
    CHECK(rep.n_corrected == 96);
    CHECK(rep.all_pass);
}
