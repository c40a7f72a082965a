#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sw/weave.hpp"

#include <set>

using namespace sw;

static InteractionDiagram square_diagram(int L) {
    CellComplex cc = build_hypercubic(2, L);
    return place_chains_on_plaquettes(cc, two_color_vertices(cc));
}

TEST_CASE("2D square torus L=4: trivalent, three check types") {
    InteractionDiagram d = square_diagram(4);
    CHECK(d.n_qubits() == 64);
    CHECK(d.chains.size() == 16);
    CHECK(d.count_checks(Color::green) == 32);
    CHECK(d.count_checks(Color::blue) == 32);
    CHECK(d.count_checks(Color::red) == 32);
    CHECK(d.count_checks(Color::black) == 0);

    // trivalent: every qubit sits in exactly three checks, one per color class
    std::vector<int> degree(d.n_qubits(), 0);
    std::vector<std::set<Color>> colors(d.n_qubits());
    for (const Check& c : d.checks) {
        ++degree[c.q1];
        ++degree[c.q2];
        colors[c.q1].insert(c.color);
        colors[c.q2].insert(c.color);
    }
    for (size_t q = 0; q < d.n_qubits(); ++q) {
        CHECK(degree[q] == 3);
        CHECK(colors[q].size() == 3);
    }
}

TEST_CASE("2D chains alternate green/blue inner checks") {
    InteractionDiagram d = square_diagram(4);
    for (const Chain& ch : d.chains) {
        size_t m = ch.qubits.size();
        CHECK(m == 4);
        // collect inner checks of this chain in cyclic order
        std::vector<Color> around(m, Color::red);
        for (const Check& c : d.checks) {
            if (!c.inner) continue;
            if (d.qubits[c.q1].host_chain != ch.id) continue;
            int p1 = d.qubits[c.q1].position_in_chain;
            int p2 = d.qubits[c.q2].position_in_chain;
            if ((p1 + 1) % int(m) == p2) around[p1] = c.color;
            else if ((p2 + 1) % int(m) == p1) around[p2] = c.color;
        }
        for (size_t k = 0; k < m; ++k) {
            CHECK(around[k] != Color::red);
            CHECK(around[k] != around[(k + 1) % m]);
        }
    }
}

TEST_CASE("3D cubic torus L=2 vertex placement counts") {
    CellComplex cc = build_hypercubic(3, 2);
    InteractionDiagram d = place_chains_around_vertices(cc);
    CHECK(d.n_qubits() == 96);
    CHECK(d.chains.size() == 24);
    CHECK(d.count_checks(Color::green, true) + d.count_checks(Color::blue, true) +
              d.count_checks(Color::red, true) + d.count_checks(Color::black, true) ==
          96);
    CHECK(d.count_checks(Color::red) - d.count_checks(Color::red, true) == 48);
    CHECK(d.count_checks(Color::black) == 24);
    // four qubits cross every lattice edge
    for (const auto& eq : d.edge_qubits) CHECK(eq.size() == 4);
}

TEST_CASE("check words carry the color-bound operator type") {
    InteractionDiagram d = square_diagram(4);
    for (const Check& c : d.checks) {
        PauliWord w = d.check_word(c.id);
        PauliWord expect = PauliWord::pair(d.n_qubits(), c.q1, c.q2,
                                           c.color == Color::green ? 'X'
                                           : c.color == Color::blue ? 'Y'
                                                                    : 'Z');
        CHECK(w.same_f2(expect));
        CHECK(w.sign() == +1);
        // CSS-style override replaces the letter
        PauliWord zz = d.check_word(c.id, OpType::ZZ);
        CHECK(zz.same_f2(PauliWord::pair(d.n_qubits(), c.q1, c.q2, 'Z')));
    }
}

TEST_CASE("hex prism needs compensation chains") {
    CellComplex cc = build_hex_prism(2, 2, 2);
    VertexColoring col = two_color_vertices(cc);
    CHECK_THROWS_AS(place_chains_on_plaquettes(cc, col), OddParity);
    InteractionDiagram partial = place_chains_on_plaquettes(cc, col, true);
    ParityReport pr = edge_face_parity(cc);
    InteractionDiagram full = add_vertical_chains(partial, pr.loops);
    CHECK(full.chains.size() == partial.chains.size() + pr.loops.size());
    // after compensation every lattice edge hosts an even number of qubits
    for (const auto& eq : full.edge_qubits) CHECK(eq.size() % 2 == 0);
    // and the coupling layer exists
    CHECK(full.count_checks(Color::red) > 0);
}

TEST_CASE("bacon-shor grid L=3") {
    InteractionDiagram d = build_bacon_shor(3);
    CHECK(d.n_qubits() == 16);
    CHECK(d.count_checks(Color::red) == 12);   // horizontal ZZ
    CHECK(d.count_checks(Color::green) == 12); // vertical XX
    CHECK(d.count_checks(Color::blue) == 0);
    for (const Check& c : d.checks) {
        OpType t = default_optype(c.color);
        CHECK((c.color == Color::red ? t == OpType::ZZ : t == OpType::XX));
    }
}

TEST_CASE("diagram json export is well formed") {
    InteractionDiagram d = square_diagram(4);
    std::string text = diagram_to_json(d);
    CHECK(text.find("\"qubits\"") != std::string::npos);
    CHECK(text.find("\"checks\"") != std::string::npos);
}
