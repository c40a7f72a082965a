#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sw/ssg.hpp"
#include "sw/phases.hpp"

using namespace sw;

static InteractionDiagram square_diagram(int L) {
    CellComplex cc = build_hypercubic(2, L);
    return place_chains_on_plaquettes(cc, two_color_vertices(cc));
}

TEST_CASE("center of a hand-built operator set") {
    size_t n = 4;
    std::vector<PauliWord> ops = {
        PauliWord::pair(n, 0, 1, 'Z'), PauliWord::pair(n, 1, 2, 'Z'),
        PauliWord::pair(n, 2, 3, 'Z'), PauliWord::pair(n, 0, 1, 'X'),
    };
    std::vector<SSGElement> c = compute_center(ops);
    // Z0Z1 anticommutes with nothing but X0X1 does with Z1Z2; the center is
    // spanned by Z2Z3 and the full products that commute with X0X1
    for (const SSGElement& e : c) {
        for (const PauliWord& o : ops) CHECK(commutes(e.op, o));
        CHECK(f2_member(ops, e.op));
        // constituents reproduce the element
        PauliWord prod(n);
        for (int i : e.constituents) {
            prod.x.xor_with(ops[i].x);
            prod.z.xor_with(ops[i].z);
        }
        CHECK(prod.same_f2(e.op));
    }
    CHECK(f2_member(ssg_words(c), PauliWord::pair(n, 2, 3, 'Z')));
}

TEST_CASE("2D L=4 steady stabilizer group") {
    InteractionDiagram d = square_diagram(4);
    Schedule s = builtin_schedule("toric2d-3step");
    std::vector<SSGElement> ssg = compute_ssg(d, s);
    CHECK(ssg.size() == 31);

    std::vector<CheckInstance> instances;
    std::vector<std::vector<int>> per_round;
    make_instances(d, s, instances, per_round);
    for (const SSGElement& e : ssg) {
        CHECK(e.op.sign() == +1);
        for (const CheckInstance& ci : instances) CHECK(commutes(e.op, ci.word));
        // constituents index the instance list and multiply to the element
        PauliWord prod(d.n_qubits());
        for (int i : e.constituents) {
            prod.x.xor_with(instances[i].word.x);
            prod.z.xor_with(instances[i].word.z);
        }
        CHECK(prod.same_f2(e.op));
    }
    // steady elements are pairwise commuting (an abelian group)
    for (size_t i = 0; i < ssg.size(); ++i)
        for (size_t j = i + 1; j < ssg.size(); ++j)
            CHECK(commutes(ssg[i].op, ssg[j].op));
}

TEST_CASE("schedule-free overload picks the natural ordering") {
    InteractionDiagram d2 = square_diagram(4);
    CHECK(groups_equal_f2(ssg_words(compute_ssg(d2)),
                          ssg_words(compute_ssg(d2, builtin_schedule("toric2d-3step")))));

    CellComplex cc3 = build_hypercubic(3, 2);
    InteractionDiagram d3 = place_chains_on_plaquettes(cc3, two_color_vertices(cc3));
    CHECK(groups_equal_f2(ssg_words(compute_ssg(d3)),
                          ssg_words(compute_ssg(d3, builtin_schedule("toric-nd-6step")))));
}

TEST_CASE("3D L=2 steady stabilizer group rank") {
    CellComplex cc = build_hypercubic(3, 2);
    InteractionDiagram d = place_chains_on_plaquettes(cc, two_color_vertices(cc));
    std::vector<SSGElement> ssg = compute_ssg(d, builtin_schedule("toric-nd-6step"));
    CHECK(ssg.size() == 31);
    for (const SSGElement& e : ssg)
        for (const Check& c : d.checks) CHECK(commutes(e.op, d.check_word(c.id)));
}

TEST_CASE("steady elements lie in every per-round stabilizer group") {
    InteractionDiagram d = square_diagram(4);
    Schedule s = builtin_schedule("toric2d-3step");
    std::vector<PauliWord> ssg = ssg_words(compute_ssg(d, s));
    FloquetRun run = run_schedule(d, s, 4 * s.period(), 7, true);
    for (size_t r = 2 * s.period(); r < run.isg.size(); ++r)
        for (const PauliWord& w : ssg) CHECK(f2_member(run.isg[r], w));
}

TEST_CASE("coupling quotient: components and operator transport") {
    // four qubits glued pairwise by ZZ couplings
    size_t n = 4;
    std::vector<PauliWord> cpl = {PauliWord::pair(n, 0, 1, 'Z'),
                                  PauliWord::pair(n, 2, 3, 'Z')};
    EffectiveMap m = make_effective_map(n, cpl, OpType::ZZ);
    CHECK(m.n_effective == 2);
    CHECK(m.component[0] == m.component[1]);
    CHECK(m.component[2] == m.component[3]);
    CHECK(m.component[0] != m.component[2]);

    // X on a whole component becomes effective X
    auto xx = map_through(m, PauliWord::pair(n, 0, 1, 'X'));
    REQUIRE(xx.has_value());
    CHECK(xx->x.get(m.component[0]));
    CHECK(!xx->z.any());
    // a single Z becomes effective Z (odd parity in its component)
    auto z0 = map_through(m, PauliWord::single(n, 0, 'Z'));
    REQUIRE(z0.has_value());
    CHECK(z0->z.get(m.component[0]));
    CHECK(!z0->x.any());
    // Z0 Z1 is the coupling itself: trivial image
    auto zz = map_through(m, PauliWord::pair(n, 0, 1, 'Z'));
    REQUIRE(zz.has_value());
    CHECK(zz->is_identity());
    // a bare X on half a component does not survive
    CHECK(!map_through(m, PauliWord::single(n, 0, 'X')).has_value());
    // transported operators keep the Pauli algebra: images of anticommuting
    // survivors anticommute
    CHECK(!commutes(*xx, *z0));
}

TEST_CASE("coupling quotient with YY couplings") {
    size_t n = 2;
    std::vector<PauliWord> cpl = {PauliWord::pair(n, 0, 1, 'Y')};
    EffectiveMap m = make_effective_map(n, cpl, OpType::YY);
    CHECK(m.n_effective == 1);
    auto yy = map_through(m, PauliWord::pair(n, 0, 1, 'Y'));
    REQUIRE(yy.has_value());
    CHECK(yy->is_identity());
    auto zz = map_through(m, PauliWord::pair(n, 0, 1, 'Z'));
    REQUIRE(zz.has_value());
    CHECK((zz->x.any() || zz->z.any()));
}

TEST_CASE("grid code steady group acts as a length-4 repetition code") {
    InteractionDiagram d = build_bacon_shor(3);
    Schedule s = builtin_schedule("baconshor-2step");
    CHECK(compute_ssg(d, s).size() == 6);
    for (size_t off = 0; off < s.period(); ++off) {
        ClassicalCodeReport rep = ssg_classical_code_check(d, s, off);
        CHECK(rep.uniform_round);
        CHECK(rep.n_effective == 4);
        CHECK(rep.effective_ssg.size() == 3);
        CHECK(rep.all_detected_some_type);
        CHECK(rep.is_repetition_code);
        CHECK(rep.repetition_basis == 'X');
    }
}
