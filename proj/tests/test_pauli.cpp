#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sw/pauli.hpp"

#include <random>

using namespace sw;

static PauliWord random_word(size_t n, std::mt19937_64& rng) {
    PauliWord w(n);
    for (size_t i = 0; i < n; ++i) {
        w.x.set(i, rng() & 1);
        w.z.set(i, rng() & 1);
    }
    w.phase = uint8_t(rng() & 3);
    return w;
}

TEST_CASE("single-qubit products") {
    PauliWord X = PauliWord::single(1, 0, 'X');
    PauliWord Y = PauliWord::single(1, 0, 'Y');
    PauliWord Z = PauliWord::single(1, 0, 'Z');

    // X * Y = i Z
    PauliWord xy = pauli_mul(X, Y);
    CHECK(xy.same_f2(Z));
    CHECK(xy.phase == 1);

    // X * X = I
    CHECK(pauli_mul(X, X).is_identity());

    // Z * X = i Y: in the i^phase X^x Z^z encoding Y carries phase 1, so the
    // product word (x=1, z=1) lands at phase 2 = 1 (from Y) + 1 (from i)
    PauliWord zx = pauli_mul(Z, X);
    CHECK(zx.same_f2(Y));
    CHECK(zx.phase == 2);

    // (iY) * Y = i * I
    PauliWord r = pauli_mul(zx, Y);
    CHECK(r.same_f2(PauliWord::identity(1)));
    CHECK(r.phase == 1);
}

TEST_CASE("hermiticity, sign and normalization") {
    PauliWord Y = PauliWord::single(3, 1, 'Y');
    CHECK(Y.is_hermitian());
    CHECK(Y.sign() == +1);
    PauliWord mY = Y;
    mY.phase = uint8_t((mY.phase + 2) & 3);
    CHECK(mY.is_hermitian());
    CHECK(mY.sign() == -1);
    CHECK(mY.normalized().sign() == +1);
    CHECK(mY.normalized().same_f2(Y));

    PauliWord iX = PauliWord::single(2, 0, 'X');
    iX.phase = 1;
    CHECK(!iX.is_hermitian());
}

TEST_CASE("string round trip") {
    PauliWord w = pauli_from_str("-XZ.Y");
    CHECK(w.n() == 4);
    CHECK(w.str() == "-XZ.Y");
    CHECK(w.sign() == -1);
    CHECK(pauli_from_str("+ZZ").str() == "+ZZ");
}

TEST_CASE("commutation matches symplectic form (property)") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 200; ++it) {
        size_t n = 1 + rng() % 20;
        PauliWord a = random_word(n, rng), b = random_word(n, rng);
        bool sym = a.x.dot(b.z) ^ a.z.dot(b.x);
        CHECK(commutes(a, b) == !sym);
        // ab = (-1)^sym ba
        PauliWord ab = pauli_mul(a, b), ba = pauli_mul(b, a);
        CHECK(ab.same_f2(ba));
        CHECK(((ab.phase - ba.phase) & 3) == (sym ? 2 : 0));
    }
}

TEST_CASE("multiplication is associative (property)") {
    std::mt19937_64 rng(29);
    for (int it = 0; it < 200; ++it) {
        size_t n = 1 + rng() % 16;
        PauliWord a = random_word(n, rng), b = random_word(n, rng), c = random_word(n, rng);
        PauliWord l = pauli_mul(pauli_mul(a, b), c);
        PauliWord r = pauli_mul(a, pauli_mul(b, c));
        CHECK(l.same_f2(r));
        CHECK(l.phase == r.phase);
    }
}

TEST_CASE("symplectic row layout") {
    PauliWord w(70);
    w.x.set(3, true);
    w.z.set(69, true);
    BitVec row = w.symplectic_row();
    CHECK(row.n == 140);
    CHECK(row.get(3));
    CHECK(row.get(70 + 69));
    CHECK(row.popcount() == 2);
}
