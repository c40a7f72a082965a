#pragma once
// Multi-qubit Pauli operators as symplectic bit-vector pairs with a phase
// exponent mod 4. The operator represented is i^phase * X^x * Z^z, so e.g.
// Y on one qubit is (x=1, z=1, phase=1) and -1 is (0, 0, phase=2).
#include "sw/f2.hpp"

#include <cassert>
#include <cstdint>
#include <string>

namespace sw {

struct PauliWord {
    BitVec x, z;
    uint8_t phase = 0; // exponent of i, mod 4

    PauliWord() = default;
    explicit PauliWord(size_t n) : x(n), z(n) {}

    size_t n() const { return x.n; }

    static PauliWord identity(size_t n) { return PauliWord(n); }
    static PauliWord single(size_t n, size_t q, char p) {
        PauliWord w(n);
        switch (p) {
            case 'X': w.x.set(q, true); break;
            case 'Z': w.z.set(q, true); break;
            case 'Y': w.x.set(q, true); w.z.set(q, true); w.phase = 1; break;
            default: assert(!"bad pauli letter");
        }
        return w;
    }
    // two-qubit P (x) P check operator, sign +1
    static PauliWord pair(size_t n, size_t q1, size_t q2, char p) {
        PauliWord w = single(n, q1, p);
        PauliWord w2 = single(n, q2, p);
        w.x.xor_with(w2.x);
        w.z.xor_with(w2.z);
        w.phase = uint8_t((w.phase + w2.phase) & 3);
        return w;
    }

    bool is_identity() const { return !x.any() && !z.any() && phase == 0; }
    bool same_f2(const PauliWord& o) const { return x == o.x && z == o.z; }

    bool is_hermitian() const {
        return ((phase ^ bv_and(x, z).popcount()) & 1) == 0;
    }
    // +1 or -1 for a Hermitian word
    int sign() const {
        unsigned k = (phase + 4u * x.n - (bv_and(x, z).popcount() & 3)) & 3;
        assert((k & 1) == 0);
        return k == 0 ? +1 : -1;
    }
    // same support, phase normalized so sign() == +1
    PauliWord normalized() const {
        PauliWord w = *this;
        w.phase = uint8_t(bv_and(x, z).popcount() & 3);
        return w;
    }

    // [x | z] as a single row of length 2n
    BitVec symplectic_row() const {
        BitVec v(2 * x.n);
        size_t half = x.w.size();
        for (size_t k = 0; k < half; ++k) v.w[k] = x.w[k];
        // z block starts at bit x.n; shift when n is not word-aligned
        for (size_t i = 0; i < z.n; ++i)
            if (z.get(i)) v.set(x.n + i, true);
        return v;
    }

    std::string str() const; // e.g. "-X.ZY" (dot = identity)
};

PauliWord pauli_mul(const PauliWord& a, const PauliWord& b);
bool commutes(const PauliWord& a, const PauliWord& b);
// PauliWord from letters, optional leading sign: "+XZ.Y", "-ZZ"
PauliWord pauli_from_str(const std::string& s);

} // namespace sw
