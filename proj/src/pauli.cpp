#include "sw/pauli.hpp"

#include <stdexcept>

namespace sw {

PauliWord pauli_mul(const PauliWord& a, const PauliWord& b) {
    if (a.n() != b.n()) throw std::invalid_argument("pauli_mul: length mismatch");
    PauliWord r(a.n());
    // X^a Z^b * X^c Z^d = (-1)^(b.c) X^(a+c) Z^(b+d)
    r.phase = uint8_t((a.phase + b.phase + 2 * (a.z.dot(b.x) ? 1 : 0)) & 3);
    r.x = bv_xor(a.x, b.x);
    r.z = bv_xor(a.z, b.z);
    return r;
}

bool commutes(const PauliWord& a, const PauliWord& b) {
    if (a.n() != b.n()) throw std::invalid_argument("commutes: length mismatch");
    return a.x.dot(b.z) == a.z.dot(b.x);
}

std::string PauliWord::str() const {
    PauliWord nm = normalized();
    std::string s = (sign() < 0) ? "-" : "+";
    for (size_t i = 0; i < n(); ++i) {
        bool xi = x.get(i), zi = z.get(i);
        s += xi ? (zi ? 'Y' : 'X') : (zi ? 'Z' : '.');
    }
    (void)nm;
    return s;
}

PauliWord pauli_from_str(const std::string& s) {
    size_t start = 0;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        start = 1;
    }
    size_t n = s.size() - start;
    PauliWord w(n);
    size_t ny = 0;
    for (size_t i = 0; i < n; ++i) {
        switch (s[start + i]) {
            case '.': case 'I': break;
            case 'X': w.x.set(i, true); break;
            case 'Z': w.z.set(i, true); break;
            case 'Y': w.x.set(i, true); w.z.set(i, true); ++ny; break;
            default: throw std::invalid_argument("pauli_from_str: bad letter");
        }
    }
    w.phase = uint8_t((ny + (neg ? 2 : 0)) & 3);
    return w;
}

} // namespace sw
