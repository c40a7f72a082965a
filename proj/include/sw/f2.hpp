#pragma once
// Packed GF(2) vectors and dense GF(2) linear algebra (rank / nullspace / solve).
#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace sw {

struct BitVec {
    size_t n = 0;
    std::vector<uint64_t> w;

    BitVec() = default;
    explicit BitVec(size_t n_) : n(n_), w((n_ + 63) / 64, 0) {}

    bool get(size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t(1) << (i & 63);
        if (v) w[i >> 6] |= m; else w[i >> 6] &= ~m;
    }
    void flip(size_t i) { w[i >> 6] ^= uint64_t(1) << (i & 63); }

    void xor_with(const BitVec& o) {
        for (size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
    // parity of <this, o> over GF(2)
    bool dot(const BitVec& o) const {
        uint64_t acc = 0;
        for (size_t k = 0; k < w.size(); ++k) acc ^= w[k] & o.w[k];
        return __builtin_parityll(acc);
    }
    bool any() const {
        for (uint64_t x : w) if (x) return true;
        return false;
    }
    size_t popcount() const {
        size_t c = 0;
        for (uint64_t x : w) c += __builtin_popcountll(x);
        return c;
    }
    // index of lowest set bit, or n if empty
    size_t lowest() const {
        for (size_t k = 0; k < w.size(); ++k)
            if (w[k]) return k * 64 + __builtin_ctzll(w[k]);
        return n;
    }
    bool operator==(const BitVec& o) const { return n == o.n && w == o.w; }
};

inline BitVec bv_and(const BitVec& a, const BitVec& b) {
    BitVec r(a.n);
    for (size_t k = 0; k < r.w.size(); ++k) r.w[k] = a.w[k] & b.w[k];
    return r;
}
inline BitVec bv_xor(const BitVec& a, const BitVec& b) {
    BitVec r = a;
    r.xor_with(b);
    return r;
}

struct F2Matrix {
    size_t rows = 0, cols = 0;
    std::vector<BitVec> row;

    F2Matrix() = default;
    F2Matrix(size_t r, size_t c) : rows(r), cols(c), row(r, BitVec(c)) {}

    bool get(size_t r, size_t c) const { return row[r].get(c); }
    void set(size_t r, size_t c, bool v) { row[r].set(c, v); }
    void add_row(const BitVec& v) { row.push_back(v); ++rows; }
    F2Matrix transposed() const {
        F2Matrix t(cols, rows);
        for (size_t r = 0; r < rows; ++r)
            for (size_t k = 0; k < row[r].w.size(); ++k) {
                uint64_t x = row[r].w[k];
                while (x) {
                    size_t c = k * 64 + __builtin_ctzll(x);
                    x &= x - 1;
                    t.row[c].set(r, true);
                }
            }
        return t;
    }
};

size_t f2_rank(F2Matrix m);
// basis of rowspace(a) ∩ rowspace(b)
std::vector<BitVec> f2_span_intersection(const std::vector<BitVec>& a,
                                         const std::vector<BitVec>& b);
std::vector<BitVec> f2_nullspace(const F2Matrix& m);
// any particular solution of m * v = rhs, or nullopt when inconsistent
std::optional<BitVec> f2_solve(const F2Matrix& m, const BitVec& rhs);

// Incremental row space with tracked combinations: each basis row remembers
// which inserted vectors it is a sum of. Used for group membership with
// recovery of the generating combination.
struct F2Span {
    size_t width = 0;
    std::vector<BitVec> basis;   // reduced rows
    std::vector<BitVec> combo;   // combo[i] over inserted indices
    std::vector<size_t> pivot;   // pivot column of basis[i]
    size_t inserted = 0;

    explicit F2Span(size_t width_ = 0) : width(width_) {}

    // reduce v against the basis; returns (remainder, combination of inserted rows)
    std::pair<BitVec, BitVec> reduce(const BitVec& v) const;
    // insert v; returns true if it enlarged the span
    bool insert(const BitVec& v);
    bool contains(const BitVec& v) const { return !reduce(v).first.any(); }
    size_t rank() const { return basis.size(); }
};

} // namespace sw
