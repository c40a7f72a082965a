#include "sw/f2.hpp"

namespace sw {

size_t f2_rank(F2Matrix m) {
    size_t r = 0;
    for (size_t c = 0; c < m.cols && r < m.rows; ++c) {
        size_t p = r;
        while (p < m.rows && !m.row[p].get(c)) ++p;
        if (p == m.rows) continue;
        std::swap(m.row[r], m.row[p]);
        for (size_t i = 0; i < m.rows; ++i)
            if (i != r && m.row[i].get(c)) m.row[i].xor_with(m.row[r]);
        ++r;
    }
    return r;
}

std::vector<BitVec> f2_span_intersection(const std::vector<BitVec>& a,
                                         const std::vector<BitVec>& b) {
    if (a.empty() || b.empty()) return {};
    size_t w = a[0].n;
    // Zassenhaus: reduce rows [v|v] (from a) and [v|0] (from b); reduced rows
    // with zero left half carry an intersection basis in the right half
    std::vector<BitVec> rows;
    auto widen = [&](const BitVec& v, bool duplicate) {
        BitVec r(2 * w);
        for (size_t i = 0; i < w; ++i)
            if (v.get(i)) {
                r.set(i, true);
                if (duplicate) r.set(w + i, true);
            }
        return r;
    };
    for (const BitVec& v : a) rows.push_back(widen(v, true));
    for (const BitVec& v : b) rows.push_back(widen(v, false));
    size_t rank = 0;
    for (size_t c = 0; c < 2 * w && rank < rows.size(); ++c) {
        size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != rank && rows[i].get(c)) rows[i].xor_with(rows[rank]);
        ++rank;
    }
    std::vector<BitVec> out;
    for (const BitVec& r : rows) {
        bool left = false;
        for (size_t i = 0; i < w && !left; ++i) left = r.get(i);
        if (left) continue;
        BitVec v(w);
        for (size_t i = 0; i < w; ++i)
            if (r.get(w + i)) v.set(i, true);
        if (v.any()) out.push_back(std::move(v));
    }
    return out;
}

std::vector<BitVec> f2_nullspace(const F2Matrix& m) {
    // eliminate on a copy, remembering pivot columns
    F2Matrix a = m;
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < a.cols && r < a.rows; ++c) {
        size_t p = r;
        while (p < a.rows && !a.row[p].get(c)) ++p;
        if (p == a.rows) continue;
        std::swap(a.row[r], a.row[p]);
        for (size_t i = 0; i < a.rows; ++i)
            if (i != r && a.row[i].get(c)) a.row[i].xor_with(a.row[r]);
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(a.cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<BitVec> basis;
    for (size_t c = 0; c < a.cols; ++c) {
        if (is_pivot[c]) continue;
        BitVec v(a.cols);
        v.set(c, true);
        for (size_t i = 0; i < pivot_col.size(); ++i)
            if (a.row[i].get(c)) v.set(pivot_col[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVec> f2_solve(const F2Matrix& m, const BitVec& rhs) {
    // eliminate [m | rhs]
    F2Matrix a = m;
    BitVec b = rhs;
    std::vector<size_t> pivot_col;
    std::vector<size_t> pivot_row;
    size_t r = 0;
    for (size_t c = 0; c < a.cols && r < a.rows; ++c) {
        size_t p = r;
        while (p < a.rows && !a.row[p].get(c)) ++p;
        if (p == a.rows) continue;
        std::swap(a.row[r], a.row[p]);
        bool br = b.get(r), bp = b.get(p);
        b.set(r, bp); b.set(p, br);
        for (size_t i = 0; i < a.rows; ++i)
            if (i != r && a.row[i].get(c)) {
                a.row[i].xor_with(a.row[r]);
                b.set(i, b.get(i) ^ b.get(r));
            }
        pivot_col.push_back(c);
        ++r;
    }
    for (size_t i = r; i < a.rows; ++i)
        if (b.get(i)) return std::nullopt;
    BitVec x(a.cols);
    for (size_t i = 0; i < pivot_col.size(); ++i)
        if (b.get(i)) x.set(pivot_col[i], true);
    return x;
}

std::pair<BitVec, BitVec> F2Span::reduce(const BitVec& v) const {
    BitVec rem = v;
    BitVec cmb(inserted);
    for (size_t i = 0; i < basis.size(); ++i) {
        if (rem.get(pivot[i])) {
            rem.xor_with(basis[i]);
            if (combo[i].n > cmb.n) { BitVec c2(combo[i].n); for (size_t k = 0; k < cmb.w.size(); ++k) c2.w[k] = cmb.w[k]; cmb = std::move(c2); }
            for (size_t k = 0; k < combo[i].w.size(); ++k) cmb.w[k] ^= combo[i].w[k];
        }
    }
    return {std::move(rem), std::move(cmb)};
}

bool F2Span::insert(const BitVec& v) {
    auto [rem, cmb] = reduce(v);
    size_t idx = inserted++;
    if (!rem.any()) return false;
    if (cmb.n < inserted) { BitVec c2(inserted); for (size_t k = 0; k < cmb.w.size(); ++k) c2.w[k] = cmb.w[k]; cmb = std::move(c2); }
    cmb.set(idx, true);
    size_t pv = rem.lowest();
    // back-substitute so the basis stays fully reduced (no row holds another's pivot)
    for (size_t i = 0; i < basis.size(); ++i) {
        if (basis[i].get(pv)) {
            basis[i].xor_with(rem);
            if (combo[i].n < cmb.n) { BitVec c2(cmb.n); for (size_t k = 0; k < combo[i].w.size(); ++k) c2.w[k] = combo[i].w[k]; combo[i] = std::move(c2); }
            for (size_t k = 0; k < cmb.w.size(); ++k) combo[i].w[k] ^= cmb.w[k];
        }
    }
    size_t pos = 0;
    while (pos < basis.size() && pivot[pos] < pv) ++pos;
    basis.insert(basis.begin() + pos, std::move(rem));
    combo.insert(combo.begin() + pos, std::move(cmb));
    pivot.insert(pivot.begin() + pos, pv);
    return true;
}

} // namespace sw
