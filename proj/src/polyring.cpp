#include "sw/polyring.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace sw {

using nlohmann::json;

static void check_vars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nv != b.nv) throw std::invalid_argument("variable-count mismatch");
}

LaurentPoly LaurentPoly::one(int nv) {
    LaurentPoly p(nv);
    p.terms.insert(std::vector<int>(nv, 0));
    return p;
}

LaurentPoly LaurentPoly::monomial(std::vector<int> e) {
    LaurentPoly p(int(e.size()));
    p.terms.insert(std::move(e));
    return p;
}

LaurentPoly LaurentPoly::variable(int nv, int i, int power) {
    std::vector<int> e(nv, 0);
    e[i] = power;
    return monomial(std::move(e));
}

bool LaurentPoly::is_one() const {
    return terms.size() == 1 && *terms.begin() == std::vector<int>(nv, 0);
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly p(nv);
    for (std::vector<int> e : terms) {
        for (int& x : e) x = -x;
        p.terms.insert(std::move(e));
    }
    return p;
}

LaurentPoly LaurentPoly::reduced_mod(int L) const {
    LaurentPoly p(nv);
    for (std::vector<int> e : terms) {
        for (int& x : e) x = ((x % L) + L) % L;
        auto it = p.terms.find(e);
        if (it != p.terms.end()) p.terms.erase(it); // coefficients fold mod 2
        else p.terms.insert(std::move(e));
    }
    return p;
}

std::string LaurentPoly::str(const std::vector<std::string>& vars) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& e : terms) {
        if (!first_term) os << " + ";
        first_term = false;
        bool printed = false;
        for (int i = 0; i < nv; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            if (int(vars.size()) > i) os << vars[i];
            else os << "x" << i;
            if (e[i] != 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a, b);
    LaurentPoly r = a;
    for (const auto& e : b.terms) {
        auto it = r.terms.find(e);
        if (it != r.terms.end()) r.terms.erase(it);
        else r.terms.insert(e);
    }
    return r;
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a, b);
    LaurentPoly r(a.nv);
    for (const auto& ea : a.terms)
        for (const auto& eb : b.terms) {
            std::vector<int> e(a.nv);
            for (int i = 0; i < a.nv; ++i) e[i] = ea[i] + eb[i];
            auto it = r.terms.find(e);
            if (it != r.terms.end()) r.terms.erase(it);
            else r.terms.insert(std::move(e));
        }
    return r;
}

// lex-greatest exponent vector
static const std::vector<int>& lex_lead(const LaurentPoly& p) { return *p.terms.rbegin(); }

LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    check_vars(a, b);
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    LaurentPoly rem = a, q(a.nv);
    const std::vector<int>& lb = lex_lead(b);
    while (!rem.is_zero()) {
        std::vector<int> d = lex_lead(rem);
        for (int i = 0; i < a.nv; ++i) {
            d[i] -= lb[i];
            // callers divide polynomials with nonnegative exponents; a negative
            // quotient exponent means the division is not exact
            if (d[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        LaurentPoly m = LaurentPoly::monomial(d);
        q = poly_add(q, m);
        rem = poly_add(rem, poly_mul(m, b)); // cancels the lex-leading term
    }
    return q;
}

LaurentMatrix LaurentMatrix::transposed(bool invert_vars) const {
    LaurentMatrix t(cols, rows, nv);
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            t.at(c, r) = invert_vars ? at(r, c).inverted() : at(r, c);
    return t;
}

LaurentMatrix matrix_add(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols || a.nv != b.nv)
        throw std::invalid_argument("matrix shape mismatch");
    LaurentMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = poly_add(r.e[i], b.e[i]);
    return r;
}

LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.cols != b.rows || a.nv != b.nv)
        throw std::invalid_argument("matrix shape mismatch");
    LaurentMatrix r(a.rows, b.cols, a.nv);
    for (size_t i = 0; i < a.rows; ++i)
        for (size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (size_t j = 0; j < b.cols; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) = poly_add(r.at(i, j), poly_mul(a.at(i, k), b.at(k, j)));
            }
        }
    return r;
}

LaurentMatrix matrix_reduced_mod(const LaurentMatrix& m, int L) {
    LaurentMatrix r = m;
    for (auto& p : r.e) p = p.reduced_mod(L);
    return r;
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    size_t n = m.rows;
    if (n == 0) return LaurentPoly::one(m.nv);
    // clear denominators row by row with monomials; remember the total shift
    LaurentMatrix a = m;
    std::vector<int> shift(m.nv, 0);
    for (size_t r = 0; r < n; ++r) {
        std::vector<int> mn(m.nv, 0);
        for (size_t c = 0; c < n; ++c)
            for (const auto& e : a.at(r, c).terms)
                for (int i = 0; i < m.nv; ++i) mn[i] = std::min(mn[i], e[i]);
        for (int i = 0; i < m.nv; ++i) {
            mn[i] = -mn[i];
            shift[i] += mn[i];
        }
        LaurentPoly mono = LaurentPoly::monomial(mn);
        for (size_t c = 0; c < n; ++c) a.at(r, c) = poly_mul(a.at(r, c), mono);
    }
    // fraction-free elimination (char 2: addition is subtraction, swaps free)
    LaurentPoly prev = LaurentPoly::one(m.nv);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k).is_zero()) {
            size_t sw = k + 1;
            while (sw < n && a.at(sw, k).is_zero()) ++sw;
            if (sw == n) return LaurentPoly::zero(m.nv);
            for (size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(sw, c));
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = poly_add(poly_mul(a.at(i, j), a.at(k, k)),
                                           poly_mul(a.at(i, k), a.at(k, j)));
                a.at(i, j) = poly_div_exact(num, prev);
            }
            a.at(i, k) = LaurentPoly::zero(m.nv);
        }
        prev = a.at(k, k);
    }
    LaurentPoly det = a.at(n - 1, n - 1);
    // undo the row multipliers
    for (int& s : shift) s = -s;
    return poly_mul(det, LaurentPoly::monomial(shift));
}

// ---- data files ----

LaurentMatrix matrix_from_json(const std::string& text) {
    json j = json::parse(text);
    int nv = int(j.at("vars").size());
    size_t rows = j.at("rows").get<size_t>();
    size_t cols = j.at("cols").get<size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows) throw std::invalid_argument("row count mismatch");
    LaurentMatrix m(rows, cols, nv);
    for (size_t r = 0; r < rows; ++r) {
        if (entries[r].size() != cols) throw std::invalid_argument("column count mismatch");
        for (size_t c = 0; c < cols; ++c) {
            LaurentPoly p(nv);
            for (const json& term : entries[r][c]) {
                std::vector<int> e = term.get<std::vector<int>>();
                if (int(e.size()) != nv) throw std::invalid_argument("bad exponent vector");
                auto it = p.terms.find(e);
                if (it != p.terms.end()) p.terms.erase(it);
                else p.terms.insert(std::move(e));
            }
            m.at(r, c) = p;
        }
    }
    return m;
}

std::string matrix_to_json(const LaurentMatrix& m, const std::vector<std::string>& vars) {
    json j;
    j["vars"] = vars;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    json entries = json::array();
    for (size_t r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.cols; ++c) {
            json terms = json::array();
            for (const auto& e : m.at(r, c).terms) terms.push_back(e);
            row.push_back(terms);
        }
        entries.push_back(row);
    }
    j["entries"] = entries;
    return j.dump(1);
}

LaurentMatrix matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return matrix_from_json(ss.str());
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

MatrixIdentityReport verify_matrix_identity(const LaurentMatrix& H,
                                            const LaurentMatrix& r,
                                            const LaurentMatrix& l,
                                            const LaurentMatrix& target) {
    MatrixIdentityReport rep;
    rep.identity_plain = matrix_mul(matrix_mul(r, H.transposed(false)), l) == target;
    rep.identity_inverting = matrix_mul(matrix_mul(r, H.transposed(true)), l) == target;
    LaurentPoly dr = laurent_det(r), dl = laurent_det(l);
    rep.det_r_unit = dr.is_monomial();
    rep.det_l_unit = dl.is_monomial();
    return rep;
}

// ---- X-cube generators ----

LaurentMatrix xcube_vertex_row(int n, int i, int j) {
    LaurentMatrix row(1, 2 * size_t(n), n);
    LaurentPoly one = LaurentPoly::one(n);
    row.at(0, i) = poly_add(one, LaurentPoly::variable(n, i, -1));
    row.at(0, j) = poly_add(one, LaurentPoly::variable(n, j, -1));
    return row;
}

std::vector<LaurentMatrix> xcube_poly_generators(int n) {
    if (n < 2) throw std::invalid_argument("need n >= 2");
    std::vector<LaurentMatrix> gens;
    for (int i = 1; i < n; ++i) gens.push_back(xcube_vertex_row(n, 0, i));
    LaurentMatrix b(1, 2 * size_t(n), n);
    for (int i = 0; i < n; ++i) {
        LaurentPoly p = LaurentPoly::one(n);
        for (int j = 0; j < n; ++j)
            if (j != i)
                p = poly_mul(p, poly_add(LaurentPoly::one(n), LaurentPoly::variable(n, j)));
        b.at(0, size_t(n) + i) = p;
    }
    gens.push_back(b);
    return gens;
}

std::vector<PauliWord> instantiate_on_torus(const LaurentMatrix& gens, int L,
                                            bool first_block_x) {
    int n = gens.nv;
    if (gens.cols % 2 != 0) throw std::invalid_argument("generator rows must have 2q columns");
    size_t q = gens.cols / 2;
    size_t n_cells = 1;
    for (int i = 0; i < n; ++i) n_cells *= size_t(L);
    size_t nq = q * n_cells;
    auto cell_index = [&](const std::vector<int>& e) {
        size_t v = 0;
        for (int i = n - 1; i >= 0; --i) v = v * size_t(L) + size_t(((e[i] % L) + L) % L);
        return v;
    };
    std::vector<PauliWord> out;
    std::vector<int> t(n, 0);
    for (size_t g = 0; g < gens.rows; ++g) {
        std::fill(t.begin(), t.end(), 0);
        for (size_t cell = 0; cell < n_cells; ++cell) {
            PauliWord w(nq);
            for (size_t c = 0; c < gens.cols; ++c) {
                bool x_part = (c < q) == first_block_x;
                size_t slot = c % q;
                for (std::vector<int> e : gens.at(g, c).terms) {
                    for (int i = 0; i < n; ++i) e[i] += t[i];
                    size_t qubit = cell_index(e) * q + slot;
                    if (x_part) w.x.flip(qubit);
                    else w.z.flip(qubit);
                }
            }
            out.push_back(w.normalized());
            for (int i = 0; i < n; ++i) {
                if (++t[i] < L) break;
                t[i] = 0;
            }
        }
    }
    return out;
}

} // namespace sw
