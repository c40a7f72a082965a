#pragma once
// Laurent polynomials over F2 in several variables, matrices of them, exact
// determinants via fraction-free elimination, and instantiation of
// translation-invariant stabilizer generators on finite tori.
#include "sw/pauli.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace sw {

struct LaurentPoly {
    int nv = 0;
    std::set<std::vector<int>> terms; // exponent vectors with coefficient 1

    LaurentPoly() = default;
    explicit LaurentPoly(int nv_) : nv(nv_) {}

    static LaurentPoly zero(int nv) { return LaurentPoly(nv); }
    static LaurentPoly one(int nv);
    static LaurentPoly monomial(std::vector<int> e);
    static LaurentPoly variable(int nv, int i, int power = 1);

    bool is_zero() const { return terms.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms.size() == 1; }

    LaurentPoly inverted() const;          // x_i -> x_i^{-1}
    LaurentPoly reduced_mod(int L) const;  // fold exponents into [0, L)
    std::string str(const std::vector<std::string>& vars = {}) const;

    bool operator==(const LaurentPoly& o) const {
        return nv == o.nv && terms == o.terms;
    }
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);
// exact quotient a / b in the polynomial ring (lex leading-term division);
// throws std::domain_error when the division is not exact
LaurentPoly poly_div_exact(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return poly_add(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return poly_mul(a, b); }

struct LaurentMatrix {
    size_t rows = 0, cols = 0;
    int nv = 0;
    std::vector<LaurentPoly> e;

    LaurentMatrix() = default;
    LaurentMatrix(size_t r, size_t c, int nv_)
        : rows(r), cols(c), nv(nv_), e(r * c, LaurentPoly(nv_)) {}

    LaurentPoly& at(size_t r, size_t c) { return e[r * cols + c]; }
    const LaurentPoly& at(size_t r, size_t c) const { return e[r * cols + c]; }

    // entrywise transpose; optionally also invert every variable (antipode)
    LaurentMatrix transposed(bool invert_vars) const;
    bool operator==(const LaurentMatrix& o) const {
        return rows == o.rows && cols == o.cols && e == o.e;
    }
};

LaurentMatrix matrix_add(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix matrix_mul(const LaurentMatrix& a, const LaurentMatrix& b);
LaurentMatrix matrix_reduced_mod(const LaurentMatrix& m, int L);
// determinant over the Laurent ring (square matrices); exact, fraction-free
LaurentPoly laurent_det(const LaurentMatrix& m);

// ---- matrix data files ----
// {"vars": [...], "rows": R, "cols": C,
//  "entries": [ row ][ col ] = list of exponent vectors }
LaurentMatrix matrix_from_json(const std::string& text);
std::string matrix_to_json(const LaurentMatrix& m, const std::vector<std::string>& vars);
LaurentMatrix matrix_from_file(const std::string& path);
uint64_t fnv1a64(const std::string& data);

struct MatrixIdentityReport {
    bool identity_plain = false;     // r * H^T * l == target, plain transpose
    bool identity_inverting = false; // same with variable-inverting transpose
    bool det_r_unit = false;         // det(r) is a nonzero monomial
    bool det_l_unit = false;
    bool ok() const { return (identity_plain || identity_inverting) && det_r_unit && det_l_unit; }
};

MatrixIdentityReport verify_matrix_identity(const LaurentMatrix& H,
                                            const LaurentMatrix& r,
                                            const LaurentMatrix& l,
                                            const LaurentMatrix& target);

// ---- translation-invariant generators on finite tori ----
// Symbolic X-cube generators as 1 x 2n rows over n variables: the vertex rows
// A^{1,i} (i = 2..n) carry 1 + x1^-1 and 1 + xi^-1 in the first block, the
// cell row B carries prod_{j != i}(1 + x_j) in slot i of the second block.
std::vector<LaurentMatrix> xcube_poly_generators(int n);
// the vertex row for an arbitrary axis pair (used for product relations)
LaurentMatrix xcube_vertex_row(int n, int i, int j);

// Expand k x 2q generator rows under x_i^L = 1 into k * L^n Pauli words on
// q * L^n qubits (qubit id = vertex * q + slot). first_block_x selects whether
// the first q columns become the X part (else the Z part).
std::vector<PauliWord> instantiate_on_torus(const LaurentMatrix& gens, int L,
                                            bool first_block_x);

} // namespace sw
