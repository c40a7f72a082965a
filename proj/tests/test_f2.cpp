#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sw/f2.hpp"

#include <random>

using namespace sw;

static F2Matrix random_matrix(size_t r, size_t c, std::mt19937_64& rng) {
    F2Matrix m(r, c);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < c; ++j) m.set(i, j, rng() & 1);
    return m;
}

TEST_CASE("bitvec basics") {
    BitVec v(130);
    CHECK(!v.any());
    v.set(0, true);
    v.set(129, true);
    CHECK(v.popcount() == 2);
    CHECK(v.lowest() == 0);
    v.flip(0);
    CHECK(v.lowest() == 129);
    BitVec u(130);
    u.set(129, true);
    CHECK(v == u);
    CHECK(v.dot(u));
}

TEST_CASE("rank of identity") {
    F2Matrix m(3, 3);
    for (int i = 0; i < 3; ++i) m.set(i, i, true);
    CHECK(f2_rank(m) == 3);
}

TEST_CASE("nullspace of [1 1]") {
    F2Matrix m(1, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    auto ns = f2_nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(ns[0].get(0));
    CHECK(ns[0].get(1));
}

TEST_CASE("rank equals rank of transpose (random, up to 512x512)") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 6; ++it) {
        size_t r = 1 + rng() % 512, c = 1 + rng() % 512;
        F2Matrix m = random_matrix(r, c, rng);
        CHECK(f2_rank(m) == f2_rank(m.transposed()));
    }
}

TEST_CASE("rank-nullity and nullspace membership") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 10; ++it) {
        size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
        F2Matrix m = random_matrix(r, c, rng);
        auto ns = f2_nullspace(m);
        CHECK(ns.size() == c - f2_rank(m));
        for (const BitVec& v : ns) {
            CHECK(v.any());
            for (size_t i = 0; i < r; ++i) CHECK(!m.row[i].dot(v));
        }
    }
}

TEST_CASE("solve finds solutions and detects inconsistency") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 20; ++it) {
        size_t r = 1 + rng() % 30, c = 1 + rng() % 30;
        F2Matrix m = random_matrix(r, c, rng);
        // consistent system: rhs = m * v
        BitVec v(c);
        for (size_t j = 0; j < c; ++j) v.set(j, rng() & 1);
        BitVec rhs(r);
        for (size_t i = 0; i < r; ++i) rhs.set(i, m.row[i].dot(v));
        auto sol = f2_solve(m, rhs);
        REQUIRE(sol.has_value());
        for (size_t i = 0; i < r; ++i) CHECK(m.row[i].dot(*sol) == rhs.get(i));
    }
    // inconsistent: 0 * v = 1
    F2Matrix z(1, 3);
    BitVec rhs(1);
    rhs.set(0, true);
    CHECK(!f2_solve(z, rhs).has_value());
}

TEST_CASE("span tracks combinations and rejects dependent rows") {
    std::mt19937_64 rng(17);
    F2Span span(24);
    std::vector<BitVec> inserted;
    for (int it = 0; it < 40; ++it) {
        BitVec v(24);
        for (size_t j = 0; j < 24; ++j) v.set(j, rng() & 1);
        bool grew = span.insert(v);
        inserted.push_back(v);
        CHECK(span.contains(v));
        if (!grew) {
            auto [rem, combo] = span.reduce(v);
            CHECK(!rem.any());
            // combination of inserted vectors reproduces v
            BitVec acc(24);
            for (size_t i = 0; i < inserted.size(); ++i)
                if (combo.get(i)) acc.xor_with(inserted[i]);
            CHECK(acc == v);
        }
    }
    CHECK(span.rank() <= 24);
}
