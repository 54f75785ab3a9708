#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bsym/bweight.hpp"
#include "bsym/families.hpp"
#include "bsym/towers.hpp"
#include "helpers.hpp"

using namespace bsym;

namespace {
const Field& F2 = Field::get(2, 1);
const Field& F4 = Field::get(2, 2);

LinearCode lift_binary(const LinearCode& c) { return extend_code(c, 2); }  // GF(2) -> GF(4)
}  // namespace

TEST_CASE("subfield subcode of a binary-entried GF(4) code keeps full dimension") {
    LinearCode s23 = simplex_code(F2, 3);
    LinearCode lifted = lift_binary(s23);
    CHECK(lifted.field().q() == 4);
    CHECK(subfield_subcode_dim(lifted, 1) == 3);
    LinearCode sub = subfield_subcode(lifted, 1);
    CHECK(sub == s23);
    CHECK(subfield_subcode(lifted, 2) == lifted);  // m = e
    CHECK_THROWS_WITH_AS(subfield_subcode_dim(lifted, 3), "not a subfield", DomainError);
}

TEST_CASE("a line through (w, 1) has trivial binary subcode") {
    LinearCode c = LinearCode::from_generator(FqMatrix(F4, 1, 2, {2, 1}));
    CHECK(subfield_subcode_dim(c, 1) == 0);
    CHECK_THROWS_WITH_AS(subfield_subcode(c, 1), "zero code", DomainError);
    CHECK(essential_number(c) == 2);
}

TEST_CASE("essential numbers") {
    std::mt19937 rng(101);
    for (int iter = 0; iter < 20; ++iter) {
        LinearCode c = testing::random_code(rng, F2, 2 + (int)(rng() % 5), 1 + (int)(rng() % 3));
        CHECK(essential_number(c) == 1);  // prime field: only divisor
        CHECK(essential_number(lift_binary(c)) == 1);  // binary entries
    }
}

TEST_CASE("extension keeps the dimension and the minimal weights") {
    std::mt19937 rng(103);
    CHECK(extend_code(simplex_code(F2, 2), 1) == simplex_code(F2, 2));
    for (int iter = 0; iter < 25; ++iter) {
        int n = 2 + (int)(rng() % 5);
        LinearCode c = testing::random_code(rng, F2, n, 1 + (int)(rng() % std::min(n, 3)));
        LinearCode ext = extend_code(c, 2);
        CHECK(ext.k() == c.k());
        for (int b = 1; b <= n; ++b) CHECK(d_b_code(c, b) == d_b_code(ext, b));
    }
}

TEST_CASE("independence is preserved by extension, exhaustively at small size") {
    for (int n = 1; n <= 4; ++n) {
        long long total = 1;
        for (int i = 0; i < n; ++i) total *= 2;
        for (int s = 1; s <= 3; ++s) {
            std::vector<int> pick(s, 0);
            for (;;) {
                FqMatrix m2(F2, s, n);
                FqMatrix m4(F4, s, n);
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < n; ++j) {
                        int bit = (pick[i] >> j) & 1;
                        m2.set(i, j, bit);
                        m4.set(i, j, embed(F2, F4, bit));
                    }
                CHECK((rank_of(m2) == s) == (rank_of(m4) == s));
                int t = s - 1;
                while (t >= 0 && pick[t] == total - 1) pick[t--] = 0;
                if (t < 0) break;
                ++pick[t];
            }
        }
    }
}

TEST_CASE("trace code of a lifted binary code is the binary code") {
    LinearCode s23 = simplex_code(F2, 3);
    LinearCode lifted = lift_binary(s23);
    LinearCode tr = trace_code(lifted, F2);
    CHECK(tr == s23);

    // the trace code of an extension contains the base code in general
    std::mt19937 rng(107);
    for (int iter = 0; iter < 15; ++iter) {
        int n = 2 + (int)(rng() % 4);
        LinearCode c = testing::random_code(rng, F2, n, 1 + (int)(rng() % 2));
        LinearCode tc = trace_code(lift_binary(c), F2);
        for (int i = 0; i < c.k(); ++i) {
            std::vector<int> syn = vec_mat(c.generator().row(i), tc.check().transpose());
            for (int v : syn) CHECK(v == 0);
        }
    }
}

TEST_CASE("trace code of a genuinely quaternary code is nonzero") {
    LinearCode c = LinearCode::from_generator(FqMatrix(F4, 1, 2, {2, 1}));
    LinearCode tr = trace_code(c, F2);
    CHECK(tr.k() >= 1);
    CHECK(tr.field().q() == 2);
}

TEST_CASE("reduction report") {
    LinearCode s22 = simplex_code(F2, 2);
    LinearCode lifted = lift_binary(s22);
    for (int b = 1; b <= lifted.n(); ++b) {
        ReductionReport rep = check_reduction(lifted, 1, b);
        CHECK(rep.applicable);
        CHECK(rep.equal);
        CHECK(rep.d_b_outer == rep.d_b_subcode);
    }
    LinearCode line = LinearCode::from_generator(FqMatrix(F4, 1, 2, {2, 1}));
    ReductionReport rep = check_reduction(line, 1, 1);
    CHECK_FALSE(rep.applicable);
    CHECK(rep.subcode_dim == 0);
}

TEST_CASE("reduction at b = 1 matches the classical subfield-subcode distance fact") {
    std::mt19937 rng(109);
    for (int iter = 0; iter < 15; ++iter) {
        int n = 2 + (int)(rng() % 4);
        LinearCode c = testing::random_code(rng, F2, n, 1 + (int)(rng() % 2));
        ReductionReport rep = check_reduction(lift_binary(c), 1, 1);
        REQUIRE(rep.applicable);
        CHECK(rep.equal);
    }
}
