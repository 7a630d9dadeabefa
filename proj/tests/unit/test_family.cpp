#include <doctest.h>

#include "forbcfg/family.hpp"
#include "test_util.hpp"

using namespace forbcfg;

TEST_CASE("sym family expansion") {
    ConfigFamily f = sym_family(make_row01(), 3);
    CHECK(f.size() == 3);  // [0 1], [0 2], [1 2]
    CHECK(f.alphabet() == 3);

    // all-zero block relabels collapse to the all-0 and all-1 blocks
    ConfigFamily z = sym_family(make_const(2, 2, 0), 3);
    CHECK(z.size() == 2);

    ConfigFamily k = sym_family(make_K(2), 2);
    CHECK(k.size() == 1);
}

TEST_CASE("s family and its closure identity") {
    ConfigFamily s = s_family(make_const(2, 1, 0), 3);
    CHECK(s.size() == 3);  // all three constant columns

    // configuration-equivalent pair collapses
    ConfigFamily row = s_family(make_row01(), 2);
    CHECK(row.size() == 1);

    // S(F) = Sym(F) union Sym(complement F) on a corpus of small matrices
    testutil::Rng rng(3);
    for (int it = 0; it < 60; ++it) {
        RMatrix f = testutil::random_matrix(rng, 3, 3, 2);
        for (int r = 2; r <= 4; ++r) {
            ConfigFamily lhs = s_family(f, r);
            ConfigFamily rhs = family_union(sym_family(f, r), sym_family(complement(f), r));
            CHECK(lhs.members() == rhs.members());
        }
    }
}

TEST_CASE("family avoidance") {
    // identity matrices dodge one-row mixed blocks
    for (std::size_t m = 3; m <= 6; ++m) {
        CHECK(family_avoided(make_I(m), sym_family(make_block_side(1, 1, 2), 3)));
        CHECK(family_avoided(make_I(m), sym_family(make_block_side(1, 2, 2), 3)));
    }
    CHECK_FALSE(family_avoided(make_K(2), single(make_K(2))));
    // a matrix on one symbol pair avoids families that never use that pair
    RMatrix km01_r3 = relabel(make_K(3), 0, 1, 3);
    CHECK(family_avoided(km01_r3, ConfigFamily(3, {relabel(make_T(2), 1, 2, 3)})));
}

TEST_CASE("normalization removes implied members") {
    ConfigFamily fam(2, {make_row01(), make_K(2)});
    ConfigFamily norm = fam.normalize();
    CHECK(norm.size() == 1);
    CHECK(norm.members()[0] == make_row01());
    CHECK(norm.normalized());
}

TEST_CASE("digest is stable across member order and shuffles") {
    testutil::Rng rng(17);
    RMatrix a = testutil::random_matrix(rng, 3, 4, 3);
    RMatrix b = testutil::random_matrix(rng, 3, 4, 3);
    ConfigFamily f1(3, {a, b});
    ConfigFamily f2(3, {testutil::shuffled(rng, b), testutil::shuffled(rng, a)});
    CHECK(f1.digest() == f2.digest());
    CHECK(f1.digest().size() == 16);
}

TEST_CASE("family text round trip") {
    ConfigFamily fam = sym_family(make_T(2), 3);
    ConfigFamily back = ConfigFamily::parse(fam.to_text());
    CHECK(back.members() == fam.members());
    CHECK(back.alphabet() == fam.alphabet());
}
