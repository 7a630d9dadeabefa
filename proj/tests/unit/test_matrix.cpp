#include <doctest.h>

#include <stdexcept>
#include <string>

#include "forbcfg/matrix.hpp"
#include "test_util.hpp"

using namespace forbcfg;
using testutil::Rng;

TEST_CASE("canonical column order") {
    RMatrix a = RMatrix::from_rows(2, {{1, 0}, {0, 1}});
    CHECK(a.column(0) == Column{0, 1});
    CHECK(a.column(1) == Column{1, 0});
    CHECK(canonicalize(a) == a);  // idempotent
}

TEST_CASE("shuffled column orders canonicalize identically") {
    Rng rng(7);
    for (int it = 0; it < 200; ++it) {
        RMatrix a = testutil::random_matrix(rng, 4, 5, 3);
        std::vector<Column> cols = a.columns();
        for (std::size_t i = cols.size(); i > 1; --i)
            std::swap(cols[i - 1], cols[rng.below(i)]);
        RMatrix b(a.rows(), a.alphabet(), std::move(cols));
        CHECK(a == b);
    }
}

TEST_CASE("simplicity") {
    CHECK(is_simple(make_I(2)));
    CHECK_FALSE(is_simple(make_const(2, 2, 0)));
    CHECK(is_simple(make_K(3)));
}

TEST_CASE("support and multiplicity") {
    CHECK(support(make_const(2, 3, 0)) == make_const(2, 1, 0));
    RMatrix f = make_K(2);
    CHECK(support(f) == f);
    CHECK(support(support(f)) == support(f));
    CHECK(support(make_block_side(1, 2, 3)) == make_row01());

    CHECK(max_multiplicity(make_const(2, 3, 0)) == 3);
    CHECK(max_multiplicity(make_K(2)) == 1);
    std::vector<Column> twice;
    for (std::size_t j = 0; j < make_K(2).cols(); ++j) {
        twice.push_back(make_K(2).column(j));
        twice.push_back(make_K(2).column(j));
    }
    CHECK(max_multiplicity(RMatrix(2, 2, twice)) == 2);
}

TEST_CASE("relabel substitutes symbols") {
    RMatrix t2 = make_T(2);
    CHECK(relabel(t2, 0, 1, 2) == t2);
    CHECK(relabel(make_const(2, 1, 0), 1, 2, 3) ==
          RMatrix::from_rows(3, {{1}, {1}}));
    CHECK(relabel(make_I(2), 2, 0, 3) == RMatrix::from_rows(3, {{0, 2}, {2, 0}}));
    CHECK_THROWS(relabel(t2, 1, 1, 3));
    CHECK_THROWS(relabel(t2, 0, 3, 3));
}

TEST_CASE("direct product") {
    CHECK(direct_product(make_row01(), make_row01()) == make_K(2));
    RMatrix a = make_T(2);
    CHECK(direct_product(a, empty_unit(2)) == a);
    CHECK(direct_product(empty_unit(2), a) == a);
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        RMatrix x = testutil::random_matrix(rng, 3, 3, 2);
        RMatrix y = testutil::random_matrix(rng, 3, 3, 2);
        RMatrix p = direct_product(x, y);
        CHECK(p.cols() == x.cols() * y.cols());
        CHECK(p.rows() == x.rows() + y.rows());
        if (is_simple(x) && is_simple(y)) CHECK(is_simple(p));
    }
    CHECK_THROWS(direct_product(make_K(2), relabel(make_K(2), 0, 2, 3)));
}

TEST_CASE("containment oracle examples") {
    CHECK(contains_config(make_row01(), make_I(2)));
    CHECK_FALSE(contains_config(make_K(2), make_I(3)));
    CHECK(testutil::naive_contains(make_K(2), make_I(3)) == false);
    CHECK(contains_config(make_F_abcd(1, 1, 1, 1), make_K(4)));
    // row count mismatch is an answer, not an error
    CHECK_FALSE(contains_config(make_K(3), make_K(2)));
    // the column-less matrix lives in everything
    CHECK(contains_config(RMatrix(1, 2, {}), make_I(2)));
}

TEST_CASE("oracle agrees with the fully naive oracle") {
    Rng rng(23);
    for (int it = 0; it < 600; ++it) {
        RMatrix f = testutil::random_matrix(rng, 3, 4, 3);
        RMatrix a = testutil::random_matrix(rng, 3, 4, 3);
        if (f.alphabet() > a.alphabet()) continue;
        CHECK(contains_config(f, a) == testutil::naive_contains(f, a));
    }
}

TEST_CASE("oracle is invariant under row and column permutations") {
    Rng rng(37);
    for (int it = 0; it < 300; ++it) {
        RMatrix f = testutil::random_matrix(rng, 4, 5, 3);
        RMatrix a = testutil::random_matrix(rng, 4, 5, 3);
        if (f.alphabet() > a.alphabet()) continue;
        const bool base = contains_config(f, a);
        CHECK(contains_config(testutil::shuffled(rng, f), testutil::shuffled(rng, a)) == base);
    }
}

TEST_CASE("containment is transitive") {
    Rng rng(51);
    int hits = 0;
    for (int it = 0; it < 4000 && hits < 40; ++it) {
        RMatrix f = testutil::random_matrix(rng, 2, 2, 2);
        RMatrix g = testutil::random_matrix(rng, 3, 3, 2);
        RMatrix a = testutil::random_matrix(rng, 4, 5, 2);
        if (contains_config(f, g) && contains_config(g, a)) {
            ++hits;
            CHECK(contains_config(f, a));
        }
    }
    CHECK(hits > 0);
}

TEST_CASE("configuration equality") {
    RMatrix p = RMatrix::from_rows(2, {{1, 1}, {1, 1}, {0, 1}});
    RMatrix q = RMatrix::from_rows(2, {{0, 1}, {1, 1}, {1, 1}});
    CHECK(config_equal(p, q));
    CHECK(config_key(p) == config_key(q));
    CHECK_FALSE(config_equal(p, make_T(3)));
}

TEST_CASE("standard family constructors") {
    CHECK(make_K(2).cols() == 4);
    CHECK(make_K(2).rows() == 2);
    CHECK(make_T(2) == RMatrix::from_rows(2, {{1, 1}, {0, 1}}));
    CHECK(make_F_abcd(1, 1, 1, 1) ==
          RMatrix::from_rows(2, {{1, 1}, {1, 0}, {0, 1}, {0, 0}}));
    CHECK(make_Ks(4, 1) == make_I(4));
    CHECK(make_Ks(3, 2).cols() == 3);
    CHECK(make_block_side(2, 1, 1) == RMatrix::from_rows(2, {{0, 1}, {0, 1}}));
    CHECK(make_block_stack(1, 1, 2) == RMatrix::from_rows(2, {{1, 1}, {0, 0}}));
    CHECK(is_simple(make_I(4)));
}

TEST_CASE("column profile") {
    RMatrix f = RMatrix::from_rows(3, {{0, 1}, {2, 1}, {0, 2}});
    ColumnProfile p = column_profile(f, 0);
    CHECK(p.counts == std::vector<std::size_t>{2, 0, 1});
    CHECK(max_symbol_count_per_column(f, 1) == 2);
    CHECK(max_symbol_count_per_column(f, 0) == 2);
}

TEST_CASE("text round trip and parse errors") {
    RMatrix t2 = RMatrix::parse("2 2\n1 1\n0 1\n");
    CHECK(t2 == make_T(2));
    CHECK(RMatrix::parse(t2.to_text()) == t2);
    Rng rng(91);
    for (int it = 0; it < 100; ++it) {
        RMatrix a = testutil::random_matrix(rng, 5, 6, 4);
        CHECK(RMatrix::parse(a.to_text()) == a);
    }
    try {
        RMatrix::parse("2 2\n1 1\n0 7\n");
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK_THROWS(RMatrix::parse("not a matrix"));
    CHECK_THROWS(RMatrix::parse("2 2\n1 1\n"));
}
