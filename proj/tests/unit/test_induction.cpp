#include <doctest.h>

#include <set>

#include "forbcfg/induction.hpp"
#include "forbcfg/solver.hpp"
#include "test_util.hpp"

using namespace forbcfg;

namespace {

bool same_config_set(const std::vector<RMatrix>& got, const std::vector<RMatrix>& want) {
    if (got.size() != want.size()) return false;
    for (const RMatrix& w : want) {
        bool found = false;
        for (const RMatrix& g : got)
            if (config_equal(g, w)) { found = true; break; }
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("chain operator on the flagship matrices") {
    // the balanced 4x2 matrix has exactly three minimal children
    std::vector<RMatrix> got = ch(make_F_abcd(1, 1, 1, 1));
    std::vector<RMatrix> want = {
        RMatrix::from_rows(2, {{0, 1}, {1, 0}, {0, 0}}),
        RMatrix::from_rows(2, {{1, 1}, {1, 0}, {0, 0}}),
        RMatrix::from_rows(2, {{1, 1}, {1, 0}, {0, 1}}),
    };
    CHECK(same_config_set(got, want));

    CHECK(same_config_set(ch(make_K(2)), {make_row01()}));
    CHECK(same_config_set(ch(make_col01()),
                          {make_const(1, 1, 0), make_const(1, 1, 1)}));
    CHECK(same_config_set(ch(make_T(2)), {make_const(1, 1, 1)}));
}

TEST_CASE("iterated chains") {
    CHECK(same_config_set(ch_n(make_F_abcd(1, 1, 1, 1), 1), ch(make_F_abcd(1, 1, 1, 1))));
    CHECK(same_config_set(ch_n(make_K(3), 2), {make_row01()}));
    // two levels below the ones-over-pair matrix sits the single one
    CHECK(same_config_set(ch_n(ones_over_complete(3), 2), {make_const(1, 1, 1)}));
    // chains die out once the rows are exhausted
    CHECK(ch_n(make_row01(), 2).empty());
}

TEST_CASE("chain members satisfy the defining sandwich") {
    testutil::Rng rng(13);
    const RMatrix row01 = make_row01();
    int checked = 0;
    for (int it = 0; it < 40; ++it) {
        RMatrix f = testutil::random_matrix(rng, 3, 3, 2);
        if (f.cols() == 0) continue;
        for (const RMatrix& g : ch(f)) {
            ++checked;
            CHECK(contains_config(g, f));                          // G inside F
            CHECK(contains_config(f, direct_product(g, row01)));   // F inside G x [0 1]
            // minimality under single-column removal
            for (std::size_t j = 0; j < g.cols(); ++j) {
                std::vector<Column> cols;
                for (std::size_t t = 0; t < g.cols(); ++t)
                    if (t != j) cols.push_back(g.column(t));
                RMatrix h(g.rows(), 2, std::move(cols));
                CHECK_FALSE(contains_config(f, direct_product(h, row01)));
            }
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("edge multiplicity cap") {
    CHECK(edge_multiplicity_cap(make_T(2)) == 2);
    CHECK(edge_multiplicity_cap(make_F_abcd(1, 1, 1, 1)) == 4);
    std::vector<Column> twice;
    for (std::size_t j = 0; j < make_K(2).cols(); ++j) {
        twice.push_back(make_K(2).column(j));
        twice.push_back(make_K(2).column(j));
    }
    CHECK(edge_multiplicity_cap(RMatrix(2, 2, twice)) == 3);
}

TEST_CASE("forbidden-subgraph families from the rule base") {
    HFamilyResult t2 = h_family(make_T(2), 4);
    std::set<std::string> names;
    for (const NamedGraph& g : t2.family.members()) names.insert(g.name);
    CHECK(names.count("P4"));
    CHECK(names.count("K3"));
    CHECK(names.count("1xS3"));
    CHECK(names.count("2xe"));
    CHECK_FALSE(t2.log.empty());

    HFamilyResult f1111 = h_family(make_F_abcd(1, 1, 1, 1), 4);
    names.clear();
    for (const NamedGraph& g : f1111.family.members()) names.insert(g.name);
    CHECK(names.count("frak_c2"));
    CHECK(names.count("frak_d2"));
    CHECK(names.count("gamma3"));
    CHECK(names.count("4xe"));
    CHECK(names.count("1xK4"));
    CHECK(names.count("2xS3"));
}

TEST_CASE("constant-bound certification") {
    CHECK(constant_bound_certified(ch(make_F_abcd(1, 1, 1, 1))));
    CHECK(constant_bound_certified({make_row01()}));
    CHECK_FALSE(constant_bound_certified({make_K(2)}));  // chains never fit in identities
    CHECK_FALSE(constant_bound_certified({}));
}

TEST_CASE("known two-symbol growth entries") {
    CHECK(known_two_symbol_exponent(make_K(3))->exponent == 2);
    CHECK(known_two_symbol_exponent(make_Ks(3, 2))->exponent == 2);
    CHECK(known_two_symbol_exponent(make_I(2))->exponent == 1);
    CHECK(known_two_symbol_exponent(make_block_side(3, 1, 1))->exponent == 2);
    CHECK(known_two_symbol_exponent(make_F_abcd(1, 1, 1, 1))->exponent == 1);
    CHECK(known_two_symbol_exponent(make_T(2))->exponent == 1);
    CHECK(known_two_symbol_exponent(make_const(2, 1, 1))->exponent == 1);
    CHECK(known_two_symbol_exponent(make_col01())->exponent == 0);
    // non-simple matrices carry no entry
    CHECK_FALSE(known_two_symbol_exponent(make_const(1, 2, 0)).has_value());
}

TEST_CASE("excluded-pair predicate") {
    CHECK(af10_predicate(make_F_abcd(1, 1, 1, 1)));
    CHECK(af10_predicate(linear_three_row_envelope()));
    CHECK_FALSE(af10_predicate(make_K(3)));
}

TEST_CASE("construction exponents") {
    // three-rowed all-ones-column matrix: the bounded-symbol rule wins
    RMatrix gamma = RMatrix::from_rows(2, {{1, 1}, {1, 0}, {1, 0}});
    CHECK(lower_exponent(gamma, 4).exponent == 6);
    CHECK(lower_exponent(make_T(2), 3).exponent == 2);
    CHECK(lower_exponent(ones_over_complete(3), 3).exponent == 4);
    CHECK(lower_exponent(make_F_abcd(1, 1, 1, 1), 5).exponent == 10);
}

TEST_CASE("derived upper exponents") {
    CHECK(upper_exponent(make_T(2), 4).exponent == 3);
    CHECK(upper_exponent(make_F_abcd(1, 1, 1, 1), 5).exponent == 10);
    CHECK(upper_exponent(make_K(3), 3).exponent == 6);
    CHECK(upper_exponent(ones_over_complete(3), 3).exponent == 4);
}

TEST_CASE("classification outcomes") {
    ExponentBound col = classify(make_col01(), 5);
    CHECK(col.exact_value == 5);
    CHECK(col.tight);

    ExponentBound ones = classify(make_const(2, 1, 1), 3);
    CHECK(ones.tight);
    CHECK(ones.lower == 2);

    ExponentBound p = classify(RMatrix::from_rows(2, {{1, 1}, {1, 1}, {0, 1}}), 4);
    CHECK(p.tight);
    CHECK(p.lower == 6);

    ExponentBound open3 = classify(make_F_abcd(1, 1, 1, 1), 3);
    CHECK_FALSE(open3.tight);
    CHECK(open3.lower == 3);
    CHECK(open3.upper == 4);

    ExponentBound tight4 = classify(make_F_abcd(1, 1, 1, 1), 4);
    CHECK(tight4.tight);
    CHECK(tight4.lower == 6);

    CHECK(classify(make_row01(), 3).exact_value == 1);
    CHECK_THROWS(classify(relabel(make_row01(), 0, 2, 3), 3));  // not a 2-symbol matrix
}

TEST_CASE("bounds stay ordered on a random corpus") {
    testutil::Rng rng(99);
    for (int it = 0; it < 30; ++it) {
        RMatrix f = testutil::random_matrix(rng, 3, 3, 2);
        if (f.cols() == 0) continue;
        for (int r = 3; r <= 4; ++r) {
            ExponentBound b = classify(f, r);
            CHECK(b.lower <= b.upper);
        }
    }
}

TEST_CASE("small-slope consistency for a tight family") {
    // growth differences in m never shrink for the constant-column family
    ConfigFamily fam = sym_family(make_const(2, 1, 0), 3);
    std::vector<std::uint64_t> vals;
    for (std::size_t m = 2; m <= 4; ++m) vals.push_back(exact_forb(m, 3, fam).value);
    CHECK(vals[1] - vals[0] <= vals[2] - vals[1]);
}
