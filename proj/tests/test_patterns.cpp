#include <gtest/gtest.h>

#include "assoc/algebra.hpp"
#include "assoc/error.hpp"
#include "assoc/patterns.hpp"
#include "support/testing.hpp"

using namespace assoc;
using namespace assoc::testing;

TEST(IdentityFromKeys, Examples) {
    EXPECT_TRUE(identity_from_keys({}).empty());
    const std::vector<Key> a{"a"};
    EXPECT_EQ(identity_from_keys(a), AssocArray::from_entries({{"a", "a", 1}}));
    const std::vector<Key> dup{"a", "b", "a"};
    EXPECT_THROW(identity_from_keys(dup), ArgumentError);
}

TEST(PermFromPairs, Examples) {
    const std::vector<std::pair<Key, Key>> pairs{{"Electronic", "Bandayde"}, {"Rock", "Kitten"}};
    const AssocArray p = perm_from_pairs(pairs);
    EXPECT_EQ(p.nnz(), 2u);
    EXPECT_TRUE(is_permutation(p));

    const std::vector<std::pair<Key, Key>> dup_row{{"r", "c"}, {"r", "d"}};
    EXPECT_THROW(perm_from_pairs(dup_row), ArgumentError);
    const std::vector<std::pair<Key, Key>> dup_col{{"r", "c"}, {"s", "c"}};
    EXPECT_THROW(perm_from_pairs(dup_col), ArgumentError);
    EXPECT_TRUE(perm_from_pairs({}).empty());
}

TEST(IsPermutation, Examples) {
    const std::vector<Key> ab{"a", "b"};
    EXPECT_TRUE(is_permutation(identity_from_keys(ab)));
    EXPECT_FALSE(is_permutation(logical(to_array(genre_artist_counts()))));
    EXPECT_FALSE(is_permutation(AssocArray()));
    EXPECT_FALSE(is_permutation(AssocArray::from_entries({{"a", "b", 2}})));
}

TEST(IsClique, Examples) {
    EXPECT_TRUE(is_clique(AssocArray::from_entries({{"r", "c", 1}})));
    EXPECT_TRUE(is_clique(songs_array()));
    EXPECT_FALSE(is_clique(logical(to_array(genre_artist_counts()))));
    EXPECT_FALSE(is_clique(AssocArray()));
}

TEST(PatternProperties, RandomPermutations) {
    Rng rng(61);
    const auto rows_pool = key_pool(8, "r");
    const auto cols_pool = key_pool(8, "c");
    auto ints = [](Rng& r) { return Value(nonzero_int(r, -5, 5)); };
    for (int trial = 0; trial < 300; ++trial) {
        auto rs = random_subset(rng, rows_pool, 8);
        auto cs = cols_pool;
        std::shuffle(cs.begin(), cs.end(), rng);
        std::vector<std::pair<Key, Key>> pairs;
        for (std::size_t i = 0; i < rs.size(); ++i) pairs.emplace_back(rs[i], cs[i]);
        const AssocArray p = perm_from_pairs(pairs);
        if (pairs.empty()) {
            EXPECT_FALSE(is_permutation(p));
            continue;
        }
        EXPECT_TRUE(is_permutation(p));
        EXPECT_TRUE(is_permutation(transpose(p)));
        EXPECT_EQ(p.nnz(), p.keys(Axis::Row).size());
        EXPECT_EQ(p.nnz(), p.keys(Axis::Column).size());

        // P selects T's rows named by P's columns, renamed to P's rows.
        const AssocArray t = random_array(rng, cols_pool, key_pool(4, "f"), 0.6, ints);
        const AssocArray routed = arrayprod(p, t, Semiring::arith());
        for (const auto& [r, c] : pairs) {
            auto expect = t.row(c);
            auto got = routed.row(r);
            ASSERT_EQ(got.size(), expect.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                EXPECT_EQ(got[i].col, expect[i].col);
                EXPECT_EQ(got[i].value, expect[i].value);
            }
        }

        // a square permutation over the same key set selects exactly the named rows
        std::vector<Key> ks = rs;
        const AssocArray square = identity_from_keys(ks);
        const AssocArray t2 = random_array(rng, rows_pool, key_pool(4, "f"), 0.6, ints);
        EXPECT_EQ(arrayprod(square, t2, Semiring::arith()), perm_select(t2, ks, Axis::Row));
    }
}

TEST(PatternProperties, RandomCliques) {
    Rng rng(62);
    const auto pool = key_pool(6);
    for (int trial = 0; trial < 300; ++trial) {
        const auto rows = random_subset(rng, pool, 6);
        const auto cols = random_subset(rng, pool, 6);
        const AssocArray full = random_array(rng, rows, cols, 1.0, mixed_value);
        const AssocArray sparse = random_array(rng, rows, cols, 0.6, mixed_value);
        EXPECT_EQ(is_clique(full), !full.empty());
        if (!full.empty()) EXPECT_EQ(full.nnz(), rows.size() * cols.size());
        EXPECT_EQ(is_clique(transpose(sparse)), is_clique(sparse));
        EXPECT_EQ(is_permutation(transpose(sparse)), is_permutation(sparse));
        if (is_clique(sparse)) {
            EXPECT_EQ(sparse.nnz(), sparse.keys(Axis::Row).size() * sparse.keys(Axis::Column).size());
        }
    }
}
