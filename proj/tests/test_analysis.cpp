#include <gtest/gtest.h>

#include <cmath>

#include "assoc/analysis.hpp"
#include "assoc/patterns.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace assoc;
using namespace assoc::testing;

namespace {

const AssocArray kRankOne =
    AssocArray::from_entries({{"a", "x", 1}, {"a", "y", 2}, {"b", "x", 2}, {"b", "y", 4}});

double column_norm(const AssocArray& a, const Key& col) {
    double s = 0.0;
    for (const Entry& e : a.entries()) {
        if (e.col == col) s += e.value.number() * e.value.number();
    }
    return std::sqrt(s);
}

// ||A n||_inf for null-space column `col`.
double apply_inf_norm(const AssocArray& a, const AssocArray& ns, const Key& col) {
    double worst = 0.0;
    for (const Key& r : a.keys(Axis::Row)) {
        double s = 0.0;
        for (const Entry& e : a.row(r)) {
            if (auto v = ns.get(e.col, col)) s += e.value.number() * v->number();
        }
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

AssocArray random_int_matrix(Rng& rng, int max_dim) {
    const auto rows = key_pool(static_cast<std::size_t>(uniform_int(rng, 1, max_dim)), "r");
    const auto cols = key_pool(static_cast<std::size_t>(uniform_int(rng, 1, max_dim)), "c");
    const double density = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
    return random_array(rng, rows, cols, density, [](Rng& r) { return Value(nonzero_int(r, -9, 9)); });
}

}  // namespace

TEST(ToDense, Examples) {
    const DenseProjection empty = to_dense(AssocArray());
    EXPECT_EQ(empty.rows(), 0u);
    EXPECT_EQ(empty.cols(), 0u);

    const DenseProjection d = to_dense(AssocArray::from_entries({{"a", "x", 2}, {"b", "y", 3}}));
    EXPECT_EQ(d.cells, (std::vector<double>{2, 0, 0, 3}));

    const DenseProjection g = to_dense(to_array(genre_artist_counts()));
    EXPECT_EQ(g.rows(), 3u);
    EXPECT_EQ(g.cols(), 3u);
    EXPECT_EQ(std::count(g.cells.begin(), g.cells.end(), 1.0), 4);
    EXPECT_EQ(std::count(g.cells.begin(), g.cells.end(), 0.0), 5);

    EXPECT_THROW(to_dense(songs_array()), DomainError);
}

TEST(ToDense, RoundTrip) {
    Rng rng(81);
    for (int trial = 0; trial < 200; ++trial) {
        const AssocArray a = random_int_matrix(rng, 6);
        EXPECT_EQ(from_dense(to_dense(a)), a);
    }
}

TEST(Rank, Examples) {
    const std::vector<Key> ab{"a", "b"};
    EXPECT_EQ(rank(identity_from_keys(ab)), 2u);
    EXPECT_EQ(rank(kRankOne), 1u);
    EXPECT_EQ(rank(AssocArray()), 0u);
    EXPECT_THROW(rank(kRankOne, 0.0), ArgumentError);
}

TEST(Rank, ScaleInvariant) {
    const AssocArray tiny = AssocArray::from_entries({{"a", "x", 1e-12}, {"b", "y", 2e-12}});
    EXPECT_EQ(rank(tiny), 2u);
}

TEST(NullSpace, Examples) {
    const std::vector<Key> ab{"a", "b"};
    EXPECT_TRUE(null_space(identity_from_keys(ab)).empty());

    const AssocArray ns = null_space(kRankOne);
    ASSERT_EQ(ns.keys(Axis::Column), (std::vector<Key>{"ns1"}));
    const double x = ns.get("x", "ns1").value().number();
    const double y = ns.get("y", "ns1").value().number();
    const double s = std::sqrt(5.0);
    // proportional to (-2, 1)/sqrt 5, either sign
    EXPECT_NEAR(std::abs(x), 2.0 / s, 1e-12);
    EXPECT_NEAR(std::abs(y), 1.0 / s, 1e-12);
    EXPECT_LT(x * y, 0.0);
}

TEST(NullSpace, WideMatrixIncludesUnusedColumns) {
    // one equation, three unknowns
    const AssocArray a = AssocArray::from_entries({{"r", "x", 1}, {"r", "y", 1}, {"r", "z", 1}});
    const AssocArray ns = null_space(a);
    EXPECT_EQ(ns.keys(Axis::Column), (std::vector<Key>{"ns1", "ns2"}));
    for (const Key& c : ns.keys(Axis::Column)) {
        EXPECT_NEAR(column_norm(ns, c), 1.0, 1e-12);
        EXPECT_LE(apply_inf_norm(a, ns, c), 1e-12);
    }
}

TEST(ProductsUnique, Examples) {
    const std::vector<Key> ab{"a", "b"};
    EXPECT_TRUE(products_unique(identity_from_keys(ab)));
    EXPECT_FALSE(products_unique(kRankOne));
    EXPECT_TRUE(products_unique(AssocArray()));
}

TEST(AnalysisProperties, RankNullityAgainstExactElimination) {
    Rng rng(82);
    for (int trial = 0; trial < 300; ++trial) {
        AssocArray a = random_int_matrix(rng, 6);
        // force some dependence by duplicating a scaled row now and then
        if (coin(rng, 0.5) && a.keys(Axis::Row).size() >= 1) {
            const Key src = a.keys(Axis::Row).front();
            std::vector<Entry> t(a.entries().begin(), a.entries().end());
            const double f = nonzero_int(rng, -3, 3);
            for (const Entry& e : a.row(src)) t.push_back({"dup", e.col, e.value.number() * f});
            a = AssocArray::from_entries(std::move(t));
        }
        const std::size_t exact = exact_rank(int_matrix(a));
        const std::size_t ncols = a.keys(Axis::Column).size();
        EXPECT_EQ(rank(a), exact);
        const AssocArray ns = null_space(a);
        EXPECT_EQ(ns.keys(Axis::Column).size(), ncols - exact);
        EXPECT_EQ(products_unique(a), exact == ncols);
        for (const Key& c : ns.keys(Axis::Column)) {
            EXPECT_NEAR(column_norm(ns, c), 1.0, 1e-12);
            EXPECT_LE(apply_inf_norm(a, ns, c), 1e-8);
        }
    }
}

TEST(DominantEigenpair, Examples) {
    const std::vector<Key> ab{"a", "b"};
    const EigenResult id = dominant_eigenpair(identity_from_keys(ab), 1e-9, 1000);
    EXPECT_EQ(id.eigenvalue, 1.0);
    EXPECT_EQ(id.iterations, 1u);

    const EigenResult diag = dominant_eigenpair(AssocArray::from_entries({{"a", "a", 2}, {"b", "b", 1}}), 1e-9, 1000);
    EXPECT_NEAR(diag.eigenvalue, 2.0, 1e-9);
    EXPECT_NEAR(diag.eigenvector.get("a", "v1").value().number(), 1.0, 1e-6);
    const auto b = diag.eigenvector.get("b", "v1");
    EXPECT_LE(b ? std::abs(b->number()) : 0.0, 1e-6);
    EXPECT_LE(diag.residual, 1e-9);

    const AssocArray swap = AssocArray::from_entries({{"a", "b", 1}, {"b", "a", 1}});
    try {
        dominant_eigenpair(swap, 1e-9, 1000);
        FAIL() << "tie converged";
    } catch (const NotConvergedError& e) {
        EXPECT_EQ(e.last().iterations, 1000u);
        EXPECT_GT(e.last().residual, 1e-9);
    }
}

TEST(DominantEigenpair, Errors) {
    EXPECT_THROW(dominant_eigenpair(AssocArray::from_entries({{"a", "b", 1}}), 1e-9, 10), ArgumentError);
    EXPECT_THROW(dominant_eigenpair(AssocArray(), 1e-9, 10), ArgumentError);
    // nilpotent: A^2 = 0 wipes out every start vector
    const AssocArray nil = AssocArray::from_entries({{"a", "b", 1}, {"b", "b", -1}, {"a", "a", 1}, {"b", "a", -1}});
    EXPECT_THROW(dominant_eigenpair(nil, 1e-9, 100), DomainError);
}

TEST(AnalysisProperties, EigenAgainstJacobiAndScaling) {
    Rng rng(83);
    int checked = 0;
    while (checked < 100) {
        const std::size_t n = static_cast<std::size_t>(uniform_int(rng, 1, 6));
        std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) m[i][j] = m[j][i] = uniform_int(rng, -9, 9);
        }
        const auto eig = jacobi_eigenvalues(m);
        if (std::abs(eig[0]) < 1e-9) continue;
        if (n > 1 && std::abs(eig[0]) - std::abs(eig[1]) < 0.1) continue;
        std::vector<Entry> t;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (m[i][j] != 0.0) t.push_back({"k" + std::to_string(i), "k" + std::to_string(j), m[i][j]});
            }
        }
        AssocArray a = AssocArray::from_entries(std::move(t));
        if (a.keys(Axis::Row) != a.keys(Axis::Column)) continue;
        const EigenResult r = dominant_eigenpair(a, 1e-10, 100000);
        EXPECT_NEAR(r.eigenvalue, eig[0], 1e-6 * std::abs(eig[0]));
        EXPECT_LE(r.residual, 1e-6);
        double norm = 0.0;
        for (const Entry& e : r.eigenvector.entries()) norm += e.value.number() * e.value.number();
        EXPECT_NEAR(std::sqrt(norm), 1.0, 1e-12);

        std::vector<Entry> scaled;
        for (const Entry& e : a.entries()) scaled.push_back({e.row, e.col, e.value.number() * 3.0});
        const EigenResult s = dominant_eigenpair(AssocArray::from_entries(std::move(scaled)), 1e-10, 100000);
        EXPECT_NEAR(s.eigenvalue, 3.0 * r.eigenvalue, 1e-6 * std::abs(3.0 * r.eigenvalue));
        // equal up to sign
        auto component = [](const EigenResult& e, const Key& k) {
            const auto v = e.eigenvector.get(k, "v1");
            return v ? v->number() : 0.0;
        };
        double dot = 0.0;
        for (const Key& k : a.keys(Axis::Row)) dot += component(r, k) * component(s, k);
        const double sign = dot < 0.0 ? -1.0 : 1.0;
        for (const Key& k : a.keys(Axis::Row)) EXPECT_NEAR(component(r, k), sign * component(s, k), 1e-6);
        ++checked;
    }
}
