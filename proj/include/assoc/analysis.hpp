#pragma once

#include <cstddef>
#include <vector>

#include "assoc/array.hpp"
#include "assoc/error.hpp"

namespace assoc {

inline constexpr double kDefaultPivotTol = 1e-10;

// Dense row-major view of a numeric array over its sorted key sets; absent
// cells read as 0.
struct DenseProjection {
    std::vector<Key> row_order;
    std::vector<Key> col_order;
    std::vector<double> cells;

    std::size_t rows() const noexcept { return row_order.size(); }
    std::size_t cols() const noexcept { return col_order.size(); }
    double& at(std::size_t i, std::size_t j) { return cells[i * cols() + j]; }
    double at(std::size_t i, std::size_t j) const { return cells[i * cols() + j]; }
};

// Throws DomainError when a value is Text.
DenseProjection to_dense(const AssocArray& a);
// Zero cells are dropped.
AssocArray from_dense(const DenseProjection& d);

// Number of pivots found by Gaussian elimination with partial pivoting; a
// column pivots when its largest candidate exceeds tol * max|cell|.
std::size_t rank(const AssocArray& a, double tol = kDefaultPivotTol);

// Basis of {x : A x = 0}. Rows are A's column keys, columns are "ns1",
// "ns2", ... in free-variable order, each column of unit 2-norm. Empty when
// A has full column rank.
AssocArray null_space(const AssocArray& a, double tol = kDefaultPivotTol);

// True iff A X = A Y forces X = Y, i.e. the null space is trivial.
bool products_unique(const AssocArray& a, double tol = kDefaultPivotTol);

struct EigenResult {
    double eigenvalue = 0.0;
    AssocArray eigenvector;  // single column "v1"
    std::size_t iterations = 0;
    double residual = 0.0;  // ||A v - lambda v||_inf
};

// Power iteration did not meet the tolerance within the iteration budget.
class NotConvergedError : public Error {
public:
    NotConvergedError(const std::string& what, EigenResult last) : Error(what), last_(std::move(last)) {}
    const EigenResult& last() const noexcept { return last_; }

private:
    EigenResult last_;
};

// Dominant eigenpair of a square-aligned numeric array by power iteration.
//
// Each step normalizes the iterate and takes the Rayleigh quotient as the
// eigenvalue estimate. Success needs both
//   |lambda_k - lambda_{k-1}| <= tol * max(1, |lambda_k|)  and  residual <= tol.
// The eigenvector is signed so its largest-magnitude component is positive.
//
// Throws ArgumentError when row and column key sets differ, DomainError when
// the iterate collapses to zero, NotConvergedError after maxiter steps.
EigenResult dominant_eigenpair(const AssocArray& a, double tol, std::size_t maxiter);

}  // namespace assoc
