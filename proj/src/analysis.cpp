#include "assoc/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace assoc {

namespace {

void require_tol(double tol) {
    if (!(tol > 0.0) || !std::isfinite(tol)) throw ArgumentError("tolerance must be a positive finite number");
}

// Reduced row echelon form, in place. Returns the pivot columns in order;
// pivot p sits on row p.
std::vector<std::size_t> reduce(DenseProjection& d, double tol) {
    require_tol(tol);
    double maxabs = 0.0;
    for (double x : d.cells) maxabs = std::max(maxabs, std::abs(x));
    const double threshold = tol * maxabs;

    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d.cols() && r < d.rows(); ++c) {
        std::size_t p = r;
        for (std::size_t i = r + 1; i < d.rows(); ++i) {
            if (std::abs(d.at(i, c)) > std::abs(d.at(p, c))) p = i;
        }
        if (!(std::abs(d.at(p, c)) > threshold)) continue;
        if (p != r) {
            for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d.at(p, j), d.at(r, j));
        }
        const double pivot = d.at(r, c);
        for (std::size_t j = c; j < d.cols(); ++j) d.at(r, j) /= pivot;
        d.at(r, c) = 1.0;
        for (std::size_t i = 0; i < d.rows(); ++i) {
            if (i == r) continue;
            const double f = d.at(i, c);
            if (f == 0.0) continue;
            for (std::size_t j = c; j < d.cols(); ++j) d.at(i, j) -= f * d.at(r, j);
            d.at(i, c) = 0.0;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<double> multiply(const DenseProjection& d, const std::vector<double>& v) {
    std::vector<double> out(d.rows(), 0.0);
    for (std::size_t i = 0; i < d.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < d.cols(); ++j) s += d.at(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

EigenResult make_result(const DenseProjection& d, double lambda, std::vector<double> v, std::size_t iterations,
                        double residual) {
    std::size_t big = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (std::abs(v[i]) > std::abs(v[big])) big = i;
    }
    if (v[big] < 0.0) {
        for (double& x : v) x = -x;
    }
    std::vector<Entry> column;
    const Key v1("v1");
    for (std::size_t i = 0; i < v.size(); ++i) column.push_back(Entry{d.row_order[i], v1, Value(v[i])});
    return EigenResult{lambda, AssocArray::from_entries(std::move(column)), iterations, residual};
}

}  // namespace

DenseProjection to_dense(const AssocArray& a) {
    DenseProjection d{a.keys(Axis::Row), a.keys(Axis::Column), {}};
    d.cells.assign(d.rows() * d.cols(), 0.0);
    std::size_t i = 0;
    for (const Entry& e : a.entries()) {
        if (!e.value.is_number()) {
            throw DomainError("analysis needs numbers, cell (" + e.row.str() + ", " + e.col.str() + ") holds text");
        }
        while (d.row_order[i] != e.row) ++i;
        auto j = std::lower_bound(d.col_order.begin(), d.col_order.end(), e.col) - d.col_order.begin();
        d.at(i, static_cast<std::size_t>(j)) = e.value.number();
    }
    return d;
}

AssocArray from_dense(const DenseProjection& d) {
    std::vector<Entry> out;
    for (std::size_t i = 0; i < d.rows(); ++i) {
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (d.at(i, j) != 0.0) out.push_back(Entry{d.row_order[i], d.col_order[j], Value(d.at(i, j))});
        }
    }
    return AssocArray::from_entries(std::move(out));
}

std::size_t rank(const AssocArray& a, double tol) {
    DenseProjection d = to_dense(a);
    return reduce(d, tol).size();
}

AssocArray null_space(const AssocArray& a, double tol) {
    DenseProjection d = to_dense(a);
    const std::vector<std::size_t> pivots = reduce(d, tol);

    std::vector<bool> is_pivot(d.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Entry> out;
    std::size_t n = 0;
    for (std::size_t f = 0; f < d.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<double> x(d.cols(), 0.0);
        x[f] = 1.0;
        for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = -d.at(p, f);
        const double norm = std::sqrt(dot(x, x));
        const Key col("ns" + std::to_string(++n));
        for (std::size_t j = 0; j < d.cols(); ++j) {
            if (x[j] != 0.0) out.push_back(Entry{d.col_order[j], col, Value(x[j] / norm)});
        }
    }
    return AssocArray::from_entries(std::move(out));
}

bool products_unique(const AssocArray& a, double tol) { return null_space(a, tol).empty(); }

EigenResult dominant_eigenpair(const AssocArray& a, double tol, std::size_t maxiter) {
    require_tol(tol);
    if (maxiter < 1) throw ArgumentError("maxiter must be at least 1");
    const DenseProjection d = to_dense(a);
    if (d.row_order != d.col_order) throw ArgumentError("eigenanalysis needs equal row and column key sets");
    const std::size_t n = d.rows();
    if (n == 0) throw ArgumentError("eigenanalysis of an empty array");

    const double norm_a = std::sqrt(dot(d.cells, d.cells));
    const double collapse = 1e-14 * norm_a;

    // Ramp start: all ones is an exact eigenvector of the swap array.
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + static_cast<double>(i) / static_cast<double>(n);
    const double v_norm = std::sqrt(dot(v, v));
    for (double& x : v) x /= v_norm;

    std::vector<double> w = multiply(d, v);
    double lambda_old = dot(v, w);
    double lambda = lambda_old;
    double residual = std::numeric_limits<double>::infinity();

    for (std::size_t it = 1; it <= maxiter; ++it) {
        const double norm = std::sqrt(dot(w, w));
        if (!(norm > collapse)) throw DomainError("power iteration collapsed to the zero vector");
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
        w = multiply(d, v);
        lambda = dot(v, w);
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(w[i] - lambda * v[i]));
        const bool settled = std::abs(lambda - lambda_old) <= tol * std::max(1.0, std::abs(lambda));
        if (settled && residual <= tol) return make_result(d, lambda, std::move(v), it, residual);
        lambda_old = lambda;
    }
    EigenResult last = make_result(d, lambda, std::move(v), maxiter, residual);
    throw NotConvergedError("power iteration did not converge in " + std::to_string(maxiter) +
                                " iterations (last lambda " + format_number(lambda) + ", residual " +
                                format_number(residual) + ")",
                            std::move(last));
}

}  // namespace assoc
