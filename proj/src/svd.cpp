#include "fspace/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fspace/error.hpp"

namespace fspace {

namespace {

constexpr double kRotationTol = 1e-12;  // relative off-diagonal threshold
constexpr int kMaxSweeps = 64;

// Work matrix held column-major: rotations touch whole columns.
struct Columns {
    std::size_t m = 0;
    std::vector<std::vector<double>> cols;

    explicit Columns(const Matrix& a) : m(a.rows()), cols(a.cols()) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            cols[j].resize(m);
            for (std::size_t i = 0; i < m; ++i) cols[j][i] = a.at(i, j);
        }
    }
    Columns(std::size_t rows, std::size_t n, bool identity) : m(rows), cols(n) {
        for (std::size_t j = 0; j < n; ++j) {
            cols[j].assign(m, 0.0);
            if (identity) cols[j][j] = 1.0;
        }
    }
};

void rotate(std::vector<double>& x, std::vector<double>& y, double c, double s) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        double xi = x[i];
        double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

// Hestenes one-sided Jacobi: orthogonalize the columns of W while
// accumulating the right rotations into V. On exit W = U * diag(S) * I and
// V holds the right singular vectors.
void orthogonalize(Columns& w, Columns& v) {
    const std::size_t n = w.cols.size();
    if (n < 2) return;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0, gamma = 0.0;
                const auto& wp = w.cols[p];
                const auto& wq = w.cols[q];
                for (std::size_t i = 0; i < w.m; ++i) {
                    alpha += wp[i] * wp[i];
                    beta += wq[i] * wq[i];
                    gamma += wp[i] * wq[i];
                }
                if (std::abs(gamma) <= kRotationTol * std::sqrt(alpha * beta)) continue;

                double zeta = (beta - alpha) / (2.0 * gamma);
                double t = std::copysign(1.0, zeta) /
                           (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                rotate(w.cols[p], w.cols[q], c, s);
                rotate(v.cols[p], v.cols[q], c, s);
                rotated = true;
            }
        }
        if (!rotated) return;
    }
    throw ConvergenceError("jacobi rotations did not converge within " +
                           std::to_string(kMaxSweeps) + " sweeps");
}

SvdResult assemble(Columns& w, Columns& v, std::size_t k) {
    const std::size_t n = w.cols.size();

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        double sq = 0.0;
        for (double x : w.cols[j]) sq += x * x;
        sigma[j] = std::sqrt(sq);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sigma[a] > sigma[b]; });

    double sigma_max = n ? sigma[order[0]] : 0.0;
    double zero_cutoff = sigma_max * 1e-14;

    std::vector<std::size_t> kept;
    for (std::size_t j : order) {
        if (kept.size() == k) break;
        if (sigma[j] <= zero_cutoff) break;  // order is non-increasing
        kept.push_back(j);
    }

    SvdResult out;
    out.u = Matrix(w.m, kept.size());
    out.v = Matrix(n, kept.size());
    out.singular_values.reserve(kept.size());
    for (std::size_t f = 0; f < kept.size(); ++f) {
        std::size_t j = kept[f];
        out.singular_values.push_back(sigma[j]);

        // Sign canonicalization on the normalized U column.
        double best = 0.0;
        double best_value = 0.0;
        for (double x : w.cols[j]) {
            if (std::abs(x) > best) {
                best = std::abs(x);
                best_value = x;
            }
        }
        double flip = best_value < 0.0 ? -1.0 : 1.0;

        double inv = flip / sigma[j];
        for (std::size_t i = 0; i < w.m; ++i) out.u.at(i, f) = w.cols[j][i] * inv;
        for (std::size_t i = 0; i < n; ++i) out.v.at(i, f) = v.cols[j][i] * flip;
    }
    return out;
}

SvdResult svd_tall(const Matrix& a, std::size_t k) {
    Columns w(a);
    Columns v(a.cols(), a.cols(), /*identity=*/true);
    orthogonalize(w, v);
    return assemble(w, v, k);
}

}  // namespace

SvdResult truncated_svd(const Matrix& a, std::size_t k) {
    std::size_t max_rank = std::min(a.rows(), a.cols());
    if (k < 1 || k > max_rank)
        throw InvalidArgumentError("k = " + std::to_string(k) + " out of range [1, " +
                                   std::to_string(max_rank) + "]");
    for (double x : a.data())
        if (!std::isfinite(x)) throw InvalidArgumentError("matrix has non-finite entries");

    // Orthogonalizing the short side keeps the rotation count at
    // min(m, n)^2 regardless of orientation.
    if (a.rows() >= a.cols()) return svd_tall(a, k);

    SvdResult t = svd_tall(transpose(a), k);
    std::swap(t.u, t.v);
    // Canonical signs follow U, which was V before the swap; re-canonicalize.
    for (std::size_t f = 0; f < t.rank(); ++f) {
        double best = 0.0;
        double best_value = 0.0;
        for (std::size_t i = 0; i < t.u.rows(); ++i) {
            double x = t.u.at(i, f);
            if (std::abs(x) > best) {
                best = std::abs(x);
                best_value = x;
            }
        }
        if (best_value < 0.0) {
            for (std::size_t i = 0; i < t.u.rows(); ++i) t.u.at(i, f) = -t.u.at(i, f);
            for (std::size_t i = 0; i < t.v.rows(); ++i) t.v.at(i, f) = -t.v.at(i, f);
        }
    }
    return t;
}

}  // namespace fspace
