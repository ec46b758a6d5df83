#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "kuga/cyclo.hpp"
#include "kuga/errors.hpp"

namespace kuga {

/// 4x4 integer matrix, row major. Entries of every matrix handled here stay
/// small (torsion elements, products of a few unimodular factors), so plain
/// 64-bit arithmetic is exact; magnitude guards catch runaway inputs before
/// overflow could occur.
using Mat4 = std::array<std::array<long long, 4>, 4>;

/// 2x2 integer matrix.
using Mat2 = std::array<std::array<long long, 2>, 2>;

/// 2x2 complex matrix.
using Mat2c = std::array<std::array<cplx, 2>, 2>;

inline constexpr Mat4 kIdentity4{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

inline Mat4 mat4_mul(const Mat4& a, const Mat4& b) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            long long aik = a[i][k];
            if (aik == 0)
                continue;
            for (int j = 0; j < 4; ++j)
                r[i][j] += aik * b[k][j];
        }
    return r;
}

inline Mat4 mat4_transpose(const Mat4& a) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r[i][j] = a[j][i];
    return r;
}

inline Mat4 mat4_neg(const Mat4& a) {
    Mat4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r[i][j] = -a[i][j];
    return r;
}

inline bool mat4_eq(const Mat4& a, const Mat4& b) { return a == b; }

inline long long mat4_max_abs(const Mat4& a) {
    long long m = 0;
    for (const auto& row : a)
        for (long long v : row)
            m = std::max(m, v < 0 ? -v : v);
    return m;
}

inline long long mat4_det(const Mat4& m) {
    // Laplace expansion over the first row; fine at this size.
    auto det3 = [](long long a, long long b, long long c, long long d,
                   long long e, long long f, long long g, long long h,
                   long long i) {
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
    };
    long long det = 0;
    for (int j = 0; j < 4; ++j) {
        long long sub[3][3];
        for (int r = 1; r < 4; ++r) {
            int cc = 0;
            for (int c = 0; c < 4; ++c) {
                if (c == j)
                    continue;
                sub[r - 1][cc++] = m[r][c];
            }
        }
        long long minor =
            det3(sub[0][0], sub[0][1], sub[0][2], sub[1][0], sub[1][1],
                 sub[1][2], sub[2][0], sub[2][1], sub[2][2]);
        det += (j % 2 == 0 ? 1 : -1) * m[0][j] * minor;
    }
    return det;
}

/// Exact inverse of a unimodular integer matrix via the adjugate.
inline Mat4 mat4_inverse_unimodular(const Mat4& m) {
    long long det = mat4_det(m);
    if (det != 1 && det != -1)
        throw NumericalBreakdown("mat4 inverse: determinant is not a unit");
    Mat4 adj{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long sub[3][3];
            int rr = 0;
            for (int r = 0; r < 4; ++r) {
                if (r == i)
                    continue;
                int cc = 0;
                for (int c = 0; c < 4; ++c) {
                    if (c == j)
                        continue;
                    sub[rr][cc++] = m[r][c];
                }
                ++rr;
            }
            long long minor = sub[0][0] * (sub[1][1] * sub[2][2] - sub[1][2] * sub[2][1]) -
                              sub[0][1] * (sub[1][0] * sub[2][2] - sub[1][2] * sub[2][0]) +
                              sub[0][2] * (sub[1][0] * sub[2][1] - sub[1][1] * sub[2][0]);
            adj[j][i] = ((i + j) % 2 == 0 ? 1 : -1) * minor * det;
        }
    return adj;
}

inline std::string mat4_str(const Mat4& m) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        os << "[";
        for (int j = 0; j < 4; ++j)
            os << m[i][j] << (j < 3 ? ", " : "");
        os << "]" << (i < 3 ? ", " : "");
    }
    os << "]";
    return os.str();
}

// ---- 2x2 complex helpers ----

inline cplx mat2c_det(const Mat2c& m) {
    return m[0][0] * m[1][1] - m[0][1] * m[1][0];
}

inline Mat2c mat2c_mul(const Mat2c& a, const Mat2c& b) {
    Mat2c r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return r;
}

inline Mat2c mat2c_inverse(const Mat2c& m, double tol = 1e-12) {
    cplx det = mat2c_det(m);
    if (std::abs(det) < tol)
        throw NumericalBreakdown("2x2 inverse: matrix is numerically singular");
    return Mat2c{{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

/// Eigenvalues of a 2x2 complex matrix, closed form.
inline std::array<cplx, 2> mat2c_eigenvalues(const Mat2c& m) {
    cplx tr = m[0][0] + m[1][1];
    cplx disc = std::sqrt(tr * tr - 4.0 * mat2c_det(m));
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

inline bool mat2c_is_diagonal(const Mat2c& m, double tol = 1e-9) {
    return std::abs(m[0][1]) <= tol && std::abs(m[1][0]) <= tol;
}

} // namespace kuga
