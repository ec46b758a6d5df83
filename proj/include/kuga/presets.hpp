#pragma once

#include <optional>
#include <string>

#include "kuga/matrices.hpp"
#include "kuga/symplectic.hpp"

namespace kuga {

/// Order-6 stabilizer generator shared by the interior curve scenario and
/// the rank-1 boundary point over rho. Mixes coordinates (1,3), fixes (2,4).
inline Mat4 preset_c2_matrix() {
    return Mat4{{{0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 1, 0}, {0, 0, 0, 1}}};
}

/// Order-4 stabilizer generator at the rank-1 boundary point over i.
inline Mat4 preset_q1_matrix() {
    return Mat4{{{0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}};
}

inline Mat4 preset_minus1_matrix() { return mat4_neg(kIdentity4); }

/// Matrices addressable by name in input files and on the CLI.
inline std::optional<Mat4> preset_matrix(const std::string& name) {
    if (name == "C2" || name == "Q2")
        return preset_c2_matrix();
    if (name == "Q1")
        return preset_q1_matrix();
    if (name == "minus1")
        return preset_minus1_matrix();
    return std::nullopt;
}

} // namespace kuga
