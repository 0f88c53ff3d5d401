#pragma once

namespace hilbert {
namespace tol {

// Chart-unit tolerance at which a membership flip counts as the boundary.
inline constexpr double boundary = 1e-12;
// Equality of projective points, on canonical representatives.
inline constexpr double point_eq = 1e-9;
// Relative residual of 2x2 minors accepted as collinear.
inline constexpr double collinear = 1e-8;
// Relative slack below which a polytope constraint counts as active.
inline constexpr double active = 1e-9;
// |det| of a scale-normalized matrix below this is singular.
inline constexpr double det_floor = 1e-12;
// Relative spectral gap below which a top eigenvalue is not "simple".
inline constexpr double proximal_gap = 1e-6;
// Interior margin required of a body's base point.
inline constexpr double base_margin = 10.0 * boundary;

}  // namespace tol
}  // namespace hilbert
