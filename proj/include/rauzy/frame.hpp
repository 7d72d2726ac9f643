#pragma once

#include <cmath>

#include "rauzy/errors.hpp"
#include "rauzy/types.hpp"

namespace rauzy {

// Orthonormal chart of the contracting plane: v_inf is the expanding
// direction, the rows of `basis` are the in-plane vectors r_0..r_{d-2}, and
// column i of `basis` is u_i, the in-plane image of the standard basis
// vector e_i.
struct Frame {
  RealVec v_inf;  // unit
  RealMat basis;  // (d-1) x d, rows orthonormal and orthogonal to v_inf

  Index dim() const { return v_inf.size(); }
  RealVec u(Index i) const { return basis.col(i); }
};

struct FrameOptions {
  double degeneracy_tol = 1e-12;
};

// Gram-Schmidt on {v_inf, e_0, ..., e_{d-2}}.  Dotting against the r_k is
// equivalent to projecting onto the plane first, since every r_k is
// orthogonal to v_inf.
inline Frame build_frame(const RealVec& v_inf_direction, const FrameOptions& opts = {}) {
  const Index d = v_inf_direction.size();
  if (d < 2) throw std::invalid_argument("build_frame: need dimension >= 2");
  const double norm = v_inf_direction.norm();
  if (norm < opts.degeneracy_tol) throw DegenerateInputError("build_frame: zero direction");

  Frame frame;
  frame.v_inf = v_inf_direction / norm;
  frame.basis = RealMat(d - 1, d);
  for (Index k = 0; k < d - 1; ++k) {
    RealVec r = RealVec::Zero(d);
    r[k] = 1.0;
    r -= r.dot(frame.v_inf) * frame.v_inf;
    for (Index j = 0; j < k; ++j) {
      const RealVec prev = frame.basis.row(j).transpose();
      r -= r.dot(prev) * prev;
    }
    const double rn = r.norm();
    if (rn < opts.degeneracy_tol) {
      throw DegenerateInputError("build_frame: basis vector degenerate after orthogonalization");
    }
    frame.basis.row(k) = (r / rn).transpose();
  }
  return frame;
}

inline RealVec project(const Frame& frame, const RealVec& p) {
  if (p.size() != frame.dim()) throw std::invalid_argument("project: dimension mismatch");
  return frame.basis * p;
}

inline RealVec project(const Frame& frame, const LatticeVec& p) {
  if (p.size() != frame.dim()) throw std::invalid_argument("project: dimension mismatch");
  return frame.basis * p.cast<double>();
}

// Two-dimensional chart for the three-letter case.
inline PlaneVec project2(const Frame& frame, const LatticeVec& p) {
  if (frame.dim() != 3) throw std::invalid_argument("project2: frame must be 3-dimensional");
  const RealVec q = project(frame, p);
  return PlaneVec(q[0], q[1]);
}

inline PlaneVec project2(const Frame& frame, const RealVec& p) {
  if (frame.dim() != 3) throw std::invalid_argument("project2: frame must be 3-dimensional");
  const RealVec q = project(frame, p);
  return PlaneVec(q[0], q[1]);
}

}  // namespace rauzy
