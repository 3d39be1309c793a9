#pragma once

#include <utility>
#include <vector>

#include "zetakit/common.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/signedperm.hpp"
#include "zetakit/torus.hpp"

namespace zetakit {

// Type A: boxes between a Dyck path and the diagonal, row by row. Types B, C,
// D: mu = tau.(lambda - nu) with (nu, tau) from w_f. Throws ShapeMismatch.
std::vector<int> area_vector(const Path& p, Type t);

// Throws ShapeMismatch. Images are ballot(2n) for B and C, signed_ballot(n)
// for D and Dyck paths for A.
Path zeta_path(const Path& p, Type t);

// Diagonal reading word. Type A reads a positive window as a permutation.
// Throws InvalidLabelling.
SignedPerm reading_word(const VertPath& vp, Type t);

std::pair<Path, SignedPerm> hl_zeta(const VertPath& vp, Type t);

// Sign-free variant of zeta_path for type D on lattice(n-1, n).
Path zeta_d_star(const Path& p);

struct Bounce {
  std::vector<std::pair<int, int>> corners;  // bounce points from the end to (0,0)
  std::vector<int> alpha;                    // alpha_0..alpha_n
};
Bounce bounce_path(const Path& beta);

// Inverse of zeta_path for type C. Throws ShapeMismatch.
Path inverse_zeta_c(const Path& beta);

struct SweepTrace {
  std::vector<int> labels;                   // label of each step of the input
  std::vector<std::pair<char, int>> steps;   // the labelled steps, sorted
  Path image;
};
SweepTrace sweep_c_trace(const Path& p);
Path sweep_c(const Path& p);

}  // namespace zetakit
