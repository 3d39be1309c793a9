#pragma once

#include "zetakit/paths.hpp"
#include "zetakit/signedperm.hpp"
#include "zetakit/torus.hpp"

namespace zetakit {

// Size of the order ideal of roots not above the path's antichain.
int area(const Path& beta, Type t);
// Roots of that ideal sent to positive roots by w. Throws InvalidLabelling.
int area_prime(const Path& beta, const SignedPerm& w, Type t);

int dinv_c(const Path& pi);
// Throws InvalidLabelling.
int dinv_c_prime(const VertPath& vp);

// Candidate type B dinv over the type B area vector. Exploratory only.
int dinv_b_experimental(const Path& pi);

}  // namespace zetakit
