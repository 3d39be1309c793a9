#pragma once

#include <functional>
#include <vector>

#include "zetakit/common.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/rootposet.hpp"
#include "zetakit/signedperm.hpp"

namespace zetakit {

// Element of the finite torus, coordinates reduced into [0, mod).
struct TorusElement {
  Type type = Type::C;
  int mod = 1;
  std::vector<int> coords;

  static TorusElement reduce(Type t, const std::vector<int>& lift);
  bool operator==(const TorusElement&) const = default;
  bool operator<(const TorusElement& o) const { return coords < o.coords; }
};

TorusElement act(const SignedPerm& w, const TorusElement& x);

// A path with vertical labels v.
struct VertPath {
  Path path;
  SignedPerm labels;
  bool operator==(const VertPath&) const = default;
};

// Shape of the paths carrying the torus model: lattice(n,n) for B and C,
// signed_lattice(n) for D.
PathKind vert_kind(Type t, int n);
int vert_rank(const Path& p, Type t);  // throws ShapeMismatch

std::vector<int> lambda_of_path(const Path& p, Type t);
bool is_representative(const std::vector<int>& lambda, Type t);
// Throws NotRepresentative.
Path path_of_lambda(const std::vector<int>& lambda, Type t);

// Walls of the scaled fundamental alcove containing lambda: simple roots and
// possibly the negative highest root. Throws NotRepresentative.
std::vector<Root> j_of_lambda(const std::vector<int>& lambda, Type t);

bool validate_vert(const VertPath& vp, Type t);
// The Weyl group element u twisted from the labels v.
SignedPerm u_of(const VertPath& vp, Type t);
// Inverse of u_of for a fixed path.
SignedPerm v_of(const Path& p, const SignedPerm& u, Type t);

// u.lambda mod (h+1). Throws InvalidLabelling.
TorusElement psi(const VertPath& vp, Type t);

struct Canonical {
  std::vector<int> lambda;
  SignedPerm u;
};
// The unique (lambda, u) with u.lambda = x and u.J(lambda) positive.
Canonical canonicalize(const TorusElement& x);
VertPath psi_inverse(const TorusElement& x);

// All vertically labelled paths in path order, labels in window order.
// Throws CapExceeded when (h+1)^n exceeds the cap.
void for_each_vert(Type t, int n, const std::function<void(const VertPath&)>& fn);

}  // namespace zetakit
