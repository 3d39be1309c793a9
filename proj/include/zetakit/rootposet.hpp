#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetakit/common.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/signedperm.hpp"

namespace zetakit {

// A root of type B, C or D as an integer coordinate vector.
class Root {
 public:
  enum Kind { Difference, Sum, Short, Long };

  Root() = default;
  // Throws InvalidArgument if `v` is not a root of the type.
  Root(Type t, std::vector<int> v);

  static Root parse(Type t, int n, std::string_view text);

  Type type() const { return type_; }
  int rank() const { return static_cast<int>(v_.size()); }
  const std::vector<int>& coords() const { return v_; }
  bool positive() const;
  Kind kind() const;

  // Renders e5-e3, e3+e1, 2e2, e3; negative roots as -e4-e3 and so on.
  std::string render() const;

  bool operator==(const Root& o) const { return type_ == o.type_ && v_ == o.v_; }
  // Canonical order by (kind, lower index, higher index).
  bool operator<(const Root& o) const;

 private:
  Type type_ = Type::C;
  std::vector<int> v_;
};

bool is_root(Type t, const std::vector<int>& v);
std::vector<Root> positive_roots(Type t, int n);
std::vector<Root> simple_roots(Type t, int n);  // alpha_0, ..., alpha_{n-1}
Root highest_root(Type t, int n);

// Coordinates of v in the simple-root basis alpha_0..alpha_{n-1}.
std::vector<int> simple_coordinates(Type t, const std::vector<int>& v);

// a <= b in the root poset. Throws TypeMismatch across types.
bool poset_leq(const Root& a, const Root& b);
bool is_antichain(const std::vector<Root>& a);

Root act(const SignedPerm& w, const Root& r);

// Rank n read off the ballot path for the type.
int ballot_rank(const Path& beta, Type t);

std::vector<Root> ballot_to_antichain(const Path& beta, Type t);
// Throws NotAntichain if `a` is not the antichain of any ballot path.
Path antichain_to_ballot(std::vector<Root> a, Type t, int n);

bool diag_validate(const Path& beta, const SignedPerm& w, Type t);

struct ParkingFunction {
  SignedPerm w;
  std::vector<Root> antichain;  // sorted
  bool operator==(const ParkingFunction&) const = default;
};

// Throws InvalidLabelling if (beta, w) is not diagonally labelled.
ParkingFunction phi(const Path& beta, const SignedPerm& w, Type t);

std::string render_antichain(const std::vector<Root>& a);

}  // namespace zetakit
