#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetakit/common.hpp"

namespace zetakit {

// Signed permutation in window notation [w(1),...,w(n)].
class SignedPerm {
 public:
  SignedPerm() = default;
  // Throws NotBijective if |w(i)| is not a permutation of [n].
  explicit SignedPerm(std::vector<int> window);

  static SignedPerm identity(int n);
  static SignedPerm parse(std::string_view text);

  int rank() const { return static_cast<int>(w_.size()); }
  const std::vector<int>& window() const { return w_; }
  // Antisymmetric extension to [-n, n]; w(0) = 0.
  int operator()(int i) const {
    return i > 0 ? w_[i - 1] : (i < 0 ? -w_[-i - 1] : 0);
  }

  SignedPerm inverse() const;
  int sign_changes() const;
  bool is_type_d() const { return sign_changes() % 2 == 0; }

  std::string render() const;

  auto operator<=>(const SignedPerm&) const = default;

 private:
  std::vector<int> w_;
};

// (a o b)(i) = a(b(i)).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);

// (w.x)_{|w(i)|} = sgn(w(i)) x_i.
std::vector<int> act(const SignedPerm& w, const std::vector<int>& x);

// The Weyl group as a list: all signed permutations (B, C) or the even ones
// (D). Cached per (n, even) and returned in a fixed order.
const std::vector<SignedPerm>& weyl_group(Type t, int n);

}  // namespace zetakit
