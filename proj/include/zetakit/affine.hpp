#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zetakit/common.hpp"
#include "zetakit/signedperm.hpp"

namespace zetakit {

// Affine permutation of period K = 2n+1 with w(-i) = -w(i), by its window.
class AffinePerm {
 public:
  AffinePerm() = default;
  // Throws NotBijective.
  AffinePerm(std::vector<std::int64_t> window, int n);

  static AffinePerm identity(int n);
  static AffinePerm from_signed(const SignedPerm& s);

  int rank() const { return n_; }
  std::int64_t period() const { return 2 * n_ + 1; }
  const std::vector<std::int64_t>& window() const { return w_; }
  std::int64_t operator()(std::int64_t i) const;

  std::string render() const;
  bool operator==(const AffinePerm&) const = default;

 private:
  std::vector<std::int64_t> w_;
  int n_ = 0;
};

struct MuSigma {
  std::vector<int> mu;
  std::vector<int> nu;
  SignedPerm sigma;
};

AffinePerm compose(const AffinePerm& a, const AffinePerm& b);
AffinePerm inverse(const AffinePerm& a);

// t_q(i) = -q_i K + i.
AffinePerm translation(const std::vector<int>& q);

// w = t_mu o sigma = sigma o t_{-nu}.
MuSigma decompose(const AffinePerm& w);
AffinePerm recompose(const std::vector<int>& mu, const SignedPerm& sigma);

bool is_grassmannian(const AffinePerm& w, Type t);
bool in_group(const AffinePerm& w, Type t);

// The unique sigma with t_mu o sigma Grassmannian. Throws LatticeViolation
// for an odd coordinate sum in types B and D.
SignedPerm sigma_from_mu(const std::vector<int>& mu, Type t);

// w.x = sigma.x + mu.
std::vector<int> act_on_coroot(const AffinePerm& w, const std::vector<int>& x);

struct WfData {
  std::vector<int> nu;
  SignedPerm tau;
};
WfData wf_data(Type t, int n);
AffinePerm w_f(Type t, int n);

// Simple generators s_0..s_n of the affine group of the given type.
std::vector<AffinePerm> affine_generators(Type t, int n);

}  // namespace zetakit
