#include "zetakit/stats.hpp"

#include "zetakit/rootposet.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {

namespace {

std::vector<Root> ideal(const Path& beta, Type t) {
  const int n = ballot_rank(beta, t);
  const std::vector<Root> a = ballot_to_antichain(beta, t);
  std::vector<Root> out;
  for (const Root& x : positive_roots(t, n)) {
    bool above = false;
    for (const Root& y : a) {
      if (poset_leq(y, x)) {
        above = true;
        break;
      }
    }
    if (!above) out.push_back(x);
  }
  return out;
}

}  // namespace

int area(const Path& beta, Type t) { return static_cast<int>(ideal(beta, t).size()); }

int area_prime(const Path& beta, const SignedPerm& w, Type t) {
  if (!diag_validate(beta, w, t)) {
    throw Error(ErrorKind::InvalidLabelling,
                "(" + beta.render() + ", " + w.render() + ") is not diagonally labelled");
  }
  int count = 0;
  for (const Root& x : ideal(beta, t)) {
    if (act(w, x).positive()) ++count;
  }
  return count;
}

int dinv_c(const Path& pi) {
  const std::vector<int> mu = area_vector(pi, Type::C);
  const int n = static_cast<int>(mu.size());
  auto m = [&](int i) { return mu[n - i]; };
  int d = 0;
  for (int i = 1; i <= n; ++i) {
    if (m(i) == 0) ++d;
    for (int j = i + 1; j <= n; ++j) {
      d += (m(i) == m(j)) + (m(i) == m(j) + 1) + (m(i) == -m(j)) + (m(i) == -m(j) + 1);
    }
  }
  return d;
}

int dinv_c_prime(const VertPath& vp) {
  if (!validate_vert(vp, Type::C)) {
    throw Error(ErrorKind::InvalidLabelling, "(" + vp.path.render() + ", " +
                                                 vp.labels.render() +
                                                 ") is not vertically labelled");
  }
  const std::vector<int> mu = area_vector(vp.path, Type::C);
  const SignedPerm& u = vp.labels;
  const int n = static_cast<int>(mu.size());
  auto m = [&](int i) { return mu[n - i]; };
  int d = 0;
  for (int i = 1; i <= n; ++i) {
    if (m(i) == 0 && u(i) < 0) ++d;
    for (int j = i + 1; j <= n; ++j) {
      d += (m(i) == m(j) && u(i) < u(j)) + (m(i) == m(j) + 1 && u(i) > u(j)) +
           (m(i) == -m(j) && u(i) < -u(j)) + (m(i) == -m(j) + 1 && u(i) > -u(j));
    }
  }
  return d;
}

int dinv_b_experimental(const Path& pi) {
  const std::vector<int> mu = area_vector(pi, Type::B);
  const int n = static_cast<int>(mu.size());
  int d = 0;
  for (int i = 0; i < n; ++i) {
    if (mu[i] == 0 || mu[i] == 1) ++d;
    for (int j = i + 1; j < n; ++j) {
      d += (mu[i] == mu[j]) + (mu[i] == mu[j] - 1) + (-mu[i] == mu[j]) + (-mu[i] == mu[j] - 1);
    }
  }
  return d;
}

}  // namespace zetakit
