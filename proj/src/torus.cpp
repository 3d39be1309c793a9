#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "zetakit/torus.hpp"

namespace zetakit {

namespace {

int pmod(long long x, int m) {
  long long r = x % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

int sum_first(const std::vector<int>& x, int k) {
  return std::accumulate(x.begin(), x.begin() + std::max(k, 0), 0);
}

bool odd(long long x) { return x % 2 != 0; }

}  // namespace

TorusElement TorusElement::reduce(Type t, const std::vector<int>& lift) {
  TorusElement x;
  x.type = t;
  x.mod = torus_modulus(t, static_cast<int>(lift.size()));
  x.coords.resize(lift.size());
  for (std::size_t i = 0; i < lift.size(); ++i) x.coords[i] = pmod(lift[i], x.mod);
  return x;
}

TorusElement act(const SignedPerm& w, const TorusElement& x) {
  return TorusElement::reduce(x.type, act(w, x.coords));
}

PathKind vert_kind(Type t, int n) {
  if (t == Type::D) return PathKind::signed_lattice(n);
  return PathKind::lattice(n, n);
}

int vert_rank(const Path& p, Type t) {
  const PathKind& k = p.kind();
  if (t == Type::D && k.tag == PathKind::SignedLattice) return k.a;
  if ((t == Type::B || t == Type::C) && k.tag == PathKind::Lattice && k.a == k.b) return k.a;
  throw Error(ErrorKind::ShapeMismatch, std::string("path of kind ") + k.name() +
                                            " does not carry the type " + type_letter(t) +
                                            " torus model");
}

std::vector<int> lambda_of_path(const Path& p, Type t) {
  const int n = vert_rank(p, t);
  std::vector<int> pi = east_counts(p);
  if (t == Type::C || n < 2) {
    if (t == Type::D && n >= 1) pi[0] *= p.epsilon();
    return pi;
  }
  std::vector<int> lam = pi;
  const bool even = !odd(sum_first(pi, n - 2));
  const int m = torus_modulus(t, n);
  if (t == Type::D) lam[0] = p.epsilon() * pi[0];
  lam[n - 1] = even ? 2 * pi[n - 1] - pi[n - 2] : m - 2 * pi[n - 1] + pi[n - 2];
  return lam;
}

bool is_representative(const std::vector<int>& lam, Type t) {
  const int n = static_cast<int>(lam.size());
  if (n == 0) return true;
  const long long total = std::accumulate(lam.begin(), lam.end(), 0LL);
  for (int i = 1; i + 1 < n; ++i) {
    if (lam[i] > lam[i + 1]) return false;
  }
  switch (t) {
    case Type::C:
      return lam[0] >= 0 && (n < 2 || lam[0] <= lam[1]) && lam[n - 1] <= n;
    case Type::B:
      if (lam[0] < 0 || (n >= 2 && lam[0] > lam[1]) || odd(total)) return false;
      return n < 2 || lam[n - 2] + lam[n - 1] <= 2 * n + 1;
    case Type::D:
      if (n < 2 || odd(total)) return false;
      // The last bound is only binding for n = 2.
      return std::abs(lam[0]) <= lam[1] && lam[n - 2] + lam[n - 1] <= 2 * n - 1 &&
             lam[n - 1] - lam[0] <= 2 * n - 1;
    case Type::A:
      return false;
  }
  return false;
}

Path path_of_lambda(const std::vector<int>& lam, Type t) {
  const int n = static_cast<int>(lam.size());
  auto fail = [&]() -> Error {
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + std::to_string(lam[i]);
    return Error(ErrorKind::NotRepresentative,
                 s + ") is not an orbit representative of type " + type_letter(t));
  };
  if (t == Type::A || !is_representative(lam, t)) throw fail();
  std::vector<int> pi = lam;
  int eps = 1;
  if (t == Type::D) {
    eps = lam[0] < 0 ? -1 : 1;
    pi[0] = std::abs(lam[0]);
  }
  if (t != Type::C && n >= 2) {
    const bool even = !odd(sum_first(pi, n - 2));
    const int m = torus_modulus(t, n);
    const int twice = even ? lam[n - 1] + pi[n - 2] : m - lam[n - 1] + pi[n - 2];
    if (odd(twice)) throw fail();
    pi[n - 1] = twice / 2;
  }
  const int east = t == Type::D ? n - 1 : n;
  std::string letters;
  int cur = 0;
  for (int x : pi) {
    if (x < cur || x > east) throw fail();
    letters.append(x - cur, 'E');
    letters.push_back('N');
    cur = x;
  }
  letters.append(east - cur, 'E');
  Path p = t == Type::D && !letters.empty() && letters[0] == 'E'
               ? Path(letters, vert_kind(t, n), 1, eps)
               : Path(letters, vert_kind(t, n));
  if (lambda_of_path(p, t) != lam) throw fail();
  return p;
}

std::vector<Root> j_of_lambda(const std::vector<int>& lam, Type t) {
  if (t == Type::A || !is_representative(lam, t)) {
    throw Error(ErrorKind::NotRepresentative, "J is only defined on orbit representatives");
  }
  const int n = static_cast<int>(lam.size());
  std::vector<Root> simple = simple_roots(t, n);
  std::vector<Root> out;
  bool a0 = false;
  switch (t) {
    case Type::B:
    case Type::C: a0 = lam[0] == 0; break;
    case Type::D: a0 = lam[0] == -lam[1]; break;
    case Type::A: break;
  }
  if (a0) out.push_back(simple[0]);
  for (int i = 1; i < n; ++i) {
    if (lam[i - 1] == lam[i]) out.push_back(simple[i]);
  }
  const bool affine = (t == Type::B && n >= 2 && lam[n - 2] + lam[n - 1] == 2 * n + 1) ||
                      (t == Type::D && lam[n - 2] + lam[n - 1] == 2 * n - 1);
  if (affine) {
    std::vector<int> v = highest_root(t, n).coords();
    for (int& x : v) x = -x;
    out.emplace_back(t, v);
  }
  return out;
}

namespace {

int twist_top(const std::vector<int>& lam) {
  const int n = static_cast<int>(lam.size());
  return odd(lam[n - 2] + lam[n - 1]) ? -1 : 1;
}

}  // namespace

bool validate_vert(const VertPath& vp, Type t) {
  const int n = vert_rank(vp.path, t);
  const SignedPerm& v = vp.labels;
  if (v.rank() != n) return false;
  for (int i : rises(vp.path)) {
    if (!(v(i) < v(i + 1))) return false;
  }
  if (t == Type::D) {
    if (vp.path.starts_with("NN") && !(std::abs(v(1)) < v(2))) return false;
    const std::vector<int> lam = lambda_of_path(vp.path, t);
    const int prod = v.sign_changes() % 2 ? -1 : 1;
    return prod == vp.path.epsilon() * twist_top(lam);
  }
  if (vp.path.starts_with("N") && !(v(1) > 0)) return false;
  return true;
}

SignedPerm u_of(const VertPath& vp, Type t) {
  if (t == Type::C) return vp.labels;
  const int n = vert_rank(vp.path, t);
  const std::vector<int> lam = lambda_of_path(vp.path, t);
  std::vector<int> u = vp.labels.window();
  if (n >= 2) u[n - 1] *= twist_top(lam);
  if (t == Type::D) u[0] *= vp.path.epsilon();
  return SignedPerm(std::move(u));
}

SignedPerm v_of(const Path& p, const SignedPerm& u, Type t) {
  // The twist is an involution.
  return u_of(VertPath{p, u}, t);
}

TorusElement psi(const VertPath& vp, Type t) {
  if (!validate_vert(vp, t)) {
    throw Error(ErrorKind::InvalidLabelling, "(" + vp.path.render() + ", " +
                                                 vp.labels.render() +
                                                 ") is not vertically labelled");
  }
  return TorusElement::reduce(t, act(u_of(vp, t), lambda_of_path(vp.path, t)));
}

namespace {

// Lifts of a torus point lying in the box containing every representative.
void lifts(const TorusElement& y, Type t, const std::function<void(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(y.coords.size());
  const int m = y.mod;
  std::vector<std::vector<int>> options(n);
  for (int i = 0; i < n; ++i) {
    const int lo = t == Type::D && i == 0 ? -m : 0;
    const int hi = t == Type::C ? n : m;
    for (int c = y.coords[i] - m; c <= y.coords[i] + m; c += m) {
      if (c >= lo && c <= hi) options[i].push_back(c);
    }
  }
  std::vector<int> cur(n);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(cur);
      return;
    }
    for (int c : options[i]) {
      cur[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

Canonical canonicalize(const TorusElement& x) {
  const Type t = x.type;
  const int n = static_cast<int>(x.coords.size());
  for (const SignedPerm& u : weyl_group(t, n)) {
    TorusElement y = act(u.inverse(), x);
    bool found = false;
    Canonical out;
    lifts(y, t, [&](const std::vector<int>& lam) {
      if (found || !is_representative(lam, t)) return;
      for (const Root& r : j_of_lambda(lam, t)) {
        if (!act(u, r).positive()) return;
      }
      found = true;
      out = {lam, u};
    });
    if (found) return out;
  }
  throw Error(ErrorKind::InvalidArgument, "torus element has no canonical representative");
}

VertPath psi_inverse(const TorusElement& x) {
  Canonical c = canonicalize(x);
  Path p = path_of_lambda(c.lambda, x.type);
  return {p, v_of(p, c.u, x.type)};
}

void for_each_vert(Type t, int n, const std::function<void(const VertPath&)>& fn) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total = total > UINT64_MAX / 64 ? UINT64_MAX : total * torus_modulus(t, n);
  }
  check_cap(total, std::string("Vert(") + type_letter(t) + std::to_string(n) + ")");
  // Labels range over all signed permutations in every type.
  const std::vector<SignedPerm>& labels = weyl_group(Type::B, n);
  for_each_path(vert_kind(t, n), [&](const Path& p) {
    for (const SignedPerm& v : labels) {
      VertPath vp{p, v};
      if (validate_vert(vp, t)) fn(vp);
    }
  });
}

}  // namespace zetakit
