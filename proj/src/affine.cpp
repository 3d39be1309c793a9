#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "zetakit/affine.hpp"

namespace zetakit {

namespace {

// Writes x = a K + b with b in [-n, n].
void split(std::int64_t x, std::int64_t K, std::int64_t& a, std::int64_t& b) {
  std::int64_t n = (K - 1) / 2;
  b = ((x % K) + K) % K;
  if (b > n) b -= K;
  a = (x - b) / K;
}

}  // namespace

AffinePerm::AffinePerm(std::vector<std::int64_t> window, int n)
    : w_(std::move(window)), n_(n) {
  if (static_cast<int>(w_.size()) != n_) {
    throw Error(ErrorKind::RankMismatch, "window length does not match rank");
  }
  std::vector<bool> seen(n_ + 1, false);
  for (std::int64_t x : w_) {
    std::int64_t a, b;
    split(x, period(), a, b);
    std::int64_t m = b < 0 ? -b : b;
    if (m == 0 || seen[m]) {
      throw Error(ErrorKind::NotBijective,
                  "window " + render() + " repeats a residue modulo " +
                      std::to_string(period()));
    }
    seen[m] = true;
  }
}

AffinePerm AffinePerm::identity(int n) {
  std::vector<std::int64_t> w(n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePerm(std::move(w), n);
}

AffinePerm AffinePerm::from_signed(const SignedPerm& s) {
  std::vector<std::int64_t> w(s.window().begin(), s.window().end());
  return AffinePerm(std::move(w), s.rank());
}

std::int64_t AffinePerm::operator()(std::int64_t i) const {
  std::int64_t a, b;
  split(i, period(), a, b);
  std::int64_t v = b > 0 ? w_[b - 1] : (b < 0 ? -w_[-b - 1] : 0);
  return a * period() + v;
}

std::string AffinePerm::render() const {
  std::string out = "[";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w_[i]);
  }
  return out + "]";
}

AffinePerm compose(const AffinePerm& a, const AffinePerm& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::RankMismatch, "cannot compose affine permutations of different rank");
  }
  std::vector<std::int64_t> w(a.rank());
  for (int i = 1; i <= a.rank(); ++i) w[i - 1] = a(b(i));
  return AffinePerm(std::move(w), a.rank());
}

AffinePerm inverse(const AffinePerm& w) {
  const std::int64_t K = w.period();
  std::vector<std::int64_t> inv(w.rank());
  for (int i = 1; i <= w.rank(); ++i) {
    std::int64_t a, b;
    split(w(i), K, a, b);
    std::int64_t pre = i - a * K;  // w(pre) = b
    if (b > 0) inv[b - 1] = pre;
    else inv[-b - 1] = -pre;
  }
  return AffinePerm(std::move(inv), w.rank());
}

AffinePerm translation(const std::vector<int>& q) {
  const int n = static_cast<int>(q.size());
  const std::int64_t K = 2 * n + 1;
  std::vector<std::int64_t> w(n);
  for (int i = 1; i <= n; ++i) w[i - 1] = -static_cast<std::int64_t>(q[i - 1]) * K + i;
  return AffinePerm(std::move(w), n);
}

MuSigma decompose(const AffinePerm& w) {
  const int n = w.rank();
  const std::int64_t K = w.period();
  MuSigma out;
  out.mu.assign(n, 0);
  out.nu.assign(n, 0);
  std::vector<int> sigma(n);
  for (int i = 1; i <= n; ++i) {
    std::int64_t a, b;
    split(w(i), K, a, b);
    sigma[i - 1] = static_cast<int>(b);
    out.nu[i - 1] = static_cast<int>(a);
    out.mu[std::abs(b) - 1] = static_cast<int>(b > 0 ? -a : a);
  }
  out.sigma = SignedPerm(std::move(sigma));
  return out;
}

AffinePerm recompose(const std::vector<int>& mu, const SignedPerm& sigma) {
  return compose(translation(mu), AffinePerm::from_signed(sigma));
}

bool is_grassmannian(const AffinePerm& w, Type t) {
  const auto& v = w.window();
  const int n = w.rank();
  if (n == 0) return true;
  if (t == Type::D) {
    if (v[0] == 0) return false;
    if (n >= 2 && !(std::llabs(v[0]) < v[1])) return false;
  } else if (v[0] <= 0) {
    return false;
  }
  for (int i = t == Type::D ? 1 : 0; i + 1 < n; ++i) {
    if (!(v[i] < v[i + 1])) return false;
  }
  return true;
}

bool in_group(const AffinePerm& w, Type t) {
  if (t == Type::C) return true;
  const std::int64_t K = w.period();
  const std::int64_t n = w.rank();
  std::int64_t amax = 0;
  for (int i = 1; i <= n; ++i) {
    std::int64_t a, b;
    split(w(i), K, a, b);
    amax = std::max(amax, a < 0 ? -a : a);
  }
  const std::int64_t reach = (amax + 2) * K;
  std::int64_t high = 0;
  for (std::int64_t i = n; i >= -reach; --i) {
    if (w(i) > n) ++high;
  }
  if (high % 2) return false;
  if (t == Type::D) {
    std::int64_t neg = 0;
    for (std::int64_t i = 0; i <= reach; ++i) {
      if (w(i) < 0) ++neg;
    }
    if (neg % 2) return false;
  }
  return true;
}

SignedPerm sigma_from_mu(const std::vector<int>& mu, Type t) {
  const int n = static_cast<int>(mu.size());
  const std::int64_t K = 2 * n + 1;
  if (t == Type::B || t == Type::D) {
    long long s = std::accumulate(mu.begin(), mu.end(), 0LL);
    if (s % 2 != 0) {
      throw Error(ErrorKind::LatticeViolation,
                  "coordinate sum must be even in types B and D");
    }
  }
  std::vector<std::int64_t> key(n);
  for (int k = 1; k <= n; ++k) key[k - 1] = std::llabs(mu[k - 1] * K - k);
  const int positives =
      static_cast<int>(std::count_if(mu.begin(), mu.end(), [](int x) { return x > 0; }));
  std::vector<int> sinv(n);
  for (int i = 1; i <= n; ++i) {
    int r = static_cast<int>(std::count_if(key.begin(), key.end(),
                                           [&](std::int64_t v) { return v <= key[i - 1]; }));
    bool positive = mu[i - 1] <= 0;
    if (t == Type::D && r == 1) {
      positive = (mu[i - 1] <= 0) == (positives % 2 == 0);
    }
    sinv[i - 1] = positive ? r : -r;
  }
  return SignedPerm(std::move(sinv)).inverse();
}

std::vector<int> act_on_coroot(const AffinePerm& w, const std::vector<int>& x) {
  MuSigma d = decompose(w);
  std::vector<int> y = act(d.sigma, x);
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += d.mu[i];
  return y;
}

WfData wf_data(Type t, int n) {
  std::vector<int> nu(n);
  std::vector<int> tau(n);
  switch (t) {
    case Type::C:
      for (int i = 1; i <= n; ++i) {
        nu[i - 1] = i;
        tau[i - 1] = -(n + 1 - i);
      }
      break;
    case Type::D: {
      const bool plain = (n - 1) % 4 == 0 || (n - 1) % 4 == 3;
      for (int i = 1; i <= n; ++i) {
        nu[i - 1] = i - 1;
        tau[i - 1] = i;
      }
      if (!plain) {
        nu[n - 1] = n;
        tau[0] = -1;
        tau[n - 1] = -n;
      }
      break;
    }
    case Type::B: {
      const bool plain = n % 4 == 0 || n % 4 == 3;
      for (int i = 1; i <= n; ++i) {
        nu[i - 1] = i;
        tau[i - 1] = i;
      }
      if (!plain) {
        nu[n - 1] = n + 1;
        tau[n - 1] = -n;
      }
      break;
    }
    case Type::A:
      throw Error(ErrorKind::TypeMismatch, "no affine window model for type A");
  }
  return {std::move(nu), SignedPerm(std::move(tau))};
}

AffinePerm w_f(Type t, int n) {
  WfData d = wf_data(t, n);
  return recompose(d.nu, d.tau);
}

std::vector<AffinePerm> affine_generators(Type t, int n) {
  std::vector<AffinePerm> gens;
  auto base = [&] {
    std::vector<std::int64_t> w(n);
    std::iota(w.begin(), w.end(), 1);
    return w;
  };
  auto s0 = base();
  if (t == Type::D && n >= 2) {
    s0[0] = -2;
    s0[1] = -1;
  } else {
    s0[0] = -1;
  }
  gens.emplace_back(s0, n);
  for (int i = 1; i < n; ++i) {
    auto s = base();
    std::swap(s[i - 1], s[i]);
    gens.emplace_back(s, n);
  }
  auto sn = base();
  if (t == Type::C || n < 2) {
    sn[n - 1] = n + 1;
  } else {
    sn[n - 2] = n + 1;
    sn[n - 1] = n + 2;
  }
  gens.emplace_back(sn, n);
  return gens;
}

}  // namespace zetakit
