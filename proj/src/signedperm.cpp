#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>

#include "zetakit/signedperm.hpp"

namespace zetakit {

SignedPerm::SignedPerm(std::vector<int> window) : w_(std::move(window)) {
  const int n = rank();
  std::vector<bool> seen(n + 1, false);
  for (int x : w_) {
    int a = std::abs(x);
    if (a < 1 || a > n || seen[a]) {
      throw Error(ErrorKind::NotBijective,
                  "window " + render() + " is not a signed permutation");
    }
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::vector<int> w;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i < text.size() && text[i] == '[') ++i;
  while (true) {
    skip();
    if (i >= text.size() || text[i] == ']') break;
    std::size_t start = i;
    if (text[i] == '-' || text[i] == '+') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start])))) {
      throw Error(ErrorKind::MalformedToken,
                  "cannot read window '" + std::string(text) + "'");
    }
    w.push_back(std::stoi(std::string(text.substr(start, i - start))));
    skip();
    if (i < text.size() && text[i] == ',') ++i;
  }
  return SignedPerm(std::move(w));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> inv(rank());
  for (int i = 1; i <= rank(); ++i) {
    int x = w_[i - 1];
    inv[std::abs(x) - 1] = x > 0 ? i : -i;
  }
  return SignedPerm(std::move(inv));
}

int SignedPerm::sign_changes() const {
  return static_cast<int>(std::count_if(w_.begin(), w_.end(), [](int x) { return x < 0; }));
}

std::string SignedPerm::render() const {
  std::string out = "[";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w_[i]);
  }
  return out + "]";
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorKind::RankMismatch, "cannot compose ranks " +
                                             std::to_string(a.rank()) + " and " +
                                             std::to_string(b.rank()));
  }
  std::vector<int> w(a.rank());
  for (int i = 1; i <= a.rank(); ++i) w[i - 1] = a(b(i));
  return SignedPerm(std::move(w));
}

std::vector<int> act(const SignedPerm& w, const std::vector<int>& x) {
  if (static_cast<int>(x.size()) != w.rank()) {
    throw Error(ErrorKind::RankMismatch, "vector length does not match rank");
  }
  std::vector<int> y(x.size());
  for (int i = 1; i <= w.rank(); ++i) {
    int wi = w(i);
    y[std::abs(wi) - 1] = wi > 0 ? x[i - 1] : -x[i - 1];
  }
  return y;
}

const std::vector<SignedPerm>& weyl_group(Type t, int n) {
  static std::mutex mu;
  static std::map<std::pair<int, bool>, std::vector<SignedPerm>> cache;
  const bool even = t == Type::D;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find({n, even});
  if (it != cache.end()) return it->second;
  std::vector<SignedPerm> out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int mask = 0; mask < (1 << n); ++mask) {
      if (even && __builtin_popcount(static_cast<unsigned>(mask)) % 2) continue;
      std::vector<int> w(perm);
      for (int i = 0; i < n; ++i) {
        if (mask >> i & 1) w[i] = -w[i];
      }
      out.emplace_back(std::move(w));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return cache.emplace(std::make_pair(n, even), std::move(out)).first->second;
}

}  // namespace zetakit
