#include <doctest.h>

#include <map>
#include <random>

#include "zetakit/affine.hpp"

using namespace zetakit;

namespace {

AffinePerm win(std::vector<std::int64_t> w) {
  const int n = static_cast<int>(w.size());
  return AffinePerm(std::move(w), n);
}

using W = std::vector<std::int64_t>;

// Coxeter lengths of all elements up to `radius`, by breadth-first search
// over the simple generators.
std::map<W, int> ball(Type t, int n, int radius) {
  const std::vector<AffinePerm> gens = affine_generators(t, n);
  std::map<W, int> len{{AffinePerm::identity(n).window(), 0}};
  std::vector<AffinePerm> frontier{AffinePerm::identity(n)};
  for (int r = 1; r <= radius; ++r) {
    std::vector<AffinePerm> next;
    for (const AffinePerm& w : frontier) {
      for (const AffinePerm& s : gens) {
        AffinePerm ws = compose(w, s);
        if (len.emplace(ws.window(), r).second) next.push_back(ws);
      }
    }
    frontier = std::move(next);
  }
  return len;
}

}  // namespace

TEST_CASE("translations") {
  CHECK(translation({2, 1, 0, -1, -2, 1}).window() == W{-25, -11, 3, 17, 31, -7});
  CHECK(translation({-1, 0, 0, 0, 1, 0}).window() == W{14, 2, 3, 4, -8, 6});
}

TEST_CASE("window validation") {
  CHECK_NOTHROW(win({-25, -11, 3, 17, 31, -7}));
  CHECK_THROWS_AS(win({1, 1}), Error);
  // -36 is divisible by the period 9.
  CHECK_THROWS_AS(win({-8, -16, -24, -36}), Error);
}

TEST_CASE("decompose") {
  MuSigma c = decompose(win({3, 7, 11, 17, 25, 31}));
  CHECK(c.mu == std::vector<int>{2, 1, 0, -1, -2, 1});
  CHECK(c.sigma.window() == std::vector<int>{3, -6, -2, 4, -1, 5});
  MuSigma d = decompose(win({-2, 3, 4, 6, 8, 14}));
  CHECK(d.mu == std::vector<int>{-1, 0, 0, 0, 1, 0});
  CHECK(d.sigma.window() == std::vector<int>{-2, 3, 4, 6, -5, 1});
  CHECK(recompose(c.mu, c.sigma) == win({3, 7, 11, 17, 25, 31}));
}

TEST_CASE("compositions of the running example") {
  const AffinePerm d = AffinePerm::from_signed(SignedPerm({-2, 1, 3, 4, 6, 5}));
  const AffinePerm wd = win({21, 10, 1, -9, -20, 11});
  const AffinePerm wr = compose(d, wd);
  CHECK(wr.window() == W{20, 10, -2, -9, -21, 12});
  const AffinePerm q = compose(wr, inverse(w_f(Type::C, 6)));
  CHECK(q.window() == W{1, 47, 48, 54, 55, 58});
  std::vector<int> x = act_on_coroot(q, std::vector<int>(6, 0));
  for (int& v : x) v = ((-v) % 13 + 13) % 13;
  CHECK(x == std::vector<int>{0, 4, 4, 13 - 4, 13 - 4, 4});
}

TEST_CASE("grassmannian windows") {
  CHECK(is_grassmannian(win({3, 7, 11, 17, 25, 31}), Type::C));
  CHECK(is_grassmannian(win({-2, 3, 4, 6, 8, 14}), Type::D));
  CHECK_FALSE(is_grassmannian(win({-2, 3, 4, 6, 8, 14}), Type::C));
}

TEST_CASE("sigma from the area vector") {
  CHECK(sigma_from_mu({2, 1, 0, -1, -2, 1}, Type::C).window() == std::vector<int>{3, -6, -2, 4, -1, 5});
  CHECK(sigma_from_mu({-1, 2, 1, 0, -1, 3}, Type::B).window() == std::vector<int>{4, -3, 1, 5, -2, -6});
  CHECK(sigma_from_mu({-1, 0, 0, 0, 1, 0}, Type::D).window() == std::vector<int>{-2, 3, 4, 6, -5, 1});
  CHECK_THROWS_AS(sigma_from_mu({1, 0}, Type::B), Error);
}

TEST_CASE("finite windows of w_f") {
  CHECK(w_f(Type::C, 5).window() == W{50, 40, 30, 20, 10});
  CHECK(w_f(Type::D, 5).window() == W{1, -9, -19, -29, -39});
  CHECK(w_f(Type::D, 6).window() == W{-1, -11, -23, -35, -47, 72});
  CHECK(w_f(Type::B, 5).window() == W{-10, -20, -30, -40, 61});
  CHECK(w_f(Type::B, 4).window() == W{-8, -16, -24, -32});
}

TEST_CASE("type B example with w_f") {
  const AffinePerm wr = win({-1, -4, -12, 29});
  CHECK(compose(wr, inverse(w_f(Type::B, 4))).window() == W{8, 14, 15, 65});
}

TEST_CASE("group membership of generators") {
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 5; ++n) {
      for (const AffinePerm& s : affine_generators(t, n)) {
        CHECK(in_group(s, t));
        CHECK(compose(s, s) == AffinePerm::identity(n));
      }
    }
  }
  // The type C affine generator lies outside the type B group.
  const AffinePerm sn = affine_generators(Type::C, 4).back();
  CHECK_FALSE(in_group(sn, Type::B));
  CHECK_FALSE(in_group(sn, Type::D));
  CHECK_FALSE(in_group(AffinePerm::from_signed(SignedPerm({-1, 2, 3})), Type::D));
}

TEST_CASE("grassmannian elements are minimal in their finite coset") {
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 3; ++n) {
      const int radius = 7;
      const std::map<W, int> len = ball(t, n, radius);
      const std::vector<AffinePerm> gens = affine_generators(t, n);
      for (const auto& [w, l] : len) {
        if (l == radius) continue;
        const AffinePerm a(w, n);
        CHECK(in_group(a, t));
        bool minimal = true;
        for (int i = 0; i < n; ++i) minimal = minimal && len.at(compose(a, gens[i]).window()) > l;
        CAPTURE(a.render());
        CHECK(is_grassmannian(a, t) == minimal);
      }
    }
  }
}

TEST_CASE("decompose and recompose are inverse") {
  std::mt19937 rng(11);
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 6; ++n) {
      const std::vector<AffinePerm> gens = affine_generators(t, n);
      for (int trial = 0; trial < 100; ++trial) {
        AffinePerm w = AffinePerm::identity(n);
        for (int k = 0; k < 20; ++k) w = compose(w, gens[rng() % gens.size()]);
        const MuSigma d = decompose(w);
        CHECK(recompose(d.mu, d.sigma) == w);
        CHECK(compose(w, inverse(w)) == AffinePerm::identity(n));
        CHECK(in_group(w, t));
      }
    }
  }
}

TEST_CASE("sigma_from_mu gives the grassmannian element") {
  std::mt19937 rng(3);
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 6; ++n) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> mu(n);
        int sum = 0;
        for (int& m : mu) sum += (m = static_cast<int>(rng() % 9) - 4);
        if (t != Type::C && sum % 2) mu[0] += 1;
        const AffinePerm w = recompose(mu, sigma_from_mu(mu, t));
        CAPTURE(w.render());
        CHECK(is_grassmannian(w, t));
      }
    }
  }
}
