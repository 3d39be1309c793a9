#include <doctest.h>

#include <set>

#include "zetakit/torus.hpp"

using namespace zetakit;

namespace {

Path lat(const char* s, int n) { return Path::parse(s, PathKind::lattice(n, n)); }
Path sig(const char* s, int n) { return Path::parse(s, PathKind::signed_lattice(n)); }

// Linear reflection in a root as a signed permutation.
SignedPerm reflection(const Root& r) {
  const int n = r.rank();
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  std::vector<int> idx;
  for (int i = 0; i < n; ++i) {
    if (r.coords()[i] != 0) idx.push_back(i);
  }
  if (idx.size() == 1) {
    w[idx[0]] = -w[idx[0]];
  } else {
    const int i = idx[0], j = idx[1];
    const int s = r.coords()[i] == r.coords()[j] ? -1 : 1;
    w[i] = s * (j + 1);
    w[j] = s * (i + 1);
  }
  return SignedPerm(w);
}

std::set<SignedPerm> generated(const std::vector<SignedPerm>& gens, int n) {
  std::set<SignedPerm> seen{SignedPerm::identity(n)};
  std::vector<SignedPerm> frontier{SignedPerm::identity(n)};
  while (!frontier.empty()) {
    SignedPerm w = frontier.back();
    frontier.pop_back();
    for (const SignedPerm& s : gens) {
      SignedPerm x = compose(w, s);
      if (seen.insert(x).second) frontier.push_back(x);
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("lambda of a path") {
  CHECK(lambda_of_path(lat("NEEEENNNNNEE", 6), Type::C) == std::vector<int>{0, 4, 4, 4, 4, 4});
  CHECK(lambda_of_path(sig("NNEEEENNN", 5), Type::D) == std::vector<int>{0, 0, 4, 4, 4});
  CHECK(lambda_of_path(sig("E+NNENENEENN", 6), Type::D) == std::vector<int>{1, 1, 2, 3, 5, 6});
  CHECK(lambda_of_path(sig("E-EENNNNNE", 5), Type::D) == std::vector<int>{-3, 3, 3, 3, 6});
  CHECK(lambda_of_path(lat("ENENNNEE", 4), Type::B) == std::vector<int>{1, 2, 2, 7});
  CHECK_THROWS_AS(lambda_of_path(lat("ENENNNEE", 4), Type::D), Error);
}

TEST_CASE("path of lambda") {
  CHECK(path_of_lambda({-3, 3, 3, 3, 6}, Type::D) == sig("E-EENNNNNE", 5));
  CHECK(path_of_lambda({1, 2, 2, 7}, Type::B) == lat("ENENNNEE", 4));
  CHECK_THROWS_AS(path_of_lambda({3, 2}, Type::C), Error);
  CHECK_THROWS_AS(path_of_lambda({1, 2}, Type::B), Error);
}

TEST_CASE("lambda round trip and representative count") {
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 6; ++n) {
      std::set<std::vector<int>> lams;
      for (const Path& p : enumerate(vert_kind(t, n))) {
        const std::vector<int> lam = lambda_of_path(p, t);
        CHECK(is_representative(lam, t));
        CHECK(path_of_lambda(lam, t) == p);
        lams.insert(lam);
      }
      CHECK(lams.size() == path_count(vert_kind(t, n)));
    }
  }
}

TEST_CASE("every representative comes from a path") {
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 4; ++n) {
      const int m = torus_modulus(t, n);
      std::vector<int> lam(n, -m);
      std::uint64_t count = 0;
      while (true) {
        if (is_representative(lam, t)) {
          ++count;
          CHECK_NOTHROW(path_of_lambda(lam, t));
        }
        int i = 0;
        while (i < n && lam[i] == m) lam[i++] = -m;
        if (i == n) break;
        ++lam[i];
      }
      CHECK(count == path_count(vert_kind(t, n)));
    }
  }
}

TEST_CASE("walls of the alcove") {
  const std::vector<Root> j = j_of_lambda({1, 2, 2, 7}, Type::B);
  REQUIRE(j.size() == 2);
  CHECK(j[0].render() == "e3-e2");
  CHECK(j[1].render() == "-e4-e3");
  CHECK_THROWS_AS(j_of_lambda({2, 1}, Type::C), Error);
}

TEST_CASE("walls generate the stabilizer on the torus") {
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 4; ++n) {
      for (const Path& p : enumerate(vert_kind(t, n))) {
        const std::vector<int> lam = lambda_of_path(p, t);
        const TorusElement x = TorusElement::reduce(t, lam);
        std::vector<SignedPerm> gens;
        for (const Root& r : j_of_lambda(lam, t)) gens.push_back(reflection(r));
        std::set<SignedPerm> stab;
        for (const SignedPerm& u : weyl_group(t, n)) {
          if (act(u, x) == x) stab.insert(u);
        }
        CAPTURE(p.render());
        CHECK(generated(gens, n) == stab);
      }
    }
  }
}

TEST_CASE("vertical labellings of type D paths") {
  CHECK(validate_vert({sig("NNEEEENNN", 5), SignedPerm({-3, 4, -2, 1, 5})}, Type::D));
  CHECK(validate_vert({sig("E+NNENENEENN", 6), SignedPerm({1, 3, -2, -5, -4, 6})}, Type::D));
  CHECK(validate_vert({sig("E-EENNNNNE", 5), SignedPerm({-5, -4, 1, 2, 3})}, Type::D));
  CHECK_FALSE(validate_vert({sig("E-EENNNNNE", 5), SignedPerm({5, -4, 1, 2, 3})}, Type::D));
  CHECK(u_of({sig("E+NNENENEENN", 6), SignedPerm({1, 3, -2, -5, -4, 6})}, Type::D) ==
        SignedPerm({1, 3, -2, -5, -4, -6}));
  CHECK(u_of({sig("E-EENNNNNE", 5), SignedPerm({-5, -4, 1, 2, 3})}, Type::D) ==
        SignedPerm({5, -4, 1, 2, -3}));
}

TEST_CASE("torus points of the examples") {
  const VertPath c{lat("NEEEENNNNNEE", 6), SignedPerm({1, -5, -4, 2, 3, 6})};
  CHECK(psi(c, Type::C) == TorusElement::reduce(Type::C, {0, 4, 4, -4, -4, 4}));
  const VertPath b{lat("ENENNNEE", 4), SignedPerm({-1, -4, -3, -2})};
  CHECK(psi(b, Type::B) == TorusElement::reduce(Type::B, {-1, 7, -2, -2}));
  const VertPath d{sig("E-EENNNNNE", 5), SignedPerm({-5, -4, 1, 2, 3})};
  CHECK(psi(d, Type::D) ==
        TorusElement::reduce(Type::D, act(SignedPerm({5, -4, 1, 2, -3}), {-3, 3, 3, 3, 6})));

  const Canonical k = canonicalize(TorusElement::reduce(Type::C, {0, 4, 4, -4, -4, 4}));
  CHECK(k.lambda == std::vector<int>{0, 4, 4, 4, 4, 4});
  CHECK(k.u == SignedPerm({1, -5, -4, 2, 3, 6}));
  CHECK(psi_inverse(psi(b, Type::B)) == b);
  CHECK(psi_inverse(psi(d, Type::D)) == d);
}

TEST_CASE("psi is a bijection onto the torus") {
  for (Type t : {Type::B, Type::C, Type::D}) {
    for (int n = 2; n <= 3; ++n) {
      std::set<std::vector<int>> image;
      std::uint64_t count = 0;
      for_each_vert(t, n, [&](const VertPath& vp) {
        ++count;
        const TorusElement x = psi(vp, t);
        image.insert(x.coords);
        CHECK(psi_inverse(x) == vp);
        CHECK(v_of(vp.path, u_of(vp, t), t) == vp.labels);
      });
      std::uint64_t total = 1;
      for (int i = 0; i < n; ++i) total *= torus_modulus(t, n);
      CHECK(count == total);
      CHECK(image.size() == total);
    }
  }
}

TEST_CASE("invalid labels are rejected") {
  const VertPath bad{lat("NEEEENNNNNEE", 6), SignedPerm({1, 5, -4, 2, 3, 6})};
  CHECK_FALSE(validate_vert(bad, Type::C));
  CHECK_THROWS_AS(psi(bad, Type::C), Error);
}

TEST_CASE("cap on labelled enumeration") {
  CHECK_THROWS_AS(for_each_vert(Type::C, 9, [](const VertPath&) {}), Error);
}
