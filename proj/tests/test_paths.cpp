#include <doctest.h>

#include "oracles.hpp"
#include "zetakit/paths.hpp"

using namespace zetakit;

TEST_CASE("parse and render") {
  Path p = Path::parse("NEEEENNNNNEE", PathKind::lattice(6, 6));
  CHECK(p.size() == 12);
  CHECK(p.render() == "NEEEENNNNNEE");
  CHECK(p.epsilon() == 1);

  Path d = Path::parse("E-EENNNNNE", PathKind::signed_lattice(5));
  CHECK(d.epsilon() == -1);
  CHECK(d.sign_position() == 1);
  CHECK(d.step(1) == Step::EMinus);
  CHECK(d.render() == "E-EENNNNNE");
  CHECK(d.star().render() == "EEENNNNNE");
  CHECK(d.star().kind() == PathKind::lattice(4, 5));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(Path::parse("NEX", PathKind::ballot(3)), Error);
  try {
    Path::parse("NEX", PathKind::ballot(3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedToken);
  }
  try {
    Path::parse("ENNE", PathKind::ballot(4));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeViolation);
  }
  try {
    Path::parse("NNE", PathKind::lattice(2, 2));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ShapeViolation);
  }
  // An unsigned leading East step is not a signed lattice path.
  CHECK_THROWS_AS(Path::parse("ENN", PathKind::signed_lattice(2)), Error);
}

TEST_CASE("rises") {
  CHECK(rises(Path::parse("NEEEENNNNNEE", PathKind::lattice(6, 6))) == std::vector<int>{2, 3, 4, 5});
  const Path dyck = Path::parse("NNNNEENENEEE", PathKind::lattice(6, 6));
  CHECK(is_dyck(dyck));
  CHECK(rises(dyck) == std::vector<int>{1, 2, 3});
  CHECK(valleys(dyck) == std::vector<std::pair<int, int>>{{2, 5}, {3, 6}});
}

TEST_CASE("valleys of ballot paths") {
  using V = std::vector<std::pair<int, int>>;
  CHECK(valleys(Path::parse("NNENENNENENE", PathKind::ballot(12))) ==
        V{{1, 3}, {2, 4}, {3, 6}, {4, 7}, {5, 8}});
  const Path b = Path::parse("NENNNE", PathKind::ballot(6));
  CHECK(valleys(b) == V{{1, 2}, {2, 5}});
  CHECK(rises(b) == std::vector<int>{2, 3});
  // A lattice path ending in East gets no trailing valley.
  CHECK(valleys(Path::parse("NE", PathKind::lattice(1, 1))).empty());
}

TEST_CASE("east counts") {
  CHECK(east_counts(Path::parse("NEEEENNNNNEE", PathKind::lattice(6, 6))) ==
        std::vector<int>{0, 4, 4, 4, 4, 4});
  CHECK(east_counts(Path::parse("E+NNENENEENN", PathKind::signed_lattice(6))) ==
        std::vector<int>{1, 1, 2, 3, 5, 5});
}

TEST_CASE("segments") {
  const std::vector<int> mu{2, 1, 0, -1, -2, 1};
  CHECK(segment(Dir::RightToLeft, -1, 0, mu) == "EN");
  CHECK(segment(Dir::LeftToRight, 1, 1, mu) == "ENN");
  CHECK(segment(Dir::LeftToRight, 1, 7, mu).empty());
}

TEST_CASE("small enumerations") {
  auto rendered = [](PathKind k) {
    std::vector<std::string> out;
    for (const Path& p : enumerate(k)) out.push_back(p.render());
    return out;
  };
  CHECK(rendered(PathKind::signed_lattice(2)) ==
        std::vector<std::string>{"E+NN", "E-NN", "NEN", "NNE"});
  CHECK(rendered(PathKind::signed_ballot(2)) ==
        std::vector<std::string>{"NEN", "NNE+", "NNE-", "NNN"});
}

TEST_CASE("enumeration agrees with brute force") {
  for (int n = 1; n <= 5; ++n) {
    for (PathKind k : {PathKind::lattice(n, n), PathKind::lattice(n - 1, n), PathKind::ballot(2 * n),
                       PathKind::ballot(2 * n - 1), PathKind::signed_lattice(n),
                       PathKind::signed_ballot(n)}) {
      std::vector<std::string> got;
      for (const Path& p : enumerate(k)) got.push_back(p.render());
      CAPTURE(k.name());
      CHECK(got == oracle::brute_paths(k));
      CHECK(path_count(k) == got.size());
    }
  }
}

TEST_CASE("path counts are binomial") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(path_count(PathKind::lattice(n, n)) == oracle::pascal(2 * n, n));
    CHECK(path_count(PathKind::ballot(2 * n)) == oracle::pascal(2 * n, n));
    CHECK(path_count(PathKind::lattice(n - 1, n)) == oracle::pascal(2 * n - 1, n - 1));
    CHECK(path_count(PathKind::ballot(2 * n - 1)) == oracle::pascal(2 * n - 1, n - 1));
    CHECK(path_count(PathKind::signed_lattice(n)) == path_count(PathKind::signed_ballot(n)));
  }
}

TEST_CASE("rises and valleys agree with their letter patterns") {
  for (const Path& p : enumerate(PathKind::ballot(8))) {
    int north = 0, east = 0;
    std::vector<int> r;
    std::vector<std::pair<int, int>> v;
    const std::string& s = p.letters();
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 'N') {
        ++north;
        if (i + 1 < s.size() && s[i + 1] == 'N') r.push_back(north);
      } else {
        ++east;
        if (i + 1 < s.size() && s[i + 1] == 'N') v.emplace_back(east, north + 1);
        if (i + 1 == s.size()) v.emplace_back(east, north + 1);
      }
    }
    CHECK(rises(p) == r);
    CHECK(valleys(p) == v);
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(for_each_path(PathKind::lattice(30, 30), [](const Path&) {}), Error);
}
