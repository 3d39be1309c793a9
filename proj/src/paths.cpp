#include <algorithm>
#include <map>
#include <tuple>

#include "zetakit/paths.hpp"

namespace zetakit {

namespace {

[[noreturn]] void shape(const std::string& msg) {
  throw Error(ErrorKind::ShapeViolation, msg);
}

bool ballot_prefixes_ok(const std::string& s) {
  int h = 0;
  for (char c : s) {
    h += c == 'N' ? 1 : -1;
    if (h < 0) return false;
  }
  return true;
}

// 1-based position of the step following the n-th North step, or 0.
int after_nth_north(const std::string& s, int n) {
  int seen = 0;
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    if (s[i] == 'N' && ++seen == n) {
      return i + 1 < static_cast<int>(s.size()) ? i + 2 : 0;
    }
  }
  return 0;
}

}  // namespace

int PathKind::length() const {
  switch (tag) {
    case Lattice: return a + b;
    case Ballot: return a;
    case SignedLattice: return 2 * a - 1;
    case SignedBallot: return 2 * a - 1;
  }
  return 0;
}

std::string PathKind::name() const {
  switch (tag) {
    case Lattice: return "lattice";
    case Ballot: return "ballot";
    case SignedLattice: return "signed_lattice";
    case SignedBallot: return "signed_ballot";
  }
  return "?";
}

Path::Path(std::string letters, PathKind kind, int sign_pos, int sign)
    : letters_(std::move(letters)), kind_(kind), sign_pos_(sign_pos),
      sign_(sign) {
  for (char c : letters_) {
    if (c != 'N' && c != 'E') {
      throw Error(ErrorKind::MalformedToken,
                  std::string("unexpected step letter '") + c + "'");
    }
  }
  if (sign != 1 && sign != -1) shape("sign must be +1 or -1");
  if (sign_pos_ < 0 || sign_pos_ > size()) shape("sign position out of range");
  if (sign_pos_ != 0 && letters_[sign_pos_ - 1] != 'E') {
    shape("only East steps may carry a sign");
  }
  if (size() != kind_.length()) {
    shape("expected " + std::to_string(kind_.length()) + " steps for " +
          kind_.name() + ", got " + std::to_string(size()));
  }
  const int nn = north_count();
  const int ne = east_count();
  switch (kind_.tag) {
    case PathKind::Lattice:
      if (ne != kind_.a || nn != kind_.b) {
        shape("lattice(" + std::to_string(kind_.a) + "," +
              std::to_string(kind_.b) + ") needs " + std::to_string(kind_.a) +
              " East and " + std::to_string(kind_.b) + " North steps");
      }
      if (sign_pos_ != 0) shape("unsigned lattice path carries a sign");
      break;
    case PathKind::Ballot:
      if (!ballot_prefixes_ok(letters_)) shape("ballot prefix condition violated");
      if (sign_pos_ != 0) shape("unsigned ballot path carries a sign");
      break;
    case PathKind::SignedLattice: {
      const int n = kind_.a;
      if (nn != n || ne != n - 1) {
        shape("signed_lattice(" + std::to_string(n) + ") needs " +
              std::to_string(n) + " North and " + std::to_string(n - 1) +
              " East steps");
      }
      const bool starts_east = !letters_.empty() && letters_[0] == 'E';
      if (starts_east != (sign_pos_ == 1)) {
        shape("a signed East step must appear exactly when the path starts with East");
      }
      break;
    }
    case PathKind::SignedBallot: {
      const int n = kind_.a;
      if (!ballot_prefixes_ok(letters_)) shape("ballot prefix condition violated");
      int pos = after_nth_north(letters_, n);
      const bool needs = pos != 0 && letters_[pos - 1] == 'E';
      if (needs != (sign_pos_ != 0) || (needs && sign_pos_ != pos)) {
        shape("the East step after North step " + std::to_string(n) +
              " must be signed, and only it");
      }
      break;
    }
  }
}

Path Path::parse(std::string_view text, PathKind kind) {
  std::string letters;
  int sign_pos = 0;
  int sign = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    if (c == 'N') {
      letters.push_back('N');
    } else if (c == 'E') {
      letters.push_back('E');
      if (i + 1 < text.size() && (text[i + 1] == '+' || text[i + 1] == '-')) {
        if (sign_pos != 0) shape("more than one signed East step");
        sign_pos = static_cast<int>(letters.size());
        sign = text[i + 1] == '+' ? 1 : -1;
        ++i;
      }
    } else {
      throw Error(ErrorKind::MalformedToken,
                  std::string("unexpected character '") + c + "' in path text");
    }
  }
  return Path(std::move(letters), kind, sign_pos, sign);
}

Step Path::step(int i) const {
  if (letters_[i - 1] == 'N') return Step::N;
  if (i == sign_pos_) return sign_ > 0 ? Step::EPlus : Step::EMinus;
  return Step::E;
}

int Path::north_count() const {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'N'));
}

int Path::east_count() const { return size() - north_count(); }

bool Path::starts_with(std::string_view prefix) const {
  return letters_.compare(0, prefix.size(), prefix) == 0;
}

std::string Path::render() const {
  std::string out;
  out.reserve(letters_.size() + 1);
  for (int i = 0; i < size(); ++i) {
    out.push_back(letters_[i]);
    if (i + 1 == sign_pos_) out.push_back(sign_ > 0 ? '+' : '-');
  }
  return out;
}

Path Path::star() const {
  PathKind k = kind_;
  if (k.tag == PathKind::SignedLattice) k = PathKind::lattice(k.a - 1, k.a);
  if (k.tag == PathKind::SignedBallot) k = PathKind::ballot(2 * k.a - 1);
  return Path(letters_, k);
}

std::vector<int> rises(const Path& p) {
  std::vector<int> out;
  const std::string& s = p.letters();
  int k = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (s[i] != 'N') continue;
    ++k;
    if (i + 1 < p.size() && s[i + 1] == 'N') out.push_back(k);
  }
  return out;
}

std::vector<std::pair<int, int>> valleys(const Path& p) {
  std::vector<std::pair<int, int>> out;
  const std::string& s = p.letters();
  int ne = 0, nn = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (s[i] == 'N') {
      ++nn;
      if (i > 0 && s[i - 1] == 'E') out.emplace_back(ne, nn);
    } else {
      ++ne;
    }
  }
  if (p.kind().is_ballot() && !s.empty() && s.back() == 'E') {
    out.emplace_back(ne, nn + 1);
  }
  return out;
}

std::vector<int> east_counts(const Path& p) {
  std::vector<int> out;
  int ne = 0;
  for (char c : p.letters()) {
    if (c == 'N') {
      out.push_back(ne);
    } else {
      ++ne;
    }
  }
  return out;
}

int north_position(const Path& p, int k) {
  int seen = 0;
  for (int i = 0; i < p.size(); ++i) {
    if (p.letters()[i] == 'N' && ++seen == k) return i + 1;
  }
  return 0;
}

std::string segment(Dir dir, int sign, int j, const std::vector<int>& mu) {
  const int north = sign > 0 ? j : -j;
  const int east = sign > 0 ? j + 1 : -j - 1;
  std::string out;
  const int n = static_cast<int>(mu.size());
  for (int t = 0; t < n; ++t) {
    int x = mu[dir == Dir::LeftToRight ? t : n - 1 - t];
    if (x == north) out.push_back('N');
    else if (x == east) out.push_back('E');
  }
  return out;
}

namespace {

struct Walker {
  PathKind kind;
  int total_n = 0;
  int total_e = 0;
  bool ballot = false;
  int signed_rank = 0;  // rank n for signed kinds

  explicit Walker(PathKind k) : kind(k) {
    switch (k.tag) {
      case PathKind::Lattice:
        total_e = k.a;
        total_n = k.b;
        break;
      case PathKind::Ballot:
        ballot = true;
        break;
      case PathKind::SignedLattice:
        total_e = k.a - 1;
        total_n = k.a;
        signed_rank = k.a;
        break;
      case PathKind::SignedBallot:
        ballot = true;
        signed_rank = k.a;
        break;
    }
  }

  bool can(char c, int nn, int ne, int len) const {
    if (len >= kind.length()) return false;
    if (ballot) return c == 'N' || ne + 1 <= nn;
    return c == 'N' ? nn < total_n : ne < total_e;
  }

  // Number of sign choices for an East step taken at this point.
  int east_multiplicity(int nn, int len, bool last_north) const {
    if (kind.tag == PathKind::SignedLattice) return len == 0 ? 2 : 1;
    if (kind.tag == PathKind::SignedBallot) {
      return last_north && nn == signed_rank ? 2 : 1;
    }
    return 1;
  }
};

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
  return a * b;
}

}  // namespace

std::uint64_t path_count(PathKind kind) {
  Walker w(kind);
  const int len = kind.length();
  if (len < 0) return 0;
  // State: (north, east, last step was North).
  std::map<std::tuple<int, int, bool>, std::uint64_t> cur{{{0, 0, false}, 1}};
  for (int step = 0; step < len; ++step) {
    std::map<std::tuple<int, int, bool>, std::uint64_t> next;
    for (const auto& [st, cnt] : cur) {
      auto [nn, ne, ln] = st;
      if (w.can('E', nn, ne, step)) {
        auto m = static_cast<std::uint64_t>(w.east_multiplicity(nn, step, ln));
        auto& slot = next[{nn, ne + 1, false}];
        slot = sat_add(slot, sat_mul(cnt, m));
      }
      if (w.can('N', nn, ne, step)) {
        auto& slot = next[{nn + 1, ne, true}];
        slot = sat_add(slot, cnt);
      }
    }
    cur = std::move(next);
  }
  std::uint64_t total = 0;
  for (const auto& [st, cnt] : cur) total = sat_add(total, cnt);
  return total;
}

void for_each_path(PathKind kind, const std::function<void(const Path&)>& fn) {
  check_cap(path_count(kind), kind.name() + " enumeration");
  Walker w(kind);
  const int len = kind.length();
  std::string buf;
  buf.reserve(len);
  // Depth-first with E before N gives lexicographic order of rendered text;
  // '+' < '-' < 'E' < 'N' in ASCII and the signed slot admits no plain E.
  std::function<void(int, int, int, bool)> rec = [&](int nn, int ne,
                                                     int sign_pos, bool ln) {
    const int pos = static_cast<int>(buf.size());
    if (pos == len) {
      if (sign_pos < 0) {
        fn(Path(buf, kind, -sign_pos, -1));
      } else {
        fn(Path(buf, kind, sign_pos, 1));
      }
      return;
    }
    if (w.can('E', nn, ne, pos)) {
      buf.push_back('E');
      if (w.east_multiplicity(nn, pos, ln) == 2) {
        rec(nn, ne + 1, pos + 1, false);
        rec(nn, ne + 1, -(pos + 1), false);
      } else {
        rec(nn, ne + 1, sign_pos, false);
      }
      buf.pop_back();
    }
    if (w.can('N', nn, ne, pos)) {
      buf.push_back('N');
      rec(nn + 1, ne, sign_pos, true);
      buf.pop_back();
    }
  };
  if (len >= 0) rec(0, 0, 0, false);
}

std::vector<Path> enumerate(PathKind kind) {
  std::vector<Path> out;
  for_each_path(kind, [&](const Path& p) { out.push_back(p); });
  return out;
}

bool is_dyck(const Path& p) {
  return p.kind().tag == PathKind::Lattice && p.kind().a == p.kind().b &&
         ballot_prefixes_ok(p.letters());
}

}  // namespace zetakit
