#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <tuple>

#include "zetakit/rootposet.hpp"

namespace zetakit {

namespace {

void require_bcd(Type t) {
  if (t == Type::A) throw Error(ErrorKind::TypeMismatch, "root systems are modelled for types B, C and D");
}

std::tuple<int, int, int> sort_key(const Root& r) {
  const auto& v = r.coords();
  int lo = 0, hi = 0;
  for (int i = 0; i < r.rank(); ++i) {
    if (v[i] == 0) continue;
    if (lo == 0) lo = i + 1;
    hi = i + 1;
  }
  return {static_cast<int>(r.kind()) + (r.positive() ? 0 : 4), lo, hi};
}

}  // namespace

bool is_root(Type t, const std::vector<int>& v) {
  int nz = 0, ones = 0, twos = 0;
  for (int x : v) {
    if (x == 0) continue;
    ++nz;
    if (std::abs(x) == 1) ++ones;
    else if (std::abs(x) == 2) ++twos;
    else return false;
  }
  switch (t) {
    case Type::B: return (nz == 2 && ones == 2) || (nz == 1 && ones == 1);
    case Type::C: return (nz == 2 && ones == 2) || (nz == 1 && twos == 1);
    case Type::D: return nz == 2 && ones == 2;
    case Type::A: return false;
  }
  return false;
}

Root::Root(Type t, std::vector<int> v) : type_(t), v_(std::move(v)) {
  require_bcd(t);
  if (!is_root(t, v_)) {
    std::string s = "(";
    for (std::size_t i = 0; i < v_.size(); ++i) s += (i ? "," : "") + std::to_string(v_[i]);
    throw Error(ErrorKind::InvalidArgument,
                s + ") is not a root of type " + type_letter(t));
  }
}

bool Root::positive() const {
  for (int i = rank() - 1; i >= 0; --i) {
    if (v_[i] != 0) return v_[i] > 0;
  }
  return false;
}

Root::Kind Root::kind() const {
  int nz = 0, prod = 1, two = 0;
  for (int x : v_) {
    if (x == 0) continue;
    ++nz;
    prod *= x;
    if (std::abs(x) == 2) two = 1;
  }
  if (nz == 1) return two ? Long : Short;
  return prod < 0 ? Difference : Sum;
}

std::string Root::render() const {
  std::string out;
  for (int i = rank() - 1; i >= 0; --i) {
    int c = v_[i];
    if (c == 0) continue;
    if (c < 0) out += "-";
    else if (!out.empty()) out += "+";
    if (std::abs(c) == 2) out += "2";
    out += "e" + std::to_string(i + 1);
  }
  return out;
}

bool Root::operator<(const Root& o) const {
  if (type_ != o.type_) return type_ < o.type_;
  return sort_key(*this) < sort_key(o);
}

Root Root::parse(Type t, int n, std::string_view text) {
  std::vector<int> v(n, 0);
  std::size_t i = 0;
  auto bad = [&]() -> Error {
    return Error(ErrorKind::MalformedToken, "cannot read root '" + std::string(text) + "'");
  };
  if (text.empty()) throw bad();
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    }
    int coef = 1;
    if (i < text.size() && text[i] == '2') {
      coef = 2;
      ++i;
    }
    if (i >= text.size() || text[i] != 'e') throw bad();
    ++i;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw bad();
    int idx = std::stoi(std::string(text.substr(start, i - start)));
    if (idx < 1 || idx > n) throw bad();
    v[idx - 1] += sign * coef;
  }
  return Root(t, std::move(v));
}

std::vector<Root> positive_roots(Type t, int n) {
  require_bcd(t);
  std::vector<Root> out;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      std::vector<int> d(n, 0), s(n, 0);
      d[j] = 1;
      d[i] = -1;
      s[j] = 1;
      s[i] = 1;
      out.emplace_back(t, d);
      out.emplace_back(t, s);
    }
    if (t != Type::D) {
      std::vector<int> e(n, 0);
      e[j] = t == Type::C ? 2 : 1;
      out.emplace_back(t, e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Root> simple_roots(Type t, int n) {
  require_bcd(t);
  std::vector<Root> out;
  std::vector<int> a0(n, 0);
  if (t == Type::B) a0[0] = 1;
  if (t == Type::C) a0[0] = 2;
  if (t == Type::D) {
    a0[0] = 1;
    if (n >= 2) a0[1] = 1;
  }
  out.emplace_back(t, a0);
  for (int i = 1; i < n; ++i) {
    std::vector<int> a(n, 0);
    a[i] = 1;
    a[i - 1] = -1;
    out.emplace_back(t, a);
  }
  return out;
}

Root highest_root(Type t, int n) {
  require_bcd(t);
  std::vector<int> v(n, 0);
  if (t == Type::C) {
    v[n - 1] = 2;
  } else {
    v[n - 1] = 1;
    if (n >= 2) v[n - 2] = 1;
  }
  return Root(t, v);
}

std::vector<int> simple_coordinates(Type t, const std::vector<int>& v) {
  const int n = static_cast<int>(v.size());
  std::vector<int> tail(n + 1, 0);  // tail[k] = x_{k+1} + ... + x_n
  for (int k = n - 1; k >= 0; --k) tail[k] = tail[k + 1] + v[k];
  std::vector<int> c(n, 0);
  for (int k = 1; k < n; ++k) c[k] = tail[k];
  switch (t) {
    case Type::B: c[0] = tail[0]; break;
    case Type::C: c[0] = tail[0] / 2; break;
    case Type::D:
      if (n >= 2) {
        c[0] = (v[0] + v[1] + tail[2]) / 2;
        c[1] = (v[1] + tail[2] - v[0]) / 2;
      }
      break;
    case Type::A: require_bcd(t);
  }
  return c;
}

bool poset_leq(const Root& a, const Root& b) {
  if (a.type() != b.type() || a.rank() != b.rank()) {
    throw Error(ErrorKind::TypeMismatch, "cannot compare roots of different types or ranks");
  }
  std::vector<int> d(a.rank());
  for (int i = 0; i < a.rank(); ++i) d[i] = b.coords()[i] - a.coords()[i];
  for (int c : simple_coordinates(a.type(), d)) {
    if (c < 0) return false;
  }
  return true;
}

bool is_antichain(const std::vector<Root>& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j && poset_leq(a[i], a[j])) return false;
    }
  }
  return true;
}

Root act(const SignedPerm& w, const Root& r) {
  return Root(r.type(), act(w, r.coords()));
}

int ballot_rank(const Path& beta, Type t) {
  const PathKind& k = beta.kind();
  if (t == Type::D) {
    if (k.tag != PathKind::SignedBallot) {
      throw Error(ErrorKind::ShapeMismatch, "type D expects a signed ballot path");
    }
    return k.a;
  }
  if ((t != Type::B && t != Type::C) || k.tag != PathKind::Ballot || k.a % 2 != 0) {
    throw Error(ErrorKind::ShapeMismatch,
                std::string("type ") + type_letter(t) + " expects a ballot path of even length");
  }
  return k.a / 2;
}

namespace {

// Whether the n-th North step is followed by a North step (or ends the path).
bool special_north(const Path& beta, int n) {
  int pos = north_position(beta, n);
  return pos != 0 && (pos == beta.size() || beta.letters()[pos] == 'N');
}

std::vector<int> unit(int n, int a, int sa, int b = 0, int sb = 0) {
  std::vector<int> v(n, 0);
  v[a - 1] += sa;
  if (b) v[b - 1] += sb;
  return v;
}

}  // namespace

std::vector<Root> ballot_to_antichain(const Path& beta, Type t) {
  const int n = ballot_rank(beta, t);
  const int eps = beta.epsilon();
  std::vector<Root> out;
  for (auto [i, j] : valleys(beta)) {
    const int a = n + 1 - i;
    switch (t) {
      case Type::C:
        if (j <= n) out.emplace_back(t, unit(n, a, 1, n + 1 - j, -1));
        else out.emplace_back(t, unit(n, a, 1, j - n, 1));
        break;
      case Type::B:
        if (j < n + 1) out.emplace_back(t, unit(n, a, 1, n + 1 - j, -1));
        else if (j == n + 1) out.emplace_back(t, unit(n, a, 1));
        else out.emplace_back(t, unit(n, a, 1, j - n - 1, 1));
        break;
      case Type::D:
        if (j <= n - 1) {
          out.emplace_back(t, unit(n, a, 1, n + 1 - j, -1));
        } else if (j == n) {
          if (special_north(beta, n)) {
            out.emplace_back(t, unit(n, a, 1, 1, -1));
            out.emplace_back(t, unit(n, a, 1, 1, 1));
          } else {
            out.emplace_back(t, unit(n, a, 1, 1, -eps));
          }
        } else if (j == n + 1) {
          out.emplace_back(t, unit(n, a, 1, 1, eps));
        } else {
          out.emplace_back(t, unit(n, a, 1, j - n, 1));
        }
        break;
      case Type::A:
        require_bcd(t);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Rebuilds the step letters of a ballot path of length `len` from valleys.
std::string letters_from_valleys(std::vector<std::pair<int, int>> vs, int len) {
  std::sort(vs.begin(), vs.end());
  std::string s;
  int cur_n = 0, cur_e = 0;
  for (auto [i, j] : vs) {
    if (j - 1 < cur_n || i <= cur_e) return {};
    s.append(j - 1 - cur_n, 'N');
    s.append(i - cur_e, 'E');
    cur_n = j - 1;
    cur_e = i;
    if (static_cast<int>(s.size()) >= len) break;
    s.push_back('N');
    ++cur_n;
  }
  if (static_cast<int>(s.size()) > len) return {};
  s.append(len - s.size(), 'N');
  return s;
}

}  // namespace

Path antichain_to_ballot(std::vector<Root> a, Type t, int n) {
  require_bcd(t);
  std::sort(a.begin(), a.end());
  auto fail = [&]() -> Error {
    return Error(ErrorKind::NotAntichain,
                 render_antichain(a) + " is not the antichain of a ballot path");
  };
  for (const Root& r : a) {
    if (r.type() != t || r.rank() != n || !r.positive()) throw fail();
  }
  const std::vector<int> signs = t == Type::D ? std::vector<int>{1, -1} : std::vector<int>{1};
  for (int eps : signs) {
    std::vector<std::pair<int, int>> vs;
    std::map<int, int> e1_roots;  // higher index -> bitmask of +e1 / -e1 roots
    for (const Root& r : a) {
      const auto& v = r.coords();
      int hi = 0, lo = 0;
      for (int k = n; k >= 1; --k) {
        if (v[k - 1] != 0) {
          if (!hi) hi = k;
          else lo = k;
        }
      }
      const int i = n + 1 - hi;
      if (lo == 0) {
        // e_hi in type B, 2e_hi in type C.
        vs.emplace_back(i, t == Type::B ? n + 1 : n + hi);
        continue;
      }
      const bool sum = v[lo - 1] > 0;
      if (t == Type::D && lo == 1) {
        e1_roots[hi] |= sum ? 2 : 1;
      } else if (!sum) {
        vs.emplace_back(i, n + 1 - lo);
      } else {
        vs.emplace_back(i, t == Type::B ? n + 1 + lo : n + lo);
      }
    }
    for (auto [hi, mask] : e1_roots) {
      const int i = n + 1 - hi;
      if (mask == 3) {
        vs.emplace_back(i, n);
      } else {
        const int s = mask == 2 ? 1 : -1;  // root e_hi + s e1
        vs.emplace_back(i, s == eps ? n + 1 : n);
      }
    }
    const int len = t == Type::D ? 2 * n - 1 : 2 * n;
    std::string letters = letters_from_valleys(vs, len);
    if (letters.empty() && len > 0) continue;
    try {
      Path p;
      if (t == Type::D) {
        int seen = 0, pos = 0;
        for (int k = 0; k < len; ++k) {
          if (letters[k] == 'N' && ++seen == n) {
            pos = k + 2 <= len && letters[k + 1] == 'E' ? k + 2 : 0;
            break;
          }
        }
        p = Path(letters, PathKind::signed_ballot(n), pos, pos ? eps : 1);
      } else {
        p = Path(letters, PathKind::ballot(len));
      }
      if (ballot_to_antichain(p, t) == a) return p;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ShapeViolation) throw;
    }
  }
  throw fail();
}

bool diag_validate(const Path& beta, const SignedPerm& w, Type t) {
  const int n = ballot_rank(beta, t);
  if (w.rank() != n) throw Error(ErrorKind::RankMismatch, "labelling rank does not match path");
  if (t == Type::D && !w.is_type_d()) return false;
  const int eps = beta.epsilon();
  for (auto [i, j] : valleys(beta)) {
    const int top = w(n + 1 - i);
    int bound = 0;
    switch (t) {
      case Type::C:
        bound = j <= n ? w(n + 1 - j) : w(n - j);
        break;
      case Type::B:
        bound = w(n + 1 - j);
        break;
      case Type::D:
        if (j <= n - 1) bound = w(n + 1 - j);
        else if (j == n) bound = special_north(beta, n) ? std::abs(w(1)) : eps * w(1);
        else if (j == n + 1) bound = -eps * w(1);
        else bound = w(n - j);
        break;
      case Type::A:
        require_bcd(t);
    }
    if (!(top > bound)) return false;
  }
  return true;
}

ParkingFunction phi(const Path& beta, const SignedPerm& w, Type t) {
  if (!diag_validate(beta, w, t)) {
    throw Error(ErrorKind::InvalidLabelling,
                "(" + beta.render() + ", " + w.render() + ") is not diagonally labelled");
  }
  return {w, ballot_to_antichain(beta, t)};
}

std::string render_antichain(const std::vector<Root>& a) {
  std::string out = "{";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ",";
    out += a[i].render();
  }
  return out + "}";
}

}  // namespace zetakit
