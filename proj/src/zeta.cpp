#include <algorithm>
#include <cstdlib>

#include "zetakit/affine.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {

namespace {

[[noreturn]] void internal(const std::string& msg) {
  throw Error(ErrorKind::InvalidArgument, "inverse decoding failed: " + msg);
}

int max_abs(const std::vector<int>& mu) {
  int m = 0;
  for (int x : mu) m = std::max(m, std::abs(x));
  return m;
}

// S<-_k^- S->_k^+ for k = top down to 0.
std::string blocks(const std::vector<int>& mu, int top) {
  std::string out;
  for (int k = top; k >= 0; --k) {
    out += segment(Dir::RightToLeft, -1, k, mu);
    out += segment(Dir::LeftToRight, 1, k, mu);
  }
  return out;
}

int rank_for(const Path& p, Type t) {
  if (t != Type::A) return vert_rank(p, t);
  if (!is_dyck(p)) throw Error(ErrorKind::ShapeMismatch, "type A expects a Dyck path");
  return p.kind().b;
}

}  // namespace

std::vector<int> area_vector(const Path& p, Type t) {
  const int n = rank_for(p, t);
  if (t == Type::A) {
    std::vector<int> pi = east_counts(p);
    std::vector<int> mu(n);
    for (int i = 0; i < n; ++i) mu[i] = i - pi[i];
    return mu;
  }
  const std::vector<int> lam = lambda_of_path(p, t);
  WfData wf = wf_data(t, n);
  std::vector<int> diff(n);
  for (int i = 0; i < n; ++i) diff[i] = lam[i] - wf.nu[i];
  return act(wf.tau, diff);
}

Path zeta_path(const Path& p, Type t) {
  const int n = rank_for(p, t);
  const std::vector<int> mu = area_vector(p, t);
  const int top = max_abs(mu) + 1;
  switch (t) {
    case Type::A: {
      std::string s;
      for (int k = 0; k <= top; ++k) s += segment(Dir::LeftToRight, -1, -k, mu);
      return Path(s, PathKind::lattice(n, n));
    }
    case Type::C:
      return Path(blocks(mu, top), PathKind::ballot(2 * n));
    case Type::B: {
      std::string s;
      for (int k = top; k >= 1; --k) {
        s += segment(Dir::RightToLeft, -1, k, mu);
        s += segment(Dir::LeftToRight, 1, k, mu);
      }
      s += segment(Dir::RightToLeft, -1, 0, mu);
      std::string last = "N" + segment(Dir::LeftToRight, 1, 0, mu);
      last.pop_back();
      return Path(s + last, PathKind::ballot(2 * n));
    }
    case Type::D: {
      std::string s = blocks(mu, top);
      s.pop_back();
      const int positives =
          static_cast<int>(std::count_if(mu.begin(), mu.end(), [](int x) { return x > 0; }));
      const int eps = positives % 2 ? -1 : 1;
      int pos = 0;
      for (int i = 0, seen = 0; i < static_cast<int>(s.size()); ++i) {
        if (s[i] == 'N' && ++seen == n) {
          if (i + 1 < static_cast<int>(s.size()) && s[i + 1] == 'E') pos = i + 2;
          break;
        }
      }
      return Path(s, PathKind::signed_ballot(n), pos, pos ? eps : 1);
    }
  }
  return p;
}

SignedPerm reading_word(const VertPath& vp, Type t) {
  const int n = rank_for(vp.path, t);
  const SignedPerm& v = vp.labels;
  if (t != Type::A && !validate_vert(vp, t)) {
    throw Error(ErrorKind::InvalidLabelling, "(" + vp.path.render() + ", " + v.render() +
                                                 ") is not vertically labelled");
  }
  const std::vector<int> mu = area_vector(vp.path, t);
  const int top = max_abs(mu) + 1;
  std::vector<int> word;
  std::vector<int> row;  // source row of each letter
  switch (t) {
    case Type::A:
      for (int i = 0; i <= top; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (mu[j - 1] == i) word.push_back(v(j));
        }
      }
      return SignedPerm(word);
    case Type::C: {
      auto m = [&](int j) { return mu[n - j]; };  // mu_{n+1-j}
      for (int i = 0; i <= n; ++i) {
        for (int j = n; j >= 1; --j) {
          if (m(j) == -i) word.push_back(-v(j));
        }
        for (int j = 1; j <= n; ++j) {
          if (m(j) == i + 1) word.push_back(v(j));
        }
      }
      return SignedPerm(word);
    }
    case Type::B:
    case Type::D:
      for (int i = 0; i <= top; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (mu[j - 1] == -i) {
            word.push_back(v(j));
            row.push_back(j);
          }
        }
        for (int j = n; j >= 1; --j) {
          if (mu[j - 1] == i + 1) {
            word.push_back(-v(j));
            row.push_back(j);
          }
        }
      }
      break;
  }
  auto from_row = [&](int j) -> int& {
    return word[std::find(row.begin(), row.end(), j) - row.begin()];
  };
  const bool even_top = (mu[n - 2] + mu[n - 1]) % 2 == 0;
  if (t == Type::B) {
    if (even_top) from_row(n) = -from_row(n);
    return SignedPerm(word);
  }
  const WfData wf = wf_data(t, n);
  if (even_top) from_row(n) = -from_row(n);
  const bool nu_even = (wf.nu[n - 2] + wf.nu[n - 1]) % 2 == 0;
  // epsilon * (-1)^(1 + nu_{n-1} + nu_n)
  const int bottom = vp.path.epsilon() * (nu_even ? -1 : 1);
  from_row(1) *= bottom;
  const int positives =
      static_cast<int>(std::count_if(mu.begin(), mu.end(), [](int x) { return x > 0; }));
  if (positives % 2) word[0] = -word[0];
  return SignedPerm(word);
}

std::pair<Path, SignedPerm> hl_zeta(const VertPath& vp, Type t) {
  SignedPerm d = reading_word(vp, t);
  return {zeta_path(vp.path, t), d};
}

Path zeta_d_star(const Path& p) {
  const PathKind& k = p.kind();
  if (k.tag != PathKind::Lattice || k.b != k.a + 1) {
    throw Error(ErrorKind::ShapeMismatch, "expected a lattice path with one more North than East step");
  }
  const int n = k.b;
  const bool signed_start = !p.letters().empty() && p.letters()[0] == 'E';
  Path lift(p.letters(), PathKind::signed_lattice(n), signed_start ? 1 : 0, 1);
  return zeta_path(lift, Type::D).star();
}

Bounce bounce_path(const Path& beta) {
  const PathKind& k = beta.kind();
  if (k.tag != PathKind::Ballot || k.a % 2) {
    throw Error(ErrorKind::ShapeMismatch, "bounce path expects a ballot path of even length");
  }
  const int n = k.a / 2;
  Bounce b;
  int x = beta.east_count();
  int y = beta.north_count();
  b.corners.emplace_back(x, y);
  b.alpha.push_back((y - x) / 2);
  while (x > 0) {
    y = x;
    b.corners.emplace_back(x, y);
    const int pos = north_position(beta, y);
    const int nx = static_cast<int>(std::count(beta.letters().begin(),
                                               beta.letters().begin() + pos, 'E'));
    if (nx >= x) internal("bounce path does not move West");
    b.alpha.push_back(x - nx);
    x = nx;
    b.corners.emplace_back(x, y);
  }
  if (y != 0) b.corners.emplace_back(0, 0);
  b.alpha.resize(n + 1, 0);
  return b;
}

namespace {

// Index just past the k-th North step.
std::size_t cut_after_north(const std::string& s, int k) {
  if (k == 0) return 0;
  int seen = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 'N' && ++seen == k) return i + 1;
  }
  internal("segment has too few North steps");
}

}  // namespace

Path inverse_zeta_c(const Path& beta) {
  Bounce b = bounce_path(beta);
  const int n = beta.kind().a / 2;
  const std::vector<int>& alpha = b.alpha;
  // Split into blocks k = n..0.
  std::vector<std::string> block(n + 1);
  std::size_t pos = 0;
  const std::string& s = beta.letters();
  for (int k = n; k >= 0; --k) {
    const int len = (k == 0 ? 2 * alpha[0] : alpha[k]) + (k < n ? alpha[k + 1] : 0);
    if (pos + len > s.size()) internal("block lengths exceed the path");
    block[k] = s.substr(pos, len);
    pos += len;
  }
  if (pos != s.size()) internal("block lengths do not cover the path");

  std::vector<int> seq;
  {
    const std::size_t cut = cut_after_north(block[0], alpha[0]);
    std::string neg(block[0].substr(0, cut));
    std::reverse(neg.begin(), neg.end());
    const std::string plus = block[0].substr(cut);
    std::vector<int> neg_gap(alpha[0] + 1, 0), pos_gap(alpha[0] + 1, 0);
    auto gaps = [](const std::string& word, std::vector<int>& out) {
      int g = 0;
      for (char c : word) {
        if (c == 'N') ++g;
        else if (g < static_cast<int>(out.size())) ++out[g];
        else internal("too many level zero entries");
      }
    };
    gaps(neg, neg_gap);
    gaps(plus, pos_gap);
    for (int gap = 0; gap <= alpha[0]; ++gap) {
      seq.insert(seq.end(), neg_gap[gap], -1);
      seq.insert(seq.end(), pos_gap[gap], 1);
      if (gap < alpha[0]) seq.push_back(0);
    }
  }
  for (int k = 1; k < n; ++k) {
    const int minus_k = static_cast<int>(std::count(seq.begin(), seq.end(), -k));
    const int plus_k = static_cast<int>(std::count(seq.begin(), seq.end(), k));
    const std::size_t cut = cut_after_north(block[k], minus_k);
    std::string neg(block[k].substr(0, cut));
    std::reverse(neg.begin(), neg.end());
    const std::string plus = block[k].substr(cut);
    std::vector<int> after_neg(minus_k, 0), before_pos(plus_k + 1, 0);
    int g = -1;
    for (char c : neg) {
      if (c == 'N') ++g;
      else if (g < 0) internal("deeper entry before its parent");
      else ++after_neg[g];
    }
    if (g + 1 != minus_k) internal("negative segment count mismatch");
    g = 0;
    for (char c : plus) {
      if (c == 'N') ++g;
      else ++before_pos[g];
    }
    if (g != plus_k || before_pos[plus_k] != 0) internal("positive segment count mismatch");
    std::vector<int> next;
    int tn = 0, tp = 0;
    for (int x : seq) {
      if (x == k) next.insert(next.end(), before_pos[tp++], k + 1);
      next.push_back(x);
      if (x == -k) next.insert(next.end(), after_neg[tn++], -(k + 1));
    }
    seq = std::move(next);
  }
  if (static_cast<int>(seq.size()) != n) internal("area vector has the wrong length");
  std::vector<int> lam(n);
  for (int i = 1; i <= n; ++i) lam[i - 1] = i - seq[n - i];
  return path_of_lambda(lam, Type::C);
}

SweepTrace sweep_c_trace(const Path& p) {
  const PathKind& k = p.kind();
  if (k.tag != PathKind::Lattice || k.a != k.b) {
    throw Error(ErrorKind::ShapeMismatch, "sweep map expects a lattice(n,n) path");
  }
  const int n = k.a;
  const std::string& s = p.letters();
  SweepTrace tr;
  int l = 0;
  for (int i = 0; i < 2 * n; ++i) {
    tr.labels.push_back(l);
    l += s[i] == 'N' ? 2 * n + 1 : -2 * n;
  }
  for (int i = 0; i < 2 * n; ++i) {
    const int li = tr.labels[i];
    if (li < 0) tr.steps.emplace_back(s[i], li);
    else if (li > 0) tr.steps.emplace_back(s[i - 1], -li);
    else tr.steps.emplace_back(s[2 * n - 1], -n);
  }
  std::sort(tr.steps.begin(), tr.steps.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  std::string out;
  for (const auto& st : tr.steps) out.push_back(st.first);
  tr.image = Path(out, PathKind::ballot(2 * n));
  return tr;
}

Path sweep_c(const Path& p) { return sweep_c_trace(p).image; }

}  // namespace zetakit
