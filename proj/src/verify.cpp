#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

#include "zetakit/affine.hpp"
#include "zetakit/stats.hpp"
#include "zetakit/verify.hpp"
#include "zetakit/zeta.hpp"

namespace zetakit {

namespace {

// Whether the n-th North step is followed by a North step or ends the path.
bool nth_north_unfollowed(const Path& beta, int n) {
  int pos = north_position(beta, n);
  return pos != 0 && (pos == beta.size() || beta.letters()[pos] == 'N');
}

std::string show(const VertPath& vp) {
  return "(" + vp.path.render() + ", " + vp.labels.render() + ")";
}

std::uint64_t labelled_count(Type t, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total = total > UINT64_MAX / 64 ? UINT64_MAX : total * torus_modulus(t, n);
  }
  return total;
}

Path apply_zeta(const Hooks& hooks, const Path& p, Type t) {
  return hooks.zeta ? hooks.zeta(p, t) : zeta_path(p, t);
}

CheckResult result(const std::string& name, Type t, int n) {
  CheckResult r;
  r.check = name;
  r.type = t;
  r.n = n;
  return r;
}

void fail(CheckResult& r, const std::string& what) {
  if (!r.passed) return;
  r.passed = false;
  r.counterexample = what;
}

// Injectivity of p -> f(p) over an enumeration into a target of known size.
void check_injective(CheckResult& r, PathKind source, PathKind target,
                     const std::function<Path(const Path&)>& f) {
  std::map<std::string, std::string> seen;
  for_each_path(source, [&](const Path& p) {
    if (!r.passed) return;
    Path img = f(p);
    if (!(img.kind() == target)) {
      fail(r, p.render() + " maps to " + img.render() + " of kind " + img.kind().name());
      return;
    }
    auto [it, fresh] = seen.emplace(img.render(), p.render());
    if (!fresh) fail(r, p.render() + " and " + it->second + " both map to " + img.render());
  });
  if (r.passed && seen.size() != path_count(target)) {
    fail(r, "image has " + std::to_string(seen.size()) + " paths, target has " +
                std::to_string(path_count(target)));
  }
}

}  // namespace

std::vector<RiseLabel> rise_labels(const VertPath& vp, Type t) {
  const SignedPerm& v = vp.labels;
  std::vector<RiseLabel> out;
  const bool nn = vp.path.starts_with("NN");
  for (int i : rises(vp.path)) {
    if (t == Type::D && i == 1 && nn) {
      out.push_back({RiseLabel::AbsoluteD, std::abs(v(1)), v(2)});
    } else {
      out.push_back({RiseLabel::Regular, v(i), v(i + 1)});
    }
  }
  if (vp.path.starts_with("N")) {
    if (t == Type::C) out.push_back({RiseLabel::InitialC, v(1), 0});
    if (t == Type::B) out.push_back({RiseLabel::InitialB, v(1), 0});
  }
  return out;
}

std::vector<ValleyLabel> valley_labels(const Path& beta, const SignedPerm& w, Type t) {
  const int n = ballot_rank(beta, t);
  const int eps = beta.epsilon();
  std::vector<ValleyLabel> out;
  for (auto [i, j] : valleys(beta)) {
    const int first = w(n + 1 - i);
    switch (t) {
      case Type::C:
        out.push_back({first, j <= n ? w(n + 1 - j) : w(n - j), false});
        break;
      case Type::B:
        out.push_back({first, w(n + 1 - j), false});
        break;
      case Type::D:
        if (j < n) out.push_back({first, w(n + 1 - j), false});
        else if (j == n && nth_north_unfollowed(beta, n)) out.push_back({first, std::abs(w(1)), true});
        else if (j == n) out.push_back({first, eps * w(1), false});
        else if (j == n + 1) out.push_back({first, -eps * w(1), false});
        else out.push_back({first, w(n - j), false});
        break;
      case Type::A:
        throw Error(ErrorKind::TypeMismatch, "valley labels are defined for types B, C and D");
    }
  }
  return out;
}

bool labels_match(const RiseLabel& r, const ValleyLabel& v) {
  switch (r.kind) {
    case RiseLabel::Regular:
      return !v.absolute && ((v.first == r.b && v.second == r.a) ||
                             (v.first == -r.a && v.second == -r.b));
    case RiseLabel::InitialC:
      return !v.absolute && v.first == r.a && v.second == -r.a;
    case RiseLabel::InitialB:
      return !v.absolute && v.first == r.a && v.second == 0;
    case RiseLabel::AbsoluteD:
      return v.absolute && v.first == r.b && std::abs(v.second) == r.a;
  }
  return false;
}

bool rise_valley_correspond(const VertPath& vp, Type t) {
  const std::vector<RiseLabel> rs = rise_labels(vp, t);
  auto [beta, w] = hl_zeta(vp, t);
  const std::vector<ValleyLabel> vs = valley_labels(beta, w, t);
  if (rs.size() != vs.size()) return false;
  // Kuhn's augmenting paths; sizes are at most n + 1.
  std::vector<int> owner(vs.size(), -1);
  std::function<bool(std::size_t, std::vector<bool>&)> augment =
      [&](std::size_t r, std::vector<bool>& used) {
        for (std::size_t v = 0; v < vs.size(); ++v) {
          if (used[v] || !labels_match(rs[r], vs[v])) continue;
          used[v] = true;
          if (owner[v] < 0 || augment(owner[v], used)) {
            owner[v] = static_cast<int>(r);
            return true;
          }
        }
        return false;
      };
  for (std::size_t r = 0; r < rs.size(); ++r) {
    std::vector<bool> used(vs.size(), false);
    if (!augment(r, used)) return false;
  }
  return true;
}

ParkingFunction uniform_oracle(const VertPath& vp, Type t) {
  if (!validate_vert(vp, t)) {
    throw Error(ErrorKind::InvalidLabelling, show(vp) + " is not vertically labelled");
  }
  const int n = vert_rank(vp.path, t);
  const std::vector<int> lam = lambda_of_path(vp.path, t);
  const SignedPerm u = u_of(vp, t);
  const SignedPerm sigma = sigma_from_mu(area_vector(vp.path, t), t);
  const SignedPerm ts = compose(wf_data(t, n).tau, sigma);
  const SignedPerm back = ts.inverse();
  ParkingFunction pf;
  pf.w = compose(u, ts);
  for (const Root& r : j_of_lambda(lam, t)) pf.antichain.push_back(act(back, r));
  std::sort(pf.antichain.begin(), pf.antichain.end());
  return pf;
}

bool anderson_check(const VertPath& vp, Type t) {
  const int n = vert_rank(vp.path, t);
  const std::vector<int> mu = area_vector(vp.path, t);
  const SignedPerm sigma = sigma_from_mu(mu, t);
  const AffinePerm wd = inverse(recompose(mu, sigma));
  const AffinePerm wr = compose(AffinePerm::from_signed(reading_word(vp, t)), wd);
  const AffinePerm wf = w_f(t, n);
  const std::vector<int> zero(n, 0);
  std::vector<int> a = act_on_coroot(compose(wr, inverse(wf)), zero);
  for (int& x : a) x = -x;
  if (!(TorusElement::reduce(t, a) == psi(vp, t))) return false;
  return act_on_coroot(compose(wf, inverse(wd)), zero) == lambda_of_path(vp.path, t);
}

void for_each_diag(Type t, int n, const std::function<void(const Path&, const SignedPerm&)>& fn) {
  check_cap(labelled_count(t, n), std::string("Diag(") + type_letter(t) + std::to_string(n) + ")");
  const PathKind kind = t == Type::D ? PathKind::signed_ballot(n) : PathKind::ballot(2 * n);
  const std::vector<SignedPerm>& group = weyl_group(t, n);
  for_each_path(kind, [&](const Path& beta) {
    for (const SignedPerm& w : group) {
      if (diag_validate(beta, w, t)) fn(beta, w);
    }
  });
}

CheckResult check_bijectivity_unlabelled(Type t, int n, const Hooks& hooks) {
  CheckResult r = result("bijectivity", t, n);
  if (t == Type::D) {
    check_injective(r, PathKind::signed_lattice(n), PathKind::signed_ballot(n),
                    [&](const Path& p) { return apply_zeta(hooks, p, t); });
    check_injective(r, PathKind::lattice(n - 1, n), PathKind::ballot(2 * n - 1),
                    [&](const Path& p) { return zeta_d_star(p); });
  } else {
    check_injective(r, PathKind::lattice(n, n), PathKind::ballot(2 * n),
                    [&](const Path& p) { return apply_zeta(hooks, p, t); });
  }
  return r;
}

CheckResult check_bijectivity_labelled(Type t, int n, const Hooks& hooks) {
  CheckResult r = result("bijectivity", t, n);
  std::set<std::pair<std::string, std::vector<int>>> seen;
  std::uint64_t vert = 0;
  for_each_vert(t, n, [&](const VertPath& vp) {
    ++vert;
    if (!r.passed) return;
    const Path beta = apply_zeta(hooks, vp.path, t);
    const SignedPerm w = reading_word(vp, t);
    bool ok = false;
    try {
      ok = diag_validate(beta, w, t);
    } catch (const Error&) {
      ok = false;
    }
    if (!ok) {
      fail(r, show(vp) + " maps to (" + beta.render() + ", " + w.render() +
                  ") which is not diagonally labelled");
      return;
    }
    if (!seen.emplace(beta.render(), w.window()).second) {
      fail(r, show(vp) + " maps to an image already hit");
    }
  });
  std::uint64_t diag = 0;
  for_each_diag(t, n, [&](const Path&, const SignedPerm&) { ++diag; });
  if (r.passed && (vert != diag || vert != labelled_count(t, n))) {
    fail(r, "|Vert| = " + std::to_string(vert) + ", |Diag| = " + std::to_string(diag) +
                ", expected " + std::to_string(labelled_count(t, n)));
  }
  return r;
}

CheckResult check_rise_valley(Type t, int n) {
  CheckResult r = result("rise_valley", t, n);
  for_each_vert(t, n, [&](const VertPath& vp) {
    if (r.passed && !rise_valley_correspond(vp, t)) fail(r, show(vp));
  });
  return r;
}

CheckResult check_stats_identity(int n) {
  CheckResult r = result("stats_identity", Type::C, n);
  for_each_path(PathKind::lattice(n, n), [&](const Path& p) {
    if (!r.passed) return;
    const int d = dinv_c(p);
    const int a = area(zeta_path(p, Type::C), Type::C);
    if (d != a) {
      fail(r, p.render() + ": dinv " + std::to_string(d) + ", area of image " + std::to_string(a));
    }
  });
  return r;
}

CheckResult check_stats_identity_labelled(int n) {
  CheckResult r = result("stats_identity", Type::C, n);
  for_each_vert(Type::C, n, [&](const VertPath& vp) {
    if (!r.passed) return;
    auto [beta, w] = hl_zeta(vp, Type::C);
    const int d = dinv_c_prime(vp);
    const int a = area_prime(beta, w, Type::C);
    if (d != a) {
      fail(r, show(vp) + ": dinv' " + std::to_string(d) + ", area' of image " + std::to_string(a));
    }
  });
  return r;
}

CheckResult check_uniform(Type t, int n) {
  CheckResult r = result("uniform", t, n);
  for_each_vert(t, n, [&](const VertPath& vp) {
    if (!r.passed) return;
    auto [beta, w] = hl_zeta(vp, t);
    const ParkingFunction lhs{w, ballot_to_antichain(beta, t)};
    const ParkingFunction rhs = uniform_oracle(vp, t);
    if (!(lhs == rhs)) {
      fail(r, show(vp) + ": combinatorial [" + lhs.w.render() + ", " +
                  render_antichain(lhs.antichain) + "], uniform [" + rhs.w.render() + ", " +
                  render_antichain(rhs.antichain) + "]");
    }
  });
  return r;
}

CheckResult check_anderson(Type t, int n) {
  CheckResult r = result("anderson", t, n);
  for_each_vert(t, n, [&](const VertPath& vp) {
    if (r.passed && !anderson_check(vp, t)) fail(r, show(vp));
  });
  return r;
}

CheckResult check_counting(Type t, int n) {
  CheckResult r = result("counting", t, n);
  auto expect = [&](PathKind k, std::uint64_t want) {
    std::uint64_t got = 0;
    for_each_path(k, [&](const Path&) { ++got; });
    if (got != want) {
      fail(r, k.name() + ": " + std::to_string(got) + " paths, expected " + std::to_string(want));
    }
  };
  expect(PathKind::lattice(n, n), binomial(2 * n, n));
  expect(PathKind::ballot(2 * n), binomial(2 * n, n));
  expect(PathKind::lattice(n - 1, n), binomial(2 * n - 1, n - 1));
  expect(PathKind::ballot(2 * n - 1), binomial(2 * n - 1, n - 1));
  if (t == Type::D) {
    expect(PathKind::signed_ballot(n), path_count(PathKind::signed_lattice(n)));
    expect(PathKind::signed_lattice(n), path_count(PathKind::signed_ballot(n)));
  }
  std::uint64_t vert = 0, diag = 0;
  for_each_vert(t, n, [&](const VertPath&) { ++vert; });
  for_each_diag(t, n, [&](const Path&, const SignedPerm&) { ++diag; });
  const std::uint64_t want = labelled_count(t, n);
  if (vert != want || diag != want) {
    fail(r, "|Vert| = " + std::to_string(vert) + ", |Diag| = " + std::to_string(diag) +
                ", expected " + std::to_string(want));
  }
  return r;
}

CheckResult check_sweep(int n) {
  CheckResult r = result("sweep_equiv", Type::C, n);
  for_each_path(PathKind::lattice(n, n), [&](const Path& p) {
    if (!r.passed) return;
    const Path a = sweep_c(p);
    const Path b = zeta_path(p, Type::C);
    if (!(a == b)) fail(r, p.render() + ": sweep " + a.render() + ", zeta " + b.render());
  });
  return r;
}

CheckResult check_inverse_roundtrip(int n) {
  CheckResult r = result("inverse_roundtrip", Type::C, n);
  for_each_path(PathKind::ballot(2 * n), [&](const Path& beta) {
    if (!r.passed) return;
    try {
      const Path pi = inverse_zeta_c(beta);
      const Path back = zeta_path(pi, Type::C);
      if (!(back == beta)) fail(r, beta.render() + " decodes to " + pi.render() + " which maps to " + back.render());
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::CapExceeded) throw;
      fail(r, beta.render() + ": " + e.what());
    }
  });
  return r;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "bijectivity", "rise_valley", "stats_identity", "uniform",
      "anderson",    "counting",    "sweep_equiv",    "inverse_roundtrip"};
  return names;
}

bool check_applies(const std::string& check, Type t) {
  if (t == Type::A) return false;
  if (check == "stats_identity" || check == "sweep_equiv" || check == "inverse_roundtrip") {
    return t == Type::C;
  }
  return std::find(check_names().begin(), check_names().end(), check) != check_names().end();
}

int min_rank(Type t) { return t == Type::C ? 1 : 2; }

std::vector<CheckResult> run_suite(Type t, int n_max, std::vector<std::string> checks,
                                   const Hooks& hooks) {
  if (t == Type::A) throw Error(ErrorKind::InvalidArgument, "the suite covers types B, C and D");
  if (checks.empty()) {
    for (const std::string& c : check_names()) {
      if (check_applies(c, t)) checks.push_back(c);
    }
  }
  for (const std::string& c : checks) {
    if (std::find(check_names().begin(), check_names().end(), c) == check_names().end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown check '" + c + "'");
    }
    if (!check_applies(c, t)) {
      throw Error(ErrorKind::InvalidArgument,
                  "check '" + c + "' does not apply to type " + type_letter(t));
    }
  }
  for (int n = min_rank(t); n <= n_max; ++n) {
    check_cap(labelled_count(t, n), std::string("labelled objects of type ") + type_letter(t) +
                                        std::to_string(n));
  }
  std::vector<CheckResult> out;
  for (const std::string& c : checks) {
    CheckResult total = result(c, t, n_max);
    for (int n = min_rank(t); n <= n_max && total.passed; ++n) {
      std::vector<CheckResult> parts;
      if (c == "bijectivity") {
        parts.push_back(check_bijectivity_unlabelled(t, n, hooks));
        parts.push_back(check_bijectivity_labelled(t, n, hooks));
      } else if (c == "rise_valley") {
        parts.push_back(check_rise_valley(t, n));
      } else if (c == "stats_identity") {
        parts.push_back(check_stats_identity(n));
        parts.push_back(check_stats_identity_labelled(n));
      } else if (c == "uniform") {
        parts.push_back(check_uniform(t, n));
      } else if (c == "anderson") {
        parts.push_back(check_anderson(t, n));
      } else if (c == "counting") {
        parts.push_back(check_counting(t, n));
      } else if (c == "sweep_equiv") {
        parts.push_back(check_sweep(n));
      } else if (c == "inverse_roundtrip") {
        parts.push_back(check_inverse_roundtrip(n));
      }
      for (const CheckResult& p : parts) {
        if (!p.passed && total.passed) {
          total.passed = false;
          total.n = n;
          total.counterexample = p.counterexample;
        }
      }
    }
    out.push_back(total);
  }
  return out;
}

std::string report_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const CheckResult& r : results) {
    nlohmann::ordered_json j;
    j["check"] = r.check;
    j["type"] = std::string(1, type_letter(r.type));
    j["n"] = r.n;
    j["passed"] = r.passed;
    if (r.counterexample) j["counterexample"] = *r.counterexample;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace zetakit
