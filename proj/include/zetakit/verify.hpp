#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zetakit/common.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/rootposet.hpp"
#include "zetakit/signedperm.hpp"
#include "zetakit/torus.hpp"

namespace zetakit {

// Rise of a vertically labelled path, in the form it is matched against.
struct RiseLabel {
  enum Kind { Regular, InitialC, InitialB, AbsoluteD };
  Kind kind = Regular;
  int a = 0;
  int b = 0;
  bool operator==(const RiseLabel&) const = default;
};

// Valley label; `absolute` marks the type D valley whose second entry is
// only known up to sign.
struct ValleyLabel {
  int first = 0;
  int second = 0;
  bool absolute = false;
  bool operator==(const ValleyLabel&) const = default;
};

std::vector<RiseLabel> rise_labels(const VertPath& vp, Type t);
std::vector<ValleyLabel> valley_labels(const Path& beta, const SignedPerm& w, Type t);
bool labels_match(const RiseLabel& r, const ValleyLabel& v);
// Perfect matching between rises and valleys.
bool rise_valley_correspond(const VertPath& vp, Type t);

// [u tau sigma, (tau sigma)^{-1}.J(lambda)].
ParkingFunction uniform_oracle(const VertPath& vp, Type t);
bool anderson_check(const VertPath& vp, Type t);

// All diagonally labelled ballot paths in path order, labels in window order.
void for_each_diag(Type t, int n, const std::function<void(const Path&, const SignedPerm&)>& fn);

struct CheckResult {
  std::string check;
  Type type = Type::C;
  int n = 0;
  bool passed = true;
  std::optional<std::string> counterexample;
};

// Replaceable maps, so the harness can be pointed at a faulty implementation.
struct Hooks {
  std::function<Path(const Path&, Type)> zeta;
};

// Single-rank checks. Each reports the first failing object in enumeration
// order.
CheckResult check_bijectivity_unlabelled(Type t, int n, const Hooks& hooks = {});
CheckResult check_bijectivity_labelled(Type t, int n, const Hooks& hooks = {});
CheckResult check_rise_valley(Type t, int n);
CheckResult check_stats_identity(int n);
CheckResult check_stats_identity_labelled(int n);
CheckResult check_uniform(Type t, int n);
CheckResult check_anderson(Type t, int n);
CheckResult check_counting(Type t, int n);
CheckResult check_sweep(int n);
CheckResult check_inverse_roundtrip(int n);

const std::vector<std::string>& check_names();
// Whether the named check applies to the type (some are type C only).
bool check_applies(const std::string& check, Type t);
int min_rank(Type t);

// Runs the named checks (all applicable ones when empty) for every rank from
// the smallest up to n_max. One result per check. Throws CapExceeded and
// InvalidArgument.
std::vector<CheckResult> run_suite(Type t, int n_max, std::vector<std::string> checks,
                                   const Hooks& hooks = {});

std::string report_json(const std::vector<CheckResult>& results);

}  // namespace zetakit
