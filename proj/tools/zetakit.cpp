#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "zetakit/common.hpp"
#include "zetakit/paths.hpp"
#include "zetakit/signedperm.hpp"
#include "zetakit/stats.hpp"
#include "zetakit/torus.hpp"
#include "zetakit/verify.hpp"
#include "zetakit/zeta.hpp"

using namespace zetakit;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitFailed = 1;
constexpr int kExitParse = 2;
constexpr int kExitShape = 3;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedToken:
    case ErrorKind::InvalidArgument:
    case ErrorKind::CapExceeded:
      return kExitParse;
    default:
      return kExitShape;
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int count_letter(const std::string& text, char c) {
  int k = 0;
  for (char x : text) k += x == c;
  return k;
}

PathKind source_kind(const std::string& text, Type t) {
  const int n = count_letter(text, 'N');
  return t == Type::D ? PathKind::signed_lattice(n) : PathKind::lattice(n, n);
}

PathKind ballot_kind(const std::string& text) {
  return PathKind::ballot(count_letter(text, 'N') + count_letter(text, 'E'));
}

struct ZetaArgs {
  std::string type;
  std::string path;
  std::string labels;
  bool inverse = false;
  bool sweep = false;
};

int run_zeta(const ZetaArgs& a) {
  const Type t = parse_type(a.type);
  Json out;
  if (a.inverse) {
    if (t != Type::C) throw Error(ErrorKind::InvalidArgument, "--inverse requires --type C");
    const Path beta = Path::parse(a.path, ballot_kind(a.path));
    const Path pi = inverse_zeta_c(beta);
    out["input"] = beta.render();
    out["type"] = std::string(1, type_letter(t));
    out["inverse"] = pi.render();
    out["area_vector"] = area_vector(pi, t);
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (a.sweep && t != Type::C) throw Error(ErrorKind::InvalidArgument, "--sweep requires --type C");
  const Path p = Path::parse(a.path, source_kind(a.path, t));
  out["input"] = p.render();
  out["type"] = std::string(1, type_letter(t));
  out["area_vector"] = area_vector(p, t);
  out["zeta"] = zeta_path(p, t).render();
  if (!a.labels.empty()) {
    const VertPath vp{p, SignedPerm::parse(a.labels)};
    if (vp.labels.rank() != p.north_count()) {
      throw Error(ErrorKind::RankMismatch, "labels must have one entry per North step");
    }
    out["reading_word"] = reading_word(vp, t).window();
  }
  if (a.sweep) {
    const SweepTrace tr = sweep_c_trace(p);
    Json steps = Json::array();
    for (auto [c, label] : tr.steps) steps.push_back({std::string(1, c), label});
    out["sweep"] = {{"labels", tr.labels}, {"steps", steps}, {"image", tr.image.render()}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

struct VerifyArgs {
  std::string type;
  int n = 0;
  std::string checks;
};

int run_verify(const VerifyArgs& a) {
  const Type t = parse_type(a.type);
  const std::vector<CheckResult> results = run_suite(t, a.n, split_list(a.checks));
  std::cout << report_json(results) << "\n";
  for (const CheckResult& r : results) {
    if (!r.passed) return kExitFailed;
  }
  return 0;
}

struct TableArgs {
  std::string type;
  int n = 0;
  std::string stats;
  std::string out;
};

const std::vector<std::string>& table_stats() {
  static const std::vector<std::string> names = {"area", "dinv", "zeta", "area_vector"};
  return names;
}

std::string render_vector(const std::vector<int>& v) {
  std::string s = "\"[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]\"";
}

int run_table(const TableArgs& a) {
  const Type t = parse_type(a.type);
  if (t == Type::A) throw Error(ErrorKind::InvalidArgument, "table covers types B, C and D");
  if (a.n < 0) throw Error(ErrorKind::InvalidArgument, "--n must be nonnegative");
  const std::vector<std::string> stats = split_list(a.stats);
  for (const std::string& s : stats) {
    if (std::find(table_stats().begin(), table_stats().end(), s) == table_stats().end()) {
      throw Error(ErrorKind::InvalidArgument, "unknown statistic '" + s + "'");
    }
    if (s == "dinv" && t == Type::D) {
      throw Error(ErrorKind::InvalidArgument, "dinv is defined for types B and C");
    }
  }
  std::ofstream file(a.out);
  if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open '" + a.out + "' for writing");
  file << "path";
  for (const std::string& s : stats) file << "," << s;
  file << "\n";
  if (a.n > 0) {
    for_each_path(vert_kind(t, a.n), [&](const Path& p) {
      file << p.render();
      for (const std::string& s : stats) {
        file << ",";
        if (s == "area") file << area(zeta_path(p, t), t);
        else if (s == "dinv") file << (t == Type::C ? dinv_c(p) : dinv_b_experimental(p));
        else if (s == "zeta") file << zeta_path(p, t).render();
        else if (s == "area_vector") file << render_vector(area_vector(p, t));
      }
      file << "\n";
    });
  }
  if (!file) throw Error(ErrorKind::InvalidArgument, "write to '" + a.out + "' failed");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta maps between labelled lattice paths and ballot paths"};
  app.require_subcommand(1);

  ZetaArgs za;
  CLI::App* zeta = app.add_subcommand("zeta", "Apply a zeta map to a path");
  zeta->add_option("--type", za.type, "Root system type: A, B, C or D")->required();
  zeta->add_option("--path", za.path, "Path text, e.g. NEEN or E-ENNE")->required();
  zeta->add_option("--labels", za.labels, "Label window, e.g. [1,-3,2]");
  zeta->add_flag("--inverse", za.inverse, "Invert the type C map");
  zeta->add_flag("--sweep", za.sweep, "Include the type C sweep trace");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Run the exhaustive checks");
  verify->add_option("--type", va.type, "Root system type: B, C or D")->required();
  verify->add_option("--n", va.n, "Largest rank to check")->required();
  verify->add_option("--check", va.checks, "Comma-separated check names");

  TableArgs ta;
  CLI::App* table = app.add_subcommand("table", "Write statistics of every path to CSV");
  table->add_option("--type", ta.type, "Root system type: B, C or D")->required();
  table->add_option("--n", ta.n, "Rank")->required();
  table->add_option("--stats", ta.stats, "Comma-separated statistics: area, dinv, zeta, area_vector")
      ->required();
  table->add_option("--out", ta.out, "Output CSV file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (*zeta) return run_zeta(za);
    if (*verify) return run_verify(va);
    if (*table) return run_table(ta);
  } catch (const Error& e) {
    std::cerr << "error: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  }
  return 0;
}
