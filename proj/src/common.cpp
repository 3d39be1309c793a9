#include <algorithm>
#include <cstdlib>

#include "zetakit/common.hpp"

namespace zetakit {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::ShapeViolation: return "ShapeViolation";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::LatticeViolation: return "LatticeViolation";
    case ErrorKind::NotRepresentative: return "NotRepresentative";
    case ErrorKind::InvalidLabelling: return "InvalidLabelling";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotAntichain: return "NotAntichain";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

char type_letter(Type t) {
  switch (t) {
    case Type::A: return 'A';
    case Type::B: return 'B';
    case Type::C: return 'C';
    case Type::D: return 'D';
  }
  return '?';
}

Type parse_type(std::string_view s) {
  if (s == "A" || s == "a") return Type::A;
  if (s == "B" || s == "b") return Type::B;
  if (s == "C" || s == "c") return Type::C;
  if (s == "D" || s == "d") return Type::D;
  throw Error(ErrorKind::InvalidArgument, "unknown type '" + std::string(s) + "'");
}

int coxeter_number(Type t, int n) {
  switch (t) {
    case Type::A: return n + 1;
    case Type::B:
    case Type::C: return 2 * n;
    case Type::D: return 2 * n - 2;
  }
  return 0;
}

std::uint64_t enumeration_cap() {
  if (const char* env = std::getenv("ZETAKIT_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 10'000'000ULL;
}

void check_cap(std::uint64_t count, const std::string& what) {
  std::uint64_t cap = enumeration_cap();
  if (count > cap) {
    throw Error(ErrorKind::CapExceeded, what + " has " + std::to_string(count) +
                                            " objects, cap is " +
                                            std::to_string(cap));
  }
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  // Saturate instead of overflowing; only used for cap checks and counts.
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > static_cast<unsigned __int128>(UINT64_MAX)) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace zetakit
