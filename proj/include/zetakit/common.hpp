#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace zetakit {

enum class Type { A, B, C, D };

enum class ErrorKind {
  MalformedToken,
  ShapeViolation,
  ShapeMismatch,
  RankMismatch,
  NotBijective,
  LatticeViolation,
  NotRepresentative,
  InvalidLabelling,
  TypeMismatch,
  NotAntichain,
  CapExceeded,
  InvalidArgument,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

char type_letter(Type t);
Type parse_type(std::string_view s);

// Coxeter number h; the finite torus modulus is h + 1.
int coxeter_number(Type t, int n);
inline int torus_modulus(Type t, int n) { return coxeter_number(t, n) + 1; }

// Enumeration cap, read from ZETAKIT_CAP (default 10^7 objects).
std::uint64_t enumeration_cap();
void check_cap(std::uint64_t count, const std::string& what);

std::uint64_t binomial(int n, int k);

}  // namespace zetakit
