#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetakit/common.hpp"

namespace zetakit {

enum class Step { N, E, EPlus, EMinus };

struct PathKind {
  enum Tag { Lattice, Ballot, SignedLattice, SignedBallot };
  Tag tag = Lattice;
  int a = 0;  // East count (lattice), length (ballot), rank n (signed kinds)
  int b = 0;  // North count (lattice)

  static PathKind lattice(int east, int north) { return {Lattice, east, north}; }
  static PathKind ballot(int len) { return {Ballot, len, 0}; }
  // L•_{n-1,n}: n North steps, n-1 East steps.
  static PathKind signed_lattice(int n) { return {SignedLattice, n, 0}; }
  // B•_{2n-1}.
  static PathKind signed_ballot(int n) { return {SignedBallot, n, 0}; }

  int length() const;
  bool is_ballot() const { return tag == Ballot || tag == SignedBallot; }
  bool is_signed() const { return tag == SignedLattice || tag == SignedBallot; }
  std::string name() const;
  bool operator==(const PathKind&) const = default;
};

// Immutable step sequence. Letters are stored unsigned; the optional sign
// lives beside them so unsigned algorithms can ignore it.
class Path {
 public:
  Path() = default;
  // Validates against `kind`; throws ShapeViolation. `sign_pos` is 1-based
  // (0 for none), `sign` is +1 or -1.
  Path(std::string letters, PathKind kind, int sign_pos = 0, int sign = 1);

  static Path parse(std::string_view text, PathKind kind);

  const std::string& letters() const { return letters_; }
  const PathKind& kind() const { return kind_; }
  int size() const { return static_cast<int>(letters_.size()); }
  Step step(int i) const;  // 1-based
  int sign_position() const { return sign_pos_; }
  int epsilon() const { return sign_pos_ != 0 && sign_ < 0 ? -1 : 1; }
  int north_count() const;
  int east_count() const;
  bool starts_with(std::string_view prefix) const;

  std::string render() const;
  // Sign-stripped view as an unsigned lattice or ballot path.
  Path star() const;

  bool operator==(const Path& o) const {
    return letters_ == o.letters_ && sign_pos_ == o.sign_pos_ &&
           sign_ == o.sign_;
  }
  bool operator<(const Path& o) const { return render() < o.render(); }

 private:
  std::string letters_;
  PathKind kind_;
  int sign_pos_ = 0;
  int sign_ = 1;
};

std::vector<int> rises(const Path& p);
std::vector<std::pair<int, int>> valleys(const Path& p);
std::vector<int> east_counts(const Path& p);

// Index of the k-th North step (1-based position in the step sequence), or 0.
int north_position(const Path& p, int k);

enum class Dir { LeftToRight, RightToLeft };
// Segment word: sign +1 maps entry j to N and j+1 to E; sign -1 maps -j to N
// and -j-1 to E.
std::string segment(Dir dir, int sign, int j, const std::vector<int>& mu);

std::uint64_t path_count(PathKind kind);
// Lexicographic order of the rendered text. Throws CapExceeded.
void for_each_path(PathKind kind, const std::function<void(const Path&)>& fn);
std::vector<Path> enumerate(PathKind kind);

bool is_dyck(const Path& p);

}  // namespace zetakit
