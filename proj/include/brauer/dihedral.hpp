// The dihedral Coxeter group W(I2^n) of order 2n over generators r0, r1,
// with alternating-word normal forms, the stabilizer subgroups N_i, the
// K_i subgroups, and deterministic left-coset representative systems.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace brauer {

enum class Gen : int { R0 = 0, R1 = 1 };

inline Gen other(Gen g) { return g == Gen::R0 ? Gen::R1 : Gen::R0; }

/// Canonical element of the dihedral group of order 2n: the alternating word
/// [r_start r_other r_start ...] of length len, with len = 0 the identity and
/// the two length-n words identified (stored with start = r0).
class DihedralElement {
 public:
  /// Identity element.
  explicit DihedralElement(int n);
  /// Alternating word of the given start and length, 0 <= len <= n.
  DihedralElement(int n, Gen start, int len);

  static DihedralElement generator(int n, Gen g) { return DihedralElement(n, g, 1); }

  int n() const noexcept { return n_; }
  int length() const noexcept { return len_; }
  bool is_identity() const noexcept { return len_ == 0; }
  /// Start generator; meaningless for the identity.
  Gen start() const noexcept { return start_; }

  std::vector<Gen> letters() const;

  /// "1" for the identity, else the space-separated word, e.g. "r0 r1 r0".
  std::string to_string() const;

  DihedralElement inverse() const;
  /// Word reversal; for a group with involutive generators this is inverse().
  DihedralElement op() const { return inverse(); }

  bool operator==(const DihedralElement& o) const {
    return n_ == o.n_ && len_ == o.len_ && (len_ == 0 || start_ == o.start_);
  }
  bool operator!=(const DihedralElement& o) const { return !(*this == o); }
  /// Deterministic order: by length, then r0-start first.
  bool operator<(const DihedralElement& o) const;

 private:
  int n_;
  Gen start_;
  int len_;
  void canonicalize();
};

/// Product in normal form. Throws std::invalid_argument on mismatched n.
DihedralElement dihedral_multiply(const DihedralElement& a, const DihedralElement& b);

/// Right-multiplication by one generator, in normal form.
DihedralElement append_generator(const DihedralElement& a, Gen g);

/// All 2n elements in canonical order. Requires n >= 5.
std::vector<DihedralElement> enumerate_group(int n);

struct StandardSubgroups {
  std::vector<DihedralElement> N;
  std::vector<DihedralElement> K;
};

/// The stabilizer subgroup N_i of the simple root beta_i and its companion
/// K_i, i in {0,1}. For n odd: N_i = {1, r_i}, K_0 = {1, r_0}, K_1 = {1}.
/// For n = 2m even: N_0 = <r_0, [r1 r0 ...]_{2m-1}> and N_1 = <r_1,
/// [r0 r1 ...]_{2m-1}> of order 4, K_0 = <[r1 r0 ...]_{2m-1}> of order 2,
/// K_1 = {1}.
StandardSubgroups standard_subgroups(int n, int i);

/// A subgroup together with minimal-length left coset representatives.
struct CosetSystem {
  int n;
  std::vector<DihedralElement> subgroup;         // sorted canonically
  std::vector<DihedralElement> representatives;  // sorted canonically
};

/// Left coset representatives for the given subgroup: the length-minimal
/// element of each coset, ties broken toward start = r0. Throws
/// std::invalid_argument when the input is not a subgroup.
CosetSystem coset_representatives(int n, const std::vector<DihedralElement>& subgroup);

}  // namespace brauer
