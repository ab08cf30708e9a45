// Diagrammatic Brauer monoid of type A_t: perfect matchings on 2(t+1) dots
// with an integer delta exponent, concatenation product with loop counting,
// the vertical-flip anti-involution, canonical JSON serialization, and
// exhaustive closure enumeration.
//
// Dot convention (fixed): top dots are 1..t+1 left to right, bottom dots are
// t+2..2t+2, where bottom position j carries label t+1+j.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace brauer {

/// Thrown by deserialize() on malformed or invariant-violating input.
/// `where` describes the offending location (byte offset or JSON path).
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, const std::string& where)
      : std::runtime_error(what + " (at " + where + ")"), where_(where) {}
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
};

class BrauerDiagram {
 public:
  /// Builds a diagram from an explicit pair list. Pairs may be given in any
  /// order; they are stored canonically (smaller label first, sorted by
  /// first label). Throws std::invalid_argument unless the pairs form a
  /// perfect matching on {1..2(t+1)}.
  BrauerDiagram(int t, const std::vector<std::pair<int, int>>& pairs,
                int delta_exp = 0);

  int t() const noexcept { return t_; }
  int delta_exp() const noexcept { return delta_; }
  int num_dots() const noexcept { return 2 * (t_ + 1); }

  /// Matched partner of a dot label (1-based).
  int partner(int label) const { return partner_.at(static_cast<size_t>(label)); }

  /// Canonical pair list: a<b within each pair, sorted by first element.
  std::vector<std::pair<int, int>> pairs() const;

  /// True when the two diagrams have the same matching, delta ignored.
  bool same_matching(const BrauerDiagram& other) const {
    return t_ == other.t_ && partner_ == other.partner_;
  }

  bool operator==(const BrauerDiagram& other) const {
    return same_matching(other) && delta_ == other.delta_;
  }
  bool operator!=(const BrauerDiagram& other) const { return !(*this == other); }

  BrauerDiagram with_delta(int delta_exp) const {
    BrauerDiagram d = *this;
    d.delta_ = delta_exp;
    return d;
  }

  /// Matching as a flat successor array, usable as a hash/set key.
  const std::vector<int>& matching_key() const noexcept { return partner_; }

 private:
  BrauerDiagram() = default;
  friend BrauerDiagram identity(int);
  friend BrauerDiagram generator_r(int, int);
  friend BrauerDiagram generator_e(int, int);
  friend BrauerDiagram multiply(const BrauerDiagram&, const BrauerDiagram&);
  friend BrauerDiagram op_involution(const BrauerDiagram&);

  int t_ = 0;
  int delta_ = 0;
  std::vector<int> partner_;  // 1-based; partner_[0] unused
};

/// Unit of the monoid: every top dot joined straight down.
BrauerDiagram identity(int t);

/// Crossing diagram R_i: top i <-> bottom i+1, top i+1 <-> bottom i. 1 <= i <= t.
BrauerDiagram generator_r(int t, int i);

/// Cup/cap diagram E_i: top i -- top i+1 and bottom i -- bottom i+1. 1 <= i <= t.
BrauerDiagram generator_e(int t, int i);

/// Concatenation product: a on top, a's bottom row glued to b's top row.
/// Each closed loop formed in the middle layer adds one to the delta
/// exponent; exponents of a and b are carried through.
BrauerDiagram multiply(const BrauerDiagram& a, const BrauerDiagram& b);

/// Vertical flip (top label j <-> bottom label t+1+j); delta unchanged.
/// Anti-homomorphism: op(xy) = op(y) op(x).
BrauerDiagram op_involution(const BrauerDiagram& d);

/// If the matchings agree, the exponent difference a.delta - b.delta;
/// absent otherwise.
std::optional<int> equals_up_to_delta(const BrauerDiagram& a,
                                      const BrauerDiagram& b);

/// Deduplicated collection of matchings at a fixed t (delta ignored).
class DiagramSet {
 public:
  explicit DiagramSet(int t);

  int t() const noexcept { return t_; }
  size_t size() const noexcept { return members_.size(); }
  bool contains(const BrauerDiagram& d) const;

  /// Inserts the matching of d; returns true if it was new.
  bool insert(const BrauerDiagram& d);

  /// All members (delta 0), sorted by canonical pair list.
  std::vector<BrauerDiagram> members_sorted() const;

 private:
  struct KeyHash {
    size_t operator()(const std::vector<int>& v) const noexcept;
  };
  int t_;
  std::unordered_set<std::vector<int>, KeyHash> members_;
};

/// Closure of {R_i, E_i : 1 <= i <= t} plus the identity under multiply,
/// deduplicated by matching. Its size is the product of the first t+1
/// positive odd integers; exhaustive runs are practical for t <= 7.
DiagramSet enumerate_monoid(int t);

/// Product of the first n positive odd integers, 1*3*...*(2n-1).
/// The rank of Br(A_t) is odd_factorial_product(t+1).
std::uint64_t odd_factorial_product(int n);

/// Canonical JSON text {"t":..,"delta":..,"pairs":[[a,b],...]} with a<b in
/// each pair, pairs ascending by first element, no whitespace. Byte-identical
/// for equal diagrams.
std::string serialize(const BrauerDiagram& d);

/// Inverse of serialize. Throws parse_error on malformed text or any
/// matching-invariant violation.
BrauerDiagram deserialize(const std::string& text);

}  // namespace brauer
