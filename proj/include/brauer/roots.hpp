// Type A_t root combinatorics: positive roots eps_i - eps_j, admissible sets
// (mutually orthogonal positive roots = diagram tops), the monoid action on
// admissible sets, the conjugated cups E_beta and normalized idempotents
// E_hat_B, and the index-reversal symmetry profile.
#pragma once

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "brauer/diagram.hpp"

namespace brauer {

/// Positive root eps_i - eps_j of A_t, stored with i < j.
struct Root {
  int i;
  int j;

  Root(int i_, int j_) : i(i_), j(j_) {
    if (i < 1 || i >= j) throw std::invalid_argument("root requires 1 <= i < j");
  }
  /// Simple root alpha_k = eps_k - eps_{k+1}.
  static Root simple(int k) { return Root(k, k + 1); }

  auto operator<=>(const Root&) const = default;
};

/// Coefficient sum of eps_i - eps_j over the simple roots: j - i.
int height(const Root& r);

/// A set of pairwise orthogonal positive roots of A_t; equivalently the
/// horizontal-strand pattern of a diagram top (a partial matching on 1..t+1).
class AdmissibleSet {
 public:
  explicit AdmissibleSet(int t) : t_(t) {
    if (t < 1) throw std::invalid_argument("t must be >= 1");
  }
  AdmissibleSet(int t, const std::vector<Root>& roots);

  int t() const noexcept { return t_; }
  const std::set<Root>& roots() const noexcept { return roots_; }
  size_t size() const noexcept { return roots_.size(); }
  bool contains(const Root& r) const { return roots_.count(r) > 0; }

  auto operator<=>(const AdmissibleSet&) const = default;

 private:
  int t_;
  std::set<Root> roots_;
};

/// Simple reflection s_i applied to every root, negatives negated back.
AdmissibleSet act_r(int i, const AdmissibleSet& B);

/// The E_i action: B if alpha_i in B; B + {alpha_i} if alpha_i is orthogonal
/// to B; otherwise R_beta R_i B where beta is the root of B meeting {i,i+1}
/// (the one containing i when both indices are met). The diagram action
/// (top_of of E_i times a completion of B) is the authoritative semantics;
/// the two agree, which the tests check exhaustively.
AdmissibleSet act_e(int i, const AdmissibleSet& B);

/// Horizontal strands of the top row as a set of positive roots.
AdmissibleSet top_of(const BrauerDiagram& d);

/// A diagram with top exactly B and no further top strands: leftover top
/// dots go straight to the first bottom dots in increasing order, the
/// remaining bottom dots pair up consecutively.
BrauerDiagram complete(const AdmissibleSet& B);

/// Action of an arbitrary diagram on a top: top_of(multiply(d, complete(B))).
AdmissibleSet diagram_action(const BrauerDiagram& d, const AdmissibleSet& B);

/// Permutation diagram for w in Sym(t+1) (1-based images): top w(j) joined
/// to bottom position j, so that diagram_action matches the natural action
/// of w on roots.
BrauerDiagram permutation_diagram(const std::vector<int>& w);

/// Conjugated cup E_beta = w E_1 w^{-1} for a permutation w with
/// w(alpha_1) = beta; independent of the witness.
BrauerDiagram e_beta(int t, const Root& r);

/// Normalized idempotent: delta^{-|B|} times the product of E_beta over B.
BrauerDiagram e_hat(const AdmissibleSet& B);

/// Orbit structure of B under the index reversal i -> t+2-i: counts of
/// 2-element orbits and fixed roots. Throws std::invalid_argument when B is
/// not stable under the reversal.
std::pair<int, int> symmetry_profile(const AdmissibleSet& B);

}  // namespace brauer
