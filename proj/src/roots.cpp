#include "brauer/roots.hpp"

#include <algorithm>
#include <numeric>

namespace brauer {

namespace {

Root normalized(int a, int b) { return a < b ? Root(a, b) : Root(b, a); }

// Image of a root under the index transposition (x y), negated to positive.
Root apply_transposition(int x, int y, const Root& r) {
  auto sub = [&](int v) { return v == x ? y : (v == y ? x : v); };
  return normalized(sub(r.i), sub(r.j));
}

void check_node(int t, int i) {
  if (i < 1 || i > t) throw std::invalid_argument("node index out of range");
}

}  // namespace

int height(const Root& r) { return r.j - r.i; }

AdmissibleSet::AdmissibleSet(int t, const std::vector<Root>& roots) : AdmissibleSet(t) {
  std::vector<char> used(static_cast<size_t>(t) + 2, 0);
  for (const Root& r : roots) {
    if (r.j > t + 1) throw std::invalid_argument("root index exceeds t+1");
    if (used[static_cast<size_t>(r.i)] || used[static_cast<size_t>(r.j)])
      throw std::invalid_argument("roots are not mutually orthogonal");
    used[static_cast<size_t>(r.i)] = used[static_cast<size_t>(r.j)] = 1;
    roots_.insert(r);
  }
}

AdmissibleSet act_r(int i, const AdmissibleSet& B) {
  check_node(B.t(), i);
  std::vector<Root> out;
  out.reserve(B.size());
  for (const Root& r : B.roots()) out.push_back(apply_transposition(i, i + 1, r));
  return AdmissibleSet(B.t(), out);
}

AdmissibleSet act_e(int i, const AdmissibleSet& B) {
  check_node(B.t(), i);
  const Root alpha = Root::simple(i);
  if (B.contains(alpha)) return B;

  // Roots of B meeting {i, i+1}; admissibility gives at most one per index.
  const Root* meets_i = nullptr;
  const Root* meets_i1 = nullptr;
  for (const Root& r : B.roots()) {
    if (r.i == i || r.j == i) meets_i = &r;
    if (r.i == i + 1 || r.j == i + 1) meets_i1 = &r;
  }

  if (!meets_i && !meets_i1) {
    std::vector<Root> out(B.roots().begin(), B.roots().end());
    out.push_back(alpha);
    return AdmissibleSet(B.t(), out);
  }

  const Root beta = meets_i ? *meets_i : *meets_i1;
  AdmissibleSet si_B = act_r(i, B);
  std::vector<Root> out;
  out.reserve(si_B.size());
  for (const Root& r : si_B.roots()) out.push_back(apply_transposition(beta.i, beta.j, r));
  return AdmissibleSet(B.t(), out);
}

AdmissibleSet top_of(const BrauerDiagram& d) {
  std::vector<Root> roots;
  for (auto [a, b] : d.pairs())
    if (b <= d.t() + 1) roots.emplace_back(a, b);
  return AdmissibleSet(d.t(), roots);
}

BrauerDiagram complete(const AdmissibleSet& B) {
  const int t = B.t();
  const int k = t + 1;
  std::vector<char> top_used(static_cast<size_t>(k) + 1, 0);
  std::vector<std::pair<int, int>> pairs;
  for (const Root& r : B.roots()) {
    pairs.emplace_back(r.i, r.j);
    top_used[static_cast<size_t>(r.i)] = top_used[static_cast<size_t>(r.j)] = 1;
  }
  int next_bottom = 1;
  for (int a = 1; a <= k; ++a)
    if (!top_used[static_cast<size_t>(a)]) pairs.emplace_back(a, k + next_bottom++);
  while (next_bottom <= k) {
    pairs.emplace_back(k + next_bottom, k + next_bottom + 1);
    next_bottom += 2;
  }
  return BrauerDiagram(t, pairs, 0);
}

AdmissibleSet diagram_action(const BrauerDiagram& d, const AdmissibleSet& B) {
  return top_of(multiply(d, complete(B)));
}

BrauerDiagram permutation_diagram(const std::vector<int>& w) {
  const int k = static_cast<int>(w.size());
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<size_t>(k));
  for (int j = 1; j <= k; ++j) pairs.emplace_back(w[static_cast<size_t>(j - 1)], k + j);
  return BrauerDiagram(k - 1, pairs, 0);
}

BrauerDiagram e_beta(int t, const Root& r) {
  if (r.j > t + 1) throw std::invalid_argument("root index exceeds t+1");
  const int k = t + 1;
  // canonical witness: 1 -> i, 2 -> j, the rest increasing
  std::vector<int> w;
  w.reserve(static_cast<size_t>(k));
  w.push_back(r.i);
  w.push_back(r.j);
  for (int v = 1; v <= k; ++v)
    if (v != r.i && v != r.j) w.push_back(v);
  BrauerDiagram pw = permutation_diagram(w);
  return multiply(multiply(pw, generator_e(t, 1)), op_involution(pw));
}

BrauerDiagram e_hat(const AdmissibleSet& B) {
  BrauerDiagram prod = identity(B.t());
  for (const Root& r : B.roots()) prod = multiply(prod, e_beta(B.t(), r));
  return prod.with_delta(prod.delta_exp() - static_cast<int>(B.size()));
}

std::pair<int, int> symmetry_profile(const AdmissibleSet& B) {
  const int t = B.t();
  auto sigma = [&](const Root& r) { return Root(t + 2 - r.j, t + 2 - r.i); };
  int pairs = 0, fixed = 0;
  for (const Root& r : B.roots()) {
    Root s = sigma(r);
    if (!B.contains(s))
      throw std::invalid_argument("admissible set is not symmetric under index reversal");
    if (s == r)
      ++fixed;
    else if (r < s)
      ++pairs;  // count each 2-orbit once
  }
  return {pairs, fixed};
}

}  // namespace brauer
