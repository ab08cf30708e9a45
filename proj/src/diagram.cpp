#include "brauer/diagram.hpp"

#include <algorithm>
#include <deque>

#include <nlohmann/json.hpp>

namespace brauer {

namespace {

void check_t(int t) {
  if (t < 1) throw std::invalid_argument("t must be >= 1, got " + std::to_string(t));
}

void check_node(int t, int i) {
  if (i < 1 || i > t)
    throw std::invalid_argument("node index " + std::to_string(i) +
                                " out of range [1," + std::to_string(t) + "]");
}

}  // namespace

BrauerDiagram::BrauerDiagram(int t, const std::vector<std::pair<int, int>>& pairs,
                             int delta_exp)
    : t_(t), delta_(delta_exp) {
  check_t(t);
  const int n = 2 * (t + 1);
  if (static_cast<int>(pairs.size()) != t + 1)
    throw std::invalid_argument("expected " + std::to_string(t + 1) + " pairs, got " +
                                std::to_string(pairs.size()));
  partner_.assign(static_cast<size_t>(n) + 1, 0);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n)
      throw std::invalid_argument("dot label out of range [1," + std::to_string(n) + "]");
    if (a == b) throw std::invalid_argument("dot " + std::to_string(a) + " paired with itself");
    if (partner_[static_cast<size_t>(a)] != 0 || partner_[static_cast<size_t>(b)] != 0)
      throw std::invalid_argument("dot label appears in two pairs");
    partner_[static_cast<size_t>(a)] = b;
    partner_[static_cast<size_t>(b)] = a;
  }
}

std::vector<std::pair<int, int>> BrauerDiagram::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(t_) + 1);
  for (int a = 1; a <= num_dots(); ++a)
    if (partner_[static_cast<size_t>(a)] > a) out.emplace_back(a, partner_[static_cast<size_t>(a)]);
  return out;  // ascending in a by construction
}

BrauerDiagram identity(int t) {
  check_t(t);
  BrauerDiagram d;
  d.t_ = t;
  d.partner_.assign(2 * static_cast<size_t>(t + 1) + 1, 0);
  for (int j = 1; j <= t + 1; ++j) {
    d.partner_[static_cast<size_t>(j)] = t + 1 + j;
    d.partner_[static_cast<size_t>(t + 1 + j)] = j;
  }
  return d;
}

BrauerDiagram generator_r(int t, int i) {
  check_t(t);
  check_node(t, i);
  BrauerDiagram d = identity(t);
  // top i -> bottom position i+1, top i+1 -> bottom position i
  d.partner_[static_cast<size_t>(i)] = t + 1 + i + 1;
  d.partner_[static_cast<size_t>(t + 1 + i + 1)] = i;
  d.partner_[static_cast<size_t>(i + 1)] = t + 1 + i;
  d.partner_[static_cast<size_t>(t + 1 + i)] = i + 1;
  return d;
}

BrauerDiagram generator_e(int t, int i) {
  check_t(t);
  check_node(t, i);
  BrauerDiagram d = identity(t);
  d.partner_[static_cast<size_t>(i)] = i + 1;
  d.partner_[static_cast<size_t>(i + 1)] = i;
  d.partner_[static_cast<size_t>(t + 1 + i)] = t + 1 + i + 1;
  d.partner_[static_cast<size_t>(t + 1 + i + 1)] = t + 1 + i;
  return d;
}

// Concatenation. Layers: final tops = a's top labels 1..t+1, the glued middle
// layer indexes 1..t+1 (a's bottom position j = b's top dot j), final bottoms
// = b's bottom labels. Every middle node carries exactly one a-edge and one
// b-edge, so strand tracing alternates between the two matchings; components
// that never touch a final dot are closed loops.
BrauerDiagram multiply(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.t_ != b.t_)
    throw std::invalid_argument("cannot multiply diagrams with t=" + std::to_string(a.t_) +
                                " and t=" + std::to_string(b.t_));
  const int t = a.t_;
  const int k = t + 1;

  BrauerDiagram r;
  r.t_ = t;
  r.partner_.assign(2 * static_cast<size_t>(k) + 1, 0);

  std::vector<char> mid_seen(static_cast<size_t>(k) + 1, 0);

  // Endpoint encoding for the trace: tops 1..k, bottoms k+1..2k.
  auto connect = [&](int u, int v) {
    // translate to result labels (result bottom j has label t+1+j already)
    r.partner_[static_cast<size_t>(u)] = v;
    r.partner_[static_cast<size_t>(v)] = u;
  };

  // Trace the strand leaving final endpoint `from`; returns the other final
  // endpoint. Marks middle nodes on the way.
  auto trace = [&](bool from_top, int idx) -> std::pair<bool, int> {
    bool in_a = from_top;
    int x = from_top ? a.partner_[static_cast<size_t>(idx)]
                     : b.partner_[static_cast<size_t>(k + idx)];
    for (;;) {
      if (in_a) {
        if (x <= k) return {true, x};  // reached a final top
        int m = x - k;
        mid_seen[static_cast<size_t>(m)] = 1;
        x = b.partner_[static_cast<size_t>(m)];
        in_a = false;
      } else {
        if (x > k) return {false, x - k};  // reached a final bottom
        int m = x;
        mid_seen[static_cast<size_t>(m)] = 1;
        x = a.partner_[static_cast<size_t>(m + k)];
        in_a = true;
      }
    }
  };

  for (int i = 1; i <= k; ++i) {
    if (r.partner_[static_cast<size_t>(i)] != 0) continue;
    auto [top, j] = trace(true, i);
    connect(i, top ? j : k + j);
  }
  for (int i = 1; i <= k; ++i) {
    if (r.partner_[static_cast<size_t>(k + i)] != 0) continue;
    auto [top, j] = trace(false, i);
    connect(k + i, top ? j : k + j);  // top case cannot occur here (handled above)
  }

  // Unvisited middle nodes sit on closed loops; walk each alternating cycle once.
  int loops = 0;
  for (int m = 1; m <= k; ++m) {
    if (mid_seen[static_cast<size_t>(m)]) continue;
    ++loops;
    int cur = m;
    bool via_b = true;
    while (!mid_seen[static_cast<size_t>(cur)]) {
      mid_seen[static_cast<size_t>(cur)] = 1;
      cur = via_b ? b.partner_[static_cast<size_t>(cur)]
                  : a.partner_[static_cast<size_t>(cur + k)] - k;
      via_b = !via_b;
    }
  }

  r.delta_ = a.delta_ + b.delta_ + loops;
  return r;
}

BrauerDiagram op_involution(const BrauerDiagram& d) {
  const int k = d.t_ + 1;
  auto flip = [&](int x) { return x <= k ? x + k : x - k; };
  BrauerDiagram r;
  r.t_ = d.t_;
  r.delta_ = d.delta_;
  r.partner_.assign(2 * static_cast<size_t>(k) + 1, 0);
  for (int x = 1; x <= 2 * k; ++x)
    r.partner_[static_cast<size_t>(flip(x))] = flip(d.partner_[static_cast<size_t>(x)]);
  return r;
}

std::optional<int> equals_up_to_delta(const BrauerDiagram& a, const BrauerDiagram& b) {
  if (a.t() != b.t())
    throw std::invalid_argument("equals_up_to_delta: mismatched t");
  if (!a.same_matching(b)) return std::nullopt;
  return a.delta_exp() - b.delta_exp();
}

size_t DiagramSet::KeyHash::operator()(const std::vector<int>& v) const noexcept {
  size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

DiagramSet::DiagramSet(int t) : t_(t) { check_t(t); }

bool DiagramSet::contains(const BrauerDiagram& d) const {
  return members_.count(d.matching_key()) > 0;
}

bool DiagramSet::insert(const BrauerDiagram& d) {
  if (d.t() != t_) throw std::invalid_argument("DiagramSet::insert: mismatched t");
  return members_.insert(d.matching_key()).second;
}

std::vector<BrauerDiagram> DiagramSet::members_sorted() const {
  std::vector<std::vector<int>> keys(members_.begin(), members_.end());
  std::sort(keys.begin(), keys.end());
  std::vector<BrauerDiagram> out;
  out.reserve(keys.size());
  for (const auto& key : keys) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 1; a < static_cast<int>(key.size()); ++a)
      if (key[static_cast<size_t>(a)] > a) pairs.emplace_back(a, key[static_cast<size_t>(a)]);
    out.emplace_back(t_, pairs, 0);
  }
  return out;
}

DiagramSet enumerate_monoid(int t) {
  check_t(t);
  std::vector<BrauerDiagram> gens;
  gens.push_back(identity(t));
  for (int i = 1; i <= t; ++i) {
    gens.push_back(generator_r(t, i));
    gens.push_back(generator_e(t, i));
  }

  DiagramSet seen(t);
  std::deque<BrauerDiagram> frontier;
  for (const auto& g : gens)
    if (seen.insert(g)) frontier.push_back(g.with_delta(0));

  while (!frontier.empty()) {
    BrauerDiagram d = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      BrauerDiagram p = multiply(d, g).with_delta(0);
      if (seen.insert(p)) frontier.push_back(std::move(p));
    }
  }
  return seen;
}

std::uint64_t odd_factorial_product(int n) {
  std::uint64_t r = 1;
  for (int j = 1; j <= n; ++j) r *= static_cast<std::uint64_t>(2 * j - 1);
  return r;
}

std::string serialize(const BrauerDiagram& d) {
  nlohmann::ordered_json j;
  j["t"] = d.t();
  j["delta"] = d.delta_exp();
  auto arr = nlohmann::ordered_json::array();
  for (auto [a, b] : d.pairs()) arr.push_back({a, b});
  j["pairs"] = arr;
  return j.dump();
}

BrauerDiagram deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!j.is_object() || !j.contains("t") || !j.contains("delta") || !j.contains("pairs"))
    throw parse_error("diagram object must have keys t, delta, pairs", "$");
  if (!j["t"].is_number_integer()) throw parse_error("t must be an integer", "$.t");
  if (!j["delta"].is_number_integer()) throw parse_error("delta must be an integer", "$.delta");
  if (!j["pairs"].is_array()) throw parse_error("pairs must be an array", "$.pairs");
  const int t = j["t"].get<int>();
  if (t < 1) throw parse_error("t must be >= 1", "$.t");
  std::vector<std::pair<int, int>> pairs;
  size_t idx = 0;
  for (const auto& p : j["pairs"]) {
    std::string at = "$.pairs[" + std::to_string(idx) + "]";
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
      throw parse_error("pair must be [int,int]", at);
    pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    ++idx;
  }
  try {
    return BrauerDiagram(t, pairs, j["delta"].get<int>());
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what(), "$.pairs");
  }
}

}  // namespace brauer
