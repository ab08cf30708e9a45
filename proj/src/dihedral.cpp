#include "brauer/dihedral.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace brauer {

namespace {

void check_n(int n) {
  if (n < 5) throw std::invalid_argument("dihedral type I2^n requires n >= 5, got " + std::to_string(n));
}

Gen letter_at(Gen start, int pos) {  // 0-based position in the alternating word
  return (pos % 2 == 0) ? start : other(start);
}

}  // namespace

DihedralElement::DihedralElement(int n) : n_(n), start_(Gen::R0), len_(0) { check_n(n); }

DihedralElement::DihedralElement(int n, Gen start, int len) : n_(n), start_(start), len_(len) {
  check_n(n);
  if (len < 0 || len > n) throw std::invalid_argument("alternating word length must lie in [0,n]");
  canonicalize();
}

void DihedralElement::canonicalize() {
  if (len_ == 0 || len_ == n_) start_ = Gen::R0;
}

std::vector<Gen> DihedralElement::letters() const {
  std::vector<Gen> out;
  out.reserve(static_cast<size_t>(len_));
  for (int p = 0; p < len_; ++p) out.push_back(letter_at(start_, p));
  return out;
}

std::string DihedralElement::to_string() const {
  if (len_ == 0) return "1";
  std::string s;
  for (int p = 0; p < len_; ++p) {
    if (p) s += ' ';
    s += (letter_at(start_, p) == Gen::R0) ? "r0" : "r1";
  }
  return s;
}

DihedralElement DihedralElement::inverse() const {
  if (len_ == 0) return *this;
  // the reverse of an alternating word starts with the original's last letter
  return DihedralElement(n_, letter_at(start_, len_ - 1), len_);
}

bool DihedralElement::operator<(const DihedralElement& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  if (len_ == 0 || len_ == n_) return false;
  return static_cast<int>(start_) < static_cast<int>(o.start_);
}

DihedralElement append_generator(const DihedralElement& a, Gen g) {
  const int n = a.n();
  if (a.length() == 0) return DihedralElement(n, g, 1);

  Gen start = a.start();
  int len = a.length();
  Gen last = letter_at(start, len - 1);
  if (g == last) return DihedralElement(n, start, len - 1);
  if (len < n) return DihedralElement(n, start, len + 1);
  // len == n: switch to the equal-length word with the other start, whose
  // last letter is g, and cancel.
  return DihedralElement(n, other(start), n - 1);
}

DihedralElement dihedral_multiply(const DihedralElement& a, const DihedralElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("dihedral_multiply: mismatched n");
  DihedralElement acc = a;
  for (Gen g : b.letters()) acc = append_generator(acc, g);
  return acc;
}

std::vector<DihedralElement> enumerate_group(int n) {
  check_n(n);
  std::vector<DihedralElement> out;
  out.emplace_back(n);
  for (int len = 1; len < n; ++len) {
    out.emplace_back(n, Gen::R0, len);
    out.emplace_back(n, Gen::R1, len);
  }
  out.emplace_back(n, Gen::R0, n);
  return out;
}

StandardSubgroups standard_subgroups(int n, int i) {
  check_n(n);
  if (i != 0 && i != 1) throw std::invalid_argument("generator index must be 0 or 1");
  const Gen ri = (i == 0) ? Gen::R0 : Gen::R1;
  const DihedralElement one(n);

  StandardSubgroups s;
  if (n % 2 == 1) {
    s.N = {one, DihedralElement::generator(n, ri)};
    s.K = (i == 0) ? std::vector<DihedralElement>{one, DihedralElement::generator(n, Gen::R0)}
                   : std::vector<DihedralElement>{one};
    return s;
  }
  // n = 2m even: the length n-1 word starting with the other generator is an
  // involution commuting with r_i.
  const DihedralElement w(n, other(ri), n - 1);
  const DihedralElement r = DihedralElement::generator(n, ri);
  s.N = {one, r, w, dihedral_multiply(r, w)};
  std::sort(s.N.begin(), s.N.end());
  s.K = (i == 0) ? std::vector<DihedralElement>{one, w} : std::vector<DihedralElement>{one};
  std::sort(s.K.begin(), s.K.end());
  return s;
}

CosetSystem coset_representatives(int n, const std::vector<DihedralElement>& subgroup) {
  check_n(n);
  if (subgroup.empty()) throw std::invalid_argument("subgroup must be nonempty");
  std::set<DihedralElement> H;
  for (const auto& h : subgroup) {
    if (h.n() != n) throw std::invalid_argument("subgroup element has mismatched n");
    H.insert(h);
  }
  bool has_identity = H.count(DihedralElement(n)) > 0;
  for (const auto& a : H)
    for (const auto& b : H)
      if (!H.count(dihedral_multiply(a, b)))
        throw std::invalid_argument("input is not closed under multiplication");
  if (!has_identity) throw std::invalid_argument("input does not contain the identity");

  // Minimal representative of each left coset gH; DihedralElement's order is
  // exactly the required (length, start-r0-first) tie-break.
  std::map<std::set<DihedralElement>, DihedralElement> cosets;
  for (const auto& g : enumerate_group(n)) {
    std::set<DihedralElement> coset;
    for (const auto& h : H) coset.insert(dihedral_multiply(g, h));
    auto it = cosets.find(coset);
    if (it == cosets.end())
      cosets.emplace(std::move(coset), g);
    else if (g < it->second)
      it->second = g;
  }

  CosetSystem cs;
  cs.n = n;
  cs.subgroup.assign(H.begin(), H.end());
  for (const auto& [coset, rep] : cosets) cs.representatives.push_back(rep);
  std::sort(cs.representatives.begin(), cs.representatives.end());
  return cs;
}

}  // namespace brauer
