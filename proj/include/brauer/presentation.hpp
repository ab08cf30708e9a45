// Machine-readable presentation of the type I2^n algebra: the four-letter
// monomial alphabet, the full instantiated relation lists for even and odd n
// (with named delta-exponent slots where the presentation leaves them
// undetermined), the solved parameter set Theta, and the normal-form
// monomial families.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "brauer/dihedral.hpp"

namespace brauer {

enum class Letter : int { R0 = 0, R1 = 1, E0 = 2, E1 = 3 };

inline Letter to_letter(Gen g) { return g == Gen::R0 ? Letter::R0 : Letter::R1; }
std::string letter_name(Letter l);

/// A monomial over {r0, r1, e0, e1} with an explicit power of delta.
struct GeneratorWord {
  int n = 0;
  std::vector<Letter> letters;
  int delta_exp = 0;

  GeneratorWord() = default;
  GeneratorWord(int n_, std::vector<Letter> ls, int delta = 0)
      : n(n_), letters(std::move(ls)), delta_exp(delta) {}

  /// Space-separated text form, "1" for the empty word.
  std::string to_string() const;
  /// Parses the text form. Throws std::invalid_argument on unknown tokens.
  static GeneratorWord from_string(int n, const std::string& text);

  /// Word reversal (the op anti-involution on monomials); delta unchanged.
  GeneratorWord reversed() const;

  GeneratorWord& append(Letter l) {
    letters.push_back(l);
    return *this;
  }
  GeneratorWord& append(const std::vector<Gen>& gens) {
    for (Gen g : gens) letters.push_back(to_letter(g));
    return *this;
  }
};

/// Alternating word [g, other(g), ...] of the given length as letters.
std::vector<Letter> alternating_letters(Gen start, int len);

/// One defining relation lhs = delta^{slot} * rhs, where slot names the
/// undetermined natural exponent when present (rhs.delta_exp carries fixed
/// powers such as the delta of e1 e0 e1 = delta e1).
struct Relation {
  std::string source;  // equation tag, e.g. "0.1.13"
  GeneratorWord lhs;
  GeneratorWord rhs;
  std::optional<std::string> theta_slot;

  /// {"source":...,"lhs":...,"rhs":...[,"delta":...][,"slot":...]};
  /// the delta key appears only for a nonzero fixed exponent.
  std::string to_json() const;
};

/// The solved exponent set Theta. For odd n the presentation declares
/// xi_1..xi_m but constrains only xi_1..xi_{m-1}; the unconstrained xi_m is
/// simply absent from the solved map (declared_xi_max records the declared
/// range). theta_0 is identically 0 and carries no entry.
struct ThetaParameters {
  int n = 0;
  int kappa0 = 0;
  int kappa1 = 0;
  std::map<int, int> eta;
  std::map<int, int> xi;
  std::map<int, int> theta;
  int declared_xi_max = 0;

  std::string to_json() const;
};

/// The complete instantiated relation list for Br(I2^n): Definition-order,
/// all generator indices and all admissible k, with exactly one of the
/// lcm-classified xi relations per k. Requires n >= 5.
std::vector<Relation> relation_schema(int n);

enum class NormalFamily {
  group,       // a in W(I2^n)
  u_e0_v,      // n odd: u e0 v,            u in D0,  v in D0^op
  u_e0_v_w,    // n even: u e0 v w,         u in D0,  v in K0, w in D0^op
  u_e1_v_w,    // n even: u e1 v w,         u in D1,  v in K1, w in D1^op
  u_e0e1_w,    // n even: u e0 e1 w,        u in D0,  w in D1^op
  u_e1e0_w,    // n even: u e1 e0 w,        u in D1,  w in D0^op
  u_e0e1e0_w,  // n even: u e0 e1 e0 w,     u in D0,  w in D0^op
};

std::string family_name(NormalFamily f);

/// A normal-form monomial: family tag plus its W(I2^n) components.
struct I2nMonomial {
  int n;
  NormalFamily family;
  std::optional<DihedralElement> u, v, w;
  int delta_exp = 0;

  GeneratorWord to_word() const;
};

/// The normal-form families of Br(I2^n), as formal tuples in a fixed
/// deterministic order. Counts: 2n + n^2 for odd n, 2n + (3/2) n^2 for even
/// n. Requires n >= 5.
std::vector<I2nMonomial> normal_forms(int n);

}  // namespace brauer
