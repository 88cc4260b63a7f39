#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace superext {

/// Polynomial in z with nonnegative integer coefficients, dense, no trailing
/// zeros.  The zero polynomial has no coefficients.
class KPoly {
 public:
  KPoly() = default;
  explicit KPoly(std::vector<std::int64_t> coeffs);

  static KPoly monomial(int power, std::int64_t coeff = 1);
  static KPoly constant(std::int64_t c) { return monomial(0, c); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int power) const;
  std::int64_t constant_term() const { return coeff(0); }
  const std::vector<std::int64_t>& coeffs() const { return c_; }
  /// Number of nonzero terms.
  int terms() const;
  /// Lowest power with a nonzero coefficient (-1 for zero).
  int low_degree() const;
  std::int64_t eval(std::int64_t z) const;

  KPoly& operator+=(const KPoly& o);
  friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
  /// Multiplication by z^k, k >= 0.
  KPoly shifted(int k) const;

  std::string to_string() const;

  friend bool operator==(const KPoly&, const KPoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// Integer Laurent polynomial used inside the recursion; power -> coefficient.
using Laurent = std::map<int, std::int64_t>;

Laurent to_laurent(const KPoly& p);
/// (sum d_i z^i)_+ : drop negative powers.
KPoly truncate_plus(const Laurent& p);
/// Constant term mod 2.
int parity_bar(const KPoly& p);

/// Polynomial in (z, w).  Terms whose value the closed forms cannot supply
/// are recorded as unknown w-powers.
class KPoly2 {
 public:
  void add(int z_power, int w_power, std::int64_t coeff);
  void add_w(int w_power, const KPoly& p);
  void mark_unknown(int w_power) { unknown_.insert(w_power); }

  bool is_zero() const { return terms_.empty() && unknown_.empty(); }
  /// w-powers carrying a known nonzero term.
  std::set<int> w_support() const;
  const std::set<int>& unknown() const { return unknown_; }
  KPoly w_coefficient(int w_power) const;

  std::string to_string() const;

  friend bool operator==(const KPoly2&, const KPoly2&) = default;

 private:
  std::map<std::pair<int, int>, std::int64_t> terms_;  // (w, z) -> coeff
  std::set<int> unknown_;
};

}  // namespace superext
