#include "superext/poly.hpp"

#include <stdexcept>

namespace superext {

KPoly::KPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) {
  for (auto v : c_)
    if (v < 0) throw std::invalid_argument("KPoly coefficients are nonnegative");
  trim();
}

KPoly KPoly::monomial(int power, std::int64_t coeff) {
  if (power < 0) throw std::invalid_argument("negative power");
  std::vector<std::int64_t> c(power + 1, 0);
  c[power] = coeff;
  return KPoly(std::move(c));
}

void KPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t KPoly::coeff(int power) const {
  if (power < 0 || power >= static_cast<int>(c_.size())) return 0;
  return c_[power];
}

int KPoly::terms() const {
  int t = 0;
  for (auto v : c_) t += v != 0;
  return t;
}

int KPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

std::int64_t KPoly::eval(std::int64_t z) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

KPoly& KPoly::operator+=(const KPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

KPoly KPoly::shifted(int k) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c(k, 0);
  c.insert(c.end(), c_.begin(), c_.end());
  return KPoly(std::move(c));
}

std::string KPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const auto v = c_[i];
    if (v == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(v);
      continue;
    }
    if (v != 1) out += std::to_string(v);
    out += 'z';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

Laurent to_laurent(const KPoly& p) {
  Laurent l;
  for (int i = 0; i <= p.degree(); ++i)
    if (p.coeff(i) != 0) l[i] = p.coeff(i);
  return l;
}

KPoly truncate_plus(const Laurent& p) {
  std::vector<std::int64_t> c;
  for (auto [k, v] : p) {
    if (k < 0 || v == 0) continue;
    if (v < 0) throw std::invalid_argument("negative coefficient in truncate_plus");
    if (static_cast<int>(c.size()) <= k) c.resize(k + 1, 0);
    c[k] += v;
  }
  return KPoly(std::move(c));
}

int parity_bar(const KPoly& p) { return static_cast<int>(p.constant_term() % 2); }

void KPoly2::add(int z_power, int w_power, std::int64_t coeff) {
  if (coeff == 0) return;
  terms_[{w_power, z_power}] += coeff;
}

void KPoly2::add_w(int w_power, const KPoly& p) {
  for (int i = 0; i <= p.degree(); ++i) add(i, w_power, p.coeff(i));
}

std::set<int> KPoly2::w_support() const {
  std::set<int> s;
  for (const auto& [k, v] : terms_) s.insert(k.first);
  return s;
}

KPoly KPoly2::w_coefficient(int w_power) const {
  std::vector<std::int64_t> c;
  for (const auto& [k, v] : terms_) {
    if (k.first != w_power) continue;
    if (static_cast<int>(c.size()) <= k.second) c.resize(k.second + 1, 0);
    c[k.second] = v;
  }
  return KPoly(std::move(c));
}

std::string KPoly2::to_string() const {
  std::string out;
  for (int s : w_support()) {
    const KPoly p = w_coefficient(s);
    if (!out.empty()) out += '+';
    const std::string w = s == 0 ? "" : (s == 1 ? "w" : "w^" + std::to_string(s));
    const std::string body = p.to_string();
    if (w.empty()) {
      out += body;
    } else if (body == "1") {
      out += w;
    } else if (p.terms() == 1) {
      out += body + w;
    } else {
      out += "(" + body + ")" + w;
    }
  }
  for (int s : unknown_) out += "+?·w" + (s == 1 ? std::string() : "^" + std::to_string(s));
  if (out.empty()) return "0";
  if (out[0] == '+') out.erase(0, 1);
  return out;
}

}  // namespace superext
