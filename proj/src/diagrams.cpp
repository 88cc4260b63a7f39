#include "superext/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "superext/error.hpp"

namespace superext {

Cell WeightDiagram::at(int p) const {
  auto it = cells.find(p);
  return it == cells.end() ? Cell{} : it->second;
}

int WeightDiagram::cross_count() const {
  int c = 0;
  for (const auto& [p, cell] : cells) c += cell.times;
  return c;
}

WeightDiagram diagram_of(const BlockWeight& w) {
  WeightDiagram d;
  d.ctx = w.ctx;
  d.half = w.ctx.half();
  d.sign = w.sign;
  for (int p : w.coords) ++d.cells[p].times;
  if (w.ctx.gt_at_zero()) d.cells[0].gt = true;
  return d;
}

BlockWeight weight_of(const WeightDiagram& d) {
  if (d.general) throw Error(ErrorCode::MalformedDiagram, "general q diagram has no block weight");
  std::vector<int> slots;
  for (const auto& [p, cell] : d.cells) {
    if (cell.lt) throw Error(ErrorCode::MalformedDiagram, "'<' in a block diagram");
    if (cell.gt && !(p == 0 && d.ctx.gt_at_zero()))
      throw Error(ErrorCode::MalformedDiagram, "'>' only sits at position 0");
    if (cell.times > 1 && !(p == 0 && d.stacked()))
      throw Error(ErrorCode::MalformedDiagram, "stacked x away from position 0");
    for (int i = 0; i < cell.times; ++i) slots.push_back(p);
  }
  if (d.ctx.gt_at_zero() && !d.at(0).gt)
    throw Error(ErrorCode::MalformedDiagram, "missing '>' at position 0");
  std::sort(slots.begin(), slots.end(), std::greater<>());
  try {
    return weight_from_slots(d.ctx, std::move(slots), d.sign);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SizeMismatch || e.code() == ErrorCode::NotInBlock)
      throw Error(ErrorCode::MalformedDiagram, e.what());
    throw;
  }
}

WeightDiagram qdiagram_of(const GeneralQWeight& w) {
  const CentralCharacter ch = core_of(w);
  const bool half = !w.integral();
  WeightDiagram d;
  d.ctx = AlgebraContext::q(2 * atypicality(w) + ch.ell_of, half ? Block::BHalf : Block::B0);
  d.general = true;
  d.half = half;
  int zeros = 0;
  for (int v : w.twice) {
    if (v == 0) {
      ++zeros;
      continue;
    }
    const int a = v < 0 ? -v : v;
    const int p = half ? (a - 1) / 2 : a / 2;
    Cell& c = d.cells[p];
    if (v > 0) c.gt = true; else c.lt = true;
    if (c.gt && c.lt) c = Cell{1, false, false};
  }
  if (zeros > 0) d.cells[0] = Cell{zeros / 2, zeros % 2 == 1, false};
  return d;
}

// ---------------------------------------------------------------------------
// Arches

namespace {

bool two_legged_bottom(const WeightDiagram& d) {
  return !d.general && d.ctx.family == Family::OSP && d.ctx.t != 2;
}

}  // namespace

ArchDiagram arcs(const WeightDiagram& d) {
  ArchDiagram ad;
  ad.base = d;
  std::set<int> used;
  const bool stacked = d.stacked();
  auto next_free = [&](int from) {
    int p = from + 1;
    while (!d.at(p).empty() || used.count(p) || (stacked && p == 0)) ++p;
    used.insert(p);
    return p;
  };

  std::vector<int> singles;
  for (const auto& [p, cell] : d.cells)
    if (cell.times > 0 && !(stacked && p == 0)) singles.push_back(p);
  for (auto it = singles.rbegin(); it != singles.rend(); ++it)
    ad.arches.push_back(Arch{Arch::Kind::Two, *it, next_free(*it), 0});

  if (stacked) {
    const Cell zero = d.at(0);
    for (int i = 0; i < zero.times; ++i) {
      if (i == 0 && two_legged_bottom(d)) {
        ad.arches.push_back(Arch{Arch::Kind::Two, 0, next_free(0), 0});
      } else {
        const int b1 = next_free(0);
        const int b2 = next_free(b1);
        ad.arches.push_back(Arch{Arch::Kind::Three, 0, b1, b2});
      }
    }
    if (zero.gt && (d.general || d.ctx.wobbly()))
      ad.arches.push_back(Arch{Arch::Kind::Wobbly, 0, next_free(0), 0});
  }
  std::stable_sort(ad.arches.begin(), ad.arches.end(),
                   [](const Arch& x, const Arch& y) { return x.b1 < y.b1; });
  return ad;
}

std::set<int> arc_ends(const ArchDiagram& ad, int p) {
  std::set<int> out;
  const bool zero = ad.base.stacked() && p == 0;
  for (const Arch& a : ad.arches) {
    if (a.a != p) continue;
    if (!zero && a.kind != Arch::Kind::Two) continue;
    out.insert(a.b1);
    if (a.kind == Arch::Kind::Three) out.insert(a.b2);
  }
  if (out.empty()) throw Error(ErrorCode::NoSymbol, "no arch leaves position " + std::to_string(p));
  return out;
}

std::set<int> arc_ends(const WeightDiagram& d, int p) { return arc_ends(arcs(d), p); }

// ---------------------------------------------------------------------------
// Moves

namespace {

bool sign_needed(const WeightDiagram& d) {
  if (d.general || d.ctx.family != Family::OSP) return false;
  if (d.ctx.t == 0) return d.ctx.n > 0 && d.times_at(0) == 0;
  if (d.ctx.t == 1) return d.times_at(0) > 0;
  return false;
}

void settle_sign(WeightDiagram& d, std::optional<int> sign, int old_sign) {
  if (!sign_needed(d)) {
    if (sign && *sign != 0) throw Error(ErrorCode::SignIllegal, "the moved diagram takes no sign");
    d.sign = 0;
    return;
  }
  if (sign && *sign != 0) {
    d.sign = *sign > 0 ? 1 : -1;
  } else if (old_sign != 0) {
    d.sign = old_sign;
  } else {
    throw Error(ErrorCode::MoveUndefined, "the moved diagram needs a sign");
  }
}

void take(WeightDiagram& d, int p) {
  Cell& c = d.cells[p];
  --c.times;
  if (c.empty()) d.cells.erase(p);
}

void put(WeightDiagram& d, int p) { ++d.cells[p].times; }

bool lands_ok(const WeightDiagram& d, int p) {
  if (d.ctx.family != Family::GL && !d.general && p < 0) return false;
  return d.at(p).empty();
}

}  // namespace

WeightDiagram move_one(const WeightDiagram& d, int a, int q, std::optional<int> sign) {
  if (d.times_at(a) == 0 || q <= a || !lands_ok(d, q) || (d.stacked() && q == 0))
    throw Error(ErrorCode::MoveUndefined, "move " + std::to_string(a) + "->" + std::to_string(q));
  WeightDiagram r = d;
  take(r, a);
  put(r, q);
  settle_sign(r, sign, d.sign);
  return r;
}

WeightDiagram move_two(const WeightDiagram& d, int p, int q, std::optional<int> sign) {
  if (!d.stacked() || d.times_at(0) < 2 || p <= 0 || q <= p || !lands_ok(d, p) || !lands_ok(d, q))
    throw Error(ErrorCode::MoveUndefined, "double move to " + std::to_string(p) + "," + std::to_string(q));
  WeightDiagram r = d;
  take(r, 0);
  take(r, 0);
  put(r, p);
  put(r, q);
  settle_sign(r, sign, d.sign);
  return r;
}

WeightDiagram unmove_one(const WeightDiagram& d, int q, int a, std::optional<int> sign) {
  const bool onto_stack = d.stacked() && a == 0;
  if (d.times_at(q) == 0 || a >= q || (!onto_stack && !lands_ok(d, a)) ||
      (d.ctx.family != Family::GL && a < 0))
    throw Error(ErrorCode::MoveUndefined, "inverse move " + std::to_string(q) + "->" + std::to_string(a));
  WeightDiagram r = d;
  take(r, q);
  put(r, a);
  settle_sign(r, sign, d.sign);
  return r;
}

WeightDiagram unmove_two(const WeightDiagram& d, int p, int q, std::optional<int> sign) {
  if (!d.stacked() || p <= 0 || q <= p || d.times_at(p) == 0 || d.times_at(q) == 0)
    throw Error(ErrorCode::MoveUndefined, "inverse double move");
  WeightDiagram r = d;
  take(r, p);
  take(r, q);
  put(r, 0);
  put(r, 0);
  settle_sign(r, sign, d.sign);
  return r;
}

// ---------------------------------------------------------------------------

WeightDiagram tau(const WeightDiagram& d) { return diagram_of(tau_weight(weight_of(d))); }

WeightDiagram tau_inv(const WeightDiagram& d) { return diagram_of(tau_inv_weight(weight_of(d))); }

std::vector<Arch> tau_arches(const std::vector<Arch>& arches) {
  std::vector<Arch> out;
  for (const Arch& a : arches) {
    if (a.kind == Arch::Kind::Three) {
      if (a.b1 - 1 == 0) {
        out.push_back(Arch{Arch::Kind::Two, 0, a.b2 - 1, 0});
      } else {
        out.push_back(Arch{Arch::Kind::Three, 0, a.b1 - 1, a.b2 - 1});
      }
    } else if (a.kind == Arch::Kind::Two) {
      out.push_back(Arch{Arch::Kind::Two, a.a > 0 ? a.a - 1 : 0, a.b1 - 1, 0});
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Arch& x, const Arch& y) { return x.b1 < y.b1; });
  return out;
}

namespace {

// x > y in the order of arches; wobbly arches are not compared.
bool above(const Arch& x, const Arch& y) {
  using K = Arch::Kind;
  if (x.kind == K::Wobbly || y.kind == K::Wobbly) return false;
  if (x.kind == K::Three && y.kind == K::Three) return x.b2 > y.b2;
  if (x.kind == K::Three) return y.a < x.b2;
  if (y.kind == K::Three) return false;
  return x.a < y.a && y.a < x.b1;
}

}  // namespace

ArchOrder arch_compare(const Arch& a1, const Arch& a2) {
  if (above(a1, a2)) return ArchOrder::Greater;
  if (above(a2, a1)) return ArchOrder::Less;
  return ArchOrder::Incomparable;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string position_text(const WeightDiagram& d, int p) {
  return format_half(d.half ? 2 * p + 1 : 2 * p);
}

std::string token(const WeightDiagram& d, int p) {
  const Cell c = d.at(p);
  if (d.stacked() && p == 0) {
    if (c.times > 0) return "x^" + std::to_string(c.times) + (c.gt ? ">" : "");
    return c.gt ? ">" : "o";
  }
  if (c.times > 0) return "x";
  if (c.gt) return ">";
  if (c.lt) return "<";
  return "o";
}

}  // namespace

std::string render_ascii(const WeightDiagram& d) {
  std::string out;
  int start = 0;
  if (d.half) {
    out = "half; ";
  } else if (!d.stacked()) {
    if (!d.cells.empty()) start = std::min(0, d.cells.begin()->first);
    out = "offset=" + std::to_string(start) + "; ";
  }
  if (d.sign != 0) out += d.sign > 0 ? "+ " : "- ";
  const int end = d.cells.empty() ? start : std::max(start, d.cells.rbegin()->first);
  for (int p = start; p <= end; ++p) {
    if (p != start) out += ' ';
    out += token(d, p);
  }
  return out;
}

std::string render_arches(const ArchDiagram& ad) {
  std::string out;
  for (const Arch& a : ad.arches) {
    if (!out.empty()) out += ' ';
    const std::string left = position_text(ad.base, a.a);
    switch (a.kind) {
      case Arch::Kind::Two:
        out += "arc(" + left + ";" + position_text(ad.base, a.b1) + ")";
        break;
      case Arch::Kind::Three:
        out += "arc(" + left + ";" + position_text(ad.base, a.b1) + "," +
               position_text(ad.base, a.b2) + ")";
        break;
      case Arch::Kind::Wobbly:
        out += "wob(" + left + ";" + position_text(ad.base, a.b1) + ")";
        break;
    }
  }
  return out;
}

WeightDiagram parse_ascii(const std::string& text, const AlgebraContext& ctx) {
  std::string rest = text;
  auto ltrim = [](std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    s.erase(0, i);
  };
  ltrim(rest);
  int start = 0;
  bool half = false;
  if (rest.rfind("half;", 0) == 0) {
    half = true;
    rest.erase(0, 5);
  } else if (rest.rfind("offset=", 0) == 0) {
    const auto semi = rest.find(';');
    if (semi == std::string::npos) throw Error(ErrorCode::ParseError, "offset needs ';'");
    try {
      std::size_t used = 0;
      const std::string num = rest.substr(7, semi - 7);
      start = std::stoi(num, &used);
      if (used != num.size()) throw std::invalid_argument(num);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad offset in '" + text + "'");
    }
    rest.erase(0, semi + 1);
    if (ctx.family != Family::GL) throw Error(ErrorCode::ParseError, "offset is for gl diagrams only");
  }
  if (half != ctx.half()) throw Error(ErrorCode::ParseError, "'half;' prefix must match the block");
  ltrim(rest);

  WeightDiagram d;
  d.ctx = ctx;
  d.half = half;
  if (!rest.empty() && (rest[0] == '+' || rest[0] == '-')) {
    d.sign = rest[0] == '+' ? 1 : -1;
    rest.erase(0, 1);
  }
  std::istringstream in(rest);
  std::string tok;
  int p = start;
  bool any = false;
  while (in >> tok) {
    any = true;
    Cell c;
    if (tok == "o") {
    } else if (tok == ">") {
      c.gt = true;
    } else if (tok == "<") {
      c.lt = true;
    } else if (tok[0] == 'x') {
      std::string s = tok.substr(1);
      if (!s.empty() && s.back() == '>') {
        c.gt = true;
        s.pop_back();
      }
      c.times = 1;
      if (!s.empty()) {
        if (s[0] != '^' || s.size() < 2) throw Error(ErrorCode::ParseError, "bad token '" + tok + "'");
        const std::string num = s.substr(1);
        if (!std::all_of(num.begin(), num.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
          throw Error(ErrorCode::ParseError, "bad token '" + tok + "'");
        c.times = std::stoi(num);
      }
    } else {
      throw Error(ErrorCode::ParseError, "bad token '" + tok + "'");
    }
    if (!c.empty()) d.cells[p] = c;
    ++p;
  }
  if (!any) throw Error(ErrorCode::ParseError, "empty diagram");
  // Validation and normalisation go through the weight.
  return diagram_of(weight_of(d));
}

}  // namespace superext
