#include "superext/weights.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "superext/error.hpp"

namespace superext {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int ceil_div(int a, int b) { return -floor_div(-a, b); }

int mod2(int v) { return ((v % 2) + 2) % 2; }

bool needs_sign(const AlgebraContext& ctx, int zeros) {
  if (ctx.family != Family::OSP) return false;
  if (ctx.t == 0) return ctx.n > 0 && zeros == 0;
  if (ctx.t == 1) return zeros > 0;
  return false;
}

int count_zero_slots(const AlgebraContext& ctx, const std::vector<int>& slots) {
  if (ctx.family == Family::GL || ctx.half()) return 0;
  return static_cast<int>(std::count(slots.begin(), slots.end(), 0));
}

void check_order(const AlgebraContext& ctx, const std::vector<int>& slots) {
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (ctx.family != Family::GL && slots[i] < 0)
      throw Error(ErrorCode::NotInBlock, "negative coordinate");
    if (i == 0) continue;
    const bool strict = slots[i] < slots[i - 1];
    const bool zero_pair = ctx.has_zero_stack() && slots[i] == 0 && slots[i - 1] == 0;
    if (!strict && !zero_pair)
      throw Error(ErrorCode::NotInBlock, "coordinates must decrease strictly");
  }
}

// Appends "coef·basis" to a linear combination; coef is a numerator over 2.
void append_term(std::string& out, int twice_coef, const std::string& basis) {
  if (twice_coef == 0) return;
  if (twice_coef < 0) {
    out += '-';
  } else if (!out.empty()) {
    out += '+';
  }
  const int a = twice_coef < 0 ? -twice_coef : twice_coef;
  if (a != 2) out += format_half(a);
  out += basis;
}

}  // namespace

AlgebraContext AlgebraContext::gl(int n) {
  if (n < 0) throw Error(ErrorCode::UsageError, "negative rank");
  AlgebraContext c;
  c.family = Family::GL;
  c.n = n;
  return c;
}

AlgebraContext AlgebraContext::osp(int n, int t) {
  if (n < 0 || t < 0 || t > 2) throw Error(ErrorCode::UsageError, "osp needs n >= 0, t in {0,1,2}");
  AlgebraContext c;
  c.family = Family::OSP;
  c.n = n;
  c.t = t;
  return c;
}

AlgebraContext AlgebraContext::q(int m, Block block) {
  if (m < 0) throw Error(ErrorCode::UsageError, "negative size");
  AlgebraContext c;
  c.family = Family::Q;
  c.n = m / 2;
  c.ell = m % 2;
  c.block = block;
  if (block == Block::BHalf && c.ell != 0)
    throw Error(ErrorCode::UsageError, "the half-integral block needs q(m) with m even");
  return c;
}

AlgebraContext AlgebraContext::with_rank(int s) const {
  AlgebraContext c = *this;
  c.n = s;
  return c;
}

std::string AlgebraContext::name() const {
  switch (family) {
    case Family::GL: return "gl(" + std::to_string(n) + "|" + std::to_string(n) + ")";
    case Family::OSP:
      return "osp(" + std::to_string(2 * n + t) + "|" + std::to_string(2 * n) + ")";
    case Family::Q: return "q(" + std::to_string(m()) + ")";
  }
  return {};
}

std::string AlgebraContext::block_name() const { return half() ? "B1/2" : "B0"; }

std::vector<int> BlockWeight::twice() const {
  std::vector<int> out;
  out.reserve(coords.size());
  for (int c : coords) out.push_back(ctx.half() ? 2 * c + 1 : 2 * c);
  return out;
}

bool weight_less(const BlockWeight& a, const BlockWeight& b) {
  if (a.coords != b.coords) return a.coords < b.coords;
  auto rank = [](int s) { return s == 1 ? 0 : (s == 0 ? 1 : 2); };
  return rank(a.sign) < rank(b.sign);
}

std::string format_half(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::string format_weight(const BlockWeight& w) {
  std::string out;
  if (w.sign != 0) out = w.sign > 0 ? "+ " : "- ";
  const auto tw = w.twice();
  for (std::size_t i = 0; i < tw.size(); ++i) {
    if (i) out += ',';
    out += format_half(tw[i]);
  }
  return out;
}

BlockWeight weight_from_slots(const AlgebraContext& ctx, std::vector<int> slots, int sign) {
  if (static_cast<int>(slots.size()) != ctx.n)
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(ctx.n) + " coordinates for " +
                                             ctx.name());
  check_order(ctx, slots);
  const bool signed_diag = needs_sign(ctx, count_zero_slots(ctx, slots));
  if (sign != 0 && !signed_diag) throw Error(ErrorCode::SignIllegal, "this weight takes no sign");
  if (sign == 0 && signed_diag) throw Error(ErrorCode::SignRequired, "this weight needs a sign");
  if (sign != 0 && sign != 1 && sign != -1) throw Error(ErrorCode::SignIllegal, "sign must be +1 or -1");
  return BlockWeight{ctx, std::move(slots), sign};
}

BlockWeight validate_weight(const AlgebraContext& ctx, std::span<const int> twice_coords,
                            std::optional<int> sign) {
  std::vector<int> slots;
  slots.reserve(twice_coords.size());
  for (int v : twice_coords) {
    const bool odd = (v % 2) != 0;
    if (ctx.half()) {
      if (!odd || v < 0) throw Error(ErrorCode::NotInBlock, "expected positive half-integers");
      slots.push_back((v - 1) / 2);
    } else {
      if (odd) throw Error(ErrorCode::NotInBlock, "expected integers");
      slots.push_back(v / 2);
    }
  }
  return weight_from_slots(ctx, std::move(slots), sign.value_or(0));
}

std::vector<BlockWeight> enumerate_block(const AlgebraContext& ctx, int max_twice,
                                         std::optional<int> min_twice, std::size_t cap) {
  const int lo_twice = min_twice.value_or(ctx.family == Family::GL ? -max_twice : 0);
  if (lo_twice > max_twice) throw Error(ErrorCode::UsageError, "min exceeds max");
  int lo, hi;
  if (ctx.half()) {
    lo = std::max(0, ceil_div(lo_twice - 1, 2));
    hi = floor_div(max_twice - 1, 2);
  } else {
    lo = ceil_div(lo_twice, 2);
    hi = floor_div(max_twice, 2);
    if (ctx.family != Family::GL) lo = std::max(lo, 0);
  }

  std::vector<BlockWeight> out;
  std::vector<int> cur;
  cur.reserve(ctx.n);
  auto emit = [&] {
    const int zeros = count_zero_slots(ctx, cur);
    if (needs_sign(ctx, zeros)) {
      out.push_back(BlockWeight{ctx, cur, 1});
      out.push_back(BlockWeight{ctx, cur, -1});
    } else {
      out.push_back(BlockWeight{ctx, cur, 0});
    }
    if (out.size() > cap)
      throw Error(ErrorCode::WindowTooLarge,
                  "window holds more than " + std::to_string(cap) + " weights");
  };
  // Coordinates are chosen first to last; each one is bounded above by the
  // previous (strictly, unless both are zero in a stacked block).
  auto rec = [&](auto&& self, int upper) -> void {
    if (static_cast<int>(cur.size()) == ctx.n) {
      emit();
      return;
    }
    for (int v = lo; v <= upper; ++v) {
      cur.push_back(v);
      int next = v - 1;
      if (v == 0 && ctx.has_zero_stack()) next = 0;
      self(self, next);
      cur.pop_back();
    }
  };
  if (ctx.n == 0) {
    emit();
  } else if (hi >= lo) {
    rec(rec, hi);
  }
  std::sort(out.begin(), out.end(), weight_less);
  return out;
}

BlockWeight base_weight(const AlgebraContext& ctx) {
  std::vector<int> slots(ctx.n, 0);
  if (ctx.family == Family::GL || ctx.half())
    for (int i = 0; i < ctx.n; ++i) slots[i] = ctx.n - 1 - i;
  const int sign = needs_sign(ctx, count_zero_slots(ctx, slots)) ? -1 : 0;
  return BlockWeight{ctx, std::move(slots), sign};
}

bool is_zero_weight(const BlockWeight& w) {
  if (w.ctx.half()) return false;
  if (w.ctx.family == Family::GL) return w == base_weight(w.ctx);
  if (w.ctx.family == Family::OSP && w.ctx.t == 1) {
    // The t=1 diagram of 0 is -x^n.
    return zero_count(w) == w.ctx.n && (w.ctx.n == 0 || w.sign == -1);
  }
  return zero_count(w) == w.ctx.n;
}

int zero_count(const BlockWeight& w) { return count_zero_slots(w.ctx, w.coords); }

int tail(const BlockWeight& w) {
  const int z = zero_count(w);
  if (w.ctx.family == Family::OSP && w.ctx.t == 1 && w.sign == 1) return z - 1;
  return z;
}

int norm_twice(const BlockWeight& w) {
  int s = 0;
  for (int v : w.twice()) s += v;
  if (w.ctx.family == Family::OSP && w.ctx.t == 2) s -= 2 * (w.ctx.n - zero_count(w));
  return s;
}

int pari_rel(const BlockWeight& lambda, const BlockWeight& nu) {
  if (!(lambda.ctx == nu.ctx)) throw Error(ErrorCode::ContextMismatch, "weights from different blocks");
  const int d = norm_twice(lambda) - norm_twice(nu);
  return mod2(d / 2);
}

int pari_abs(const BlockWeight& w) {
  const int nt = norm_twice(w);
  if (w.ctx.half()) return mod2((nt - w.ctx.n * w.ctx.n) / 2);
  return mod2(nt / 2);
}

BlockWeight tau_weight(const BlockWeight& w) {
  if (w.ctx.family != Family::OSP || w.ctx.t != 2)
    throw Error(ErrorCode::ContextMismatch, "tau applies to osp(2n+2|2n) weights");
  const AlgebraContext c1 = AlgebraContext::osp(w.ctx.n, 1);
  std::vector<int> slots;
  bool one = false;
  for (int v : w.coords) {
    if (v == 1) one = true;
    slots.push_back(v > 0 ? v - 1 : 0);
  }
  int sign = 0;
  if (one) {
    sign = 1;
  } else if (zero_count(w) > 0) {
    sign = -1;
  }
  return BlockWeight{c1, std::move(slots), sign};
}

BlockWeight tau_inv_weight(const BlockWeight& w) {
  if (w.ctx.family != Family::OSP || w.ctx.t != 1)
    throw Error(ErrorCode::ContextMismatch, "tau inverse applies to osp(2n+1|2n) weights");
  const AlgebraContext c2 = AlgebraContext::osp(w.ctx.n, 2);
  std::vector<int> slots;
  bool lifted = false;
  for (int v : w.coords) {
    if (v > 0) {
      slots.push_back(v + 1);
    } else if (w.sign == 1 && !lifted) {
      slots.push_back(1);
      lifted = true;
    } else {
      slots.push_back(0);
    }
  }
  return BlockWeight{c2, std::move(slots), 0};
}

std::string to_epsilon_delta(const BlockWeight& w) {
  const AlgebraContext& c = w.ctx;
  const int n = c.n;
  const auto tw = w.twice();
  std::map<int, int> eps, delta;  // index -> numerator over 2
  switch (c.family) {
    case Family::GL:
      for (int i = 1; i <= n; ++i) {
        const int ci = tw[i - 1] - 2 * (n - i);
        eps[i] += ci;
        delta[n + 1 - i] -= ci;
      }
      break;
    case Family::OSP:
      if (c.t == 1) {
        int s = n + 1;
        for (int i = 1; i <= n; ++i)
          if (w.coords[i - 1] == 0) {
            s = i;
            break;
          }
        for (int i = 1; i < s; ++i) {
          eps[i] += tw[i - 1] + 2;
          delta[i] += tw[i - 1];
        }
        if (s <= n && w.sign == 1) eps[s] += 2;
      } else {
        for (int i = 1; i <= n; ++i) {
          const int xi = (c.t == 0 && i == n && w.sign == -1) ? -1 : 1;
          eps[i] += xi * tw[i - 1];
          delta[i] += tw[i - 1];
        }
      }
      break;
    case Family::Q:
      for (int i = 1; i <= n; ++i) {
        eps[i] += tw[i - 1];
        eps[c.m() + 1 - i] -= tw[i - 1];
      }
      break;
  }
  std::string out;
  for (auto [i, v] : eps) append_term(out, v, "ε" + std::to_string(i));
  for (auto [i, v] : delta) append_term(out, v, "δ" + std::to_string(i));
  return out.empty() ? "0" : out;
}

bool coordinate_dominated(const BlockWeight& nu, const BlockWeight& lambda) {
  if (nu.coords.size() != lambda.coords.size()) return false;
  for (std::size_t i = 0; i < nu.coords.size(); ++i)
    if (nu.coords[i] > lambda.coords[i]) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool GeneralQWeight::integral() const {
  return std::all_of(twice.begin(), twice.end(), [](int v) { return v % 2 == 0; });
}

GeneralQWeight make_general_q(std::vector<int> twice) {
  if (!twice.empty()) {
    const bool odd0 = (twice[0] % 2) != 0;
    for (int v : twice)
      if (((v % 2) != 0) != odd0)
        throw Error(ErrorCode::NotInBlock, "coordinates mix integers and half-integers");
  }
  for (std::size_t i = 1; i < twice.size(); ++i) {
    if (twice[i] > twice[i - 1] || (twice[i] == twice[i - 1] && twice[i] != 0))
      throw Error(ErrorCode::NotInBlock, "q weight is not dominant");
  }
  return GeneralQWeight{std::move(twice)};
}

std::string format_general(const GeneralQWeight& w) {
  std::string out;
  for (std::size_t i = 0; i < w.twice.size(); ++i) {
    if (i) out += ',';
    out += format_half(w.twice[i]);
  }
  return out;
}

GeneralQWeight lift_block_weight(const BlockWeight& w) {
  if (w.ctx.family != Family::Q) throw Error(ErrorCode::ContextMismatch, "lift needs a q block weight");
  std::vector<int> out = w.twice();
  if (w.ctx.ell == 1) out.push_back(0);
  const auto tw = w.twice();
  for (auto it = tw.rbegin(); it != tw.rend(); ++it) out.push_back(-*it);
  return GeneralQWeight{std::move(out)};
}

bool CentralCharacter::pi_invariant() const {
  const auto nz = std::count_if(core_twice.begin(), core_twice.end(), [](int v) { return v != 0; });
  return nz % 2 == 1;
}

std::string CentralCharacter::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < core_twice.size(); ++i) {
    if (i) out += ',';
    out += format_half(core_twice[i]);
  }
  return out + "}";
}

namespace {

struct Glued {
  std::vector<int> core;    // ascending, numerators over 2
  std::vector<int> crosses; // |position| numerators of glued pairs, repeated for the zero stack
};

Glued glue(const GeneralQWeight& w) {
  std::map<int, int> count;
  for (int v : w.twice) ++count[v];
  Glued g;
  const int zeros = count.count(0) ? count[0] : 0;
  for (int i = 0; i < zeros / 2; ++i) g.crosses.push_back(0);
  if (zeros % 2) g.core.push_back(0);
  for (auto [v, c] : count) {
    if (v == 0) continue;
    if (v > 0 && count.count(-v)) {
      g.crosses.push_back(v);
    } else if (v > 0 || !count.count(-v)) {
      g.core.push_back(v);
    }
  }
  std::sort(g.core.begin(), g.core.end());
  std::sort(g.crosses.begin(), g.crosses.end(), std::greater<>());
  return g;
}

}  // namespace

CentralCharacter core_of(const GeneralQWeight& w) {
  Glued g = glue(w);
  CentralCharacter ch;
  ch.core_twice = g.core;
  ch.integral = w.integral();
  ch.ell_of = std::count(g.core.begin(), g.core.end(), 0) > 0 ? 1 : 0;
  return ch;
}

int atypicality(const GeneralQWeight& w) { return static_cast<int>(glue(w).crosses.size()); }

bool has_zero_coordinate(const GeneralQWeight& w) {
  return std::find(w.twice.begin(), w.twice.end(), 0) != w.twice.end();
}

bool is_stable(const GeneralQWeight& w) {
  Glued g = glue(w);
  if (g.crosses.empty()) return true;
  int min_core = -1;
  for (int v : g.core) {
    const int p = v < 0 ? -v : v;
    if (p != 0 && (min_core < 0 || p < min_core)) min_core = p;
  }
  if (min_core < 0) return true;
  return g.crosses.front() < min_core;
}

std::pair<AlgebraContext, BlockWeight> reduce(const GeneralQWeight& w) {
  Glued g = glue(w);
  const int k = static_cast<int>(g.crosses.size());
  if (k == 0) throw Error(ErrorCode::Typical, "weight is typical");
  const bool half = !w.integral();
  const int ell = std::count(g.core.begin(), g.core.end(), 0) > 0 ? 1 : 0;
  const AlgebraContext ctx = AlgebraContext::q(2 * k + ell, half ? Block::BHalf : Block::B0);
  std::vector<int> core_pos;
  for (int v : g.core)
    if (v != 0) core_pos.push_back(v < 0 ? -v : v);
  std::vector<int> twice;
  for (int p : g.crosses) {
    const int left = static_cast<int>(
        std::count_if(core_pos.begin(), core_pos.end(), [p](int c) { return c < p; }));
    twice.push_back(p - 2 * left);
  }
  return {ctx, validate_weight(ctx, twice)};
}

}  // namespace superext
