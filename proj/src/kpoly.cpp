#include "superext/kpoly.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <tuple>

#include "superext/diagrams.hpp"
#include "superext/error.hpp"

namespace superext {

namespace {

void require_same(const BlockWeight& a, const BlockWeight& b) {
  if (!(a.ctx == b.ctx)) throw Error(ErrorCode::ContextMismatch, a.ctx.name() + " vs " + b.ctx.name());
}

// Multiset differences of the x positions: what nu loses and lambda gains.
struct MoveShape {
  std::vector<int> removed;  // ascending
  std::vector<int> added;    // ascending
};

MoveShape shape(const BlockWeight& lambda, const BlockWeight& nu) {
  std::vector<int> l = lambda.coords, v = nu.coords;
  std::sort(l.begin(), l.end());
  std::sort(v.begin(), v.end());
  MoveShape s;
  std::set_difference(v.begin(), v.end(), l.begin(), l.end(), std::back_inserter(s.removed));
  std::set_difference(l.begin(), l.end(), v.begin(), v.end(), std::back_inserter(s.added));
  return s;
}

KPoly z_pow_if(int b, int lambda1) { return lambda1 <= b ? KPoly::monomial(b - lambda1) : KPoly{}; }

bool different_signs(const BlockWeight& a, const BlockWeight& b) {
  return a.sign != 0 && b.sign != 0 && a.sign != b.sign;
}

// One x moved from a to the new rightmost position lambda_1?
std::optional<int> single_move_source(const MoveShape& s, int lambda1) {
  if (s.removed.size() != 1 || s.added.size() != 1 || s.added[0] != lambda1) return std::nullopt;
  if (s.removed[0] >= lambda1) return std::nullopt;
  return s.removed[0];
}

KPoly kpoly_gl(const BlockWeight& lambda, const BlockWeight& nu) {
  if (lambda.ctx.n == 0) return {};
  const int l1 = lambda.coords.front();
  const auto a = single_move_source(shape(lambda, nu), l1);
  if (!a) return {};
  const int b = *arc_ends(diagram_of(nu), *a).begin();
  return z_pow_if(b, l1);
}

KPoly kpoly_osp(const BlockWeight& lambda, const BlockWeight& nu) {
  // t = 0 or 2 here.
  if (is_zero_weight(lambda))
    throw Error(ErrorCode::OspLambdaZero, "no closed form for K^{0,nu} in " + lambda.ctx.name());
  if (different_signs(lambda, nu)) return {};
  const int l1 = lambda.coords.front();
  const MoveShape s = shape(lambda, nu);
  const ArchDiagram ad = arcs(diagram_of(nu));

  if (const auto a = single_move_source(s, l1)) {
    const auto ends = arc_ends(ad, *a);
    const int b = *ends.rbegin();
    if (*a != 0 || lambda.ctx.t == 2) return z_pow_if(b, l1);
    const int bm = *ends.begin();
    if (l1 <= bm && bm < b) return KPoly::monomial(bm - l1) + KPoly::monomial(b - l1);
    return z_pow_if(b, l1);
  }

  // (f)_{0,0}^{p,lambda_1}
  if (s.removed == std::vector<int>{0, 0} && s.added.size() == 2 && s.added[1] == l1) {
    const int p = s.added[0];
    const int top = *arc_ends(ad, 0).rbegin();
    for (const Arch& arch : ad.arches) {
      if (arch.kind == Arch::Kind::Three && arch.b1 == p && l1 <= arch.b2 && arch.b2 < top)
        return KPoly::monomial(arch.b2 - l1);
    }
  }
  return {};
}

KPoly kpoly_q(const BlockWeight& lambda, const BlockWeight& nu) {
  const int m = lambda.ctx.m();
  if (is_zero_weight(lambda)) {
    if (!is_zero_weight(nu)) return {};
    KPoly out;
    for (int i = 1; i < m; ++i) out += KPoly::monomial(i);
    return out;
  }
  if (lambda.ctx.n == 0) return {};
  const int l1 = lambda.coords.front();
  const auto a = single_move_source(shape(lambda, nu), l1);
  if (!a) return {};
  const auto ends = arc_ends(diagram_of(nu), *a);
  const int b = *ends.rbegin();
  if (*a != 0 || lambda.ctx.half()) return z_pow_if(b, l1);
  std::vector<int> A;
  for (int i : ends)
    if (l1 <= i && i < b) A.push_back(i);
  if (A.empty()) return {};
  return KPoly::monomial(A.front() - l1) + KPoly::monomial(A.back() - l1);
}

KPoly kpoly_kernel(const BlockWeight& lambda, const BlockWeight& nu) {
  switch (lambda.ctx.family) {
    case Family::GL: return kpoly_gl(lambda, nu);
    case Family::OSP: return kpoly_osp(lambda, nu);
    case Family::Q: return kpoly_q(lambda, nu);
  }
  return {};
}

// --- recursion ------------------------------------------------------------

using Key = std::tuple<int, std::vector<int>, std::vector<int>>;

struct Recursion {
  bool half;
  std::map<Key, KPoly> memo;

  static bool all_zero(const std::vector<int>& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
  }
  static int zeros(const std::vector<int>& v) {
    return static_cast<int>(std::count(v.begin(), v.end(), 0));
  }

  // L, N are numerators over 2.
  KPoly eval(int m, const std::vector<int>& L, const std::vector<int>& N) {
    Key key{m, L, N};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    KPoly r = compute(m, L, N);
    memo.emplace(std::move(key), r);
    return r;
  }

  KPoly compute(int m, const std::vector<int>& L, const std::vector<int>& N) {
    const std::size_t n = L.size();
    if (n == 0) return {};
    if (all_zero(L)) {
      if (!all_zero(N)) return {};
      KPoly out;
      for (int i = 1; i < m; ++i) out += KPoly::monomial(i);
      return out;
    }
    if (L[0] <= 2) {
      if (half) return {};  // theta/2 in q_2
      // lambda = theta
      return all_zero(N) ? KPoly::constant(1) + KPoly::monomial(m - 2) : KPoly{};
    }
    std::vector<int> lm = L;
    lm[0] -= 2;
    const bool drop_ok = n == 1 || L[0] > L[1] + 2;
    if (drop_ok) {
      if (N == lm) return KPoly::constant(1);
      const KPoly p = eval(m, lm, N);
      Laurent shifted;
      for (int i = 0; i <= p.degree(); ++i)
        if (p.coeff(i)) shifted[i - 1] = p.coeff(i);
      KPoly r = truncate_plus(shifted);
      if (zeros(N) > zeros(L)) r += KPoly::constant(parity_bar(p));
      return r;
    }
    // lambda_1 = lambda_2 + 1
    if (N[0] != L[1]) return {};
    const std::vector<int> l2(L.begin() + 1, L.end()), n2(N.begin() + 1, N.end());
    return eval(m - 2, l2, n2).shifted(1);
  }
};

}  // namespace

BlockWeight kernel_weight(const BlockWeight& w) {
  if (w.ctx.family == Family::OSP && w.ctx.t == 1) return tau_inv_weight(w);
  return w;
}

KPoly kpoly(const BlockWeight& lambda, const BlockWeight& nu) {
  require_same(lambda, nu);
  return kpoly_kernel(kernel_weight(lambda), kernel_weight(nu));
}

KPoly kpoly_q_recursive(const BlockWeight& lambda, const BlockWeight& nu) {
  require_same(lambda, nu);
  if (lambda.ctx.family != Family::Q) throw Error(ErrorCode::ContextMismatch, "recursion is for q");
  Recursion r{lambda.ctx.half(), {}};
  return r.eval(lambda.ctx.m(), lambda.twice(), nu.twice());
}

int s_zero(const BlockWeight& lambda, const BlockWeight& nu) {
  require_same(lambda, nu);
  const BlockWeight l = kernel_weight(lambda), v = kernel_weight(nu);
  const int n = l.ctx.n;
  for (int i = 0; i < n; ++i)
    if (l.coords[i] != v.coords[i]) return n - i;
  if (l.sign != v.sign) return 1;  // OSP t=0: the sign rides on lambda_n
  throw Error(ErrorCode::EqualWeights, "s(lambda;nu) needs lambda != nu");
}

std::optional<KPoly> k_restricted(const BlockWeight& lambda, const BlockWeight& nu, int s) {
  require_same(lambda, nu);
  const BlockWeight l = kernel_weight(lambda), v = kernel_weight(nu);
  const int n = l.ctx.n;
  if (s <= 0 || s > n) return KPoly{};
  for (int i = 0; i < n - s; ++i)
    if (l.coords[i] != v.coords[i]) return KPoly{};
  const AlgebraContext rc = l.ctx.with_rank(s);
  const BlockWeight lr = weight_from_slots(rc, {l.coords.end() - s, l.coords.end()}, l.sign);
  const BlockWeight vr = weight_from_slots(rc, {v.coords.end() - s, v.coords.end()}, v.sign);
  if (rc.family == Family::OSP && is_zero_weight(lr)) return std::nullopt;
  return kpoly_kernel(lr, vr);
}

KPoly2 k_hat(const BlockWeight& lambda, const BlockWeight& nu) {
  KPoly2 out;
  for (int s = 1; s <= lambda.ctx.n; ++s) {
    const auto k = k_restricted(lambda, nu, s);
    if (k) {
      out.add_w(s, *k);
    } else {
      out.mark_unknown(s);
    }
  }
  return out;
}

std::int64_t k_zero(const BlockWeight& lambda, const BlockWeight& nu) {
  const int s = s_zero(lambda, nu);
  const auto k = k_restricted(lambda, nu, s);
  return k ? k->constant_term() : 0;
}

}  // namespace superext
