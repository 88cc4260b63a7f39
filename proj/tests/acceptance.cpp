// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "superext/verify.hpp"

using namespace superext;

namespace {

/// Windows used by the window-wide criteria: rank up to 3, GL coordinates in
/// [-3,5], everything else up to 6.
std::vector<Window> property_windows() {
  std::vector<Window> out;
  for (int n = 1; n <= 3; ++n) {
    out.push_back({AlgebraContext::gl(n), 10, -6});
    for (int t = 0; t <= 2; ++t) out.push_back({AlgebraContext::osp(n, t), 12, std::nullopt});
  }
  for (int m = 2; m <= 7; ++m) {
    out.push_back({AlgebraContext::q(m), 12, std::nullopt});
    if (m % 2 == 0) out.push_back({AlgebraContext::q(m, Block::BHalf), 11, std::nullopt});
  }
  return out;
}

CheckResult over_windows(const std::string& name, CheckResult (*check)(const Window&)) {
  CheckResult r{name};
  for (const auto& w : property_windows()) {
    CheckResult part = check(w);
    part.name = w.ctx.name() + " " + w.ctx.block_name();
    r.merge(part);
  }
  return r;
}

struct Criterion {
  int id;
  std::string title;
  std::function<CheckResult()> run;
  double budget_seconds = 0;  // 0 = no limit
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden tables", check_golden_tables, 1.0},
      {2, "closed formulas", check_closed_formulas},
      {3, "oracle equivalence",
       [] {
         CheckResult r{"oracle"};
         for (int m = 2; m <= 7; ++m) {
           r.merge(check_oracle({AlgebraContext::q(m), 12, std::nullopt}));
           if (m % 2 == 0) r.merge(check_oracle({AlgebraContext::q(m, Block::BHalf), 11, std::nullopt}));
         }
         return r;
       },
       60.0},
      {4, "parity and monomiality", [] { return over_windows("parity", check_parity_shape); }},
      {5, "w-support", [] { return over_windows("w-support", check_w_support); }},
      {6, "graph figures", check_graph_figures},
      {7, "out-degree and multiedges", [] { return over_windows("out-degree", check_out_degree); }},
      {8, "bipartiteness", [] { return over_windows("bipartite", check_bipartite_window); }},
      {9, "window isomorphism",
       [] {
         CheckResult r{"window-iso"};
         for (int n = 2; n <= 3; ++n)
           for (int p = 0; p <= 2; ++p) r.merge(check_window_isomorphism(n, p));
         return r;
       }},
      {10, "brute-force agreement",
       [] {
         CheckResult r = over_windows("brute-force", check_brute_force);
         r.merge(check_general_q_examples());
         return r;
       }},
      {11, "round-trips", [] { return over_windows("round-trip", check_round_trips); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    std::string crash;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      crash = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.budget_seconds == 0 || secs < c.budget_seconds;
    const bool ok = crash.empty() && r.ok() && in_time;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << r.checked - r.failed
              << "/" << r.checked << " checks, " << std::fixed << std::setprecision(2) << secs << " s)\n";
    if (!crash.empty()) std::cout << "    exception: " << crash << "\n";
    if (!in_time) std::cout << "    over the " << c.budget_seconds << " s budget\n";
    for (const auto& f : r.failures) std::cout << "    " << f << "\n";
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
