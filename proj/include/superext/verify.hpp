#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "superext/weights.hpp"

namespace superext {

/// Outcome of one property over one window.
struct CheckResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few only

  bool ok() const { return failed == 0 && checked > 0; }
  void pass() { ++checked; }
  void fail(const std::string& why);
  void merge(const CheckResult& other);
};

struct Window {
  AlgebraContext ctx;
  int max_twice = 0;
  std::optional<int> min_twice;
};

// Property checks over a window.
CheckResult check_oracle(const Window& w);         // closed form == recursion (q only)
CheckResult check_parity_shape(const Window& w);   // monomial / two-term shapes and exponent parity
CheckResult check_w_support(const Window& w);      // k_hat lives on w^{s_zero}
CheckResult check_out_degree(const Window& w);     // successor counts and multiedges
CheckResult check_bipartite_window(const Window& w);
CheckResult check_brute_force(const Window& w);    // successors / predecessors vs scans, ext <= k0
CheckResult check_round_trips(const Window& w);

/// (B_{>p};K0) for every family at rank n against the half-integral q window.
CheckResult check_window_isomorphism(int n, int p);

// Fixed reference data.
CheckResult check_golden_tables();
CheckResult check_closed_formulas();
CheckResult check_graph_figures();
CheckResult check_general_q_examples();

/// Every property that applies to the window's block.
std::vector<CheckResult> verify_block(const Window& w);

}  // namespace superext
