#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superext/weights.hpp"

namespace superext {

/// "gl(3|3)", "osp(6|4)", "q(4)" plus the block flag ("B0" or "B1/2").
AlgebraContext parse_algebra(const std::string& text, const std::string& block = "B0");

/// A rational with denominator 1 or 2 ("3", "-1", "3/2"), as a numerator over 2.
int parse_half(const std::string& text);

struct WeightSpec {
  std::vector<int> twice;
  std::optional<int> sign;
};

/// "2,1", "+ 2,1", "-,0,0", "3/2,1/2".  An empty string is the empty weight.
WeightSpec parse_weight_spec(const std::string& text);

BlockWeight parse_block_weight(const AlgebraContext& ctx, const std::string& text);
GeneralQWeight parse_general_q(const std::string& text);

}  // namespace superext
