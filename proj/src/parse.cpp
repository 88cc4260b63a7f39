#include "superext/parse.hpp"

#include <cctype>
#include <regex>

#include "superext/error.hpp"

namespace superext {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

}  // namespace

AlgebraContext parse_algebra(const std::string& text, const std::string& block) {
  static const std::regex gl_re(R"(gl\((\d+)\|(\d+)\))");
  static const std::regex osp_re(R"(osp\((\d+)\|(\d+)\))");
  static const std::regex q_re(R"(q_?\(?(\d+)\)?)");
  const std::string t = strip(text);
  std::smatch m;
  Block b;
  if (block == "B0") {
    b = Block::B0;
  } else if (block == "B1/2" || block == "BHalf") {
    b = Block::BHalf;
  } else {
    throw Error(ErrorCode::UsageError, "unknown block '" + block + "'");
  }
  if (std::regex_match(t, m, gl_re)) {
    const int a = std::stoi(m[1]), c = std::stoi(m[2]);
    if (a != c) throw Error(ErrorCode::UsageError, "only gl(n|n) is supported");
    if (b != Block::B0) throw Error(ErrorCode::UsageError, "gl has only the block B0");
    return AlgebraContext::gl(a);
  }
  if (std::regex_match(t, m, osp_re)) {
    const int big = std::stoi(m[1]), two_n = std::stoi(m[2]);
    if (two_n % 2 != 0) throw Error(ErrorCode::UsageError, "osp(M|2n) needs an even second entry");
    const int tt = big - two_n;
    if (tt < 0 || tt > 2) throw Error(ErrorCode::UsageError, "only osp(2n+t|2n) with t in {0,1,2}");
    if (b != Block::B0) throw Error(ErrorCode::UsageError, "osp has only the block B0");
    return AlgebraContext::osp(two_n / 2, tt);
  }
  if (std::regex_match(t, m, q_re)) return AlgebraContext::q(std::stoi(m[1]), b);
  throw Error(ErrorCode::UsageError, "unknown algebra '" + text + "'");
}

int parse_half(const std::string& text) {
  static const std::regex re(R"(([+-]?\d+)(/2)?)");
  const std::string t = strip(text);
  std::smatch m;
  if (!std::regex_match(t, m, re)) throw Error(ErrorCode::ParseError, "bad number '" + text + "'");
  const int v = std::stoi(m[1]);
  if (m[2].matched) {
    if (v % 2 == 0) throw Error(ErrorCode::ParseError, "'" + t + "' is not in lowest terms");
    return v;
  }
  return 2 * v;
}

WeightSpec parse_weight_spec(const std::string& text) {
  WeightSpec spec;
  std::string t = strip(text);
  // A lone leading sign token: "+ 2,1", "-,0,0", "+" alone.
  if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
    const std::size_t k = t.find_first_not_of(" \t", 1);
    if (k == std::string::npos || t[k] == ',' || k > 1) {
      spec.sign = t[0] == '+' ? 1 : -1;
      t = k == std::string::npos ? "" : t.substr(t[k] == ',' ? k + 1 : k);
      t = strip(t);
    }
  }
  if (t.empty()) return spec;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = t.find(',', start);
    spec.twice.push_back(parse_half(t.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return spec;
}

BlockWeight parse_block_weight(const AlgebraContext& ctx, const std::string& text) {
  const WeightSpec s = parse_weight_spec(text);
  return validate_weight(ctx, s.twice, s.sign);
}

GeneralQWeight parse_general_q(const std::string& text) {
  const WeightSpec s = parse_weight_spec(text);
  if (s.sign) throw Error(ErrorCode::ParseError, "q weights take no sign");
  return make_general_q(s.twice);
}

}  // namespace superext
