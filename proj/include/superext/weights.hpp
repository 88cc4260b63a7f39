#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace superext {

enum class Family { GL, OSP, Q };
enum class Block { B0, BHalf };

/// Which algebra and which block a weight lives in.
///
/// The rank n is the number of weight coordinates.  For OSP the defining
/// superdimension is (2n+t|2n); for Q the algebra is q_m with m = 2n+ell.
/// The half-integral block exists only for Q with ell = 0.
struct AlgebraContext {
  Family family = Family::GL;
  int n = 0;
  int t = 0;
  int ell = 0;
  Block block = Block::B0;

  static AlgebraContext gl(int n);
  static AlgebraContext osp(int n, int t);
  static AlgebraContext q(int m, Block block = Block::B0);

  int m() const { return 2 * n + ell; }
  bool half() const { return block == Block::BHalf; }
  /// Position 0 can hold a stack of several x (every B0 block except GL).
  bool has_zero_stack() const { return family != Family::GL && !half(); }
  /// A '>' sits at position 0 (osp(2n+2|2n) and q_{2n+1}).
  bool gt_at_zero() const {
    return (family == Family::OSP && t == 2) || (family == Family::Q && ell == 1);
  }
  /// The '>' at position 0 carries a wobbly arch (q_{2n+1} only).
  bool wobbly() const { return family == Family::Q && ell == 1; }
  bool signed_family() const { return family == Family::OSP && t != 2; }
  /// Same family and block, rank replaced by s.
  AlgebraContext with_rank(int s) const;

  std::string name() const;
  std::string block_name() const;

  friend bool operator==(const AlgebraContext&, const AlgebraContext&) = default;
};

/// A dominant weight of the block.
///
/// Coordinates are stored as integer slots: the value of coordinate i is
/// coords[i] in B0 and coords[i] + 1/2 in the half-integral block, so the
/// slot doubles as the diagram position index.  For OSP t=1 the coordinates
/// are the positions of the t=1 weight diagram; all K-data for t=1 is
/// computed through the tau-preimage.
struct BlockWeight {
  AlgebraContext ctx;
  std::vector<int> coords;
  int sign = 0;  // 0 = unsigned, otherwise +1 / -1

  /// Coordinates as numerators over 2.
  std::vector<int> twice() const;

  friend bool operator==(const BlockWeight&, const BlockWeight&) = default;
};

/// Deterministic listing order: coordinates lexicographically ascending, then
/// sign '+' before '-'.
bool weight_less(const BlockWeight& a, const BlockWeight& b);

/// Formats a half-integer given by its numerator over 2 ("3", "-1", "3/2").
std::string format_half(int twice);
/// Comma-separated coordinates with a leading sign token when signed.
std::string format_weight(const BlockWeight& w);

/// Validates coordinates given as numerators over 2.
BlockWeight validate_weight(const AlgebraContext& ctx, std::span<const int> twice_coords,
                            std::optional<int> sign = std::nullopt);
/// Same check for coordinates already in slot form.
BlockWeight weight_from_slots(const AlgebraContext& ctx, std::vector<int> slots, int sign);

inline constexpr std::size_t kDefaultEnumerationCap = 500000;

/// All block weights with coordinates in [min, max] (numerators over 2).
/// The default lower bound is -max for GL and 0 otherwise.
std::vector<BlockWeight> enumerate_block(const AlgebraContext& ctx, int max_twice,
                                         std::optional<int> min_twice = std::nullopt,
                                         std::size_t cap = kDefaultEnumerationCap);

/// The weight 0 of a B0 block (GL included); the least weight of the
/// half-integral block.
BlockWeight base_weight(const AlgebraContext& ctx);

bool is_zero_weight(const BlockWeight& w);

/// Number of zero coordinates.
int zero_count(const BlockWeight& w);
/// Number of x at the zero position; 0 for GL and the half-integral block.
/// For OSP t=1 this is the tail of the tau-preimage.
int tail(const BlockWeight& w);

/// Twice the norm used by the parity grading.
int norm_twice(const BlockWeight& w);
/// (||lambda|| - ||nu||) mod 2.
int pari_rel(const BlockWeight& lambda, const BlockWeight& nu);
/// Parity relative to base_weight for the half-integral block; the integral
/// value ||lambda|| mod 2 otherwise.
int pari_abs(const BlockWeight& w);

/// tau: osp(2n+2|2n) weights to osp(2n+1|2n) weights, and back.
BlockWeight tau_weight(const BlockWeight& w);
BlockWeight tau_inv_weight(const BlockWeight& w);

/// lambda in the epsilon/delta basis, e.g. "ε1-ε4" or "2ε1+2δ1".
std::string to_epsilon_delta(const BlockWeight& w);

/// Coordinatewise comparison nu <= lambda (same rank, same sign or unsigned).
bool coordinate_dominated(const BlockWeight& nu, const BlockWeight& lambda);

// ---------------------------------------------------------------------------
// General q_m weights

/// mu = sum a_i eps_i in P^+(q_m); coordinates as numerators over 2.
struct GeneralQWeight {
  std::vector<int> twice;

  int m() const { return static_cast<int>(twice.size()); }
  bool integral() const;

  friend bool operator==(const GeneralQWeight&, const GeneralQWeight&) = default;
  friend auto operator<=>(const GeneralQWeight&, const GeneralQWeight&) = default;
};

GeneralQWeight make_general_q(std::vector<int> twice);
std::string format_general(const GeneralQWeight& w);
/// q_m coordinates of a Q block weight: (l_1..l_n, [0], -l_n..-l_1).
GeneralQWeight lift_block_weight(const BlockWeight& w);

struct CentralCharacter {
  std::vector<int> core_twice;  // ascending
  bool integral = true;
  int ell_of = 0;

  /// core minus {0} has an odd number of elements.
  bool pi_invariant() const;
  std::string to_string() const;

  friend bool operator==(const CentralCharacter&, const CentralCharacter&) = default;
};

CentralCharacter core_of(const GeneralQWeight& w);
int atypicality(const GeneralQWeight& w);
bool is_stable(const GeneralQWeight& w);
bool has_zero_coordinate(const GeneralQWeight& w);

/// Erases the core symbols at nonzero positions; the result lives in
/// q_{2k+ell(w)} where k is the atypicality.
std::pair<AlgebraContext, BlockWeight> reduce(const GeneralQWeight& w);

}  // namespace superext
