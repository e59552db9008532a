#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gspec {

/// {b_0, ..., b_{d-1}; c_1, ..., c_d}. The array with d = 0 describes K1.
struct IntersectionArray {
  std::vector<int> b;
  std::vector<int> c;

  int diameter() const { return static_cast<int>(b.size()); }
  int k() const { return b.empty() ? 0 : b.front(); }
  /// b_i with b_d = 0 (and 0 outside 0..d).
  int b_at(int i) const { return i >= 0 && i < diameter() ? b[static_cast<std::size_t>(i)] : 0; }
  /// c_i with c_0 = 0 (and 0 outside 1..d).
  int c_at(int i) const { return i >= 1 && i <= diameter() ? c[static_cast<std::size_t>(i - 1)] : 0; }
  /// a_i = k - b_i - c_i.
  int a_at(int i) const { return k() - b_at(i) - c_at(i); }

  /// Throws PreconditionError unless |b| = |c|, c_1 = 1, all listed entries
  /// are positive and every a_i is non-negative.
  void validate() const;

  std::string str() const;

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
  friend auto operator<=>(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Reads "{3,2,1;1,2,3}" (braces optional, whitespace ignored) and validates.
IntersectionArray parse_intersection_array(std::string_view text);

}  // namespace gspec
