#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace iwahori {

inline constexpr std::size_t kMaxRank = 8;

/// Integer vector in the fundamental-coweight basis, so that the pairing
/// <alpha_i, mu> is simply coordinate i.  Unused slots beyond rank() are
/// always zero, which keeps comparison and hashing trivial.
class Coweight {
 public:
  Coweight() = default;
  static Coweight zero(std::size_t rank);
  Coweight(std::initializer_list<int> coords);
  explicit Coweight(std::span<const int> coords);

  std::size_t rank() const { return rank_; }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }

  std::vector<int> coords() const;
  bool is_zero() const;
  bool is_dominant() const;
  /// Sum of coordinates; used as the height bound for tables.
  int height() const;

  Coweight& operator+=(const Coweight& o);
  Coweight& operator-=(const Coweight& o);
  Coweight& operator*=(int k);
  friend Coweight operator+(Coweight a, const Coweight& b) { return a += b; }
  friend Coweight operator-(Coweight a, const Coweight& b) { return a -= b; }
  friend Coweight operator*(int k, Coweight a) { return a *= k; }
  Coweight operator-() const;

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  /// "[1,-2,0]"
  std::string to_string() const;

 private:
  std::array<std::int32_t, kMaxRank> coords_{};
  std::uint8_t rank_ = 0;
};

/// Parse "1,-2,0" (whitespace tolerated) into a coweight of the given rank.
Coweight parse_coweight(const std::string& text, std::size_t rank);

struct CoweightHash {
  std::size_t operator()(const Coweight& mu) const noexcept;
};

}  // namespace iwahori
