#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "iwahori/coweight.hpp"

namespace iwahori {

/// Irreducible Cartan type such as A2, B3 or G2.
struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string to_string() const;
  /// Case-insensitive, e.g. "b3".  Throws ParseError or InadmissibleType.
  static CartanType parse(const std::string& text);

  friend bool operator==(const CartanType&, const CartanType&) = default;
};

bool is_admissible(const CartanType& t);

enum class LengthClass { Long, Short };

const char* to_string(LengthClass c);

struct PositiveRoot {
  /// Coefficients in the basis of simple roots (all >= 0).
  std::vector<int> simple_coeffs;
  /// Coroot in fundamental-coweight coordinates.
  Coweight coroot;
  LengthClass length = LengthClass::Long;
  int height = 0;
};

/// Cartan datum plus the positive roots and coroots of an irreducible reduced
/// root system.  Conventions: A(i,j) = <alpha_i, alpha_j^vee>, so the j-th
/// fundamental-coweight coordinate of alpha_i^vee is A(j,i).  Simple roots
/// are numbered as in Bourbaki.
class RootSystem {
 public:
  static RootSystem build(const CartanType& t);

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return rank_; }
  int cartan(std::size_t i, std::size_t j) const { return cartan_[i * rank_ + j]; }
  int braid_order(std::size_t i, std::size_t j) const;
  bool simply_laced() const { return simply_laced_; }

  const std::vector<PositiveRoot>& positive_roots() const { return roots_; }
  std::size_t num_positive_roots() const { return roots_.size(); }
  /// Positive roots are sorted by height, so alpha_i sits at index i.
  const PositiveRoot& simple_root(std::size_t i) const { return roots_[i]; }
  const Coweight& simple_coroot(std::size_t i) const { return roots_[i].coroot; }
  LengthClass simple_length(std::size_t i) const { return roots_[i].length; }

  /// s_i(mu) = mu - <alpha_i, mu> alpha_i^vee
  Coweight reflect(std::size_t i, const Coweight& mu) const;
  /// Root coefficients of s_i(beta).
  std::vector<int> reflect_root(std::size_t i, std::span<const int> beta) const;
  /// <beta, mu> for a root given by simple-root coefficients.
  int pairing(std::span<const int> beta, const Coweight& mu) const;

  /// Index into positive_roots() of +beta or -beta; -1 if not a root.
  int find_root(std::span<const int> beta, bool* negative = nullptr) const;

  /// Half the sum of the coroots of the selected positive roots.  Throws
  /// NonIntegralCoweight if the half-sum leaves the coweight lattice.
  Coweight half_sum_of_coroots(const std::vector<bool>& selected) const;

  /// Half sum of positive coroots; every coordinate equals 1.
  Coweight rho() const;

  /// Sum over positive roots of <alpha, lambda>, i.e. <2 rho, lambda>.
  int two_rho_pairing(const Coweight& lambda) const;

  Coweight zero() const { return Coweight::zero(rank_); }

 private:
  CartanType type_;
  std::size_t rank_ = 0;
  std::vector<int> cartan_;
  bool simply_laced_ = true;
  std::vector<PositiveRoot> roots_;
  std::map<std::vector<int>, int> root_index_;
};

RootSystem build_root_system(const CartanType& t);
Coweight reflect(const RootSystem& rs, std::size_t i, const Coweight& mu);
Coweight rho(const RootSystem& rs);

/// One element of the finite Weyl group.  The action matrix acts on column
/// vectors of fundamental-coweight coordinates and equals the product of the
/// simple-reflection matrices along the reduced word.
struct WeylElement {
  std::size_t index = 0;
  std::vector<int> reduced_word;
  std::vector<int> action;  // row-major rank x rank
  int length = 0;

  int sign() const { return (length % 2 == 0) ? 1 : -1; }
};

inline constexpr std::size_t kDefaultMaxWeylOrder = 400;

/// Finite Weyl group enumerated breadth-first under right multiplication by
/// simple reflections.  Generators are tried in increasing order, so every
/// stored word is the ShortLex-minimal reduced word of its element, and the
/// set of stored words is closed under taking prefixes and suffixes.
class WeylGroup {
 public:
  /// Throws GroupTooLarge once more than max_order elements appear.
  static WeylGroup enumerate(const RootSystem& rs,
                             std::size_t max_order = kDefaultMaxWeylOrder);

  const RootSystem& root_system() const { return *rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t w) const { return elements_[w]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t identity() const { return 0; }
  std::size_t longest() const { return longest_; }
  std::size_t simple(std::size_t i) const { return simple_[i]; }

  std::size_t left_mult(std::size_t i, std::size_t w) const { return left_[i][w]; }
  std::size_t right_mult(std::size_t w, std::size_t i) const { return right_[i][w]; }
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t w) const { return inverse_[w]; }
  /// Element represented by an arbitrary (not necessarily reduced) word.
  std::size_t from_word(std::span<const int> word) const;
  bool is_reduced(std::span<const int> word) const;

  Coweight act(std::size_t w, const Coweight& mu) const;

  /// Every reduced word of w, in lexicographic order.
  std::vector<std::vector<int>> reduced_words(std::size_t w) const;

  /// Number of positive roots beta with w^{-1}(beta) negative, counted
  /// directly on root coordinates.
  int count_inversions(std::size_t w) const;

 private:
  const RootSystem* rs_ = nullptr;
  std::vector<WeylElement> elements_;
  std::map<std::vector<int>, std::size_t> by_action_;
  std::vector<std::vector<std::size_t>> left_;
  std::vector<std::vector<std::size_t>> right_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> simple_;
  std::size_t longest_ = 0;
};

/// The group keeps a pointer to rs, which must outlive it.
WeylGroup enumerate_weyl(const RootSystem& rs,
                         std::size_t max_order = kDefaultMaxWeylOrder);
const WeylElement& longest_element(const WeylGroup& W);

}  // namespace iwahori
