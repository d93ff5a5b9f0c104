#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace qwb {

/// Permutation of {1, ..., n} acting on the right: (i)w. Products compose
/// left to right, (i)(xy) = ((i)x)y, matching s_{i_1} s_{i_2} ... words.
class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int n);
  /// Simple transposition s_i = (i, i+1).
  static Permutation simple(int n, int i);
  /// Product s_{w[0]} s_{w[1]} ... of simple transpositions.
  static Permutation from_word(int n, const std::vector<int>& word);
  /// One-line form: images[k] = (k+1)w.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& images() const { return img_; }

  Permutation operator*(const Permutation& o) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// Number of inversions.
  int length() const;
  /// l(w s_i) < l(w).
  bool right_descent(int i) const;
  /// l(s_i w) < l(w).
  bool left_descent(int i) const;
  Permutation times_simple_right(int i) const;
  Permutation times_simple_left(int i) const;
  /// Reduced word a_1 ... a_k with w = s_{a_1} ... s_{a_k}; deterministic.
  std::vector<int> reduced_word() const;

  /// Index in [0, n!) from the Lehmer code; inverse of unrank.
  std::size_t rank() const;
  static Permutation unrank(int n, std::size_t index);

  std::string to_string() const;
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<int> img_;
};

std::size_t factorial(int n);
std::size_t binomial(int n, int k);

}  // namespace qwb
