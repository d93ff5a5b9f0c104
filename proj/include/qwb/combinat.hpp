#pragma once

#include "qwb/field.hpp"
#include "qwb/permutation.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwb {

class CombinatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Result of comparing two elements of a partial order.
enum class Order { Less, Equal, Greater, Incomparable };

class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; throws unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);
  /// "[3,1]" or "[]".
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Row length, 1-based; zero past the last row.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }
  Partition conjugate() const;
  bool contains(const Partition& o) const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// All partitions of n, lexicographically decreasing ((n) first).
std::vector<Partition> partitions(int n);

/// Dominance order; partitions of different sizes are incomparable.
Order dominance_compare(const Partition& a, const Partition& b);
inline bool dominance_ge(const Partition& a, const Partition& b) {
  Order o = dominance_compare(a, b);
  return o == Order::Greater || o == Order::Equal;
}

struct Bipartition {
  Partition first;
  Partition second;

  int size() const { return first.size() + second.size(); }
  /// "[[2,1],[1]]".
  static Bipartition parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// Componentwise dominance.
Order dominance_compare(const Bipartition& a, const Bipartition& b);
std::vector<Bipartition> bipartitions(int n1, int n2);

/// Cell label (f, lambda) with lambda in Lambda^f_{r,s}.
struct CellLabel {
  int f = 0;
  Bipartition lambda;

  std::string to_string() const;
  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// Cell poset: larger f wins; equal f falls back to componentwise dominance.
Order compare(const CellLabel& a, const CellLabel& b);
inline bool dominates(const CellLabel& a, const CellLabel& b) {
  Order o = compare(a, b);
  return o == Order::Greater || o == Order::Equal;
}

/// Fixed linear extension of the cell poset: f descending, then (first,
/// second) lexicographically descending. Returns true when a precedes b.
bool linear_before(const CellLabel& a, const CellLabel& b);

/// All labels of B_{r,s} in linear-extension order.
std::vector<CellLabel> cell_labels(int r, int s);

struct Node {
  int row = 1;
  int col = 1;
  int side = 1;

  int residue() const { return col - row; }
  std::string to_string() const;
  friend bool operator==(const Node&, const Node&) = default;
};

struct NodeLists {
  std::vector<Node> removable;
  std::vector<Node> addable;
};

/// Removable nodes bottom row first, addable nodes top row first. With this
/// order, removing removable[k] or adding addable[k] gives shapes that
/// strictly decrease in dominance as k grows.
NodeLists nodes_addable_removable(const Partition& lambda, int side = 1);

Partition remove_node(const Partition& lambda, const Node& p);
Partition add_node(const Partition& lambda, const Node& p);

/// Row-filled tableau whose entries are offset+1, ..., offset+n when standard.
class Tableau {
 public:
  Tableau() = default;
  Tableau(std::vector<std::vector<int>> rows, int offset = 0);

  /// t^lambda: entries filled along rows.
  static Tableau row_reading(const Partition& shape, int offset = 0);
  /// t_lambda: entries filled down columns.
  static Tableau column_reading(const Partition& shape, int offset = 0);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int offset() const { return offset_; }
  int size() const;
  Partition shape() const;
  /// 1-based coordinates.
  int entry(int row, int col) const { return rows_[row - 1][col - 1]; }
  /// Row and column of a value, 1-based; nullopt when absent.
  std::optional<std::pair<int, int>> position(int value) const;

  bool is_standard() const;
  /// Rows weakly increasing, columns strictly increasing.
  bool is_semistandard() const;
  /// s restricted to entries <= offset + i.
  Tableau restricted(int i) const;
  /// Entry v becomes offset + (v - offset)w; w acts on the shifted range.
  Tableau acted(const Permutation& w) const;

  std::string to_string() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
  int offset_ = 0;
};

using StdTableau = Tableau;

/// Std(lambda): tableaux ordered by the row sequence of 1, 2, ..., n, so
/// the row-reading tableau comes first.
std::vector<Tableau> std_tableaux(const Partition& shape, int offset = 0);

struct BiTableau {
  Tableau first;
  Tableau second;
  friend bool operator==(const BiTableau&, const BiTableau&) = default;
};

/// Std(lambda^(1)) x Std(lambda^(2)) with the first factor varying slowest.
std::vector<BiTableau> std_tableaux(const Bipartition& shape, int offset = 0);

/// d(t): the permutation with t^lambda d(t) = t, acting on 1..n (entries
/// are read relative to the offset).
Permutation d_perm(const Tableau& t);

/// A right coset representative s_{f,i_f} s*_{f,j_f} ... s_{1,i_1} s*_{1,j_1}.
struct CosetRep {
  int r = 0;
  int s = 0;
  std::vector<int> i;  // i_1 < ... < i_f
  std::vector<int> j;  // j_k >= k

  int f() const { return static_cast<int>(i.size()); }
  /// Permutations of {1..r} and {1..s}; the two factors commute.
  Permutation unstarred() const;
  Permutation starred() const;
  /// Generator indices of g_d, left to right: side 1 for g, side 2 for g*.
  std::vector<std::pair<int, int>> word() const;
  std::string to_string() const;
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

std::vector<CosetRep> coset_reps(int r, int s, int f);

/// side 1: (1 - q^{2k})/(q - q^{-1}); side 2: (1 - q^{-2k})/(q^{-1} - q),
/// with k the residue of the node.
FieldElement content_scalar(const Node& p, const FieldPtr& field);

/// Every gap lambda_i - lambda_{i+1} (including the last part) is < e.
bool e_restricted(const Partition& lambda, const QuantumChar& e);
bool e_restricted(const Bipartition& lambda, const QuantumChar& e);

/// mu(s): entry i replaced by the row of i in t^mu.
Tableau type_tableau(const Tableau& s, const Partition& mu);

struct TruncationCheck {
  Partition nu;             // mu with its last node removed
  Partition shape_before;   // shape of s restricted to n-1
  bool dominates = false;   // shape_before dominates nu
  bool equal = false;       // shape_before == nu
  bool lambda_is_nu_plus_node = false;
  /// dominates and (equal implies lambda_is_nu_plus_node). The converse
  /// holds only for some s, so callers check it over all witnesses.
  bool verdict = false;
};

/// Checks the dominance and equality conclusions for a standard s whose
/// type tableau mu(s) is the semistandard S. Requires the last part of mu
/// to be 1; throws CombinatError on any precondition failure.
TruncationCheck semistandard_and_truncation_check(const Partition& lambda, const Partition& mu,
                                                  const Tableau& S, const Tableau& s);

}  // namespace qwb
