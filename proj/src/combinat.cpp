#include "qwb/combinat.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>

namespace qwb {

namespace {

std::vector<int> json_int_list(const nlohmann::json& j, std::string_view what) {
  if (!j.is_array()) throw CombinatError(std::string(what) + ": expected a bracketed integer list");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw CombinatError(std::string(what) + ": entries must be integers");
    out.push_back(v.get<int>());
  }
  return out;
}

nlohmann::json parse_json(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw CombinatError(std::string(what) + ": cannot parse '" + std::string(text) + "'");
  }
}

std::string join_ints(const std::vector<int>& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(v[k]);
  }
  return out + "]";
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) throw CombinatError("partition parts must be positive");
    if (k && parts[k] > parts[k - 1]) throw CombinatError("partition parts must be weakly decreasing");
    size_ += parts[k];
  }
  parts_ = std::move(parts);
}

Partition Partition::parse(std::string_view text) {
  return Partition(json_int_list(parse_json(text, "partition"), "partition"));
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int k = 0; k < p; ++k) ++c[k];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (int i = 1; i <= o.length(); ++i)
    if (o.part(i) > part(i)) return false;
  return true;
}

std::string Partition::to_string() const { return join_ints(parts_); }

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int maxpart) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

Order dominance_compare(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return Order::Incomparable;
  bool ge = true, le = true;
  int sa = 0, sb = 0;
  const int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) ge = false;
    if (sa > sb) le = false;
  }
  if (ge && le) return Order::Equal;
  if (ge) return Order::Greater;
  if (le) return Order::Less;
  return Order::Incomparable;
}

// -------------------------------------------------------------- Bipartition

Bipartition Bipartition::parse(std::string_view text) {
  auto j = parse_json(text, "bipartition");
  if (!j.is_array() || j.size() != 2) throw CombinatError("bipartition: expected [[...],[...]]");
  return {Partition(json_int_list(j[0], "bipartition")), Partition(json_int_list(j[1], "bipartition"))};
}

std::string Bipartition::to_string() const { return "[" + first.to_string() + "," + second.to_string() + "]"; }

Order dominance_compare(const Bipartition& a, const Bipartition& b) {
  Order o1 = dominance_compare(a.first, b.first);
  Order o2 = dominance_compare(a.second, b.second);
  if (o1 == Order::Incomparable || o2 == Order::Incomparable) return Order::Incomparable;
  if (o1 == Order::Equal) return o2;
  if (o2 == Order::Equal || o2 == o1) return o1;
  return Order::Incomparable;
}

std::vector<Bipartition> bipartitions(int n1, int n2) {
  std::vector<Bipartition> out;
  for (const auto& a : partitions(n1))
    for (const auto& b : partitions(n2)) out.push_back({a, b});
  return out;
}

// ---------------------------------------------------------------- CellLabel

std::string CellLabel::to_string() const { return "(" + std::to_string(f) + "," + lambda.to_string() + ")"; }

Order compare(const CellLabel& a, const CellLabel& b) {
  if (a.f > b.f) return Order::Greater;
  if (a.f < b.f) return Order::Less;
  return dominance_compare(a.lambda, b.lambda);
}

bool linear_before(const CellLabel& a, const CellLabel& b) {
  if (a.f != b.f) return a.f > b.f;
  if (a.lambda.first != b.lambda.first) return a.lambda.first > b.lambda.first;
  return a.lambda.second > b.lambda.second;
}

std::vector<CellLabel> cell_labels(int r, int s) {
  if (r < 0 || s < 0) throw CombinatError("r and s must be nonnegative");
  std::vector<CellLabel> out;
  for (int f = std::min(r, s); f >= 0; --f)
    for (auto& lam : bipartitions(r - f, s - f)) out.push_back({f, lam});
  return out;
}

// --------------------------------------------------------------------- Node

std::string Node::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + (side == 2 ? ")*" : ")");
}

NodeLists nodes_addable_removable(const Partition& lambda, int side) {
  NodeLists out;
  const int len = lambda.length();
  for (int i = len; i >= 1; --i)
    if (lambda.part(i) > lambda.part(i + 1)) out.removable.push_back({i, lambda.part(i), side});
  for (int i = 1; i <= len + 1; ++i)
    if (i == 1 || lambda.part(i) < lambda.part(i - 1)) out.addable.push_back({i, lambda.part(i) + 1, side});
  return out;
}

Partition remove_node(const Partition& lambda, const Node& p) {
  std::vector<int> parts = lambda.parts();
  if (p.row < 1 || p.row > lambda.length() || parts[p.row - 1] != p.col || lambda.part(p.row + 1) == p.col)
    throw CombinatError("node " + p.to_string() + " is not removable from " + lambda.to_string());
  --parts[p.row - 1];
  return Partition(std::move(parts));
}

Partition add_node(const Partition& lambda, const Node& p) {
  std::vector<int> parts = lambda.parts();
  if (p.row < 1 || p.row > lambda.length() + 1 || lambda.part(p.row) + 1 != p.col ||
      (p.row > 1 && lambda.part(p.row - 1) < p.col))
    throw CombinatError("node " + p.to_string() + " is not addable to " + lambda.to_string());
  if (p.row > lambda.length())
    parts.push_back(1);
  else
    ++parts[p.row - 1];
  return Partition(std::move(parts));
}

// ------------------------------------------------------------------ Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows, int offset) : rows_(std::move(rows)), offset_(offset) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t k = 1; k < rows_.size(); ++k)
    if (rows_[k].size() > rows_[k - 1].size()) throw CombinatError("tableau rows must have partition shape");
  for (const auto& row : rows_)
    if (row.empty()) throw CombinatError("tableau rows must have partition shape");
}

Tableau Tableau::row_reading(const Partition& shape, int offset) {
  std::vector<std::vector<int>> rows;
  int v = offset;
  for (int p : shape.parts()) {
    rows.emplace_back();
    for (int k = 0; k < p; ++k) rows.back().push_back(++v);
  }
  return Tableau(std::move(rows), offset);
}

Tableau Tableau::column_reading(const Partition& shape, int offset) {
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(p, 0);
  int v = offset;
  Partition conj = shape.conjugate();
  for (int c = 0; c < conj.length(); ++c)
    for (int r = 0; r < conj.parts()[c]; ++r) rows[r][c] = ++v;
  return Tableau(std::move(rows), offset);
}

int Tableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

std::optional<std::pair<int, int>> Tableau::position(int value) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == value) return std::make_pair(static_cast<int>(r) + 1, static_cast<int>(c) + 1);
  return std::nullopt;
}

bool Tableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (const auto& row : rows_)
    for (int v : row) {
      int k = v - offset_ - 1;
      if (k < 0 || k >= n || seen[k]) return false;
      seen[k] = true;
    }
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c && rows_[r][c] <= rows_[r][c - 1]) return false;
      if (r && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  return true;
}

bool Tableau::is_semistandard() const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c && rows_[r][c] < rows_[r][c - 1]) return false;
      if (r && rows_[r][c] <= rows_[r - 1][c]) return false;
    }
  return true;
}

Tableau Tableau::restricted(int i) const {
  std::vector<std::vector<int>> rows;
  for (const auto& row : rows_) {
    std::vector<int> kept;
    for (int v : row)
      if (v <= offset_ + i) kept.push_back(v);
    if (kept.empty()) break;
    rows.push_back(std::move(kept));
  }
  return Tableau(std::move(rows), offset_);
}

Tableau Tableau::acted(const Permutation& w) const {
  std::vector<std::vector<int>> rows = rows_;
  for (auto& row : rows)
    for (int& v : row) v = offset_ + w(v - offset_);
  return Tableau(std::move(rows), offset_);
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += "/";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ",";
      out += std::to_string(rows_[r][c]);
    }
  }
  return out.empty() ? "-" : out;
}

std::vector<Tableau> std_tableaux(const Partition& shape, int offset) {
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<std::vector<int>> rows(shape.length());
  std::function<void(int)> place = [&](int v) {
    if (v > n) {
      out.emplace_back(rows, offset);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      int len = static_cast<int>(rows[r].size());
      if (len < shape.parts()[r] && (r == 0 || static_cast<int>(rows[r - 1].size()) > len)) {
        rows[r].push_back(offset + v);
        place(v + 1);
        rows[r].pop_back();
      }
    }
  };
  place(1);
  return out;
}

std::vector<BiTableau> std_tableaux(const Bipartition& shape, int offset) {
  std::vector<BiTableau> out;
  auto a = std_tableaux(shape.first, offset);
  auto b = std_tableaux(shape.second, offset);
  for (const auto& x : a)
    for (const auto& y : b) out.push_back({x, y});
  return out;
}

Permutation d_perm(const Tableau& t) {
  if (!t.is_standard()) throw CombinatError("d_perm requires a standard tableau");
  const int off = t.offset();
  std::vector<int> img(t.size());
  Tableau base = Tableau::row_reading(t.shape(), off);
  for (std::size_t r = 0; r < base.rows().size(); ++r)
    for (std::size_t c = 0; c < base.rows()[r].size(); ++c) img[base.rows()[r][c] - off - 1] = t.rows()[r][c] - off;
  return Permutation::from_images(std::move(img));
}

// ----------------------------------------------------------------- CosetRep

namespace {

// s_{k,i} = s_k s_{k+1} ... s_{i-1} for i > k, identity for i = k.
void append_chain(std::vector<int>& word, int k, int i) {
  for (int a = k; a < i; ++a) word.push_back(a);
}

}  // namespace

Permutation CosetRep::unstarred() const {
  std::vector<int> word;
  for (int k = f(); k >= 1; --k) append_chain(word, k, i[k - 1]);
  return Permutation::from_word(r, word);
}

Permutation CosetRep::starred() const {
  std::vector<int> word;
  for (int k = f(); k >= 1; --k) append_chain(word, k, j[k - 1]);
  return Permutation::from_word(s, word);
}

std::vector<std::pair<int, int>> CosetRep::word() const {
  std::vector<std::pair<int, int>> out;
  for (int k = f(); k >= 1; --k) {
    for (int a = k; a < i[k - 1]; ++a) out.emplace_back(1, a);
    for (int a = k; a < j[k - 1]; ++a) out.emplace_back(2, a);
  }
  return out;
}

std::string CosetRep::to_string() const { return "i=" + join_ints(i) + " j=" + join_ints(j); }

std::vector<CosetRep> coset_reps(int r, int s, int f) {
  if (f < 0 || f > std::min(r, s)) throw CombinatError("coset_reps: need 0 <= f <= min(r, s)");
  std::vector<CosetRep> out;
  CosetRep cur{r, s, std::vector<int>(f), std::vector<int>(f)};
  std::function<void(int, int)> rec = [&](int k, int lo) {
    if (k > f) {
      out.push_back(cur);
      return;
    }
    for (int a = lo; a <= r; ++a) {
      cur.i[k - 1] = a;
      for (int b = k; b <= s; ++b) {
        cur.j[k - 1] = b;
        rec(k + 1, a + 1);
      }
    }
  };
  rec(1, 1);
  return out;
}

// ------------------------------------------------------------------ scalars

FieldElement content_scalar(const Node& p, const FieldPtr& field) {
  if (p.side != 1 && p.side != 2) throw CombinatError("node side must be 1 or 2");
  require_q_invertible(*field);
  const int k = p.residue();
  const Field& F = *field;
  Scalar qq = F.sub(F.q(), q_power(F, -1));
  Scalar v = p.side == 1 ? F.div(F.sub(F.one(), q_power(F, 2 * k)), qq)
                         : F.div(F.sub(F.one(), q_power(F, -2 * k)), F.neg(qq));
  return {field, v};
}

bool e_restricted(const Partition& lambda, const QuantumChar& e) {
  if (e.is_infinite()) return true;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda.part(i) - lambda.part(i + 1) >= *e.value) return false;
  return true;
}

bool e_restricted(const Bipartition& lambda, const QuantumChar& e) {
  return e_restricted(lambda.first, e) && e_restricted(lambda.second, e);
}

Tableau type_tableau(const Tableau& s, const Partition& mu) {
  if (s.size() != mu.size()) throw CombinatError("type tableau: sizes differ");
  Tableau tmu = Tableau::row_reading(mu, s.offset());
  std::vector<std::vector<int>> rows = s.rows();
  for (auto& row : rows)
    for (int& v : row) {
      auto pos = tmu.position(v);
      if (!pos) throw CombinatError("type tableau: entry out of range");
      v = pos->first;
    }
  return Tableau(std::move(rows), 0);
}

TruncationCheck semistandard_and_truncation_check(const Partition& lambda, const Partition& mu,
                                                  const Tableau& S, const Tableau& s) {
  const int n = lambda.size();
  if (mu.size() != n || mu.empty()) throw CombinatError("lambda and mu must be nonempty partitions of the same n");
  if (mu.part(mu.length()) != 1) throw CombinatError("the last part of mu must be 1");
  if (S.shape() != lambda || s.shape() != lambda) throw CombinatError("S and s must have shape lambda");
  if (!S.is_semistandard()) throw CombinatError("S is not semistandard");
  if (!s.is_standard()) throw CombinatError("s is not standard");
  if (type_tableau(s, mu).rows() != S.rows()) throw CombinatError("mu(s) differs from S");

  TruncationCheck out;
  std::vector<int> nu_parts = mu.parts();
  nu_parts.pop_back();
  out.nu = Partition(std::move(nu_parts));
  out.shape_before = s.restricted(n - 1).shape();
  Order o = dominance_compare(out.shape_before, out.nu);
  out.dominates = o == Order::Greater || o == Order::Equal;
  out.equal = o == Order::Equal;
  for (const Node& p : nodes_addable_removable(out.nu).addable)
    if (add_node(out.nu, p) == lambda) out.lambda_is_nu_plus_node = true;
  out.verdict = out.dominates && (!out.equal || out.lambda_is_nu_plus_node);
  return out;
}

}  // namespace qwb
