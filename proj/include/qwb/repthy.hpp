#pragma once

#include "qwb/cellular.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qwb {

/// fδ − ρ^{-1} Σ_{p ∈ λ1} c(p) − ρ Σ_{p ∈ λ2} c(p).
FieldElement central_scalar(const CellLabel& label, const FieldPtr& field);

struct CentralCharacter {
  CellLabel label;
  FieldElement scalar;
  /// Filled when the action of c_{r,s} on C(f, λ) was computed.
  std::optional<bool> matches_action;
};

/// Closed form only.
CentralCharacter central_character(const CellLabel& label, const FieldPtr& field);
/// Closed form, compared against the action matrix of c_{r,s} on the cell module.
CentralCharacter central_character(const CellularPtr& cb, const CellLabel& label);
/// Every label of the algebra, each checked against the action.
std::vector<CentralCharacter> central_character_table(const CellularPtr& cb);
/// Pairs of distinct labels whose scalars coincide.
std::vector<std::pair<CellLabel, CellLabel>> central_scalar_collisions(int r, int s, const FieldPtr& field);

/// Labels of the simple modules: e-restricted λ, without f = r when δ = 0 and r = s.
std::vector<CellLabel> classify_simples(int r, int s, const FieldPtr& field);
/// Labels whose Gram matrix has positive rank.
std::vector<CellLabel> simples_by_gram(const CellularPtr& cb);
bool is_quasi_hereditary(int r, int s, const FieldPtr& field);

enum class SemisimpleMode { ClosedForm, Gram, Both };
enum class SemisimpleReason { CharacteristicTooSmall, DeltaZeroList, RhoPowerCoincidence, Generic };
std::string to_string(SemisimpleReason reason);

struct SemisimplicityVerdict {
  bool semisimple = false;
  SemisimpleReason reason = SemisimpleReason::Generic;
  /// The exponent a with ρ² = q^{2a}, |a| ≤ r+s−2, when that decided it.
  std::optional<int> coincidence;
  /// Labels with singular Gram matrices (Gram and Both modes).
  std::vector<CellLabel> witnesses;
  /// Whether the Gram determinants were computed.
  bool gram_computed = false;
  std::optional<bool> gram_verdict;
};

/// e ≤ max(r, s) gives false before any Gram work. Both mode raises
/// IntegrityError naming a label when the two verdicts disagree. The engine
/// is built on demand when cb is null.
SemisimplicityVerdict semisimplicity(int r, int s, const FieldPtr& field, SemisimpleMode mode,
                                     CellularPtr cb = nullptr);

/// Label (1, ((r−1), ∅)) for the row kind, (1, ((1^{r−1}), ∅)) for the column kind.
enum class ArcKind { Row, Column };
std::string to_string(ArcKind kind);

struct ZeroLocus {
  int r = 0;
  ArcKind kind = ArcKind::Row;
  int a_min = 0;
  int a_max = 0;
  /// Exponents a with det G = 0 at ρ = q^a and at ρ = −q^a.
  std::vector<int> vanishing_plus;
  std::vector<int> vanishing_minus;
  /// {−1, r−1} (row) or {1, 1−r} (column), sorted.
  std::vector<int> expected;
  bool matches() const { return vanishing_plus == expected && vanishing_minus == expected; }
};

/// det G_{1,λ} in B_{r,1} over Q(q) at ρ = ±q^a, a ∈ [−(r+1), r+1].
ZeroLocus onearc_zero_locus(int r, ArcKind kind);

struct GramDeterminant {
  int r = 0;
  int s = 0;
  std::string field;
  CellLabel label;
  int size = 0;
  FieldElement det;
};
/// det G_{1,λ} at ρ = 1 and ρ = −1 for ((2),(1)) in B_{3,2}, ((2,1),∅) in B_{4,1}
/// and ((1³),(1)) in B_{4,2}.
std::vector<GramDeterminant> delta_zero_gram_checks();

/// Dimension identity, c_{r−1,s} trace identity, the annihilating product of
/// the section scalars, the sections spanned by the y_α and z_β vectors,
/// and nonvanishing of those vectors. Restriction is through the shifted
/// embedding of B_{r−1,s}.
struct BranchingReport {
  CellLabel label;
  int dim = 0;
  std::vector<CellLabel> sections;  // in filtration order, labels of B_{r−1,s}
  std::vector<int> section_dims;
  CheckReport checks;
};
BranchingReport branching_check(const CellularPtr& cb, const CellLabel& label, const CellularPtr& smaller = nullptr);
/// Dimension identity alone (no engines).
bool branching_dimension_identity(int r, int s, const CellLabel& label);
/// dim C(f, λ) for B_{r,s}.
int cell_dim(int r, int s, const CellLabel& label);

enum class Idempotent { ETilde, F21 };
std::string to_string(Idempotent choice);
/// ẽ_{1,2} when s ≥ 2, else f_{2,1}.
Idempotent default_idempotent(int r, int s);

struct TruncationReport {
  CellLabel label;
  Idempotent choice = Idempotent::ETilde;
  int rank = 0;
  int expected = 0;
  /// dim of N ⊗_{B(1)} 𝔢B with N the truncated module; compared with dim C(f, λ).
  std::optional<int> induced_dim;
  CheckReport checks;
};
/// Works with right modules: 𝔢 acts on C(f, λ) through right multiplication by σ(𝔢).
TruncationReport schur_truncation_check(const CellularPtr& cb, const CellLabel& label, Idempotent choice);
/// Rank of the span of B_{r,s} e_1.
int left_ideal_dim(const AlgebraEngine& eng);

struct SubmoduleWitness {
  int r = 0;
  int s = 0;
  ArcKind kind = ArcKind::Row;
  std::string field;
  bool v_nonzero = false;
  /// e_1 · v = c · e_1 n_μ in C(1, μ); c is the measured coefficient.
  bool proportional = false;
  FieldElement coefficient;
  /// δ − ρ(1 − q^{∓2(r+s−2)})/(q − q^{-1}).
  FieldElement predicted;
  bool annihilated = false;
  /// Whether ρ² = q^{±2(r+s−2)} holds in the field.
  bool criterion = false;
};
SubmoduleWitness submodule_witness(const CellularPtr& cb, ArcKind kind);

/// Homomorphisms C(0, λ) → C(1, μ) found by solving for images of the
/// cyclic generator; each found pair is tested for the one-node and
/// residue conclusions.
struct HomWitness {
  CellLabel source;
  CellLabel target;
  int hom_dim = 0;
  bool image_in_radical = false;
  bool one_node_each = false;
  bool residue_condition = false;
};
std::vector<HomWitness> zero1_homomorphisms(const CellularPtr& cb);
/// dim Hom(C(source), C(target)) for right cell modules.
int hom_dimension(const CellularPtr& cb, const CellLabel& source, const CellLabel& target, bool* image_in_radical = nullptr);

nlohmann::json to_json(const CheckReport& rep);
nlohmann::json to_json(const CentralCharacter& c);
nlohmann::json to_json(const SemisimplicityVerdict& v);
nlohmann::json to_json(const ZeroLocus& z);
nlohmann::json to_json(const GramDeterminant& g);
nlohmann::json to_json(const BranchingReport& b);
nlohmann::json to_json(const TruncationReport& t);
nlohmann::json to_json(const SubmoduleWitness& w);
nlohmann::json to_json(const HomWitness& h);

}  // namespace qwb
