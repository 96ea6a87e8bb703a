#ifndef RASC_CORE_HPP_
#define RASC_CORE_HPP_

#include <Eigen/Dense>

#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rasc {

/// Raised for invalid inputs and violated preconditions. The CLI maps it to
/// exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense index of an alternative (social state) within its election.
/// Display names live in the election; ids are 0..m-1.
struct AlternativeId {
  int value = -1;

  constexpr bool valid() const { return value >= 0; }
  friend constexpr auto operator<=>(const AlternativeId&,
                                    const AlternativeId&) = default;
};

/// Strict total ranking of all alternatives, best first.
class LinearOrder {
 public:
  /// `best_first` must be a permutation of {0..universe_size-1}.
  LinearOrder(std::vector<AlternativeId> best_first, int universe_size);

  /// 1-based rank of `s`; 1 is the top-ranked alternative.
  int position(AlternativeId s) const;

  /// Inverse of position: the alternative at 1-based `rank`.
  AlternativeId at_rank(int rank) const;

  /// True iff x is ranked strictly above y.
  bool prefers(AlternativeId x, AlternativeId y) const {
    return position(x) < position(y);
  }

  AlternativeId top() const { return ranking_.front(); }
  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<AlternativeId>& ranking() const { return ranking_; }

  friend bool operator==(const LinearOrder&, const LinearOrder&) = default;

 private:
  std::vector<AlternativeId> ranking_;
  std::vector<int> position_;  // indexed by id, 1-based ranks
};

enum class MetricAxiom { kNonnegative, kZeroDiagonal, kTriangle };

/// First violated pseudoquasimetric axiom with its witness indices.
/// For kNonnegative the witness is (i,j); for kZeroDiagonal it is i;
/// for kTriangle it is the triple (i,j,k) with d(i,k) > d(i,j)+d(j,k).
struct MetricViolation {
  MetricAxiom axiom = MetricAxiom::kNonnegative;
  int i = -1;
  int j = -1;
  int k = -1;

  std::string describe() const;
};

/// Checks the three axioms: d >= 0, d(s,s) = 0, and the triangle
/// inequality d(s,s'') <= d(s,s') + d(s',s''). Symmetry is not required.
/// Returns the first violation in axiom order, or nullopt when the table
/// is a valid pseudoquasimetric.
std::optional<MetricViolation> validate_pseudoquasimetric(
    const Eigen::MatrixXd& dist);

/// Validated nonnegative distance table over states; asymmetry allowed.
class Pseudoquasimetric {
 public:
  /// Throws InputError (with the violation description) unless `dist`
  /// passes validate_pseudoquasimetric.
  static Pseudoquasimetric from_matrix(Eigen::MatrixXd dist);

  double operator()(AlternativeId from, AlternativeId to) const {
    return dist_(from.value, to.value);
  }
  double at(int from, int to) const { return dist_(from, to); }
  int size() const { return static_cast<int>(dist_.rows()); }
  const Eigen::MatrixXd& matrix() const { return dist_; }

  /// Restriction to a subset of states (kept in the given order). A valid
  /// pseudoquasimetric restricted to any subset stays valid.
  Pseudoquasimetric restricted(std::span<const AlternativeId> keep) const;

  /// Rescales every distance by a positive constant.
  Pseudoquasimetric scaled(double factor) const;

  friend bool operator==(const Pseudoquasimetric& a,
                         const Pseudoquasimetric& b) {
    return a.dist_ == b.dist_;
  }

 private:
  explicit Pseudoquasimetric(Eigen::MatrixXd dist) : dist_(std::move(dist)) {}

  Eigen::MatrixXd dist_;
};

/// Outcome of one pairwise majority vote between x and y at the current
/// Reality. Orders are strict, so for_x + for_y equals the voter count.
struct MajorityTally {
  AlternativeId x;
  AlternativeId y;
  int for_x = 0;
  int for_y = 0;

  int margin() const { return for_x - for_y; }

  friend bool operator==(const MajorityTally&, const MajorityTally&) = default;
};

/// One voter's Reality-indexed preferences: a total map Reality -> order.
class RealityAwareBallot {
 public:
  /// `order_by_reality[r]` is the voter's ranking when Reality is r; one
  /// entry per alternative, each a permutation of the full universe.
  explicit RealityAwareBallot(std::vector<LinearOrder> order_by_reality);

  const LinearOrder& at(AlternativeId reality) const;
  int num_realities() const { return static_cast<int>(orders_.size()); }

  friend bool operator==(const RealityAwareBallot&,
                         const RealityAwareBallot&) = default;

 private:
  std::vector<LinearOrder> orders_;
};

/// Alternatives, voters with Reality-indexed ballots, and the distinguished
/// current Reality. Immutable after construction.
class RealityAwareElection {
 public:
  RealityAwareElection(std::vector<std::string> alternative_names,
                       std::vector<RealityAwareBallot> voters,
                       AlternativeId reality);

  int num_alternatives() const { return static_cast<int>(names_.size()); }
  int num_voters() const { return static_cast<int>(voters_.size()); }
  AlternativeId reality() const { return reality_; }

  const std::string& name(AlternativeId a) const;
  std::optional<AlternativeId> find(std::string_view name) const;
  const std::vector<std::string>& names() const { return names_; }

  const RealityAwareBallot& ballot(int voter) const;
  const LinearOrder& order_at(int voter, AlternativeId reality) const;
  /// The voter's order at the current Reality.
  const LinearOrder& current_order(int voter) const {
    return order_at(voter, reality_);
  }

  /// All alternative ids, 0..m-1.
  std::vector<AlternativeId> alternatives() const;

  /// True iff name(a) sorts strictly before name(b).
  bool name_less(AlternativeId a, AlternativeId b) const;

  /// Sorts ids ascending by display name (in place convenience).
  std::vector<AlternativeId> sorted_by_name(std::vector<AlternativeId> ids) const;

  /// Copy with a different current Reality.
  RealityAwareElection with_reality(AlternativeId reality) const;

  /// Copy with voters reordered by `perm` (a permutation of 0..n-1).
  RealityAwareElection with_voter_order(std::span<const int> perm) const;

 private:
  std::vector<std::string> names_;
  std::vector<RealityAwareBallot> voters_;
  AlternativeId reality_;
};

/// Sub-election over a subset of alternatives: orders are restricted to the
/// kept alternatives (relative order preserved) and ids are re-densified in
/// the order given by `keep`. `from_sub[i]` maps sub-id i back to keep[i].
struct RestrictedElection {
  RealityAwareElection election;
  std::vector<AlternativeId> from_sub;
};

/// `keep` must contain `reality`, hold no duplicates, and be nonempty.
RestrictedElection restrict_election(const RealityAwareElection& e,
                                     std::span<const AlternativeId> keep,
                                     AlternativeId reality);

/// Counts voters preferring x over y at the current Reality. x != y.
MajorityTally pairwise_tally(const RealityAwareElection& e, AlternativeId x,
                             AlternativeId y);

/// { s != R : margin(s, R) > 0 } — alternatives a strict majority prefers
/// over the Reality. Sorted ascending by display name; never contains R.
std::vector<AlternativeId> reality_viable_set(const RealityAwareElection& e);

/// The unique member of `subset` beating every other member by strict
/// majority, if any. Empty subset yields nullopt.
std::optional<AlternativeId> condorcet_winner(
    const RealityAwareElection& e, std::span<const AlternativeId> subset);

/// Smallest nonempty D within `subset` whose members all beat every
/// alternative of `subset` outside D (ties break no edges). Equals the
/// Condorcet winner singleton when one exists. Sorted by name.
std::vector<AlternativeId> top_cycle(const RealityAwareElection& e,
                                     std::span<const AlternativeId> subset);

}  // namespace rasc

#endif  // RASC_CORE_HPP_
