/*
 * Copyright 2026 The topofilt authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TOPOFILT_FILTRATION_HPP_
#define TOPOFILT_FILTRATION_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "topofilt/topology.hpp"

namespace topofilt {

/// Stage index into a filtration. Every strictly increasing chain of
/// topologies on n points has length at most 2^n, so transfinite indices
/// collapse to naturals here; the limit clauses of the transfinite
/// definitions are unreachable and asserted as such rather than implemented.
using Ordinal = std::uint32_t;

/// 0 -> 0 (limit-or-zero clause), k -> k+1 for successors k >= 1.
inline Ordinal oplus1(Ordinal a) { return a == 0 ? 0 : a + 1; }

/// A finite chain of topologies t_0 <= t_1 <= ... <= t_k on one ground set,
/// with an optional target topology above the chain. Construction validates
/// the chain and throws Errc::mixed_ground_sizes / Errc::not_subtopology /
/// Errc::empty_list.
class FiltrationSeq {
 public:
  explicit FiltrationSeq(std::vector<Topology> stages,
                         std::optional<Topology> target = std::nullopt);

  int ground_size() const { return stages_.front().ground_size(); }
  std::size_t length() const { return stages_.size(); }

  const std::vector<Topology>& stages() const { return stages_; }
  const Topology& stage(std::size_t i) const { return stages_[i]; }

  bool has_target() const { return target_.has_value(); }

  /// The declared target, or the join of the stages (the last stage, since
  /// the stages form a chain) when none was declared.
  const Topology& effective_target() const {
    return target_ ? *target_ : stages_.back();
  }

  friend bool operator==(const FiltrationSeq&, const FiltrationSeq&) = default;

 private:
  std::vector<Topology> stages_;
  std::optional<Topology> target_;
};

/// First failing instance of the stagewise interior condition: at stage
/// alpha, the set (closed in some earlier stage) whose interiors disagree.
struct FiltrationViolation {
  Ordinal alpha;
  Mask set;

  friend bool operator==(const FiltrationViolation&,
                         const FiltrationViolation&) = default;
};

/// Checks the filtration condition: for every alpha and every F closed in
/// some stage before alpha, interior at stage alpha equals interior at the
/// target. Returns the first violation in deterministic order (ascending
/// alpha, then ascending mask), or nullopt for a pass.
std::optional<FiltrationViolation> check_filtration(const FiltrationSeq& seq);

/// The weak variant: the stage-alpha interior need only be target-dense in
/// the target interior.
std::optional<FiltrationViolation> check_weak_filtration(
    const FiltrationSeq& seq);

inline bool is_filtration(const FiltrationSeq& seq) {
  return !check_filtration(seq).has_value();
}
inline bool is_weak_filtration(const FiltrationSeq& seq) {
  return !check_weak_filtration(seq).has_value();
}

/// The step operation: the topology generated by all sets U & interior_tau(F)
/// with U sigma-open and F sigma-closed. Interiors multiply over
/// intersections, so the generated family is closed under intersection and
/// the result is a topology with sigma <= result <= tau.
/// Throws Errc::not_subtopology unless sigma <= tau.
Topology step(const Topology& sigma, const Topology& tau);

enum class SlowestStatus {
  reached,         // the fixpoint equals tau
  fixpoint_below,  // the iteration stabilized strictly below tau
  budget,          // max_stages hit before stabilization
};

const char* slowest_status_name(SlowestStatus s) noexcept;

struct SlowestResult {
  FiltrationSeq seq;  // stages of the iteration, target tau
  SlowestStatus status;
};

/// Iterates the step operation from sigma towards tau until it stabilizes
/// (or the stage budget runs out; max_stages 0 means the intrinsic bound
/// 2^n + 1, which always suffices). The limit clause of the transfinite
/// recursion is unreachable on a finite ground set and asserted, not
/// implemented.
SlowestResult slowest(const Topology& sigma, const Topology& tau,
                      unsigned max_stages = 0);

/// Least stage index at which the slowest filtration equals tau, or nullopt
/// ("unreachable") when the iteration fixes strictly below tau.
std::optional<Ordinal> distance(const Topology& sigma, const Topology& tau);

/// Ground-size cap for the tame/slight/solid calculus; the discrete-family
/// saturation is exponential and refuses larger ground sets.
inline constexpr int kMaxTameGroundSize = 4;

/// A stage-indexed family of pairwise separated opens: every point has a
/// stage-xi neighborhood meeting at most one member. These families are the
/// patching devices of the tame-set fixpoint.
struct DiscreteFamily {
  Ordinal xi;
  SetFamily members;
};

/// True when every point's minimal stage neighborhood meets at most one
/// member of the family and all members are open at that stage.
bool is_discrete_family(const Topology& stage, const SetFamily& members);

/// The alpha-tame sets of the chain: the least family containing every set
/// closed in a stage before alpha and closed under patching along
/// stage-discrete families of stage-opens (union over the family of
/// member-intersected tame sets). alpha may equal the chain length; only
/// stages before alpha participate. Throws Errc::alpha_out_of_range /
/// Errc::ground_size_too_large.
SetFamily tame_sets(const FiltrationSeq& seq, Ordinal alpha);

/// A is alpha-slight when it is covered by alpha-tame sets whose stage-alpha
/// interior is empty. Finite unions suffice: slight sets are closed under
/// union, so covering by the union of all qualifying tame sets is equivalent
/// to the countable-family form.
bool is_slight(const FiltrationSeq& seq, Ordinal alpha, Mask a);

/// A is alpha-solid when no non-empty relatively stage-alpha-open subset of
/// it is alpha-slight.
bool is_solid(const FiltrationSeq& seq, Ordinal alpha, Mask a);

/// The stage-xi-closed localization of A: the complement of the union of all
/// stage-xi opens U with A & U alpha-slight. Requires xi <= alpha < length.
Mask c_xi(const FiltrationSeq& seq, Ordinal xi, Ordinal alpha, Mask a);

/// Union of all alpha-tame sets with empty stage-alpha interior; slightness
/// of A is containment in this mask. Exposed for the verification suites.
Mask slight_hull(const FiltrationSeq& seq, Ordinal alpha);

}  // namespace topofilt

#endif  // TOPOFILT_FILTRATION_HPP_
