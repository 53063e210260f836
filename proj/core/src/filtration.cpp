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

#include "topofilt/filtration.hpp"

#include <cassert>
#include <string>

namespace topofilt {

FiltrationSeq::FiltrationSeq(std::vector<Topology> stages,
                             std::optional<Topology> target)
    : stages_(std::move(stages)), target_(std::move(target)) {
  if (stages_.empty())
    throw Error(Errc::empty_list, "filtration needs at least one stage");
  const int n = stages_.front().ground_size();
  for (const Topology& t : stages_)
    if (t.ground_size() != n)
      throw Error(Errc::mixed_ground_sizes, "stages on different ground sets");
  if (target_ && target_->ground_size() != n)
    throw Error(Errc::mixed_ground_sizes, "target on a different ground set");
  for (std::size_t i = 0; i + 1 < stages_.size(); ++i)
    if (!stages_[i].subtopology_of(stages_[i + 1]))
      throw Error(Errc::not_subtopology,
                  "stage " + std::to_string(i) + " not below stage " +
                      std::to_string(i + 1));
  if (target_ && !stages_.back().subtopology_of(*target_))
    throw Error(Errc::not_subtopology, "last stage not below target");
}

namespace {

// Shared scan for the full and weak conditions. For each alpha (ascending)
// and each mask (ascending) closed in some stage before alpha, test the
// interior condition at stage alpha against the target.
template <typename Cond>
std::optional<FiltrationViolation> scan_stages(const FiltrationSeq& seq,
                                               Cond cond) {
  const Topology& target = seq.effective_target();
  const Mask full = full_mask(seq.ground_size());
  for (std::size_t alpha = 1; alpha < seq.length(); ++alpha) {
    const Topology& at_alpha = seq.stage(alpha);
    for (Mask f = 0;; ++f) {
      bool closed_earlier = false;
      for (std::size_t xi = 0; xi < alpha && !closed_earlier; ++xi)
        closed_earlier = seq.stage(xi).is_closed(f);
      if (closed_earlier && !cond(at_alpha, target, f))
        return FiltrationViolation{static_cast<Ordinal>(alpha), f};
      if (f == full) break;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FiltrationViolation> check_filtration(const FiltrationSeq& seq) {
  return scan_stages(seq,
                     [](const Topology& at_alpha, const Topology& target,
                        Mask f) { return at_alpha.interior(f) == target.interior(f); });
}

std::optional<FiltrationViolation> check_weak_filtration(
    const FiltrationSeq& seq) {
  return scan_stages(
      seq, [](const Topology& at_alpha, const Topology& target, Mask f) {
        const Mask ti = target.interior(f);
        return (ti & ~target.closure(at_alpha.interior(f))) == 0;
      });
}

Topology step(const Topology& sigma, const Topology& tau) {
  if (!sigma.subtopology_of(tau))
    throw Error(Errc::not_subtopology, "step needs sigma <= tau");
  const int n = sigma.ground_size();
  const Mask full = full_mask(n);

  // Basic opens are U & int_tau(F) with U sigma-open, F sigma-closed; the
  // family is intersection-closed because interiors multiply, so the minimal
  // neighborhood of x in the result is
  //   U_x(sigma) & int_tau( intersection of all sigma-closed F with
  //                         x in int_tau(F) ).
  std::vector<std::pair<Mask, Mask>> closed_and_interior;
  closed_and_interior.reserve(sigma.opens().size());
  for (Mask u : sigma.opens())
    closed_and_interior.emplace_back(full ^ u, tau.interior(full ^ u));

  std::array<Mask, kMaxGroundSize> table{};
  for (int x = 0; x < n; ++x) {
    Mask fstar = full;
    for (const auto& [f, i] : closed_and_interior)
      if (contains_point(i, x)) fstar &= f;
    table[x] = sigma.min_nbhd(x) & tau.interior(fstar);
    assert(contains_point(table[x], x));
  }
  return Topology::from_min_table(n, std::span<const Mask>(table.data(), n));
}

const char* slowest_status_name(SlowestStatus s) noexcept {
  switch (s) {
    case SlowestStatus::reached: return "reached";
    case SlowestStatus::fixpoint_below: return "fixpoint_below";
    case SlowestStatus::budget: return "budget";
  }
  return "budget";
}

SlowestResult slowest(const Topology& sigma, const Topology& tau,
                      unsigned max_stages) {
  if (!sigma.subtopology_of(tau))
    throw Error(Errc::not_subtopology, "slowest needs sigma <= tau");
  const unsigned bound = (1u << sigma.ground_size()) + 1;
  if (max_stages == 0 || max_stages > bound) max_stages = bound;

  std::vector<Topology> stages{sigma};
  SlowestStatus status = SlowestStatus::budget;
  for (;;) {
    Topology next = step(stages.back(), tau);
    if (next == stages.back()) {
      status = (next == tau) ? SlowestStatus::reached
                             : SlowestStatus::fixpoint_below;
      break;
    }
    if (stages.size() == max_stages) break;  // budget exhausted
    stages.push_back(std::move(next));
  }
  // A strictly growing chain cannot outlive 2^n stages, so the intrinsic
  // budget never truncates and no limit stage is ever needed.
  assert(status != SlowestStatus::budget || max_stages < bound);
  return SlowestResult{FiltrationSeq(std::move(stages), tau), status};
}

std::optional<Ordinal> distance(const Topology& sigma, const Topology& tau) {
  SlowestResult r = slowest(sigma, tau);
  if (r.status != SlowestStatus::reached) return std::nullopt;
  return static_cast<Ordinal>(r.seq.length() - 1);
}

bool is_discrete_family(const Topology& stage, const SetFamily& members) {
  for (Mask u : members)
    if (!stage.is_open(u)) return false;
  for (int x = 0; x < stage.ground_size(); ++x) {
    int met = 0;
    for (Mask u : members)
      if ((u & stage.min_nbhd(x)) != 0 && ++met > 1) return false;
  }
  return true;
}

namespace {

// Non-empty opens U, V are separated when no minimal neighborhood meets
// both; discrete families are exactly the cliques of this relation.
bool separated(const Topology& stage, Mask u, Mask v) {
  for (int x = 0; x < stage.ground_size(); ++x) {
    const Mask nb = stage.min_nbhd(x);
    if ((nb & u) != 0 && (nb & v) != 0) return false;
  }
  return true;
}

// All maximal discrete families of non-empty opens. Sub-families are covered
// by assigning the empty (always tame) set to dropped members, so maximal
// families suffice for the tame saturation.
std::vector<std::vector<Mask>> maximal_discrete_families(const Topology& stage) {
  std::vector<Mask> opens;
  for (Mask u : stage.opens())
    if (u != 0) opens.push_back(u);
  const std::size_t m = opens.size();
  assert(m < 32);

  std::vector<std::uint32_t> sep(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && separated(stage, opens[i], opens[j]))
        sep[i] |= std::uint32_t{1} << j;

  std::vector<std::vector<Mask>> out;
  for (std::uint32_t pick = 1; pick < (std::uint32_t{1} << m); ++pick) {
    bool clique = true;
    for (std::size_t i = 0; i < m && clique; ++i)
      if (pick >> i & 1u)
        clique = ((pick & ~(std::uint32_t{1} << i)) & ~sep[i]) == 0;
    if (!clique) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < m && maximal; ++v)
      if (!(pick >> v & 1u) && (pick & ~sep[v]) == 0) maximal = false;
    if (!maximal) continue;
    std::vector<Mask> fam;
    for (std::size_t i = 0; i < m; ++i)
      if (pick >> i & 1u) fam.push_back(opens[i]);
    out.push_back(std::move(fam));
  }
  return out;
}

void require_alpha(const FiltrationSeq& seq, Ordinal alpha, bool strict) {
  const std::size_t limit = strict ? seq.length() - 1 : seq.length();
  if (alpha > limit)
    throw Error(Errc::alpha_out_of_range,
                "alpha " + std::to_string(alpha) + " beyond " +
                    std::to_string(limit) + " for a chain of length " +
                    std::to_string(seq.length()));
}

}  // namespace

SetFamily tame_sets(const FiltrationSeq& seq, Ordinal alpha) {
  require_ground_size(seq.ground_size(), kMaxTameGroundSize);
  require_alpha(seq, alpha, /*strict=*/false);
  if (alpha == 0) return SetFamily{};  // no generators, empty least fixpoint

  const Mask full = full_mask(seq.ground_size());
  std::vector<char> in(std::size_t{1} << seq.ground_size(), 0);
  std::vector<Mask> members;  // insertion order; frontier tracked by index
  auto add = [&](Mask m) {
    if (!in[m]) {
      in[m] = 1;
      members.push_back(m);
    }
  };

  for (Ordinal xi = 0; xi < alpha; ++xi)
    for (Mask u : seq.stage(xi).opens()) add(full ^ u);

  // One patch site per (stage, maximal discrete family). Each site remembers
  // the F&U choice values it has already combined, so a saturation round only
  // enumerates assignments that use at least one newly added member.
  struct PatchSite {
    std::vector<Mask> us;
    std::vector<std::vector<Mask>> known;  // per member: distinct F&U values
    std::size_t watermark = 0;             // members consumed so far
  };
  std::vector<PatchSite> sites;
  for (Ordinal xi = 0; xi < alpha; ++xi)
    for (auto& fam : maximal_discrete_families(seq.stage(xi)))
      sites.push_back(PatchSite{fam, std::vector<std::vector<Mask>>(fam.size()), 0});

  bool grew = true;
  while (grew) {
    grew = false;
    for (PatchSite& site : sites) {
      const std::size_t upto = members.size();
      const std::size_t k = site.us.size();
      // Distinct fresh choice values per position.
      std::vector<std::vector<Mask>> fresh(k);
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t i = site.watermark; i < upto; ++i) {
          const Mask v = members[i] & site.us[p];
          bool seen = std::find(site.known[p].begin(), site.known[p].end(), v) !=
                          site.known[p].end() ||
                      std::find(fresh[p].begin(), fresh[p].end(), v) !=
                          fresh[p].end();
          if (!seen) fresh[p].push_back(v);
        }
      }
      site.watermark = upto;
      bool any_fresh = false;
      for (const auto& f : fresh) any_fresh |= !f.empty();
      if (!any_fresh) continue;

      // Odometer over (known ++ fresh) per position, skipping all-known
      // assignments (already combined in earlier rounds).
      std::vector<std::size_t> idx(k, 0);
      std::vector<std::size_t> sizes(k);
      for (std::size_t p = 0; p < k; ++p)
        sizes[p] = site.known[p].size() + fresh[p].size();
      for (;;) {
        bool uses_fresh = false;
        Mask acc = 0;
        for (std::size_t p = 0; p < k; ++p) {
          const std::size_t i = idx[p];
          if (i < site.known[p].size()) {
            acc |= site.known[p][i];
          } else {
            acc |= fresh[p][i - site.known[p].size()];
            uses_fresh = true;
          }
        }
        if (uses_fresh && !in[acc]) {
          add(acc);
          grew = true;
        }
        std::size_t p = 0;
        while (p < k && ++idx[p] == sizes[p]) idx[p++] = 0;
        if (p == k) break;
      }
      for (std::size_t p = 0; p < k; ++p)
        site.known[p].insert(site.known[p].end(), fresh[p].begin(),
                             fresh[p].end());
    }
  }
  return SetFamily::from_unsorted(std::move(members));
}

Mask slight_hull(const FiltrationSeq& seq, Ordinal alpha) {
  require_alpha(seq, alpha, /*strict=*/true);
  const Topology& at_alpha = seq.stage(alpha);
  Mask hull = 0;
  for (Mask f : tame_sets(seq, alpha))
    if (at_alpha.interior(f) == 0) hull |= f;
  return hull;
}

bool is_slight(const FiltrationSeq& seq, Ordinal alpha, Mask a) {
  return (a & ~slight_hull(seq, alpha)) == 0;
}

bool is_solid(const FiltrationSeq& seq, Ordinal alpha, Mask a) {
  const Mask hull = slight_hull(seq, alpha);
  for (Mask v : seq.stage(alpha).opens()) {
    const Mask rel = v & a;
    if (rel != 0 && (rel & ~hull) == 0) return false;
  }
  return true;
}

Mask c_xi(const FiltrationSeq& seq, Ordinal xi, Ordinal alpha, Mask a) {
  require_alpha(seq, alpha, /*strict=*/true);
  if (xi > alpha)
    throw Error(Errc::alpha_out_of_range, "need xi <= alpha");
  const Mask hull = slight_hull(seq, alpha);
  const Mask full = full_mask(seq.ground_size());
  Mask removed = 0;
  for (Mask u : seq.stage(xi).opens())
    if (((a & u) & ~hull) == 0) removed |= u;
  return full ^ removed;
}

}  // namespace topofilt
