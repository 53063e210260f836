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

#ifndef TOPOFILT_ENUMERATION_HPP_
#define TOPOFILT_ENUMERATION_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>

#include "topofilt/filtration.hpp"
#include "topofilt/topology.hpp"

namespace topofilt {

/// Labeled-topology counts for n = 0..5. Catalog construction and cache
/// loading cross-check against this table.
inline constexpr std::uint64_t kLabeledTopologyCounts[] = {1, 1, 4, 29, 355, 6942};

/// Every topology on n points in canonical order (ascending lexicographic on
/// the opens list). Lookup by canonical form is binary search on that order.
struct TopologyCatalog {
  int n = 0;
  std::vector<Topology> entries;

  std::size_t size() const { return entries.size(); }
  const Topology& at(std::size_t i) const { return entries[i]; }

  std::optional<std::size_t> index_of(const Topology& t) const;
};

/// All labeled topologies on n points, generated as reflexive-transitive
/// relation matrices (row-by-row with transitivity pruning) and mapped
/// through from_preorder. jobs > 1 shards the search on the first row;
/// shards merge into the same deterministic order.
/// Throws Errc::ground_size_too_large for n > 5.
TopologyCatalog enumerate_topologies(int n, int jobs = 1);

/// Visits every ordered pair (sigma, tau) with sigma <= tau, in catalog
/// order (sigma-major). The callback receives catalog indices; pairs are
/// streamed, never materialized.
void for_each_pair(
    const TopologyCatalog& catalog,
    const std::function<void(std::size_t, std::size_t)>& fn);

/// Same stream restricted to sigma indices in [sigma_begin, sigma_end);
/// the sharding unit for parallel sweeps.
void for_each_pair_in(
    const TopologyCatalog& catalog, std::size_t sigma_begin,
    std::size_t sigma_end,
    const std::function<void(std::size_t, std::size_t)>& fn);

std::uint64_t count_pairs(const TopologyCatalog& catalog);

enum class ChainKind {
  any,              // just the inclusion chain
  weak_filtration,  // chain + the density condition wrt target tau
  filtration,       // chain + the interior-equality condition wrt target tau
  filtration_from,  // the condition wrt the moving target (the last stage)
};

/// Visits every chain sigma = t_0 <= ... <= t_k <= tau with k < max_len
/// drawn from the catalog and passing the requested condition, in
/// deterministic order. For the two target-bound kinds the yielded sequences
/// carry target tau; for `any` and `filtration_from` they are targetless
/// (tau only bounds the stage candidates). Prefixes of failing chains are
/// pruned: a stagewise violation persists under every extension (for the
/// moving-target kind because stage interiors only grow along the chain).
void for_each_chain(const TopologyCatalog& catalog, const Topology& sigma,
                    const Topology& tau, unsigned max_len, ChainKind kind,
                    const std::function<void(const FiltrationSeq&)>& fn);

/// Materialized chains passing the filtration condition with target tau.
/// Throws Errc::ground_size_too_large for n > 3 (the stream above has no
/// such cap; materialization does).
std::vector<FiltrationSeq> enumerate_filtrations(const Topology& sigma,
                                                 const Topology& tau,
                                                 unsigned max_len);

/// Cache file name: topologies_n<K>.jsonl inside the directory. The first
/// line is a header {"version": 1, "n": K, "count": C}; each further line is
/// one serialized topology in catalog order.
std::filesystem::path cache_file_path(const std::filesystem::path& dir, int n);

void cache_store(const TopologyCatalog& catalog,
                 const std::filesystem::path& dir);

/// Loads the catalog for n, regenerating and storing it when the file is
/// missing. A present-but-inconsistent file (bad header, wrong count, bad
/// entry, wrong order) throws Errc::cache_corrupt.
TopologyCatalog cache_load(int n, const std::filesystem::path& dir);

}  // namespace topofilt

#endif  // TOPOFILT_ENUMERATION_HPP_
