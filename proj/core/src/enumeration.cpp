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

#include "topofilt/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <thread>

#include "topofilt/serialize.hpp"

namespace topofilt {

namespace {

// Candidate rows for point x: masks over n bits containing bit x, ascending.
std::vector<Mask> row_candidates(int n, int x) {
  std::vector<Mask> out;
  const Mask full = full_mask(n);
  for (Mask m = 0;; ++m) {
    if (contains_point(m, x)) out.push_back(m);
    if (m == full) break;
  }
  return out;
}

// Depth-first assignment of relation rows with transitivity pruning: a new
// row k is admitted only when, among the rows assigned so far,
// j in row(i) implies row(j) <= row(i).
void preorder_dfs(int n, int depth, std::array<Mask, kMaxGroundSize>& rows,
                  std::vector<Topology>& out) {
  if (depth == n) {
    out.push_back(from_preorder(
        Preorder::from_rows(n, std::span<const Mask>(rows.data(), n))));
    return;
  }
  const Mask full = full_mask(n);
  for (Mask r = 0; r <= full; ++r) {
    if (!contains_point(r, depth)) continue;
    bool ok = true;
    for (int i = 0; i < depth && ok; ++i) {
      if (contains_point(rows[i], depth) && (r & ~rows[i]) != 0) ok = false;
      if (ok && contains_point(r, i) && (rows[i] & ~r) != 0) ok = false;
    }
    // transitivity within the new row needs the earlier rows only; pairs
    // among future rows are checked when those rows arrive
    if (!ok) continue;
    rows[depth] = r;
    preorder_dfs(n, depth + 1, rows, out);
  }
  rows[depth] = 0;
}

}  // namespace

std::optional<std::size_t> TopologyCatalog::index_of(const Topology& t) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), t);
  if (it == entries.end() || !(*it == t)) return std::nullopt;
  return static_cast<std::size_t>(it - entries.begin());
}

TopologyCatalog enumerate_topologies(int n, int jobs) {
  require_ground_size(n, kMaxEnumGroundSize);
  TopologyCatalog cat;
  cat.n = n;

  if (n == 0) {
    cat.entries.push_back(Topology::indiscrete(0));
    return cat;
  }

  const std::vector<Mask> first_rows = row_candidates(n, 0);
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(first_rows.size()));

  if (jobs == 1) {
    std::array<Mask, kMaxGroundSize> rows{};
    preorder_dfs(n, 0, rows, cat.entries);
  } else {
    // Shard on the first row; each worker runs the same DFS below its slice
    // of first-row values, and the final sort makes the merge order-free.
    std::vector<std::vector<Topology>> found(jobs);
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        std::array<Mask, kMaxGroundSize> rows{};
        for (std::size_t i = w; i < first_rows.size(); i += jobs) {
          rows[0] = first_rows[i];
          preorder_dfs(n, 1, rows, found[w]);
        }
      });
    }
    for (auto& t : workers) t.join();
    for (auto& part : found)
      cat.entries.insert(cat.entries.end(),
                         std::make_move_iterator(part.begin()),
                         std::make_move_iterator(part.end()));
  }

  std::sort(cat.entries.begin(), cat.entries.end());
  cat.entries.erase(std::unique(cat.entries.begin(), cat.entries.end()),
                    cat.entries.end());
  assert(cat.entries.size() == kLabeledTopologyCounts[n]);
  return cat;
}

void for_each_pair_in(
    const TopologyCatalog& catalog, std::size_t sigma_begin,
    std::size_t sigma_end,
    const std::function<void(std::size_t, std::size_t)>& fn) {
  for (std::size_t i = sigma_begin; i < sigma_end; ++i)
    for (std::size_t j = 0; j < catalog.size(); ++j)
      if (catalog.at(i).subtopology_of(catalog.at(j))) fn(i, j);
}

void for_each_pair(
    const TopologyCatalog& catalog,
    const std::function<void(std::size_t, std::size_t)>& fn) {
  for_each_pair_in(catalog, 0, catalog.size(), fn);
}

std::uint64_t count_pairs(const TopologyCatalog& catalog) {
  std::uint64_t c = 0;
  for_each_pair(catalog, [&](std::size_t, std::size_t) { ++c; });
  return c;
}

namespace {

// Does appending `next` keep the chain condition? Only the instances that
// mention the new stage need checking; earlier ones are unaffected. For the
// moving-target kind the full condition is equivalent (interiors grow along
// the chain, so equality with the last stage sandwiches the middle) to
// agreement of consecutive stage interiors on sets closed strictly earlier.
bool new_stage_ok(const std::vector<Topology>& chain, const Topology& next,
                  const Topology& tau, ChainKind kind) {
  if (kind == ChainKind::any) return true;
  const Mask full = full_mask(next.ground_size());
  const bool moving = kind == ChainKind::filtration_from;
  const std::size_t upto = moving ? chain.size() - 1 : chain.size();
  for (Mask f = 0;; ++f) {
    bool closed_earlier = false;
    for (std::size_t s = 0; s < upto && !closed_earlier; ++s)
      closed_earlier = chain[s].is_closed(f);
    if (closed_earlier) {
      if (moving) {
        if (chain.back().interior(f) != next.interior(f)) return false;
      } else if (kind == ChainKind::filtration) {
        if (next.interior(f) != tau.interior(f)) return false;
      } else {
        const Mask ti = tau.interior(f);
        if ((ti & ~tau.closure(next.interior(f))) != 0) return false;
      }
    }
    if (f == full) break;
  }
  return true;
}

void chain_dfs(const TopologyCatalog& catalog, std::vector<Topology>& chain,
               const Topology& tau, unsigned max_len, ChainKind kind,
               const std::function<void(const FiltrationSeq&)>& fn) {
  const bool targetless =
      kind == ChainKind::any || kind == ChainKind::filtration_from;
  fn(targetless ? FiltrationSeq(chain) : FiltrationSeq(chain, tau));
  if (chain.size() >= max_len) return;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const Topology& next = catalog.at(i);
    if (!chain.back().subtopology_of(next) || !next.subtopology_of(tau))
      continue;
    if (!new_stage_ok(chain, next, tau, kind)) continue;
    chain.push_back(next);
    chain_dfs(catalog, chain, tau, max_len, kind, fn);
    chain.pop_back();
  }
}

}  // namespace

void for_each_chain(const TopologyCatalog& catalog, const Topology& sigma,
                    const Topology& tau, unsigned max_len, ChainKind kind,
                    const std::function<void(const FiltrationSeq&)>& fn) {
  if (!sigma.subtopology_of(tau))
    throw Error(Errc::not_subtopology, "chains need sigma <= tau");
  if (max_len == 0) return;
  std::vector<Topology> chain{sigma};
  chain_dfs(catalog, chain, tau, max_len, kind, fn);
}

std::vector<FiltrationSeq> enumerate_filtrations(const Topology& sigma,
                                                 const Topology& tau,
                                                 unsigned max_len) {
  require_ground_size(sigma.ground_size(), 3);
  TopologyCatalog catalog = enumerate_topologies(sigma.ground_size());
  std::vector<FiltrationSeq> out;
  for_each_chain(catalog, sigma, tau, max_len, ChainKind::filtration,
                 [&](const FiltrationSeq& seq) { out.push_back(seq); });
  return out;
}

std::filesystem::path cache_file_path(const std::filesystem::path& dir, int n) {
  return dir / ("topologies_n" + std::to_string(n) + ".jsonl");
}

void cache_store(const TopologyCatalog& catalog,
                 const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto path = cache_file_path(dir, catalog.n);
  std::ofstream out(path);
  if (!out)
    throw Error(Errc::io_failure, "cannot write " + path.string());
  nlohmann::json header;
  header["version"] = 1;
  header["n"] = catalog.n;
  header["count"] = catalog.size();
  out << header.dump() << '\n';
  for (const Topology& t : catalog.entries)
    out << topology_to_json(t).dump() << '\n';
  if (!out) throw Error(Errc::io_failure, "short write to " + path.string());
}

TopologyCatalog cache_load(int n, const std::filesystem::path& dir) {
  require_ground_size(n, kMaxEnumGroundSize);
  const auto path = cache_file_path(dir, n);
  std::ifstream in(path);
  if (!in) {
    TopologyCatalog fresh = enumerate_topologies(n);
    cache_store(fresh, dir);
    return fresh;
  }

  std::string line;
  if (!std::getline(in, line))
    throw Error(Errc::cache_corrupt, "missing header in " + path.string());
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || header.value("version", -1) != 1 ||
      header.value("n", -1) != n || !header.contains("count"))
    throw Error(Errc::cache_corrupt, "bad header in " + path.string());
  const auto declared = header["count"].get<std::uint64_t>();
  if (declared != kLabeledTopologyCounts[n])
    throw Error(Errc::cache_corrupt,
                "header count " + std::to_string(declared) + " != expected " +
                    std::to_string(kLabeledTopologyCounts[n]));

  TopologyCatalog cat;
  cat.n = n;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded())
      throw Error(Errc::cache_corrupt, "bad record in " + path.string());
    Topology t;
    try {
      t = topology_from_json(rec);
    } catch (const Error& e) {
      throw Error(Errc::cache_corrupt,
                  "invalid topology in " + path.string() + ": " + e.what());
    }
    if (t.ground_size() != n)
      throw Error(Errc::cache_corrupt, "ground-size mismatch in record");
    if (!cat.entries.empty() && !(cat.entries.back() < t))
      throw Error(Errc::cache_corrupt, "entries out of canonical order");
    cat.entries.push_back(std::move(t));
  }
  if (cat.entries.size() != declared)
    throw Error(Errc::cache_corrupt,
                "entry count " + std::to_string(cat.entries.size()) +
                    " != declared " + std::to_string(declared));
  return cat;
}

}  // namespace topofilt
