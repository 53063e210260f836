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

#include "topofilt/topology.hpp"

#include <cassert>
#include <map>
#include <sstream>

namespace topofilt {

namespace {

std::string mask_str(Mask m, int n) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x = 0; x < n; ++x)
    if (contains_point(m, x)) {
      if (!first) os << ',';
      os << x;
      first = false;
    }
  os << '}';
  return os.str();
}

// Opens of the Alexandrov topology with minimal-neighborhood table `table`:
// exactly the masks a with table[x] <= a for every x in a.
SetFamily upset_family(int n, std::span<const Mask> table) {
  std::vector<Mask> opens;
  const Mask full = full_mask(n);
  for (Mask a = 0;; ++a) {
    bool open = true;
    for (int x = 0; x < n && open; ++x)
      if (contains_point(a, x) && (table[x] & ~a) != 0) open = false;
    if (open) opens.push_back(a);
    if (a == full) break;
  }
  return SetFamily::from_sorted(std::move(opens));
}

}  // namespace

Topology Topology::discrete(int n) {
  require_ground_size(n);
  std::array<Mask, kMaxGroundSize> table{};
  for (int x = 0; x < n; ++x) table[x] = point_mask(x);
  return from_min_table(n, std::span<const Mask>(table.data(), n));
}

Topology Topology::indiscrete(int n) {
  require_ground_size(n);
  std::array<Mask, kMaxGroundSize> table{};
  for (int x = 0; x < n; ++x) table[x] = full_mask(n);
  return from_min_table(n, std::span<const Mask>(table.data(), n));
}

Topology Topology::sierpinski() {
  return make_topology(2, SetFamily::from_sorted({0, 1, 3}), MakeMode::validate);
}

Topology Topology::from_min_table(int n, std::span<const Mask> table) {
  Topology t;
  t.n_ = n;
  for (int x = 0; x < n; ++x) {
    assert(contains_point(table[x], x));
    t.min_nbhd_[x] = table[x];
  }
  t.opens_ = upset_family(n, std::span<const Mask>(t.min_nbhd_.data(), n));
  return t;
}

Topology Topology::from_validated_opens(int n, SetFamily opens) {
  Topology t;
  t.n_ = n;
  for (int x = 0; x < n; ++x) {
    Mask u = full_mask(n);
    for (Mask o : opens)
      if (contains_point(o, x)) u &= o;
    t.min_nbhd_[x] = u;
  }
  t.opens_ = std::move(opens);
  return t;
}

bool Topology::subtopology_of(const Topology& t) const {
  if (n_ != t.n_) return false;
  // Coarser topology means larger minimal neighborhoods pointwise.
  for (int x = 0; x < n_; ++x)
    if ((t.min_nbhd_[x] & ~min_nbhd_[x]) != 0) return false;
  return true;
}

Topology make_topology(int n, const SetFamily& generators, MakeMode mode) {
  require_ground_size(n);
  for (Mask g : generators)
    if (!mask_fits(g, n))
      throw Error(Errc::mask_out_of_range,
                  "generator has bits beyond ground size " + std::to_string(n));

  const Mask full = full_mask(n);

  if (mode == MakeMode::generate) {
    // Minimal neighborhood of x in the generated topology: the intersection
    // of all generators containing x (X when none does).
    std::array<Mask, kMaxGroundSize> table{};
    for (int x = 0; x < n; ++x) {
      Mask u = full;
      for (Mask g : generators)
        if (contains_point(g, x)) u &= g;
      table[x] = u;
    }
    return Topology::from_min_table(n, std::span<const Mask>(table.data(), n));
  }

  // validate mode
  if (!generators.contains(0))
    throw Error(Errc::not_a_topology, "empty set missing");
  if (!generators.contains(full))
    throw Error(Errc::not_a_topology, "whole space missing");

  Topology candidate = Topology::from_validated_opens(n, generators);
  SetFamily closedup = upset_family(
      n, std::span<const Mask>(candidate.min_nbhd_.data(), n));
  if (closedup == generators) return candidate;

  // Not a topology; hunt a pairwise witness for the error message.
  if (generators.size() <= 4096) {
    for (std::size_t i = 0; i < generators.size(); ++i)
      for (std::size_t j = i; j < generators.size(); ++j) {
        Mask u = generators[i] | generators[j];
        if (!generators.contains(u))
          throw Error(Errc::not_a_topology,
                      "union " + mask_str(generators[i], n) + " | " +
                          mask_str(generators[j], n) + " = " + mask_str(u, n) +
                          " missing");
        Mask v = generators[i] & generators[j];
        if (!generators.contains(v))
          throw Error(Errc::not_a_topology,
                      "intersection " + mask_str(generators[i], n) + " & " +
                          mask_str(generators[j], n) + " = " + mask_str(v, n) +
                          " missing");
      }
  }
  throw Error(Errc::not_a_topology, "family not closed under union/intersection");
}

Topology join(std::span<const Topology> ts) {
  if (ts.empty()) throw Error(Errc::empty_list, "join of no topologies");
  const int n = ts.front().ground_size();
  std::vector<Mask> gens;
  for (const Topology& t : ts) {
    if (t.ground_size() != n)
      throw Error(Errc::mixed_ground_sizes, "join over different ground sets");
    gens.insert(gens.end(), t.opens().begin(), t.opens().end());
  }
  return make_topology(n, SetFamily::from_unsorted(std::move(gens)),
                       MakeMode::generate);
}

Preorder Preorder::from_rows(int n, std::span<const Mask> rows) {
  require_ground_size(n);
  Preorder p;
  p.n_ = n;
  for (int x = 0; x < n; ++x) {
    if (!mask_fits(rows[x], n))
      throw Error(Errc::not_a_preorder, "row has bits beyond ground size");
    if (!contains_point(rows[x], x))
      throw Error(Errc::not_a_preorder,
                  "not reflexive at " + std::to_string(x));
    p.rows_[x] = rows[x];
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (contains_point(p.rows_[x], y) && (p.rows_[y] & ~p.rows_[x]) != 0)
        throw Error(Errc::not_a_preorder,
                    "not transitive through " + std::to_string(x) + " <= " +
                        std::to_string(y));
  return p;
}

Preorder specialization_preorder(const Topology& t) {
  // x <= y iff x in cl({y}) iff y in U_x, so the rows are the minimal
  // neighborhoods.
  Preorder p;
  p.n_ = t.ground_size();
  for (int x = 0; x < p.n_; ++x) p.rows_[x] = t.min_nbhd(x);
  return p;
}

Topology from_preorder(const Preorder& p) {
  return Topology::from_min_table(
      p.ground_size(), std::span<const Mask>(p.rows_.data(), p.ground_size()));
}

bool is_regular(const Topology& t, Regularity mode) {
  const Mask full = t.full();
  if (mode == Regularity::with_t1) {
    for (int x = 0; x < t.ground_size(); ++x)
      if (t.closure(point_mask(x)) != point_mask(x)) return false;
  }
  for (Mask u : t.opens()) {
    const Mask f = full ^ u;
    // Smallest open covering F; disjoint separating opens exist iff the
    // minimal candidates are disjoint.
    Mask vf = 0;
    for (int y = 0; y < t.ground_size(); ++y)
      if (contains_point(f, y)) vf |= t.min_nbhd(y);
    for (int x = 0; x < t.ground_size(); ++x)
      if (!contains_point(f, x) && (t.min_nbhd(x) & vf) != 0) return false;
  }
  return true;
}

bool nowhere_dense(const Topology& t, Mask a) {
  return t.interior(t.closure(a)) == 0;
}

bool meager(const Topology& t, Mask a) { return nowhere_dense(t, a); }

bool is_baire(const Topology& t) {
  const Mask full = t.full();
  for (Mask a = 0;; ++a) {
    if (meager(t, a) && t.closure(full ^ a) != full) return false;
    if (a == full) break;
  }
  return true;
}

SetFamily baire_property_sets(const Topology& sigma) {
  const Mask full = sigma.full();
  std::vector<Mask> meagers;
  for (Mask m = 0;; ++m) {
    if (meager(sigma, m)) meagers.push_back(m);
    if (m == full) break;
  }
  std::vector<char> seen(std::size_t{1} << sigma.ground_size(), 0);
  for (Mask u : sigma.opens())
    for (Mask m : meagers) seen[u ^ m] = 1;  // xor is symmetric difference
  std::vector<Mask> out;
  for (Mask a = 0;; ++a) {
    if (seen[a]) out.push_back(a);
    if (a == full) break;
  }
  return SetFamily::from_sorted(std::move(out));
}

namespace {

// Atoms of the Boolean algebra generated by the opens: the blocks of the
// "same minimal neighborhood" partition.
std::vector<Mask> open_algebra_atoms(const Topology& sigma) {
  std::map<Mask, Mask> by_nbhd;
  for (int x = 0; x < sigma.ground_size(); ++x)
    by_nbhd[sigma.min_nbhd(x)] |= point_mask(x);
  std::vector<Mask> atoms;
  for (const auto& [u, block] : by_nbhd) atoms.push_back(block);
  return atoms;
}

}  // namespace

bool in_open_algebra(const Topology& sigma, Mask a) {
  for (Mask atom : open_algebra_atoms(sigma)) {
    const Mask hit = a & atom;
    if (hit != 0 && hit != atom) return false;
  }
  return true;
}

SetFamily c_sets(const Topology& sigma) {
  const std::vector<Mask> atoms = open_algebra_atoms(sigma);
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << atoms.size());
  for (Mask pick = 0; pick < (Mask{1} << atoms.size()); ++pick) {
    Mask a = 0;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (contains_point(pick, static_cast<int>(i))) a |= atoms[i];
    out.push_back(a);
  }
  return SetFamily::from_unsorted(std::move(out));
}

const char* borel_class_name(BorelClass c) noexcept {
  switch (c) {
    case BorelClass::clopen: return "clopen";
    case BorelClass::open: return "open";
    case BorelClass::closed: return "closed";
    case BorelClass::constructible: return "constructible";
    case BorelClass::none: return "none";
  }
  return "none";
}

BorelClass borel_class(const Topology& sigma, Mask a, BorelConvention conv) {
  const bool open = sigma.is_open(a);
  const bool closed = sigma.is_closed(a);
  if (open && closed) return BorelClass::clopen;
  if (open) return BorelClass::open;
  if (closed) return BorelClass::closed;
  if (conv == BorelConvention::difference && in_open_algebra(sigma, a))
    return BorelClass::constructible;
  return BorelClass::none;
}

bool has_nbhd_basis_with(const Topology& tau,
                         const std::function<bool(Mask)>& p) {
  for (int x = 0; x < tau.ground_size(); ++x)
    if (!p(tau.min_nbhd(x))) return false;
  return true;
}

}  // namespace topofilt
