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

#include "topofilt/verify.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "topofilt/equiv.hpp"
#include "topofilt/serialize.hpp"

namespace topofilt::verify {

namespace {

using nlohmann::json;

const TopologyCatalog& cached_catalog(int n) {
  static std::mutex mu;
  static std::map<int, TopologyCatalog> cats;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cats.find(n);
  if (it == cats.end()) it = cats.emplace(n, enumerate_topologies(n)).first;
  return it->second;
}

// Partial result of one shard. The order key is the outermost scan index of
// the failing instance; the merged first counterexample is the one with the
// smallest key (workers own disjoint, ordered index ranges and stop their
// shard at its first failure, so the minimum is the global scan-order first).
struct ScanResult {
  std::uint64_t instances = 0;
  std::uint64_t fail_key = 0;
  json fail_payload;  // null = no failure
  bool failed() const { return !fail_payload.is_null(); }

  void record_fail(std::uint64_t key, json payload) {
    if (!failed()) {
      fail_key = key;
      fail_payload = std::move(payload);
    }
  }
  void merge(ScanResult&& o) {
    instances += o.instances;
    if (o.failed() && (!failed() || o.fail_key < fail_key))
      std::tie(fail_key, fail_payload) = std::tie(o.fail_key, o.fail_payload);
  }
};

// Shards [0, count) across jobs contiguous ranges; scan(i, out) handles one
// outer index and stops early within a shard once out.failed().
ScanResult sharded_scan(std::size_t count, int jobs,
                        const std::function<void(std::size_t, ScanResult&)>& scan) {
  if (jobs < 1) jobs = 1;
  if (static_cast<std::size_t>(jobs) > count)
    jobs = static_cast<int>(std::max<std::size_t>(count, 1));
  if (jobs == 1) {
    ScanResult r;
    for (std::size_t i = 0; i < count && !r.failed(); ++i) scan(i, r);
    return r;
  }
  std::vector<ScanResult> parts(jobs);
  std::vector<std::thread> workers;
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w] {
      const std::size_t lo = count * w / jobs;
      const std::size_t hi = count * (w + 1) / jobs;
      for (std::size_t i = lo; i < hi && !parts[w].failed(); ++i)
        scan(i, parts[w]);
    });
  }
  for (auto& t : workers) t.join();
  ScanResult merged;
  for (auto& p : parts) merged.merge(std::move(p));
  return merged;
}

json pair_payload(const Topology& sigma, const Topology& tau) {
  json j;
  j["sigma"] = topology_to_json(sigma);
  j["tau"] = topology_to_json(tau);
  return j;
}

// Membership table for the family of sets with the Baire property wrt sigma.
std::vector<char> bp_table(const Topology& sigma) {
  std::vector<char> in(std::size_t{1} << sigma.ground_size(), 0);
  for (Mask m : baire_property_sets(sigma)) in[m] = 1;
  return in;
}

bool bp_basis(const Topology& sigma, const Topology& tau) {
  const std::vector<char> bp = bp_table(sigma);
  return has_nbhd_basis_with(tau, [&](Mask m) { return bp[m] != 0; });
}

bool cset_basis(const Topology& sigma, const Topology& tau) {
  return has_nbhd_basis_with(
      tau, [&](Mask m) { return in_open_algebra(sigma, m); });
}

// The finitized level Pi^0_{1+xi} with respect to sigma: the closed sets at
// xi = 0; from xi = 1 on, the algebra generated by the opens under the
// difference convention, nothing new under the naive one (unions of closed
// sets collapse to closed sets on a finite space, and their complements are
// open already).
bool in_pi_level(const Topology& sigma, Mask a, std::size_t xi,
                 BorelConvention conv) {
  if (xi == 0) return sigma.is_closed(a);
  if (conv == BorelConvention::difference) return in_open_algebra(sigma, a);
  return sigma.is_closed(a) || sigma.is_open(a);
}

// Membership in the union of levels Pi^0_{1+xi} for xi < levels.
bool in_pi_levels_below(const Topology& sigma, Mask a, std::size_t levels,
                        BorelConvention conv) {
  if (levels == 0) return false;
  if (in_pi_level(sigma, a, 0, conv)) return true;
  return levels >= 2 && in_pi_level(sigma, a, 1, conv);
}

// Nowhere dense (= meager) in the subspace topology on c; m must lie in c.
bool relatively_meager(const Topology& t, Mask c, Mask m) {
  const Mask cl = t.closure(m) & c;
  for (int x = 0; x < t.ground_size(); ++x)
    if (contains_point(cl, x) && ((t.min_nbhd(x) & c) & ~cl) == 0)
      return false;
  return true;
}

std::string catalog_phrase(const TopologyCatalog& cat) {
  std::ostringstream os;
  os << cat.size() << "-topology catalog at n=" << cat.n;
  return os.str();
}

struct PropertyDef {
  const char* id;
  int cap;
  VerificationReport (*run)(int n, const CheckOptions&);
};

// ---------------------------------------------------------------------------
// Properties
// ---------------------------------------------------------------------------

VerificationReport run_l_opb_i(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe = "all ordered pairs sigma <= tau over the " + catalog_phrase(cat);
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      ++out.instances;
      const Topology mid = step(sigma, tau);
      if (!sigma.subtopology_of(mid) || !mid.subtopology_of(tau)) {
        json p = pair_payload(sigma, tau);
        p["step"] = topology_to_json(mid);
        out.record_fail(i, std::move(p));
      }
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_l_opb_ii(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe = "all filtrations of length <= " + std::to_string(opt.budget) +
                 " between pairs over the " + catalog_phrase(cat) +
                 ", one check per (chain, stage)";
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      for_each_chain(cat, sigma, tau, opt.budget, ChainKind::filtration,
                     [&](const FiltrationSeq& seq) {
                       if (out.failed()) return;
                       for (std::size_t xi = 0; xi + 1 < seq.length(); ++xi) {
                         ++out.instances;
                         const Topology mid = step(seq.stage(xi), tau);
                         if (!seq.stage(xi).subtopology_of(mid) ||
                             !mid.subtopology_of(seq.stage(xi + 1))) {
                           json p;
                           p["filtration"] = filtration_to_json(seq);
                           p["xi"] = xi;
                           p["step"] = topology_to_json(mid);
                           out.record_fail(i, std::move(p));
                           return;
                         }
                       }
                     });
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_p_slo_i(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe =
      "slowest-iteration output for every pair over the " + catalog_phrase(cat);
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      ++out.instances;
      SlowestResult sr = slowest(sigma, tau);
      if (auto v = check_filtration(sr.seq)) {
        json p;
        p["filtration"] = filtration_to_json(sr.seq);
        p["alpha"] = v->alpha;
        p["set"] = v->set;
        out.record_fail(i, std::move(p));
      }
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_p_slo_ii(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe = "slowest iteration vs every filtration of length <= " +
                 std::to_string(opt.budget) + " over the " + catalog_phrase(cat) +
                 ", one check per (chain, stage)";
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      const SlowestResult sr = slowest(sigma, tau);
      const std::vector<Topology>& slow = sr.seq.stages();
      for_each_chain(cat, sigma, tau, opt.budget, ChainKind::filtration,
                     [&](const FiltrationSeq& seq) {
                       if (out.failed()) return;
                       for (std::size_t xi = 0; xi < seq.length(); ++xi) {
                         ++out.instances;
                         // The iteration stabilizes; pad with its fixpoint.
                         const Topology& s = slow[std::min(xi, slow.size() - 1)];
                         if (!s.subtopology_of(seq.stage(xi))) {
                           json p;
                           p["filtration"] = filtration_to_json(seq);
                           p["xi"] = xi;
                           p["slowest_stage"] = topology_to_json(s);
                           out.record_fail(i, std::move(p));
                           return;
                         }
                       }
                     });
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_t_sts(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe = "pairs over the " + catalog_phrase(cat) +
                 " with tau regular and minimal tau-neighborhoods having the "
                 "Baire property wrt sigma";
  std::atomic<std::uint64_t> baire_seen{0};
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      if (!is_regular(tau)) continue;
      if (is_baire(tau)) ++baire_seen;  // recorded, never filters
      if (!bp_basis(sigma, tau)) continue;
      ++out.instances;
      if (step(sigma, tau) == sigma && !(sigma == tau))
        out.record_fail(i, pair_payload(sigma, tau));
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  rep.note = "tau was Baire for " + std::to_string(baire_seen.load()) +
             " regular pairs (every finite topology is; recorded, not a filter)";
  return rep;
}

VerificationReport run_c_tst_ii(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe = "pairs over the " + catalog_phrase(cat) +
                 " with tau regular and minimal tau-neighborhoods C-sets wrt "
                 "sigma; distance must be finite";
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      if (!is_regular(tau) || !cset_basis(sigma, tau)) continue;
      ++out.instances;
      if (!distance(sigma, tau).has_value())
        out.record_fail(i, pair_payload(sigma, tau));
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_l_frth_i(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe = "all weak filtrations of length <= " + std::to_string(opt.budget) +
                 " between pairs over the " + catalog_phrase(cat) +
                 ", all alpha, all alpha-tame sets";
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      for_each_chain(cat, sigma, tau, opt.budget, ChainKind::weak_filtration,
                     [&](const FiltrationSeq& seq) {
                       if (out.failed()) return;
                       for (Ordinal alpha = 0; alpha < seq.length(); ++alpha) {
                         const Topology& at_alpha = seq.stage(alpha);
                         for (Mask f : tame_sets(seq, alpha)) {
                           ++out.instances;
                           const Mask ti = tau.interior(f);
                           if ((ti & ~tau.closure(at_alpha.interior(f))) != 0) {
                             json p;
                             p["filtration"] = filtration_to_json(seq);
                             p["alpha"] = alpha;
                             p["set"] = f;
                             out.record_fail(i, std::move(p));
                             return;
                           }
                         }
                       }
                     });
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_l_frth_ii(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  VerificationReport rep;
  rep.universe = "all weak filtrations of length <= " + std::to_string(opt.budget) +
                 " between pairs over the " + catalog_phrase(cat) +
                 ", all alpha <= beta, all subsets";
  const Mask full = full_mask(n);
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      for_each_chain(
          cat, sigma, tau, opt.budget, ChainKind::weak_filtration,
          [&](const FiltrationSeq& seq) {
            if (out.failed()) return;
            std::vector<Mask> hulls(seq.length());
            for (Ordinal a = 0; a < seq.length(); ++a)
              hulls[a] = slight_hull(seq, a);
            auto solid = [&](Ordinal a, Mask set) {
              for (Mask v : seq.stage(a).opens()) {
                const Mask rel = v & set;
                if (rel != 0 && (rel & ~hulls[a]) == 0) return false;
              }
              return true;
            };
            for (Ordinal alpha = 0; alpha < seq.length(); ++alpha)
              for (Ordinal beta = alpha; beta < seq.length(); ++beta)
                for (Mask a = 0;; ++a) {
                  ++out.instances;
                  if (solid(beta, a) && !solid(alpha, a)) {
                    json p;
                    p["filtration"] = filtration_to_json(seq);
                    p["alpha"] = alpha;
                    p["beta"] = beta;
                    p["set"] = a;
                    out.record_fail(i, std::move(p));
                    return;
                  }
                  if (a == full) break;
                }
          });
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_l_onsl(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  const Topology top = Topology::discrete(n);
  VerificationReport rep;
  rep.universe = "all inclusion chains of length <= " + std::to_string(opt.budget) +
                 " over the " + catalog_phrase(cat) +
                 ", all alpha: empty set slight, unions of slights slight";
  const Mask full = full_mask(n);
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    for_each_chain(
        cat, cat.at(i), top, opt.budget, ChainKind::any,
        [&](const FiltrationSeq& seq) {
          if (out.failed()) return;
          for (Ordinal alpha = 0; alpha < seq.length(); ++alpha) {
            const Mask hull = slight_hull(seq, alpha);
            ++out.instances;
            if ((Mask{0} & ~hull) != 0) {  // empty set always slight
              json p;
              p["filtration"] = filtration_to_json(seq);
              p["alpha"] = alpha;
              out.record_fail(i, std::move(p));
              return;
            }
            for (Mask a = 0;; ++a) {
              for (Mask b = 0;; ++b) {
                const bool sa = (a & ~hull) == 0;
                const bool sb = (b & ~hull) == 0;
                ++out.instances;
                if (sa && sb && ((a | b) & ~hull) != 0) {
                  json p;
                  p["filtration"] = filtration_to_json(seq);
                  p["alpha"] = alpha;
                  p["first"] = a;
                  p["second"] = b;
                  out.record_fail(i, std::move(p));
                  return;
                }
                if (b == full) break;
              }
              if (a == full) break;
            }
          }
        });
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_l_obv(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  const Topology top = Topology::discrete(n);
  VerificationReport rep;
  rep.universe = "all inclusion chains of length <= " + std::to_string(opt.budget) +
                 " over the " + catalog_phrase(cat) +
                 "; solidity vs the raw countable-family definition over all "
                 "subfamilies of tame sets";
  const Mask full = full_mask(n);
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    for_each_chain(
        cat, cat.at(i), top, opt.budget, ChainKind::any,
        [&](const FiltrationSeq& seq) {
          if (out.failed()) return;
          for (Ordinal alpha = 0; alpha < seq.length(); ++alpha) {
            const SetFamily tame = tame_sets(seq, alpha);
            const Topology& at_alpha = seq.stage(alpha);
            // Raw definition evaluated by brute force over families.
            auto solid_raw = [&](Mask set) {
              for (std::uint32_t pick = 0; pick < (std::uint32_t{1} << tame.size());
                   ++pick) {
                Mask covered = 0;
                bool some_nonempty_interior = false;
                for (std::size_t t = 0; t < tame.size(); ++t)
                  if (pick >> t & 1u) {
                    covered |= tame[t];
                    some_nonempty_interior |= at_alpha.interior(tame[t]) != 0;
                  }
                bool contains_rel_open = false;
                for (Mask v : at_alpha.opens()) {
                  const Mask rel = v & set;
                  if (rel != 0 && (rel & ~covered) == 0) {
                    contains_rel_open = true;
                    break;
                  }
                }
                if (contains_rel_open && !some_nonempty_interior) return false;
              }
              return true;
            };
            for (Mask a = 0;; ++a) {
              ++out.instances;
              if (is_solid(seq, alpha, a) != solid_raw(a)) {
                json p;
                p["filtration"] = filtration_to_json(seq);
                p["alpha"] = alpha;
                p["set"] = a;
                out.record_fail(i, std::move(p));
                return;
              }
              if (a == full) break;
            }
          }
        });
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_l_slal_c(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  const Topology top = Topology::discrete(n);
  VerificationReport rep;
  rep.universe = "all filtrations-from-sigma of length <= " +
                 std::to_string(opt.budget) + " over the " + catalog_phrase(cat) +
                 ", all xi < alpha, all subsets: c_xi closed at stage xi and "
                 "the trimmed part slight";
  const Mask full = full_mask(n);
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    for_each_chain(
        cat, cat.at(i), top, opt.budget, ChainKind::filtration_from,
        [&](const FiltrationSeq& seq) {
          if (out.failed()) return;
          for (Ordinal alpha = 0; alpha < seq.length(); ++alpha) {
            const Mask hull = slight_hull(seq, alpha);
            for (Ordinal xi = 0; xi < alpha; ++xi)
              for (Mask a = 0;; ++a) {
                ++out.instances;
                const Mask c = c_xi(seq, xi, alpha, a);
                const bool closed_ok = seq.stage(xi).is_closed(c);
                const bool slight_ok = ((a & ~c) & ~hull) == 0;
                if (!closed_ok || !slight_ok) {
                  json p;
                  p["filtration"] = filtration_to_json(seq);
                  p["xi"] = xi;
                  p["alpha"] = alpha;
                  p["set"] = a;
                  p["c_xi"] = c;
                  out.record_fail(i, std::move(p));
                  return;
                }
                if (a == full) break;
              }
          }
        });
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_e_down(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  const std::vector<Partition> partitions = all_partitions(n);
  VerificationReport rep;
  rep.universe = "all " + std::to_string(partitions.size()) +
                 " partitions against every slowest-iteration chain over the " +
                 catalog_phrase(cat);
  ScanResult r = sharded_scan(cat.size(), opt.jobs, [&](std::size_t i, ScanResult& out) {
    const Topology& sigma = cat.at(i);
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      const FiltrationSeq chain = slowest(sigma, tau).seq;
      for (const Partition& e : partitions) {
        ++out.instances;
        const std::vector<Partition> approxs = approx_chain(e, chain);
        bool ok = true;
        for (std::size_t k = 0; k < approxs.size() && ok; ++k) {
          ok = relation_includes(approxs[k], e);
          if (ok && k + 1 < approxs.size())
            ok = relation_includes(approxs[k], approxs[k + 1]);
        }
        if (!ok) {
          json p;
          p["filtration"] = filtration_to_json(chain);
          p["partition"] = partition_to_json(e);
          out.record_fail(i, std::move(p));
          break;
        }
      }
    }
  });
  rep.instances_checked = r.instances;
  rep.outcome = r.failed() ? Outcome::fail : Outcome::pass;
  rep.counterexample = std::move(r.fail_payload);
  return rep;
}

VerificationReport run_discrete_trivializations(int n, const CheckOptions& opt) {
  const TopologyCatalog& cat = cached_catalog(n);
  const Topology disc = Topology::discrete(n);
  const std::vector<Partition> partitions = all_partitions(n);
  VerificationReport rep;
  rep.universe =
      "filtrations whose proper stages are discrete (finite metrizable = "
      "discrete): single-stage chains plus all-discrete chains of length <= " +
      std::to_string(opt.budget) + " over the " + catalog_phrase(cat);

  // Qualifying chains: [t] for every t, and [D, ..., D] of length >= 2.
  std::vector<FiltrationSeq> chains;
  for (const Topology& t : cat.entries)
    chains.push_back(FiltrationSeq({t}));
  for (unsigned len = 2; len <= opt.budget; ++len)
    chains.push_back(FiltrationSeq(std::vector<Topology>(len, disc)));

  ScanResult r = sharded_scan(chains.size(), opt.jobs, [&](std::size_t ci, ScanResult& out) {
    const FiltrationSeq& seq = chains[ci];
    const Topology& sigma = seq.stage(0);
    const std::size_t alpha = seq.length() - 1;
    const Topology& last = seq.stage(alpha);

    std::vector<Mask> hulls(seq.length());
    for (Ordinal a2 = 0; a2 < seq.length(); ++a2)
      hulls[a2] = slight_hull(seq, a2);
    auto solid = [&](std::size_t at, Mask set) {
      for (Mask v : seq.stage(at).opens()) {
        const Mask rel = v & set;
        if (rel != 0 && (rel & ~hulls[at]) == 0) return false;
      }
      return true;
    };

    auto fail = [&](const char* which, json extra) {
      json p;
      p["filtration"] = filtration_to_json(seq);
      p["conclusion"] = which;
      p["detail"] = std::move(extra);
      out.record_fail(ci, std::move(p));
    };

    // Stabilization conclusion: for every tau above the chain satisfying the
    // filtration condition and the level-bounded-basis hypothesis, the last
    // stage must equal tau.
    for (std::size_t j = 0; j < cat.size() && !out.failed(); ++j) {
      const Topology& tau = cat.at(j);
      if (!last.subtopology_of(tau)) continue;
      if (check_filtration(FiltrationSeq(seq.stages(), tau))) continue;
      if (!is_regular(tau) || !is_baire(tau)) continue;  // Baire always holds
      if (!has_nbhd_basis_with(tau, [&](Mask m) {
            return in_pi_levels_below(sigma, m, alpha, opt.convention);
          }))
        continue;
      ++out.instances;
      if (!(last == tau)) {
        json extra;
        extra["tau"] = topology_to_json(tau);
        fail("stabilization", std::move(extra));
      }
    }
    if (out.failed()) return;

    // Equivalence-approximation conclusion: relations with solid,
    // level-bounded classes are recovered by the meet of the proper-stage
    // approximations.
    if (alpha >= 1) {
      for (const Partition& e : partitions) {
        bool hyp = true;
        for (int b = 0; b < e.block_count() && hyp; ++b) {
          hyp = in_pi_levels_below(sigma, e.block_mask(b), alpha, opt.convention);
          for (std::size_t a2 = 0; a2 < seq.length() && hyp; ++a2)
            hyp = solid(a2, e.block_mask(b));
        }
        if (!hyp) continue;
        ++out.instances;
        std::vector<Partition> props;
        for (std::size_t xi = 0; xi < alpha; ++xi)
          props.push_back(approx(e, seq.stage(xi)));
        if (!(relation_meet(props) == e)) {
          json extra;
          extra["partition"] = partition_to_json(e);
          fail("equivalence_meet", std::move(extra));
        }
        if (out.failed()) return;
      }
    }

    // Solid-closure conclusion: for level-xi sets A and solid B inside A,
    // the stage-xi closure of B sticks out of A only meagerly at the top.
    const Mask full = full_mask(n);
    for (std::size_t xi = 0; xi <= alpha && !out.failed(); ++xi) {
      for (Mask a = 0;; ++a) {
        if (in_pi_level(sigma, a, xi, opt.convention)) {
          for (Mask b = a;; b = (b - 1) & a) {  // subsets of a
            if (solid(alpha, b)) {
              ++out.instances;
              const Mask sticking = seq.stage(xi).closure(b) & ~a;
              if (!meager(last, sticking)) {
                json extra;
                extra["xi"] = xi;
                extra["set"] = a;
                extra["subset"] = b;
                fail("solid_closure_meager", std::move(extra));
                break;
              }
            }
            if (b == 0) break;
          }
        }
        if (out.failed() || a == full) break;
      }
    }
    if (out.failed()) return;

    // Relative variant: an (alpha+1)-solid, level-alpha set is relatively
    // comeager in its stage-alpha closure. Chain indices: prior = alpha-1.
    if (alpha >= 1) {
      const std::size_t prior = alpha - 1;
      const Topology& at_prior = seq.stage(prior);
      for (Mask a = 0;; ++a) {
        if (in_pi_level(sigma, a, prior, opt.convention) &&
            solid(alpha, a)) {
          ++out.instances;
          const Mask cl = at_prior.closure(a);
          if (!relatively_meager(at_prior, cl, cl & ~a)) {
            json extra;
            extra["set"] = a;
            fail("relative_solid_closure", std::move(extra));
            break;
          }
        }
        if (out.failed() || a == full) break;
      }
    }
  });

  rep.instances_checked = r.instances;
  if (r.failed()) {
    rep.outcome = Outcome::fail;
    rep.counterexample = std::move(r.fail_payload);
  } else {
    rep.outcome = Outcome::trivialized;
    rep.note =
        "finite metrizable stages are discrete, so the hypotheses force "
        "degenerate chains; conclusions asserted on that universe";
  }
  return rep;
}

constexpr PropertyDef kProperties[] = {
    {"L_OPB_I", 3, run_l_opb_i},
    {"L_OPB_II", 3, run_l_opb_ii},
    {"P_SLO_I", 3, run_p_slo_i},
    {"P_SLO_II", 3, run_p_slo_ii},
    {"T_STS", 3, run_t_sts},
    {"C_TST_II", 3, run_c_tst_ii},
    {"L_FRTH_I", 3, run_l_frth_i},
    {"L_FRTH_II", 3, run_l_frth_ii},
    {"L_ONSL", 3, run_l_onsl},
    {"L_OBV", 2, run_l_obv},
    {"L_SLAL_C", 3, run_l_slal_c},
    {"E_DOWN", 3, run_e_down},
    {"DISCRETE_STAGE_TRIVIALIZATIONS", 3, run_discrete_trivializations},
};

const PropertyDef& find_property(const std::string& id) {
  for (const PropertyDef& p : kProperties)
    if (id == p.id) return p;
  throw Error(Errc::unknown_property, id);
}

}  // namespace

const char* outcome_name(Outcome o) noexcept {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::trivialized: return "trivialized";
  }
  return "fail";
}

const std::vector<std::string>& property_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const PropertyDef& p : kProperties) v.emplace_back(p.id);
    return v;
  }();
  return ids;
}

int property_ground_cap(const std::string& property_id) {
  return find_property(property_id).cap;
}

VerificationReport check(const std::string& property_id, int n,
                         const CheckOptions& options) {
  const PropertyDef& def = find_property(property_id);
  require_ground_size(n, def.cap);
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep = def.run(n, options);
  rep.property_id = def.id;
  if (rep.outcome == Outcome::fail)
    rep.note = (rep.note.empty() ? std::string() : rep.note + "; ") +
               "the checked statement is a theorem: a counterexample at this "
               "scale indicates an implementation defect, not a mathematical "
               "discovery";
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

std::vector<VerificationReport> check_all(int n, const CheckOptions& options) {
  std::vector<VerificationReport> out;
  for (const PropertyDef& p : kProperties)
    out.push_back(check(p.id, std::min(n, p.cap), options));
  return out;
}

namespace {

ExplorationReport run_unreached_pairs(int n, const CheckOptions&) {
  require_ground_size(n, 4);
  const TopologyCatalog& cat = cached_catalog(n);
  ExplorationReport rep;
  rep.universe = "all ordered pairs sigma <= tau over the " + catalog_phrase(cat);
  json found = json::array();
  std::uint64_t scanned = 0;
  for_each_pair(cat, [&](std::size_t i, std::size_t j) {
    ++scanned;
    const Topology& sigma = cat.at(i);
    const Topology& tau = cat.at(j);
    if (distance(sigma, tau).has_value()) return;
    json entry;
    entry["sigma"] = topology_to_json(sigma);
    entry["tau"] = topology_to_json(tau);
    entry["distance"] = "unreachable";
    entry["tau_regular"] = is_regular(tau);
    entry["tau_baire"] = is_baire(tau);
    entry["bp_basis"] = bp_basis(sigma, tau);
    entry["cset_basis"] = cset_basis(sigma, tau);
    json failed = json::array();
    if (!is_regular(tau)) failed.push_back("tau_not_regular");
    if (!bp_basis(sigma, tau)) failed.push_back("bp_basis_fails");
    if (!cset_basis(sigma, tau)) failed.push_back("cset_basis_fails");
    entry["failed_hypotheses"] = std::move(failed);
    found.push_back(std::move(entry));
  });
  rep.instances_checked = scanned;
  rep.findings = std::move(found);
  return rep;
}

ExplorationReport run_weak_not_full(int n, const CheckOptions& opt) {
  require_ground_size(n, 3);
  const TopologyCatalog& cat = cached_catalog(n);
  ExplorationReport rep;
  rep.universe = "weak filtrations of length <= " + std::to_string(opt.budget) +
                 " between pairs over the " + catalog_phrase(cat) +
                 ", scanned for the first one failing the full condition";
  json witness;  // null until found
  std::uint64_t scanned = 0;
  for (std::size_t i = 0; i < cat.size() && witness.is_null(); ++i)
    for (std::size_t j = 0; j < cat.size() && witness.is_null(); ++j) {
      const Topology& sigma = cat.at(i);
      const Topology& tau = cat.at(j);
      if (!sigma.subtopology_of(tau)) continue;
      for_each_chain(cat, sigma, tau, opt.budget, ChainKind::weak_filtration,
                     [&](const FiltrationSeq& seq) {
                       if (!witness.is_null()) return;
                       ++scanned;
                       if (auto v = check_filtration(seq)) {
                         witness = json::object();
                         witness["filtration"] = filtration_to_json(seq);
                         witness["alpha"] = v->alpha;
                         witness["set"] = v->set;
                       }
                     });
    }
  rep.instances_checked = scanned;
  rep.findings = json::object();
  rep.findings["witness"] = std::move(witness);
  return rep;
}

ExplorationReport run_solid_gap(int n, const CheckOptions& opt) {
  require_ground_size(n, 3);
  const TopologyCatalog& cat = cached_catalog(n);
  const Topology top = Topology::discrete(n);
  ExplorationReport rep;
  rep.universe = "filtrations-from-sigma of length <= " +
                 std::to_string(opt.budget) + " over the " + catalog_phrase(cat) +
                 "; sets alpha-solid but not (alpha+1)-solid";
  constexpr std::size_t kMaxListed = 20;
  json gaps = json::array();
  std::uint64_t scanned = 0, total = 0;
  const Mask full = full_mask(n);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for_each_chain(
        cat, cat.at(i), top, opt.budget, ChainKind::filtration_from,
        [&](const FiltrationSeq& seq) {
          if (seq.length() < 2) return;
          std::vector<Mask> hulls(seq.length());
          for (Ordinal a2 = 0; a2 < seq.length(); ++a2)
            hulls[a2] = slight_hull(seq, a2);
          auto solid = [&](Ordinal at, Mask set) {
            for (Mask v : seq.stage(at).opens()) {
              const Mask rel = v & set;
              if (rel != 0 && (rel & ~hulls[at]) == 0) return false;
            }
            return true;
          };
          for (Ordinal alpha = 0; alpha + 1 < seq.length(); ++alpha)
            for (Mask a = 0;; ++a) {
              ++scanned;
              if (solid(alpha, a) && !solid(alpha + 1, a)) {
                ++total;
                if (gaps.size() < kMaxListed) {
                  json g;
                  g["filtration"] = filtration_to_json(seq);
                  g["alpha"] = alpha;
                  g["set"] = a;
                  gaps.push_back(std::move(g));
                }
              }
              if (a == full) break;
            }
        });
  rep.instances_checked = scanned;
  rep.findings = json::object();
  rep.findings["witnesses"] = std::move(gaps);
  rep.findings["total_gaps"] = total;
  return rep;
}

}  // namespace

const std::vector<std::string>& query_ids() {
  static const std::vector<std::string> ids = {"UNREACHED_PAIRS",
                                               "WEAK_NOT_FULL", "SOLID_GAP"};
  return ids;
}

ExplorationReport explore(const std::string& query, int n,
                          const CheckOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  ExplorationReport rep;
  if (query == "UNREACHED_PAIRS") {
    rep = run_unreached_pairs(n, options);
  } else if (query == "WEAK_NOT_FULL") {
    rep = run_weak_not_full(n, options);
  } else if (query == "SOLID_GAP") {
    rep = run_solid_gap(n, options);
  } else {
    throw Error(Errc::unknown_query, query);
  }
  rep.query = query;
  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

nlohmann::json report_to_json(const VerificationReport& r) {
  json j;
  j["property_id"] = r.property_id;
  j["universe"] = r.universe;
  j["instances_checked"] = r.instances_checked;
  j["outcome"] = outcome_name(r.outcome);
  j["counterexample"] = r.counterexample;
  j["note"] = r.note;
  return j;
}

nlohmann::json report_to_json(const ExplorationReport& r) {
  json j;
  j["query"] = r.query;
  j["universe"] = r.universe;
  j["instances_checked"] = r.instances_checked;
  j["findings"] = r.findings;
  return j;
}

}  // namespace topofilt::verify
