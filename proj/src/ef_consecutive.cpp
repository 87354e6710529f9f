// Copyright 2026 The Fairline Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairline/ef_consecutive.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "fairline/error.hpp"

namespace fairline {
namespace {

[[noreturn]] void NotAdjacent(AgentRange left, AgentRange right) {
  throw Error(ErrorCode::kBlocksNotAdjacent,
              "blocks [" + std::to_string(left.begin) + "," +
                  std::to_string(left.end) + ") and [" +
                  std::to_string(right.begin) + "," +
                  std::to_string(right.end) + ")");
}

std::vector<Rational> Slice(const Instance& inst, AgentRange r) {
  return {inst.destinations().begin() + r.begin,
          inst.destinations().begin() + r.end};
}

Rational FiniteCost(const Cost& c) { return c.value(); }

// Per-block quantities for every range [s, e).
//
// For an agent a beyond every member of B, sitting in B in place of b costs
// phi(B - b + a, x_a) = seat[B] + x_a at best, with seat[B] minimised over b.
// An agent's own cost minus its destination is largest for the first agent
// of its block, which gives slack[B].
class BlockTable {
 public:
  explicit BlockTable(const Instance& inst)
      : n_(inst.num_agents()),
        seat_((n_ + 1) * (n_ + 1)),
        slack_((n_ + 1) * (n_ + 1)) {
    for (int s = 0; s < n_; ++s) {
      for (int e = s + 1; e <= n_; ++e) {
        const std::vector<Rational> block = Slice(inst, {s, e});
        slack_[at(s, e)] = inst.x(s) / (e - s) - inst.x(s);
        std::optional<Rational> best;
        for (int b = s; b < e; ++b) {
          std::vector<Rational> rest;
          for (int m = s; m < e; ++m) {
            if (m != b) rest.push_back(inst.x(m));
          }
          Rational value = 0;
          if (!rest.empty()) {
            const Rational far = rest.back();
            rest.push_back(far);  // the newcomer rides along up to `far`
            value = FiniteCost(Phi(rest, far)) - far;
          }
          if (!best || value < *best) best = value;
        }
        seat_[at(s, e)] = *best;
      }
    }
  }

  const Rational& seat(int s, int e) const { return seat_[at(s, e)]; }
  const Rational& slack(int s, int e) const { return slack_[at(s, e)]; }

 private:
  std::size_t at(int s, int e) const {
    return static_cast<std::size_t>(s) * (n_ + 1) + e;
  }

  int n_;
  std::vector<Rational> seat_;
  std::vector<Rational> slack_;
};

// The last agent of `left` would not gain from any seat in `right`.
bool ForwardOk(const Instance& inst, AgentRange left, AgentRange right) {
  const Rational& x = inst.x(left.end - 1);
  return Phi(Slice(inst, left), x) <= Cost(x / right.size());
}

}  // namespace

bool BoundaryEnvyOk(const Instance& inst, AgentRange left, AgentRange right) {
  if (left.size() <= 0 || right.size() <= 0 || left.end != right.begin ||
      left.begin < 0 || right.end > inst.num_agents()) {
    NotAdjacent(left, right);
  }
  const int last = left.end - 1;
  const int first = right.begin;
  const Rational& x_last = inst.x(last);
  const Rational& x_first = inst.x(first);

  std::vector<Rational> l = Slice(inst, left);
  std::vector<Rational> r = Slice(inst, right);
  const Cost last_now = Phi(l, x_last);
  const Cost first_now = Phi(r, x_first);

  // Swap the two boundary agents; sizes stay put, so quotas do not matter.
  std::vector<Rational> r_swapped = r;
  r_swapped.front() = x_last;
  std::vector<Rational> l_swapped = l;
  l_swapped.back() = x_first;
  return last_now <= Phi(r_swapped, x_last) &&
         first_now <= Phi(l_swapped, x_first);
}

bool BlocksEnvyFree(const Instance& inst, std::span<const AgentRange> blocks) {
  int begin = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const AgentRange b = blocks[i];
    const bool shrinking = i == 0 || blocks[i - 1].size() >= b.size();
    if (b.begin != begin || b.size() <= 0 || b.end > inst.num_agents() ||
        !shrinking) {
      NotAdjacent(i == 0 ? AgentRange{0, 0} : blocks[i - 1], b);
    }
    begin = b.end;
  }
  const BlockTable table(inst);
  std::optional<Rational> threshold;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const AgentRange b = blocks[i];
    if (i > 0 && !ForwardOk(inst, blocks[i - 1], b)) return false;
    if (threshold && table.slack(b.begin, b.end) > *threshold) return false;
    const Rational& seat = table.seat(b.begin, b.end);
    if (!threshold || seat < *threshold) threshold = seat;
  }
  return true;
}

std::optional<Allocation> SolveEfConsecutive(const Instance& inst,
                                             ConsecutiveRule rule) {
  const int n = inst.num_agents();
  const int k = inst.num_taxis();
  const bool exact = rule == ConsecutiveRule::kExact;
  const std::optional<BlockTable> table =
      exact ? std::optional<BlockTable>(inst) : std::nullopt;

  // Cell (mu, kappa, ell): agents [0, mu) fill taxis [0, kappa) and the last
  // block has ell agents. `threshold` is the smallest seat value among the
  // blocks so far; a larger one leaves more room later, so each cell keeps
  // only its best. Under the boundary rule it stays at zero.
  struct Cell {
    bool reachable = false;
    Rational threshold;
    int back = 0;
  };
  auto at = [&](int mu, int kappa, int ell) {
    return (static_cast<std::size_t>(mu) * (k + 1) + kappa) * (n + 1) + ell;
  };
  std::vector<Cell> z(static_cast<std::size_t>(n + 1) * (k + 1) * (n + 1));

  for (int ell = 1; ell <= std::min(n, inst.quota(0)); ++ell) {
    Cell& c = z[at(ell, 1, ell)];
    c.reachable = true;
    if (exact) c.threshold = table->seat(0, ell);
  }
  for (int kappa = 2; kappa <= k; ++kappa) {
    for (int mu = 2; mu <= n; ++mu) {
      for (int ell = 1; ell <= std::min(mu - 1, inst.quota(kappa - 1));
           ++ell) {
        const int prefix = mu - ell;
        const AgentRange cur{prefix, mu};
        Cell& cell = z[at(mu, kappa, ell)];
        // Largest previous block first, so ties keep it.
        for (int prev = std::min(prefix, inst.quota(kappa - 2)); prev >= ell;
             --prev) {
          const Cell& from = z[at(prefix, kappa - 1, prev)];
          if (!from.reachable) continue;
          const AgentRange left{prefix - prev, prefix};
          if (!exact) {
            if (!BoundaryEnvyOk(inst, left, cur)) continue;
            cell.reachable = true;
            cell.back = prev;
            break;
          }
          if (!ForwardOk(inst, left, cur) ||
              table->slack(cur.begin, cur.end) > from.threshold) {
            continue;
          }
          const Rational next =
              std::min(from.threshold, table->seat(cur.begin, cur.end));
          if (!cell.reachable || next > cell.threshold) {
            cell.reachable = true;
            cell.threshold = next;
            cell.back = prev;
          }
        }
      }
    }
  }

  for (int kappa = std::min(k, n); kappa >= 1; --kappa) {
    for (int ell = n; ell >= 1; --ell) {
      if (!z[at(n, kappa, ell)].reachable) continue;
      Allocation alloc(k);
      int mu = n;
      for (int c = kappa; c >= 1; --c) {
        const int prev = z[at(mu, c, ell)].back;
        for (int a = mu - ell; a < mu; ++a) alloc[c - 1].push_back(a);
        mu -= ell;
        ell = prev;
      }
      return alloc;
    }
  }
  return std::nullopt;
}

}  // namespace fairline
