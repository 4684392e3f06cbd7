// Copyright 2026 The ambistl Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Quantitative (robustness) semantics of STL on discrete trajectories.
//
// The evaluator works bottom-up: every subformula is turned into a signal
// holding its robustness at each time step 0..T. Windows t+[a,b] are clipped
// to [0,T]; a window that is empty after clipping makes the value undefined.
//
// A value at time t is only reported when the trajectory covers the whole
// horizon of the formula, t + extent(f) <= T. Shorter trajectories are a
// horizon error rather than a clipped guess; clipping therefore only shows
// up in the interior of the signal, at times past the evaluation point.

#pragma once

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ambistl/error.hpp"
#include "ambistl/stl.hpp"
#include "ambistl/trajectory.hpp"

namespace ambistl {

using Signal = std::vector<std::optional<double>>;

namespace detail {

struct Window {
  std::int64_t first;
  std::int64_t last;
  bool empty() const { return first > last; }
};

inline Window clip(std::int64_t t, const stl::Interval& i, std::int64_t horizon) {
  return {t + i.lo(), std::min(t + i.hi(), horizon)};
}

inline Signal robustness_signal(const stl::Formula& f, const Trajectory& x, const RegionMap& regions) {
  using stl::Op;
  const std::int64_t T = x.horizon();
  const auto n = static_cast<std::size_t>(T + 1);
  Signal out(n);

  switch (f.op()) {
    case Op::kTrue:
      std::fill(out.begin(), out.end(), std::numeric_limits<double>::infinity());
      break;
    case Op::kAtom: {
      const Box* box = regions.find(f.name());
      if (box == nullptr) throw Error(ErrorKind::kUnknownAtom, "no region for atom phi_" + f.name());
      for (std::size_t t = 0; t < n; ++t) out[t] = region_margin(*box, x.states()[t]);
      break;
    }
    case Op::kNot: {
      Signal c = robustness_signal(f.child(), x, regions);
      for (std::size_t t = 0; t < n; ++t) {
        if (c[t]) out[t] = -*c[t];
      }
      break;
    }
    case Op::kAnd:
    case Op::kOr: {
      const bool conj = f.op() == Op::kAnd;
      std::vector<Signal> cs;
      for (const auto& c : f.children()) cs.push_back(robustness_signal(c, x, regions));
      for (std::size_t t = 0; t < n; ++t) {
        std::optional<double> acc;
        bool defined = true;
        for (const auto& c : cs) {
          if (!c[t]) {
            defined = false;
            break;
          }
          acc = !acc ? *c[t] : (conj ? std::min(*acc, *c[t]) : std::max(*acc, *c[t]));
        }
        if (defined) out[t] = acc;
      }
      break;
    }
    case Op::kEventually:
    case Op::kAlways: {
      const bool ev = f.op() == Op::kEventually;
      Signal c = robustness_signal(f.child(), x, regions);
      for (std::int64_t t = 0; t <= T; ++t) {
        Window w = clip(t, f.interval(), T);
        if (w.empty()) continue;
        std::optional<double> acc;
        bool defined = true;
        for (std::int64_t k = w.first; k <= w.last; ++k) {
          const auto& v = c[static_cast<std::size_t>(k)];
          if (!v) {
            defined = false;
            break;
          }
          acc = !acc ? *v : (ev ? std::max(*acc, *v) : std::min(*acc, *v));
        }
        if (defined) out[static_cast<std::size_t>(t)] = acc;
      }
      break;
    }
    case Op::kUntil: {
      Signal lhs = robustness_signal(f.child(0), x, regions);
      Signal rhs = robustness_signal(f.child(1), x, regions);
      for (std::int64_t t = 0; t <= T; ++t) {
        Window w = clip(t, f.interval(), T);
        if (w.empty()) continue;
        // Running minimum of the left operand over [t, t1].
        double hold = std::numeric_limits<double>::infinity();
        bool defined = true;
        std::optional<double> best;
        for (std::int64_t k = t; k <= w.last && defined; ++k) {
          const auto& l = lhs[static_cast<std::size_t>(k)];
          if (!l) {
            defined = false;
            break;
          }
          hold = std::min(hold, *l);
          if (k < w.first) continue;
          const auto& r = rhs[static_cast<std::size_t>(k)];
          if (!r) {
            defined = false;
            break;
          }
          double v = std::min(*r, hold);
          best = !best ? v : std::max(*best, v);
        }
        if (defined) out[static_cast<std::size_t>(t)] = best;
      }
      break;
    }
  }
  return out;
}

inline void check_atoms(const stl::Formula& f, const RegionMap& regions) {
  for (const auto& a : stl::atoms(f)) {
    if (regions.find(a) == nullptr) throw Error(ErrorKind::kUnknownAtom, "no region for atom phi_" + a);
  }
}

}  // namespace detail

// Robustness of `f` on trajectory `x` at time `t`.
inline double robustness(const stl::Formula& f, const Trajectory& x, const RegionMap& regions,
                         std::int64_t t = 0) {
  if (t < 0 || t > x.horizon()) {
    throw Error(ErrorKind::kInvalidArgument, "evaluation time " + std::to_string(t) + " outside trajectory");
  }
  detail::check_atoms(f, regions);
  Signal s = detail::robustness_signal(f, x, regions);
  const auto& v = s[static_cast<std::size_t>(t)];
  if (!v || t + stl::extent(f) > x.horizon()) {
    throw Error(ErrorKind::kHorizonExceeded,
                "trajectory of length " + std::to_string(x.size()) + " is too short for " + stl::format(f) +
                    " (horizon " + std::to_string(stl::extent(f)) + ")");
  }
  return *v;
}

}  // namespace ambistl
