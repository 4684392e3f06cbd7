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

// Discrete-time planar trajectories and the box regions that ground atomic
// propositions.

#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ambistl/error.hpp"
#include "ambistl/text.hpp"

namespace ambistl {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// States x_0 .. x_T sampled at unit time steps.
class Trajectory {
 public:
  explicit Trajectory(std::vector<Point> states) : states_(std::move(states)) {
    if (states_.empty()) throw Error(ErrorKind::kEmptyInput, "empty trajectory");
  }

  std::size_t size() const { return states_.size(); }
  // Last valid time index T.
  std::int64_t horizon() const { return static_cast<std::int64_t>(states_.size()) - 1; }
  const Point& at(std::int64_t t) const { return states_.at(static_cast<std::size_t>(t)); }
  const std::vector<Point>& states() const { return states_; }

 private:
  std::vector<Point> states_;
};

// Axis-aligned box [xmin, xmax] x [ymin, ymax].
class Box {
 public:
  Box(double xmin, double ymin, double xmax, double ymax)
      : xmin_(xmin), ymin_(ymin), xmax_(xmax), ymax_(ymax) {
    if (!(xmin < xmax) || !(ymin < ymax)) {
      throw Error(ErrorKind::kInvalidArgument, "degenerate box (need xmin < xmax and ymin < ymax)");
    }
  }

  double xmin() const { return xmin_; }
  double ymin() const { return ymin_; }
  double xmax() const { return xmax_; }
  double ymax() const { return ymax_; }

 private:
  double xmin_, ymin_, xmax_, ymax_;
};

// Signed distance-like margin: positive strictly inside, zero on the
// boundary, negative outside.
inline double region_margin(const Box& box, const Point& p) {
  return std::min({p.x - box.xmin(), box.xmax() - p.x, p.y - box.ymin(), box.ymax() - p.y});
}

// Named regions. Names are case-insensitive so that the region file may use
// `b` for the proposition phi_B.
class RegionMap {
 public:
  void add(const std::string& name, const Box& box) {
    auto key = detail::to_upper(name);
    if (key.empty()) throw Error(ErrorKind::kInvalidArgument, "empty region name");
    if (!boxes_.emplace(key, box).second) {
      throw Error(ErrorKind::kInvalidArgument, "duplicate region '" + name + "'");
    }
  }

  const Box* find(const std::string& name) const {
    auto it = boxes_.find(detail::to_upper(name));
    return it == boxes_.end() ? nullptr : &it->second;
  }

  std::size_t size() const { return boxes_.size(); }
  const std::map<std::string, Box>& boxes() const { return boxes_; }

 private:
  std::map<std::string, Box> boxes_;
};

// Lines `name: xmin ymin xmax ymax`; blank lines and `#` comments ignored.
inline RegionMap load_regions(std::istream& in) {
  RegionMap regions;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = detail::trim(std::string_view(line).substr(0, line.find('#')));
    if (body.empty()) continue;
    auto where = "regions line " + std::to_string(lineno) + ": ";
    auto colon = body.find(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorKind::kSyntax, where + "expected 'name: xmin ymin xmax ymax'");
    }
    auto name = std::string(detail::trim(body.substr(0, colon)));
    auto fields = detail::split_ws(body.substr(colon + 1));
    if (name.empty() || fields.size() != 4) {
      throw Error(ErrorKind::kSyntax, where + "expected 'name: xmin ymin xmax ymax'");
    }
    double v[4];
    for (int i = 0; i < 4; ++i) {
      auto d = detail::parse_double(fields[i]);
      if (!d || !std::isfinite(*d)) throw Error(ErrorKind::kSyntax, where + "bad number '" + fields[i] + "'");
      v[i] = *d;
    }
    try {
      regions.add(name, Box(v[0], v[1], v[2], v[3]));
    } catch (const Error& e) {
      throw Error(ErrorKind::kSyntax, where + e.what());
    }
  }
  return regions;
}

// CSV with header `t,x,y`; t must run 0, 1, 2, ... without gaps.
inline Trajectory load_trajectory(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool header = false;
  std::vector<Point> states;
  while (std::getline(in, line)) {
    ++lineno;
    auto body = detail::trim(line);
    if (body.empty()) continue;
    auto where = "trajectory line " + std::to_string(lineno) + ": ";
    auto cols = detail::split(body, ',');
    if (!header) {
      if (cols.size() != 3 || detail::trim(cols[0]) != "t" || detail::trim(cols[1]) != "x" ||
          detail::trim(cols[2]) != "y") {
        throw Error(ErrorKind::kSyntax, where + "expected header 't,x,y'");
      }
      header = true;
      continue;
    }
    if (cols.size() != 3) throw Error(ErrorKind::kSyntax, where + "expected 3 columns");
    auto t = detail::parse_int(cols[0]);
    if (!t) throw Error(ErrorKind::kSyntax, where + "non-integer time '" + std::string(cols[0]) + "'");
    if (*t != static_cast<long long>(states.size())) {
      throw Error(ErrorKind::kSyntax, where + "time index " + std::to_string(*t) + " breaks the sequence (expected " +
                                          std::to_string(states.size()) + ")");
    }
    auto x = detail::parse_double(cols[1]);
    auto y = detail::parse_double(cols[2]);
    if (!x || !y || !std::isfinite(*x) || !std::isfinite(*y)) {
      throw Error(ErrorKind::kSyntax, where + "bad coordinate");
    }
    states.push_back({*x, *y});
  }
  if (states.empty()) throw Error(ErrorKind::kEmptyInput, "empty trajectory");
  return Trajectory(std::move(states));
}

}  // namespace ambistl
