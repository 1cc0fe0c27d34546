// Copyright 2026 The hamsim Authors
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

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace hamsim {

/// Element of SU(2) stored as a unit quaternion,
/// U = w I - i (x X + y Y + z Z).
struct Su2 {
  double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

  static Su2 identity() { return {}; }
  static Su2 hadamard();
  /// diag(1, e^{i pi/4}) up to global phase.
  static Su2 t_gate();
  /// exp(-i theta Z / 2).
  static Su2 rz(double theta);
  /// exp(-i angle/2 (ax X + ay Y + az Z)) for a unit axis.
  static Su2 rotation(double angle, double ax, double ay, double az);
  /// Any 2x2 unitary; the global phase is divided out.
  static Su2 from_matrix(const Eigen::Matrix2cd& u);

  Eigen::Matrix2cd matrix() const;
  Su2 adjoint() const { return {w, -x, -y, -z}; }
  std::array<double, 4> as_array() const { return {w, x, y, z}; }

  friend Su2 operator*(const Su2& a, const Su2& b);
};

/// Phase-invariant distance min_phi ||U - e^{i phi} V||. For SU(2) this is
/// min(|q_U - q_V|, |q_U + q_V|) on the quaternions.
double su2_distance(const Su2& a, const Su2& b);

/// Gate words are strings over {'H', 'T'} in time order (first character
/// applied first).
Su2 word_unitary(std::string_view word);
/// Cancels HH and reduces runs of T modulo 8.
std::string simplify_word(std::string_view word);
/// Word for the adjoint.
std::string invert_word(std::string_view word);

/// All distinct SU(2) elements (up to sign) reachable by {H,T} words of
/// length <= max_length, each with its shortest word.
class BaseNet {
 public:
  static constexpr int kDefaultMaxLength = 12;

  explicit BaseNet(int max_length = kDefaultMaxLength);

  /// Text cache: "hamsim-sk-net 1", "L0 <len>", then one word per line
  /// ("I" for the empty word).
  void save(const std::string& path) const;
  static BaseNet load(const std::string& path);
  /// Loads `path` when it holds a net of the requested length, otherwise
  /// builds one and writes it there.
  static BaseNet load_or_build(const std::string& path, int max_length);

  int max_length() const { return max_length_; }
  std::size_t size() const { return words_.size(); }
  const std::string& word(std::size_t i) const { return words_[i]; }
  const Su2& point(std::size_t i) const { return points_[i]; }
  std::size_t nearest(const Su2& target) const;

 private:
  BaseNet(int max_length, std::vector<std::string> words);

  int max_length_;
  std::vector<std::string> words_;
  std::vector<Su2> points_;
  std::vector<std::array<double, 4>> coords_;
};

/// Raised when the deepest permitted recursion still misses the tolerance.
class SkToleranceError : public std::runtime_error {
 public:
  SkToleranceError(double requested, double achieved, int depth);
  double requested() const { return requested_; }
  double achieved() const { return achieved_; }

 private:
  double requested_;
  double achieved_;
};

struct SkResult {
  std::string word;
  double distance = 0.0;
  int depth = 0;
};

class SolovayKitaev {
 public:
  static constexpr int kDefaultMaxDepth = 6;

  explicit SolovayKitaev(std::shared_ptr<const BaseNet> net,
                         int max_depth = kDefaultMaxDepth);

  /// Approximation at a fixed recursion depth.
  SkResult approximate(const Su2& target, int depth) const;
  /// Shallowest depth whose word lies within `delta` of `target`.
  SkResult decompose(const Su2& target, double delta) const;

  const BaseNet& net() const { return *net_; }
  int max_depth() const { return max_depth_; }

 private:
  struct Approx {
    std::string word;
    Su2 unitary;
  };
  Approx recurse(const Su2& target, int depth) const;
  Approx refine(const Su2& target, const Approx& previous, int depth) const;

  std::shared_ptr<const BaseNet> net_;
  int max_depth_;
};

/// Balanced group commutator: unitaries V, W with V W V^dag W^dag = delta.
std::pair<Su2, Su2> group_commutator(const Su2& delta);

/// Per-rotation tolerance eps / (4 m 5^(chi-1) r).
double sk_tolerance(double epsilon, std::size_t m, int chi, std::int64_t r);

}  // namespace hamsim
