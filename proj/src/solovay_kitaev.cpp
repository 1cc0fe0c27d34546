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

#include "hamsim/solovay_kitaev.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <unordered_set>

#include <Eigen/LU>

#include "hamsim/kernels.hpp"

namespace hamsim {

Su2 Su2::hadamard() {
  const double h = 1.0 / std::numbers::sqrt2;
  return {0.0, h, 0.0, h};
}

Su2 Su2::t_gate() {
  return {std::cos(std::numbers::pi / 8), 0.0, 0.0,
          std::sin(std::numbers::pi / 8)};
}

Su2 Su2::rz(double theta) {
  return {std::cos(theta / 2), 0.0, 0.0, std::sin(theta / 2)};
}

Su2 Su2::rotation(double angle, double ax, double ay, double az) {
  const double s = std::sin(angle / 2);
  return {std::cos(angle / 2), s * ax, s * ay, s * az};
}

Su2 Su2::from_matrix(const Eigen::Matrix2cd& u) {
  const std::complex<double> det = u.determinant();
  if (std::abs(det) < 1e-12) {
    throw std::invalid_argument("matrix is not unitary");
  }
  const Eigen::Matrix2cd v = u / std::sqrt(det);
  Su2 q{(v(0, 0) + v(1, 1)).real() / 2, -(v(0, 1) + v(1, 0)).imag() / 2,
        (v(1, 0) - v(0, 1)).real() / 2, (v(1, 1) - v(0, 0)).imag() / 2};
  const double norm = std::sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z);
  return {q.w / norm, q.x / norm, q.y / norm, q.z / norm};
}

Eigen::Matrix2cd Su2::matrix() const {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  m << C(w, -z), C(-y, -x), C(y, -x), C(w, z);
  return m;
}

Su2 operator*(const Su2& a, const Su2& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + b.w * a.x + a.y * b.z - a.z * b.y,
          a.w * b.y + b.w * a.y + a.z * b.x - a.x * b.z,
          a.w * b.z + b.w * a.z + a.x * b.y - a.y * b.x};
}

double su2_distance(const Su2& a, const Su2& b) {
  const auto sq = [](double v) { return v * v; };
  const double minus =
      sq(a.w - b.w) + sq(a.x - b.x) + sq(a.y - b.y) + sq(a.z - b.z);
  const double plus =
      sq(a.w + b.w) + sq(a.x + b.x) + sq(a.y + b.y) + sq(a.z + b.z);
  return std::sqrt(std::min(minus, plus));
}

Su2 word_unitary(std::string_view word) {
  static const Su2 kH = Su2::hadamard();
  static const Su2 kT = Su2::t_gate();
  Su2 u;
  for (char c : word) {
    if (c == 'H') {
      u = kH * u;
    } else if (c == 'T') {
      u = kT * u;
    } else {
      throw std::invalid_argument(std::string("invalid gate letter '") + c +
                                  "' in word");
    }
  }
  return u;
}

std::string simplify_word(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word) {
    if (c == 'H') {
      if (!out.empty() && out.back() == 'H') {
        out.pop_back();
      } else {
        out.push_back('H');
      }
    } else if (c == 'T') {
      // T^8 = I exactly.
      std::size_t run = 0;
      while (run < out.size() && out[out.size() - 1 - run] == 'T') ++run;
      if (run == 7) {
        out.resize(out.size() - 7);
      } else {
        out.push_back('T');
      }
    } else {
      throw std::invalid_argument(std::string("invalid gate letter '") + c +
                                  "' in word");
    }
  }
  return out;
}

std::string invert_word(std::string_view word) {
  std::string reversed;
  reversed.reserve(word.size() * 7);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == 'T') {
      reversed.append(7, 'T');
    } else {
      reversed.push_back(*it);
    }
  }
  return simplify_word(reversed);
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::array<std::int64_t, 4>& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto v : k) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// Same key for q and -q.
std::array<std::int64_t, 4> canonical_key(const Su2& q) {
  std::array<double, 4> c = q.as_array();
  for (double v : c) {
    if (std::abs(v) > 1e-9) {
      if (v < 0) {
        for (double& u : c) u = -u;
      }
      break;
    }
  }
  std::array<std::int64_t, 4> key{};
  for (int i = 0; i < 4; ++i) key[i] = std::llround(c[i] * 1e8);
  return key;
}

constexpr const char* kNetMagic = "hamsim-sk-net 1";

}  // namespace

BaseNet::BaseNet(int max_length) : max_length_(max_length) {
  if (max_length < 0) throw std::invalid_argument("L0 must be >= 0");
  std::unordered_set<std::array<std::int64_t, 4>, KeyHash> seen;
  std::vector<std::string> frontier{""};
  seen.insert(canonical_key(Su2::identity()));
  words_.push_back("");
  const Su2 gates[2] = {Su2::hadamard(), Su2::t_gate()};
  const char letters[2] = {'H', 'T'};
  std::vector<Su2> frontier_points{Su2::identity()};
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    std::vector<Su2> next_points;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      for (int g = 0; g < 2; ++g) {
        const Su2 p = gates[g] * frontier_points[i];
        if (!seen.insert(canonical_key(p)).second) continue;
        next.push_back(frontier[i] + letters[g]);
        next_points.push_back(p);
      }
    }
    words_.insert(words_.end(), next.begin(), next.end());
    frontier = std::move(next);
    frontier_points = std::move(next_points);
  }
  points_.reserve(words_.size());
  coords_.reserve(words_.size());
  for (const auto& w : words_) {
    points_.push_back(word_unitary(w));
    coords_.push_back(points_.back().as_array());
  }
}

BaseNet::BaseNet(int max_length, std::vector<std::string> words)
    : max_length_(max_length), words_(std::move(words)) {
  points_.reserve(words_.size());
  coords_.reserve(words_.size());
  for (const auto& w : words_) {
    points_.push_back(word_unitary(w));
    coords_.push_back(points_.back().as_array());
  }
}

std::size_t BaseNet::nearest(const Su2& target) const {
  return kernels::omp::nearest_point(coords_, target.as_array());
}

void BaseNet::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write net cache '" + path + "'");
  out << kNetMagic << "\nL0 " << max_length_ << "\n";
  for (const auto& w : words_) out << (w.empty() ? "I" : w) << "\n";
  if (!out) throw std::runtime_error("failed writing net cache '" + path + "'");
}

BaseNet BaseNet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read net cache '" + path + "'");
  std::string line;
  if (!std::getline(in, line) || line != kNetMagic) {
    throw std::runtime_error("'" + path + "' is not a net cache");
  }
  int length = -1;
  if (!std::getline(in, line) || std::sscanf(line.c_str(), "L0 %d", &length) != 1 ||
      length < 0) {
    throw std::runtime_error("net cache '" + path + "' has a bad L0 line");
  }
  std::vector<std::string> words;
  while (std::getline(in, line)) {
    if (line == "I") {
      words.emplace_back();
      continue;
    }
    if (line.empty() || line.size() > static_cast<std::size_t>(length) ||
        line.find_first_not_of("HT") != std::string::npos) {
      throw std::runtime_error("net cache '" + path + "' has a bad word '" +
                               line + "'");
    }
    words.push_back(line);
  }
  if (words.empty()) {
    throw std::runtime_error("net cache '" + path + "' is empty");
  }
  return BaseNet(length, std::move(words));
}

BaseNet BaseNet::load_or_build(const std::string& path, int max_length) {
  try {
    BaseNet net = load(path);
    if (net.max_length() == max_length) return net;
  } catch (const std::runtime_error&) {
  }
  BaseNet net(max_length);
  net.save(path);
  return net;
}

SkToleranceError::SkToleranceError(double requested, double achieved,
                                   int depth)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "Solovay-Kitaev tolerance " << requested
           << " not reached; best distance " << achieved << " at depth "
           << depth;
        return os.str();
      }()),
      requested_(requested),
      achieved_(achieved) {}

namespace {

// Rotation taking unit vector a onto unit vector b.
Su2 align(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const std::array<double, 3> cross{a[1] * b[2] - a[2] * b[1],
                                    a[2] * b[0] - a[0] * b[2],
                                    a[0] * b[1] - a[1] * b[0]};
  const double dot = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  const double cn = std::hypot(cross[0], cross[1], cross[2]);
  if (cn < 1e-15) {
    if (dot > 0) return Su2::identity();
    // Antiparallel: half turn about any perpendicular axis.
    std::array<double, 3> p = std::abs(a[0]) < 0.9
                                  ? std::array<double, 3>{0, -a[2], a[1]}
                                  : std::array<double, 3>{a[2], 0, -a[0]};
    const double pn = std::hypot(p[0], p[1], p[2]);
    return Su2::rotation(std::numbers::pi, p[0] / pn, p[1] / pn, p[2] / pn);
  }
  const double angle = std::atan2(cn, dot);
  return Su2::rotation(angle, cross[0] / cn, cross[1] / cn, cross[2] / cn);
}

}  // namespace

std::pair<Su2, Su2> group_commutator(const Su2& delta) {
  Su2 d = delta;
  if (d.w < 0) d = {-d.w, -d.x, -d.y, -d.z};
  const double vn = std::hypot(d.x, d.y, d.z);
  if (vn < 1e-15) return {Su2::identity(), Su2::identity()};
  // sin(theta/2) of the target rotation.
  const double s = std::min(1.0, vn);
  const double u = std::sqrt((1.0 - std::sqrt(std::max(0.0, 1.0 - s * s))) / 2);
  const double phi = 2.0 * std::asin(std::sqrt(u));
  const Su2 v = Su2::rotation(phi, 1, 0, 0);
  const Su2 w = Su2::rotation(phi, 0, 1, 0);
  const Su2 c = v * w * v.adjoint() * w.adjoint();
  const double cn = std::hypot(c.x, c.y, c.z);
  const Su2 s_rot = align({c.x / cn, c.y / cn, c.z / cn},
                          {d.x / vn, d.y / vn, d.z / vn});
  return {s_rot * v * s_rot.adjoint(), s_rot * w * s_rot.adjoint()};
}

SolovayKitaev::SolovayKitaev(std::shared_ptr<const BaseNet> net, int max_depth)
    : net_(std::move(net)), max_depth_(max_depth) {
  if (!net_) throw std::invalid_argument("null base net");
  if (max_depth < 0) throw std::invalid_argument("max depth must be >= 0");
}

SolovayKitaev::Approx SolovayKitaev::refine(const Su2& target,
                                            const Approx& previous,
                                            int depth) const {
  const Su2 delta = target * previous.unitary.adjoint();
  const auto [v, w] = group_commutator(delta);
  const Approx av = recurse(v, depth - 1);
  const Approx aw = recurse(w, depth - 1);
  std::string word = previous.word;
  word += invert_word(aw.word);
  word += invert_word(av.word);
  word += aw.word;
  word += av.word;
  Approx out;
  out.word = simplify_word(word);
  out.unitary = av.unitary * aw.unitary * av.unitary.adjoint() *
                aw.unitary.adjoint() * previous.unitary;
  return out;
}

SolovayKitaev::Approx SolovayKitaev::recurse(const Su2& target,
                                             int depth) const {
  if (depth == 0) {
    const std::size_t i = net_->nearest(target);
    return {net_->word(i), net_->point(i)};
  }
  return refine(target, recurse(target, depth - 1), depth);
}

SkResult SolovayKitaev::approximate(const Su2& target, int depth) const {
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  Approx a = recurse(target, depth);
  return {a.word, su2_distance(word_unitary(a.word), target), depth};
}

SkResult SolovayKitaev::decompose(const Su2& target, double delta) const {
  if (!(delta > 0)) throw std::invalid_argument("delta must be positive");
  Approx current = recurse(target, 0);
  SkResult best{current.word, su2_distance(word_unitary(current.word), target),
                0};
  if (best.distance <= delta) return best;
  for (int depth = 1; depth <= max_depth_; ++depth) {
    current = refine(target, current, depth);
    const double d = su2_distance(word_unitary(current.word), target);
    if (d < best.distance) best = {current.word, d, depth};
    if (d <= delta) return {current.word, d, depth};
  }
  throw SkToleranceError(delta, best.distance, best.depth);
}

double sk_tolerance(double epsilon, std::size_t m, int chi, std::int64_t r) {
  if (!(epsilon > 0) || m == 0 || chi < 1 || r < 1) {
    throw std::invalid_argument("sk_tolerance needs positive arguments");
  }
  return epsilon / (4.0 * static_cast<double>(m) * std::pow(5.0, chi - 1) *
                    static_cast<double>(r));
}

}  // namespace hamsim
