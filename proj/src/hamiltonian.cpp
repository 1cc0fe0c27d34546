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

#include "hamsim/hamiltonian.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "hamsim/random.hpp"

namespace hamsim {

double HamiltonianSpec::max_abs_coefficient() const {
  double a = 0.0;
  for (const auto& t : terms) a = std::max(a, std::abs(t.coefficient()));
  return a;
}

void HamiltonianSpec::validate() const {
  if (n < 1) throw std::invalid_argument("qubit count must be positive");
  if (terms.empty()) throw std::invalid_argument("Hamiltonian has no terms");
  if (k && *k < 1) throw std::invalid_argument("locality bound must be >= 1");
  for (std::size_t j = 0; j < terms.size(); ++j) {
    const auto& t = terms[j];
    if (t.empty()) {
      throw std::invalid_argument("term " + std::to_string(j + 1) +
                                  " is the identity");
    }
    if (t.max_qubit() > static_cast<Qubit>(n)) {
      throw std::invalid_argument("term " + std::to_string(j + 1) +
                                  " acts outside qubits 1.." +
                                  std::to_string(n));
    }
    if (k && t.weight() > static_cast<std::size_t>(*k)) {
      throw std::invalid_argument("term " + std::to_string(j + 1) +
                                  " exceeds locality k=" + std::to_string(*k));
    }
    if (!std::isfinite(t.coefficient())) {
      throw std::invalid_argument("non-finite coefficient");
    }
  }
  if (group_boundaries) {
    std::size_t expect = 0;
    for (const auto& g : *group_boundaries) {
      if (g.begin != expect || g.end <= g.begin) {
        throw std::invalid_argument("group boundaries are not a partition");
      }
      expect = g.end;
    }
    if (expect != terms.size()) {
      throw std::invalid_argument("group boundaries do not cover all terms");
    }
  }
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::invalid_argument("line " + std::to_string(line) + ": " + what),
      line_(line) {}

std::string format_double(double value) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::optional<double> parse_double(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<long> parse_int(std::string_view s) {
  long v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

bool is_group_marker(std::string_view line) {
  if (line.empty() || line.front() != '#') return false;
  return trim(line.substr(1)) == "group";
}

}  // namespace

HamiltonianSpec parse_hamiltonian(std::string_view text) {
  HamiltonianSpec spec;
  bool have_n = false;
  std::vector<GroupRange> groups;
  bool grouped = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    std::string_view line = trim(raw);
    if (is_group_marker(line)) {
      if (!have_n) throw ParseError(line_no, "group marker before header");
      if (!grouped && !spec.terms.empty()) {
        groups.push_back({0, spec.terms.size()});
      }
      grouped = true;
      groups.push_back({spec.terms.size(), spec.terms.size()});
      continue;
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = trim(line.substr(0, hash));
    }
    if (line.empty()) continue;

    if (!have_n) {
      if (!line.starts_with("n=")) {
        throw ParseError(line_no, "expected header 'n=<int>'");
      }
      auto v = parse_int(trim(line.substr(2)));
      if (!v || *v < 1) throw ParseError(line_no, "invalid qubit count");
      spec.n = static_cast<int>(*v);
      have_n = true;
      continue;
    }
    if (line.starts_with("k=")) {
      if (!spec.terms.empty() || spec.k) {
        throw ParseError(line_no, "'k=' must directly follow the header");
      }
      auto v = parse_int(trim(line.substr(2)));
      if (!v || *v < 1) throw ParseError(line_no, "invalid locality bound");
      spec.k = static_cast<int>(*v);
      continue;
    }

    auto tokens = split_ws(line);
    auto coeff = parse_double(tokens.front());
    if (!coeff) {
      throw ParseError(line_no, "unparsable coefficient '" +
                                    std::string(tokens.front()) + "'");
    }
    if (tokens.size() == 1) {
      throw ParseError(line_no, "all-identity term");
    }
    std::vector<PauliTerm::Factor> support;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto tok = tokens[i];
      if (tok.size() < 2 || (tok[0] != 'X' && tok[0] != 'Y' && tok[0] != 'Z')) {
        throw ParseError(line_no, "bad factor '" + std::string(tok) + "'");
      }
      auto q = parse_int(tok.substr(1));
      if (!q || *q < 1 || *q > spec.n) {
        throw ParseError(line_no, "qubit index out of range in '" +
                                      std::string(tok) + "'");
      }
      support.emplace_back(static_cast<Qubit>(*q), letter_from_char(tok[0]));
    }
    try {
      spec.terms.emplace_back(*coeff, std::move(support));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (spec.k && spec.terms.back().weight() > static_cast<std::size_t>(*spec.k)) {
      throw ParseError(line_no, "term exceeds declared locality");
    }
    if (grouped) groups.back().end = spec.terms.size();
  }

  if (!have_n) throw ParseError(line_no, "missing header 'n=<int>'");
  if (spec.terms.empty()) throw ParseError(line_no, "no terms");
  if (grouped) {
    std::erase_if(groups, [](const GroupRange& g) { return g.size() == 0; });
    spec.group_boundaries = std::move(groups);
  }
  spec.validate();
  return spec;
}

HamiltonianSpec parse_hamiltonian(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_hamiltonian(ss.str());
}

HamiltonianSpec load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_hamiltonian(in);
}

std::string serialize_hamiltonian(const HamiltonianSpec& spec) {
  std::string out = "n=" + std::to_string(spec.n) + "\n";
  if (spec.k) out += "k=" + std::to_string(*spec.k) + "\n";
  std::size_t next_group = 0;
  for (std::size_t j = 0; j < spec.terms.size(); ++j) {
    if (spec.group_boundaries && next_group < spec.group_boundaries->size() &&
        (*spec.group_boundaries)[next_group].begin == j) {
      out += "# group\n";
      ++next_group;
    }
    const auto& t = spec.terms[j];
    out += format_double(t.coefficient());
    out += ' ';
    out += t.letters_string();
    out += '\n';
  }
  return out;
}

HamiltonianSpec make_honeycomb(int rows, int cols, double jx, double jy,
                               double jz, bool allow_zero) {
  if (rows < 1 || cols < 1) {
    throw std::invalid_argument("honeycomb dimensions must be positive");
  }
  HamiltonianSpec spec;
  spec.n = 2 * rows * cols;
  spec.k = 2;
  auto site_a = [&](int i, int j) {
    return static_cast<Qubit>(2 * (i * cols + j) + 1);
  };
  auto site_b = [&](int i, int j) {
    return static_cast<Qubit>(2 * (i * cols + j) + 2);
  };
  auto link = [&](double coupling, PauliLetter letter, Qubit a, Qubit b) {
    if (coupling == 0.0 && !allow_zero) return;
    spec.terms.emplace_back(-coupling,
                            std::vector<PauliTerm::Factor>{{a, letter},
                                                           {b, letter}});
  };
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const Qubit a = site_a(i, j);
      link(jx, PauliLetter::X, a, site_b(i, (j + cols - 1) % cols));
      link(jy, PauliLetter::Y, a, site_b((i + rows - 1) % rows, j));
      link(jz, PauliLetter::Z, a, site_b(i, j));
    }
  }
  if (spec.terms.empty()) throw std::invalid_argument("all couplings are zero");
  return spec;
}

HamiltonianSpec make_pairing(int n, const std::vector<double>& gamma,
                             const Eigen::MatrixXd& v_plus,
                             const Eigen::MatrixXd& v_minus, bool allow_zero) {
  if (n < 1) throw std::invalid_argument("pairing model needs n >= 1");
  if (gamma.size() != static_cast<std::size_t>(n) || v_plus.rows() != n ||
      v_plus.cols() != n || v_minus.rows() != n || v_minus.cols() != n) {
    throw std::invalid_argument("pairing model dimension mismatch");
  }
  HamiltonianSpec spec;
  spec.n = n;
  spec.k = n >= 2 ? 2 : 1;
  for (int p = 0; p < n; ++p) {
    if (gamma[p] == 0.0 && !allow_zero) continue;
    spec.terms.emplace_back(
        0.5 * gamma[p],
        std::vector<PauliTerm::Factor>{{static_cast<Qubit>(p + 1),
                                        PauliLetter::Z}});
  }
  for (int p = 0; p < n; ++p) {
    for (int l = p + 1; l < n; ++l) {
      const auto qp = static_cast<Qubit>(p + 1);
      const auto ql = static_cast<Qubit>(l + 1);
      for (int sign : {+1, -1}) {
        const double v = sign > 0 ? v_plus(p, l) : v_minus(p, l);
        if (v == 0.0 && !allow_zero) continue;
        spec.terms.emplace_back(
            v, std::vector<PauliTerm::Factor>{{qp, PauliLetter::X},
                                              {ql, PauliLetter::X}});
        spec.terms.emplace_back(
            sign * v, std::vector<PauliTerm::Factor>{{qp, PauliLetter::Y},
                                                     {ql, PauliLetter::Y}});
      }
    }
  }
  if (spec.terms.empty()) throw std::invalid_argument("all couplings are zero");
  return spec;
}

HamiltonianSpec sample_random_twobody(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("two-body ensemble needs n >= 2");
  Rng rng(seed);
  HamiltonianSpec spec;
  spec.n = n;
  spec.k = 2;
  constexpr PauliLetter kLetters[] = {PauliLetter::X, PauliLetter::Y,
                                      PauliLetter::Z};
  spec.terms.reserve(9 * n * (n - 1) / 2);
  for (int p = 1; p <= n; ++p) {
    for (int l = p + 1; l <= n; ++l) {
      for (PauliLetter v : kLetters) {
        for (PauliLetter w : kLetters) {
          spec.terms.emplace_back(
              rng.normal(),
              std::vector<PauliTerm::Factor>{{static_cast<Qubit>(p), v},
                                             {static_cast<Qubit>(l), w}});
        }
      }
    }
  }
  return spec;
}

}  // namespace hamsim
