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

#include "hamsim/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hamsim/solovay_kitaev.hpp"

namespace hamsim {

std::string to_string(GateSet g) {
  return g == GateSet::kDiscrete ? "discrete" : "continuous";
}

GateSet gateset_from_string(std::string_view s) {
  if (s == "discrete") return GateSet::kDiscrete;
  if (s == "continuous") return GateSet::kContinuous;
  throw std::invalid_argument("unknown gate set '" + std::string(s) + "'");
}

void GateIR::validate() const {
  const auto in_range = [this](Qubit q) {
    return q >= 1 && q <= static_cast<Qubit>(n);
  };
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    const std::string where = "gate " + std::to_string(i) + ": ";
    if (!in_range(g.q0)) throw std::invalid_argument(where + "qubit out of range");
    if (g.kind == GateKind::kCnot) {
      if (!in_range(g.q1)) {
        throw std::invalid_argument(where + "qubit out of range");
      }
      if (g.q0 == g.q1) {
        throw std::invalid_argument(where + "CNOT control equals target");
      }
    }
    if (g.kind == GateKind::kRz && !std::isfinite(g.angle)) {
      throw std::invalid_argument(where + "non-finite angle");
    }
  }
  if (!source_term.empty() && source_term.size() != gates.size()) {
    throw std::invalid_argument("source-term metadata size mismatch");
  }
}

namespace {

// Appends the fragment for one exponential; `rz` emits the parity rotation.
template <class RzEmitter>
void append_fragment(std::vector<Gate>& out, const PauliTerm& term,
                     double duration, RzEmitter&& rz) {
  if (term.empty()) throw std::invalid_argument("term has empty support");
  const auto& support = term.support();
  const Qubit parity = support.back().first;
  for (const auto& [q, letter] : support) {
    if (letter == PauliLetter::X) {
      out.push_back(Gate::h(q));
    } else if (letter == PauliLetter::Y) {
      for (int i = 0; i < 6; ++i) out.push_back(Gate::t(q));
      out.push_back(Gate::h(q));
    }
  }
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    out.push_back(Gate::cnot(support[i].first, parity));
  }
  rz(out, 2.0 * term.coefficient() * duration, parity);
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    out.push_back(Gate::cnot(support[i].first, parity));
  }
  for (auto it = support.rbegin(); it != support.rend(); ++it) {
    const auto& [q, letter] = *it;
    if (letter == PauliLetter::Y) {
      out.push_back(Gate::h(q));
      out.push_back(Gate::t(q));
      out.push_back(Gate::t(q));
    } else if (letter == PauliLetter::X) {
      out.push_back(Gate::h(q));
    }
  }
}

void append_word(std::vector<Gate>& out, const std::string& word, Qubit q) {
  for (char c : word) out.push_back(c == 'H' ? Gate::h(q) : Gate::t(q));
}

void require_sk(GateSet gateset, double delta, const SolovayKitaev* sk) {
  if (gateset != GateSet::kDiscrete) return;
  if (sk == nullptr) {
    throw std::invalid_argument("discrete gate set needs a decomposer");
  }
  if (!(delta > 0)) {
    throw std::invalid_argument("discrete gate set needs delta > 0");
  }
}

constexpr std::size_t kMaxGates = std::size_t{1} << 31;

}  // namespace

std::vector<Gate> pcircuit(const PauliTerm& term, double duration,
                           GateSet gateset, double delta,
                           const SolovayKitaev* sk) {
  require_sk(gateset, delta, sk);
  std::vector<Gate> out;
  append_fragment(out, term, duration,
                  [&](std::vector<Gate>& o, double angle, Qubit q) {
                    if (gateset == GateSet::kContinuous) {
                      o.push_back(Gate::rz(angle, q));
                    } else {
                      append_word(o, sk->decompose(Su2::rz(angle), delta).word,
                                  q);
                    }
                  });
  return out;
}

GateIR assemble_circuit(const HamiltonianSpec& spec, const ExponentialSeq& seq,
                        const TSParams& params, GateSet gateset, double delta,
                        const SolovayKitaev* sk) {
  require_sk(gateset, delta, sk);
  if (seq.m != spec.m()) {
    throw std::invalid_argument("sequence was built for " +
                                std::to_string(seq.m) + " terms, spec has " +
                                std::to_string(spec.m()));
  }
  if (params.r < 1) throw std::invalid_argument("r must be >= 1");

  std::map<double, std::string> words;
  std::vector<Gate> block;
  std::vector<std::uint32_t> block_source;
  for (const SeqEntry& e : seq.entries) {
    if (e.term >= spec.m()) {
      throw std::invalid_argument("sequence entry refers to term " +
                                  std::to_string(e.term + 1) +
                                  " outside the spec");
    }
    append_fragment(block, spec.terms[e.term], e.duration,
                    [&](std::vector<Gate>& o, double angle, Qubit q) {
                      if (gateset == GateSet::kContinuous) {
                        o.push_back(Gate::rz(angle, q));
                        return;
                      }
                      auto it = words.find(angle);
                      if (it == words.end()) {
                        it = words
                                 .emplace(angle, sk->decompose(Su2::rz(angle),
                                                               delta)
                                                     .word)
                                 .first;
                      }
                      append_word(o, it->second, q);
                    });
    block_source.resize(block.size(), static_cast<std::uint32_t>(e.term));
  }

  const auto reps = static_cast<std::size_t>(params.r);
  if (!block.empty() && reps > kMaxGates / block.size()) {
    throw std::length_error("circuit would exceed 2^31 gates");
  }
  GateIR ir;
  ir.n = spec.n;
  ir.chi = seq.chi;
  ir.r = params.r;
  ir.gateset = gateset;
  ir.gates.reserve(block.size() * reps);
  ir.source_term.reserve(block.size() * reps);
  for (std::size_t i = 0; i < reps; ++i) {
    ir.gates.insert(ir.gates.end(), block.begin(), block.end());
    ir.source_term.insert(ir.source_term.end(), block_source.begin(),
                          block_source.end());
  }
  return ir;
}

namespace {

void append_token(std::string& out, const Gate& g) {
  switch (g.kind) {
    case GateKind::kH:
      out += 'H';
      out += std::to_string(g.q0);
      break;
    case GateKind::kT:
      out += 'T';
      out += std::to_string(g.q0);
      break;
    case GateKind::kCnot:
      out += "CNOT";
      out += std::to_string(g.q0);
      out += ',';
      out += std::to_string(g.q1);
      break;
    case GateKind::kRz:
      out += "RZ";
      out += format_double(g.angle);
      out += ',';
      out += std::to_string(g.q0);
      break;
  }
}

Qubit parse_qubit(std::string_view s, std::string_view token) {
  Qubit q = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), q);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || q == 0) {
    throw std::invalid_argument("malformed gate token '" + std::string(token) +
                                "'");
  }
  return q;
}

Gate parse_token(std::string_view tok) {
  const auto bad = [&] {
    return std::invalid_argument("malformed gate token '" + std::string(tok) +
                                 "'");
  };
  if (tok.starts_with("CNOT")) {
    const std::string_view rest = tok.substr(4);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw bad();
    const Qubit c = parse_qubit(rest.substr(0, comma), tok);
    const Qubit t = parse_qubit(rest.substr(comma + 1), tok);
    if (c == t) {
      throw std::invalid_argument("CNOT control equals target in '" +
                                  std::string(tok) + "'");
    }
    return Gate::cnot(c, t);
  }
  if (tok.starts_with("RZ")) {
    const std::string_view rest = tok.substr(2);
    const auto comma = rest.rfind(',');
    if (comma == std::string_view::npos) throw bad();
    const auto angle = parse_double(rest.substr(0, comma));
    if (!angle) throw bad();
    return Gate::rz(*angle, parse_qubit(rest.substr(comma + 1), tok));
  }
  if (tok.starts_with("H")) return Gate::h(parse_qubit(tok.substr(1), tok));
  if (tok.starts_with("T")) return Gate::t(parse_qubit(tok.substr(1), tok));
  throw bad();
}

}  // namespace

std::string emit_string(const GateIR& ir) {
  std::string out;
  out.reserve(ir.gates.size() * 6);
  for (std::size_t i = 0; i < ir.gates.size(); ++i) {
    if (i) out += ' ';
    append_token(out, ir.gates[i]);
  }
  out += '\n';
  return out;
}

std::string emit_layered(const GateIR& ir, const Schedule& schedule) {
  std::string out;
  for (std::size_t l = 0; l < schedule.layers.size(); ++l) {
    if (l) out += ";\n";
    const auto& layer = schedule.layers[l];
    for (std::size_t i = 0; i < layer.size(); ++i) {
      if (i) out += ' ';
      append_token(out, ir.gates.at(layer[i]));
    }
  }
  out += '\n';
  return out;
}

GateIR parse_circuit(std::string_view text, int n) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  GateIR ir;
  std::size_t pos = 0;
  Qubit max_q = 0;
  const auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ';';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && !is_sep(text[pos])) ++pos;
    if (start == pos) break;
    const Gate g = parse_token(text.substr(start, pos - start));
    max_q = std::max({max_q, g.q0, g.q1});
    ir.gates.push_back(g);
  }
  if (n > 0 && max_q > static_cast<Qubit>(n)) {
    throw std::invalid_argument("qubit " + std::to_string(max_q) +
                                " exceeds n=" + std::to_string(n));
  }
  ir.n = n > 0 ? n : static_cast<int>(max_q);
  return ir;
}

Schedule schedule_layers(const GateIR& ir) {
  Schedule s;
  // next_free[q] = first layer where qubit q is idle after its last gate.
  std::vector<std::size_t> next_free(static_cast<std::size_t>(ir.n) + 1, 0);
  for (std::size_t i = 0; i < ir.gates.size(); ++i) {
    const Gate& g = ir.gates[i];
    std::size_t layer = next_free.at(g.q0);
    if (g.kind == GateKind::kCnot) layer = std::max(layer, next_free.at(g.q1));
    if (layer == s.layers.size()) s.layers.emplace_back();
    s.layers[layer].push_back(i);
    next_free[g.q0] = layer + 1;
    if (g.kind == GateKind::kCnot) next_free[g.q1] = layer + 1;
  }
  return s;
}

GateCounts gate_counts(const GateIR& ir) {
  GateCounts c;
  for (const Gate& g : ir.gates) {
    switch (g.kind) {
      case GateKind::kH:
        ++c.h;
        break;
      case GateKind::kT:
        ++c.t;
        break;
      case GateKind::kRz:
        ++c.rz;
        break;
      case GateKind::kCnot:
        ++c.cnot;
        break;
    }
  }
  return c;
}

}  // namespace hamsim
