// Copyright 2026 The qnetbound Authors
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

#include "qnetbound/synthesis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qnetbound/errors.hpp"

namespace qnb {

namespace {

constexpr double kPi = std::numbers::pi;

std::array<double, 3> unit_axis(Pauli p) {
  std::array<double, 3> axis{0.0, 0.0, 0.0};
  axis[axis_index(p)] = 1.0;
  return axis;
}

Pauli third_axis(Pauli a, Pauli b) {
  for (Pauli d : kAxes)
    if (d != a && d != b) return d;
  throw std::logic_error("no third axis");
}

std::uint64_t support_after(std::uint64_t mask, const DepthStep& s) {
  const std::uint64_t bit = std::uint64_t{1} << s.vertex;
  return s.kind == StepKind::kGrow ? (mask | bit) : (mask & ~bit);
}

void require_full_local(const QubitNetwork& net) {
  if (net.control_model() != ControlModel::kFullLocal) {
    throw DomainError("schedule synthesis needs full local control");
  }
}

}  // namespace

std::optional<LocalRotation> clifford_map(std::size_t q, Pauli from, Pauli to,
                                          int sign) {
  if (from == Pauli::I || to == Pauli::I) throw DomainError("cannot map identity");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (from == to) {
    if (sign == 1) return std::nullopt;
    // A pi turn about any other axis flips sigma_from.
    const Pauli d = from == Pauli::X ? Pauli::Y : Pauli::X;
    return LocalRotation{q, unit_axis(d), kPi};
  }
  // R = exp(-i theta/2 sigma_d) with theta = +-pi/2 gives
  // R^dagger sigma_from R = -+ i sigma_from sigma_d.
  const Pauli d = third_axis(from, to);
  const auto prod = multiply(PauliString::single(1, 0, from),
                             PauliString::single(1, 0, d));
  const int want = sign == 1 ? 0 : 2;
  for (double theta : {kPi / 2, -kPi / 2}) {
    const int phase = (prod.phase() + (theta > 0 ? 3 : 1)) % 4;
    if (phase == want) return LocalRotation{q, unit_axis(d), theta};
  }
  throw std::logic_error("clifford_map: no rotation found");
}

Schedule select_two_body(const QubitNetwork& net, std::size_t i, std::size_t j,
                         Pauli alpha, Pauli beta, int sign, double k) {
  if (!(k >= 0.0)) throw DomainError("evolution angle k must be >= 0");
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  if (alpha == Pauli::I || beta == Pauli::I) {
    throw DomainError("two-body term needs non-identity labels");
  }
  const Edge& e = net.edge(i, j);
  if (i > j) std::swap(alpha, beta);
  Schedule s(net.size());
  if (k == 0.0) return s;

  const NativeTerm native = best_native_term(e);
  // The selected drift term alone evolves as exp(-i t g N).
  const int native_sign = native.g > 0 ? -1 : 1;
  const auto ru = clifford_map(e.u, native.a, alpha, sign * native_sign);
  const auto rv = clifford_map(e.v, native.b, beta, 1);

  if (ru) s.append(*ru);
  if (rv) s.append(*rv);
  s.append(TwoBodyEvolution{e.u, e.v, native.a, native.b, native_sign, k, native.g});
  if (ru) s.append(LocalRotation{ru->qubit, ru->axis, -ru->angle});
  if (rv) s.append(LocalRotation{rv->qubit, rv->axis, -rv->angle});
  return s;
}

ConjugationLadder build_ladder(const QubitNetwork& net, const PauliString& target) {
  if (target.phase() != 0) throw DomainError("ladder target must carry phase 0");
  ConjugationLadder ladder;
  ladder.depth = depth(net, target);
  const auto& steps = ladder.depth.witness;
  const std::size_t n = net.size();
  const std::size_t D = steps.size();

  std::vector<std::uint64_t> supports(D + 1);
  supports[0] = (std::uint64_t{1} << ladder.depth.start_edge.first) |
                (std::uint64_t{1} << ladder.depth.start_edge.second);
  for (std::size_t t = 0; t < D; ++t) supports[t + 1] = support_after(supports[t], steps[t]);
  if (supports[D] != target.support_mask()) {
    throw std::logic_error("depth witness does not reach the target support");
  }

  // Walk back from the target: P_{t-1} = -i P_t Q_t, where Q_t is the
  // lexicographically smallest two-body string on the step's edge that
  // anticommutes with P_t and lands on the previous support.
  ladder.strings.assign(D + 1, PauliString(n));
  ladder.conjugators.assign(D, PauliString(n));
  ladder.strings[D] = target;
  for (std::size_t t = D; t-- > 0;) {
    const auto& step = steps[t];
    const PauliString& cur = ladder.strings[t + 1];
    bool found = false;
    for (Pauli a : kAxes) {
      for (Pauli b : kAxes) {
        const auto q = PauliString::two_body(n, step.u, a, step.v, b);
        if (commutes(q, cur)) continue;
        auto prev = multiply(cur, q);
        prev.set_phase(prev.phase() + 3);
        if (prev.support_mask() != supports[t]) continue;
        ladder.conjugators[t] = q;
        ladder.strings[t] = prev;
        found = true;
        break;
      }
      if (found) break;
    }
    if (!found) throw std::logic_error("no conjugator for ladder step");
  }

  // Forward check, purely symbolic.
  if (ladder.strings[0].phase() % 2 != 0) {
    throw std::logic_error("ladder core is not Hermitian");
  }
  for (std::size_t t = 0; t < D; ++t) {
    const auto c = commutator(ladder.conjugators[t], ladder.strings[t]);
    if (!c || c->word != ladder.strings[t + 1].word()) {
      throw std::logic_error("conjugator does not advance the ladder");
    }
    auto next = multiply(ladder.strings[t], ladder.conjugators[t]);
    next.set_phase(next.phase() + 1);
    if (next != ladder.strings[t + 1]) throw std::logic_error("ladder phase mismatch");
  }
  return ladder;
}

Schedule synth_pauli_term(const QubitNetwork& net, double a, const PauliString& b) {
  require_full_local(net);
  if (b.size() != net.size()) throw DimensionError("string and network sizes differ");
  if (b.phase() != 0) throw DomainError("term word must carry phase 0");
  const std::size_t w = b.weight();
  if (w == 0) throw DomainError("identity term has no schedule");
  Schedule s(net.size());
  if (w == 1) {
    const std::size_t q = b.support().front();
    // exp(-i theta/2 sigma) = exp(i a sigma) at theta = -2a.
    s.append(LocalRotation{q, unit_axis(b.at(q)), -2.0 * a});
    return s;
  }

  const auto ladder = build_ladder(net, b);
  const std::size_t D = ladder.conjugators.size();
  const auto& core = ladder.strings.front();
  const double phi = core.phase() == 0 ? a : -a;
  const auto [u, v] = ladder.depth.start_edge;

  auto conjugator = [&](std::size_t t, int sign) {
    const auto& q = ladder.conjugators[t];
    const auto& st = ladder.depth.witness[t];
    return select_two_body(net, st.u, st.v, q.at(st.u), q.at(st.v), sign, kPi / 4);
  };
  // exp(i a P_t) = e^{-i pi/4 Q_t} exp(i a P_{t-1}) e^{+i pi/4 Q_t}.
  for (std::size_t t = D; t-- > 0;) s.append(conjugator(t, 1));
  s.append(select_two_body(net, u, v, core.at(u), core.at(v), phi >= 0 ? 1 : -1,
                           std::abs(phi)));
  for (std::size_t t = 0; t < D; ++t) s.append(conjugator(t, -1));
  return s;
}

SynthesisResult synth_generator(const QubitNetwork& net, const GeneratorSpec& spec,
                                double epsilon) {
  require_full_local(net);
  if (spec.num_qubits() != net.size()) {
    throw DimensionError("generator and network sizes differ");
  }
  const std::size_t m = std::max<std::size_t>(1, min_trotter_steps(spec, epsilon));
  Schedule step(net.size());
  for (const auto& t : spec.terms()) {
    step.append(synth_pauli_term(net, t.coeff / static_cast<double>(m), t.pauli));
  }
  SynthesisResult r{Schedule(net.size()), m};
  for (std::size_t k = 0; k < m; ++k) r.schedule.append(step);
  return r;
}

}  // namespace qnb
