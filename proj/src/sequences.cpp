// Copyright 2026 The nmrqc Authors
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

#include "nmrqc/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "nmrqc/error.hpp"
#include "nmrqc/hamiltonians.hpp"

namespace nmrqc {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_two_spins(int n, const char* what) {
    if (n != 2) {
        throw WrongArity(std::string(what) + " is defined for two spins, got " + std::to_string(n));
    }
}

void require_two_bit_label(std::string_view x0) {
    if (x0.size() != 2) {
        throw InvalidArgument("expected a two-bit label, got '" + std::string(x0) + "'");
    }
    basis_index(x0);
}

// Wraps into [lo, lo + period).
double wrap(double value, double period, double lo = 0.0) {
    double r = std::fmod(value - lo, period);
    if (r < 0.0) {
        r += period;
    }
    return r + lo;
}

void expand_into(const std::vector<Gate>& gates, int n_spins, std::vector<Gate>& out) {
    for (const auto& g : gates) {
        std::visit(Overloaded{
                       [&](const Rotation&) { out.push_back(g); },
                       [&](const CoupledEvolution&) { out.push_back(g); },
                       [&](const Oracle& o) {
                           require_two_spins(n_spins, "oracle expansion");
                           expand_into(phase_flip_primitives(o.x0), n_spins, out);
                       },
                       [&](const Composite& c) { expand_into(c.gates, n_spins, out); },
                   },
                   g.op);
    }
}

}  // namespace

DensityMatrix thermal_state(const SpinSystem& sys, const std::vector<double>& polarizations) {
    if (static_cast<int>(polarizations.size()) != sys.n_spins()) {
        throw DimensionMismatch("one polarization per spin is required");
    }
    return thermal_equilibrium(polarizations, StateKind::full);
}

DensityMatrix thermal_state(const SpinSystem& sys) {
    std::vector<double> p;
    for (const auto& s : sys.spins()) {
        p.push_back(s.polarization);
    }
    return thermal_state(sys, p);
}

std::vector<Gate> phase_flip_primitives(std::string_view bits) {
    require_two_bit_label(bits);
    // |x><x| = (1/2 + sA IzA)(1/2 + sB IzB) with s = +1 for bit 0, -1 for
    // bit 1, so exp(i pi |x><x|) ~ exp(i pi sA sB IzA IzB) times z rotations
    // by -s pi/2. A -pi coupled evolution equals +pi up to z rotations by pi.
    const double s_a = bits[0] == '0' ? 1.0 : -1.0;
    const double s_b = bits[1] == '0' ? 1.0 : -1.0;
    double alpha = -s_a * kPi / 2.0;
    double beta = -s_b * kPi / 2.0;
    if (s_a * s_b > 0.0) {
        alpha += kPi;
        beta += kPi;
    }
    return {coupled_evolution(0, 1, kPi), rotation(0, Axis::z, wrap(alpha, 2 * kPi, -kPi)),
            rotation(1, Axis::z, wrap(beta, 2 * kPi, -kPi))};
}

Gate cnot(int control, int target) {
    if (control == target || control < 0 || target < 0 || control > 1 || target > 1) {
        throw InvalidArgument("cnot needs distinct spins 0 and 1");
    }
    std::vector<Gate> gates{rotation(target, Axis::y, -kPi / 2.0)};
    for (auto& g : phase_flip_primitives("11")) {
        gates.push_back(std::move(g));
    }
    gates.push_back(rotation(target, Axis::y, kPi / 2.0));
    return composite("cnot(" + std::to_string(control) + "," + std::to_string(target) + ")", std::move(gates));
}

std::array<GateSequence, 3> temporal_labeling_preps(int n_spins) {
    require_two_spins(n_spins, "temporal labeling");
    // (a, b) -> (a, a^b) -> (b, a^b)
    const Gate p = composite("cycle", {cnot(0, 1), cnot(1, 0)});
    return {GateSequence{2, {}}, GateSequence{2, {p}}, GateSequence{2, {p, p}}};
}

DensityMatrix temporal_average(const DensityMatrix& rho) {
    require_two_spins(rho.n_spins(), "temporal labeling");
    Matrix sum = Matrix::Zero(rho.dim(), rho.dim());
    for (const auto& prep : temporal_labeling_preps(2)) {
        sum += evolve(rho, unitary(prep)).matrix();
    }
    return DensityMatrix(sum / 3.0, rho.kind());
}

Operator oracle_gate(std::string_view x0) {
    require_two_bit_label(x0);
    Matrix m = Matrix::Identity(4, 4);
    m(basis_index(x0), basis_index(x0)) = -1.0;
    return Operator(std::move(m), OperatorRole::unitary);
}

GateSequence grover_circuit(std::string_view x0) {
    require_two_bit_label(x0);
    auto superpose = [](double angle) {
        return std::vector<Gate>{rotation(0, Axis::y, angle), rotation(1, Axis::y, angle)};
    };
    std::vector<Gate> diffusion = superpose(-kPi / 2.0);
    diffusion.push_back(composite("conditional_phase(00)", phase_flip_primitives("00")));
    for (auto& g : superpose(kPi / 2.0)) {
        diffusion.push_back(std::move(g));
    }
    return GateSequence{2,
                        {composite("superposition", superpose(kPi / 2.0)), oracle(std::string(x0)),
                         composite("diffusion", std::move(diffusion))}};
}

Operator gate_unitary(const Gate& gate, int n_spins) {
    return std::visit(
        Overloaded{
            [&](const Rotation& r) { return pulse(r.spin, r.axis, r.angle_rad, n_spins); },
            [&](const CoupledEvolution& c) {
                const int dim = 1 << n_spins;
                Matrix u = Matrix::Zero(dim, dim);
                for (int k = 0; k < dim; ++k) {
                    const double mi = spin_bit(k, c.i, n_spins) == 0 ? 0.5 : -0.5;
                    const double mj = spin_bit(k, c.j, n_spins) == 0 ? 0.5 : -0.5;
                    u(k, k) = std::polar(1.0, -c.phase_rad * mi * mj);
                }
                return Operator(std::move(u), OperatorRole::unitary);
            },
            [&](const Oracle& o) {
                require_two_spins(n_spins, "oracle");
                return oracle_gate(o.x0);
            },
            [&](const Composite& c) {
                Operator u = Operator::identity(1 << n_spins);
                for (const auto& g : c.gates) {
                    u = gate_unitary(g, n_spins) * u;
                }
                return u;
            },
        },
        gate.op);
}

Operator unitary(const GateSequence& seq) {
    seq.validate();
    Operator u = Operator::identity(1 << seq.n_spins);
    for (const auto& g : seq.gates) {
        u = gate_unitary(g, seq.n_spins) * u;
    }
    return u;
}

GateSequence expand(const GateSequence& seq) {
    seq.validate();
    GateSequence out{seq.n_spins, {}};
    expand_into(seq.gates, seq.n_spins, out.gates);
    return out;
}

PulseSequence compile(const GateSequence& gates, const SpinSystem& sys) {
    if (gates.n_spins != sys.n_spins()) {
        throw DimensionMismatch("gate sequence and spin system have different spin counts");
    }
    const GateSequence flat = expand(gates);
    const int n = sys.n_spins();
    const PairMask first_order = first_order_ok(sys);

    PulseSequence out;
    out.n_spins = n;
    out.frame_rad.assign(static_cast<size_t>(n), 0.0);
    auto& frame = out.frame_rad;

    for (const auto& g : flat.gates) {
        if (const auto* r = std::get_if<Rotation>(&g.op)) {
            if (r->axis == Axis::z) {
                frame[static_cast<size_t>(r->spin)] += r->angle_rad;
                continue;
            }
            if (r->angle_rad == 0.0) {
                continue;
            }
            double phase = r->axis == Axis::x ? 0.0 : kPi / 2.0;
            double angle = r->angle_rad;
            if (angle < 0.0) {
                angle = -angle;
                phase += kPi;
            }
            // Z R_phi Z^dagger = R_(phi + zeta): a rotation requested in the
            // tracked frame is played at phase phi - zeta.
            phase = wrap(phase - frame[static_cast<size_t>(r->spin)], 2 * kPi);
            out.events.emplace_back(PulseEvent{r->spin, phase, angle});
            continue;
        }
        const auto& c = std::get<CoupledEvolution>(g.op);
        const double j_eff = effective_coupling(sys, SpinPair{c.i, c.j});
        if (j_eff == 0.0) {
            throw InvalidArgument("pair (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                                  ") has no effective coupling");
        }
        if (!first_order(c.i, c.j)) {
            throw FirstOrderViolation("pair (" + std::to_string(c.i) + ", " + std::to_string(c.j) +
                                      ") is not weakly coupled");
        }
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                const bool same = (a == std::min(c.i, c.j) && b == std::max(c.i, c.j));
                if (!same && effective_coupling(sys, SpinPair{a, b}) != 0.0) {
                    throw InvalidArgument("coupled evolution on a system with other active couplings needs refocusing");
                }
            }
        }
        // exp(-i 4pi IzIz) = -1, so phases are only defined modulo 4pi and a
        // negative coupling runs the complementary phase.
        const double phase = wrap(j_eff > 0.0 ? c.phase_rad : -c.phase_rad, 4 * kPi);
        const double tau = phase / (2 * kPi * std::abs(j_eff));
        if (tau == 0.0) {
            continue;
        }
        out.events.emplace_back(DelayEvent{tau});
        // Zeeman precession during the delay is removed by moving the frame.
        for (int s = 0; s < n; ++s) {
            frame[static_cast<size_t>(s)] -= 2 * kPi * sys.spin(s).nu_hz * tau;
        }
    }
    for (auto& f : frame) {
        f = wrap(f, 4 * kPi, -2 * kPi);
    }
    return out;
}

DensityMatrix run(const DensityMatrix& rho0, const PulseSequence& seq, const SpinSystem& sys,
                  const RelaxationParams& relax, const RunObserver& observer) {
    seq.validate();
    if (seq.n_spins != sys.n_spins() || rho0.n_spins() != sys.n_spins()) {
        throw DimensionMismatch("state, sequence and spin system have different spin counts");
    }
    const int n = sys.n_spins();
    std::optional<Operator> h;
    DensityMatrix rho = rho0;
    for (const auto& e : seq.events) {
        DensityMatrix next = rho;
        if (const auto* p = std::get_if<PulseEvent>(&e)) {
            next = evolve(rho, phased_pulse(p->spin, p->phase_rad, p->angle_rad, n));
        } else if (const auto* d = std::get_if<DelayEvent>(&e)) {
            if (!h) {
                h = h_weak(sys);
            }
            next = delay(rho, *h, d->duration_s, relax);
        }
        if (observer) {
            observer(e, rho, next);
        }
        rho = std::move(next);
    }
    for (int s = 0; s < static_cast<int>(seq.frame_rad.size()); ++s) {
        const double f = seq.frame_rad[static_cast<size_t>(s)];
        if (f != 0.0) {
            rho = evolve(rho, z_rotation(s, f, n));
        }
    }
    return rho;
}

double classical_query_expectation(int n_elements) {
    if (n_elements < 1) {
        throw InvalidArgument("need at least one element");
    }
    // x0 is equally likely to sit at any position k of the query order; it
    // costs k queries, except the last position, which is inferred (cost
    // n - 1) once at least two misses have been observed.
    double total = 0.0;
    for (int k = 1; k <= n_elements; ++k) {
        const bool inferred = k == n_elements && n_elements >= 3;
        total += inferred ? k - 1 : k;
    }
    return total / n_elements;
}

GroverResult run_grover(const SpinSystem& sys, std::string_view x0, const RelaxationParams& relax,
                        const RunObserver& observer) {
    require_two_spins(sys.n_spins(), "Grover search");
    const GateSequence grover = grover_circuit(x0);
    const DensityMatrix thermal = thermal_state(sys);
    Matrix sum = Matrix::Zero(thermal.dim(), thermal.dim());
    for (const auto& prep : temporal_labeling_preps(2)) {
        GateSequence seq = prep;
        seq.append(grover);
        sum += run(thermal, compile(seq, sys), sys, relax, observer).matrix();
    }
    DensityMatrix state(sum / 3.0, StateKind::full);
    const double f = effective_pure_fidelity(state, x0);
    return GroverResult{std::string(x0), std::move(state), f, compile(grover, sys).duration_s()};
}

}  // namespace nmrqc
