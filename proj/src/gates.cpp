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

#include "nmrqc/gates.hpp"

#include <cmath>
#include <numbers>

#include "nmrqc/error.hpp"

namespace nmrqc {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_spin(int spin, int n_spins) {
    if (spin < 0 || spin >= n_spins) {
        throw InvalidArgument("gate references spin " + std::to_string(spin) + " in a " +
                              std::to_string(n_spins) + "-spin sequence");
    }
}

void validate_gates(const std::vector<Gate>& gates, int n_spins) {
    for (const auto& g : gates) {
        std::visit(Overloaded{
                       [&](const Rotation& r) { check_spin(r.spin, n_spins); },
                       [&](const CoupledEvolution& c) {
                           check_spin(c.i, n_spins);
                           check_spin(c.j, n_spins);
                           if (c.i == c.j) {
                               throw InvalidArgument("coupled evolution needs two distinct spins");
                           }
                       },
                       [&](const Oracle& o) {
                           basis_index(o.x0);
                           if (static_cast<int>(o.x0.size()) != n_spins) {
                               throw InvalidArgument("oracle label '" + o.x0 + "' does not match spin count");
                           }
                       },
                       [&](const Composite& c) { validate_gates(c.gates, n_spins); },
                   },
                   g.op);
    }
}

int count_queries(const std::vector<Gate>& gates) {
    int n = 0;
    for (const auto& g : gates) {
        if (std::holds_alternative<Oracle>(g.op)) {
            ++n;
        } else if (const auto* c = std::get_if<Composite>(&g.op)) {
            n += count_queries(c->gates);
        }
    }
    return n;
}

std::string axis_name(Axis a) {
    switch (a) {
        case Axis::x:
            return "x";
        case Axis::y:
            return "y";
        case Axis::z:
            return "z";
    }
    return "?";
}

Axis parse_axis(const std::string& s) {
    if (s == "x") return Axis::x;
    if (s == "y") return Axis::y;
    if (s == "z") return Axis::z;
    throw InvalidArgument("unknown axis '" + s + "'");
}

nlohmann::json gates_to_json(const std::vector<Gate>& gates) {
    auto out = nlohmann::json::array();
    for (const auto& g : gates) {
        std::visit(Overloaded{
                       [&](const Rotation& r) {
                           out.push_back({{"type", "rotation"},
                                          {"spin", r.spin},
                                          {"axis", axis_name(r.axis)},
                                          {"angle_deg", r.angle_rad * kDegPerRad}});
                       },
                       [&](const CoupledEvolution& c) {
                           out.push_back({{"type", "coupled_evolution"},
                                          {"spins", {c.i, c.j}},
                                          {"phase_deg", c.phase_rad * kDegPerRad}});
                       },
                       [&](const Oracle& o) { out.push_back({{"type", "oracle"}, {"x0", o.x0}}); },
                       [&](const Composite& c) {
                           out.push_back({{"type", "composite"}, {"label", c.label}, {"gates", gates_to_json(c.gates)}});
                       },
                   },
                   g.op);
    }
    return out;
}

std::vector<Gate> gates_from_json(const nlohmann::json& arr) {
    std::vector<Gate> gates;
    for (const auto& g : arr) {
        const auto type = g.at("type").get<std::string>();
        if (type == "rotation") {
            gates.push_back(rotation(g.at("spin").get<int>(), parse_axis(g.at("axis").get<std::string>()),
                                     g.at("angle_deg").get<double>() / kDegPerRad));
        } else if (type == "coupled_evolution") {
            const auto& spins = g.at("spins");
            gates.push_back(coupled_evolution(spins.at(0).get<int>(), spins.at(1).get<int>(),
                                              g.at("phase_deg").get<double>() / kDegPerRad));
        } else if (type == "oracle") {
            gates.push_back(oracle(g.at("x0").get<std::string>()));
        } else if (type == "composite") {
            gates.push_back(composite(g.at("label").get<std::string>(), gates_from_json(g.at("gates"))));
        } else {
            throw InvalidArgument("unknown gate type '" + type + "'");
        }
    }
    return gates;
}

}  // namespace

Gate rotation(int spin, Axis axis, double angle_rad) {
    return Gate{Rotation{spin, axis, angle_rad}};
}

Gate coupled_evolution(int i, int j, double phase_rad) {
    return Gate{CoupledEvolution{i, j, phase_rad}};
}

Gate oracle(std::string x0) {
    return Gate{Oracle{std::move(x0)}};
}

Gate composite(std::string label, std::vector<Gate> gates) {
    return Gate{Composite{std::move(label), std::move(gates)}};
}

void GateSequence::validate() const {
    if (n_spins < 1 || n_spins > kMaxSpins) {
        throw InvalidArgument("gate sequence spin count out of range");
    }
    validate_gates(gates, n_spins);
}

GateSequence& GateSequence::append(const GateSequence& other) {
    if (other.n_spins != n_spins) {
        throw DimensionMismatch("cannot append gate sequences with different spin counts");
    }
    gates.insert(gates.end(), other.gates.begin(), other.gates.end());
    return *this;
}

int count_oracle_queries(const GateSequence& seq) {
    return count_queries(seq.gates);
}

void PulseSequence::validate() const {
    if (n_spins < 1 || n_spins > kMaxSpins) {
        throw InvalidArgument("pulse sequence spin count out of range");
    }
    if (!frame_rad.empty() && static_cast<int>(frame_rad.size()) != n_spins) {
        throw DimensionMismatch("frame phases do not match spin count");
    }
    for (size_t k = 0; k < events.size(); ++k) {
        const auto& e = events[k];
        if (const auto* p = std::get_if<PulseEvent>(&e)) {
            check_spin(p->spin, n_spins);
        } else if (const auto* d = std::get_if<DelayEvent>(&e)) {
            if (!(d->duration_s >= 0.0)) {
                throw InvalidArgument("delay duration must be non-negative");
            }
        } else {
            const auto& a = std::get<AcquireEvent>(e);
            if (k + 1 != events.size()) {
                throw InvalidArgument("acquire must be the final event");
            }
            if (a.spins.empty()) {
                throw InvalidArgument("acquire must name at least one channel");
            }
            for (int s : a.spins) {
                check_spin(s, n_spins);
            }
        }
    }
}

double PulseSequence::duration_s() const {
    double t = 0.0;
    for (const auto& e : events) {
        if (const auto* d = std::get_if<DelayEvent>(&e)) {
            t += d->duration_s;
        }
    }
    return t;
}

nlohmann::json to_json(const GateSequence& seq) {
    return {{"n_spins", seq.n_spins}, {"gates", gates_to_json(seq.gates)}};
}

GateSequence gate_sequence_from_json(const nlohmann::json& j) {
    try {
        GateSequence seq{j.at("n_spins").get<int>(), gates_from_json(j.at("gates"))};
        seq.validate();
        return seq;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed gate sequence: ") + e.what());
    }
}

nlohmann::json to_json(const PulseSequence& seq) {
    auto events = nlohmann::json::array();
    for (const auto& e : seq.events) {
        std::visit(Overloaded{
                       [&](const PulseEvent& p) {
                           events.push_back({{"type", "pulse"},
                                             {"spin", p.spin},
                                             {"phase_deg", p.phase_rad * kDegPerRad},
                                             {"angle_deg", p.angle_rad * kDegPerRad}});
                       },
                       [&](const DelayEvent& d) { events.push_back({{"type", "delay"}, {"duration_s", d.duration_s}}); },
                       [&](const AcquireEvent& a) { events.push_back({{"type", "acquire"}, {"spins", a.spins}}); },
                   },
                   e);
    }
    auto frame = nlohmann::json::array();
    for (double f : seq.frame_rad) {
        frame.push_back(f * kDegPerRad);
    }
    return {{"n_spins", seq.n_spins}, {"events", events}, {"frame_deg", frame}};
}

PulseSequence pulse_sequence_from_json(const nlohmann::json& j) {
    try {
        PulseSequence seq;
        seq.n_spins = j.at("n_spins").get<int>();
        for (const auto& e : j.at("events")) {
            const auto type = e.at("type").get<std::string>();
            if (type == "pulse") {
                seq.events.emplace_back(PulseEvent{e.at("spin").get<int>(), e.at("phase_deg").get<double>() / kDegPerRad,
                                                   e.at("angle_deg").get<double>() / kDegPerRad});
            } else if (type == "delay") {
                seq.events.emplace_back(DelayEvent{e.at("duration_s").get<double>()});
            } else if (type == "acquire") {
                seq.events.emplace_back(AcquireEvent{e.at("spins").get<std::vector<int>>()});
            } else {
                throw InvalidArgument("unknown pulse-sequence event '" + type + "'");
            }
        }
        for (const auto& f : j.value("frame_deg", nlohmann::json::array())) {
            seq.frame_rad.push_back(f.get<double>() / kDegPerRad);
        }
        seq.validate();
        return seq;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed pulse sequence: ") + e.what());
    }
}

}  // namespace nmrqc
