// Copyright 2026 The spinctl Authors
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

#include "spinctl/circuit.h"

#include <charconv>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace spinctl {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::RZ:
            return "RZ";
        case GateKind::RXX:
            return "RXX";
        case GateKind::RYY:
            return "RYY";
        case GateKind::RZZ:
            return "RZZ";
    }
    throw std::invalid_argument("unknown gate kind");
}

GateKind parse_gate_kind(std::string_view name) {
    for (GateKind k : {GateKind::RZ, GateKind::RXX, GateKind::RYY, GateKind::RZZ}) {
        if (gate_kind_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

Gate Gate::rz(std::size_t q, double angle, std::size_t layer) {
    return Gate{GateKind::RZ, q, q, angle, layer};
}

Gate Gate::two(GateKind kind, std::size_t a, std::size_t b, double angle, std::size_t layer) {
    if (!is_two_qubit(kind)) {
        throw std::invalid_argument("Gate::two called with a single-qubit kind");
    }
    return Gate{kind, a, b, angle, layer};
}

Gate Gate::inverse() const {
    Gate g = *this;
    g.angle = -angle;
    return g;
}

void Gate::validate(std::size_t n_qubits) const {
    if (q0 >= n_qubits) {
        throw std::invalid_argument("gate qubit index " + std::to_string(q0) + " out of range for " +
                                    std::to_string(n_qubits) + " qubits");
    }
    if (is_two_qubit(kind)) {
        if (q1 >= n_qubits) {
            throw std::invalid_argument("gate qubit index " + std::to_string(q1) + " out of range for " +
                                        std::to_string(n_qubits) + " qubits");
        }
        if (q0 == q1) {
            throw std::invalid_argument("two-qubit gate needs distinct qubits");
        }
    }
}

void Circuit::validate() const {
    std::size_t prev_layer = 1;
    for (const Gate &g : gates) {
        g.validate(n_qubits);
        if (g.layer < 1 || g.layer > layers) {
            throw std::invalid_argument("gate layer index " + std::to_string(g.layer) + " outside 1.." +
                                        std::to_string(layers));
        }
        if (g.layer < prev_layer) {
            throw std::invalid_argument("gate layers must be non-decreasing");
        }
        prev_layer = g.layer;
    }
}

void write_circuit(std::ostream &out, const Circuit &circuit) {
    char buf[64];
    for (const Gate &g : circuit.gates) {
        std::snprintf(buf, sizeof(buf), "%.17g", g.angle);
        out << g.layer << ' ' << gate_kind_name(g.kind) << ' ' << g.q0;
        if (is_two_qubit(g.kind)) {
            out << ' ' << g.q1;
        }
        out << ' ' << buf << '\n';
    }
}

std::string circuit_to_string(const Circuit &circuit) {
    std::ostringstream ss;
    write_circuit(ss, circuit);
    return ss.str();
}

std::vector<Gate> parse_gate_lines(std::string_view text) {
    std::vector<Gate> gates;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        auto fail = [&](const std::string &what) {
            return std::invalid_argument(what + " on circuit line " + std::to_string(line_no));
        };
        auto index = [&](const std::string &t) {
            std::size_t v = 0;
            const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
            if (ec != std::errc() || ptr != t.data() + t.size()) {
                throw fail("bad integer '" + t + "'");
            }
            return v;
        };
        if (tok.size() < 4) {
            throw fail("too few fields");
        }
        Gate g;
        g.layer = index(tok[0]);
        g.kind = parse_gate_kind(tok[1]);
        g.q0 = index(tok[2]);
        std::size_t angle_at = 3;
        if (is_two_qubit(g.kind)) {
            g.q1 = index(tok[3]);
            angle_at = 4;
        } else {
            g.q1 = g.q0;
        }
        if (tok.size() != angle_at + 1) {
            throw fail("expected " + std::to_string(angle_at + 1) + " fields");
        }
        const std::string &a = tok[angle_at];
        const auto [ptr, ec] = std::from_chars(a.data(), a.data() + a.size(), g.angle);
        if (ec != std::errc() || ptr != a.data() + a.size()) {
            throw fail("bad angle '" + a + "'");
        }
        gates.push_back(g);
    }
    return gates;
}

}  // namespace spinctl
