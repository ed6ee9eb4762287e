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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spinctl {

enum class GateKind { RZ, RXX, RYY, RZZ };

std::string_view gate_kind_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

inline bool is_two_qubit(GateKind kind) { return kind != GateKind::RZ; }

/// A rotation gate exp(-i angle P / 2) where P is Z, XX, YY or ZZ.
///
/// Site 0 is the leftmost character of a ket label and the most significant
/// bit of the basis index. `q1` is ignored for RZ.
struct Gate {
    GateKind kind = GateKind::RZ;
    std::size_t q0 = 0;
    std::size_t q1 = 0;
    double angle = 0.0;
    std::size_t layer = 1;

    static Gate rz(std::size_t q, double angle, std::size_t layer = 1);
    static Gate two(GateKind kind, std::size_t a, std::size_t b, double angle, std::size_t layer = 1);

    /// Same gate with the angle negated (the inverse, and also the complex conjugate).
    Gate inverse() const;

    /// Throws std::invalid_argument if the gate is malformed or does not fit `n_qubits`.
    void validate(std::size_t n_qubits) const;

    bool operator==(const Gate &other) const = default;
};

/// Layered gate list. Layers are numbered 1..layers and gates appear in
/// application order, so layer indices are non-decreasing along `gates`.
struct Circuit {
    std::size_t n_qubits = 0;
    std::size_t layers = 0;
    double dt = 0.0;
    std::vector<Gate> gates;

    void validate() const;

    bool operator==(const Circuit &other) const = default;
};

/// One gate per line: `layer kind q0 [q1] angle`, angle with 17 significant digits.
void write_circuit(std::ostream &out, const Circuit &circuit);
std::string circuit_to_string(const Circuit &circuit);

/// Parses the gate lines produced by write_circuit. The header fields
/// (n_qubits, layers, dt) are not part of the text format and must be supplied.
std::vector<Gate> parse_gate_lines(std::string_view text);

}  // namespace spinctl
