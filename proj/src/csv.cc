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

#include "spinctl/csv.h"

#include <charconv>
#include <fstream>
#include <stdexcept>

namespace spinctl {

std::string format_real(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) {
        throw std::runtime_error("failed to format number");
    }
    return std::string(buf, ptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

CsvTable &CsvTable::row() {
    rows_.emplace_back();
    rows_.back().reserve(header_.size());
    return *this;
}

CsvTable &CsvTable::cell(double v) { return cell(std::string_view(format_real(v))); }

CsvTable &CsvTable::cell(std::size_t v) { return cell(std::string_view(std::to_string(v))); }

CsvTable &CsvTable::cell(std::string_view v) {
    if (rows_.empty()) {
        throw std::logic_error("CsvTable::cell called before row()");
    }
    rows_.back().emplace_back(v);
    return *this;
}

std::string CsvTable::str() const {
    std::string out;
    auto emit = [&out](const std::vector<std::string> &fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += fields[i];
        }
        out += '\n';
    };
    emit(header_);
    for (const auto &r : rows_) {
        if (r.size() != header_.size()) {
            throw std::logic_error("CSV row width does not match the header");
        }
        emit(r);
    }
    return out;
}

void CsvTable::write(const std::filesystem::path &path) const {
    const std::string text = str();
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
}

}  // namespace spinctl
