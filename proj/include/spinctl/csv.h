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
#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace spinctl {

/// Shortest decimal string that round-trips to the same double.
std::string format_real(double v);

/// Small in-memory CSV table written with LF line endings.
class CsvTable {
  public:
    explicit CsvTable(std::vector<std::string> header);

    CsvTable &row();
    CsvTable &cell(double v);
    CsvTable &cell(std::size_t v);
    CsvTable &cell(std::string_view v);

    std::size_t rows() const { return rows_.size(); }
    std::string str() const;
    void write(const std::filesystem::path &path) const;

  private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace spinctl
