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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string &args) {
    const std::string cmd = std::string(SPINCTL_BINARY) + " " + args + " 2>&1";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    char buf[4096];
    while (std::fgets(buf, sizeof(buf), pipe)) {
        r.out += buf;
    }
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

fs::path write_config(const std::string &name, const std::string &text) {
    const fs::path dir = fs::temp_directory_path() / "spinctl_cli_test";
    fs::create_directories(dir);
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST(Cli, validate_accepts_good_config) {
    const fs::path cfg = write_config("good.conf", "experiment = convergence\nlayers = 8\n");
    const Result r = run("validate " + cfg.string());
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("config ok"), std::string::npos);
}

TEST(Cli, config_errors_exit_with_two) {
    EXPECT_EQ(run("validate " + write_config("unknown.conf", "bogus = 1\n").string()).code, 2);
    EXPECT_EQ(run("validate " + write_config("bad.conf", "n_sites = 1\n").string()).code, 2);
    EXPECT_EQ(run("validate /nonexistent/file.conf").code, 2);
    EXPECT_EQ(run("validate " + write_config("ok.conf", "").string() + " --layers zero").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("circuit " + write_config("both.conf", "scheme = both\n").string()).code, 2);
}

TEST(Cli, overrides_apply_after_file) {
    const fs::path cfg = write_config("override.conf", "layers = 8\n");
    const Result r = run("validate " + cfg.string() + " --layers 4 --n_sites 5");
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_NE(r.out.find("N 5, L 4"), std::string::npos) << r.out;
}

TEST(Cli, circuit_prints_gate_lines) {
    const fs::path cfg = write_config("circuit.conf", "scheme = local\nlayers = 2\n");
    const Result r = run("circuit " + cfg.string());
    EXPECT_EQ(r.code, 0) << r.out;
    std::size_t lines = 0;
    for (char ch : r.out) {
        lines += ch == '\n';
    }
    EXPECT_EQ(lines, 18u);
    EXPECT_EQ(r.out.rfind("1 RXX 0 1 2\n", 0), 0u) << r.out;
}

TEST(Cli, run_writes_outputs) {
    const fs::path out = fs::temp_directory_path() / "spinctl_cli_test" / "run_out";
    fs::remove_all(out);
    const fs::path cfg = write_config("run.conf", "realizations = 1\nmax_iters = 2\nout = " + out.string() + "\n");
    const Result r = run("run " + cfg.string());
    EXPECT_EQ(r.code, 0) << r.out;
    EXPECT_TRUE(fs::exists(out / "convergence_summary.csv"));
    EXPECT_TRUE(fs::exists(out / "trace_global_0.csv"));
}
