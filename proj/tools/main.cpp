// Copyright 2026 The qig authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qig/qig.hpp"

namespace {

constexpr int kExitInputError = 3;

int run_compute(const std::string& spec_path, const std::string& out_path,
                const std::string& mutate) {
  qig::RunOptions options;
  options.mutate = mutate;

  const qig::LoadedModel loaded = qig::load_model_spec_file(spec_path);
  const qig::Report report = qig::run_report(loaded, options);
  const std::string rendered = qig::render_report_json(report);

  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "qig: cannot write " << out_path << "\n";
      return kExitInputError;
    }
    out << rendered;
  }
  return qig::exit_code_for(report);
}

int run_verify(std::uint64_t seed, int count, const std::string& mutate) {
  qig::RunOptions options;
  options.mutate = mutate;

  const qig::VerifySummary summary = qig::verify_suite(seed, count, options);
  std::cout << summary.text << "\n";
  if (summary.failed > 0) return 2;
  if (summary.warned > 0) return 1;
  return 0;
}

int run_catalog_list() {
  for (const auto& [name, blurb] : qig::catalog_listing()) {
    std::cout << name << "\n    " << blurb << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qig: classical Fisher information, the Fubini-Study pullback tensor "
      "h = g - i*omega, SLD-based quantum Fisher information, and the "
      "identity checks relating them"};
  app.require_subcommand(1);

  std::string spec_path, out_path, mutate;
  std::uint64_t seed = 1;
  int count = 10;

  auto* compute = app.add_subcommand(
      "compute", "run the full computation and check suite on a model spec file");
  compute->add_option("specfile", spec_path, "model spec JSON file")->required();
  compute->add_option("--out", out_path, "write the report here instead of stdout");
  compute->add_option("--mutate", mutate,
                      "fault injection for negative-control tests (omega-sign)");

  auto* verify = app.add_subcommand(
      "verify", "run the property suite over random models");
  verify->add_option("--seed", seed, "random seed")->required();
  verify->add_option("--count", count, "number of random model draws")->required();
  verify->add_option("--mutate", mutate,
                     "fault injection for negative-control tests (omega-sign)");

  auto* catalog = app.add_subcommand("catalog", "built-in model catalog");
  auto* catalog_list = catalog->add_subcommand("list", "list catalog models");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11 prints help itself; map usage errors onto the input-error code
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInputError;
  }

  try {
    if (compute->parsed()) return run_compute(spec_path, out_path, mutate);
    if (verify->parsed()) {
      if (count < 1) {
        std::cerr << "qig verify: --count must be >= 1\n";
        return kExitInputError;
      }
      return run_verify(seed, count, mutate);
    }
    if (catalog->parsed()) {
      if (!catalog_list->parsed()) {
        std::cerr << "qig catalog: expected 'list'\n";
        return kExitInputError;
      }
      return run_catalog_list();
    }
  } catch (const qig::ParseError& e) {
    std::cerr << "qig: spec error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const qig::Error& e) {
    std::cerr << "qig: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "qig: internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
