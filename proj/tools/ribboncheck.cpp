/*
   Copyright 2026 The ribboncheck Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/


// ribboncheck: Alexander polynomials of links and the divisibility
// obstruction to homotopy ribbon concordance.
//
//   ribboncheck compute "braid:n=2:1 1 1"
//   ribboncheck obstruct "braid:n=2:1 1 1" "braid:n=3:1 -2 1 -2" --both-directions
//   ribboncheck batch links.csv --pairs --jobs 4
//   ribboncheck validate "pd:X(1,4,2,5);X(3,6,4,1);X(5,2,6,3)"
//   ribboncheck oracle-check --table data/knots.csv

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ribboncheck/cli.hpp"

int main(int argc, char** argv) {
    namespace rc = ribboncheck::cli;
    CLI::App app{"Alexander polynomials and ribbon concordance obstructions"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ribboncheck 0.1.0");

    rc::Options opt;
    opt.maxCrossings = rc::max_crossings_from_env();
    std::string specA, specB, path;
    std::string tablePath;

    auto* compute = app.add_subcommand("compute", "Alexander polynomial of a link spec");
    compute->add_option("spec", specA, "pd:X(...);... or braid:n=N:letters")->required();
    compute->add_flag("--json", opt.json, "emit JSON");
    compute->add_flag("--oracles", opt.oracles, "also run the independent checks");

    auto* obstruct = app.add_subcommand("obstruct", "Does Delta_L divide Delta_J?");
    obstruct->add_option("J", specA, "spec of J")->required();
    obstruct->add_option("L", specB, "spec of L")->required();
    obstruct->add_flag("--json", opt.json, "emit JSON");
    obstruct->add_flag("--both-directions", opt.bothDirections, "also report L -> J");

    auto* batch = app.add_subcommand("batch", "Process a CSV table with columns name,spec");
    batch->add_option("table", path, "input CSV table")->required();
    batch->add_flag("--pairs", opt.pairs, "emit the obstruction verdict for every ordered pair");
    batch->add_flag("--csv", opt.csv, "CSV output instead of JSON lines");
    batch->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    auto* validate = app.add_subcommand("validate", "Parse and check a spec without computing");
    validate->add_option("spec", specA, "link spec")->required();
    validate->add_flag("--json", opt.json, "emit JSON");

    auto* oracle = app.add_subcommand("oracle-check", "Cyclic cover and Torres checks");
    oracle->add_option("spec", specA, "link spec");
    oracle->add_option("--table", tablePath, "CSV table with columns name,spec");
    oracle->add_flag("--json", opt.json, "emit JSON lines");
    oracle->add_option("--jobs", opt.jobs, "worker threads")->check(CLI::Range(1u, 256u));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : rc::kExitInput;
    }

    if (*compute) return rc::run_compute(specA, opt, std::cout, std::cerr);
    if (*obstruct) return rc::run_obstruct(specA, specB, opt, std::cout, std::cerr);
    if (*batch) return rc::run_batch(path, opt, std::cout, std::cerr);
    if (*validate) return rc::run_validate(specA, opt, std::cout, std::cerr);
    std::optional<std::string> spec, table;
    if (!specA.empty()) spec = specA;
    if (!tablePath.empty()) table = tablePath;
    return rc::run_oracle_check(spec, table, opt, std::cout, std::cerr);
}
