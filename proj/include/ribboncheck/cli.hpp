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


/**
 * @file cli.hpp
 * @brief Command implementations behind the `ribboncheck` executable.
 *
 * Each command writes to the given streams and returns the process exit
 * code: 0 success, 2 bad input, 3 computation failure. Verdicts are data and
 * never affect the exit code.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "alexander.hpp"
#include "errors.hpp"
#include "linkcodec.hpp"
#include "obstruct.hpp"
#include "oracles.hpp"
#include "table.hpp"

namespace ribboncheck::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitComputation = 3;
inline constexpr std::size_t kDefaultMaxCrossings = 24;

struct Options {
    bool json = false;
    bool bothDirections = false;
    bool pairs = false;
    bool csv = false;
    bool oracles = false;
    unsigned jobs = 1;
    std::size_t maxCrossings = kDefaultMaxCrossings;
};

/// RIBBONCHECK_MAX_CROSSINGS, or the default when unset or unparsable.
inline std::size_t max_crossings_from_env() {
    const char* v = std::getenv("RIBBONCHECK_MAX_CROSSINGS");
    if (!v || !*v) return kDefaultMaxCrossings;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    return *end == '\0' ? static_cast<std::size_t>(n) : kDefaultMaxCrossings;
}

inline LinkDiagram load_diagram(std::string_view spec, std::size_t maxCrossings) {
    LinkDiagram d = diagram_from_spec(spec);
    if (d.crossing_count() > maxCrossings)
        throw InputError("diagram has " + std::to_string(d.crossing_count()) + " crossings; the limit is " +
                         std::to_string(maxCrossings) + " (RIBBONCHECK_MAX_CROSSINGS)");
    validate(d);
    return d;
}

inline int exit_code_for(const std::exception& e) {
    return dynamic_cast<const InputError*>(&e) ? kExitInput : kExitComputation;
}

inline std::string error_kind(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e)) return "parse";
    if (dynamic_cast<const ArcConsistencyError*>(&e)) return "arc_consistency";
    if (dynamic_cast<const GeneratorRangeError*>(&e)) return "generator_range";
    if (dynamic_cast<const InputError*>(&e)) return "input";
    if (dynamic_cast<const StructuralError*>(&e)) return "structural";
    if (dynamic_cast<const DomainError*>(&e)) return "domain";
    if (dynamic_cast<const UnsupportedError*>(&e)) return "unsupported";
    return "computation";
}

inline Json error_json(const std::exception& e) { return Json{{"kind", error_kind(e)}, {"message", e.what()}}; }

/// Runs body, reporting any exception on err as "error: ..." with its exit code.
inline int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
}

inline Json oracles_json(const std::vector<OracleResult>& rs) {
    Json a = Json::array();
    for (const auto& r : rs) {
        Json o{{"kind", r.kind}};
        if (r.kind == "cyclic_cover") o["k"] = r.k;
        o["pass"] = r.pass;
        o["detail"] = r.detail;
        a.push_back(std::move(o));
    }
    return a;
}

inline int run_compute(const std::string& spec, const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LinkDiagram d = load_diagram(spec, opt.maxCrossings);
        const AlexanderPolynomial a = alexander_polynomial(d);
        std::vector<OracleResult> checks;
        if (opt.oracles) checks = run_oracles(d);
        if (opt.json) {
            Json j{{"spec", spec},
                   {"delta", to_string(a.value)},
                   {"m", a.variables},
                   {"crossings", d.crossing_count()},
                   {"rank", a.source.rank},
                   {"hash", a.source.diagramHash}};
            if (opt.oracles) j["oracles"] = oracles_json(checks);
            out << j.dump() << "\n";
        } else {
            out << to_string(a.value) << "\n";
            out << "components: " << a.variables << ", crossings: " << d.crossing_count() << "\n";
            for (const auto& r : checks)
                out << "oracle " << r.kind << (r.k ? " k=" + std::to_string(r.k) : "") << ": "
                    << (r.pass ? "pass" : "FAIL") << " (" << r.detail << ")\n";
        }
        return std::all_of(checks.begin(), checks.end(), [](const auto& r) { return r.pass; }) ? kExitOk
                                                                                               : kExitComputation;
    });
}

inline int run_obstruct(const std::string& specJ, const std::string& specL, const Options& opt, std::ostream& out,
                        std::ostream& err) {
    return guarded(err, [&] {
        const AlexanderPolynomial dJ = alexander_polynomial(load_diagram(specJ, opt.maxCrossings));
        const AlexanderPolynomial dL = alexander_polynomial(load_diagram(specL, opt.maxCrossings));
        std::vector<ObstructionReport> reports{obstruction_report(dJ, dL, {"J", "L"})};
        if (opt.bothDirections) reports.push_back(obstruction_report(dL, dJ, {"L", "J"}));
        for (const auto& r : reports) {
            if (opt.json)
                out << to_json(r).dump() << "\n";
            else
                out << r.direction.first << " -> " << r.direction.second << ": " << describe(r) << "\n";
        }
        return kExitOk;
    });
}

inline int run_validate(const std::string& spec, const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const LinkDiagram d = load_diagram(spec, opt.maxCrossings);
        if (opt.json)
            out << Json{{"spec", spec},
                        {"valid", true},
                        {"components", d.componentCount},
                        {"crossings", d.crossing_count()},
                        {"arcs", d.arc_count()}}
                       .dump()
                << "\n";
        else
            out << "ok: components " << d.componentCount << ", crossings " << d.crossing_count() << ", arcs "
                << d.arc_count() << "\n";
        return kExitOk;
    });
}

namespace detail {

/// Applies f to 0..n-1 on up to `jobs` threads; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F f) {
    std::vector<T> out(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
    };
    const unsigned t = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < t; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return out;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

struct BatchRecord {
    std::string name;
    std::string spec;
    std::optional<AlexanderPolynomial> delta;
    std::optional<Json> error;
};

}  // namespace detail

inline std::vector<TableRow> read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    auto rows = read_table(in);
    for (const auto& r : rows) {
        r.at("name");
        r.at("spec");
    }
    return rows;
}

inline int run_batch(const std::string& path, const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const auto rows = read_table_file(path);
        const auto records = detail::parallel_map<detail::BatchRecord>(rows.size(), opt.jobs, [&](std::size_t i) {
            detail::BatchRecord r{rows[i].at("name"), rows[i].at("spec"), std::nullopt, std::nullopt};
            try {
                r.delta = alexander_polynomial(load_diagram(r.spec, opt.maxCrossings));
            } catch (const std::exception& e) {
                r.error = error_json(e);
            }
            return r;
        });

        if (!opt.pairs) {
            if (opt.csv) out << "name,spec,status,delta,m,error\n";
            for (const auto& r : records) {
                if (opt.csv) {
                    out << detail::csv_field(r.name) << "," << detail::csv_field(r.spec) << ","
                        << (r.delta ? "ok," + detail::csv_field(to_string(r.delta->value)) + "," +
                                          std::to_string(r.delta->variables) + ","
                                    : "error,,," + detail::csv_field((*r.error)["message"].get<std::string>()))
                        << "\n";
                    continue;
                }
                Json j{{"name", r.name}, {"spec", r.spec}};
                if (r.delta) {
                    j["status"] = "ok";
                    j["delta"] = to_string(r.delta->value);
                    j["m"] = r.delta->variables;
                } else {
                    j["status"] = "error";
                    j["error"] = *r.error;
                }
                out << j.dump() << "\n";
            }
            return kExitOk;
        }

        const std::size_t n = records.size();
        const auto cells = detail::parallel_map<Json>(n * n, opt.jobs, [&](std::size_t idx) {
            const auto& a = records[idx / n];
            const auto& b = records[idx % n];
            if (!a.delta || !b.delta) {
                Json j{{"direction", {a.name, b.name}}, {"status", "error"}};
                j["error"] = a.delta ? *b.error : *a.error;
                return j;
            }
            Json j = to_json(obstruction_report(*a.delta, *b.delta, {a.name, b.name}));
            j["status"] = "ok";
            return j;
        });
        if (opt.csv) out << "J,L,status,verdict,quotient,gcd\n";
        for (const auto& j : cells) {
            if (!opt.csv) {
                out << j.dump() << "\n";
                continue;
            }
            auto str = [](const Json& v) { return v.is_string() ? detail::csv_field(v.get<std::string>()) : std::string(); };
            out << str(j["direction"][0]) << "," << str(j["direction"][1]) << "," << str(j["status"]) << ","
                << (j.contains("verdict") ? str(j["verdict"]) : "") << ","
                << (j.contains("quotient") ? str(j["quotient"]) : "") << "," << (j.contains("gcd") ? str(j["gcd"]) : "")
                << "\n";
        }
        return kExitOk;
    });
}

/// Oracle suite for one spec, or for every row of a table when tablePath is
/// set. Exit code 3 if any oracle fails.
inline int run_oracle_check(const std::optional<std::string>& spec, const std::optional<std::string>& tablePath,
                            const Options& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<std::pair<std::string, std::string>> items;
        if (spec) items.emplace_back(*spec, *spec);
        if (tablePath)
            for (const auto& r : read_table_file(*tablePath)) items.emplace_back(r.at("name"), r.at("spec"));
        if (items.empty()) throw InputError("oracle-check needs a spec or --table");

        struct Outcome {
            std::vector<OracleResult> results;
            std::optional<Json> error;
        };
        const auto outcomes = detail::parallel_map<Outcome>(items.size(), opt.jobs, [&](std::size_t i) {
            Outcome o;
            try {
                o.results = run_oracles(load_diagram(items[i].second, opt.maxCrossings));
            } catch (const std::exception& e) {
                o.error = error_json(e);
            }
            return o;
        });

        bool ok = true;
        bool inputProblem = false;
        for (std::size_t i = 0; i < items.size(); ++i) {
            const Outcome& o = outcomes[i];
            for (const auto& r : o.results) ok &= r.pass;
            if (o.error) {
                ok = false;
                inputProblem |= (*o.error)["kind"] != "computation" && (*o.error)["kind"] != "unsupported";
            }
            if (opt.json) {
                Json j{{"name", items[i].first}};
                if (o.error)
                    j["error"] = *o.error;
                else
                    j["oracles"] = oracles_json(o.results);
                out << j.dump() << "\n";
                continue;
            }
            if (o.error) {
                out << items[i].first << ": error: " << (*o.error)["message"].get<std::string>() << "\n";
                continue;
            }
            if (o.results.empty()) out << items[i].first << ": no oracle applies\n";
            for (const auto& r : o.results)
                out << items[i].first << ": " << r.kind << (r.k ? " k=" + std::to_string(r.k) : "") << " "
                    << (r.pass ? "pass" : "FAIL") << " (" << r.detail << ")\n";
        }
        if (ok) return kExitOk;
        return spec && !tablePath && inputProblem ? kExitInput : kExitComputation;
    });
}

}  // namespace ribboncheck::cli
