/*
 * Copyright (C) 2026 The x1n Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "x1n/elliptic.hpp"
#include "x1n/fixture.hpp"
#include "x1n/scan.hpp"
#include "x1n/text_form.hpp"
#include "x1n/verify.hpp"

#ifndef X1N_DEFAULT_FIXTURE_DIR
#define X1N_DEFAULT_FIXTURE_DIR "fixtures"
#endif

namespace x1n {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerificationFailed = 1,
    kExitInputError = 2,
    kExitBudget = 3,
};

namespace detail {

inline std::vector<std::filesystem::path> fixture_paths(const std::filesystem::path& where) {
    namespace fs = std::filesystem;
    if (fs::is_regular_file(where)) return {where};
    if (!fs::is_directory(where)) throw InputError(where.string() + ": no such fixture file or directory");
    std::vector<fs::path> out;
    for (const auto& entry : fs::directory_iterator(where))
        if (entry.is_regular_file() && entry.path().extension() == ".json") out.push_back(entry.path());
    std::sort(out.begin(), out.end());
    if (out.empty()) throw InputError(where.string() + ": no .json fixtures found");
    return out;
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = s.find(',', start);
        out.push_back(s.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return out;
}

inline Poly<PrimeBase> parse_poly_mod_p(const std::string& coeffs, std::uint64_t p) {
    PrimeBase fp(p);
    std::vector<std::uint64_t> cs;
    for (const auto& c : split_commas(coeffs)) cs.push_back(fp.parse(c));
    Poly<PrimeBase> f(fp, std::move(cs));
    if (f.degree() < 1 || !f.is_monic())
        throw InputError("polynomial '" + coeffs + "' must be monic of degree >= 1 modulo " + std::to_string(p));
    return f;
}

inline std::string point_text(const Point<RationalBase>& pt) {
    if (pt.is_infinity()) return "O";
    return "(" + to_text(pt.x()) + ", " + to_text(pt.y()) + ")";
}

inline int cmd_verify(const std::string& where, const std::string& report_path, std::ostream& out) {
    VerificationReport report;
    for (const auto& path : fixture_paths(where)) {
        auto fixture = load_fixture(path);
        auto r = verify_fixture(fixture, path.filename().string());
        out << (r.pass ? "PASS " : "FAIL ") << r.label << "  degree " << r.degree
            << (r.degree_certified ? " (certified)" : " (not certified)");
        if (r.below_gonality) out << (*r.below_gonality ? " < gon " : " >= gon ") << *r.gonality;
        if (r.order) out << "  " << r.order->summary();
        if (!r.error.empty()) out << "  error: " << r.error;
        out << "\n";
        report.fixtures.push_back(std::move(r));
    }
    out << report.passed() << " passed, " << report.failed() << " failed\n";
    if (!report_path.empty()) {
        std::ofstream rep(report_path);
        if (!rep) throw InputError(report_path + ": cannot write report");
        rep << report_to_json(report).dump(2) << "\n";
    }
    return report.pass() ? kExitOk : kExitVerificationFailed;
}

inline int cmd_order(const std::string& path, std::optional<long long> k, std::ostream& out) {
    auto f = load_fixture(path);
    auto e = tate_curve<RationalBase>({f.b, f.c});
    auto origin = f.field.zero();
    auto pt = e.point(origin, origin);
    if (k) {
        out << "[" << *k << "]P = " << point_text(scalar_mul(e, mpz_class(static_cast<long>(*k)), pt)) << "\n";
        return kExitOk;
    }
    auto cert = verify_order(e, pt, f.expected_order);
    out << cert.summary() << "\n";
    return cert.pass ? kExitOk : kExitVerificationFailed;
}

inline int cmd_jinv(const std::string& path, std::ostream& out) {
    auto f = load_fixture(path);
    auto inv = curve_invariants(tate_curve<RationalBase>({f.b, f.c}));
    out << "disc = " << to_text(inv.disc) << "\n";
    if (inv.j) {
        out << "j = " << to_text(*inv.j) << "\n";
    } else {
        out << "j = undefined (singular curve)\n";
    }
    return kExitOk;
}

struct ScanArgs {
    std::uint64_t p = 0;
    unsigned ext = 1;
    std::uint64_t order = 0;
    std::uint64_t budget = 100'000'000;
    unsigned jobs = 1;
    std::string out_path;
    std::string modulus;
    std::optional<unsigned> gonality;
    bool no_filter = false;
    bool orbits = false;
    std::uint64_t seed = 0x5eed;
};

inline int cmd_scan(const ScanArgs& a, std::ostream& out) {
    ScanOptions opts;
    opts.budget = a.budget;
    opts.jobs = a.jobs;
    opts.seed = a.seed;
    if (!a.modulus.empty()) opts.modulus = parse_poly_mod_p(a.modulus, a.p);

    auto table = GonalityTable::builtin();
    if (!a.no_filter && !a.gonality && !table.lookup(a.order))
        throw InputError("no gonality known for N=" + std::to_string(a.order) + " (known: " + table.known() +
                         "); pass --gonality or --no-filter");

    auto result = scan_fp(a.p, a.ext, a.order, opts);
    auto hits = a.no_filter ? result.hits : low_degree_filter(result.hits, a.order, table, a.gonality);
    if (a.orbits) group_orbits(hits);

    std::ofstream file;
    if (!a.out_path.empty()) {
        file.open(a.out_path);
        if (!file) throw InputError(a.out_path + ": cannot write output");
    }
    std::ostream& sink = a.out_path.empty() ? out : file;
    for (const auto& h : hits) sink << hit_to_json(h).dump() << "\n";

    nlohmann::json modulus = nullptr;
    if (result.field.num_generators() == 1) {
        modulus = nlohmann::json::array();
        for (auto c : result.field.generators()[0].minpoly) modulus.push_back(std::to_string(c));
    }
    nlohmann::json summary = {{"summary",
                               {{"p", a.p},
                                {"d", a.ext},
                                {"order", a.order},
                                {"modulus", modulus},
                                {"pairs", result.pairs},
                                {"hits", result.hits.size()},
                                {"retained", hits.size()},
                                {"elapsed_ms", static_cast<std::uint64_t>(result.elapsed_seconds * 1000)}}}};
    sink << summary.dump() << "\n";
    return kExitOk;
}

inline int cmd_irred(const std::string& coeffs, std::uint64_t p, std::ostream& out) {
    auto f = parse_poly_mod_p(coeffs, p);
    out << (is_irreducible_mod_p(f) ? "irreducible" : "reducible") << " over F_" << p << "\n";
    return kExitOk;
}

}  // namespace detail

/// Entry point of the x1n command-line tool. Exit codes: 0 success, 1
/// mathematical verification failure, 2 input or usage error, 3 work
/// budget refusal.
inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Exact certification of torsion points on Tate normal form curves and finite-field scans of X1(N)",
                 "x1n"};
    app.require_subcommand(1);

    std::string fixtures = X1N_DEFAULT_FIXTURE_DIR, report;
    auto* verify = app.add_subcommand("verify", "Verify every fixture; exit 0 iff all pass");
    verify->add_option("--fixtures", fixtures, "Fixture file or directory of .json fixtures");
    verify->add_option("--report", report, "Write a JSON report to this path");

    std::string fixture;
    std::optional<long long> k;
    auto* order = app.add_subcommand("order", "Print the order certificate of (0,0), or [k](0,0) with --k");
    order->add_option("--fixture", fixture, "Fixture file")->required();
    order->add_option("--k", k, "Print the multiple [k]P instead");

    std::string jfixture;
    auto* jinv = app.add_subcommand("jinv", "Print the discriminant and j-invariant of a fixture's curve");
    jinv->add_option("--fixture", jfixture, "Fixture file")->required();

    detail::ScanArgs sa;
    auto* scan = app.add_subcommand("scan", "Enumerate Tate parameters over F_{p^d} with (0,0) of exact order N");
    scan->add_option("--p", sa.p, "Prime")->required();
    scan->add_option("--ext", sa.ext, "Extension degree d")->check(CLI::PositiveNumber);
    scan->add_option("--order", sa.order, "Target order N")->required()->check(CLI::PositiveNumber);
    scan->add_option("--budget", sa.budget, "Maximum number of (b,c) pairs");
    scan->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--out", sa.out_path, "Write hits to this path instead of stdout");
    scan->add_option("--modulus", sa.modulus, "Defining polynomial of F_{p^d}, comma-separated, constant first");
    scan->add_option("--gonality", sa.gonality, "Gonality override for the low-degree filter");
    scan->add_flag("--no-filter", sa.no_filter, "Report all hits regardless of place degree");
    scan->add_flag("--orbits", sa.orbits, "Label hits with their Frobenius orbit");
    scan->add_option("--seed", sa.seed, "Seed for the random modulus search");

    std::string minpoly;
    std::uint64_t irred_p = 0;
    auto* irred = app.add_subcommand("irred", "Test a polynomial for irreducibility over F_p");
    irred->add_option("--minpoly", minpoly, "Coefficients, comma-separated, constant first")->required();
    irred->add_option("--p", irred_p, "Prime")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*verify) return detail::cmd_verify(fixtures, report, out);
        if (*order) return detail::cmd_order(fixture, k, out);
        if (*jinv) return detail::cmd_jinv(jfixture, out);
        if (*scan) return detail::cmd_scan(sa, out);
        if (*irred) return detail::cmd_irred(minpoly, irred_p, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const BudgetExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitInputError;
}

}  // namespace x1n
