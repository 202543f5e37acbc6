#pragma once

#include <CLI11.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "tpcert/io.hpp"

namespace tpcert::cli {

using io::json;

// Exit codes: 0 property holds, 1 property refuted (certificate emitted),
// 2 usage or input error, 3 enumeration budget exceeded.
constexpr int exit_holds = 0;
constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;

namespace detail {

template <ScalarType S>
void add_mode(json& report) {
    report["mode"] = scalar_traits<S>::mode_name;
    if constexpr (!scalar_traits<S>::exact) report["epsilon"] = FloatScalar::epsilon;
}

template <ScalarType S>
json input_json(const std::string& path, const Matrix<S>& m) {
    json j = io::matrix_to_json(m);
    j["file"] = path;
    j["digest"] = io::digest(m);
    return j;
}

inline void emit(std::ostream& out, json& report, int code) {
    report["exit_code"] = code;
    out << report.dump(2) << "\n";
}

struct MatrixCheckArgs {
    std::string file;
    int k = 1;
    std::string method = "certificate";
    std::uint64_t max_minors = 10'000'000;
    bool unlimited = false;
};

template <ScalarType S>
int run_matrix_check(const std::string& command, const MatrixCheckArgs& args, std::ostream& out) {
    const Matrix<Rational> exact = io::load_matrix(args.file);
    const Matrix<S> a = io::convert_matrix<S>(exact);
    EnumLimits limits{args.max_minors, args.unlimited};

    Verdict<S> v;
    if (command == "check-tp") {
        if (args.method == "brute")
            v = is_tp_k_bruteforce(a, args.k);
        else if (args.method == "contiguous")
            v = is_tp_k_contiguous(a, args.k);
        else
            v = tp_certificate(a, args.k);
    } else if (command == "check-tn") {
        if (args.method == "brute")
            v = is_tn_k_bruteforce(a, args.k, limits);
        else
            v = tn_certificate(a, args.k, limits);
    } else {  // p-matrix
        v = is_p_matrix(a);
    }

    json report;
    report["command"] = command;
    if (command != "p-matrix") {
        report["k"] = args.k;
        report["method"] = args.method;
    }
    add_mode<S>(report);
    report["input"] = input_json(args.file, a);
    report["holds"] = v.holds;
    report["verdict"] = v.holds ? "pass" : "fail";
    report["certificate"] = io::certificate_to_json(v.certificate);
    report["stats"] = io::stats_to_json(v.stats);
    const int code = v.holds ? exit_holds : exit_refuted;
    emit(out, report, code);
    return code;
}

struct HullArgs {
    std::string file_a;
    std::string file_b;
    int k = 1;
    std::uint64_t budget = 1u << 20;
    bool force = false;
    std::uint64_t max_minors = 10'000'000;
    bool unlimited = false;
};

template <ScalarType S>
int run_hull_check(const std::string& command, const HullArgs& args, std::ostream& out) {
    const Matrix<S> a = io::convert_matrix<S>(io::load_matrix(args.file_a));
    const Matrix<S> b = io::convert_matrix<S>(io::load_matrix(args.file_b));
    const IntervalHull<S> hull(a, b);

    HullVerdict<S> hv;
    if (command == "hull-tp")
        hv = hull_is_tp_k(hull, args.k);
    else
        hv = hull_is_tn_k(hull, args.k, args.budget, args.force, EnumLimits{args.max_minors, args.unlimited});

    json report;
    report["command"] = command;
    report["k"] = args.k;
    add_mode<S>(report);
    report["input_a"] = input_json(args.file_a, a);
    report["input_b"] = input_json(args.file_b, b);
    report["holds"] = hv.holds;
    report["verdict"] = hv.holds ? "pass" : "fail";
    if (!hv.holds && hv.failing) {
        json fail;
        fail["test_matrix"] = hv.failing->name();
        if (hv.failing->kind == FailingTestId::Kind::family) {
            fail["z"] = hv.failing->z;
            fail["z_prime"] = hv.failing->zp;
        }
        fail["member"] = hv.failing_is_member;
        if (hv.failing_matrix) fail["matrix"] = io::matrix_to_json(*hv.failing_matrix)["entries"];
        report["hull_failure"] = std::move(fail);
    }
    report["certificate"] = io::certificate_to_json(hv.inner);
    report["stats"] = io::stats_to_json(hv.stats);
    const int code = hv.holds ? exit_holds : exit_refuted;
    emit(out, report, code);
    return code;
}

struct PfArgs {
    std::string file;
    int k = 1;
    std::string mode = "pf";
};

template <ScalarType S>
int run_pf_check(const PfArgs& args, std::ostream& out) {
    const SeqWindow<Rational> exact = io::load_sequence(args.file);
    const SeqWindow<S> s = io::convert_sequence<S>(exact);
    const PfMode mode = args.mode == "tp" ? PfMode::positive : PfMode::nonneg;
    const Verdict<S> v = is_pf_k(s, args.k, mode);

    json report;
    report["command"] = "pf-check";
    report["k"] = args.k;
    report["pf_mode"] = args.mode;
    add_mode<S>(report);
    json seq;
    seq["file"] = args.file;
    seq["offset"] = s.offset;
    seq["finite_support"] = s.finite_support;
    seq["values"] = io::vector_to_json(s.values);
    report["sequence"] = std::move(seq);
    report["holds"] = v.holds;
    report["verdict"] = v.holds ? "pass" : "fail";
    report["certificate"] = io::certificate_to_json(v.certificate, /*sequence_indices=*/true);
    report["stats"] = io::stats_to_json(v.stats);
    const int code = v.holds ? exit_holds : exit_refuted;
    emit(out, report, code);
    return code;
}

template <ScalarType S>
int run_bench(const std::string& file, int k, std::ostream& out) {
    const Matrix<S> a = io::convert_matrix<S>(io::load_matrix(file));
    const Verdict<S> brute = is_tp_k_bruteforce(a, k);
    const Verdict<S> contiguous = is_tp_k_contiguous(a, k);

    json report;
    report["command"] = "bench";
    report["k"] = k;
    add_mode<S>(report);
    report["input"] = input_json(file, a);
    report["brute"] = io::stats_to_json(brute.stats);
    report["brute"]["holds"] = brute.holds;
    report["contiguous"] = io::stats_to_json(contiguous.stats);
    report["contiguous"]["holds"] = contiguous.holds;
    report["agree"] = brute.holds == contiguous.holds;
    report["holds"] = contiguous.holds;
    const int code = contiguous.holds ? exit_holds : exit_refuted;
    emit(out, report, code);
    return code;
}

struct GenerateArgs {
    std::string kind;
    std::string nodes;
    std::string xs;
    std::string ys;
    int rows = 0;
    int cols = 0;
    long lo = -5;
    long hi = 5;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string base;
    std::string eps = "0";
    std::string out_path;
    int pad_rows = 1;
    int pad_cols = 1;
};

inline std::vector<Rational> parse_node_list(const std::string& text, const std::string& what) {
    std::vector<Rational> nodes;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) nodes.push_back(Rational::parse(item));
    if (nodes.empty()) throw io::InputError(what + ": empty node list");
    return nodes;
}

inline void write_or_print(const json& payload, const std::string& path, std::ostream& out, json& report) {
    if (path.empty()) {
        out << payload.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw io::InputError(path + ": cannot write");
    f << payload.dump(2) << "\n";
    report["written"].push_back(path);
}

inline int run_generate(const GenerateArgs& args, std::ostream& out) {
    json report;
    report["command"] = "generate";
    report["kind"] = args.kind;
    report["written"] = json::array();

    if (args.kind == "perturbed-hull") {
        if (args.base.empty()) throw io::InputError("generate perturbed-hull: --base FILE is required");
        if (args.out_path.empty()) throw io::InputError("generate perturbed-hull: -o PREFIX is required (writes two files)");
        const Matrix<Rational> base = io::load_matrix(args.base);
        const IntervalHull<Rational> h = perturbed_hull(base, Rational::parse(args.eps));
        std::ofstream fa(args.out_path + ".a.json"), fb(args.out_path + ".b.json");
        if (!fa || !fb) throw io::InputError(args.out_path + ": cannot write hull endpoint files");
        fa << io::matrix_to_json(h.endpoint_a()).dump(2) << "\n";
        fb << io::matrix_to_json(h.endpoint_b()).dump(2) << "\n";
        report["written"].push_back(args.out_path + ".a.json");
        report["written"].push_back(args.out_path + ".b.json");
        out << report.dump(2) << "\n";
        return exit_holds;
    }

    Matrix<Rational> result(1, 1);
    if (args.kind == "vandermonde") {
        if (args.nodes.empty()) throw io::InputError("generate vandermonde: --nodes is required");
        const auto nodes = parse_node_list(args.nodes, "--nodes");
        result = vandermonde(nodes, args.cols > 0 ? args.cols : static_cast<int>(nodes.size()));
    } else if (args.kind == "cauchy") {
        if (args.xs.empty() || args.ys.empty()) throw io::InputError("generate cauchy: --x and --y are required");
        result = cauchy(parse_node_list(args.xs, "--x"), parse_node_list(args.ys, "--y"));
    } else if (args.kind == "zero-padded-tn") {
        if (args.base.empty()) throw io::InputError("generate zero-padded-tn: --base FILE is required");
        result = zero_padded(io::load_matrix(args.base), args.pad_rows, args.pad_cols);
    } else if (args.kind == "random-signed") {
        if (!args.seed_set)
            throw io::InputError("generate random-signed: --seed is required (randomized runs must be reproducible)");
        if (args.rows < 1 || args.cols < 1) throw io::InputError("generate random-signed: --rows and --cols are required");
        Rng rng(args.seed);
        result = sample_integer_matrix<Rational>(rng, args.rows, args.cols, args.lo, args.hi);
    } else {
        throw io::InputError("generate: unknown kind '" + args.kind +
                             "' (expected vandermonde, cauchy, zero-padded-tn, perturbed-hull, random-signed)");
    }

    const ClassLabels labels = classify(result);
    report["labels"] = {{"tp", labels.tp}, {"tn", labels.tn}};
    write_or_print(io::corpus_to_json(result, labels), args.out_path, out, report);
    if (!args.out_path.empty()) out << report.dump(2) << "\n";
    return exit_holds;
}

// Re-validates the certificate embedded in a report without redoing the
// full decision search.
inline int run_verify(const std::string& report_path, std::ostream& out) {
    const json report = io::parse_json(io::read_file(report_path), report_path);
    const std::string command = report.value("command", "");
    const bool holds = report.value("holds", false);

    json result;
    result["command"] = "verify-cert";
    result["report"] = report_path;
    result["verified_command"] = command;

    bool ok = false;
    std::string note;

    auto matrix_of = [&](const char* key) {
        return io::matrix_from_json(report.at(key), std::string(report_path) + ": " + key);
    };

    if (command == "check-tp" || command == "check-tn" || command == "p-matrix") {
        const Matrix<Rational> a = matrix_of("input");
        const Certificate<Rational> cert = io::certificate_from_json(report.at("certificate"), report_path);
        if (io::digest(a) != report.at("input").value("digest", "")) {
            note = "embedded matrix does not match its digest";
        } else if (holds) {
            ok = std::holds_alternative<Pass>(cert);
            note = ok ? "pass verdicts carry no witness; digest and shape re-checked" : "pass verdict with a non-pass certificate";
        } else {
            const MinorSense sense = command == "check-tn" ? MinorSense::require_nonnegative : MinorSense::require_positive;
            ok = !std::holds_alternative<Pass>(cert) && recheck_certificate(a, cert, sense);
            note = ok ? "certificate re-validated against the embedded input" : "certificate failed re-validation";
        }
    } else if (command == "hull-tp" || command == "hull-tn") {
        const Matrix<Rational> a = matrix_of("input_a");
        const Matrix<Rational> b = matrix_of("input_b");
        const IntervalHull<Rational> hull(a, b);
        const Certificate<Rational> cert = io::certificate_from_json(report.at("certificate"), report_path);
        if (holds) {
            ok = std::holds_alternative<Pass>(cert);
            note = ok ? "pass verdicts carry no witness; inputs re-checked" : "pass verdict with a non-pass certificate";
        } else {
            const json& fail = report.at("hull_failure");
            Matrix<Rational> test(1, 1);
            if (command == "hull-tp") {
                auto [plus, minus] = checkerboard_corners(hull);
                test = fail.at("test_matrix").get<std::string>() == "C+" ? plus : minus;
            } else {
                test = hull_test_matrix(hull, fail.at("z").get<std::vector<int>>(),
                                        fail.at("z_prime").get<std::vector<int>>());
            }
            const MinorSense sense =
                command == "hull-tn" ? MinorSense::require_nonnegative : MinorSense::require_positive;
            ok = hull.contains(test) == fail.value("member", false) && recheck_certificate(test, cert, sense);
            note = ok ? "failing test matrix recomputed; inner certificate re-validated"
                      : "hull certificate failed re-validation";
        }
    } else if (command == "pf-check") {
        const json& seq_json = report.at("sequence");
        SeqWindow<Rational> s;
        s.offset = seq_json.at("offset").get<long>();
        s.finite_support = seq_json.value("finite_support", false);
        for (const auto& v : seq_json.at("values")) s.values.push_back(Rational::parse(v.get<std::string>()));
        const Certificate<Rational> cert = io::certificate_from_json(report.at("certificate"), report_path);
        if (holds) {
            ok = std::holds_alternative<Pass>(cert);
            note = ok ? "pass verdicts carry no witness" : "pass verdict with a non-pass certificate";
        } else if (const auto* fm = std::get_if<FailingMinor<Rational>>(&cert)) {
            const auto minor = sequence_minor(s, fm->at.rows, fm->at.cols);
            const bool tp_mode = report.value("pf_mode", "pf") == "tp";
            if (!minor) {
                note = "cited minor is not determined by the sequence window";
            } else {
                const Rational value = det(*minor);
                ok = value == fm->value && (tp_mode ? sign(value) <= 0 : sign(value) < 0);
                note = ok ? "cited Toeplitz minor recomputed exactly" : "cited minor does not reproduce the violation";
            }
        } else {
            note = "unexpected certificate type for pf-check";
        }
    } else if (command == "bench") {
        const Matrix<Rational> a = matrix_of("input");
        ok = io::digest(a) == report.at("input").value("digest", "");
        note = ok ? "bench reports carry statistics only; digest re-checked" : "embedded matrix does not match digest";
    } else {
        note = "unknown command '" + command + "'";
    }

    result["verified"] = ok;
    result["note"] = note;
    const int code = ok ? exit_holds : exit_refuted;
    result["exit_code"] = code;
    out << result.dump(2) << "\n";
    return code;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"certification toolkit for totally positive and totally non-negative matrices"};
    app.require_subcommand(1);

    std::string arith = "exact";
    double epsilon = 1e-9;
    app.add_option("--arith", arith, "scalar arithmetic: exact rationals or float64 with a sign tolerance")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--epsilon", epsilon, "sign tolerance for --arith float (default 1e-9)");

    detail::MatrixCheckArgs tp_args, tn_args, pm_args;
    auto* tp = app.add_subcommand("check-tp", "decide total positivity of order k");
    tp->add_option("file", tp_args.file, "matrix file (JSON or CSV)")->required();
    tp->add_option("-k,--order", tp_args.k, "order k")->required();
    tp->add_option("--method", tp_args.method, "brute | contiguous | certificate")
        ->check(CLI::IsMember({"brute", "contiguous", "certificate"}));

    auto* tn = app.add_subcommand("check-tn", "decide total non-negativity of order k");
    tn->add_option("file", tn_args.file, "matrix file (JSON or CSV)")->required();
    tn->add_option("-k,--order", tn_args.k, "order k")->required();
    tn->add_option("--method", tn_args.method, "brute | certificate")->check(CLI::IsMember({"brute", "certificate"}));
    tn->add_option("--max-minors", tn_args.max_minors, "per-size enumeration cap");
    tn->add_flag("--unlimited", tn_args.unlimited, "lift the enumeration cap");

    auto* pm = app.add_subcommand("p-matrix", "decide whether all principal minors are positive");
    pm->add_option("file", pm_args.file, "matrix file (JSON or CSV)")->required();

    detail::HullArgs hull_tp_args, hull_tn_args;
    auto* htp = app.add_subcommand("hull-tp", "decide total positivity of an entire interval hull");
    htp->add_option("fileA", hull_tp_args.file_a, "first endpoint matrix")->required();
    htp->add_option("fileB", hull_tp_args.file_b, "second endpoint matrix")->required();
    htp->add_option("-k,--order", hull_tp_args.k, "order k")->required();

    auto* htn = app.add_subcommand("hull-tn", "decide total non-negativity of an entire interval hull");
    htn->add_option("fileA", hull_tn_args.file_a, "first endpoint matrix")->required();
    htn->add_option("fileB", hull_tn_args.file_b, "second endpoint matrix")->required();
    htn->add_option("-k,--order", hull_tn_args.k, "order k")->required();
    htn->add_option("--budget", hull_tn_args.budget, "largest admissible test family (default 2^20)");
    htn->add_flag("--force", hull_tn_args.force, "enumerate past the budget");
    htn->add_option("--max-minors", hull_tn_args.max_minors, "per-size enumeration cap for each test matrix");
    htn->add_flag("--unlimited", hull_tn_args.unlimited, "lift the enumeration cap");

    detail::PfArgs pf_args;
    auto* pf = app.add_subcommand("pf-check", "check a sequence window for the order-k frequency property");
    pf->add_option("file", pf_args.file, "sequence file (JSON)")->required();
    pf->add_option("-k,--order", pf_args.k, "order k")->required();
    pf->add_option("--mode", pf_args.mode, "pf (minors >= 0) | tp (minors > 0)")->check(CLI::IsMember({"pf", "tp"}));

    std::string bench_file;
    int bench_k = 1;
    auto* bench = app.add_subcommand("bench", "compare brute-force and contiguous minor counts");
    bench->add_option("file", bench_file, "matrix file (JSON or CSV)")->required();
    bench->add_option("-k,--order", bench_k, "order k")->required();

    detail::GenerateArgs gen_args;
    auto* gen = app.add_subcommand("generate", "construct labeled test matrices and hulls");
    gen->add_option("kind", gen_args.kind, "vandermonde | cauchy | zero-padded-tn | perturbed-hull | random-signed")
        ->required();
    gen->add_option("--nodes", gen_args.nodes, "comma list of rational nodes (vandermonde)");
    gen->add_option("--x", gen_args.xs, "comma list of rational nodes (cauchy rows)");
    gen->add_option("--y", gen_args.ys, "comma list of rational nodes (cauchy cols)");
    gen->add_option("--rows", gen_args.rows, "row count (random-signed)");
    gen->add_option("--cols", gen_args.cols, "column count");
    gen->add_option("--lo", gen_args.lo, "smallest entry (random-signed)");
    gen->add_option("--hi", gen_args.hi, "largest entry (random-signed)");
    auto* seed_opt = gen->add_option("--seed", gen_args.seed, "random seed (required for randomized kinds)");
    gen->add_option("--base", gen_args.base, "base matrix file (zero-padded-tn, perturbed-hull)");
    gen->add_option("--eps", gen_args.eps, "perturbation radius as a rational (perturbed-hull)");
    gen->add_option("--pad-rows", gen_args.pad_rows, "zero rows to append");
    gen->add_option("--pad-cols", gen_args.pad_cols, "zero columns to append");
    gen->add_option("-o,--output", gen_args.out_path, "output file (or prefix for perturbed-hull)");

    std::string verify_file;
    auto* verify = app.add_subcommand("verify-cert", "re-validate the certificate inside a report");
    verify->add_option("report", verify_file, "report JSON produced by a check command")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_holds;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }
    gen_args.seed_set = seed_opt->count() > 0;

    auto dispatch = [&]<ScalarType S>() -> int {
        if (app.got_subcommand(tp)) return detail::run_matrix_check<S>("check-tp", tp_args, out);
        if (app.got_subcommand(tn)) return detail::run_matrix_check<S>("check-tn", tn_args, out);
        if (app.got_subcommand(pm)) return detail::run_matrix_check<S>("p-matrix", pm_args, out);
        if (app.got_subcommand(htp)) return detail::run_hull_check<S>("hull-tp", hull_tp_args, out);
        if (app.got_subcommand(htn)) return detail::run_hull_check<S>("hull-tn", hull_tn_args, out);
        if (app.got_subcommand(pf)) return detail::run_pf_check<S>(pf_args, out);
        if (app.got_subcommand(bench)) return detail::run_bench<S>(bench_file, bench_k, out);
        if (app.got_subcommand(gen)) return detail::run_generate(gen_args, out);
        if (app.got_subcommand(verify)) return detail::run_verify(verify_file, out);
        err << "usage error: no subcommand\n";
        return exit_usage;
    };

    try {
        if (arith == "float") {
            FloatScalar::epsilon = epsilon;
            return dispatch.template operator()<FloatScalar>();
        }
        return dispatch.template operator()<Rational>();
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const io::InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace tpcert::cli
