#pragma once

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "euc/analyzer.hpp"
#include "euc/checker.hpp"
#include "euc/error.hpp"
#include "euc/model_test.hpp"
#include "euc/render.hpp"
#include "euc/theory.hpp"

#ifndef EUC_DATA_DIR
#define EUC_DATA_DIR "data"
#endif

namespace euc {

enum ExitStatus { kSuccess = 0, kVerificationFailure = 1, kInputFailure = 2 };

/// Every knob of one invocation; echoed into each report.
struct RunConfig {
    std::string command;
    std::string target; // proof file, or item label for model-test
    std::vector<std::string> theory;
    std::string master;
    std::string proofs;
    std::string vocabulary;
    int depth = 3;
    int trials = 1000;
    std::uint64_t seed = 1;
    double epsilon = 1e-9;
    bool strict = false;
    bool exact_only = false;
    std::string format = "text"; // export: json | text
    bool prose = false;
    std::string report = "text"; // report style for every command: text | json
    std::string output;

    void validate() const {
        auto fail = [](const std::string& m) { throw Error(ErrorKind::SyntaxError, "configuration: " + m); };
        if (depth < 1) fail("closure depth must be at least 1");
        if (trials < 1) fail("trials must be at least 1");
        if (!(epsilon > 0)) fail("epsilon must be positive");
        if (format != "json" && format != "text") fail("format must be json or text");
        if (report != "json" && report != "text") fail("report must be json or text");
    }

    nlohmann::ordered_json to_json() const {
        return {{"command", command}, {"target", target},   {"theory", theory},   {"master", master},
                {"proofs", proofs},   {"depth", depth},     {"trials", trials},   {"seed", seed},
                {"epsilon", epsilon}, {"strict", strict},   {"exact_only", exact_only},
                {"format", format},   {"report", report}};
    }
};

namespace detail {

inline std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

inline std::string data_dir() { return env_or("EUC_DATA", EUC_DATA_DIR); }

inline Registry load(const RunConfig& c) {
    std::vector<std::filesystem::path> paths(c.theory.begin(), c.theory.end());
    std::optional<std::filesystem::path> master;
    if (!c.master.empty()) master = c.master;
    return load_registry(paths, master);
}

/// Formulas visible just before line n: those in the blocks still open there.
inline std::vector<const ProofLine*> visible_before(const Proof& p, int n) {
    std::vector<std::vector<const ProofLine*>> scopes(1);
    for (const auto& l : p.lines) {
        if (l.number >= n) break;
        switch (l.justification) {
        case Justification::Assumption:
            scopes.emplace_back();
            scopes.back().push_back(&l);
            break;
        case Justification::CasesOpen: scopes.emplace_back(); break;
        case Justification::CaseOpen:
            scopes.emplace_back();
            scopes.back().push_back(&l);
            break;
        case Justification::QedCase: scopes.pop_back(); break;
        case Justification::Reductio:
        case Justification::CasesClose:
            scopes.pop_back();
            scopes.back().push_back(&l);
            break;
        default: scopes.back().push_back(&l);
        }
    }
    std::vector<const ProofLine*> out;
    for (const auto& s : scopes) out.insert(out.end(), s.begin(), s.end());
    return out;
}

inline std::string label_of(const std::string& file) { return std::filesystem::path(file).stem().string(); }

class Runner {
public:
    Runner(const RunConfig& c, std::ostream& out, std::ostream& err) : c_(c), out_(out), err_(err) {}

    int run() {
        c_.validate();
        if (c_.command == "check") return check();
        if (c_.command == "check-all") return check_all();
        if (c_.command == "analyze") return analyze();
        if (c_.command == "export") return export_doc();
        if (c_.command == "model-test") return model_test();
        throw Error(ErrorKind::SyntaxError, "unknown command " + c_.command);
    }

private:
    bool json() const { return c_.report == "json"; }

    void emit(nlohmann::ordered_json j) {
        j["config"] = c_.to_json();
        out_ << j.dump(2) << "\n";
    }

    void echo_config() { out_ << "# config " << c_.to_json().dump() << "\n"; }

    CheckReport check_file(const Registry& reg, const std::string& file) {
        if (!std::filesystem::exists(file)) throw Error(ErrorKind::MissingProofFile, "no proof file " + file);
        return check_proof_text(reg, label_of(file), read_text_file(file), CheckOptions{c_.depth});
    }

    void describe_failure(const CheckReport& r, std::ostream& o) {
        for (const auto& d : r.errors) o << "  " << to_string(d.kind) << ": " << d.message << "\n";
        const Diagnostic& first = r.errors.front();
        if (first.number == 0) return;
        o << "  first failing line " << first.number << " (file line " << first.source_line << "): "
          << print_formula(r.proof.line(first.number).formula) << "\n";
        o << "  available there:\n";
        for (const ProofLine* l : visible_before(r.proof, first.number))
            o << "    " << l->number << "  " << to_infix(l->formula) << "\n";
    }

    static nlohmann::ordered_json report_json(const CheckReport& r) {
        nlohmann::ordered_json errs = nlohmann::ordered_json::array();
        for (const auto& d : r.errors)
            errs.push_back({{"kind", to_string(d.kind)}, {"line", d.number}, {"source_line", d.source_line},
                            {"message", d.message}});
        return {{"target", r.target},
                {"accepted", r.accepted},
                {"inferences", r.inferences},
                {"lines", r.proof.lines.size()},
                {"citations", r.citations},
                {"errors", errs}};
    }

    int check() {
        Registry reg = load(c_);
        auto t0 = std::chrono::steady_clock::now();
        CheckReport r = check_file(reg, c_.target);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (json()) {
            auto j = report_json(r);
            j["milliseconds"] = ms;
            emit(j);
        } else {
            echo_config();
            if (r.accepted) {
                out_ << r.target << ": accepted, " << r.inferences << " inferences, " << r.proof.lines.size()
                     << " lines\n";
            } else {
                out_ << r.target << ": rejected\n";
                describe_failure(r, out_);
            }
        }
        return r.accepted ? kSuccess : kVerificationFailure;
    }

    int check_all() {
        if (c_.master.empty()) throw Error(ErrorKind::MissingLabel, "check-all needs --master");
        Registry reg = load(c_);
        std::filesystem::path dir = c_.proofs.empty() ? std::filesystem::path(c_.master).parent_path()
                                                      : std::filesystem::path(c_.proofs);
        std::vector<CheckReport> reports;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        bool all = true, missing = false;
        if (!json()) echo_config();
        for (std::size_t i = 0; i < reg.master().size(); ++i) {
            const std::string& label = reg.master()[i];
            std::filesystem::path file = dir / (label + ".prf");
            nlohmann::ordered_json row = {{"index", i}, {"label", label}};
            std::string verdict;
            int inferences = 0, unused = 0;
            if (!std::filesystem::exists(file)) {
                missing = true;
                verdict = "missing";
                row["error"] = std::string(to_string(ErrorKind::MissingProofFile));
            } else {
                try {
                    CheckReport r = check_file(reg, file.string());
                    verdict = r.accepted ? "accepted" : "rejected";
                    inferences = r.inferences;
                    if (r.accepted) unused = static_cast<int>(find_unused_lines(build_line_graph(r)).size());
                    else row["errors"] = report_json(r)["errors"];
                    if (r.accepted) reports.push_back(std::move(r));
                } catch (const Error& e) {
                    missing = missing || e.kind() == ErrorKind::MissingProofFile;
                    verdict = "error";
                    row["error"] = std::string(to_string(e.kind())) + ": " + e.what();
                }
            }
            all = all && verdict == "accepted";
            row["verdict"] = verdict;
            row["inferences"] = inferences;
            row["unused"] = unused;
            if (!json()) {
                out_ << i + 1 << "  " << label << "  " << verdict << "  " << inferences << " inferences  " << unused
                     << " unused\n";
                if (row.contains("error")) out_ << "  " << row["error"].get<std::string>() << "\n";
                if (row.contains("errors"))
                    for (const auto& e : row["errors"]) out_ << "  " << e["kind"].get<std::string>() << ": "
                                                              << e["message"].get<std::string>() << "\n";
            }
            rows.push_back(row);
        }
        if (all) build_corpus_graph(reg, reports);
        if (json()) emit({{"items", rows}, {"all_accepted", all}});
        else out_ << (all ? "all accepted" : "not all accepted") << "\n";
        if (missing) return kInputFailure;
        return all ? kSuccess : kVerificationFailure;
    }

    int analyze() {
        Registry reg = load(c_);
        CheckReport r = check_file(reg, c_.target);
        if (!r.accepted) {
            if (json()) emit(report_json(r));
            else {
                echo_config();
                out_ << r.target << ": rejected, nothing to analyze\n";
                describe_failure(r, out_);
            }
            return kVerificationFailure;
        }
        DependencyGraph g = build_line_graph(r);
        std::vector<int> unused = find_unused_lines(g);
        std::set<int> unused_src = unused_source_lines(r);
        if (json()) {
            auto j = report_json(r);
            j["unused_lines"] = unused;
            j["unused_source_lines"] = unused_src;
            nlohmann::ordered_json edges = nlohmann::ordered_json::object();
            for (const auto& v : r.lines) edges[std::to_string(v.number)] = v.sources;
            j["dependencies"] = edges;
            emit(j);
        } else {
            echo_config();
            out_ << r.target << ": " << r.inferences << " inferences\n";
            out_ << "unused lines:";
            for (int n : unused) out_ << " " << n;
            out_ << (unused.empty() ? " none\n" : "\n");
            out_ << "citations:";
            for (const auto& q : r.citations) out_ << " " << q;
            out_ << "\ndependencies:\n" << graph_adjacency(g);
        }
        return kSuccess;
    }

    int export_doc() {
        Vocabulary vocab = load_vocabulary(c_.vocabulary);
        ProofDocument doc;
        if (std::filesystem::path(c_.target).extension() == ".json") {
            doc = import_json(read_text_file(c_.target));
        } else {
            Registry reg = load(c_);
            CheckReport r = check_file(reg, c_.target);
            if (!r.accepted) {
                err_ << r.target << ": rejected, export refused\n";
                describe_failure(r, err_);
                return kVerificationFailure;
            }
            doc = make_document(reg, r);
        }
        std::string text = c_.format == "json"
                               ? export_json(doc)
                               : render_text(doc, vocab, c_.prose ? TextStyle::Prose : TextStyle::Formula);
        if (c_.output.empty()) {
            out_ << text;
        } else {
            std::ofstream f(c_.output, std::ios::binary);
            if (!(f << text)) throw Error(ErrorKind::IoError, "cannot write " + c_.output);
        }
        return kSuccess;
    }

    int model_test() {
        Registry reg = load(c_);
        ModelOptions opt;
        opt.trials = c_.trials;
        opt.seed = c_.seed;
        opt.epsilon = c_.epsilon;
        opt.exact_only = c_.exact_only;
        std::vector<const TheoryItem*> items;
        if (c_.target == "all") {
            for (const auto& item : reg.items()) items.push_back(&item);
        } else {
            items.push_back(&reg.lookup(c_.target));
        }
        bool failed = false;
        nlohmann::ordered_json reports = nlohmann::ordered_json::array();
        if (!json()) echo_config();
        for (const TheoryItem* item : items) {
            try {
                TestReport r = test_item(*item, opt);
                bool bad = r.status == TestStatus::Violated || r.status == TestStatus::NoSamples ||
                           (c_.strict && (r.status == TestStatus::Unsupported ||
                                          r.status == TestStatus::MissingConstructor));
                failed = failed || bad;
                if (json()) {
                    reports.push_back(euc::to_json(r));
                } else {
                    out_ << format_report(r);
                    if (r.status == TestStatus::Violated)
                        out_ << "  countermodel: " << r.violations.front().assignment << "\n";
                }
            } catch (const Error& e) {
                failed = true;
                if (json()) reports.push_back({{"label", item->qualified()}, {"status", "error"},
                                               {"error", to_string(e.kind())}, {"reason", e.what()}});
                else out_ << item->qualified() << ": error " << to_string(e.kind()) << " - " << e.what() << "\n";
            }
        }
        if (json()) emit({{"reports", reports}});
        return failed ? kVerificationFailure : kSuccess;
    }

    RunConfig c_;
    std::ostream& out_;
    std::ostream& err_;
};

} // namespace detail

/// Parses arguments (argv[0] excluded) and runs the command. Never throws.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Checker, analyzer, exporter and plane model tester for Euc proofs", "euc"};
    app.set_config("--config", "", "read options from a TOML/INI file; flags given on the command line win");
    app.require_subcommand(1);
    app.add_option("--theory", c.theory, "theory file or directory (repeatable)");
    app.add_option("--master", c.master, "master list file");
    app.add_option("--proofs", c.proofs, "proof directory for check-all (default: the master list's directory)");
    app.add_option("--vocabulary", c.vocabulary, "wording table for text export");
    app.add_option("--depth", c.depth, "closure depth for unjustified lines");
    app.add_option("--report", c.report, "report style: text or json");

    auto* check = app.add_subcommand("check", "check one proof file");
    check->add_option("file", c.target)->required();
    app.add_subcommand("check-all", "check every master-list entry in order");
    auto* analyze = app.add_subcommand("analyze", "dependency analysis of one proof");
    analyze->add_option("file", c.target)->required();
    auto* exp = app.add_subcommand("export", "export a proof as JSON or text");
    exp->add_option("file", c.target, "proof file, or a JSON dump to re-render")->required();
    exp->add_option("--format", c.format, "json or text");
    exp->add_flag("--prose", c.prose, "read atoms aloud using the vocabulary");
    exp->add_option("--output,-o", c.output, "write to a file instead of stdout");
    auto* mt = app.add_subcommand("model-test", "randomized check of theory items in the rational plane");
    mt->add_option("label", c.target, "item label, or 'all'")->required();
    mt->add_option("--trials", c.trials, "hypothesis-satisfying samples per item");
    mt->add_option("--seed", c.seed, "random seed");
    mt->add_option("--epsilon", c.epsilon, "tolerance of the approximate backend");
    mt->add_flag("--strict", c.strict, "unsupported items fail the run");
    mt->add_flag("--exact-only", c.exact_only, "refuse irrational witnesses");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputFailure;
    }
    for (auto* sub : app.get_subcommands()) c.command = sub->get_name();
    if (c.theory.empty()) c.theory = {detail::env_or("EUC_THEORY", detail::data_dir() + "/theory")};
    if (c.master.empty()) c.master = detail::env_or("EUC_MASTER", "");
    if (c.vocabulary.empty()) c.vocabulary = detail::data_dir() + "/vocabulary.txt";
    try {
        return detail::Runner(c, out, err).run();
    } catch (const Error& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return kInputFailure;
    }
}

} // namespace euc
