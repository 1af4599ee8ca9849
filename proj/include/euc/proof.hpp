#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "euc/error.hpp"
#include "euc/formula.hpp"
#include "euc/theory.hpp"

namespace euc {

enum class Justification { Unjustified, Cited, Assumption, Reductio, CasesOpen, CaseOpen, QedCase, CasesClose };

inline std::string_view to_string(Justification j) {
    switch (j) {
    case Justification::Unjustified: return "unjustified";
    case Justification::Cited: return "cited";
    case Justification::Assumption: return "assumption";
    case Justification::Reductio: return "reductio";
    case Justification::CasesOpen: return "cases-open";
    case Justification::CaseOpen: return "case";
    case Justification::QedCase: return "qedcase";
    case Justification::CasesClose: return "cases-close";
    }
    return "";
}

struct ProofLine {
    int number = 0;      // 1-based position among the proof's lines
    int source_line = 0; // 1-based line in the file
    int depth = 0;       // block nesting used for rendering
    Formula formula;     // for qedcase: the case goal
    Justification justification = Justification::Unjustified;
    ItemKind cited_kind = ItemKind::Axiom;
    std::string label;
    std::vector<Formula> disjuncts; // cases-open only
    int case_index = 0;             // case and qedcase
    int opener = 0;                 // number of the line that opened this line's block, 0 if none
};

struct Proof {
    std::string target_label;
    std::size_t hypothesis_count = 0;
    std::vector<ProofLine> lines;

    const ProofLine& line(int number) const { return lines.at(static_cast<std::size_t>(number - 1)); }
};

namespace detail {

inline Formula parse_proof_formula(std::string_view s, int line) {
    try {
        return parse_formula(s);
    } catch (const Error& e) {
        throw Error(e.kind(), "line " + std::to_string(line) + ": " + e.what(), line);
    }
}

inline std::vector<Formula> parse_disjuncts(std::string_view s, int line) {
    // "D1|D2|...|Dn" reads like the parts of an OR
    Formula f = parse_proof_formula("OR" + std::string(s), line);
    return f.parts();
}

struct OpenBlock {
    Justification kind; // Assumption, CasesOpen or CaseOpen
    int number;
    int depth;
    std::size_t disjuncts = 0;
    int cases_seen = 0;
};

} // namespace detail

/// Parses a .prf text. Hypothesis lines are the first
/// target.hypotheses.size() lines; the next line must be justified unless it
/// is the last line of the proof.
inline Proof parse_proof(std::string_view text, const TheoryItem& target) {
    Proof proof;
    proof.target_label = target.label;
    proof.hypothesis_count = target.hypotheses.size();
    std::vector<detail::OpenBlock> stack;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;

    auto fail = [](ErrorKind k, int line, const std::string& what) -> Error {
        return Error(k, "line " + std::to_string(line) + ": " + what, line);
    };

    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto b = raw.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = raw.find_last_not_of(" \t");
        std::string body = raw.substr(b, e - b + 1);

        ProofLine pl;
        pl.number = static_cast<int>(proof.lines.size()) + 1;
        pl.source_line = lineno;
        pl.depth = stack.empty() ? 0 : stack.back().depth;

        std::string head = body;
        std::string rest;
        if (auto sp = body.find_first_of(" \t"); sp != std::string::npos) {
            head = body.substr(0, sp);
            rest = body.substr(body.find_first_not_of(" \t", sp));
        }

        if (!stack.empty() && (stack.back().kind == Justification::CasesOpen) && head != "case" &&
            !(rest == "cases"))
            throw fail(ErrorKind::UnbalancedBlocks, lineno, "expected 'case' or the closing 'cases' line");

        if (head == "cases" && !rest.empty()) {
            auto colon = rest.find(':');
            if (colon == std::string::npos || rest.find_first_of(" \t") != std::string::npos)
                throw fail(ErrorKind::SyntaxError, lineno, "expected 'cases GOAL:D1|...|Dn'");
            pl.justification = Justification::CasesOpen;
            pl.formula = detail::parse_proof_formula(rest.substr(0, colon), lineno);
            pl.disjuncts = detail::parse_disjuncts(rest.substr(colon + 1), lineno);
            stack.push_back({Justification::CasesOpen, pl.number, pl.depth + 1, pl.disjuncts.size(), 0});
        } else if (head == "case") {
            auto colon = rest.find(':');
            if (colon == std::string::npos)
                throw fail(ErrorKind::SyntaxError, lineno, "expected 'case i:D'");
            if (stack.empty() || stack.back().kind != Justification::CasesOpen)
                throw fail(ErrorKind::UnbalancedBlocks, lineno, "'case' outside a cases block");
            std::string idx = rest.substr(0, colon);
            if (idx.empty() || idx.size() > 3 || idx.find_first_not_of("0123456789") != std::string::npos)
                throw fail(ErrorKind::BadCaseIndex, lineno, "case index '" + idx + "' is not a number");
            int i = std::stoi(idx);
            auto& cases = stack.back();
            if (i < 1 || static_cast<std::size_t>(i) > cases.disjuncts)
                throw fail(ErrorKind::BadCaseIndex, lineno,
                           "case index " + idx + " outside 1.." + std::to_string(cases.disjuncts));
            pl.justification = Justification::CaseOpen;
            pl.case_index = i;
            pl.opener = cases.number;
            pl.formula = detail::parse_proof_formula(rest.substr(colon + 1), lineno);
            ++cases.cases_seen;
            stack.push_back({Justification::CaseOpen, pl.number, cases.depth + 1, 0, i});
        } else if (body == "qedcase") {
            if (stack.empty() || stack.back().kind != Justification::CaseOpen)
                throw fail(ErrorKind::UnbalancedBlocks, lineno, "'qedcase' without an open case");
            pl.justification = Justification::QedCase;
            pl.opener = stack.back().number;
            pl.case_index = stack.back().cases_seen;
            pl.depth = stack.back().depth - 1;
            stack.pop_back();
            const ProofLine& cases_line = proof.line(stack.back().number);
            pl.formula = cases_line.formula;
        } else {
            pl.formula = detail::parse_proof_formula(head, lineno);
            if (rest.empty()) {
                pl.justification = Justification::Unjustified;
            } else if (rest == "assumption") {
                pl.justification = Justification::Assumption;
                stack.push_back({Justification::Assumption, pl.number, pl.depth + 1});
            } else if (rest == "reductio") {
                if (stack.empty() || stack.back().kind != Justification::Assumption)
                    throw fail(ErrorKind::UnbalancedBlocks, lineno, "'reductio' without an open assumption");
                pl.justification = Justification::Reductio;
                pl.opener = stack.back().number;
                stack.pop_back();
                pl.depth = stack.empty() ? 0 : stack.back().depth;
            } else if (rest == "cases") {
                if (stack.empty() || stack.back().kind != Justification::CasesOpen)
                    throw fail(ErrorKind::UnbalancedBlocks, lineno, "closing 'cases' without an open cases block");
                pl.justification = Justification::CasesClose;
                pl.opener = stack.back().number;
                stack.pop_back();
                pl.depth = stack.empty() ? 0 : stack.back().depth;
            } else {
                auto colon = rest.find(':');
                std::optional<ItemKind> kind;
                if (colon != std::string::npos) kind = parse_item_kind(rest.substr(0, colon));
                std::string label = colon == std::string::npos ? "" : rest.substr(colon + 1);
                if (!kind || label.empty() || label.find_first_of(" \t") != std::string::npos)
                    throw fail(ErrorKind::SyntaxError, lineno, "bad justification '" + rest + "'");
                pl.justification = Justification::Cited;
                pl.cited_kind = *kind;
                pl.label = label;
            }
        }
        proof.lines.push_back(std::move(pl));
    }
    if (!stack.empty())
        throw fail(ErrorKind::UnbalancedBlocks, proof.line(stack.back().number).source_line,
                   "block opened here is never closed");
    const std::size_t h = proof.hypothesis_count;
    if (proof.lines.size() > h + 1 && proof.lines[h].justification == Justification::Unjustified)
        throw fail(ErrorKind::MissingJustificationOnFirstStep, proof.lines[h].source_line,
                   "the first line after the hypotheses needs a justification");
    return proof;
}

} // namespace euc
