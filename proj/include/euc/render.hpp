#pragma once

#include <filesystem>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "euc/checker.hpp"
#include "euc/error.hpp"
#include "euc/formula.hpp"
#include "euc/infix.hpp"
#include "euc/proof.hpp"
#include "euc/theory.hpp"

namespace euc {

inline constexpr std::string_view kProofFormat = "euc-proof/1";

// ---------------------------------------------------------------- vocabulary

struct Vocabulary {
    std::map<ItemKind, std::string> kinds;      // citation phrase per kind
    std::map<std::string, std::string> atoms;   // predicate -> template with $1..$9

    std::string phrase(ItemKind k) const {
        auto it = kinds.find(k);
        return it == kinds.end() ? std::string(prose_name(k)) : it->second;
    }
};

inline Vocabulary parse_vocabulary(std::string_view text) {
    Vocabulary v;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        if (raw.empty() || raw[0] == '#') continue;
        auto sp = raw.find(' ');
        if (sp == std::string::npos || sp + 1 >= raw.size())
            throw Error(ErrorKind::SyntaxError, "vocabulary line " + std::to_string(lineno) + ": missing phrase", lineno);
        std::string key = raw.substr(0, sp), phrase = raw.substr(sp + 1);
        if (key[0] == '@') {
            auto kind = parse_item_kind(key.substr(1));
            if (!kind)
                throw Error(ErrorKind::SyntaxError, "vocabulary line " + std::to_string(lineno) + ": unknown kind " + key,
                            lineno);
            v.kinds[*kind] = phrase;
        } else {
            if (!find_signature(key))
                throw Error(ErrorKind::UnknownPredicate, "vocabulary line " + std::to_string(lineno) + ": " + key, lineno);
            v.atoms[key] = phrase;
        }
    }
    return v;
}

inline Vocabulary load_vocabulary(const std::filesystem::path& path) { return parse_vocabulary(read_text_file(path)); }

// ---------------------------------------------------------------- documents

/// A checked proof with everything needed to render it: the target statement
/// and, per line, the checker's verdict.
struct ProofDocument {
    ItemKind target_kind = ItemKind::Lemma;
    std::string target_label;
    std::string statement; // "forall ..., H ==> C" as in theory files
    bool accepted = false;
    int inferences = 0;
    int depth = 3;
    Proof proof;
    std::vector<LineVerdict> verdicts; // parallel to proof.lines
};

/// Statement part of a serialized item, without the kindline.
inline std::string statement_text(const TheoryItem& item) {
    std::string s = serialize_item(item);
    s = s.substr(s.find('\n') + 1);
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

inline ProofDocument make_document(const Registry& reg, const CheckReport& report) {
    if (!report.accepted) {
        std::string why = report.errors.empty() ? "" : ": " + report.errors.front().message;
        throw Error(ErrorKind::RejectedProof, "refusing to export the rejected proof of " + report.target + why);
    }
    const TheoryItem& target = find_target(reg, report.target);
    ProofDocument d;
    d.target_kind = target.kind;
    d.target_label = target.label;
    d.statement = statement_text(target);
    d.accepted = true;
    d.inferences = report.inferences;
    d.depth = report.depth;
    d.proof = report.proof;
    d.verdicts = report.lines;
    return d;
}

// ---------------------------------------------------------------- .prf text

/// Canonical .prf text: one space of indentation per block level.
inline std::string serialize_proof(const Proof& proof) {
    std::string out;
    for (const auto& l : proof.lines) {
        out += std::string(static_cast<std::size_t>(l.depth), ' ');
        switch (l.justification) {
        case Justification::Unjustified: out += print_formula(l.formula); break;
        case Justification::Cited:
            out += print_formula(l.formula) + " " + std::string(keyword(l.cited_kind)) + ":" + l.label;
            break;
        case Justification::Assumption: out += print_formula(l.formula) + " assumption"; break;
        case Justification::Reductio: out += print_formula(l.formula) + " reductio"; break;
        case Justification::CasesOpen: {
            out += "cases " + print_formula(l.formula) + ":";
            for (std::size_t i = 0; i < l.disjuncts.size(); ++i)
                out += (i ? "|" : "") + print_formula(l.disjuncts[i]);
            break;
        }
        case Justification::CaseOpen:
            out += "case " + std::to_string(l.case_index) + ":" + print_formula(l.formula);
            break;
        case Justification::QedCase: out += "qedcase"; break;
        case Justification::CasesClose: out += print_formula(l.formula) + " cases"; break;
        }
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------- text

enum class TextStyle { Formula, Prose };

namespace detail {

inline std::string prose_formula(const Formula& f, const Vocabulary& v) {
    switch (f.kind()) {
    case Formula::Kind::Atom: {
        auto it = v.atoms.find(std::string(f.predicate()));
        if (it == v.atoms.end()) return to_infix(f);
        std::string out;
        const std::string& t = it->second;
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t[i] == '$' && i + 1 < t.size() && t[i + 1] >= '1' && t[i + 1] <= '9') {
                auto k = static_cast<std::size_t>(t[i + 1] - '1');
                if (k < f.args().size()) out.push_back(f.args()[k]);
                ++i;
            } else {
                out.push_back(t[i]);
            }
        }
        return out;
    }
    case Formula::Kind::Not: {
        std::string s = prose_formula(f.operand(), v);
        return "it is not the case that " + (f.operand().is_junction() ? "(" + s + ")" : s);
    }
    default: {
        std::string out;
        const char* sep = f.is_and() ? ", and " : ", or ";
        for (std::size_t i = 0; i < f.parts().size(); ++i) {
            const Formula& p = f.parts()[i];
            std::string s = prose_formula(p, v);
            if (p.is_junction()) s = "(" + s + ")";
            out += (i ? sep : "") + s;
        }
        return out;
    }
    }
}

inline std::string join_witnesses(const std::string& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += i + 1 == w.size() ? " and " : ", ";
        out.push_back(w[i]);
    }
    return out;
}

constexpr int kIndent = 4;

} // namespace detail

/// Numbered natural-deduction text, one numbered step per proof line. With
/// the formula style the text reads back into the same line list.
inline std::string render_text(const ProofDocument& d, const Vocabulary& v, TextStyle style = TextStyle::Formula) {
    auto fm = [&](const Formula& f) {
        return style == TextStyle::Prose ? detail::prose_formula(f, v) : to_infix(f);
    };
    std::ostringstream out;
    out << prose_name(d.target_kind) << " " << d.target_label << ": " << d.statement << "\n";
    out << "Proof.\n";
    const auto& lines = d.proof.lines;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const ProofLine& l = lines[i];
        const LineVerdict* verdict = i < d.verdicts.size() ? &d.verdicts[i] : nullptr;
        std::string pad(static_cast<std::size_t>(l.depth * detail::kIndent), ' ');
        std::string num = std::to_string(l.number) + ". ";
        if (l.justification == Justification::Reductio) {
            std::string inner(static_cast<std::size_t>((l.depth + 1) * detail::kIndent), ' ');
            out << inner << "We have a contradiction.\n" << pad << "}\n";
        }
        out << pad << num;
        switch (l.justification) {
        case Justification::Unjustified:
            out << fm(l.formula) << (i < d.proof.hypothesis_count ? " by hypothesis." : ".");
            break;
        case Justification::Cited: {
            if (verdict && !verdict->witnesses.empty())
                out << "Let " << detail::join_witnesses(verdict->witnesses) << " be such that ";
            out << fm(l.formula) << " by " << v.phrase(l.cited_kind) << " " << l.label << ".";
            break;
        }
        case Justification::Assumption:
            out << "Let show that " << fm(l.formula) << " does not hold by contradiction:\n" << pad << "{";
            break;
        case Justification::Reductio: out << fm(l.formula) << " by reductio."; break;
        case Justification::CasesOpen: {
            Formula disj = l.disjuncts.size() == 1 ? l.disjuncts.front() : Formula::disjunction(l.disjuncts);
            out << "We prove " << fm(l.formula) << " by cases on " << fm(disj) << ":";
            break;
        }
        case Justification::CaseOpen: out << "Case " << l.case_index << ": " << fm(l.formula) << "."; break;
        case Justification::QedCase: out << "This completes case " << l.case_index << "."; break;
        case Justification::CasesClose: out << fm(l.formula) << " by cases."; break;
        }
        out << "\n";
    }
    out << "QED.\n";
    return out.str();
}

namespace detail {

inline bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }
inline bool ends_with(std::string_view s, std::string_view p) {
    return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

inline std::string polish_of(std::string_view infix) { return print_formula(parse_infix(infix)); }

} // namespace detail

/// Reads formula-style rendered text back into .prf text.
inline std::string rendered_to_prf(std::string_view text, const Vocabulary& v) {
    using detail::ends_with;
    using detail::polish_of;
    using detail::starts_with;
    std::istringstream in{std::string(text)};
    std::string raw, out;
    int lineno = 0;
    auto bad = [&](const std::string& why) {
        return Error(ErrorKind::SyntaxError, "rendered line " + std::to_string(lineno) + ": " + why, lineno);
    };
    while (std::getline(in, raw)) {
        ++lineno;
        auto b = raw.find_first_not_of(' ');
        if (b == std::string::npos) continue;
        std::string s = raw.substr(b);
        auto dot = s.find(". ");
        if (dot == std::string::npos || dot == 0 || s.substr(0, dot).find_first_not_of("0123456789") != std::string::npos)
            continue; // header, braces, closing remarks
        int depth = static_cast<int>(b) / detail::kIndent;
        std::string r = s.substr(dot + 2), line;
        auto drop = [&](std::string_view head, std::string_view tail) {
            return r.substr(head.size(), r.size() - head.size() - tail.size());
        };
        if (ends_with(r, " by hypothesis.")) {
            line = polish_of(drop("", " by hypothesis."));
        } else if (starts_with(r, "Let show that ") && ends_with(r, " does not hold by contradiction:")) {
            line = polish_of(drop("Let show that ", " does not hold by contradiction:")) + " assumption";
        } else if (ends_with(r, " by reductio.")) {
            line = polish_of(drop("", " by reductio.")) + " reductio";
        } else if (ends_with(r, " by cases.")) {
            line = polish_of(drop("", " by cases.")) + " cases";
        } else if (starts_with(r, "We prove ") && ends_with(r, ":")) {
            auto on = r.find(" by cases on ");
            if (on == std::string::npos) throw bad("cases line without 'by cases on'");
            std::string goal = r.substr(9, on - 9), disj = r.substr(on + 13, r.size() - on - 14);
            Formula df = parse_infix(disj);
            line = "cases " + polish_of(goal) + ":";
            if (df.is_or()) {
                for (std::size_t i = 0; i < df.parts().size(); ++i) line += (i ? "|" : "") + print_formula(df.parts()[i]);
            } else {
                line += print_formula(df);
            }
        } else if (starts_with(r, "Case ") && ends_with(r, ".")) {
            auto colon = r.find(": ");
            if (colon == std::string::npos) throw bad("case line without ':'");
            line = "case " + r.substr(5, colon - 5) + ":" + polish_of(r.substr(colon + 2, r.size() - colon - 3));
        } else if (starts_with(r, "This completes case ")) {
            line = "qedcase";
        } else if (auto by = r.rfind(" by "); by != std::string::npos && ends_with(r, ".")) {
            std::string f = r.substr(0, by), cite = r.substr(by + 4, r.size() - by - 5);
            if (starts_with(f, "Let ")) {
                auto such = f.find(" be such that ");
                if (such == std::string::npos) throw bad("witness step without 'be such that'");
                f = f.substr(such + 14);
            }
            std::optional<ItemKind> kind;
            std::size_t best = 0;
            for (const auto& [k, phrase] : v.kinds)
                if (starts_with(cite, phrase + " ") && phrase.size() > best) {
                    kind = k;
                    best = phrase.size();
                }
            if (!kind) throw bad("unknown citation '" + cite + "'");
            line = polish_of(f) + " " + std::string(keyword(*kind)) + ":" + cite.substr(best + 1);
        } else if (ends_with(r, ".")) {
            line = polish_of(r.substr(0, r.size() - 1));
        } else {
            throw bad("unrecognised step");
        }
        out += std::string(static_cast<std::size_t>(depth), ' ') + line + "\n";
    }
    return out;
}

// ---------------------------------------------------------------- json

inline nlohmann::ordered_json to_json(const ProofDocument& d) {
    using J = nlohmann::ordered_json;
    J lines = J::array();
    for (std::size_t i = 0; i < d.proof.lines.size(); ++i) {
        const ProofLine& l = d.proof.lines[i];
        const LineVerdict& v = d.verdicts.at(i);
        bool hyp = i < d.proof.hypothesis_count;
        J j;
        j["number"] = l.number;
        j["source_line"] = l.source_line;
        j["depth"] = l.depth;
        j["formula"] = print_formula(l.formula);
        j["infix"] = to_infix(l.formula);
        j["justification"] = hyp ? "hypothesis" : std::string(to_string(l.justification));
        if (l.justification == Justification::Cited)
            j["citation"] = std::string(keyword(l.cited_kind)) + ":" + l.label;
        if (l.justification == Justification::CasesOpen) {
            j["disjuncts"] = J::array();
            for (const auto& f : l.disjuncts) j["disjuncts"].push_back(print_formula(f));
        }
        if (l.case_index > 0) j["case"] = l.case_index;
        if (l.opener > 0) j["opener"] = l.opener;
        j["provenance"] = v.rule;
        J sub = J::object();
        for (const auto& [from, to] : v.substitution) sub[std::string(1, from)] = std::string(1, to);
        j["substitution"] = sub;
        j["witnesses"] = v.witnesses;
        j["sources"] = v.sources;
        lines.push_back(std::move(j));
    }
    J doc;
    doc["format"] = kProofFormat;
    doc["target"] = {{"kind", keyword(d.target_kind)}, {"label", d.target_label}, {"statement", d.statement}};
    doc["accepted"] = d.accepted;
    doc["inferences"] = d.inferences;
    doc["depth"] = d.depth;
    doc["hypotheses"] = d.proof.hypothesis_count;
    doc["lines"] = std::move(lines);
    return doc;
}

/// Inverse of to_json; BadDocument on schema violations.
inline ProofDocument from_json(const nlohmann::ordered_json& j) {
    auto bad = [](const std::string& why) { return Error(ErrorKind::BadDocument, why); };
    try {
        if (j.at("format") != kProofFormat) throw bad("unknown format " + j.at("format").dump());
        ProofDocument d;
        auto kind = parse_item_kind(j.at("target").at("kind").get<std::string>());
        if (!kind) throw bad("unknown target kind");
        d.target_kind = *kind;
        d.target_label = j.at("target").at("label").get<std::string>();
        d.statement = j.at("target").at("statement").get<std::string>();
        d.accepted = j.at("accepted").get<bool>();
        d.inferences = j.at("inferences").get<int>();
        d.depth = j.at("depth").get<int>();
        d.proof.target_label = d.target_label;
        d.proof.hypothesis_count = j.at("hypotheses").get<std::size_t>();
        static const std::map<std::string, Justification> kinds = {
            {"hypothesis", Justification::Unjustified}, {"unjustified", Justification::Unjustified},
            {"cited", Justification::Cited},           {"assumption", Justification::Assumption},
            {"reductio", Justification::Reductio},     {"cases-open", Justification::CasesOpen},
            {"case", Justification::CaseOpen},         {"qedcase", Justification::QedCase},
            {"cases-close", Justification::CasesClose}};
        for (const auto& jl : j.at("lines")) {
            ProofLine l;
            l.number = jl.at("number").get<int>();
            l.source_line = jl.at("source_line").get<int>();
            l.depth = jl.at("depth").get<int>();
            l.formula = parse_formula(jl.at("formula").get<std::string>());
            auto jk = kinds.find(jl.at("justification").get<std::string>());
            if (jk == kinds.end()) throw bad("unknown justification on line " + std::to_string(l.number));
            l.justification = jk->second;
            if (l.justification == Justification::Cited) {
                std::string c = jl.at("citation").get<std::string>();
                auto colon = c.find(':');
                auto ck = colon == std::string::npos ? std::nullopt : parse_item_kind(c.substr(0, colon));
                if (!ck) throw bad("bad citation '" + c + "'");
                l.cited_kind = *ck;
                l.label = c.substr(colon + 1);
            }
            if (jl.contains("disjuncts"))
                for (const auto& f : jl.at("disjuncts")) l.disjuncts.push_back(parse_formula(f.get<std::string>()));
            l.case_index = jl.value("case", 0);
            l.opener = jl.value("opener", 0);
            LineVerdict v;
            v.number = l.number;
            v.rule = jl.at("provenance").get<std::string>();
            for (const auto& [from, to] : jl.at("substitution").items())
                v.substitution[from.at(0)] = to.get<std::string>().at(0);
            v.witnesses = jl.at("witnesses").get<std::string>();
            v.sources = jl.at("sources").get<std::vector<int>>();
            d.proof.lines.push_back(std::move(l));
            d.verdicts.push_back(std::move(v));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw bad(std::string("malformed proof document: ") + e.what());
    }
}

inline std::string export_json(const ProofDocument& d) { return to_json(d).dump(2) + "\n"; }

inline ProofDocument import_json(std::string_view text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::BadDocument, std::string("not JSON: ") + e.what());
    }
    return from_json(j);
}

} // namespace euc
