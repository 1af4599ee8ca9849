#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "euc/error.hpp"
#include "euc/formula.hpp"
#include "euc/infix.hpp"

namespace euc {

enum class ItemKind { Axiom, CommonNotion, Postulate, Definition, Lemma, Proposition };

/// Citation keyword as used in kindlines and proof justifications.
inline std::string_view keyword(ItemKind k) {
    switch (k) {
    case ItemKind::Axiom: return "axiom";
    case ItemKind::CommonNotion: return "cn";
    case ItemKind::Postulate: return "postulate";
    case ItemKind::Definition: return "defn";
    case ItemKind::Lemma: return "lemma";
    case ItemKind::Proposition: return "proposition";
    }
    return "";
}

inline std::string_view prose_name(ItemKind k) {
    switch (k) {
    case ItemKind::CommonNotion: return "common notion";
    case ItemKind::Definition: return "definition";
    default: return keyword(k);
    }
}

inline std::optional<ItemKind> parse_item_kind(std::string_view s) {
    for (ItemKind k : {ItemKind::Axiom, ItemKind::CommonNotion, ItemKind::Postulate, ItemKind::Definition,
                       ItemKind::Lemma, ItemKind::Proposition})
        if (keyword(k) == s) return k;
    return std::nullopt;
}

inline std::optional<ItemKind> parse_prose_kind(std::string_view s) {
    for (ItemKind k : {ItemKind::Axiom, ItemKind::CommonNotion, ItemKind::Postulate, ItemKind::Definition,
                       ItemKind::Lemma, ItemKind::Proposition})
        if (prose_name(k) == s) return k;
    return std::nullopt;
}

inline bool indexable(ItemKind k) { return k == ItemKind::Lemma || k == ItemKind::Proposition; }

struct TheoryItem {
    ItemKind kind = ItemKind::Axiom;
    std::string label;
    std::string universals;
    std::vector<Formula> hypotheses;
    std::vector<Formula> conclusions;
    std::string existentials;
    std::optional<Formula> head; // definitions only
    std::optional<int> index;    // master-list position, lemmas and propositions only
    std::string section;
    SortMap sorts;
    int line = 0;

    std::string qualified() const { return std::string(keyword(kind)) + ":" + label; }

    /// The single conclusion, or the conjunction of several.
    Formula conclusion() const {
        if (conclusions.size() == 1) return conclusions.front();
        return Formula::conjunction(conclusions);
    }
};

/// Default labels for bare "HEAD := body" definitions.
inline std::string default_definition_label(std::string_view code) {
    static const std::map<std::string_view, std::string_view> labels = {
        {"NE", "unequal"},         {"CO", "collinear"},        {"NC", "noncollinear"},
        {"IC", "inside"},          {"OC", "outside"},          {"ON", "on"},
        {"EL", "equilateral"},     {"TR", "triangle"},         {"RA", "ray"},
        {"LT", "lessthan"},        {"MI", "midpoint"},         {"EA", "equalangles"},
        {"SU", "supplement"},      {"RR", "rightangle"},       {"PA", "perpat"},
        {"PE", "perpendicular"},   {"IA", "angleinterior"},    {"OS", "oppositeside"},
        {"SS", "sameside"},        {"IS", "isosceles"},        {"CU", "cut"},
        {"TC", "congruenttriangles"}, {"AO", "anglelessthan"}, {"TG", "togethergreater"},
        {"TT", "togetherfour"},    {"RT", "tworightangles"},   {"ME", "meet"},
        {"CR", "cross"},           {"TP", "Tarskiparallel"},   {"PR", "parallel"},
        {"AS", "anglesum"},        {"PG", "parallelogram"},    {"SQ", "square"},
        {"RE", "rectangle"},       {"RC", "congruentrectangles"}, {"ER", "equalrectangles"},
        {"BR", "baserectangle"},   {"TE", "equaltriangles"},   {"FE", "equalquadrilaterals"},
    };
    auto it = labels.find(code);
    return it == labels.end() ? std::string(code) : std::string(it->second);
}

namespace detail {

inline std::vector<Formula> split_conjunction(Formula f) {
    if (f.is_and()) return f.parts();
    return {std::move(f)};
}

inline std::string wrap_member(const Formula& f) {
    return f.is_junction() ? "(" + to_infix(f) + ")" : to_infix(f);
}

inline std::string spaced(const std::string& vars) {
    std::string out;
    for (char c : vars) {
        if (!out.empty()) out.push_back(' ');
        out.push_back(c);
    }
    return out;
}

inline bool is_label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_' || c == '.';
}

inline void finish_item(TheoryItem& item) {
    SortMap sorts;
    if (item.head) infer_sorts(*item.head, sorts);
    for (const auto& h : item.hypotheses) infer_sorts(h, sorts);
    for (const auto& c : item.conclusions) infer_sorts(c, sorts);
    std::string hyp_vars;
    if (item.head) hyp_vars += variables(*item.head);
    for (const auto& h : item.hypotheses) hyp_vars += variables(h);
    for (char x : item.existentials) {
        if (hyp_vars.find(x) != std::string::npos)
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(item.line) + ": existential " + std::string(1, x) +
                            " also occurs in the hypotheses of " + item.label,
                        item.line);
        if (item.universals.find(x) != std::string::npos)
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(item.line) + ": " + std::string(1, x) +
                            " is both universal and existential in " + item.label,
                        item.line);
    }
    // variables neither listed after forall nor existential are implicitly universal
    for (auto [v, s] : sorts) {
        (void)s;
        if (item.universals.find(v) == std::string::npos && item.existentials.find(v) == std::string::npos) {
            if (item.head)
                throw Error(ErrorKind::SyntaxError,
                            "line " + std::to_string(item.line) + ": variable " + std::string(1, v) +
                                " of definition " + item.label + " is neither in the head nor existential",
                            item.line);
            item.universals.push_back(v);
        }
    }
    item.sorts = std::move(sorts);
}

inline TheoryItem parse_item_body(std::string_view text, int line) {
    TheoryItem item;
    item.line = line;
    InfixParser p(text, line);
    if (text.find(":=") != std::string_view::npos) {
        item.kind = ItemKind::Definition;
        Formula head = p.atom();
        std::string args = head.args();
        std::string seen;
        for (char c : args) {
            if (seen.find(c) != std::string::npos) p.fail("definition head repeats a variable");
            seen.push_back(c);
        }
        p.expect(":=");
        if (p.accept_word("exists")) item.existentials = p.variable_list();
        item.conclusions.push_back(p.formula());
        item.universals = args;
        item.head = std::move(head);
    } else {
        if (p.accept_word("forall")) item.universals = p.variable_list();
        if (p.accept_word("exists")) {
            item.existentials = p.variable_list();
            item.conclusions = split_conjunction(p.formula());
        } else {
            Formula first = p.formula();
            if (p.accept("==>")) {
                item.hypotheses = split_conjunction(std::move(first));
                if (p.accept_word("exists")) item.existentials = p.variable_list();
                item.conclusions = split_conjunction(p.formula());
            } else {
                item.conclusions = split_conjunction(std::move(first));
            }
        }
    }
    if (!p.at_end()) p.fail("trailing input");
    return item;
}

} // namespace detail

/// Parses the ASCII theory format: blank-line separated blocks, each a kindline
/// "kind-label" followed by the item text, or a bare "HEAD := body" definition.
/// A block consisting of one "# name" line starts a section.
inline std::vector<TheoryItem> parse_theory_file(std::string_view text) {
    std::vector<TheoryItem> items;
    std::map<std::string, int> seen;
    std::string section;

    std::vector<std::pair<int, std::string>> block;
    auto flush = [&]() {
        if (block.empty()) return;
        auto lines = std::move(block);
        block.clear();
        if (lines.front().second.starts_with("#")) {
            if (lines.size() != 1)
                throw Error(ErrorKind::SyntaxError,
                            "line " + std::to_string(lines.front().first) + ": section line must stand alone",
                            lines.front().first);
            std::string name = lines.front().second.substr(1);
            name.erase(0, name.find_first_not_of(' '));
            section = name;
            return;
        }
        std::optional<ItemKind> kind;
        std::string label;
        std::size_t body_start = 0;
        const std::string& first = lines.front().second;
        if (first.find(":=") == std::string::npos && first.find('(') == std::string::npos) {
            auto dash = first.find('-');
            if (dash != std::string::npos) kind = parse_item_kind(first.substr(0, dash));
            if (!kind)
                throw Error(ErrorKind::SyntaxError,
                            "line " + std::to_string(lines.front().first) + ": bad kindline '" + first + "'",
                            lines.front().first);
            label = first.substr(dash + 1);
            if (label.empty() || !std::all_of(label.begin(), label.end(), detail::is_label_char))
                throw Error(ErrorKind::SyntaxError,
                            "line " + std::to_string(lines.front().first) + ": bad label '" + label + "'",
                            lines.front().first);
            body_start = 1;
        }
        if (body_start >= lines.size())
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(lines.front().first) + ": item has no statement",
                        lines.front().first);
        std::string body;
        for (std::size_t i = body_start; i < lines.size(); ++i) {
            if (!body.empty()) body.push_back(' ');
            body += lines[i].second;
        }
        int line = lines[body_start].first;
        TheoryItem item = detail::parse_item_body(body, line);
        if (kind && (*kind == ItemKind::Definition) != item.head.has_value())
            throw Error(ErrorKind::SyntaxError,
                        "line " + std::to_string(line) + ": definitions and only definitions use ':='", line);
        if (kind) item.kind = *kind;
        item.label = label.empty() ? default_definition_label(item.head->predicate()) : label;
        item.section = section;
        detail::finish_item(item);
        if (auto [it, inserted] = seen.emplace(item.qualified(), line); !inserted)
            throw Error(ErrorKind::DuplicateLabel,
                        "line " + std::to_string(line) + ": duplicate label " + item.qualified() +
                            " (first at line " + std::to_string(it->second) + ")",
                        line);
        items.push_back(std::move(item));
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        auto b = raw.find_first_not_of(" \t");
        if (b == std::string::npos) {
            flush();
            continue;
        }
        auto e = raw.find_last_not_of(" \t");
        block.emplace_back(lineno, raw.substr(b, e - b + 1));
    }
    flush();
    return items;
}

inline std::string serialize_item(const TheoryItem& item) {
    using detail::spaced;
    using detail::wrap_member;
    std::string out = std::string(keyword(item.kind)) + "-" + item.label + "\n";
    if (item.head) {
        out += to_infix(*item.head) + " := ";
        if (!item.existentials.empty()) out += "exists " + spaced(item.existentials) + ", ";
        out += to_infix(item.conclusions.front());
        return out + "\n";
    }
    if (!item.universals.empty()) out += "forall " + spaced(item.universals) + ", ";
    for (std::size_t i = 0; i < item.hypotheses.size(); ++i) {
        if (i > 0) out += " /\\ ";
        out += wrap_member(item.hypotheses[i]);
    }
    if (!item.hypotheses.empty()) out += " ==> ";
    if (!item.existentials.empty()) out += "exists " + spaced(item.existentials) + ", ";
    for (std::size_t i = 0; i < item.conclusions.size(); ++i) {
        if (i > 0) out += " /\\ ";
        out += wrap_member(item.conclusions[i]);
    }
    return out + "\n";
}

/// Canonical text; parse_theory_file(serialize_theory(xs)) reproduces xs.
inline std::string serialize_theory(const std::vector<TheoryItem>& items) {
    std::string out;
    std::string section;
    for (const auto& item : items) {
        if (!item.section.empty() && item.section != section) {
            if (!out.empty()) out += "\n";
            out += "# " + item.section + "\n";
            section = item.section;
        }
        if (!out.empty()) out += "\n";
        out += serialize_item(item);
    }
    return out;
}

/// Structural equality ignoring source positions and master-list indices.
inline bool same_statement(const TheoryItem& a, const TheoryItem& b) {
    return a.kind == b.kind && a.label == b.label && a.universals == b.universals &&
           a.hypotheses == b.hypotheses && a.conclusions == b.conclusions &&
           a.existentials == b.existentials && a.head == b.head && a.section == b.section;
}

/// Variables of the conclusions that are neither universal, existential nor in the hypotheses.
inline std::string unbound_variables(const TheoryItem& item) {
    std::string bound = item.universals + item.existentials;
    for (const auto& h : item.hypotheses) bound += variables(h);
    if (item.head) bound += variables(*item.head);
    std::string out;
    for (const auto& c : item.conclusions)
        for (char v : variables(c))
            if (bound.find(v) == std::string::npos && out.find(v) == std::string::npos) out.push_back(v);
    return out;
}

inline const Formula& defn_head(const TheoryItem& item) {
    if (item.kind != ItemKind::Definition || !item.head)
        throw Error(ErrorKind::KindMismatch, item.qualified() + " is not a definition");
    return *item.head;
}

inline std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::IoError, "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Master list: one label per line; '#' starts a comment.
inline std::vector<std::string> parse_master_list(std::string_view text) {
    std::vector<std::string> labels;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
        auto b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        auto e = raw.find_last_not_of(" \t\r");
        labels.push_back(raw.substr(b, e - b + 1));
    }
    return labels;
}

class Registry {
public:
    Registry() = default;

    /// Builds a registry from already parsed items and master-list labels.
    Registry(std::vector<TheoryItem> items, const std::vector<std::string>& master) {
        for (auto& item : items) add(std::move(item));
        int index = 0;
        for (const auto& label : master) {
            std::vector<std::size_t> hits;
            for (std::size_t i = 0; i < items_.size(); ++i)
                if (items_[i].label == label) hits.push_back(i);
            if (hits.empty()) throw Error(ErrorKind::MissingLabel, "master list names unknown item " + label);
            auto lemma = std::find_if(hits.begin(), hits.end(),
                                      [&](std::size_t i) { return indexable(items_[i].kind); });
            if (lemma == hits.end())
                throw Error(ErrorKind::KindMismatch, "master list entry " + label + " is not a lemma or proposition");
            TheoryItem& item = items_[*lemma];
            if (item.index) throw Error(ErrorKind::DuplicateLabel, "master list repeats " + label);
            item.index = index++;
            master_.push_back(label);
        }
    }

    const std::vector<TheoryItem>& items() const { return items_; }
    const std::vector<std::string>& master() const { return master_; }
    std::size_t size() const { return items_.size(); }

    /// label may be qualified as "kind:label". Enforces master-list order when
    /// both the item and the citing proof are indexed.
    const TheoryItem& lookup(std::string_view label, std::optional<int> citing_index = std::nullopt) const {
        const TheoryItem* found = nullptr;
        if (auto colon = label.find(':'); colon != std::string_view::npos) {
            auto kind = parse_item_kind(label.substr(0, colon));
            if (!kind) throw Error(ErrorKind::UnknownItem, "unknown item kind in " + std::string(label));
            return lookup(*kind, label.substr(colon + 1), citing_index);
        }
        for (const auto& item : items_) {
            if (item.label != label) continue;
            if (found != nullptr)
                throw Error(ErrorKind::UnknownItem, "ambiguous label " + std::string(label) + "; qualify it with a kind");
            found = &item;
        }
        if (found == nullptr) throw Error(ErrorKind::UnknownItem, "no item labelled " + std::string(label));
        return check_order(*found, citing_index);
    }

    const TheoryItem& lookup(ItemKind kind, std::string_view label,
                             std::optional<int> citing_index = std::nullopt) const {
        auto it = by_key_.find(std::string(keyword(kind)) + ":" + std::string(label));
        if (it != by_key_.end()) return check_order(items_[it->second], citing_index);
        for (const auto& item : items_)
            if (item.label == label)
                throw Error(ErrorKind::KindMismatch, std::string(label) + " is " + std::string(keyword(item.kind)) +
                                                         ", cited as " + std::string(keyword(kind)));
        throw Error(ErrorKind::UnknownItem, "no " + std::string(keyword(kind)) + " labelled " + std::string(label));
    }

    const TheoryItem* find_indexed(std::string_view label) const {
        for (const auto& item : items_)
            if (item.label == label && item.index) return &item;
        return nullptr;
    }

private:
    void add(TheoryItem item) {
        std::string key = item.qualified();
        if (by_key_.count(key)) throw Error(ErrorKind::DuplicateLabel, "duplicate item " + key);
        item.index.reset();
        by_key_.emplace(key, items_.size());
        items_.push_back(std::move(item));
    }

    static const TheoryItem& check_order(const TheoryItem& item, std::optional<int> citing_index) {
        if (item.index && citing_index && *item.index >= *citing_index)
            throw Error(ErrorKind::ForwardReference,
                        item.qualified() + " (master index " + std::to_string(*item.index) +
                            ") cited from index " + std::to_string(*citing_index));
        return item;
    }

    std::vector<TheoryItem> items_;
    std::map<std::string, std::size_t> by_key_;
    std::vector<std::string> master_;
};

/// Theory paths may be files or directories; directories contribute every
/// *.thy file in name order.
inline std::vector<TheoryItem> load_theory_paths(const std::vector<std::filesystem::path>& paths) {
    std::vector<TheoryItem> all;
    for (const auto& p : paths) {
        std::vector<std::filesystem::path> files;
        if (std::filesystem::is_directory(p)) {
            for (const auto& e : std::filesystem::directory_iterator(p))
                if (e.path().extension() == ".thy") files.push_back(e.path());
            std::sort(files.begin(), files.end());
        } else {
            files.push_back(p);
        }
        for (const auto& f : files) {
            try {
                auto items = parse_theory_file(read_text_file(f));
                for (auto& item : items) all.push_back(std::move(item));
            } catch (const Error& e) {
                throw Error(e.kind(), f.string() + ": " + e.what(), e.line());
            }
        }
    }
    return all;
}

inline Registry load_registry(const std::vector<std::filesystem::path>& theory_paths,
                              const std::optional<std::filesystem::path>& master_list) {
    std::vector<std::string> master;
    if (master_list) master = parse_master_list(read_text_file(*master_list));
    return Registry(load_theory_paths(theory_paths), master);
}

} // namespace euc
