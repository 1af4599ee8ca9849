#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "euc/checker.hpp"
#include "euc/error.hpp"
#include "euc/theory.hpp"

namespace euc {

/// Edges run from a consuming line to the earlier line it depends on.
struct DependencyGraph {
    std::vector<int> nodes;
    std::vector<std::pair<int, int>> edges;
    int sink = 0;
    std::size_t hypothesis_count = 0;
};

inline DependencyGraph build_line_graph(const CheckReport& report) {
    DependencyGraph g;
    g.hypothesis_count = report.proof.hypothesis_count;
    for (const auto& v : report.lines) {
        g.nodes.push_back(v.number);
        for (int s : v.sources)
            if (s != v.number) g.edges.emplace_back(v.number, s);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    g.sink = g.nodes.empty() ? 0 : g.nodes.back();
    return g;
}

/// Lines not reachable backwards from the final line; hypotheses are exempt.
inline std::vector<int> find_unused_lines(const DependencyGraph& g) {
    std::map<int, std::vector<int>> out;
    for (auto [from, to] : g.edges) out[from].push_back(to);
    std::set<int> seen;
    std::vector<int> stack;
    if (g.sink != 0) stack.push_back(g.sink);
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        if (!seen.insert(n).second) continue;
        for (int m : out[n]) stack.push_back(m);
    }
    std::vector<int> unused;
    for (int n : g.nodes)
        if (n > static_cast<int>(g.hypothesis_count) && !seen.count(n)) unused.push_back(n);
    return unused;
}

inline int count_inferences(const CheckReport& report) { return report.inferences; }

inline std::string graph_adjacency(const DependencyGraph& g) {
    std::map<int, std::vector<int>> out;
    for (auto [from, to] : g.edges) out[from].push_back(to);
    std::ostringstream s;
    for (int n : g.nodes) {
        s << n << ":";
        for (int m : out[n]) s << " " << m;
        s << "\n";
    }
    return s.str();
}

/// Drops the given file lines from a proof text, keeping everything else byte for byte.
inline std::string strip_source_lines(std::string_view text, const std::set<int>& source_lines) {
    std::string out;
    std::size_t pos = 0;
    int line = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::size_t end = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line;
        if (!source_lines.count(line)) out.append(text.substr(pos, end - pos));
        pos = end;
    }
    return out;
}

inline std::set<int> unused_source_lines(const CheckReport& report) {
    std::set<int> out;
    for (int n : find_unused_lines(build_line_graph(report))) out.insert(report.proof.line(n).source_line);
    return out;
}

struct CorpusGraph {
    std::vector<std::string> nodes;                          // master-list order
    std::vector<std::pair<std::string, std::string>> edges; // theorem -> qualified cited item
};

/// Citation graph of checked proofs; citing a later master-list entry is a ForwardReference.
inline CorpusGraph build_corpus_graph(const Registry& reg, const std::vector<CheckReport>& reports) {
    CorpusGraph g;
    for (const auto& r : reports) {
        const TheoryItem& target = find_target(reg, r.target);
        g.nodes.push_back(r.target);
        for (const auto& q : r.citations) {
            const TheoryItem& cited = reg.lookup(q);
            if (cited.index && target.index && *cited.index >= *target.index)
                throw Error(ErrorKind::ForwardReference, r.target + " cites later item " + q);
            g.edges.emplace_back(r.target, q);
        }
    }
    std::stable_sort(g.nodes.begin(), g.nodes.end(), [&](const std::string& a, const std::string& b) {
        auto ia = find_target(reg, a).index, ib = find_target(reg, b).index;
        return ia.value_or(-1) < ib.value_or(-1);
    });
    return g;
}

} // namespace euc
