#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "euc/error.hpp"
#include "euc/formula.hpp"
#include "euc/proof.hpp"
#include "euc/theory.hpp"

namespace euc {

struct CheckOptions {
    int depth = 3; // closure depth for unjustified lines, >= 1
};

struct Diagnostic {
    ErrorKind kind;
    int number = 0;      // proof line number, 0 for whole-proof problems
    int source_line = 0; // file line
    std::string message;
};

struct LineVerdict {
    int number = 0;
    bool ok = true;
    std::string rule;         // how the line was justified, e.g. "fold defn:cross" or "R2"
    Substitution substitution; // item variables -> proof variables
    std::string witnesses;    // fresh proof variables introduced for existentials
    std::vector<int> sources; // earlier lines this line depends on
};

struct CheckReport {
    std::string target;
    bool accepted = false;
    Proof proof;
    std::vector<LineVerdict> lines;
    std::vector<Diagnostic> errors;
    int inferences = 0;
    std::vector<std::string> citations; // qualified labels in first-citation order
    int depth = 3;
};

/// Result of one step check: the sources and the matched instantiation.
struct StepResult {
    Substitution substitution;
    std::string witnesses;
    std::vector<int> sources;
    std::string rule;
};

struct Fact {
    Formula formula;
    int line = 0;
};

/// Formulas visible at a point of the proof, grouped by open scope.
class Context {
public:
    struct Scope {
        Justification kind = Justification::Unjustified; // Unjustified marks the top level
        int opener = 0;
        std::vector<Fact> facts;
        Formula goal;                   // cases blocks
        std::vector<Formula> disjuncts; // cases blocks
        int next_case = 1;
        std::vector<int> spine;         // control and goal lines of a cases block
    };

    explicit Context(std::string universals = {}) : universals_(std::move(universals)) { scopes_.emplace_back(); }

    void add(const Formula& f, int line) { scopes_.back().facts.push_back({f, line}); }
    void push(Scope s) { scopes_.push_back(std::move(s)); }
    Scope pop() {
        Scope s = std::move(scopes_.back());
        scopes_.pop_back();
        return s;
    }
    Scope& top() { return scopes_.back(); }
    std::size_t depth() const { return scopes_.size(); }

    /// Visible facts, most recent first.
    std::vector<const Fact*> available() const {
        std::vector<const Fact*> out;
        for (const auto& s : scopes_)
            for (const auto& f : s.facts) out.push_back(&f);
        std::stable_sort(out.begin(), out.end(), [](const Fact* a, const Fact* b) { return a->line > b->line; });
        return out;
    }

    std::optional<int> find(const Formula& f) const {
        for (const Fact* x : available())
            if (x->formula == f) return x->line;
        return std::nullopt;
    }

    /// A witness must not occur in any visible formula, any open cases goal,
    /// or among the target's universal variables.
    bool fresh(char v) const {
        if (universals_.find(v) != std::string::npos) return false;
        for (const auto& s : scopes_) {
            for (const auto& f : s.facts)
                if (occurs(v, f.formula)) return false;
            if (s.kind == Justification::CasesOpen) {
                if (occurs(v, s.goal)) return false;
                for (const auto& d : s.disjuncts)
                    if (occurs(v, d)) return false;
            }
        }
        return true;
    }

private:
    std::string universals_;
    std::vector<Scope> scopes_;
};

namespace detail {

inline std::string show_partial(const Formula& p, const Substitution& s) {
    switch (p.kind()) {
    case Formula::Kind::Atom: {
        std::string out(p.predicate());
        for (char c : p.args()) {
            auto it = s.find(c);
            out.push_back(it == s.end() ? '?' : it->second);
        }
        return out;
    }
    case Formula::Kind::Not: return "NO" + show_partial(p.operand(), s);
    default: {
        std::string out = p.is_and() ? "AN" : "OR";
        for (std::size_t i = 0; i < p.parts().size(); ++i) {
            if (i > 0) out.push_back(p.is_and() ? '+' : '|');
            out += show_partial(p.parts()[i], s);
        }
        return out;
    }
    }
}

/// Backtracking search binding every pattern to some visible fact.
inline bool match_each(const std::vector<Formula>& patterns, std::size_t i, Substitution& theta,
                       const std::vector<const Fact*>& facts, std::vector<int>& sources) {
    if (i == patterns.size()) return true;
    for (const Fact* f : facts) {
        auto m = match_formula(patterns[i], f->formula, theta);
        if (!m) continue;
        Substitution saved = theta;
        theta = std::move(*m);
        sources.push_back(f->line);
        if (match_each(patterns, i + 1, theta, facts, sources)) return true;
        sources.pop_back();
        theta = std::move(saved);
    }
    return false;
}

/// Satisfies a definition body: a whole visible fact first, otherwise every
/// member of a conjunction or any one member of a disjunction.
inline bool satisfy(const Formula& body, Substitution& theta, const std::vector<const Fact*>& facts,
                    std::vector<int>& sources, const std::function<bool(Substitution&, std::vector<int>&)>& k);

inline bool satisfy_members(const std::vector<Formula>& parts, std::size_t i, Substitution& theta,
                            const std::vector<const Fact*>& facts, std::vector<int>& sources,
                            const std::function<bool(Substitution&, std::vector<int>&)>& k) {
    if (i == parts.size()) return k(theta, sources);
    return satisfy(parts[i], theta, facts, sources, [&](Substitution& t, std::vector<int>& src) {
        return satisfy_members(parts, i + 1, t, facts, src, k);
    });
}

inline bool satisfy(const Formula& body, Substitution& theta, const std::vector<const Fact*>& facts,
                    std::vector<int>& sources, const std::function<bool(Substitution&, std::vector<int>&)>& k) {
    for (const Fact* f : facts) {
        auto m = match_formula(body, f->formula, theta);
        if (!m) continue;
        Substitution saved = theta;
        theta = std::move(*m);
        sources.push_back(f->line);
        if (k(theta, sources)) return true;
        sources.pop_back();
        theta = std::move(saved);
    }
    if (body.is_and()) return satisfy_members(body.parts(), 0, theta, facts, sources, k);
    if (body.is_or()) {
        for (const auto& d : body.parts())
            if (satisfy(d, theta, facts, sources, k)) return true;
    }
    return false;
}

inline std::vector<int> unique_sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline std::string witnesses_of(const std::string& existentials, const Substitution& theta) {
    std::string w;
    for (char x : existentials)
        if (auto it = theta.find(x); it != theta.end()) w.push_back(it->second);
    return w;
}

inline std::optional<std::string> stale_witness(const std::string& witnesses, const Context& ctx) {
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
        if (witnesses.find(witnesses[i]) != i)
            return std::string("witness ") + witnesses[i] + " is used for two existentials";
        if (!ctx.fresh(witnesses[i]))
            return std::string("witness ") + witnesses[i] + " is not fresh";
    }
    return std::nullopt;
}

} // namespace detail

/// Instantiates a theorem-like item so that formula is its conclusion (or one
/// conjunct of it) and every hypothesis is visible.
inline StepResult check_cited_step(const Context& ctx, const Formula& formula, const TheoryItem& item) {
    std::vector<Formula> candidates{item.conclusion()};
    if (item.conclusions.size() > 1)
        for (const auto& c : item.conclusions) candidates.push_back(c);
    auto facts = ctx.available();
    std::optional<Error> best;
    auto rank = [](ErrorKind k) { return k == ErrorKind::MissingHypothesis ? 2 : k == ErrorKind::StaleWitness ? 1 : 0; };
    auto keep = [&](Error e) {
        if (!best || rank(e.kind()) > rank(best->kind())) best = std::move(e);
    };
    for (const auto& pattern : candidates) {
        auto m = match_formula(pattern, formula);
        if (!m) continue;
        std::string witnesses = detail::witnesses_of(item.existentials, *m);
        if (auto why = detail::stale_witness(witnesses, ctx)) {
            keep(Error(ErrorKind::StaleWitness, *why + " for " + item.qualified()));
            continue;
        }
        Substitution theta = *m;
        std::vector<int> sources;
        if (detail::match_each(item.hypotheses, 0, theta, facts, sources))
            return {theta, witnesses, detail::unique_sorted(sources), item.qualified()};
        std::string missing;
        for (const auto& h : item.hypotheses) {
            bool any = std::any_of(facts.begin(), facts.end(),
                                   [&](const Fact* f) { return match_formula(h, f->formula, *m).has_value(); });
            if (!any) missing += (missing.empty() ? "" : ", ") + detail::show_partial(h, *m);
        }
        if (missing.empty()) missing = "no joint instantiation of the hypotheses";
        keep(Error(ErrorKind::MissingHypothesis, "missing hypothesis " + missing + " for " + item.qualified()));
    }
    if (best) throw *best;
    throw Error(ErrorKind::NoInstantiation,
                print_formula(formula) + " is not an instance of the conclusion of " + item.qualified());
}

/// Unfolds a visible defined atom into its body or folds a visible body into the atom.
inline StepResult check_definition_step(const Context& ctx, const Formula& formula, const TheoryItem& item) {
    const Formula& head = defn_head(item);
    const Formula& body = item.conclusions.front();
    auto facts = ctx.available();
    if (auto m = match_formula(head, formula)) {
        Substitution theta = *m;
        std::vector<int> sources;
        bool ok = detail::satisfy(body, theta, facts, sources,
                                  [](Substitution&, std::vector<int>&) { return true; });
        if (!ok)
            throw Error(ErrorKind::MissingBody, "body " + detail::show_partial(body, *m) + " of " +
                                                    item.qualified() + " is not available");
        return {theta, "", detail::unique_sorted(sources), "fold " + item.qualified()};
    }
    if (auto m = match_formula(body, formula)) {
        std::string witnesses = detail::witnesses_of(item.existentials, *m);
        if (auto why = detail::stale_witness(witnesses, ctx))
            throw Error(ErrorKind::StaleWitness, *why + " for " + item.qualified());
        for (const Fact* f : facts) {
            if (auto full = match_formula(head, f->formula, *m))
                return {*full, witnesses, {f->line}, "unfold " + item.qualified()};
        }
        throw Error(ErrorKind::NoInstantiation,
                    "unfolding " + item.qualified() + " needs " + detail::show_partial(head, *m));
    }
    throw Error(ErrorKind::NoInstantiation,
                print_formula(formula) + " is neither the head nor the body of " + item.qualified());
}

namespace detail {

inline Formula negate(const Formula& f) { return Formula::negation(f); }

inline std::vector<Formula> eliminate(const Formula& f) {
    std::vector<Formula> out;
    if (f.is_and()) return f.parts();
    if (f.is_not()) {
        const Formula& g = f.operand();
        if (g.is_not()) out.push_back(g.operand());
        if (g.is_junction()) {
            std::vector<Formula> neg;
            for (const auto& p : g.parts()) neg.push_back(negate(p));
            out.push_back(Formula::junction(g.is_or() ? Formula::Kind::And : Formula::Kind::Or, std::move(neg)));
        }
    }
    return out;
}

class Closure {
public:
    Closure(const Context& ctx, int depth) : depth_(depth) {
        for (const Fact* f : ctx.available()) {
            std::vector<Formula> queue{f->formula};
            while (!queue.empty()) {
                Formula g = std::move(queue.back());
                queue.pop_back();
                if (!known_.emplace(g, f->line).second) continue;
                for (auto& h : eliminate(g)) queue.push_back(std::move(h));
            }
            if (f->formula.is_atom() && f->formula.predicate() == "EQ" && f->formula.args()[0] != f->formula.args()[1])
                equalities_.push_back(f);
        }
    }

    std::optional<std::pair<std::vector<int>, std::string>> derive(const Formula& goal) {
        auto r = search(goal, depth_);
        if (!r) return std::nullopt;
        return std::make_pair(unique_sorted(r->first), r->second);
    }

private:
    using Result = std::optional<std::pair<std::vector<int>, std::string>>;

    Result search(const Formula& goal, int d) {
        if (auto it = known_.find(goal); it != known_.end()) return std::make_pair(std::vector<int>{it->second}, std::string("R1"));
        if (d <= 0) return std::nullopt;
        auto key = std::make_pair(goal, d);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        memo_[key] = std::nullopt; // cut cycles
        Result r = expand(goal, d);
        memo_[key] = r;
        return r;
    }

    Result expand(const Formula& goal, int d) {
        if (goal.is_and()) {
            std::vector<int> src;
            bool ok = true;
            for (const auto& p : goal.parts()) {
                auto r = search(p, d - 1);
                if (!r) {
                    ok = false;
                    break;
                }
                src.insert(src.end(), r->first.begin(), r->first.end());
            }
            if (ok) return std::make_pair(src, std::string("R2"));
        }
        // De Morgan, read backwards
        if (goal.is_not() && goal.operand().is_junction()) {
            std::vector<Formula> neg;
            for (const auto& p : goal.operand().parts()) neg.push_back(negate(p));
            Formula alt = Formula::junction(goal.operand().is_or() ? Formula::Kind::And : Formula::Kind::Or, neg);
            if (auto r = search(alt, d - 1)) return std::make_pair(r->first, std::string("R4"));
        }
        if (goal.is_junction() && std::all_of(goal.parts().begin(), goal.parts().end(),
                                              [](const Formula& p) { return p.is_not(); })) {
            std::vector<Formula> pos;
            for (const auto& p : goal.parts()) pos.push_back(p.operand());
            Formula alt = negate(Formula::junction(goal.is_and() ? Formula::Kind::Or : Formula::Kind::And, pos));
            if (auto r = search(alt, d - 1)) return std::make_pair(r->first, std::string("R4"));
        }
        if (goal.is_not() && goal.operand().is_not()) {
            if (auto r = search(goal.operand().operand(), d - 1)) return std::make_pair(r->first, std::string("R5"));
        }
        for (const Fact* eq : equalities_) {
            char x = eq->formula.args()[0], y = eq->formula.args()[1];
            for (auto [from, to] : {std::pair{y, x}, std::pair{x, y}}) {
                if (!occurs(from, goal)) continue;
                Formula alt;
                try {
                    alt = apply_substitution(goal, {{from, to}});
                } catch (const Error&) {
                    continue;
                }
                if (auto r = search(alt, d - 1)) {
                    auto src = r->first;
                    src.push_back(eq->line);
                    return std::make_pair(src, std::string("R6"));
                }
            }
        }
        if (auto r = search(negate(negate(goal)), d - 1)) return std::make_pair(r->first, std::string("R5"));
        return std::nullopt;
    }

    int depth_;
    std::map<Formula, int> known_;
    std::vector<const Fact*> equalities_;
    std::map<std::pair<Formula, int>, Result> memo_;
};

} // namespace detail

/// "Logic alone": repetition, conjunction, De Morgan, double negation and
/// equality substitution, searched backwards up to depth.
inline StepResult check_unjustified_step(const Context& ctx, const Formula& formula, int depth = 3) {
    detail::Closure closure(ctx, depth);
    auto r = closure.derive(formula);
    if (!r)
        throw Error(ErrorKind::NotDerivable,
                    print_formula(formula) + " does not follow by logic alone within depth " + std::to_string(depth));
    return {{}, "", r->first, r->second};
}

/// Finds F and NO F among the visible facts, most recent first.
inline std::optional<std::pair<int, int>> contradictory_pair(const Context& ctx) {
    auto facts = ctx.available();
    for (const Fact* f : facts) {
        Formula partner = Formula::negation(f->formula);
        if (auto l = ctx.find(partner)) return std::make_pair(f->line, *l);
        if (f->formula.is_not())
            if (auto l = ctx.find(f->formula.operand())) return std::make_pair(f->line, *l);
    }
    return std::nullopt;
}

/// The target of a proof file: the lemma or proposition with that label.
inline const TheoryItem& find_target(const Registry& reg, const std::string& label) {
    for (ItemKind k : {ItemKind::Proposition, ItemKind::Lemma}) {
        try {
            return reg.lookup(k, label);
        } catch (const Error&) {
        }
    }
    throw Error(ErrorKind::UnknownItem, "no lemma or proposition labelled " + label);
}

/// Checks every line, continuing after failures so that all diagnostics are reported.
inline CheckReport check_proof(const Registry& reg, const Proof& proof, const CheckOptions& opt = {}) {
    if (opt.depth < 1) throw Error(ErrorKind::SyntaxError, "closure depth must be at least 1");
    const TheoryItem& target = find_target(reg, proof.target_label);
    CheckReport rep;
    rep.target = proof.target_label;
    rep.proof = proof;
    rep.depth = opt.depth;
    Context ctx(target.universals);

    auto diag = [&](ErrorKind k, const ProofLine& l, const std::string& msg) {
        rep.errors.push_back({k, l.number, l.source_line, "line " + std::to_string(l.source_line) + ": " + msg});
        rep.lines[static_cast<std::size_t>(l.number - 1)].ok = false;
    };

    for (const auto& l : proof.lines) rep.lines.push_back({l.number});

    const std::size_t h = target.hypotheses.size();
    for (std::size_t i = 0; i < h; ++i) {
        if (i >= proof.lines.size()) {
            rep.errors.push_back({ErrorKind::HypothesisMismatch, 0, 0,
                                  "proof has fewer lines than " + target.qualified() + " has hypotheses"});
            break;
        }
        const ProofLine& l = proof.lines[i];
        rep.lines[i].rule = "hypothesis";
        if (l.justification != Justification::Unjustified || !(l.formula == target.hypotheses[i]))
            diag(ErrorKind::HypothesisMismatch, l,
                 "expected hypothesis " + print_formula(target.hypotheses[i]) + " of " + target.qualified());
        if (l.justification == Justification::Unjustified) ctx.add(l.formula, l.number);
    }

    auto cite = [&](const std::string& q) {
        if (std::find(rep.citations.begin(), rep.citations.end(), q) == rep.citations.end()) rep.citations.push_back(q);
    };

    for (std::size_t i = h; i < proof.lines.size(); ++i) {
        const ProofLine& l = proof.lines[i];
        LineVerdict& v = rep.lines[i];
        try {
            switch (l.justification) {
            case Justification::Cited: {
                cite(std::string(keyword(l.cited_kind)) + ":" + l.label);
                const TheoryItem& item = reg.lookup(l.cited_kind, l.label, target.index);
                if (&item == &target)
                    throw Error(ErrorKind::ForwardReference, target.qualified() + " cites itself");
                StepResult r = item.kind == ItemKind::Definition ? check_definition_step(ctx, l.formula, item)
                                                                 : check_cited_step(ctx, l.formula, item);
                v.rule = r.rule;
                v.substitution = r.substitution;
                v.witnesses = r.witnesses;
                v.sources = r.sources;
                break;
            }
            case Justification::Unjustified: {
                StepResult r = check_unjustified_step(ctx, l.formula, opt.depth);
                v.rule = r.rule;
                v.sources = r.sources;
                break;
            }
            case Justification::Assumption: {
                v.rule = "assumption";
                Context::Scope s;
                s.kind = Justification::Assumption;
                s.opener = l.number;
                ctx.push(std::move(s));
                break;
            }
            case Justification::Reductio: {
                v.rule = "reductio";
                const ProofLine& a = proof.line(l.opener);
                v.sources.push_back(a.number);
                auto pair = contradictory_pair(ctx);
                ctx.pop();
                if (!(l.formula == Formula::negation(a.formula) || a.formula == Formula::negation(l.formula)))
                    throw Error(ErrorKind::NoContradiction, print_formula(l.formula) + " does not negate the assumption " +
                                                                print_formula(a.formula) + " on line " +
                                                                std::to_string(a.source_line));
                if (!pair)
                    throw Error(ErrorKind::NoContradiction, "no formula and its negation are both available");
                v.sources.push_back(pair->first);
                v.sources.push_back(pair->second);
                v.sources = detail::unique_sorted(v.sources);
                break;
            }
            case Justification::CasesOpen: {
                v.rule = "cases";
                Formula disj = Formula::disjunction(l.disjuncts);
                Context::Scope s;
                s.kind = Justification::CasesOpen;
                s.opener = l.number;
                s.goal = l.formula;
                s.disjuncts = l.disjuncts;
                s.spine.push_back(l.number);
                const bool middle = l.disjuncts.size() == 2 &&
                                    (l.disjuncts[1] == Formula::negation(l.disjuncts[0]) ||
                                     l.disjuncts[0] == Formula::negation(l.disjuncts[1]));
                std::optional<int> src;
                if (!middle) {
                    detail::Closure cl(ctx, 0);
                    if (auto r = cl.derive(disj)) src = r->first.front();
                }
                ctx.push(std::move(s));
                if (middle) {
                    v.rule = "cases on excluded middle";
                } else if (src) {
                    v.sources.push_back(*src);
                } else {
                    throw Error(ErrorKind::DisjunctionUnavailable, print_formula(disj) + " is not available");
                }
                break;
            }
            case Justification::CaseOpen: {
                v.rule = "case";
                v.sources.push_back(l.opener);
                auto& cases = ctx.top();
                int expected = cases.next_case++;
                cases.spine.push_back(l.number);
                const std::vector<Formula> dj = cases.disjuncts;
                Context::Scope s;
                s.kind = Justification::CaseOpen;
                s.opener = l.number;
                ctx.push(std::move(s));
                ctx.add(l.formula, l.number);
                if (l.case_index != expected)
                    throw Error(ErrorKind::IndexOutOfOrder, "case " + std::to_string(l.case_index) + " where case " +
                                                                std::to_string(expected) + " was expected");
                if (!(l.formula == dj[static_cast<std::size_t>(l.case_index - 1)]))
                    throw Error(ErrorKind::CaseGoalMismatch, "case " + std::to_string(l.case_index) + " states " +
                                                                 print_formula(l.formula) + " but disjunct is " +
                                                                 print_formula(dj[static_cast<std::size_t>(l.case_index - 1)]));
                break;
            }
            case Justification::QedCase: {
                v.rule = "qedcase";
                ctx.pop();
                auto& cases = ctx.top();
                const ProofLine& prev = proof.lines[i - 1];
                cases.spine.push_back(prev.number);
                cases.spine.push_back(l.number);
                v.sources = {l.opener, prev.number};
                std::sort(v.sources.begin(), v.sources.end());
                v.sources.erase(std::unique(v.sources.begin(), v.sources.end()), v.sources.end());
                if (!(prev.formula == cases.goal) || prev.justification == Justification::QedCase)
                    throw Error(ErrorKind::CaseGoalMismatch, "case " + std::to_string(l.case_index) + " ends with " +
                                                                 print_formula(prev.formula) + ", not the goal " +
                                                                 print_formula(cases.goal));
                break;
            }
            case Justification::CasesClose: {
                v.rule = "cases";
                Context::Scope s = ctx.pop();
                v.sources = detail::unique_sorted(s.spine);
                int done = s.next_case - 1;
                if (done < static_cast<int>(s.disjuncts.size()))
                    throw Error(ErrorKind::MissingCase, "only " + std::to_string(done) + " of " +
                                                            std::to_string(s.disjuncts.size()) + " cases given");
                if (!(l.formula == s.goal))
                    throw Error(ErrorKind::CaseGoalMismatch,
                                print_formula(l.formula) + " differs from the cases goal " + print_formula(s.goal));
                break;
            }
            }
        } catch (const Error& e) {
            diag(e.kind(), l, e.what());
        }
        if (l.justification != Justification::Assumption && l.justification != Justification::CasesOpen &&
            l.justification != Justification::CaseOpen && l.justification != Justification::QedCase)
            ctx.add(l.formula, l.number);
        if (l.justification == Justification::Assumption) ctx.add(l.formula, l.number);
    }

    rep.inferences = static_cast<int>(proof.lines.size() > h ? proof.lines.size() - h : 0);

    if (!proof.lines.empty()) {
        const ProofLine& last = proof.lines.back();
        Substitution fixed;
        for (char u : target.universals) fixed[u] = u;
        auto m = match_formula(target.conclusion(), last.formula, fixed);
        bool ok = m.has_value() && last.depth == 0;
        if (ok) {
            std::string images = detail::witnesses_of(target.existentials, *m);
            for (std::size_t i = 0; i < images.size(); ++i)
                if (images.find(images[i]) != i || target.universals.find(images[i]) != std::string::npos) ok = false;
        }
        if (!ok)
            rep.errors.push_back({ErrorKind::FinalLineMismatch, last.number, last.source_line,
                                  "line " + std::to_string(last.source_line) + ": final line " +
                                      print_formula(last.formula) + " is not the conclusion " +
                                      print_formula(target.conclusion()) + " of " + target.qualified()});
    } else {
        rep.errors.push_back({ErrorKind::FinalLineMismatch, 0, 0, "empty proof"});
    }
    rep.accepted = rep.errors.empty();
    return rep;
}

inline CheckReport check_proof_text(const Registry& reg, const std::string& label, std::string_view text,
                                    const CheckOptions& opt = {}) {
    const TheoryItem& target = find_target(reg, label);
    return check_proof(reg, parse_proof(text, target), opt);
}

} // namespace euc
