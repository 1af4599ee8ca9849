#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "euc/checker.hpp"
#include "mutations.hpp"
#include "support.hpp"

using namespace euc;

namespace {

Formula P(const char* s) { return parse_formula(s); }

Context context_with(std::initializer_list<const char*> facts) {
    Context ctx;
    int line = 1;
    for (const char* f : facts) ctx.add(P(f), line++);
    return ctx;
}

template <class F>
ErrorKind failure(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error";
    return ErrorKind::IoError;
}

const Registry& playfair_registry() {
    static const Registry reg = fixture::registry("playfair");
    return reg;
}

std::string playfair_text() { return fixture::read(fixture::dir("playfair") / "Playfair.prf"); }

CheckReport check_playfair(const std::string& text) {
    return check_proof_text(playfair_registry(), "Playfair", text);
}

std::string replace_line(std::string text, int line, const std::string& with) {
    std::string out;
    std::size_t pos = 0;
    for (int n = 1; pos < text.size(); ++n) {
        std::size_t nl = text.find('\n', pos);
        std::string cur = text.substr(pos, nl - pos);
        if (n == line) {
            if (!with.empty()) out += with + "\n";
        } else {
            out += cur + "\n";
        }
        pos = nl + 1;
    }
    return out;
}

} // namespace

TEST(ParseProof, PlayfairStructure) {
    const TheoryItem& target = find_target(playfair_registry(), "Playfair");
    Proof p = parse_proof(playfair_text(), target);
    ASSERT_EQ(p.lines.size(), 30u);
    EXPECT_EQ(p.hypothesis_count, 2u);
    EXPECT_EQ(p.line(3).justification, Justification::Assumption);
    EXPECT_EQ(p.line(15).justification, Justification::Reductio);
    EXPECT_EQ(p.line(15).opener, 3);
    const ProofLine& cases = p.line(16);
    EXPECT_EQ(cases.justification, Justification::CasesOpen);
    EXPECT_EQ(cases.formula, P("COCDE"));
    EXPECT_EQ(Formula::disjunction(cases.disjuncts), P("ORCRADBC|CRACBD"));
    EXPECT_EQ(p.line(20).case_index, 2);
    EXPECT_EQ(p.line(30).justification, Justification::CasesClose);
    EXPECT_EQ(p.line(30).opener, 16);
    EXPECT_EQ(p.line(12).label, "betweennesssymmetry");
    EXPECT_EQ(p.line(12).cited_kind, ItemKind::Axiom);
    EXPECT_EQ(p.line(22).depth, 2);
}

TEST(ParseProof, BlockErrors) {
    const TheoryItem& target = find_target(playfair_registry(), "Playfair");
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\nqedcase\n", target); }), ErrorKind::UnbalancedBlocks);
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\nEQAB assumption\n", target); }), ErrorKind::UnbalancedBlocks);
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\nNOEQAB reductio\n", target); }), ErrorKind::UnbalancedBlocks);
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\ncases COCDE:EQAB|NOEQAB\ncase 3:EQAB\n", target); }),
              ErrorKind::BadCaseIndex);
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\ncases COCDE:EQAB|NOEQAB\ncase x:EQAB\n", target); }),
              ErrorKind::BadCaseIndex);
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\nCOCDE\nCOCDE lemma:Playfairhelper2\n", target); }),
              ErrorKind::MissingJustificationOnFirstStep);
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\nCOCDE lemma\n", target); }), ErrorKind::SyntaxError);
    EXPECT_EQ(failure([&] { parse_proof("PRABCD\nPRABCE\nXXCDE lemma:a\n", target); }), ErrorKind::UnknownPredicate);
}

TEST(CitedStep, BetweennessSymmetry) {
    Context ctx = context_with({"PRABCD", "BEDpB"});
    StepResult r = check_cited_step(ctx, P("BEBpD"), playfair_registry().lookup("betweennesssymmetry"));
    EXPECT_EQ(r.substitution, (Substitution{{'A', 'D'}, {'B', 'p'}, {'C', 'B'}}));
    EXPECT_EQ(r.sources, std::vector<int>{2});
}

TEST(CitedStep, WitnessIntroduction) {
    const Registry reg = fixture::appendix_only();
    Context ctx = context_with({"NEAB"});
    StepResult r = check_cited_step(ctx, P("CIJAAB"), reg.lookup("Euclid3"));
    EXPECT_EQ(r.witnesses, "J");
    EXPECT_EQ(r.substitution.at('A'), 'A');
    EXPECT_EQ(r.substitution.at('X'), 'J');
    Context stale = context_with({"NEAB", "ONAJ"});
    EXPECT_EQ(failure([&] { check_cited_step(stale, P("CIJAAB"), reg.lookup("Euclid3")); }), ErrorKind::StaleWitness);
    Context none = context_with({"EQAB"});
    EXPECT_EQ(failure([&] { check_cited_step(none, P("CIJAAB"), reg.lookup("Euclid3")); }), ErrorKind::MissingHypothesis);
    EXPECT_EQ(failure([&] { check_cited_step(none, P("CIJABB"), reg.lookup("Euclid3")); }), ErrorKind::NoInstantiation);
}

TEST(CitedStep, SingleConjunctOfConclusion) {
    const Registry& reg = playfair_registry();
    Context ctx = context_with({"PRABCD"});
    EXPECT_NO_THROW(check_cited_step(ctx, P("PRABDC"), reg.lookup("parallelflip")));
    EXPECT_NO_THROW(check_cited_step(ctx, P("ANPRBACD+PRABDC+PRBADC"), reg.lookup("parallelflip")));
    EXPECT_EQ(failure([&] { check_cited_step(ctx, P("ANPRBACD+PRABDC"), reg.lookup("parallelflip")); }),
              ErrorKind::NoInstantiation);
}

TEST(DefinitionStep, UnfoldAndFold) {
    const Registry& reg = playfair_registry();
    const TheoryItem& cross = reg.lookup("cross");
    Context ctx = context_with({"CRACDB"});
    StepResult u = check_definition_step(ctx, P("ANBEApC+BEDpB"), cross);
    EXPECT_EQ(u.witnesses, "p");
    EXPECT_EQ(u.sources, std::vector<int>{1});

    Context parts = context_with({"BEApC", "BEBpD"});
    StepResult f = check_definition_step(parts, P("CRACBD"), cross);
    EXPECT_EQ(f.substitution.at('X'), 'p');
    EXPECT_EQ(f.sources, (std::vector<int>{1, 2}));
    Context whole = context_with({"BEApC", "BEBpD", "ANBEApC+BEBpD"});
    EXPECT_EQ(check_definition_step(whole, P("CRACBD"), cross).sources, std::vector<int>{3});

    Context empty = context_with({"PRABCD"});
    EXPECT_EQ(failure([&] { check_definition_step(empty, P("CRACBD"), cross); }), ErrorKind::MissingBody);
    Context stale = context_with({"CRACDB", "BEApA"});
    EXPECT_EQ(failure([&] { check_definition_step(stale, P("ANBEApC+BEDpB"), cross); }), ErrorKind::StaleWitness);
    EXPECT_EQ(failure([&] { check_definition_step(empty, P("BEApC"), cross); }), ErrorKind::NoInstantiation);
    EXPECT_EQ(failure([&] { defn_head(reg.lookup("betweennesssymmetry")); }), ErrorKind::KindMismatch);
}

TEST(DefinitionStep, FoldThroughDisjunct) {
    const Registry reg = fixture::appendix_only();
    Context ctx = context_with({"CIKBBA", "EQBB"});
    EXPECT_NO_THROW(check_definition_step(ctx, P("ICBK"), reg.lookup("inside")));
}

TEST(UnjustifiedStep, Rules) {
    Context dm = context_with({"NOORCRADBC|CRACBD"});
    EXPECT_EQ(check_unjustified_step(dm, P("ANNOCRADBC+NOCRACBD")).rule, "R1");
    EXPECT_NO_THROW(check_unjustified_step(dm, P("NOCRACBD")));
    Context conj = context_with({"BEBpD", "BEApC"});
    StepResult r2 = check_unjustified_step(conj, P("ANBEBpD+BEApC"));
    EXPECT_EQ(r2.rule, "R2");
    EXPECT_EQ(r2.sources, (std::vector<int>{1, 2}));
    Context eq = context_with({"EQDA", "BEABC"});
    StepResult r6 = check_unjustified_step(eq, P("BEDBC"));
    EXPECT_EQ(r6.rule, "R6");
    EXPECT_EQ(r6.sources, (std::vector<int>{1, 2}));
    Context neg = context_with({"EQAB"});
    EXPECT_EQ(check_unjustified_step(neg, P("NONOEQAB")).rule, "R5");
    Context back = context_with({"NOEQAB", "NOEQBC"});
    EXPECT_EQ(check_unjustified_step(back, P("NOOREQAB|EQBC")).rule, "R4");
    EXPECT_EQ(failure([&] { check_unjustified_step(conj, P("BEABC")); }), ErrorKind::NotDerivable);
}

TEST(UnjustifiedStep, DepthBound) {
    Context ctx = context_with({"EQAB", "EQBC", "EQCD", "BEDxy"});
    EXPECT_NO_THROW(check_unjustified_step(ctx, P("BEAxy"), 3));
    EXPECT_EQ(failure([&] { check_unjustified_step(ctx, P("BEAxy"), 2); }), ErrorKind::NotDerivable);
}

TEST(Reductio, NeedsNegationAndContradiction) {
    auto no_pair = check_playfair("PRABCD\nPRABCE\nNOCOCDE assumption\n EQAA cn:equalityreflexive\nCOCDE reductio\n");
    ASSERT_EQ(no_pair.errors.size(), 1u);
    EXPECT_EQ(no_pair.errors.front().kind, ErrorKind::NoContradiction);
    EXPECT_EQ(no_pair.errors.front().source_line, 5);
    auto wrong = check_playfair("PRABCD\nPRABCE\nNOPRABCD assumption\n PRABCD\nNOEQAB reductio\n");
    ASSERT_FALSE(wrong.accepted);
    EXPECT_EQ(wrong.errors.front().kind, ErrorKind::NoContradiction);
}

TEST(Reductio, ExportsNegationOfPositiveAssumption) {
    Registry reg = fixture::registry("playfair");
    auto r = check_playfair("PRABCD\nPRABCE\nNOPRABCD assumption\n PRABCD\nPRABCD reductio\nCOCDE lemma:Playfairhelper2\n");
    EXPECT_FALSE(r.accepted); // the helper still needs CRADBC
    bool only_missing = true;
    for (const auto& e : r.errors) only_missing = only_missing && e.kind == ErrorKind::MissingHypothesis;
    EXPECT_TRUE(only_missing);
}

TEST(Cases, ExcludedMiddleAndMissingCase) {
    std::string text =
        "PRABCD\nPRABCE\ncases COCDE:CRADBC|NOCRADBC\n case 1:CRADBC\n  COCDE lemma:Playfairhelper2\n qedcase\n"
        " case 2:NOCRADBC\n  CRACDB lemma:crisscross\n";
    auto missing = check_playfair(
        "PRABCD\nPRABCE\ncases COCDE:CRADBC|NOCRADBC\n case 1:CRADBC\n  COCDE lemma:Playfairhelper2\n qedcase\nCOCDE "
        "cases\n");
    ASSERT_FALSE(missing.accepted);
    EXPECT_EQ(missing.errors.front().kind, ErrorKind::MissingCase);
    auto unavailable = check_playfair(
        "PRABCD\nPRABCE\ncases COCDE:CRADBC|CRACBD\n case 1:CRADBC\n  COCDE lemma:Playfairhelper2\n qedcase\n case "
        "2:CRACBD\n  COCDE lemma:Playfairhelper2\n qedcase\nCOCDE cases\n");
    ASSERT_FALSE(unavailable.accepted);
    EXPECT_EQ(unavailable.errors.front().kind, ErrorKind::DisjunctionUnavailable);
    auto order = check_playfair(
        "PRABCD\nPRABCE\ncases COCDE:CRADBC|NOCRADBC\n case 2:NOCRADBC\n  COCDE lemma:Playfairhelper2\n qedcase\n "
        "case 1:CRADBC\n  COCDE lemma:Playfairhelper2\n qedcase\nCOCDE cases\n");
    ASSERT_FALSE(order.accepted);
    EXPECT_EQ(order.errors.front().kind, ErrorKind::IndexOutOfOrder);
    (void)text;
}

TEST(CheckProof, PlayfairAccepted) {
    auto t0 = std::chrono::steady_clock::now();
    CheckReport r = check_playfair(playfair_text());
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& e : r.errors) ADD_FAILURE() << e.message;
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.inferences, 28);
    EXPECT_LT(ms, 100);
    EXPECT_EQ(r.lines[11].sources, std::vector<int>{11});
    EXPECT_EQ(r.lines[8].witnesses, "p");
    EXPECT_EQ(r.lines[20].witnesses, "p");
    EXPECT_EQ(r.lines[14].sources, (std::vector<int>{3, 6, 14}));
}

TEST(CheckProof, Deterministic) {
    CheckReport a = check_playfair(playfair_text()), b = check_playfair(playfair_text());
    ASSERT_EQ(a.lines.size(), b.lines.size());
    for (std::size_t i = 0; i < a.lines.size(); ++i) {
        EXPECT_EQ(a.lines[i].sources, b.lines[i].sources);
        EXPECT_EQ(a.lines[i].substitution, b.lines[i].substitution);
        EXPECT_EQ(a.lines[i].rule, b.lines[i].rule);
    }
}

TEST(CheckProof, DeletingBetweennessSymmetryLine) {
    CheckReport r = check_playfair(replace_line(playfair_text(), 12, ""));
    ASSERT_FALSE(r.accepted);
    EXPECT_EQ(r.errors.front().source_line, 12); // the old line 13 moved up
}

TEST(CheckProof, WrongFinalLine) {
    CheckReport r = check_playfair(replace_line(playfair_text(), 30, "COCED cases"));
    ASSERT_FALSE(r.accepted);
    std::set<ErrorKind> kinds;
    for (const auto& e : r.errors) kinds.insert(e.kind);
    EXPECT_TRUE(kinds.count(ErrorKind::CaseGoalMismatch));
    EXPECT_TRUE(kinds.count(ErrorKind::FinalLineMismatch));
}

TEST(CheckProof, WitnessesAreFreshInAcceptedProofs) {
    for (const char* name : {"playfair", "prop01"}) {
        Registry reg = fixture::registry(name);
        std::string label = std::string(name) == "playfair" ? "Playfair" : "Prop01";
        CheckReport r = check_proof_text(reg, label, fixture::read(fixture::dir(name) / (label + ".prf")));
        ASSERT_TRUE(r.accepted) << name;
        for (const auto& v : r.lines) {
            for (char w : v.witnesses) {
                // not in any formula visible at that point: every source-able earlier line in open scopes
                for (int s : v.sources) EXPECT_FALSE(occurs(w, r.proof.line(s).formula));
            }
            for (int s : v.sources) EXPECT_LT(s, v.number);
        }
    }
}

TEST(CheckProof, ScopeSoundness) {
    CheckReport r = check_playfair(playfair_text());
    const Proof& p = r.proof;
    // a source inside a block must belong to a block still open at the consumer
    auto block_of = [&](int n) {
        std::vector<int> open;
        for (const auto& l : p.lines) {
            if (l.number > n) break;
            if (l.justification == Justification::Assumption || l.justification == Justification::CaseOpen)
                open.push_back(l.number);
            if ((l.justification == Justification::Reductio || l.justification == Justification::QedCase) &&
                l.number < n)
                open.pop_back();
        }
        return open;
    };
    for (const auto& v : r.lines) {
        auto consumer = block_of(v.number);
        for (int s : v.sources) {
            auto src = block_of(s);
            if (p.line(s).justification == Justification::Assumption || p.line(s).justification == Justification::CaseOpen)
                src.pop_back();
            if (v.rule == "reductio" || v.rule == "qedcase" || v.rule == "cases") continue;
            for (int b : src) EXPECT_NE(std::find(consumer.begin(), consumer.end(), b), consumer.end())
                << "line " << v.number << " uses " << s;
        }
    }
}

TEST(CheckProof, Prop01Accepted) {
    Registry reg = fixture::registry("prop01");
    CheckReport r = check_proof_text(reg, "Prop01", fixture::read(fixture::dir("prop01") / "Prop01.prf"));
    for (const auto& e : r.errors) ADD_FAILURE() << e.message;
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.inferences, 61);
    EXPECT_EQ(r.lines[1].witnesses, "J");
    EXPECT_EQ(r.lines[17].witnesses, "C");
}

TEST(CheckProof, HypothesisOnlyProof) {
    Registry reg(parse_theory_file("lemma-restate\nforall A B, NE(A,B) ==> NE(A,B)\n"), {});
    CheckReport r = check_proof_text(reg, "restate", "NEAB\nNEAB\n");
    EXPECT_TRUE(r.accepted);
    EXPECT_EQ(r.inferences, 1);
}

TEST(CheckProof, HypothesisPrefixMustMatchInOrder) {
    CheckReport r = check_playfair(replace_line(replace_line(playfair_text(), 1, "PRABCE"), 2, "PRABCD"));
    ASSERT_FALSE(r.accepted);
    EXPECT_EQ(r.errors.front().kind, ErrorKind::HypothesisMismatch);
}

TEST(CheckProof, Circularity) {
    std::vector<TheoryItem> items = parse_theory_file(fixture::read(fixture::appendix()));
    for (auto& i : parse_theory_file(fixture::read(fixture::dir("playfair") / "stubs.thy"))) items.push_back(i);
    Registry reversed(items, {"Playfair", "Playfairhelper2"});
    CheckReport r = check_proof_text(reversed, "Playfair", playfair_text());
    ASSERT_FALSE(r.accepted);
    EXPECT_EQ(r.errors.front().kind, ErrorKind::ForwardReference);
}

class PlayfairMutation : public testing::TestWithParam<mutation::Mutation> {};

TEST_P(PlayfairMutation, RejectedAtTheEditedLine) {
    static const Registry reg = fixture::registry("playfair");
    const auto& m = GetParam();
    std::string text = mutation::apply(fixture::read(fixture::dir("playfair") / "Playfair.prf"), m);
    auto line = mutation::first_failure(reg, text);
    ASSERT_TRUE(line.has_value()) << m.name << " was accepted";
    EXPECT_EQ(*line, m.expected_line) << m.name;
}

INSTANTIATE_TEST_SUITE_P(Checker, PlayfairMutation, testing::ValuesIn(mutation::playfair_mutations()),
                         [](const testing::TestParamInfo<mutation::Mutation>& info) {
                             std::string s = info.param.name;
                             for (char& c : s)
                                 if (c == '-') c = '_';
                             return s;
                         });
