#include <gtest/gtest.h>

#include <map>
#include <random>

#include "euc/theory.hpp"
#include "support.hpp"

using namespace euc;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::IoError;
}

} // namespace

TEST(Appendix, ItemCountsBySection) {
    auto items = parse_theory_file(fixture::read(fixture::appendix()));
    EXPECT_EQ(items.size(), 77u);
    std::map<std::string, int> sections;
    std::map<ItemKind, int> kinds;
    for (const auto& i : items) {
        ++sections[i.section];
        ++kinds[i.kind];
    }
    EXPECT_EQ(sections["definitions"], 39);
    EXPECT_EQ(sections["common notions"], 8);
    EXPECT_EQ(sections["betweenness and congruence"], 6);
    EXPECT_EQ(sections["postulates"], 8);
    EXPECT_EQ(sections["equal figures"], 16);
    EXPECT_EQ(kinds[ItemKind::Definition], 39);
    EXPECT_EQ(kinds[ItemKind::CommonNotion], 8);
}

TEST(Appendix, SerializationIsByteStable) {
    std::string text = fixture::read(fixture::appendix());
    auto items = parse_theory_file(text);
    EXPECT_EQ(serialize_theory(items), text);
    auto again = parse_theory_file(serialize_theory(items));
    ASSERT_EQ(again.size(), items.size());
    for (std::size_t i = 0; i < items.size(); ++i) EXPECT_TRUE(same_statement(items[i], again[i])) << items[i].label;
}

TEST(Appendix, Hygiene) {
    auto items = parse_theory_file(fixture::read(fixture::appendix()));
    for (const auto& i : items) {
        EXPECT_EQ(unbound_variables(i), "") << i.qualified();
        for (char v : i.existentials) EXPECT_EQ(i.universals.find(v), std::string::npos) << i.qualified();
        for (const auto& h : i.hypotheses)
            for (char v : variables(h))
                EXPECT_EQ(i.existentials.find(v), std::string::npos) << i.qualified();
    }
}

TEST(Appendix, DefinitionHeadsUseDistinctVariables) {
    auto items = parse_theory_file(fixture::read(fixture::appendix()));
    std::set<std::string> heads;
    for (const auto& i : items) {
        if (i.kind != ItemKind::Definition) continue;
        const Formula& h = defn_head(i);
        EXPECT_TRUE(heads.insert(std::string(h.predicate())).second) << h.predicate();
        std::string args = h.args();
        EXPECT_EQ(std::set<char>(args.begin(), args.end()).size(), args.size());
        EXPECT_EQ(i.label, default_definition_label(h.predicate()));
    }
    EXPECT_EQ(heads.size(), 39u);
}

TEST(Parse, ExamplesAndSplitting) {
    auto items = parse_theory_file("lemma-x\nforall A B C, BE(A,B,C) /\\ ~EQ(A,C) ==> exists X, BE(C,B,A) /\\ (EQ(A,X) \\/ EQ(B,X))\n");
    ASSERT_EQ(items.size(), 1u);
    const auto& x = items[0];
    EXPECT_EQ(x.universals, "ABC");
    EXPECT_EQ(x.existentials, "X");
    ASSERT_EQ(x.hypotheses.size(), 2u);
    EXPECT_EQ(print_formula(x.hypotheses[1]), "NOEQAC");
    ASSERT_EQ(x.conclusions.size(), 2u);
    EXPECT_EQ(print_formula(x.conclusions[1]), "OREQAX|EQBX");
    EXPECT_EQ(print_formula(x.conclusion()), "ANBECBA+OREQAX|EQBX");
    EXPECT_EQ(serialize_item(x),
              "lemma-x\nforall A B C, BE(A,B,C) /\\ ~EQ(A,C) ==> exists X, BE(C,B,A) /\\ (EQ(A,X) \\/ EQ(B,X))\n");
}

TEST(Parse, BareDefinitionGetsDefaultLabel) {
    auto items = parse_theory_file("NE(A,B) := ~EQ(A,B)\n");
    ASSERT_EQ(items.size(), 1u);
    EXPECT_EQ(items[0].qualified(), "defn:unequal");
    EXPECT_EQ(print_formula(defn_head(items[0])), "NEAB");
}

TEST(Parse, MultiLineItemsAndImplicitUniversals) {
    auto items = parse_theory_file("axiom-a\nBE(A,B,C)\n  ==> BE(C,B,A)\n\n\ncn-b\nEQ(A,A)\n");
    ASSERT_EQ(items.size(), 2u);
    EXPECT_EQ(items[0].universals, "ABC");
    EXPECT_EQ(items[0].line, 2);
    EXPECT_EQ(items[1].qualified(), "cn:b");
    EXPECT_EQ(items[1].line, 7);
}

TEST(Parse, Errors) {
    EXPECT_EQ(kind_of([] { parse_theory_file("theorem-x\nEQ(A,A)\n"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of([] { parse_theory_file("lemma-x\n"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of([] { parse_theory_file("lemma-x\nEQ(A,A) EQ(B,B)\n"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of([] { parse_theory_file("lemma-x\nNE(A,B) := ~EQ(A,B)\n"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of([] { parse_theory_file("defn-x\nEQ(A,B)\n"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of([] { parse_theory_file("NE(A,A) := ~EQ(A,A)\n"); }), ErrorKind::SyntaxError);
    EXPECT_EQ(kind_of([] { parse_theory_file("lemma-x\nEQ(A,A)\n\nlemma-x\nEQ(B,B)\n"); }), ErrorKind::DuplicateLabel);
    EXPECT_EQ(kind_of([] { parse_theory_file("lemma-x\nXX(A,A)\n"); }), ErrorKind::UnknownPredicate);
    EXPECT_EQ(kind_of([] { parse_theory_file("lemma-x\nEQ(A)\n"); }), ErrorKind::ArityMismatch);
    EXPECT_EQ(kind_of([] { parse_theory_file("lemma-x\nCI(J,A,B,C) ==> EQ(A,J)\n"); }), ErrorKind::SortClash);
    EXPECT_EQ(kind_of([] { parse_theory_file("# a\n# b\n"); }), ErrorKind::SyntaxError);
}

TEST(Parse, ErrorsCarryLineNumbers) {
    try {
        parse_theory_file("cn-a\nEQ(A,A)\n\nlemma-b\nEQ(A,\n");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.line(), 5);
    }
}

TEST(Parse, SameLabelDifferentKindsCoexist) {
    auto reg = fixture::appendix_only();
    EXPECT_EQ(reg.lookup(ItemKind::CommonNotion, "equalityreflexive").kind, ItemKind::CommonNotion);
    Registry both(parse_theory_file("cn-t\nEQ(A,A)\n\nlemma-t\nEQ(B,B)\n"), {});
    EXPECT_EQ(both.lookup("lemma:t").kind, ItemKind::Lemma);
    EXPECT_EQ(both.lookup("cn:t").kind, ItemKind::CommonNotion);
    EXPECT_EQ(kind_of([&] { both.lookup("t"); }), ErrorKind::UnknownItem);
}

TEST(Registry, LookupErrors) {
    auto reg = fixture::appendix_only();
    EXPECT_EQ(reg.lookup("axiom:betweennesssymmetry").label, "betweennesssymmetry");
    EXPECT_EQ(kind_of([&] { reg.lookup(ItemKind::Lemma, "betweennesssymmetry"); }), ErrorKind::KindMismatch);
    EXPECT_EQ(kind_of([&] { reg.lookup("nosuchthing"); }), ErrorKind::UnknownItem);
    EXPECT_EQ(kind_of([&] { reg.lookup("theorem:x"); }), ErrorKind::UnknownItem);
    EXPECT_EQ(kind_of([&] { defn_head(reg.lookup("axiom:betweennesssymmetry")); }), ErrorKind::KindMismatch);
}

TEST(Registry, MasterListIndices) {
    auto reg = fixture::registry("playfair");
    EXPECT_EQ(reg.lookup("lemma:Playfairhelper2").index, 0);
    EXPECT_EQ(reg.lookup("lemma:Playfair").index, 1);
    EXPECT_FALSE(reg.lookup("lemma:parallelflip").index.has_value());
    EXPECT_EQ(reg.lookup("lemma:Playfairhelper2", 1).label, "Playfairhelper2");
    EXPECT_EQ(kind_of([&] { reg.lookup("lemma:Playfair", 0); }), ErrorKind::ForwardReference);
    EXPECT_EQ(kind_of([&] { reg.lookup("lemma:Playfair", 1); }), ErrorKind::ForwardReference);
    // unindexed stubs may be cited from anywhere
    EXPECT_NO_THROW(reg.lookup("lemma:crisscross", 0));
}

TEST(Registry, MasterListErrors) {
    auto items = parse_theory_file("lemma-a\nEQ(A,A)\n\naxiom-b\nEQ(A,A)\n");
    EXPECT_EQ(kind_of([&] { Registry(items, {"zzz"}); }), ErrorKind::MissingLabel);
    EXPECT_EQ(kind_of([&] { Registry(items, {"b"}); }), ErrorKind::KindMismatch);
    EXPECT_EQ(kind_of([&] { Registry(items, {"a", "a"}); }), ErrorKind::DuplicateLabel);
    auto dup = items;
    dup.push_back(items[0]);
    EXPECT_EQ(kind_of([&] { Registry(dup, {}); }), ErrorKind::DuplicateLabel);
}

TEST(Registry, MasterListParsing) {
    EXPECT_EQ(parse_master_list("a\n\n  b  \r\nc"), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Registry, DirectoryLoadsEveryTheoryFile) {
    auto reg = load_registry({fixture::root() / "data" / "theory", fixture::dir("playfair")},
                             fixture::dir("playfair") / "master.txt");
    EXPECT_EQ(reg.size(), 77u + 5u);
    EXPECT_EQ(kind_of([] { load_registry({fixture::root() / "no" / "such.thy"}, std::nullopt); }), ErrorKind::IoError);
}

TEST(RoundTrip, RandomItems) {
    std::mt19937 rng(7);
    auto items = parse_theory_file(fixture::read(fixture::appendix()));
    // reshuffle sections and reorder items: serialization still round trips
    for (int round = 0; round < 20; ++round) {
        auto sample = items;
        std::shuffle(sample.begin(), sample.end(), rng);
        sample.resize(1 + rng() % sample.size());
        for (auto& s : sample) s.line = 0;
        auto back = parse_theory_file(serialize_theory(sample));
        ASSERT_EQ(back.size(), sample.size());
        for (std::size_t i = 0; i < sample.size(); ++i) EXPECT_TRUE(same_statement(sample[i], back[i]));
    }
}
