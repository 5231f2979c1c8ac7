#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace rnna;
using fixture::lasso;
using fixture::name;
using fixture::word;

namespace {

NameSet set_of(std::initializer_list<const char*> spellings)
{
    NameSet out;
    for (auto s : spellings)
        out.insert(name(s));
    return out;
}

} // namespace

TEST_CASE("least fresh names skip used ones")
{
    NameSet used{Name{0}, Name{1}, Name{3}};
    CHECK(least_fresh(used) == Name{2});
    CHECK(least_fresh({}) == Name{0});
    auto many = least_fresh(used, 3);
    CHECK(many == oracle::names({2, 4, 5}));
}

TEST_CASE("permutations")
{
    Name a{0}, b{1}, c{2};
    auto ab = Permutation::transposition(a, b);
    CHECK(ab(a) == b);
    CHECK(ab(c) == c);
    CHECK((ab * ab).is_identity());
    CHECK(Permutation::transposition(a, a).is_identity());

    auto cycle = Permutation::from_pairs({{a, b}, {b, c}, {c, a}});
    CHECK((cycle * cycle.inverse()).is_identity());
    CHECK((cycle * ab)(a) == c); // cycle(ab(a)) = cycle(b)
    CHECK_THROWS_AS(Permutation::from_pairs({{a, b}}), Error);
    CHECK_THROWS_AS(Permutation::from_pairs({{a, b}, {a, c}}), Error);
}

TEST_CASE("permutations act letterwise")
{
    auto ab = Permutation::transposition(name("a"), name("b"));
    CHECK(apply_perm(Permutation{}, word("|a a")) == word("|a a"));
    CHECK(apply_perm(ab, word("|a a b")) == word("|b b a"));
    CHECK(apply_perm(ab, lasso("_ ; |a a")) == lasso("_ ; |b b"));
}

TEST_CASE("free names and names")
{
    CHECK(free_names(word("a |a b a")) == set_of({"a", "b"}));
    CHECK(free_names(word("|a a b a")) == set_of({"b"}));
    CHECK(free_names(BarString{}).empty());
    CHECK(names_of(word("|a a b a")) == set_of({"a", "b"}));
    CHECK(names_of(BarString{}).empty());
    CHECK(names_of(lasso("a ; |b b")) == set_of({"a", "b"}));
    // A name first seen in the cycle as a plain letter is free.
    CHECK(free_names(lasso("|a ; b |a")) == set_of({"b"}));
}

TEST_CASE("erasing bars")
{
    CHECK(ub(word("|a a |a |b b")) == word("a a a b b"));
    CHECK(ub(word("a b c")) == word("a b c"));
    CHECK(ub(lasso("|a ; |b b")) == lasso("a ; b b"));
}

TEST_CASE("clean bar strings")
{
    CHECK(is_clean(word("|a |b b")));
    CHECK_FALSE(is_clean(word("a |a b a")));
    CHECK_FALSE(is_clean(lasso("_ ; |a a")));
    CHECK(is_clean(lasso("|a ; a")));
    CHECK_FALSE(is_clean(lasso("|a ; |b")));
}

TEST_CASE("cleanify renames repeated binders")
{
    CHECK(cleanify(word("|a a")) == word("|a a"));

    auto w = word("|a |a a");
    auto clean = cleanify(w);
    CHECK(is_clean(clean));
    CHECK(alpha_equiv(clean, w));
    REQUIRE(clean.size() == 3);
    CHECK(clean[1].name != clean[0].name);
    CHECK(clean[2] == Letter::plain(clean[1].name));

    auto long_word = word("|a a |b b |a a |b b");
    auto c = cleanify(long_word);
    CHECK(is_clean(c));
    CHECK(alpha_equiv(c, long_word));
    CHECK(names_of(c).size() == 4);

    CHECK_THROWS_AS(cleanify(word("|a |a"), {}), Error);
}

TEST_CASE("scope annotation")
{
    using K = Scope::Kind;
    auto s = annotate(word("|a a"));
    REQUIRE(s.size() == 2);
    CHECK(s[0].kind == K::Binder);
    CHECK(s[1] == Scope::bound(0));

    s = annotate(word("a |a a"));
    CHECK(s[0] == Scope::free(name("a")));
    CHECK(s[1].kind == K::Binder);
    CHECK(s[2] == Scope::bound(1));

    s = annotate(word("|a |b a"));
    CHECK(s[2] == Scope::bound(0));
}

TEST_CASE("finite alpha-equivalence")
{
    CHECK(alpha_equiv(word("|a a"), word("|b b")));
    CHECK(alpha_equiv(word("|a b |a"), word("|a b |a")));
    CHECK_FALSE(alpha_equiv(word("|a a b"), word("|b b b")));
    CHECK_FALSE(alpha_equiv(word("|a"), word("|a a")));
    CHECK_FALSE(alpha_equiv(word("a"), word("b")));
}

TEST_CASE("lasso alpha-equivalence")
{
    CHECK(alpha_equiv(lasso("_ ; |a a"), lasso("_ ; |a a |b b")));
    CHECK(alpha_equiv(lasso("_ ; |a a"), lasso("_ ; |a a")));
    CHECK_FALSE(alpha_equiv(lasso("_ ; |a a"), lasso("_ ; |a b")));
    CHECK(alpha_equiv(lasso("_ ; |a"), lasso("|a |b ; |b")));
    CHECK(alpha_equiv(lasso("a ; |b b"), lasso("a |c ; c |b b |c")));
    // A binder in the spine stays visible from the whole cycle.
    CHECK_FALSE(alpha_equiv(lasso("|a ; a"), lasso("|a ; |a a")));
}

TEST_CASE("finite alpha-equivalence matches rewriting on short strings")
{
    // Full coverage up to length 5 runs in the acceptance suite.
    for (std::size_t n = 0; n <= 3; ++n) {
        auto classes = oracle::rewrite_classes(n, 2, 2 + n);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i; j < classes.size(); ++j) {
                auto v = oracle::decode(i, n, 2), w = oracle::decode(j, n, 2);
                CHECK((classes[i] == classes[j]) == alpha_equiv(v, w));
            }
    }
}

TEST_CASE("reshape and normalize keep the infinite word")
{
    auto w = lasso("a ; |b b");
    auto r = reshape(w, 3, 2);
    CHECK(r.spine().size() == 3);
    CHECK(r.cycle().size() == 4);
    CHECK(r.prefix(20) == w.prefix(20));
    CHECK(normalize(r) == w);
    CHECK(normalize(lasso("|a |a ; |a |a")) == lasso("_ ; |a"));
    CHECK(normalize(lasso("b a ; b a")) == lasso("_ ; b a"));
    CHECK_THROWS_AS(reshape(w, 0, 1), Error);
}

TEST_CASE("text syntax for words")
{
    NameTable t;
    auto w = parse_lasso("|x y ; |y", t);
    CHECK(format_lasso(w, t) == "|x y ; |y");
    CHECK(format_lasso(parse_lasso("_ ; a", t), t) == "_ ; a");
    CHECK(format_lasso(parse_lasso("; a", t), t) == "_ ; a");
    CHECK(parse_string("_", t).empty());
    CHECK_THROWS_AS(parse_lasso("a b", t), ParseError);
    CHECK_THROWS_AS(parse_lasso("a ;", t), ParseError);
    CHECK_THROWS_AS(parse_lasso("a ; b ; c", t), ParseError);
    CHECK_THROWS_AS(parse_string("|", t), ParseError);
    CHECK_THROWS_AS(parse_string("a;b", t), ParseError);
    try {
        parse_lasso("a ; b ?", t);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.column() == 7);
    }
}

TEST_CASE("unknown names print without clashing")
{
    NameTable t;
    t.intern("n1"); // id 0 is spelled n1
    CHECK(t.spell(Name{0}) == "n1");
    CHECK(t.spell(Name{1}) == "n1'");
    CHECK(t.spell(Name{5}) == "n5");
    CHECK(valid_identifier("a'"));
    CHECK_FALSE(valid_identifier("'a"));
    CHECK_FALSE(valid_identifier("_"));
    CHECK_FALSE(valid_identifier(""));
}
