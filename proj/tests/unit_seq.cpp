#include <catch2/catch_amalgamated.hpp>

#include "lexishift/seq.hpp"

#include <random>

using namespace lexishift;

namespace {

EPSeq S(const std::string& t) { return EPSeq::parse(t); }

EPSeq random_seq(std::mt19937& rng) {
    std::uniform_int_distribution<int> pre_len(0, 4), per_len(1, 5), bit(0, 1);
    Word pre, per;
    int np = pre_len(rng), nq = per_len(rng);
    for (int i = 0; i < np; ++i) pre += char('0' + bit(rng));
    for (int i = 0; i < nq; ++i) per += char('0' + bit(rng));
    return EPSeq(pre, per);
}

}  // namespace

TEST_CASE("canonical form: primitive period, minimal preperiod") {
    CHECK(S("(0101)") == S("(01)"));
    CHECK(S("11(01)") == S("1(10)"));  // same sequence 1101010...
    CHECK(S("11(01)").str() == "1(10)");
    CHECK(S("0(0)") == S("(0)"));
    CHECK(S("01(100)").str() == "01(100)");  // already canonical
    CHECK(S("(111)").str() == "(1)");
    std::mt19937 rng(20240817);
    for (int i = 0; i < 500; ++i) {
        EPSeq x = random_seq(rng);
        CHECK(is_primitive(x.per));
        CHECK((x.pre.empty() || x.pre.back() != x.per.back()));
        // Re-canonicalising a canonical value is the identity.
        CHECK(EPSeq(x.pre, x.per) == x);
    }
}

TEST_CASE("parse round trip and grammar errors") {
    CHECK(S("01(100)").pre == "01");
    CHECK(S("(10)").pre.empty());
    for (const char* bad : {"", "01", "()", "2(01)", "(01", "01)", "0(1)x"})
        CHECK_THROWS_AS(EPSeq::parse(bad), lexi_error);
    std::mt19937 rng(7);
    for (int i = 0; i < 200; ++i) {
        EPSeq x = random_seq(rng);
        CHECK(EPSeq::parse(x.str()) == x);
    }
}

TEST_CASE("lex_cmp pinned examples") {
    CHECK(lex_cmp(S("(100)"), S("(10)")) < 0);
    CHECK(lex_cmp(S("(10)"), S("(10)")) == 0);
    CHECK(lex_cmp(S("(0)"), S("(01)")) < 0);
}

TEST_CASE("lex_cmp is a total order consistent with projection") {
    std::mt19937 rng(99);
    for (int i = 0; i < 300; ++i) {
        EPSeq x = random_seq(rng), y = random_seq(rng), z = random_seq(rng);
        int xy = lex_cmp(x, y);
        CHECK(xy == -lex_cmp(y, x));
        CHECK((lex_cmp(x, y) != 0 || x == y));
        if (xy <= 0 && lex_cmp(y, z) <= 0) CHECK(lex_cmp(x, z) <= 0);
        // Order agrees with numeric order away from dual-expansion ambiguity.
        if (x.per != "0" && x.per != "1" && y.per != "0" && y.per != "1") {
            Rat px = project(x), py = project(y);
            if (xy < 0) CHECK(px < py);
            if (xy > 0) CHECK(px > py);
        }
    }
}

TEST_CASE("shift") {
    CHECK(shift(S("(01)"), 1) == S("(10)"));
    CHECK(shift(S("01(100)"), 2) == S("(100)"));
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        EPSeq x = random_seq(rng);
        CHECK(shift(x, 0) == x);
        CHECK(shift(shift(x, 2), 3) == shift(x, 5));
    }
}

TEST_CASE("mirror") {
    CHECK(mirror(S("(110)")) == S("(001)"));
    CHECK(mirror(S("(0)")) == S("(1)"));
    std::mt19937 rng(4);
    for (int i = 0; i < 200; ++i) {
        EPSeq x = random_seq(rng), y = random_seq(rng);
        CHECK(mirror(mirror(x)) == x);
        // mirror reverses the order
        CHECK(lex_cmp(x, y) == -lex_cmp(mirror(x), mirror(y)));
    }
}

TEST_CASE("seq_dist pinned values and ultrametric") {
    CHECK(seq_dist(S("(01)"), S("(0)")) == Rat(1, 4));
    CHECK(seq_dist(S("(10)"), S("(10)")) == 0);
    CHECK(seq_dist(S("(1)"), S("(0)")) == Rat(1, 2));
    std::mt19937 rng(5);
    for (int i = 0; i < 300; ++i) {
        EPSeq x = random_seq(rng), y = random_seq(rng), z = random_seq(rng);
        Rat xz = seq_dist(x, z), xy = seq_dist(x, y), yz = seq_dist(y, z);
        CHECK(xz <= std::max(xy, yz));
        CHECK(seq_dist(x, y) == seq_dist(y, x));
    }
}

TEST_CASE("project pinned values") {
    CHECK(project(S("(01)")) == Rat(1, 3));
    CHECK(project(S("1(0)")) == Rat(1, 2));
    CHECK(project(S("(0)")) == 0);
    CHECK(project(S("(1)")) == 1);
    CHECK(project(S("(110)")) == Rat(6, 7));
}

TEST_CASE("expand pinned values and dyadic convention") {
    CHECK(expand(Rat(1, 3)) == S("(01)"));
    CHECK(expand(Rat(1, 2)) == S("1(0)"));  // 10^∞ by the fixed convention
    CHECK(expand(Rat(5, 6)) == S("11(01)"));
    CHECK(expand(Rat(0)) == S("(0)"));
    CHECK(expand(Rat(1)) == S("(1)"));
    CHECK(expand(Rat(3, 4)) == S("11(0)"));
}

TEST_CASE("project/expand round trips") {
    std::mt19937 rng(6);
    std::uniform_int_distribution<int> den(1, 400);
    for (int i = 0; i < 300; ++i) {
        int q = den(rng);
        std::uniform_int_distribution<int> num(0, q);
        Rat r(num(rng), q);
        CHECK(project(expand(r)) == r);
    }
    for (int i = 0; i < 300; ++i) {
        EPSeq x = random_seq(rng);
        if (x.per == "0" || x.per == "1") continue;  // dual-expansion values
        CHECK(expand(project(x)) == x);
    }
}

TEST_CASE("is_parry pinned values") {
    CHECK(is_parry(S("(10)")));
    CHECK_FALSE(is_parry(S("(101)")));
    CHECK(is_parry(S("(1)")));
    CHECK(is_parry(S("(110)")));
    CHECK(is_parry(S("11(0)")));
    CHECK_FALSE(is_parry(S("(011)")));  // leading symbol 0
    CHECK(is_parry(S("1(10)")));
}

TEST_CASE("Parry sequences have no over-long 1-blocks") {
    // For Parry α ≠ 1^∞ the factor 1^k is impossible for k > |pre|+|per|.
    std::mt19937 rng(8);
    int checked = 0;
    for (int i = 0; i < 2000 && checked < 200; ++i) {
        EPSeq x = random_seq(rng);
        if (!is_parry(x) || x == S("(1)")) continue;
        ++checked;
        std::size_t longest = 0, run = 0;
        for (std::size_t j = 0; j < x.pre.size() + 3 * x.per.size(); ++j) {
            run = (x.at(j) == '1') ? run + 1 : 0;
            longest = std::max(longest, run);
        }
        CHECK(longest <= x.bound());
    }
    CHECK(checked >= 100);
}

TEST_CASE("varsigma pinned values and Parry output") {
    CHECK(varsigma(S("(101)")) == S("(10)"));
    CHECK(varsigma(S("(100110)")) == S("(100)"));
    CHECK_THROWS_AS(varsigma(S("(10)")), lexi_error);   // already Parry
    CHECK_THROWS_AS(varsigma(S("(01)")), lexi_error);   // leading 0
    std::mt19937 rng(9);
    int checked = 0;
    for (int i = 0; i < 3000 && checked < 150; ++i) {
        EPSeq x = random_seq(rng);
        if (x.at(0) != '1' || is_parry(x)) continue;
        ++checked;
        CHECK(is_parry(varsigma(x)));
    }
    CHECK(checked >= 50);
}

TEST_CASE("admissible pinned verdicts") {
    CHECK(admissible(S("(10)"), S("(01)")).ok);
    CHECK(admissible(S("(1)"), S("(0)")).ok);  // full shift
    Verdict v = admissible(S("(101)"), S("(001)"));
    CHECK_FALSE(v.ok);
    CHECK(v.reason == "alpha not Parry");
    CHECK(admissible(S("(110)"), S("(001)")).ok);
    CHECK(admissible(S("(110)"), S("(01)")).ok);
    CHECK(admissible(S("(1)"), S("0(1)")).ok);  // mirror(01^∞) = 10^∞ is Parry
    CHECK(admissible(S("(1)"), S("(001100)")).reason == "mirror(beta) not Parry");
    CHECK(admissible(S("(10)"), S("(0011)")).reason == "a shift of beta rises above alpha");
    CHECK(admissible(S("(10)"), S("(011)")).reason == "a shift of alpha falls below beta");
}

TEST_CASE("admissibility is mirror-symmetric") {
    std::mt19937 rng(10);
    for (int i = 0; i < 400; ++i) {
        EPSeq a = random_seq(rng), b = random_seq(rng);
        CHECK(admissible(a, b).ok == admissible(mirror(b), mirror(a)).ok);
    }
}
