#include <catch2/catch_amalgamated.hpp>

#include "lexishift/words.hpp"

#include <numeric>
#include <random>

using namespace lexishift;

static EPSeq S(const std::string& t) { return EPSeq::parse(t); }

TEST_CASE("ratio normalisation and validation") {
    CHECK(Ratio(2, 4) == Ratio(1, 2));
    CHECK(Ratio(6, 9).str() == "2/3");
    CHECK(parse_ratio("2/5") == Ratio(2, 5));
    CHECK_THROWS_AS(Ratio(0, 3), lexi_error);
    CHECK_THROWS_AS(Ratio(3, 3), lexi_error);
    CHECK_THROWS_AS(Ratio(5, 3), lexi_error);
    CHECK_THROWS_AS(parse_ratio("0/7"), lexi_error);
    CHECK_THROWS_AS(parse_ratio("7/7"), lexi_error);
    CHECK_THROWS_AS(parse_ratio("x"), lexi_error);
}

TEST_CASE("cyclic balance") {
    CHECK(is_cyclically_balanced("01"));
    CHECK(is_cyclically_balanced("0"));
    CHECK(is_cyclically_balanced("1"));
    CHECK(is_cyclically_balanced("01010"));
    CHECK(is_cyclically_balanced("00101"));
    CHECK(is_cyclically_balanced("010"));
    CHECK_FALSE(is_cyclically_balanced("0011"));
    CHECK_FALSE(is_cyclically_balanced("0101100"));
    CHECK_THROWS_AS(is_cyclically_balanced(""), lexi_error);
}

TEST_CASE("cyclic extremes") {
    {
        auto [zmax, omin] = cyclic_extremes("01");
        CHECK(zmax == "01");
        CHECK(omin == "10");
    }
    {
        auto [zmax, omin] = cyclic_extremes("00101");
        CHECK(zmax == "01010");
        CHECK(omin == "10010");
    }
    CHECK_THROWS_AS(cyclic_extremes("000"), lexi_error);
    CHECK_THROWS_AS(cyclic_extremes("1"), lexi_error);
    try {
        cyclic_extremes("11");
    } catch (const lexi_error& e) {
        CHECK(e.code == "NoSuchRotation");
    }
}

TEST_CASE("sturmian pair pinned values") {
    auto p12 = sturmian_pair(Ratio(1, 2));
    CHECK(p12.first == "01");
    CHECK(p12.second == "10");
    auto p13 = sturmian_pair(Ratio(1, 3));
    CHECK(p13.first == "010");
    CHECK(p13.second == "100");
    auto p25 = sturmian_pair(Ratio(2, 5));
    CHECK(p25.first == "01010");
    CHECK(p25.second == "10010");
    auto p23 = sturmian_pair(Ratio(2, 3));
    CHECK(p23.first == "011");
    CHECK(p23.second == "101");
}

TEST_CASE("sturmian pair agrees with the exhaustive oracle up to q = 12") {
    for (long q = 2; q <= 12; ++q) {
        for (long p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            Ratio r(p, q);
            auto all = enumerate_balanced(r);
            // Exactly the q rotations of one primitive word.
            REQUIRE(all.size() == static_cast<std::size_t>(q));
            for (const Word& w : all) {
                CHECK(ones(w) == static_cast<std::size_t>(p));
                CHECK(is_primitive(w));
            }
            auto rots = rotations(all.front());
            std::sort(rots.begin(), rots.end());
            CHECK(rots == all);

            auto [xi, zeta] = sturmian_pair(r);
            Word zmax, omin;
            for (const Word& w : all) {
                if (w[0] == '0' && w > zmax) zmax = w;
                if (w[0] == '1' && (omin.empty() || w < omin)) omin = w;
            }
            CHECK(xi == zmax);
            CHECK(zeta == omin);
        }
    }
}

TEST_CASE("substitution construction and application") {
    CHECK_THROWS_AS(Substitution("1", "10"), lexi_error);
    CHECK_THROWS_AS(Substitution("01", "0"), lexi_error);
    CHECK_THROWS_AS(Substitution("", "1"), lexi_error);

    Substitution r12 = rho(Ratio(1, 2));
    CHECK(r12.image0 == "01");
    CHECK(r12.image1 == "10");
    CHECK(substitute(r12, Word("01")) == "0110");
    CHECK(substitute(r12, Word("110")) == "101001");

    Substitution s("011", "10");
    CHECK(substitute(s, Word("110")) == "1010011");
}

TEST_CASE("substitute on eventually periodic sequences") {
    Substitution r12 = rho(Ratio(1, 2));
    CHECK(substitute(r12, S("(10)")) == S("(1001)"));
    CHECK(substitute(r12, S("1(0)")) == S("10(01)"));
    CHECK(substitute(r12, S("(1)")) == S("(10)"));

    Substitution s("011", "10");
    // 0(110)^inf = (011)^inf maps to (011 10 10)^inf.
    CHECK(substitute(s, S("(011)")) == S("(0111010)"));
    CHECK(substitute(s, S("(101)")) == S("(1001110)"));
}

TEST_CASE("decode pinned examples") {
    Substitution s("01", "100");
    DecodeResult bad = decode(s, S("011(0)"));
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure_pos == 6);

    DecodeResult good = decode(s, S("(01100)"));
    REQUIRE(good.ok);
    CHECK(good.blocks == S("(01)"));

    Substitution t("011", "10");
    DecodeResult p8 = decode(t, S("(0111010)"));
    REQUIRE(p8.ok);
    CHECK(p8.blocks == S("(011)"));
    DecodeResult p8b = decode(t, S("(10011)"));
    REQUIRE(p8b.ok);
    CHECK(p8b.blocks == S("(10)"));

    // Mismatch inside the very first block.
    DecodeResult first = decode(t, S("00(10)"));
    CHECK_FALSE(first.ok);
    CHECK(first.failure_pos == 1);
}

TEST_CASE("decode inverts substitute on random sequences") {
    std::mt19937 rng(20240817);
    std::vector<Substitution> subs = {
        rho(Ratio(1, 2)), rho(Ratio(1, 3)), rho(Ratio(2, 5)), rho(Ratio(2, 3)),
        Substitution("011", "10"), Substitution("0", "110"), Substitution("0010", "11"),
    };
    for (int trial = 0; trial < 500; ++trial) {
        const Substitution& s = subs[rng() % subs.size()];
        std::size_t pre_len = rng() % 5, per_len = 1 + rng() % 6;
        Word pre, per;
        for (std::size_t i = 0; i < pre_len; ++i) pre += char('0' + rng() % 2);
        for (std::size_t i = 0; i < per_len; ++i) per += char('0' + rng() % 2);
        EPSeq blocks(pre, per);
        EPSeq image = substitute(s, blocks);
        DecodeResult d = decode(s, image);
        REQUIRE(d.ok);
        CHECK(d.blocks == blocks);
        CHECK(substitute(s, d.blocks) == image);
    }
}

TEST_CASE("decode failure position is the start of the offending block") {
    Substitution s("011", "10");
    // 10 | 011 | then "111..." cannot start any image extension: image1 = "10"
    // mismatches at its second symbol, so the block starting at position 6 fails.
    DecodeResult d = decode(s, S("10011(1)"));
    CHECK_FALSE(d.ok);
    CHECK(d.failure_pos == 6);
}
