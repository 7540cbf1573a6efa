#include <doctest.h>

#include <random>

#include "ldo/formula.hpp"
#include "ldo/oracle.hpp"
#include "ldo/random_cnf.hpp"
#include "ldo/truth_mask.hpp"

using namespace ldo;

namespace {

Literal pos(uint32_t k) { return {VarId{k}, false}; }
Literal neg(uint32_t k) { return {VarId{k}, true}; }

TruthMask random_mask(std::mt19937_64& rng, uint64_t width) {
    TruthMask m(width);
    std::bernoulli_distribution bit(0.5);
    for (uint64_t j = 0; j < width; ++j)
        if (bit(rng)) m.set(j, true);
    return m;
}

}  // namespace

TEST_CASE("string form is MSB first") {
    TruthMask m = TruthMask::from_string("10101111");
    CHECK(m.width() == 8);
    CHECK(m.test(0) == true);
    CHECK(m.test(4) == false);
    CHECK(m.test(6) == false);
    CHECK(m.test(7) == true);
    CHECK(m.to_string() == "10101111");
    CHECK_THROWS_AS(TruthMask::from_string("10x"), std::invalid_argument);
    CHECK_THROWS_AS(TruthMask::from_string("101"), std::invalid_argument);  // not a power of two
}

TEST_CASE("variable masks for n=3 match the fixtures") {
    CHECK(var_mask_eq3(1, 3).to_string() == "10101010");
    CHECK(var_mask_eq3(2, 3).to_string() == "11001100");
    CHECK(var_mask_eq3(3, 3).to_string() == "11110000");
    CHECK(var_mask_direct(1, 3).to_string() == "10101010");
    CHECK(var_mask_direct(2, 3).to_string() == "11001100");
    CHECK(var_mask_direct(3, 3).to_string() == "11110000");
    CHECK(var_mask_eq3(1, 1).to_string() == "10");
    CHECK(var_mask_direct(2, 2).to_string() == "1100");
    // Oracle for (4,4): bit j = value of a4 at assignment j = bit 3 of j.
    TruthMask expected(16);
    for (uint64_t j = 0; j < 16; ++j)
        if ((j >> 3) & 1) expected.set(j, true);
    CHECK(var_mask_direct(4, 4) == expected);
    CHECK(var_mask_direct(4, 4).to_string() == "1111111100000000");
}

TEST_CASE("closed-form and doubling constructions agree exhaustively") {
    for (uint32_t n = 1; n <= 12; ++n)
        for (uint32_t k = 1; k <= n; ++k)
            REQUIRE(var_mask_eq3(k, n) == var_mask_direct(k, n));
}

TEST_CASE("variable masks match direct bit extraction") {
    for (uint32_t n = 1; n <= 10; ++n)
        for (uint32_t k = 1; k <= n; ++k) {
            TruthMask m = var_mask_direct(k, n);
            for (uint64_t j = 0; j < m.width(); ++j)
                REQUIRE(m.test(j) == (((j >> (k - 1)) & 1) != 0));
        }
}

TEST_CASE("variable mask argument checks") {
    CHECK_THROWS_AS(var_mask_direct(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(var_mask_direct(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(var_mask_eq3(4, 3), std::invalid_argument);
}

TEST_CASE("or_mask") {
    TruthMask a1 = TruthMask::from_string("10101010");
    TruthMask na3 = TruthMask::from_string("00001111");
    CHECK(or_mask(a1, na3).to_string() == "10101111");

    TruthMask z(8);
    CHECK(or_mask(a1, z) == a1);
    CHECK(or_mask(a1, a1) == a1);
    CHECK_THROWS_AS(or_mask(a1, TruthMask(4)), std::invalid_argument);
}

TEST_CASE("and_mask") {
    TruthMask a1 = TruthMask::from_string("10101010");
    TruthMask a3 = TruthMask::from_string("11110000");
    // Digitwise product; equals the truth table of (a1 AND a3) over n=3.
    CHECK(and_mask(a1, a3).to_string() == "10100000");
    CHECK(and_mask(a1, TruthMask::ones(8)) == a1);
    CHECK(and_mask(a1, not_mask(a1)) == TruthMask(8));
    CHECK_THROWS_AS(and_mask(a1, TruthMask(16)), std::invalid_argument);
}

TEST_CASE("not_mask") {
    CHECK(not_mask(TruthMask::from_string("11110000")).to_string() == "00001111");
    CHECK(not_mask(TruthMask(4)) == TruthMask::ones(4));
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        TruthMask m = random_mask(rng, 64);
        CHECK(not_mask(not_mask(m)) == m);
    }
}

TEST_CASE("reverse_mask") {
    CHECK(reverse_mask(TruthMask::from_string("11110000")).to_string() == "00001111");
    CHECK(reverse_mask(TruthMask::from_string("1001")).to_string() == "1001");
    CHECK(reverse_mask(TruthMask::from_string("11001100")).to_string() == "00110011");
    CHECK(reverse_mask(TruthMask::from_string("11001100")) ==
          not_mask(TruthMask::from_string("11001100")));
}

TEST_CASE("reversal equals complement for variable masks only") {
    for (uint32_t n = 1; n <= 10; ++n)
        for (uint32_t k = 1; k <= n; ++k) {
            TruthMask m = var_mask_direct(k, n);
            REQUIRE(reverse_mask(m) == not_mask(m));
        }
    // Witness that the identity does not extend to arbitrary masks.
    TruthMask w = TruthMask::from_string("1000");
    CHECK(reverse_mask(w).to_string() == "0001");
    CHECK(not_mask(w).to_string() == "0111");
    CHECK(reverse_mask(w) != not_mask(w));
}

TEST_CASE("cnf_mask_direct fixtures") {
    CnfFormula f{{Clause{{pos(1), neg(3)}}}, 3};
    CHECK(cnf_mask_direct(f).to_string() == "10101111");

    CnfFormula g{{Clause{{neg(1), pos(2), neg(3)}}}, 3};
    TruthMask gm = cnf_mask_direct(g);
    for (uint64_t j = 0; j < 8; ++j) CHECK(gm.test(j) == (j != 5));

    CnfFormula empty_clause{{Clause{}}, 0};
    CHECK(cnf_mask_direct(empty_clause) == TruthMask(1));
    empty_clause.var_count = 3;
    CHECK(cnf_mask_direct(empty_clause) == TruthMask(8));

    CnfFormula empty{{}, 3};
    CHECK(cnf_mask_direct(empty) == TruthMask::ones(8));
}

TEST_CASE("cnf_mask_demorgan equals cnf_mask_direct") {
    CnfFormula f{{Clause{{pos(1), neg(3)}}}, 3};
    CHECK(cnf_mask_demorgan(f).to_string() == "10101111");

    CnfFormula empty{{}, 2};
    CHECK(cnf_mask_demorgan(empty) == TruthMask::ones(4));

    std::mt19937_64 rng(13);
    RandomCnfParams params;
    params.max_vars = 10;
    for (int i = 0; i < 300; ++i) {
        CnfFormula g = random_cnf(rng, params);
        REQUIRE(cnf_mask_demorgan(g) == cnf_mask_direct(g));
    }
}

TEST_CASE("cnf mask agrees with truth-table evaluation bit by bit") {
    std::mt19937_64 rng(17);
    RandomCnfParams params;
    params.max_vars = 10;
    for (int i = 0; i < 200; ++i) {
        CnfFormula f = random_cnf(rng, params);
        TruthMask m = cnf_mask_direct(f);
        REQUIRE(m.width() == (uint64_t{1} << f.var_count));
        for (uint64_t j = 0; j < m.width(); ++j)
            REQUIRE(m.test(j) == eval_cnf(f, decode_assignment(j, f.var_count)));
    }
}

TEST_CASE("models_of_mask") {
    CHECK(models_of_mask(TruthMask::from_string("10101111")) ==
          std::vector<uint64_t>{0, 1, 2, 3, 5, 7});
    CHECK(models_of_mask(TruthMask(8)).empty());
    CHECK(models_of_mask(TruthMask::ones(4)) == std::vector<uint64_t>{0, 1, 2, 3});
}

TEST_CASE("boolean algebra laws on random masks") {
    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
        TruthMask q = random_mask(rng, 128);
        TruthMask r = random_mask(rng, 128);
        TruthMask s = random_mask(rng, 128);
        CHECK(or_mask(q, r) == or_mask(r, q));
        CHECK(and_mask(q, r) == and_mask(r, q));
        CHECK(or_mask(q, or_mask(r, s)) == or_mask(or_mask(q, r), s));
        CHECK(and_mask(q, and_mask(r, s)) == and_mask(and_mask(q, r), s));
        CHECK(or_mask(q, q) == q);
        CHECK(and_mask(q, q) == q);
        CHECK(not_mask(or_mask(q, r)) == and_mask(not_mask(q), not_mask(r)));
    }
}

TEST_CASE("mask width cap") {
    CnfFormula f{{Clause{{pos(1)}}}, 30};
    CHECK_THROWS_AS(cnf_mask_direct(f), std::length_error);
    CHECK_THROWS_AS(cnf_mask_demorgan(f), std::length_error);
    CnfFormula g{{Clause{{pos(1)}}}, 10};
    CHECK_THROWS_AS(cnf_mask_direct(g, 9), std::length_error);
    CHECK_NOTHROW(cnf_mask_direct(g, 10));
}

TEST_CASE("tile and stretch doubling") {
    TruthMask m = TruthMask::from_string("10");
    CHECK(m.tiled_doubled().to_string() == "1010");
    CHECK(m.stretched_doubled().to_string() == "1100");
    CHECK(TruthMask::from_string("1010").stretched_doubled().to_string() == "11001100");
    CHECK(TruthMask::ones(4).stretched_doubled() == TruthMask::ones(8));
}

TEST_CASE("rotated_down shifts content toward lower indices") {
    TruthMask m(4);
    m.set(0, true);
    m.set(1, true);
    TruthMask r = m.rotated_down(1);
    CHECK(r.test(3));
    CHECK(r.test(0));
    CHECK_FALSE(r.test(1));
    CHECK_FALSE(r.test(2));
    CHECK(m.rotated_down(4) == m);
    CHECK(m.rotated_down(0) == m);
}
