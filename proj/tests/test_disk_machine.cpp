#include <doctest.h>

#include <random>

#include "ldo/disk_machine.hpp"
#include "ldo/oracle.hpp"
#include "ldo/random_cnf.hpp"

using namespace ldo;

namespace {

Literal pos(uint32_t k) { return {VarId{k}, false}; }
Literal neg(uint32_t k) { return {VarId{k}, true}; }

void check_monotone_s(const std::vector<TraceEvent>& trace) {
    for (const TraceEvent& ev : trace) {
        REQUIRE(is_known_rule_tag(ev.rule));
        REQUIRE_FALSE((ev.before.s == 0 && ev.after.s == 1));
    }
}

}  // namespace

TEST_CASE("make_variable_disk carries the variable mask") {
    CHECK(make_variable_disk(3, 8).blackness.to_string() == "11110000");
    CHECK(make_variable_disk(1, 2).blackness.to_string() == "10");
    CHECK(make_variable_disk(1, 8).blackness.to_string() == "10101010");
    CHECK_THROWS_AS(make_variable_disk(1, 6), std::invalid_argument);
}

TEST_CASE("flip_disk reverses blackness") {
    CHECK(flip_disk(make_variable_disk(3, 8)).blackness.to_string() == "00001111");
    // Flip of a variable disk is its negation.
    CHECK(flip_disk(make_variable_disk(1, 8)).blackness ==
          not_mask(make_variable_disk(1, 8).blackness));
    // For a general disk it is only a reversal.
    Disk d{TruthMask::from_string("1000"), false, std::nullopt, {}};
    CHECK(flip_disk(d).blackness.to_string() == "0001");
    CHECK(flip_disk(d).blackness != not_mask(d.blackness));
}

TEST_CASE("push_literal stacks the clause area") {
    DiskMachine m(3);
    m.push_literal(neg(1));
    m.push_literal(pos(2));
    m.push_literal(neg(3));
    // Composite is black everywhere except field 5.
    for (uint64_t j = 0; j < 8; ++j)
        CHECK(m.clause_area().composite.test(j) == (j != 5));
    CHECK(m.state().mu == 3);
    CHECK(m.ledger().field_ops == 3 * 8);

    DiskMachine m1(1);
    m1.push_literal(pos(1));
    CHECK(m1.clause_area().composite.to_string() == "10");

    DiskMachine m2(1);
    m2.push_literal(pos(1));
    m2.push_literal(pos(1));
    CHECK(m2.clause_area().composite.to_string() == "10");  // OR is idempotent
    CHECK(m2.state().mu == 2);                              // but the cost still accrues
    CHECK(m2.ledger().field_ops == 2 * 2);

    DiskMachine m3(2);
    CHECK_THROWS_AS(m3.push_literal(pos(3)), std::invalid_argument);
}

TEST_CASE("expose_clause_negative photographs the complement") {
    DiskMachine m(3);
    m.push_literal(pos(1));
    m.push_literal(neg(3));
    Disk d = m.expose_clause_negative();
    CHECK(d.blackness.to_string() == "01010000");
    CHECK(m.ledger().blanks_consumed == 1);

    DiskMachine empty(3);
    CHECK(empty.expose_clause_negative().blackness == TruthMask::ones(8));

    DiskMachine taut(1);
    taut.push_literal(pos(1));
    taut.push_literal(neg(1));
    CHECK(taut.expose_clause_negative().blackness == TruthMask(2));
}

TEST_CASE("finite blank supply") {
    MachineConfig cfg;
    cfg.bss_capacity = 1;
    DiskMachine m(2, cfg);
    m.push_literal(pos(1));
    m.expose_clause_negative();
    CHECK_THROWS_AS(m.expose_clause_negative(), std::runtime_error);
}

TEST_CASE("finish_clause runs commands i..v") {
    DiskMachine m(3);
    m.push_literal(pos(1));
    m.push_literal(neg(3));
    m.finish_clause();
    CHECK(m.result_area().composite.to_string() == "01010000");
    CHECK(m.state().s == 1);
    CHECK(m.state().mu == 0);
    CHECK(m.state().nu == 1);
    CHECK(m.clause_area().size() == 0);

    DiskMachine e(3);
    e.finish_clause();  // empty clause: all-black negative, photocell dark
    CHECK(e.result_area().composite == TruthMask::ones(8));
    CHECK(e.state().s == 0);

    DiskMachine c(1);
    c.push_literal(pos(1));
    c.finish_clause();
    c.push_literal(neg(1));
    c.finish_clause();
    CHECK(c.result_area().composite.to_string() == "11");
    CHECK(c.state().s == 0);
}

TEST_CASE("photocell") {
    WorkingArea area(4);
    area.composite = TruthMask::ones(4);
    CHECK(DiskMachine::photocell(area) == 0);
    area.composite = TruthMask(4);
    CHECK(DiskMachine::photocell(area) == 1);
    area.composite = TruthMask::from_string("01010000");
    CHECK(DiskMachine::photocell(area) == 1);
}

TEST_CASE("step dispatch follows the transition table") {
    DiskMachine m(3);
    TraceEvent open = m.step(Token::open());
    CHECK(open.rule == "7c");
    CHECK_FALSE(m.state().halted);

    // '[' with s=0 halts with output 0.
    DiskMachine h(3);
    h.step(Token::open());
    h.step(Token::close());  // empty clause forces s=0
    CHECK(h.state().s == 0);
    TraceEvent halt = h.step(Token::open());
    CHECK(halt.rule == "7b");
    CHECK(h.state().halted);
    CHECK(h.state().output == 0);
    CHECK_THROWS_AS(h.step(Token::end()), std::logic_error);

    // End with s=1 halts with output 1.
    DiskMachine f(3);
    TraceEvent fin = f.step(Token::end());
    CHECK(fin.rule == "7f");
    CHECK(f.state().output == 1);
}

TEST_CASE("run on fixtures") {
    DiskMachine m(3);
    RunResult r = m.run(word_from_formula(parse_word(tokenize("[a1 ~a3]$"))));
    CHECK(r.sat);
    CHECK(r.models == std::vector<uint64_t>{0, 1, 2, 3, 5, 7});
    CHECK_FALSE(r.early_halt);

    DiskMachine u(1);
    RunResult ru = u.run(word_from_formula(parse_word(tokenize("[a1][~a1]$"))));
    CHECK_FALSE(ru.sat);
    CHECK(ru.models.empty());

    DiskMachine e(0);
    RunResult re = e.run(word_from_formula(parse_word(tokenize("$"))));
    CHECK(re.sat);  // empty formula: light passes the empty stack
    CHECK(re.models == std::vector<uint64_t>{0});
}

TEST_CASE("enumerate_models matches the multi-photocell reading") {
    DiskMachine m(3);
    CHECK(m.enumerate_models(word_from_formula(parse_word(tokenize("[a1 ~a3]$")))) ==
          std::vector<uint64_t>{0, 1, 2, 3, 5, 7});

    DiskMachine g(3);
    CHECK(g.enumerate_models(word_from_formula(parse_word(tokenize("[~a1 a2 ~a3]$")))) ==
          std::vector<uint64_t>{0, 1, 2, 3, 4, 6, 7});

    DiskMachine c(1);
    CHECK(c.enumerate_models(word_from_formula(parse_word(tokenize("[a1][~a1]$")))).empty());
}

TEST_CASE("trace line format is stable") {
    DiskMachine m(3);
    RunResult r = m.run(word_from_formula(parse_word(tokenize("[a1 ~a3]$"))));
    REQUIRE(r.trace.size() == 5);
    CHECK(r.trace[0].line() == "step=0 token=[ rule=7c mu=0 nu=0 s=1 field_ops+=0");
    CHECK(r.trace[1].line() == "step=1 token=a1 rule=7a mu=1 nu=0 s=1 field_ops+=8");
    CHECK(r.trace[3].line() == "step=3 token=] rule=7d mu=0 nu=1 s=1 field_ops+=24");
    CHECK(r.trace[4].line() == "step=4 token=$ rule=7f mu=0 nu=1 s=1 field_ops+=0");
}

TEST_CASE("expanded command trace splits the clause-end work") {
    MachineConfig cfg;
    cfg.expand_commands_in_trace = true;
    DiskMachine m(3, cfg);
    RunResult r = m.run(word_from_formula(parse_word(tokenize("[a1 ~a3]$"))));
    // [ a1 ~a3 ] i ii iii iv v $
    REQUIRE(r.trace.size() == 10);
    CHECK(r.trace[3].rule == "7d");
    CHECK(r.trace[3].field_ops_delta == 0);
    CHECK(r.trace[4].rule == "i");
    CHECK(r.trace[4].field_ops_delta == 8);
    CHECK(r.trace[5].rule == "ii");
    CHECK(r.trace[5].field_ops_delta == 8);
    CHECK(r.trace[6].rule == "iii");
    CHECK(r.trace[6].field_ops_delta == 0);
    CHECK(r.trace[7].rule == "iv");
    CHECK(r.trace[7].field_ops_delta == 8);
    CHECK(r.trace[8].rule == "v");
    CHECK(r.trace[8].field_ops_delta == 0);
    // Same totals as the aggregate trace.
    DiskMachine plain(3);
    RunResult rp = plain.run(word_from_formula(parse_word(tokenize("[a1 ~a3]$"))));
    CHECK(rp.ledger.machine_steps == r.ledger.machine_steps);
    CHECK(rp.ledger.field_ops == r.ledger.field_ops);
}

TEST_CASE("cost contract: field_ops = t(L + 3m), steps = tokens + 5m") {
    std::mt19937_64 rng(37);
    RandomCnfParams params;
    params.max_vars = 8;
    params.max_clauses = 20;
    for (int i = 0; i < 200; ++i) {
        CnfFormula f = random_cnf(rng, params);
        Word w = word_from_formula(f);
        DiskMachine m(f.var_count);
        RunResult r = m.run(w);
        const uint64_t t = uint64_t{1} << f.var_count;
        if (!r.early_halt) {
            CHECK(r.ledger.field_ops == t * (f.literal_count() + 3 * f.clause_count()));
            CHECK(r.ledger.machine_steps == w.length() + 5 * f.clause_count());
        }
        CHECK(r.ledger.machine_steps <= w.length() + 5 * f.clause_count() + 1);
        check_monotone_s(r.trace);
    }
}

TEST_CASE("analog photocell charges one field op per test") {
    MachineConfig cfg;
    cfg.photocell = PhotocellMode::Analog;
    CnfFormula f = parse_word(tokenize("[a1 ~a3][a2]$"));
    DiskMachine m(f.var_count, cfg);
    RunResult r = m.run(word_from_formula(f));
    const uint64_t t = 8;
    CHECK(r.ledger.field_ops == t * (3 + 2 * 2) + 2);  // photocell scans replaced by 1 each
}

TEST_CASE("clause disks return to storage by default") {
    CnfFormula f = parse_word(tokenize("[a1 a2][~a1]$"));
    DiskMachine m(f.var_count);
    RunResult r = m.run(word_from_formula(f));
    CHECK(r.ledger.disks_in_sa == 2);
    CHECK(r.ledger.variable_disk_draws == 3);

    MachineConfig cfg;
    cfg.return_disks = false;
    DiskMachine k(f.var_count, cfg);
    RunResult rk = k.run(word_from_formula(f));
    // Same behavior and costs; only the storage accounting differs.
    CHECK(rk.sat == r.sat);
    CHECK(rk.ledger.field_ops == r.ledger.field_ops);
    CHECK(rk.ledger.machine_steps == r.ledger.machine_steps);
    CHECK(rk.ledger.variable_disk_draws == 3);
}

TEST_CASE("negation guard modes only differ in the fixed flag") {
    MachineConfig fix;
    fix.guard = NegationGuard::FixOnMove;
    DiskMachine a(2, fix);
    a.push_literal(pos(1));
    a.finish_clause();
    CHECK(a.result_area().stack.back().fixed);

    MachineConfig inert;
    inert.guard = NegationGuard::InertWa2Light;
    DiskMachine b(2, inert);
    b.push_literal(pos(1));
    b.finish_clause();
    CHECK_FALSE(b.result_area().stack.back().fixed);
    CHECK(a.result_area().composite == b.result_area().composite);
}

TEST_CASE("verdicts and models match the oracle") {
    std::mt19937_64 rng(41);
    RandomCnfParams params;
    params.max_vars = 10;
    params.max_clauses = 30;
    for (int i = 0; i < 300; ++i) {
        CnfFormula f = random_cnf(rng, params);
        OracleResult oracle = brute_force(f);
        DiskMachine m(f.var_count);
        RunResult r = m.run(word_from_formula(f));
        REQUIRE(r.sat == oracle.sat);
        REQUIRE(r.models == oracle.models);
        check_monotone_s(r.trace);
        // Early halts only happen on prefixes that are already unsatisfiable.
        if (r.early_halt) REQUIRE_FALSE(oracle.sat);
    }
}

TEST_CASE("exhaustive clause subsets over two variables") {
    // All 512 subsets of the 9 possible clause shapes over {a1, a2}
    // (including the empty clause) — covers every boolean function's CNF.
    std::vector<Clause> shapes;
    shapes.push_back(Clause{});
    for (int l1 = 0; l1 < 3; ++l1)
        for (int l2 = 0; l2 < 3; ++l2) {
            if (l1 == 0 && l2 == 0) continue;
            Clause c;
            if (l1) c.literals.push_back({VarId{1}, l1 == 2});
            if (l2) c.literals.push_back({VarId{2}, l2 == 2});
            shapes.push_back(std::move(c));
        }
    REQUIRE(shapes.size() == 9);
    for (uint32_t subset = 0; subset < (1u << 9); ++subset) {
        CnfFormula f;
        f.var_count = 2;
        for (int b = 0; b < 9; ++b)
            if ((subset >> b) & 1) f.clauses.push_back(shapes[b]);
        OracleResult oracle = brute_force(f);
        DiskMachine m(2);
        RunResult r = m.run(word_from_formula(f));
        REQUIRE(r.sat == oracle.sat);
        REQUIRE(r.models == oracle.models);
    }
}

TEST_CASE("result area realizes the complement algebra after every clause") {
    std::mt19937_64 rng(43);
    RandomCnfParams params;
    params.max_vars = 10;
    params.max_clauses = 30;
    params.min_clauses = 1;
    for (int i = 0; i < 100; ++i) {
        CnfFormula f = random_cnf(rng, params);
        DiskMachine m(f.var_count);
        Word w = word_from_formula(f);
        CnfFormula prefix;
        prefix.var_count = f.var_count;
        size_t next_clause = 0;
        for (const Token& tok : w.tokens) {
            if (m.state().halted) break;
            m.step(tok);
            if (tok.kind == TokenKind::CloseBracket) {
                prefix.clauses.push_back(f.clauses[next_clause++]);
                REQUIRE(m.result_area().composite ==
                        not_mask(cnf_mask_direct(prefix)));
            }
        }
    }
}

TEST_CASE("double_resolution stretches every resident disk") {
    DiskMachine m(1);
    m.push_literal(pos(1));
    m.finish_clause();
    CHECK(m.result_area().composite.to_string() == "01");
    uint64_t fo = m.ledger().field_ops;
    m.double_resolution();
    CHECK(m.resolution() == 4);
    CHECK(m.result_area().composite.to_string() == "0011");
    // One storage disk + one result disk re-patterned at the new resolution.
    CHECK(m.ledger().field_ops - fo == 2 * 4);
    CHECK(m.ledger().min_field_angle() == doctest::Approx(3.14159265 / 2).epsilon(1e-6));
}
