#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldo/formula.hpp"
#include "ldo/truth_mask.hpp"
#include "ldo/word_codec.hpp"

// The disk machine: a circular transparency ("disk") per variable, divided
// into t = 2^n angular fields numbered clockwise from 12 o'clock. Semantic
// bridge, used everywhere: field j is BLACK exactly when the represented
// formula is TRUE under assignment j — a disk's blackness bit-vector IS the
// truth mask of what it carries. Stacking disks ORs their blackness; light
// passes a stack at field j exactly when every member is transparent there.
//
// A run consumes a word token by token. Literal disks pile up in working area
// WA1 (one clause), each finished clause is photo-complemented onto working
// area WA2, and a photocell above WA2 maintains the satisfiability bit s.
//
// Dual cost accounting:
//   machine_steps — unit steps: one per token consumed, one per clause-end
//     command, one per assembly step. Linear in the input length.
//   field_ops    — per-field work: every placement of a patterned disk,
//     exposure, photocell scan, rotation or re-patterning is one pass over all
//     t fields. This is where the 2^n hides.
// Blank placement, fixing, and removals move whole disks and cost no field
// work. An analog photocell (cost 1 instead of t) can be configured to model
// an idealized one-step test.

namespace ldo {

struct Disk {
    TruthMask blackness{1};
    bool fixed = false;                 // photochemically fixed: immune to further blackening
    std::optional<VarId> var;           // set for variable disks
    std::string tag;                    // clause tag ("~C2") or assembly note

    uint64_t resolution() const { return blackness.width(); }
};

/// Variable disk at the given resolution: blackness = the variable's mask.
Disk make_variable_disk(uint32_t k, uint64_t resolution);

/// Turn a disk over about the diameter separating fields 0..t/2-1 from
/// t/2..t-1: blackness reversed. Equals negation for variable disks only.
Disk flip_disk(const Disk& d);

struct WorkingArea {
    std::vector<Disk> stack;      // bottom to top
    TruthMask composite{1};       // OR of members' blackness (cached)

    explicit WorkingArea(uint64_t resolution = 1) : composite(resolution) {}
    void push(Disk d);
    void recompute_composite(uint64_t resolution);
    size_t size() const { return stack.size(); }
};

struct MachineState {
    uint64_t mu = 0;   // disks in WA1 (blanks under exposure not counted)
    uint64_t nu = 0;   // disks in WA2
    int s = 1;         // satisfiability bit
    bool halted = false;
    std::optional<int> output;
};

/// Closed set of rule tags a trace event may carry:
/// token transitions "7a".."7f", clause-end commands "i".."v",
/// assembly steps "g0".."g3".
bool is_known_rule_tag(const std::string& tag);

struct TraceEvent {
    uint64_t step = 0;           // ordinal in the event stream
    std::string token;           // consumed token text, or "-" for non-token events
    std::string rule;
    MachineState before;
    MachineState after;
    uint64_t field_ops_delta = 0;

    /// Stable line form, e.g. `step=3 token=] rule=7d mu=0 nu=1 s=1 field_ops+=24`.
    std::string line() const;
};

struct CostLedger {
    uint64_t machine_steps = 0;
    uint64_t field_ops = 0;
    uint64_t blanks_consumed = 0;       // total draws from the blank supply
    uint64_t blanks_for_assembly = 0;   // subset used by assembly cycles
    uint64_t disks_in_sa = 0;           // storage census (snapshot)
    uint64_t variable_disk_draws = 0;   // takes of variable disks from storage
    uint64_t disks_created = 0;         // distinct variable disks that exist
    uint64_t resolution = 1;            // fields per disk, t

    double min_field_angle() const;     // 2*pi / resolution, radians
};

enum class PhotocellMode { Scan, Analog };
enum class NegationGuard { FixOnMove, InertWa2Light };

struct MachineConfig {
    PhotocellMode photocell = PhotocellMode::Scan;
    /// Return clause disks to storage after each clause (command iii). When
    /// off, pushed disks are consumed from an unlimited shelf; only storage
    /// accounting changes.
    bool return_disks = true;
    NegationGuard guard = NegationGuard::FixOnMove;
    std::optional<uint64_t> bss_capacity;  // finite blank supply when set
    uint32_t n_max = kMaskVarCap;          // resolution cap: t <= 2^n_max
    /// Expand clause-end handling into individual command events i..v in the
    /// trace (the 7d token event then carries no field delta of its own).
    bool expand_commands_in_trace = false;
};

struct RunResult {
    bool sat = false;
    int output = 0;
    uint64_t tokens_consumed = 0;
    bool early_halt = false;            // halted before consuming the whole word
    CostLedger ledger;
    std::vector<TraceEvent> trace;
    TruthMask result_mask{1};           // WA2 composite at halt
    std::vector<uint64_t> models;       // transparent WA2 fields = satisfying assignments
};

class DiskMachine {
public:
    /// Fixed-size machine over variables a_1..a_n (resolution t = 2^n).
    explicit DiskMachine(uint32_t var_count, MachineConfig config = {});
    virtual ~DiskMachine() = default;

    DiskMachine(const DiskMachine&) = delete;
    DiskMachine& operator=(const DiskMachine&) = delete;

    /// Consume one token; returns the token's trace event. Throws if halted.
    TraceEvent step(const Token& token);

    /// Consume a whole word (single use per machine instance).
    RunResult run(const Word& word);

    /// Satisfying assignment numbers of a word (empty when unsatisfiable).
    std::vector<uint64_t> enumerate_models(const Word& word);

    // The individual machine acts, exposed for direct drive in tests.
    void push_literal(const Literal& lit);
    Disk expose_clause_negative();
    void finish_clause();

    /// 1 iff some field of the area's composite is transparent.
    static int photocell(const WorkingArea& area);

    const MachineState& state() const { return state_; }
    const CostLedger& ledger() const { return ledger_; }
    const WorkingArea& clause_area() const { return wa1_; }
    const WorkingArea& result_area() const { return wa2_; }
    const std::vector<TraceEvent>& trace() const { return trace_; }
    uint64_t resolution() const { return resolution_; }

    /// Double every resident disk's angular resolution: each field splits in
    /// two, patterns carry over, the minimum field angle halves. Costs one
    /// pass over the new 2t fields per resident disk.
    void double_resolution();

protected:
    struct SelfAssembling {};
    DiskMachine(SelfAssembling, MachineConfig config);

    /// Hook invoked before a literal token is pushed (self-assembly point).
    virtual void before_literal(VarId) {}

    /// Extra resident disks / doubling work owned by subclasses.
    virtual uint64_t assembly_area_disks() const { return 0; }
    virtual void double_assembly_area() {}

    /// Storage slot for a variable. Fixed machines key by the variable index
    /// itself; the self-assembling machine keys by creation ordinal (0 = no
    /// disk yet).
    virtual uint32_t storage_key(VarId v) const { return v.index; }

    void charge_fields(uint64_t amount) { ledger_.field_ops += amount; }
    void take_blank(bool for_assembly);
    void emit(const std::string& token, const std::string& rule, const MachineState& before,
              uint64_t field_ops_before);
    uint64_t storage_census() const;
    void refresh_storage_snapshot() { ledger_.disks_in_sa = storage_census(); }

    /// Blackness = complement of what shows through the area's stack.
    TruthMask exposure_pattern(const WorkingArea& area) const;

    MachineConfig config_;
    MachineState state_;
    CostLedger ledger_;
    std::vector<TraceEvent> trace_;
    WorkingArea wa1_;
    WorkingArea wa2_;
    uint64_t resolution_ = 1;
    bool self_assembling_ = false;
    bool run_started_ = false;

    // Storage area: one pattern per slot plus a per-slot copy count; byproduct
    // disks from assembly are kept separately. Slots are variable indices on a
    // fixed machine, creation ordinals on the self-assembling one.
    std::map<uint32_t, TruthMask> sa_patterns_;
    std::map<uint32_t, int64_t> sa_copies_;
    std::vector<Disk> sa_offcuts_;
    uint32_t created_count_ = 0;  // distinct variable disks in existence

    void draw_variable_disk(uint32_t slot);
    void return_wa1_to_storage();
};

}  // namespace ldo
