#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ldo/disk_machine.hpp"

// Self-assembling variant: the machine ships with nothing but two copies of a
// single two-field disk and grows one variable disk per newly encountered
// literal. Each growth cycle (steps g0..g3) doubles the angular resolution of
// every resident disk, fabricates two fixed copies of the new finest disk
// (alternating pattern, period two), and costs three blanks — so material
// grows linearly in the variable count while the minimum field angle halves
// each time.
//
// Variables are numbered by first appearance in the input. With n disks
// created, the disk created i-th carries the pattern whose bit j equals bit
// (n-i) of j: the first-created disk is the coarsest, the last the finest.

namespace ldo {

class VariableRegistry {
public:
    /// Creation ordinal (1-based) of a variable, or 0 if unregistered.
    uint32_t ordinal_of(VarId v) const;
    bool contains(VarId v) const { return ordinal_of(v) != 0; }
    uint32_t created() const { return static_cast<uint32_t>(order_.size()); }
    /// External variable indices in creation order.
    const std::vector<uint32_t>& creation_order() const { return order_; }

    uint32_t bind(VarId v);  // registers v with the next ordinal

private:
    std::map<uint32_t, uint32_t> ordinal_by_index_;
    std::vector<uint32_t> order_;
};

/// Machine-local assignment number -> truth values of the registered
/// variables, keyed by external variable index. The i-th created variable is
/// true at j iff bit (created - i) of j is set.
std::map<uint32_t, bool> decode_model_saldo(const VariableRegistry& registry, uint64_t j);

/// Lift machine-local model indices to assignment numbers over a_1..a_n:
/// registered variables take their decoded values, unregistered ones range
/// over both values. Sorted, deduplicated.
std::vector<uint64_t> models_in_input_numbering(const VariableRegistry& registry,
                                                const std::vector<uint64_t>& saldo_models,
                                                uint32_t n);

/// Rotate a disk counterclockwise by the given number of fields. With fields
/// numbered clockwise, content moves toward lower indices (cyclically).
Disk rotate_ccw(const Disk& d, uint64_t fields);

struct PrecisionReport {
    double min_field_angle = 0.0;
    uint64_t fields_per_disk = 0;
    uint64_t disks_created = 0;
    uint64_t blanks_consumed = 0;
    uint64_t blanks_for_assembly = 0;
    uint64_t blanks_for_clauses = 0;
    double warning_threshold = 1e-6;
    bool precision_warning = false;  // min_field_angle below the threshold
};

/// Materials-and-precision summary of a finished (or in-progress) ledger.
PrecisionReport precision_report(const CostLedger& ledger, double warning_threshold = 1e-6);

class SaldoMachine : public DiskMachine {
public:
    explicit SaldoMachine(MachineConfig config = {});

    /// Registers the variable, growing a new disk first when it is unseen.
    /// The very first variable binds to the initial disk without a cycle.
    void ensure_variable(VarId v);

    /// One growth cycle g0..g3; returns the newly fixed finest disk.
    Disk g_cycle();

    const VariableRegistry& registry() const { return registry_; }
    const WorkingArea& assembly_area() const { return aa_; }

    /// Two copies of the finest disk must be in storage between cycles.
    bool inventory_ok() const;

protected:
    void before_literal(VarId v) override { ensure_variable(v); }
    uint64_t assembly_area_disks() const override { return aa_.size(); }
    void double_assembly_area() override;
    uint32_t storage_key(VarId v) const override { return registry_.ordinal_of(v); }

private:
    VariableRegistry registry_;
    WorkingArea aa_;

    // Storage key for the not-yet-named initial disk pair (0 is not a legal
    // variable index).
    static constexpr uint32_t kUnboundKey = 0;

    uint32_t finest_key() const;
    Disk expose_over_assembly();
};

}  // namespace ldo
