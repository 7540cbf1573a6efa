#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ldo/formula.hpp"

// Boolean functions over n variables as explicit t = 2^n bit strings: bit j is
// the function's value under assignment number j. The explicit exponential
// width is the point of this representation, not an implementation detail.
//
// Text form is most-significant-bit first: assignment t-1 is the leftmost
// character, assignment 0 the rightmost. "10101111" therefore has bit 0 = 1.

namespace ldo {

/// Default cap on mask variables (2^24 bits = 2 MiB per mask). Operations that
/// build formula-wide masks take the cap explicitly; this is just the default.
inline constexpr uint32_t kMaskVarCap = 24;

class TruthMask {
public:
    /// All-zeros mask of the given width (must be a power of two).
    explicit TruthMask(uint64_t width);

    static TruthMask zeros(uint64_t width) { return TruthMask(width); }
    static TruthMask ones(uint64_t width);
    static TruthMask from_string(std::string_view msb_first);

    uint64_t width() const { return width_; }
    /// log2(width): the number of variables this mask ranges over.
    uint32_t var_count() const;

    bool test(uint64_t j) const;
    void set(uint64_t j, bool value);

    bool all_ones() const;
    bool all_zeros() const;
    uint64_t popcount() const;

    /// Indices with bit = 1 / bit = 0, ascending.
    std::vector<uint64_t> ones_indices() const;
    std::vector<uint64_t> zeros_indices() const;

    /// Pattern repeated twice (width doubles; bit j = old bit (j mod width)).
    /// This is how an existing variable's mask extends when a new top variable
    /// is introduced.
    TruthMask tiled_doubled() const;

    /// Each bit split into two adjacent copies (bit j -> bits 2j, 2j+1).
    /// This is how an angular field pattern refines when resolution doubles:
    /// the represented function is unchanged under the finer numbering.
    TruthMask stretched_doubled() const;

    /// Cyclic shift toward lower indices: out bit j = in bit ((j+k) mod width).
    TruthMask rotated_down(uint64_t k) const;

    std::string to_string() const;

    friend bool operator==(const TruthMask&, const TruthMask&) = default;

    const std::vector<uint64_t>& words() const { return words_; }

private:
    uint64_t width_;
    std::vector<uint64_t> words_;  // little-endian 64-bit words, spare high bits zero

    void trim();
    friend TruthMask or_mask(const TruthMask&, const TruthMask&);
    friend TruthMask and_mask(const TruthMask&, const TruthMask&);
    friend TruthMask not_mask(const TruthMask&);
    friend TruthMask reverse_mask(const TruthMask&);
};

/// Digitwise OR / AND; widths must match.
TruthMask or_mask(const TruthMask& q, const TruthMask& r);
TruthMask and_mask(const TruthMask& q, const TruthMask& r);

/// Bitwise complement.
TruthMask not_mask(const TruthMask& q);

/// Bit j of output = bit (t-1-j) of input. For variable masks this equals the
/// complement; for general masks it does not.
TruthMask reverse_mask(const TruthMask& q);

/// Variable mask by the closed-form double sum: bit r = sum over
/// s in [2^(k-1), 2^k - 1] and l in [0, 2^(n-k) - 1] of delta(r, s + 2^k * l).
/// Implemented literally as that sum; it exists to cross-validate
/// var_mask_direct, not for speed.
TruthMask var_mask_eq3(uint32_t k, uint32_t n);

/// Variable mask by the doubling recursion: start from the block pattern at
/// width 2^k (top half ones) and tile-double up to width 2^n. Same output
/// contract as var_mask_eq3 via an independent construction.
TruthMask var_mask_direct(uint32_t k, uint32_t n);

/// Truth mask of a CNF formula: AND over clauses of (OR over literal masks).
/// Empty clause -> all zeros; empty formula -> all ones.
TruthMask cnf_mask_direct(const CnfFormula& f, uint32_t var_cap = kMaskVarCap);

/// Same function computed through complements: OR together the complemented
/// clause masks, then complement once. Must equal cnf_mask_direct bit for bit.
TruthMask cnf_mask_demorgan(const CnfFormula& f, uint32_t var_cap = kMaskVarCap);

/// { j : bit j = 1 } — the satisfying assignment numbers.
std::vector<uint64_t> models_of_mask(const TruthMask& m);

}  // namespace ldo
