#include "ldo/truth_mask.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace ldo {

namespace {

uint64_t word_count(uint64_t width) { return (width + 63) / 64; }

void check_width(uint64_t width) {
    if (width == 0 || !std::has_single_bit(width))
        throw std::invalid_argument("mask width must be a power of two, got " +
                                    std::to_string(width));
}

void check_same_width(const TruthMask& q, const TruthMask& r) {
    if (q.width() != r.width())
        throw std::invalid_argument("mask width mismatch: " + std::to_string(q.width()) +
                                    " vs " + std::to_string(r.width()));
}

void check_var_range(uint32_t k, uint32_t n) {
    if (n == 0 || n >= 64)
        throw std::invalid_argument("variable count out of range: " + std::to_string(n));
    if (k < 1 || k > n)
        throw std::invalid_argument("variable index " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(n));
}

void check_var_cap(uint32_t n, uint32_t cap) {
    if (n > cap || n >= 64)
        throw std::length_error("mask over " + std::to_string(n) +
                                " variables exceeds the configured cap of " +
                                std::to_string(std::min<uint32_t>(cap, 63)));
}

}  // namespace

TruthMask::TruthMask(uint64_t width) : width_(width), words_(word_count(width), 0) {
    check_width(width);
}

TruthMask TruthMask::ones(uint64_t width) {
    TruthMask m(width);
    for (uint64_t& w : m.words_) w = ~uint64_t{0};
    m.trim();
    return m;
}

TruthMask TruthMask::from_string(std::string_view msb_first) {
    TruthMask m(msb_first.size());
    const uint64_t t = msb_first.size();
    for (uint64_t i = 0; i < t; ++i) {
        char c = msb_first[i];
        if (c != '0' && c != '1')
            throw std::invalid_argument("mask string must contain only 0 and 1");
        if (c == '1') m.set(t - 1 - i, true);
    }
    return m;
}

uint32_t TruthMask::var_count() const {
    return static_cast<uint32_t>(std::countr_zero(width_));
}

bool TruthMask::test(uint64_t j) const {
    if (j >= width_) throw std::out_of_range("mask index out of range");
    return (words_[j >> 6] >> (j & 63)) & 1;
}

void TruthMask::set(uint64_t j, bool value) {
    if (j >= width_) throw std::out_of_range("mask index out of range");
    uint64_t bit = uint64_t{1} << (j & 63);
    if (value)
        words_[j >> 6] |= bit;
    else
        words_[j >> 6] &= ~bit;
}

void TruthMask::trim() {
    uint64_t spare = word_count(width_) * 64 - width_;
    if (spare) words_.back() &= ~uint64_t{0} >> spare;
}

bool TruthMask::all_zeros() const {
    for (uint64_t w : words_)
        if (w) return false;
    return true;
}

bool TruthMask::all_ones() const { return popcount() == width_; }

uint64_t TruthMask::popcount() const {
    uint64_t n = 0;
    for (uint64_t w : words_) n += std::popcount(w);
    return n;
}

std::vector<uint64_t> TruthMask::ones_indices() const {
    std::vector<uint64_t> out;
    for (size_t wi = 0; wi < words_.size(); ++wi) {
        uint64_t w = words_[wi];
        while (w) {
            out.push_back(wi * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

std::vector<uint64_t> TruthMask::zeros_indices() const {
    std::vector<uint64_t> out;
    for (uint64_t j = 0; j < width_; ++j)
        if (!((words_[j >> 6] >> (j & 63)) & 1)) out.push_back(j);
    return out;
}

TruthMask TruthMask::tiled_doubled() const {
    TruthMask m(width_ * 2);
    for (uint64_t j = 0; j < width_ * 2; ++j)
        if (test(j % width_)) m.set(j, true);
    return m;
}

TruthMask TruthMask::stretched_doubled() const {
    TruthMask m(width_ * 2);
    for (uint64_t j = 0; j < width_; ++j) {
        if (test(j)) {
            m.set(2 * j, true);
            m.set(2 * j + 1, true);
        }
    }
    return m;
}

TruthMask TruthMask::rotated_down(uint64_t k) const {
    TruthMask m(width_);
    for (uint64_t j = 0; j < width_; ++j)
        if (test((j + k) % width_)) m.set(j, true);
    return m;
}

std::string TruthMask::to_string() const {
    std::string s(width_, '0');
    for (uint64_t j = 0; j < width_; ++j)
        if (test(j)) s[width_ - 1 - j] = '1';
    return s;
}

TruthMask or_mask(const TruthMask& q, const TruthMask& r) {
    check_same_width(q, r);
    TruthMask m = q;
    for (size_t i = 0; i < m.words_.size(); ++i) m.words_[i] |= r.words_[i];
    return m;
}

TruthMask and_mask(const TruthMask& q, const TruthMask& r) {
    check_same_width(q, r);
    TruthMask m = q;
    for (size_t i = 0; i < m.words_.size(); ++i) m.words_[i] &= r.words_[i];
    return m;
}

TruthMask not_mask(const TruthMask& q) {
    TruthMask m = q;
    for (uint64_t& w : m.words_) w = ~w;
    m.trim();
    return m;
}

TruthMask reverse_mask(const TruthMask& q) {
    TruthMask m(q.width_);
    for (uint64_t j = 0; j < q.width_; ++j)
        if (q.test(q.width_ - 1 - j)) m.set(j, true);
    return m;
}

TruthMask var_mask_eq3(uint32_t k, uint32_t n) {
    check_var_range(k, n);
    const uint64_t t = uint64_t{1} << n;
    const uint64_t s_lo = uint64_t{1} << (k - 1);
    const uint64_t s_hi = (uint64_t{1} << k) - 1;
    const uint64_t l_hi = (uint64_t{1} << (n - k)) - 1;
    TruthMask m(t);
    for (uint64_t r = 0; r < t; ++r) {
        uint64_t sum = 0;
        for (uint64_t s = s_lo; s <= s_hi; ++s)
            for (uint64_t l = 0; l <= l_hi; ++l)
                sum += (r == s + (l << k)) ? 1 : 0;
        if (sum > 1) throw std::logic_error("variable mask sum exceeded 1");
        if (sum) m.set(r, true);
    }
    return m;
}

TruthMask var_mask_direct(uint32_t k, uint32_t n) {
    check_var_range(k, n);
    // Block pattern at width 2^k: top half ones, bottom half zeros.
    TruthMask m(uint64_t{1} << k);
    for (uint64_t j = uint64_t{1} << (k - 1); j < (uint64_t{1} << k); ++j) m.set(j, true);
    for (uint32_t i = k; i < n; ++i) m = m.tiled_doubled();
    return m;
}

namespace {

TruthMask clause_mask(const Clause& c, uint32_t n, uint64_t t) {
    TruthMask m(t);
    for (const Literal& lit : c.literals) {
        TruthMask vm = var_mask_direct(lit.var.index, n);
        m = or_mask(m, lit.negated ? not_mask(vm) : vm);
    }
    return m;
}

}  // namespace

TruthMask cnf_mask_direct(const CnfFormula& f, uint32_t var_cap) {
    validate(f);
    check_var_cap(f.var_count, var_cap);
    const uint64_t t = uint64_t{1} << f.var_count;
    TruthMask acc = TruthMask::ones(t);
    for (const Clause& c : f.clauses) acc = and_mask(acc, clause_mask(c, f.var_count, t));
    return acc;
}

TruthMask cnf_mask_demorgan(const CnfFormula& f, uint32_t var_cap) {
    validate(f);
    check_var_cap(f.var_count, var_cap);
    const uint64_t t = uint64_t{1} << f.var_count;
    TruthMask acc(t);
    for (const Clause& c : f.clauses)
        acc = or_mask(acc, not_mask(clause_mask(c, f.var_count, t)));
    return not_mask(acc);
}

std::vector<uint64_t> models_of_mask(const TruthMask& m) { return m.ones_indices(); }

}  // namespace ldo
