#pragma once

// Dynamic bitsets and binary relations on {0,...,n-1}. Relations over
// unravelled history sets can outgrow machine words, hence the block vector.

#include <cstdint>
#include <vector>

#include "topoevid/topology.hpp"

namespace topoevid {

class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    static Bits all(int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i) b.set(i);
        return b;
    }
    static Bits from_mask(Mask m, int n) {
        Bits b(n);
        for (int i = 0; i < n; ++i)
            if (m & (Mask{1} << i)) b.set(i);
        return b;
    }

    int size() const { return n_; }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }
    int count() const {
        int c = 0;
        for (auto w : w_) c += __builtin_popcountll(w);
        return c;
    }
    int first() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return int(k * 64 + __builtin_ctzll(w_[k]));
        return -1;
    }
    // next set bit at position >= i, or -1
    int next(int i) const {
        for (; i < n_; ++i)
            if (test(i)) return i;
        return -1;
    }

    bool subset_of(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }
    bool intersects(const Bits& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & o.w_[k]) return true;
        return false;
    }

    Bits& operator&=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
        return *this;
    }
    Bits& operator|=(const Bits& o) {
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
        return *this;
    }
    friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
    friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
    friend Bits operator~(Bits a) {
        for (std::size_t k = 0; k < a.w_.size(); ++k) a.w_[k] = ~a.w_[k];
        if (a.n_ & 63) a.w_.back() &= (std::uint64_t{1} << (a.n_ & 63)) - 1;
        return a;
    }
    friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

    Mask to_mask() const;

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct Rel {
    int n = 0;
    std::vector<Bits> row;  // row[s] = successors of s

    static Rel empty(int n);
    static Rel identity(int n);
    static Rel total(int n);

    bool has(int s, int t) const { return row[s].test(t); }
    void add(int s, int t) { row[s].set(t); }
    Bits col(int t) const;

    bool reflexive() const;
    bool transitive() const;
    bool symmetric() const;
    bool euclidean() const;  // sRt and sRu imply tRu
    bool serial() const;
    bool is_preorder() const { return reflexive() && transitive(); }
    bool is_equivalence() const { return is_preorder() && symmetric(); }
    bool subset_of(const Rel& o) const;

    Rel converse() const;
    Rel transitive_closure() const;           // plus reflexivity
    Rel equivalence_closure() const;          // reflexive-symmetric-transitive
    friend Rel operator&(const Rel& a, const Rel& b);
    friend Rel operator|(const Rel& a, const Rel& b);
    friend bool operator==(const Rel& a, const Rel& b) { return a.n == b.n && a.row == b.row; }
};

// States s with every successor returning: sRw implies wRs.
Bits max_worlds(const Rel& r);

// Every state reaches max_worlds(r) via r. Always true for finite preorders;
// exposed so callers can assert it.
bool is_max_dense(const Rel& r);

}  // namespace topoevid
