#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace cowkit {

// Fixed-capacity set of vertex indices 0..capacity-1, stored as bit rows.
// Capacities up to 64 live in one inline word; larger capacities fall back
// to a heap-allocated word array. All binary operations require operands of
// equal capacity.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int capacity) : cap_(capacity) {
        assert(capacity >= 0);
        if (nwords() > 1) heap_.assign(nwords(), 0);
    }

    static Bitset full(int capacity) {
        Bitset s(capacity);
        for (int w = 0; w < s.nwords(); ++w) s.word(w) = ~uint64_t{0};
        s.trim();
        return s;
    }

    static Bitset of(int capacity, std::initializer_list<int> members) {
        Bitset s(capacity);
        for (int v : members) s.set(v);
        return s;
    }

    int capacity() const { return cap_; }
    int nwords() const { return (cap_ + 63) / 64; }

    bool test(int i) const {
        assert(i >= 0 && i < cap_);
        return (word(i >> 6) >> (i & 63)) & 1;
    }
    void set(int i) {
        assert(i >= 0 && i < cap_);
        word(i >> 6) |= uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < cap_);
        word(i >> 6) &= ~(uint64_t{1} << (i & 63));
    }
    void clear() {
        for (int w = 0; w < nwords(); ++w) word(w) = 0;
    }

    bool empty() const {
        for (int w = 0; w < nwords(); ++w)
            if (word(w)) return false;
        return true;
    }
    int count() const {
        int c = 0;
        for (int w = 0; w < nwords(); ++w) c += std::popcount(word(w));
        return c;
    }

    bool intersects(const Bitset& o) const {
        assert(cap_ == o.cap_);
        for (int w = 0; w < nwords(); ++w)
            if (word(w) & o.word(w)) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(cap_ == o.cap_);
        for (int w = 0; w < nwords(); ++w)
            if (word(w) & ~o.word(w)) return false;
        return true;
    }

    Bitset& operator&=(const Bitset& o) {
        assert(cap_ == o.cap_);
        for (int w = 0; w < nwords(); ++w) word(w) &= o.word(w);
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(cap_ == o.cap_);
        for (int w = 0; w < nwords(); ++w) word(w) |= o.word(w);
        return *this;
    }
    // Set difference.
    Bitset& operator-=(const Bitset& o) {
        assert(cap_ == o.cap_);
        for (int w = 0; w < nwords(); ++w) word(w) &= ~o.word(w);
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator-(Bitset a, const Bitset& b) { return a -= b; }

    bool operator==(const Bitset& o) const {
        if (cap_ != o.cap_) return false;
        for (int w = 0; w < nwords(); ++w)
            if (word(w) != o.word(w)) return false;
        return true;
    }

    // Deterministic total order: compare word arrays from word 0 upward.
    bool operator<(const Bitset& o) const {
        assert(cap_ == o.cap_);
        for (int w = 0; w < nwords(); ++w)
            if (word(w) != o.word(w)) return word(w) < o.word(w);
        return false;
    }

    // Smallest member, or -1 when empty.
    int first() const {
        for (int w = 0; w < nwords(); ++w)
            if (word(w)) return w * 64 + std::countr_zero(word(w));
        return -1;
    }
    // Smallest member greater than i, or -1.
    int next(int i) const {
        int w = (i + 1) >> 6;
        if (w >= nwords()) return -1;
        uint64_t cur = word(w) & (~uint64_t{0} << ((i + 1) & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w >= nwords()) return -1;
            cur = word(w);
        }
    }

    struct iterator {
        const Bitset* s;
        int v;
        int operator*() const { return v; }
        iterator& operator++() {
            v = s->next(v);
            return *this;
        }
        bool operator!=(const iterator& o) const { return v != o.v; }
    };
    iterator begin() const { return {this, first()}; }
    iterator end() const { return {this, -1}; }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

    uint64_t& word(int w) {
        assert(w >= 0 && w < nwords());
        return nwords() <= 1 ? inline_ : heap_[w];
    }
    uint64_t word(int w) const {
        assert(w >= 0 && w < nwords());
        return nwords() <= 1 ? inline_ : heap_[w];
    }

private:
    // Zero all bits at positions >= cap_.
    void trim() {
        if (cap_ == 0) return;
        int rem = cap_ & 63;
        if (rem) word(nwords() - 1) &= (~uint64_t{0}) >> (64 - rem);
    }

    int cap_ = 0;
    uint64_t inline_ = 0;
    std::vector<uint64_t> heap_;
};

} // namespace cowkit
