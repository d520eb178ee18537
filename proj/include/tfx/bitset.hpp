#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tfx/errors.hpp"

namespace tfx {

/// Subset of the vertices 0..n-1 of a fixed universe, stored as 64-bit
/// words. No bit >= n is ever set.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe) : n_(universe), w_(words_for(universe), 0) {
        if (universe < 0) throw DomainError("VertexSet: negative universe");
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (auto& w : s.w_) w = ~uint64_t{0};
        s.trim();
        return s;
    }

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.set(v);
        return s;
    }

    int universe() const { return n_; }

    bool test(int v) const {
        return v >= 0 && v < n_ && ((w_[v >> 6] >> (v & 63)) & 1u);
    }

    void set(int v) {
        check(v);
        w_[v >> 6] |= uint64_t{1} << (v & 63);
    }

    void reset(int v) {
        check(v);
        w_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    }

    void clear() {
        for (auto& w : w_) w = 0;
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (uint64_t w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// True if every element of `other` is also in *this.
    bool contains(const VertexSet& other) const {
        for (std::size_t i = 0; i < w_.size() && i < other.w_.size(); ++i)
            if (other.w_[i] & ~w_[i]) return false;
        for (std::size_t i = w_.size(); i < other.w_.size(); ++i)
            if (other.w_[i]) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        std::size_t k = std::min(w_.size(), other.w_.size());
        for (std::size_t i = 0; i < k; ++i)
            if (w_[i] & other.w_[i]) return true;
        return false;
    }

    VertexSet& operator&=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size(); ++i)
            w_[i] &= i < o.w_.size() ? o.w_[i] : 0;
        return *this;
    }
    VertexSet& operator|=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] |= o.w_[i];
        return *this;
    }
    /// Set difference.
    VertexSet& operator-=(const VertexSet& o) {
        for (std::size_t i = 0; i < w_.size() && i < o.w_.size(); ++i) w_[i] &= ~o.w_[i];
        return *this;
    }

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool operator==(const VertexSet&) const = default;

    /// Smallest element, or -1 when empty.
    int first() const { return next(-1); }

    /// Smallest element greater than `after`, or -1.
    int next(int after) const {
        int start = after + 1;
        if (start >= n_) return -1;
        std::size_t wi = static_cast<std::size_t>(start) >> 6;
        uint64_t w = w_[wi] & (~uint64_t{0} << (start & 63));
        while (true) {
            if (w) return static_cast<int>((wi << 6) + std::countr_zero(w));
            if (++wi >= w_.size()) return -1;
            w = w_[wi];
        }
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                f(static_cast<int>((wi << 6) + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(count()));
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    const std::vector<uint64_t>& words() const { return w_; }
    uint64_t word(std::size_t i) const { return i < w_.size() ? w_[i] : 0; }

    static int words_for(int n) { return (n + 63) / 64; }

private:
    void check(int v) const {
        if (v < 0 || v >= n_) throw DomainError("VertexSet: vertex out of universe");
    }
    void trim() {
        if (n_ & 63) w_.back() &= (~uint64_t{0}) >> (64 - (n_ & 63));
    }

    int n_ = 0;
    std::vector<uint64_t> w_;
};

} // namespace tfx
