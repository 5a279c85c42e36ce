#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#include "errors.hpp"

namespace wtoll {

using Vertex = std::size_t;

/// Fixed-universe bitset over the vertex identifiers 0..universe-1.
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) {}

        Vertex operator*() const { return pos_; }
        const_iterator& operator++() {
            pos_ = set_->next(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int) {
            auto tmp = *this;
            ++*this;
            return tmp;
        }
        bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
        for (auto v : members) insert(v);
    }

    template <typename Range>
    static VertexSet from(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (auto& w : s.words_) w = ~Word{0};
        s.trim();
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }

    bool contains(Vertex v) const noexcept {
        return v < universe_ && (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
    }

    void insert(Vertex v) {
        check(v);
        words_[v / kWordBits] |= Word{1} << (v % kWordBits);
    }

    void erase(Vertex v) {
        check(v);
        words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
    }

    std::size_t size() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool empty() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Smallest member >= from, or universe() if there is none.
    std::size_t next(std::size_t from) const noexcept {
        if (from >= universe_) return universe_;
        std::size_t wi = from / kWordBits;
        Word w = words_[wi] & (~Word{0} << (from % kWordBits));
        while (true) {
            if (w) {
                std::size_t pos = wi * kWordBits + static_cast<std::size_t>(std::countr_zero(w));
                return pos < universe_ ? pos : universe_;
            }
            if (++wi == words_.size()) return universe_;
            w = words_[wi];
        }
    }

    /// Smallest member, or universe() when empty.
    Vertex first() const noexcept { return next(0); }

    const_iterator begin() const { return {this, next(0)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<Vertex> to_vector() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (auto v : *this) out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Complement within the universe.
    VertexSet operator~() const {
        VertexSet c(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) c.words_[i] = ~words_[i];
        c.trim();
        return c;
    }

    bool intersects(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const VertexSet& o) const {
        same_universe(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const = default;

    /// Orders by sorted member list, lexicographically.
    bool lex_less(const VertexSet& o) const {
        auto a = begin(), b = o.begin();
        for (; a != end() && b != o.end(); ++a, ++b)
            if (*a != *b) return *a < *b;
        return a == end() && b != o.end();
    }

    const std::vector<Word>& words() const noexcept { return words_; }

private:
    void check(Vertex v) const {
        if (v >= universe_)
            throw ArgumentError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_) + "-1");
    }
    void same_universe(const VertexSet& o) const {
        if (o.universe_ != universe_) throw ArgumentError("vertex sets over different universes");
    }
    void trim() {
        if (universe_ % kWordBits && !words_.empty()) words_.back() &= (Word{1} << (universe_ % kWordBits)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

} // namespace wtoll
