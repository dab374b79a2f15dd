#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lpt/errors.hpp"

namespace lpt {

using VertexId = int;

// Word-packed vertex set over a fixed universe [0, n). The universe size is
// part of the value; mixing sets from different graphs is a bug we check.
class VertexSet {
public:
    VertexSet() = default;

    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    VertexSet(int universe, std::initializer_list<VertexId> members)
        : VertexSet(universe) {
        for (VertexId v : members) add(v);
    }

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (size_t i = 0; i < s.words_.size(); i++) s.words_[i] = ~0ull;
        s.trim();
        return s;
    }

    int universe() const { return universe_; }
    bool empty() const {
        for (auto w : words_) if (w) return false;
        return true;
    }
    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool contains(VertexId v) const {
        check(v);
        return (words_[size_t(v) >> 6] >> (v & 63)) & 1;
    }
    void add(VertexId v) {
        check(v);
        words_[size_t(v) >> 6] |= 1ull << (v & 63);
    }
    void remove(VertexId v) {
        check(v);
        words_[size_t(v) >> 6] &= ~(1ull << (v & 63));
    }

    VertexSet& operator|=(const VertexSet& o) { same(o); for (size_t i = 0; i < words_.size(); i++) words_[i] |= o.words_[i]; return *this; }
    VertexSet& operator&=(const VertexSet& o) { same(o); for (size_t i = 0; i < words_.size(); i++) words_[i] &= o.words_[i]; return *this; }
    VertexSet& operator-=(const VertexSet& o) { same(o); for (size_t i = 0; i < words_.size(); i++) words_[i] &= ~o.words_[i]; return *this; }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { a |= b; return a; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { a &= b; return a; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { a -= b; return a; }

    bool intersects(const VertexSet& o) const {
        same(o);
        for (size_t i = 0; i < words_.size(); i++)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        same(o);
        for (size_t i = 0; i < words_.size(); i++)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool operator==(const VertexSet& o) const {
        return universe_ == o.universe_ && words_ == o.words_;
    }

    // Lowest member, or -1 when empty.
    VertexId first() const {
        for (size_t i = 0; i < words_.size(); i++)
            if (words_[i]) return VertexId(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    // Members in ascending order; the only iteration order we ever use.
    std::vector<VertexId> members() const {
        std::vector<VertexId> out;
        out.reserve(size_t(size()));
        for (size_t i = 0; i < words_.size(); i++) {
            std::uint64_t w = words_[i];
            while (w) {
                out.push_back(VertexId(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < words_.size(); i++) {
            std::uint64_t w = words_[i];
            while (w) {
                f(VertexId(i * 64 + std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for_each([&](VertexId v) {
            if (sep) s += ",";
            s += std::to_string(v);
            sep = true;
        });
        return s + "}";
    }

    // Low 64 bits; valid only when the universe fits one word.
    std::uint64_t word() const { return words_.empty() ? 0 : words_[0]; }

private:
    void check(VertexId v) const {
        if (v < 0 || v >= universe_)
            throw InvalidArgument("vertex " + std::to_string(v) +
                                  " outside universe [0," + std::to_string(universe_) + ")");
    }
    void same(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw InvalidArgument("vertex sets over different universes (" +
                                  std::to_string(universe_) + " vs " + std::to_string(o.universe_) + ")");
    }
    void trim() {
        int extra = int(words_.size()) * 64 - universe_;
        if (extra > 0 && !words_.empty()) words_.back() &= ~0ull >> extra;
    }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace lpt
