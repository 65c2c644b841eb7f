#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "error.hpp"

namespace rs2 {

// Dense node subset over a fixed universe [0, n). Backed by 64-bit blocks;
// membership count is maintained incrementally so count() is O(1).
class NodeSet {
public:
    NodeSet() = default;

    explicit NodeSet(uint32_t universe) : n_(universe), blocks_((universe + 63) / 64, 0) {}

    uint32_t universe_size() const { return n_; }
    uint64_t count() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool test(uint32_t u) const { return (blocks_[u >> 6] >> (u & 63)) & 1; }

    void insert(uint32_t u) {
        uint64_t& b = blocks_[u >> 6];
        uint64_t m = 1ull << (u & 63);
        count_ += !(b & m);
        b |= m;
    }

    void erase(uint32_t u) {
        uint64_t& b = blocks_[u >> 6];
        uint64_t m = 1ull << (u & 63);
        count_ -= !!(b & m);
        b &= ~m;
    }

    void clear() {
        for (auto& b : blocks_) b = 0;
        count_ = 0;
    }

    void insert_all() {
        if (n_ == 0) return;
        for (auto& b : blocks_) b = ~0ull;
        blocks_.back() = last_block_mask();
        count_ = n_;
    }

    NodeSet& operator|=(const NodeSet& o) {
        check_universe(o);
        for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] |= o.blocks_[i];
        recount();
        return *this;
    }

    NodeSet& operator&=(const NodeSet& o) {
        check_universe(o);
        for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= o.blocks_[i];
        recount();
        return *this;
    }

    // Removes every member of o from this set.
    NodeSet& subtract(const NodeSet& o) {
        check_universe(o);
        for (size_t i = 0; i < blocks_.size(); ++i) blocks_[i] &= ~o.blocks_[i];
        recount();
        return *this;
    }

    bool operator==(const NodeSet& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }

    // Visits members in ascending order.
    template <class F>
    void for_each(F f) const {
        for (size_t i = 0; i < blocks_.size(); ++i) {
            uint64_t b = blocks_[i];
            while (b) {
                unsigned bit = static_cast<unsigned>(std::countr_zero(b));
                f(static_cast<uint32_t>(i * 64 + bit));
                b &= b - 1;
            }
        }
    }

    std::vector<uint32_t> members() const {
        std::vector<uint32_t> out;
        out.reserve(count_);
        for_each([&](uint32_t u) { out.push_back(u); });
        return out;
    }

private:
    void check_universe(const NodeSet& o) const {
        if (n_ != o.n_) throw_invalid("node set universe mismatch");
    }

    uint64_t last_block_mask() const {
        unsigned rem = n_ & 63;
        return rem ? (1ull << rem) - 1 : ~0ull;
    }

    void recount() {
        uint64_t c = 0;
        for (auto b : blocks_) c += static_cast<uint64_t>(std::popcount(b));
        count_ = c;
    }

    uint32_t n_ = 0;
    uint64_t count_ = 0;
    std::vector<uint64_t> blocks_;
};

}  // namespace rs2
