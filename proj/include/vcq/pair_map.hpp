#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace vcq {

// Open-addressing hash map from an ordered pair of 32-bit ids to a 32-bit value.
// Lookups are O(1) expected; the pair (0xFFFFFFFF, 0xFFFFFFFF) is reserved.
class PairMap {
public:
    static constexpr std::uint32_t kMissing = 0xFFFFFFFFu;

    PairMap() = default;
    explicit PairMap(std::size_t expected) { rehash(capacity_for(expected)); }

    void insert(std::uint32_t a, std::uint32_t b, std::uint32_t value) {
        if ((size_ + 1) * 2 > keys_.size()) rehash(keys_.empty() ? 16 : keys_.size() * 2);
        const std::uint64_t key = pack(a, b);
        std::size_t slot = hash(key) & mask_;
        while (keys_[slot] != kEmpty && keys_[slot] != key) slot = (slot + 1) & mask_;
        if (keys_[slot] == kEmpty) {
            keys_[slot] = key;
            ++size_;
        }
        values_[slot] = value;
    }

    std::uint32_t find(std::uint32_t a, std::uint32_t b) const noexcept {
        if (keys_.empty()) return kMissing;
        const std::size_t mask = keys_.size() - 1;
        const std::uint64_t key = pack(a, b);
        std::size_t slot = hash(key) & mask;
        while (keys_[slot] != kEmpty) {
            if (keys_[slot] == key) return values_[slot];
            slot = (slot + 1) & mask;
        }
        return kMissing;
    }

    bool contains(std::uint32_t a, std::uint32_t b) const noexcept { return find(a, b) != kMissing; }
    std::size_t size() const noexcept { return size_; }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    static std::uint64_t pack(std::uint32_t a, std::uint32_t b) noexcept {
        return (std::uint64_t{a} << 32) | b;
    }

    // splitmix64 finalizer
    static std::uint64_t hash(std::uint64_t x) noexcept {
        x ^= x >> 30;
        x *= 0xbf58476d1ce4e5b9ull;
        x ^= x >> 27;
        x *= 0x94d049bb133111ebull;
        x ^= x >> 31;
        return x;
    }

    static std::size_t capacity_for(std::size_t expected) {
        std::size_t cap = 16;
        while (cap < expected * 2 + 2) cap *= 2;
        return cap;
    }

    void rehash(std::size_t capacity) {
        std::vector<std::uint64_t> old_keys = std::move(keys_);
        std::vector<std::uint32_t> old_values = std::move(values_);
        keys_.assign(capacity, kEmpty);
        values_.assign(capacity, 0);
        mask_ = capacity - 1;
        size_ = 0;
        for (std::size_t i = 0; i < old_keys.size(); ++i) {
            if (old_keys[i] != kEmpty) {
                insert(static_cast<std::uint32_t>(old_keys[i] >> 32),
                       static_cast<std::uint32_t>(old_keys[i]), old_values[i]);
            }
        }
    }

    std::vector<std::uint64_t> keys_;
    std::vector<std::uint32_t> values_;
    std::size_t mask_ = 0;
    std::size_t size_ = 0;
};

}  // namespace vcq
