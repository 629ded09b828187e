#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>

#include "aglab/errors.hpp"

namespace aglab {

// Largest supported carrier size. Sets fit in one 16-bit word and Cayley
// tables in a fixed array, which keeps the census hot loops allocation-free.
inline constexpr int kMaxOrder = 16;

// A subset of a carrier [0, n), stored as a bitmask of width n.
class ElementSet {
public:
    ElementSet() = default;

    explicit ElementSet(int universe) : universe_(check_universe(universe)) {}

    ElementSet(int universe, std::initializer_list<int> members) : ElementSet(universe) {
        for (int x : members) {
            insert(x);
        }
    }

    static ElementSet full(int universe) {
        ElementSet s(universe);
        s.bits_ = static_cast<std::uint16_t>((1u << universe) - 1u);
        return s;
    }

    int universe() const { return universe_; }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    std::uint16_t bits() const { return bits_; }

    bool contains(int x) const { return x >= 0 && x < universe_ && (bits_ >> x & 1u); }

    void insert(int x) {
        if (x < 0 || x >= universe_) {
            throw InputError("element " + std::to_string(x) + " outside carrier of size "
                             + std::to_string(universe_));
        }
        bits_ = static_cast<std::uint16_t>(bits_ | (1u << x));
    }

    void erase(int x) {
        if (x >= 0 && x < universe_) {
            bits_ = static_cast<std::uint16_t>(bits_ & ~(1u << x));
        }
    }

    bool is_subset_of(const ElementSet& other) const { return (bits_ & ~other.bits_) == 0; }

    // Smallest member, or -1 when empty.
    int min() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    friend ElementSet operator|(ElementSet a, const ElementSet& b) {
        a.bits_ |= b.bits_;
        return a;
    }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) {
        a.bits_ &= b.bits_;
        return a;
    }
    // Set difference.
    friend ElementSet operator-(ElementSet a, const ElementSet& b) {
        a.bits_ &= static_cast<std::uint16_t>(~b.bits_);
        return a;
    }

    friend bool operator==(const ElementSet& a, const ElementSet& b) {
        return a.universe_ == b.universe_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const ElementSet& a, const ElementSet& b) { return !(a == b); }
    // Order by bit pattern; used for sorted containers of sets.
    friend bool operator<(const ElementSet& a, const ElementSet& b) {
        return a.bits_ != b.bits_ ? a.bits_ < b.bits_ : a.universe_ < b.universe_;
    }

    // Iterates members in increasing order.
    class iterator {
    public:
        iterator(std::uint16_t bits) : bits_(bits) {}
        int operator*() const { return std::countr_zero(bits_); }
        iterator& operator++() {
            bits_ = static_cast<std::uint16_t>(bits_ & (bits_ - 1));
            return *this;
        }
        bool operator!=(const iterator& other) const { return bits_ != other.bits_; }

    private:
        std::uint16_t bits_;
    };

    iterator begin() const { return iterator(bits_); }
    iterator end() const { return iterator(0); }

    std::string to_string() const {
        std::string out = "{";
        bool first = true;
        for (int x : *this) {
            if (!first) out += ",";
            out += std::to_string(x);
            first = false;
        }
        return out + "}";
    }

private:
    static int check_universe(int universe) {
        if (universe < 0 || universe > kMaxOrder) {
            throw SizeError("set universe " + std::to_string(universe) + " outside [0, "
                            + std::to_string(kMaxOrder) + "]");
        }
        return universe;
    }

    std::uint16_t bits_ = 0;
    std::uint8_t universe_ = 0;
};

}  // namespace aglab
