#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

// Colours are indices 0..r-1. The first three get the conventional names
// red, blue, green; anything beyond prints as "c3", "c4", ...
struct Colour {
    int index = 0;
    auto operator<=>(const Colour&) const = default;
};

inline constexpr Colour kRed{0};
inline constexpr Colour kBlue{1};
inline constexpr Colour kGreen{2};

inline constexpr int kMaxColours = 32;

std::string colour_name(Colour c);
Colour parse_colour(const std::string& s, int colour_count);

// Small set of colours, bitmask over indices < kMaxColours.
class ColourSet {
public:
    ColourSet() = default;
    explicit ColourSet(std::uint32_t bits) : bits_(bits) {}
    static ColourSet single(Colour c) { return ColourSet(1u << check(c.index)); }

    bool contains(Colour c) const { return bits_ & (1u << check(c.index)); }
    void insert(Colour c) { bits_ |= 1u << check(c.index); }
    void erase(Colour c) { bits_ &= ~(1u << check(c.index)); }
    bool empty() const { return bits_ == 0; }
    int count() const { return __builtin_popcount(bits_); }
    std::uint32_t bits() const { return bits_; }
    bool is_exactly(Colour c) const { return bits_ == (1u << check(c.index)); }
    bool subset_of(ColourSet other) const { return (bits_ & ~other.bits_) == 0; }
    ColourSet intersect(ColourSet other) const { return ColourSet(bits_ & other.bits_); }

    std::vector<Colour> to_vector() const {
        std::vector<Colour> out;
        for (int i = 0; i < kMaxColours; ++i)
            if (bits_ & (1u << i)) out.push_back(Colour{i});
        return out;
    }

    friend bool operator==(ColourSet a, ColourSet b) = default;

private:
    static int check(int i) {
        if (i < 0 || i >= kMaxColours) throw std::out_of_range("colour index out of range");
        return i;
    }
    std::uint32_t bits_ = 0;
};

}  // namespace ramsey
