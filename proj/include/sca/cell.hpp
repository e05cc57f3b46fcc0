#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace sca {

// A cell has a left and a right slot, each holding at most one strand symbol.
// The slot grammar is asymmetric: r only ever occupies a left slot and l only
// a right slot, which is why mixed contents like [s,l] or [r,s] do not exist.
enum class Strand : std::uint8_t {
    None,
    Straight,   // s: stays on its position
    TurnRight,  // r: moves one position right
    TurnLeft,   // l: moves one position left
};

enum class CellContent : std::uint8_t {
    Empty,           // [n,n]
    LeftStraight,    // [s,n]
    RightStraight,   // [n,s]
    DoubleStraight,  // [s,s]
    RightTurn,       // [r,n]
    LeftTurn,        // [n,l]
    CrossingZ,       // [r,l], the rightmost strand passes over
    CrossingS,       // [r,l] with the leftmost strand passing over
};

Strand left_slot(CellContent c);
Strand right_slot(CellContent c);
int strand_count(CellContent c);
bool is_crossing(CellContent c);

// Builds the cell holding the given slot symbols. Crossings are not
// constructible this way (they carry an orientation); passing the r/l pair
// is a programming error.
CellContent cell_from_slots(Strand left, Strand right);

// Mirror image: slots swap, turn directions swap, crossing orientation flips.
CellContent reflect(CellContent c);

// Two-character token used by the pattern text format: "--", "s-", "-s",
// "ss", "r-", "-l", "rl" (Z-crossing), "RL" (S-crossing).
std::string token(CellContent c);
bool cell_from_token(std::string_view tok, CellContent& out);

// Signed displacement of a strand symbol per step: s = 0, r = +1, l = -1.
int displacement(Strand s);

}  // namespace sca
