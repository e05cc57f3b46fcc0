#include "sca/cell.hpp"

#include <cassert>

namespace sca {

Strand left_slot(CellContent c) {
    switch (c) {
        case CellContent::LeftStraight:
        case CellContent::DoubleStraight:
            return Strand::Straight;
        case CellContent::RightTurn:
        case CellContent::CrossingZ:
        case CellContent::CrossingS:
            return Strand::TurnRight;
        default:
            return Strand::None;
    }
}

Strand right_slot(CellContent c) {
    switch (c) {
        case CellContent::RightStraight:
        case CellContent::DoubleStraight:
            return Strand::Straight;
        case CellContent::LeftTurn:
        case CellContent::CrossingZ:
        case CellContent::CrossingS:
            return Strand::TurnLeft;
        default:
            return Strand::None;
    }
}

int strand_count(CellContent c) {
    return (left_slot(c) != Strand::None ? 1 : 0) + (right_slot(c) != Strand::None ? 1 : 0);
}

bool is_crossing(CellContent c) {
    return c == CellContent::CrossingZ || c == CellContent::CrossingS;
}

CellContent cell_from_slots(Strand left, Strand right) {
    assert(left != Strand::TurnLeft && right != Strand::TurnRight);
    assert(!(left == Strand::TurnRight && right == Strand::TurnLeft));
    if (left == Strand::Straight) {
        return right == Strand::Straight ? CellContent::DoubleStraight : CellContent::LeftStraight;
    }
    if (left == Strand::TurnRight) {
        return CellContent::RightTurn;
    }
    if (right == Strand::Straight) {
        return CellContent::RightStraight;
    }
    if (right == Strand::TurnLeft) {
        return CellContent::LeftTurn;
    }
    return CellContent::Empty;
}

CellContent reflect(CellContent c) {
    switch (c) {
        case CellContent::LeftStraight:
            return CellContent::RightStraight;
        case CellContent::RightStraight:
            return CellContent::LeftStraight;
        case CellContent::RightTurn:
            return CellContent::LeftTurn;
        case CellContent::LeftTurn:
            return CellContent::RightTurn;
        case CellContent::CrossingZ:
            return CellContent::CrossingS;
        case CellContent::CrossingS:
            return CellContent::CrossingZ;
        default:
            return c;
    }
}

std::string token(CellContent c) {
    switch (c) {
        case CellContent::Empty:
            return "--";
        case CellContent::LeftStraight:
            return "s-";
        case CellContent::RightStraight:
            return "-s";
        case CellContent::DoubleStraight:
            return "ss";
        case CellContent::RightTurn:
            return "r-";
        case CellContent::LeftTurn:
            return "-l";
        case CellContent::CrossingZ:
            return "rl";
        case CellContent::CrossingS:
            return "RL";
    }
    return "--";
}

bool cell_from_token(std::string_view tok, CellContent& out) {
    if (tok == "--") {
        out = CellContent::Empty;
    } else if (tok == "s-") {
        out = CellContent::LeftStraight;
    } else if (tok == "-s") {
        out = CellContent::RightStraight;
    } else if (tok == "ss") {
        out = CellContent::DoubleStraight;
    } else if (tok == "r-") {
        out = CellContent::RightTurn;
    } else if (tok == "-l") {
        out = CellContent::LeftTurn;
    } else if (tok == "rl") {
        out = CellContent::CrossingZ;
    } else if (tok == "RL") {
        out = CellContent::CrossingS;
    } else {
        return false;
    }
    return true;
}

int displacement(Strand s) {
    switch (s) {
        case Strand::TurnRight:
            return 1;
        case Strand::TurnLeft:
            return -1;
        default:
            return 0;
    }
}

}  // namespace sca
