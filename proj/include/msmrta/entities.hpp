#pragma once

#include <cstdint>
#include <vector>

#include "msmrta/grid.hpp"

namespace msmrta {

// Binary vector over the nr requirement kinds.
using CapVector = std::vector<std::uint8_t>;

struct VictimRecord {
    int id = 0;
    Coord location;
    CapVector requirements;  // q vector; at least one bit set

    friend bool operator==(const VictimRecord&, const VictimRecord&) = default;
};

struct RescueRobot {
    int id = 0;
    Coord start;
    CapVector capabilities;  // p vector
};

// Position of a victim id inside a list kept sorted by id.
int victim_pos(const std::vector<VictimRecord>& victims, int id);

}  // namespace msmrta
