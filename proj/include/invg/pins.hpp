#pragma once

#include <string>
#include <vector>

#include "invg/permutation.hpp"
#include "invg/prime.hpp"

namespace invg {

struct Point {
    int index = 0;
    int value = 0;
    bool operator==(const Point&) const = default;
};

enum class PinDirection { left, right, up, down };
std::string to_string(PinDirection d);

struct PinSequence {
    Permutation host;
    std::vector<Point> points;
};

// Direction of each pin from the third on; throws if a pin does not slice.
std::vector<PinDirection> pin_directions(const PinSequence& s);

bool validate_pin_sequence(const PinSequence& s);
bool is_proper(const PinSequence& s);

// Proper pin sequence x, y, ..., z built by first extending x, y to a pin
// sequence whose rectangle is the whole plot and then walking back from z.
PinSequence find_reaching_proper_pin_sequence(const Permutation& p, Point x, Point y, Point z);

// Value labels of the pins, a chain in the host's inversion graph.
Chain pins_to_chain(const PinSequence& s);

}  // namespace invg
