#include "invg/pins.hpp"

#include <algorithm>

#include "invg/errors.hpp"

namespace invg {

std::string to_string(PinDirection d) {
    switch (d) {
        case PinDirection::left: return "left";
        case PinDirection::right: return "right";
        case PinDirection::up: return "up";
        case PinDirection::down: return "down";
    }
    return "?";
}

namespace {

struct Rect {
    int i_lo, i_hi, v_lo, v_hi;
    bool contains(Point p) const { return p.index >= i_lo && p.index <= i_hi && p.value >= v_lo && p.value <= v_hi; }
};

Rect rect_of(const std::vector<Point>& pts, std::size_t count) {
    Rect r{pts[0].index, pts[0].index, pts[0].value, pts[0].value};
    for (std::size_t k = 1; k < count; ++k) {
        r.i_lo = std::min(r.i_lo, pts[k].index);
        r.i_hi = std::max(r.i_hi, pts[k].index);
        r.v_lo = std::min(r.v_lo, pts[k].value);
        r.v_hi = std::max(r.v_hi, pts[k].value);
    }
    return r;
}

// Does q slice the rectangle? Returns its direction through `dir`.
bool slices(const Rect& r, Point q, PinDirection* dir) {
    if (r.contains(q)) return false;
    if (q.index > r.i_lo && q.index < r.i_hi) {
        if (dir) *dir = q.value > r.v_hi ? PinDirection::up : PinDirection::down;
        return true;
    }
    if (q.value > r.v_lo && q.value < r.v_hi) {
        if (dir) *dir = q.index > r.i_hi ? PinDirection::right : PinDirection::left;
        return true;
    }
    return false;
}

void check_points(const PinSequence& s) {
    const int n = s.host.size();
    std::vector<char> used(n + 1, 0);
    for (auto p : s.points) {
        if (p.index < 1 || p.index > n || s.host(p.index) != p.value)
            throw DomainError("point (" + std::to_string(p.index) + "," + std::to_string(p.value) +
                              ") is not an entry of the host");
        if (used[p.index]) throw DomainError("repeated point in pin sequence");
        used[p.index] = 1;
    }
}

// Is there a vertical or horizontal line through sep strictly between the
// rectangle and q?
bool separates(Point sep, const Rect& r, Point q) {
    const bool vertical = (r.i_hi < sep.index && sep.index < q.index) || (q.index < sep.index && sep.index < r.i_lo);
    const bool horizontal = (r.v_hi < sep.value && sep.value < q.value) || (q.value < sep.value && sep.value < r.v_lo);
    return vertical || horizontal;
}

bool valid_points(const std::vector<Point>& pts) {
    for (std::size_t k = 2; k < pts.size(); ++k)
        if (!slices(rect_of(pts, k), pts[k], nullptr)) return false;
    return true;
}

}  // namespace

std::vector<PinDirection> pin_directions(const PinSequence& s) {
    check_points(s);
    std::vector<PinDirection> out;
    for (std::size_t k = 2; k < s.points.size(); ++k) {
        PinDirection d{};
        if (!slices(rect_of(s.points, k), s.points[k], &d))
            throw DomainError("pin " + std::to_string(k + 1) + " does not slice the current rectangle");
        out.push_back(d);
    }
    return out;
}

bool validate_pin_sequence(const PinSequence& s) {
    check_points(s);
    return valid_points(s.points);
}

bool is_proper(const PinSequence& s) {
    if (!validate_pin_sequence(s)) return false;
    // p_{i+1} separates p_i from rect(p_1..p_{i-1}) for each i >= 2.
    for (std::size_t i = 2; i < s.points.size(); ++i) {
        const Rect r = rect_of(s.points, i - 1);
        if (!separates(s.points[i], r, s.points[i - 1])) return false;
    }
    return true;
}

PinSequence find_reaching_proper_pin_sequence(const Permutation& p, Point x, Point y, Point z) {
    PinSequence out{p, {x, y, z}};
    check_points(out);
    if (!is_simple(p)) throw DomainError("host permutation is not simple");
    if (rect_of(out.points, 2).contains(z)) throw DomainError("z lies inside rect(x, y)");
    const int n = p.size();

    // Extend x, y greedily (leftmost slicing entry first) until the
    // rectangle covers the plot.
    std::vector<Point> full{x, y};
    while (true) {
        const Rect r = rect_of(full, full.size());
        if (r.i_lo == 1 && r.i_hi == n && r.v_lo == 1 && r.v_hi == n) break;
        bool extended = false;
        for (int i = 1; i <= n && !extended; ++i) {
            const Point q{i, p(i)};
            if (slices(r, q, nullptr)) {
                full.push_back(q);
                extended = true;
            }
        }
        if (!extended) throw DomainError("no pin extends the rectangle; host is not simple");
    }

    auto least_prefix = [&](Point target) {
        for (std::size_t m = 2; m <= full.size(); ++m) {
            if (std::find(full.begin(), full.begin() + static_cast<long>(m), target) != full.begin() + static_cast<long>(m))
                break;
            if (slices(rect_of(full, m), target, nullptr)) return m;
        }
        throw DomainError("no prefix admits the target as its next pin");
    };

    // i_2, i_3, ...: least prefix lengths admitting the previous target.
    std::vector<Point> tail{z};
    std::size_t m = least_prefix(z);
    while (m > 2) {
        const Point q = full[m - 1];
        tail.push_back(q);
        m = least_prefix(q);
    }
    out.points = {x, y};
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) out.points.push_back(*it);
    if (!is_proper(out)) throw DomainError("construction did not yield a proper pin sequence");
    return out;
}

Chain pins_to_chain(const PinSequence& s) {
    if (!is_proper(s)) throw DomainError("pin sequence is not proper");
    Chain c;
    for (auto p : s.points) c.push_back(p.value);
    return c;
}

}  // namespace invg
