#include "invg/errors.hpp"

#include <algorithm>
#include <atomic>

namespace invg::caps {

namespace {
std::atomic<int> g_override{0};
}

void set_override(int n) { g_override.store(std::max(0, n)); }

int override_value() { return g_override.load(); }

void require(std::string_view op, int n, int soft, int hard) {
    int cap = soft;
    if (int o = g_override.load(); o > 0) cap = std::max(soft, std::min(o, hard));
    if (n > cap) {
        throw SizeCapError(std::string(op) + ": n=" + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap) +
                           " (hard cap " + std::to_string(hard) + ")");
    }
}

}  // namespace invg::caps
