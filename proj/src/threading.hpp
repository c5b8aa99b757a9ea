#pragma once

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace isoprod::detail {

// Worker budget: ISOPROD_THREADS when set, hardware concurrency otherwise.
inline int thread_budget() {
    if (const char* env = std::getenv("ISOPROD_THREADS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : int(hw);
}

}  // namespace isoprod::detail
