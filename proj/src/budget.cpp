#include "cmw/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace cmw {

Budgets Budgets::from_environment() {
    Budgets b;
    if (const char* raw = std::getenv("CMW_BUDGET")) {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
        if (ec == std::errc{} && *ptr == '\0' && value > 0) {
            b.cover_search = value;
            b.faces = value;
        }
    }
    return b;
}

}  // namespace cmw
