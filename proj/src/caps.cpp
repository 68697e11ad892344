#include "hallforge/caps.hpp"

#include <cstdlib>

namespace hallforge::caps {

std::optional<int> override_value()
{
    const char* env = std::getenv("HALL_FORGE_CAP_OVERRIDE");
    if (!env || !*env)
        return std::nullopt;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

int subspace_total_dim(int p)
{
    if (auto o = override_value())
        return *o;
    if (p == 2 || p == 3)
        return 8;
    return 6;
}

int brute_force_dim(int p)
{
    if (auto o = override_value())
        return *o;
    if (p == 2)
        return 14;
    if (p == 3)
        return 9;
    return 6;
}

int jordan_size(int p)
{
    if (auto o = override_value())
        return *o;
    return p == 2 ? 5 : 4;
}

int jordan_end_dim(int p)
{
    if (auto o = override_value())
        return *o;
    return p <= 3 ? 16 : 8;
}

int hall_littlewood_vars()
{
    if (auto o = override_value())
        return *o;
    return 7;
}

void require(bool within, const std::string& what)
{
    if (!within)
        throw CapExceeded(what);
}

} // namespace hallforge::caps
