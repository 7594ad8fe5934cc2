#include "weylstat/caps.hpp"

#include <cstdlib>

namespace weylstat {

static int env_or(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed < 1 || parsed > 1000000) return fallback;
    return static_cast<int>(parsed);
}

const Caps& caps() {
    static const Caps c = [] {
        Caps x;
        x.window_degree = env_or("WEYLSTAT_CAP_DEGREE", x.window_degree);
        x.brute_a = env_or("WEYLSTAT_CAP_A", x.brute_a);
        x.brute_bd = env_or("WEYLSTAT_CAP_BD", x.brute_bd);
        x.bernoulli = env_or("WEYLSTAT_CAP_BERNOULLI", x.bernoulli);
        return x;
    }();
    return c;
}

} // namespace weylstat
