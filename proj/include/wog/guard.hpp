#pragma once

#include <cstddef>
#include <string>

namespace wog {

// Cover enumeration and ideal arithmetic are exponential in the worst case.
// A Guard bounds the damage; `force` lifts the vertex bound for callers who
// know what they are doing. Defaults are the library-level limits; the CLI
// tightens them (22 vertices, s <= 5) and reads overrides from WOG_GUARD.
struct Guard {
    int max_vertices = 30;
    int max_s = 8;
    std::size_t max_intermediate_generators = 2'000'000;
    bool force = false;

    void check_vertex_count(int n) const;
    void check_s(int s) const;
    void check_generator_count(std::size_t count) const;

    // Parses "vertices=22,s=5,gens=2000000" style override strings.
    static Guard with_overrides(Guard base, const std::string& spec);
    // Applies the WOG_GUARD environment variable, if set.
    static Guard from_env(Guard base);
};

}  // namespace wog
