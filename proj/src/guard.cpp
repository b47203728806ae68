#include "wog/guard.hpp"

#include <cstdlib>
#include <sstream>

#include "wog/errors.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

void Guard::check_vertex_count(int n) const {
    if (n > VertexSet::capacity) {
        throw GuardError("graph has " + std::to_string(n) + " vertices; the hard limit is " +
                         std::to_string(VertexSet::capacity));
    }
    if (!force && n > max_vertices) {
        throw GuardError("graph has " + std::to_string(n) +
                         " vertices, above the enumeration guard of " +
                         std::to_string(max_vertices) + " (force to override)");
    }
}

void Guard::check_s(int s) const {
    if (s < 1) throw PreconditionError("power exponent must be >= 1");
    if (!force && s > max_s) {
        throw GuardError("s = " + std::to_string(s) + " above the guard of " +
                         std::to_string(max_s) + " (force to override)");
    }
}

void Guard::check_generator_count(std::size_t count) const {
    if (count > max_intermediate_generators) {
        throw GuardError("intermediate generator count " + std::to_string(count) +
                         " exceeds the guard of " + std::to_string(max_intermediate_generators));
    }
}

Guard Guard::with_overrides(Guard base, const std::string& spec) {
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw ParseError("bad guard override '" + item + "', expected key=value");
        }
        std::string key = item.substr(0, eq);
        long value = std::stol(item.substr(eq + 1));
        if (key == "vertices") {
            base.max_vertices = static_cast<int>(value);
        } else if (key == "s") {
            base.max_s = static_cast<int>(value);
        } else if (key == "gens") {
            base.max_intermediate_generators = static_cast<std::size_t>(value);
        } else if (key == "force") {
            base.force = value != 0;
        } else {
            throw ParseError("unknown guard key '" + key + "'");
        }
    }
    return base;
}

Guard Guard::from_env(Guard base) {
    if (const char* env = std::getenv("WOG_GUARD")) {
        return with_overrides(base, env);
    }
    return base;
}

}  // namespace wog
