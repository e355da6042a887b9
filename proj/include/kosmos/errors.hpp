#pragma once

#include <stdexcept>
#include <string>

namespace kosmos {

/* Every library error carries a stable kind tag plus a human-readable detail.
   The kinds are part of the API surface and are matched by tests. */
struct KosmosError : std::runtime_error {
    std::string kind;

    KosmosError(std::string k, const std::string& detail)
        : std::runtime_error(k + ": " + detail), kind(std::move(k))
    {
    }
};

inline KosmosError shape_mismatch(const std::string& detail)
{
    return KosmosError("ShapeMismatch", detail);
}

}
