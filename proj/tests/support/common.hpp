#pragma once

#include "toric/arith.hpp"
#include "toric/error.hpp"

#include <doctest.h>

#include <string>
#include <vector>

// Runs `expr` and checks that it throws toric::Error of the given kind.
#define CHECK_THROWS_KIND(expr, kind_)                                                                                 \
    do {                                                                                                               \
        bool thrown_ = false;                                                                                          \
        try {                                                                                                          \
            (void)(expr);                                                                                              \
        } catch (const toric::Error &e_) {                                                                             \
            thrown_ = true;                                                                                            \
            CHECK_MESSAGE(e_.kind() == (kind_), std::string(e_.what()));                                                            \
        }                                                                                                              \
        CHECK_MESSAGE(thrown_, #expr " did not throw");                                                                \
    } while (0)

namespace testing {

using Pts = std::vector<toric::LatticePoint>;

} // namespace testing
