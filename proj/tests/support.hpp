#pragma once

// Unit-test support: the shared generator kit under its test-local name.

#include "unicover/gen.hpp"

namespace testsup {
using namespace unicover::gen;
}  // namespace testsup
