#pragma once

#include <string>

#include "udk/model.h"

namespace udk::detail {

/// Throws ConstructionError unless `d` is valid with at most k crossings per edge.
void construction_gate(const Drawing& d, int k, const std::string& what);

}  // namespace udk::detail
