#pragma once

#include <string>

#include "hyperkalman/proset.hpp"

namespace hyperkalman {

/// DOT digraph of a proset: one box per similarity class with the member
/// labels stacked, edges along the transitive reduction of the class
/// order, drawn bottom-to-top. Self-loops and transitively implied edges
/// are omitted.
std::string export_dot(const Proset& p, const std::string& name = "proset");

}  // namespace hyperkalman
