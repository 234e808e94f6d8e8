#pragma once

#include <string>
#include <vector>

#include "bnmodes/dynamics.hpp"

namespace bnmodes {

struct ExportOptions {
    bool no_loops = false;
};

// One node per configuration, one edge per transition.
std::string export_dot(const TransitionGraph& g, const ExportOptions& options = {});

// {"n", "automata", "mode", "edges": [[src, dst], ...]} with sorted edges.
std::string export_json(const TransitionGraph& g, const std::vector<std::string>& automata,
                        const ExportOptions& options = {});

} // namespace bnmodes
