#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "mbd/graph.hpp"

namespace mbd {

struct Graph6Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Header-free dense graph6, single-byte length form (1 <= n <= 62).
/// Sparse6 / digraph6 / the long length form are rejected.
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace mbd
