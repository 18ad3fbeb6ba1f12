#pragma once

#include "ramsey/graph.hpp"

#include <optional>
#include <vector>

namespace ramsey {

// Connected components with per-component bipartiteness. A component is
// "odd" when it contains an odd cycle, i.e. is non-bipartite. Isolated
// vertices form their own (bipartite) components.
struct ComponentMap {
    std::vector<int> comp;                  // vertex -> component id
    std::vector<int> side;                  // BFS 2-colouring; meaningful when !odd[comp[v]]
    std::vector<std::vector<int>> members;  // component id -> sorted vertices
    std::vector<char> odd;                  // component id -> non-bipartite?

    int count() const { return static_cast<int>(members.size()); }
    int largest() const;                    // id of a largest component (-1 if none)
    bool any_odd() const;
};

ComponentMap components(const SimpleGraph& g);

// An odd cycle inside the given non-bipartite component, as a vertex list.
std::vector<int> odd_cycle_in_component(const SimpleGraph& g, const ComponentMap& cm,
                                        int component_id);

}  // namespace ramsey
