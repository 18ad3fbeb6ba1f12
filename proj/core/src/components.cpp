#include "ramsey/components.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ramsey {

int ComponentMap::largest() const {
    int best = -1;
    std::size_t sz = 0;
    for (int i = 0; i < count(); ++i)
        if (members[i].size() > sz) { sz = members[i].size(); best = i; }
    return best;
}

bool ComponentMap::any_odd() const {
    return std::any_of(odd.begin(), odd.end(), [](char c) { return c != 0; });
}

ComponentMap components(const SimpleGraph& g) {
    int n = g.vertex_count();
    ComponentMap cm;
    cm.comp.assign(n, -1);
    cm.side.assign(n, 0);
    for (int s = 0; s < n; ++s) {
        if (cm.comp[s] != -1) continue;
        int id = cm.count();
        cm.members.emplace_back();
        cm.odd.push_back(0);
        std::deque<int> q{s};
        cm.comp[s] = id;
        cm.side[s] = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            cm.members[id].push_back(u);
            for (int v : g.neighbours(u)) {
                if (cm.comp[v] == -1) {
                    cm.comp[v] = id;
                    cm.side[v] = cm.side[u] ^ 1;
                    q.push_back(v);
                } else if (cm.side[v] == cm.side[u]) {
                    cm.odd[id] = 1;
                }
            }
        }
        std::sort(cm.members[id].begin(), cm.members[id].end());
    }
    return cm;
}

std::vector<int> odd_cycle_in_component(const SimpleGraph& g, const ComponentMap& cm,
                                        int component_id) {
    if (component_id < 0 || component_id >= cm.count())
        throw std::out_of_range("component id out of range");
    if (!cm.odd[component_id])
        throw std::invalid_argument("component is bipartite, no odd cycle exists");

    // BFS tree from the component's first vertex; the first same-side edge
    // closes an odd cycle through the lowest common ancestor.
    int n = g.vertex_count();
    std::vector<int> parent(n, -2), depth(n, 0), side(n, 0);
    int root = cm.members[component_id].front();
    std::deque<int> q{root};
    parent[root] = -1;
    for (;;) {
        if (q.empty()) throw std::logic_error("odd component without odd cycle");
        int u = q.front();
        q.pop_front();
        for (int v : g.neighbours(u)) {
            if (parent[v] == -2) {
                parent[v] = u;
                depth[v] = depth[u] + 1;
                side[v] = side[u] ^ 1;
                q.push_back(v);
            } else if (v != parent[u] && side[v] == side[u]) {
                // walk both endpoints up to their common ancestor
                std::vector<int> pu{u}, pv{v};
                int a = u, b = v;
                while (depth[a] > depth[b]) { a = parent[a]; pu.push_back(a); }
                while (depth[b] > depth[a]) { b = parent[b]; pv.push_back(b); }
                while (a != b) {
                    a = parent[a]; pu.push_back(a);
                    b = parent[b]; pv.push_back(b);
                }
                // pu ends at the ancestor; append pv back down, skipping it
                pu.insert(pu.end(), pv.rbegin() + 1, pv.rend());
                return pu;
            }
        }
    }
}

}  // namespace ramsey
