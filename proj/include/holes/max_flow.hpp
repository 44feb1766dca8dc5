#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

namespace holes {

/// Dinic max-flow on a small directed network with 64-bit capacities.
class MaxFlow
{
public:
    static constexpr std::int64_t infinite = std::numeric_limits<std::int64_t>::max() / 4;

    explicit MaxFlow(int nodes)
        : graph_(static_cast<std::size_t>(nodes))
    {
    }

    /// Returns an arc handle for flow().
    int add_arc(int from, int to, std::int64_t capacity)
    {
        graph_[static_cast<std::size_t>(from)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({to, capacity, 0});
        graph_[static_cast<std::size_t>(to)].push_back(static_cast<int>(arcs_.size()));
        arcs_.push_back({from, 0, 0});
        return static_cast<int>(arcs_.size()) - 2;
    }

    std::int64_t run(int source, int sink)
    {
        std::int64_t total = 0;
        while (levels(source, sink)) {
            next_.assign(graph_.size(), 0);
            while (std::int64_t pushed = push(source, sink, infinite))
                total += pushed;
        }
        return total;
    }

    std::int64_t flow(int arc) const { return arcs_[static_cast<std::size_t>(arc)].flow; }

private:
    struct Arc
    {
        int to;
        std::int64_t capacity;
        std::int64_t flow;
    };

    bool levels(int source, int sink)
    {
        level_.assign(graph_.size(), -1);
        std::queue<int> queue;
        level_[static_cast<std::size_t>(source)] = 0;
        queue.push(source);
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int id : graph_[static_cast<std::size_t>(u)]) {
                const Arc& a = arcs_[static_cast<std::size_t>(id)];
                if (a.flow < a.capacity && level_[static_cast<std::size_t>(a.to)] < 0) {
                    level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
                    queue.push(a.to);
                }
            }
        }
        return level_[static_cast<std::size_t>(sink)] >= 0;
    }

    std::int64_t push(int u, int sink, std::int64_t limit)
    {
        if (u == sink)
            return limit;
        auto& adjacency = graph_[static_cast<std::size_t>(u)];
        for (std::size_t& i = next_[static_cast<std::size_t>(u)]; i < adjacency.size(); ++i) {
            int id = adjacency[i];
            Arc& a = arcs_[static_cast<std::size_t>(id)];
            if (a.flow >= a.capacity || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(u)] + 1)
                continue;
            if (std::int64_t pushed = push(a.to, sink, std::min(limit, a.capacity - a.flow))) {
                a.flow += pushed;
                arcs_[static_cast<std::size_t>(id ^ 1)].flow -= pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<int>> graph_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

} // namespace holes
