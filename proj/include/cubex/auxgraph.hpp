#pragma once

// Plain finite graphs used for crossing graphs, contact graphs, cone-offs
// and defining graphs.

#include <string>
#include <vector>

namespace cubex {

enum class AuxKind { Crossing, Contact, ConeOff, Defining, Other };

struct AuxGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;
    AuxKind kind = AuxKind::Other;

    void add_edge(int a, int b) {
        edges.emplace_back(a, b);
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    static AuxGraph with_nodes(int n, AuxKind kind = AuxKind::Other) {
        AuxGraph g;
        g.n = n;
        g.adj.assign(n, {});
        g.kind = kind;
        return g;
    }

    bool connected() const;
    // -1 where unreachable
    std::vector<int> bfs(int src) const;
    // -1 when disconnected or empty
    int diameter() const;
};

}  // namespace cubex
