#include "tmdd/pipeline.hpp"

#include <stdexcept>

namespace tmdd {

Graph named_query(const std::string& name) {
    if (name == "k3") return complete_graph(3);
    if (name == "k4") return complete_graph(4);
    if (name == "k4e") return diamond_graph();
    if (name == "k23") return complete_bipartite_graph(2, 3);
    if (name == "k33") return complete_bipartite_graph(3, 3);
    if (name == "k5") return complete_graph(5);
    throw std::invalid_argument("unknown query shorthand: " + name);
}

ExtendedProfile profile_for(const Graph& h, ProfileChoice choice) {
    if (choice == ProfileChoice::Edge) return edge_profile(h);
    if (choice == ProfileChoice::Special) {
        // recognize the shipped specialized shapes
        if (h == diamond_graph()) return diamond_profile();
        for (int a = 3; a <= 10; ++a)
            if (h == complete_graph(a)) return complete_profile(a);
        for (int a = 1; a <= 6; ++a)
            for (int b = a; b <= 8; ++b)
                if (h == complete_bipartite_graph(a, b))
                    return complete_bipartite_profile(a, b);
    }
    return vertex_cover_profile(h);
}

GraphClassSpec graph_class(const std::string& name) {
    auto entry = [](const std::string& q) {
        Graph h = named_query(q);
        ExtendedProfile p = profile_for(h, ProfileChoice::Special);
        return std::pair<Graph, ExtendedProfile>{std::move(h), std::move(p)};
    };
    if (name == "planar") return {name, {entry("k5"), entry("k33")}};
    if (name == "outerplanar") return {name, {entry("k4"), entry("k23")}};
    if (name == "series-parallel") return {name, {entry("k4")}};
    if (name == "cactus") return {name, {entry("k4e")}};
    throw std::invalid_argument("unknown graph class: " + name);
}

std::vector<std::string> graph_class_names() {
    return {"planar", "outerplanar", "series-parallel", "cactus"};
}

Mdd tm_embeddings(const Graph& g, const ExtendedProfile& profile,
                  std::shared_ptr<MddStore> out) {
    Mdd colored = construct(g, profile.constraint);
    return decolorize(colored, std::move(out));
}

Mdd ftm_subgraphs(const Graph& g, const GraphClassSpec& cls,
                  std::shared_ptr<MddStore> out) {
    if (!out) out = std::make_shared<MddStore>(2, g.edge_count());
    Mdd subd{out, out->bottom()};  // the empty family
    for (const auto& [query, profile] : cls.forbidden)
        subd = family_union(subd, tm_embeddings(g, profile, out), out);
    return nonsupset(subd, out);
}

}  // namespace tmdd
