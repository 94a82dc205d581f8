#include "polymix/corpus.hpp"

#include "polymix/constructions.hpp"

namespace polymix {

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> v;
        for (int p = 2; p <= 6; ++p)
            v.push_back({"polygon" + std::to_string(p), [p] { return polygon(p); }});
        for (int p = 3; p <= 6; ++p)
            v.push_back({"prism" + std::to_string(p), [p] { return prism_over(polygon(p)); }});
        const std::vector<std::pair<int, int>> toroids = {
            {2, 0}, {1, 1}, {1, 2}, {2, 2}, {3, 0}, {1, 3}, {2, 3}, {1, 4}, {3, 3}, {2, 4}};
        for (const auto& [b, c] : toroids)
            v.push_back({"toroid_" + std::to_string(b) + "_" + std::to_string(c),
                         [b, c] { return toroid_44(b, c); }});
        for (int m = 1; m <= 6; ++m)
            v.push_back({"cubestack" + std::to_string(m), [m] { return cube_stack(m); }});
        v.push_back({"dual_prism3", [] { return dual(prism_over(polygon(3))); }});
        v.push_back({"trivext_polygon3", [] { return trivial_extension(polygon(3)); }});
        v.push_back({"trivext_prism3", [] { return trivial_extension(prism_over(polygon(3))); }});
        v.push_back({"twopower_polygon3", [] { return two_power(polygon(3)); }});
        v.push_back({"twopower_polygon5", [] { return two_power(polygon(5)); }});
        return v;
    }();
    return entries;
}

std::vector<CorpusEntry> corpus_rank3() {
    std::vector<CorpusEntry> out;
    for (const CorpusEntry& e : corpus()) {
        const std::string& n = e.name;
        if (n.starts_with("prism") || n.starts_with("toroid") || n.starts_with("cubestack"))
            out.push_back(e);
    }
    return out;
}

FlagGraph corpus_graph(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e.build();
    throw Error("UnknownCorpusEntry", "no corpus entry named " + name, {{"name", name}});
}

}  // namespace polymix
