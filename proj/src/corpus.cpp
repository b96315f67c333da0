#include "omact/corpus.hpp"

#include <cstdio>
#include <random>

namespace omact::corpus {

Digraph coloop1_digraph() { return Digraph{{{"s", "t", "e"}}}; }

Digraph loop1_digraph() { return Digraph{{{"s", "s", "e"}}}; }

Digraph cyc3_digraph() {
    return Digraph{{{"u", "v", "a"}, {"v", "w", "b"}, {"w", "u", "c"}}};
}

Digraph n1_digraph() {
    return Digraph{{{"uw", "v", "a"}, {"v", "uw", "b"}, {"uw", "uw", "c"}}};
}

Digraph k4_digraph() {
    return Digraph{{{"a", "b", "ab"},
                    {"a", "c", "ac"},
                    {"a", "d", "ad"},
                    {"b", "c", "bc"},
                    {"b", "d", "bd"},
                    {"c", "d", "cd"}}};
}

OrientedMatroid coloop1() { return OrientedMatroid::from_digraph(coloop1_digraph()); }
OrientedMatroid loop1() { return OrientedMatroid::from_digraph(loop1_digraph()); }
OrientedMatroid cyc3() { return OrientedMatroid::from_digraph(cyc3_digraph()); }
OrientedMatroid n1() { return OrientedMatroid::from_digraph(n1_digraph()); }
OrientedMatroid k4() { return OrientedMatroid::from_digraph(k4_digraph()); }

Matroid triangle() { return cyc3().underlying(); }

OMPerspective persp1() { return OMPerspective(cyc3(), n1()); }

std::vector<NamedPerspective> named() {
    std::vector<NamedPerspective> out;
    auto self = [&out](const std::string& name, const Digraph& g) {
        OrientedMatroid m = OrientedMatroid::from_digraph(g);
        out.push_back(NamedPerspective{name, g, g, OMPerspective(m, m)});
    };
    self("COLOOP1", coloop1_digraph());
    self("LOOP1", loop1_digraph());
    self("CYC3", cyc3_digraph());
    self("K4", k4_digraph());
    out.push_back(NamedPerspective{"PERSP1", cyc3_digraph(), n1_digraph(), persp1()});
    return out;
}

std::vector<NamedPerspective> random_minors(std::uint32_t seed, int count) {
    // mt19937 with plain modulo reduction keeps the stream identical across
    // platforms; std::uniform_int_distribution would not.
    std::mt19937 rng(seed);
    auto pick = [&rng](int m) { return static_cast<int>(rng() % static_cast<unsigned>(m)); };

    std::vector<NamedPerspective> out;
    for (int i = 0; i < count; ++i) {
        const int n_vertices = 2 + pick(4);  // 2..5
        const int n_arcs = 1 + pick(8);      // 1..8
        Digraph parent;
        for (int j = 0; j < n_arcs; ++j) {
            parent.arcs.push_back(Arc{"v" + std::to_string(pick(n_vertices)),
                                      "v" + std::to_string(pick(n_vertices)),
                                      std::string(1, static_cast<char>('a' + j))});
        }
        Mask f = static_cast<Mask>(rng()) & ((Mask{1} << n_arcs) - 1);
        if (set_size(f) == n_arcs) f &= f - 1;  // keep at least one arc

        char name[16];
        std::snprintf(name, sizeof name, "rand-%03d", i);
        out.push_back(NamedPerspective{name, delete_arcs(parent, f), contract_arcs(parent, f),
                                       digraph_minor_perspective(parent, f)});
    }
    return out;
}

std::vector<NamedPerspective> full(std::uint32_t seed, int count) {
    std::vector<NamedPerspective> out = named();
    auto rnd = random_minors(seed, count);
    out.insert(out.end(), std::make_move_iterator(rnd.begin()),
               std::make_move_iterator(rnd.end()));
    return out;
}

}  // namespace omact::corpus
