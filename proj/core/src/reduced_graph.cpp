#include "ramsey/reduced_graph.hpp"

#include "ramsey/predicates.hpp"

#include <stdexcept>

namespace ramsey {

ReducedGraph build_reduced_graph(const EdgeColouring& g, const Partition& pi, const Rational& eps,
                                 const Rational& xi, RegularityMode mode,
                                 const RegularityOptions& opts) {
    pi.validate_over(g.vertex_count());
    const int K = pi.part_count();
    if (K < 1) throw std::invalid_argument("build_reduced_graph: partition has no parts");

    ReducedGraph rg;
    rg.coloured = MultiColouredGraph(K, g.colour_count());
    rg.regular_pairs = SimpleGraph(K);
    rg.partition = pi;
    rg.provenance.eps = eps;
    rg.provenance.xi = xi;
    rg.provenance.mode = mode;
    rg.provenance.exhaustive = true;
    rg.provenance.seed = opts.seed;
    rg.provenance.trials = opts.trials;

    const bool fits_exact = pi.part_size() <= opts.exact_limit;
    for (int i = 0; i < K; ++i) {
        for (int j = i + 1; j < K; ++j) {
            bool regular = true;
            for (int c = 0; c < g.colour_count() && regular; ++c) {
                RegularityMode pair_mode =
                    (mode == RegularityMode::exact && fits_exact) ? RegularityMode::exact
                                                                  : RegularityMode::sampled;
                auto res = is_eps_regular(g, pi.parts[i], pi.parts[j], Colour{c}, eps, pair_mode, opts);
                if (!res.exhaustive) rg.provenance.exhaustive = false;
                regular = res.regular;
            }
            if (!regular) continue;
            rg.regular_pairs.add_edge(i, j);
            ColourSet cs;
            for (int c = 0; c < g.colour_count(); ++c)
                if (density(g, pi.parts[i], pi.parts[j], Colour{c}) >= xi) cs.insert(Colour{c});
            if (!cs.empty()) rg.coloured.set_colours(i, j, cs);
        }
    }
    return rg;
}

}  // namespace ramsey
