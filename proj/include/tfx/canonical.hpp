#pragma once

#include <string>
#include <vector>

#include "tfx/graph.hpp"

namespace tfx {

/// Canonical graph6 text of the isomorphism-class representative. Two
/// graphs have equal CanonicalForm iff they are isomorphic.
struct CanonicalForm {
    std::string g6;
    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
};

/// Partition of V(G) into maximal classes of vertices with identical
/// neighborhoods (false twins; row equality). Classes are ordered by
/// smallest member, members ascending.
struct TwinClasses {
    std::vector<std::vector<int>> members;
    std::vector<int> class_of;
    Graph quotient;
};
TwinClasses twin_classes(const Graph& g);

/// new_index[v] = position of v in the canonical ordering. Invariant under
/// relabeling of g up to automorphisms. Computed by iterated equitable
/// refinement plus backtracking over residual cell choices, with twin
/// classes collapsed first.
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

} // namespace tfx
