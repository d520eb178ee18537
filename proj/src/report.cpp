#include "tfx/report.hpp"

#include "tfx/canonical.hpp"

namespace tfx {

Json to_json(const VertexSet& s) { return Json(s.to_vector()); }

Json to_json(const ColoringCert& c) {
    return Json{{"kind", "coloring"}, {"k", c.k}, {"classes", c.color}};
}

Json to_json(const BipartitionCert& c) {
    return Json{{"kind", "bipartition"}, {"left", to_json(c.left)}, {"right", to_json(c.right)}};
}

Json to_json(const OddCycleCert& c) { return Json{{"kind", "odd-cycle"}, {"cycle", c.cycle}}; }

Json to_json(const TransversalCert& c) {
    return Json{{"kind", "transversal"},
                {"removed", to_json(c.removed)},
                {"residual_left", to_json(c.residual.left)},
                {"residual_right", to_json(c.residual.right)}};
}

Json to_json(const MatchingCert& c) {
    Json edges = Json::array();
    for (auto [u, v] : c.edges) edges.push_back(Json::array({u, v}));
    return Json{{"kind", "matching"}, {"edges", edges}};
}

Json to_json(const CoverCert& c) { return Json{{"kind", "cover"}, {"vertices", to_json(c.cover)}}; }

Json to_json(const C5HomCert& c) { return Json{{"kind", "c5hom"}, {"map", c.phi}}; }

Json to_json(const EnumStats& s) {
    return Json{{"classes_emitted", s.emitted},
                {"classes_generated", s.generated},
                {"nodes", s.nodes},
                {"candidates", s.candidates}};
}

Json to_json(const SearchReport& r) {
    Json j{{"n", r.n},
           {"predicate", r.predicate.to_string()},
           {"bound", bound_name(r.bound)},
           {"bound_value", r.bound_value},
           {"max_edges", r.max_edges},
           {"witnesses", r.witnesses},
           {"verdict", verdict_name(r.verdict)},
           {"capacity", r.capacity_hit},
           {"stats", to_json(r.stats)},
           {"wall_ms", r.wall_ms}};
    if (r.witness_check_ran) {
        j["witness_check"] = Json{{"ok", r.witness_check_ok}, {"note", r.witness_check_note}};
    }
    return j;
}

Json to_json(const BipartizationTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.deleted)
        steps.push_back(Json{{"vertex", s.vertex},
                             {"degree_at_deletion", s.degree_at_deletion},
                             {"threshold", s.threshold.str()}});
    Json j{{"n", t.original.order()},
           {"graph", to_graph6(t.original)},
           {"deleted", steps},
           {"t", t.deleted.size()},
           {"residual_vertices", to_json(t.residual_vertices)},
           {"residual", to_graph6(t.residual)},
           {"residual_class", residual_class_name(t.residual_class)}};
    if (t.residual_bipartition) j["residual_certificate"] = to_json(*t.residual_bipartition);
    if (t.residual_c5hom) j["residual_certificate"] = to_json(*t.residual_c5hom);
    return j;
}

Json to_json(const ClassifierVerdict& v) {
    if (v.kind == ClassifierVerdict::Case::c7)
        return Json{{"case", "c7"}, {"cycle", v.cycle}};
    return Json{{"case", "c5-star"},
                {"c5", v.cycle},
                {"star_center", v.star_center},
                {"star_leaves", v.star_leaves},
                {"r", v.r}};
}

InvariantsReport invariants_report(const Graph& g) {
    InvariantsReport rep;
    Json& j = rep.item;
    j["graph"] = to_graph6(g);
    j["n"] = g.order();
    j["e"] = g.edge_count();
    j["min_degree"] = g.min_degree();
    j["degrees"] = g.degrees();

    Json certs = Json::object();

    TriangleCheck tf = is_triangle_free(g);
    j["triangle_free"] = tf.triangle_free;
    if (tf.witness)
        certs["triangle"] = Json{{"kind", "triangle"},
                                 {"vertices", Json::array({tf.witness->vertices[0],
                                                           tf.witness->vertices[1],
                                                           tf.witness->vertices[2]})}};

    BipartiteCheck bc = is_bipartite(g);
    j["bipartite"] = bc.is_bipartite();
    if (bc.bipartition) certs["bipartition"] = to_json(*bc.bipartition);
    if (bc.odd_cycle) certs["odd_cycle"] = to_json(*bc.odd_cycle);

    OddGirthResult og = odd_girth(g);
    j["odd_girth"] = og.length ? Json(*og.length) : Json(nullptr);
    if (og.cycle) certs["odd_girth_cycle"] = to_json(*og.cycle);

    try {
        ChromaticResult chi = chromatic_number(g);
        j["chi"] = chi.chi;
        certs["coloring"] = to_json(chi.coloring);
    } catch (const CapacityError& e) {
        j["chi"] = nullptr;
        j["chi_capacity_error"] = e.what();
        rep.capacity_hit = true;
    }

    try {
        OctResult oct = odd_cycle_transversal(g);
        j["d2"] = oct.d2;
        certs["transversal"] = to_json(oct.transversal);
    } catch (const CapacityError& e) {
        j["d2"] = nullptr;
        j["d2_capacity_error"] = e.what();
        if (e.best_known) j["d2_upper_bound"] = *e.best_known;
        rep.capacity_hit = true;
    }

    MatchingResult m = max_matching(g);
    j["nu"] = m.nu;
    certs["matching"] = to_json(m.matching);

    try {
        CoverResult c = min_vertex_cover(g);
        j["tau"] = c.tau;
        certs["cover"] = to_json(c.cover);
    } catch (const CapacityError& e) {
        j["tau"] = nullptr;
        j["tau_capacity_error"] = e.what();
        rep.capacity_hit = true;
    }

    try {
        auto hom = c5_homomorphism(g);
        j["c5_homomorphism"] = hom.has_value();
        if (hom) certs["c5hom"] = to_json(*hom);
    } catch (const CapacityError& e) {
        j["c5_homomorphism"] = nullptr;
        j["c5hom_capacity_error"] = e.what();
        rep.capacity_hit = true;
    }

    j["certificates"] = certs;
    return rep;
}

Json make_envelope(const std::string& command, const Json& config) {
    return Json{{"schema", kReportSchema},
                {"command", command},
                {"config", config},
                {"items", Json::array()},
                {"summary", Json::object()},
                {"wall_ms", 0.0}};
}

} // namespace tfx
