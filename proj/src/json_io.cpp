#include "isotree/json_io.hpp"

namespace isotree {

json tree_to_json(const Tree& t) {
    json edges = json::array();
    for (auto [u, v] : t.edges()) edges.push_back({u, v});
    return json{{"n", t.order()}, {"edges", edges}};
}

Tree tree_from_json(const json& j) {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges"))
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Tree::from_edges(n, edges);
}

json to_json(const VertexSet& s) { return json(s.members()); }

json to_json(const Certificate& cert) {
    json violations = json::array();
    for (const auto& v : cert.violations) {
        json item{{"kind", v.kind}, {"vertices", v.vertices}};
        if (v.color > 0) item["color"] = v.color;
        violations.push_back(std::move(item));
    }
    return json{{"valid", cert.valid}, {"violations", violations}};
}

json to_json(const SolveResult& r) {
    return json{{"value", r.value}, {"witness", r.witness.members()}};
}

json to_json(const Coloring& c) { return json{{"l", c.ell}, {"colors", c.color}}; }

json to_json(const StepTrace& st) {
    json j{{"case", proof_case_name(st.proof_case)},
           {"J", st.chosen.members()},
           {"t_J", st.t_j}};
    if (st.psi >= 0) j["psi"] = st.psi;
    return j;
}

json to_json(const ConstructiveResult& r) {
    json trace = json::array();
    for (const auto& st : r.trace) trace.push_back(to_json(st));
    return json{{"set", r.set.members()},
                {"size", r.set.size()},
                {"bound", r.bound},
                {"trace", trace}};
}

json to_json(const BranchReport& r) {
    json branches = json::array();
    for (const auto& b : r.branches)
        branches.push_back(json{{"branch_vertex", b.branch_vertex},
                                {"core_vertex", b.core_vertex},
                                {"component", b.component.members()}});
    return json{{"branches", branches}, {"core_vertices", r.core_vertices.members()}};
}

json to_json(const TkResult& r) {
    json j{{"member", r.member}};
    if (r.member && r.decomposition) {
        json atts = json::array();
        for (const auto& a : r.decomposition->attachments)
            atts.push_back(json{{"owner", a.owner},
                                {"attach_vertex", a.attach_vertex},
                                {"vertices", a.vertices.members()}});
        j["base"] = r.decomposition->base.members();
        j["attachments"] = atts;
    } else {
        j["refutation"] = r.refutation;
    }
    return j;
}

json to_json(const HkReport& r) {
    return json{{"certificate", to_json(r.certificate)},
                {"k", r.k},
                {"hk_order", r.hk_order},
                {"t_order", r.t_order},
                {"min_in_hk", r.min_in_hk},
                {"disjoint_bound", r.disjoint_bound},
                {"privileged", r.privileged.members()}};
}

ExtremalRecipe extremal_recipe_from_json(const json& j) {
    ExtremalRecipe r;
    r.k = j.at("k").get<int>();
    r.base = tree_from_json(j.at("base"));
    for (const auto& a : j.at("attachments")) {
        ExtremalAttachment att;
        att.pattern = tree_from_json(a.at("tree"));
        att.attach_vertex = a.value("attach", 0);
        r.attachments.push_back(std::move(att));
    }
    return r;
}

GapGadgetRecipe gap_recipe_from_json(const json& j) {
    GapGadgetRecipe r;
    r.pattern = tree_from_json(j.at("pattern"));
    r.root = j.value("root", 0);
    r.b = j.at("b").get<int>();
    return r;
}

}  // namespace isotree
