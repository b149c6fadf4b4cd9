#include "tb/report_json.hpp"

namespace tb {

json to_json(const Slope& s) { return s.str(); }

json to_json(const ReflectionWord& w) {
    json edges = json::array();
    for (const FareyEdge& e : w.edges) {
        edges.push_back(json::array({e.first().str(), e.second().str()}));
    }
    return edges;
}

json to_json(const OmegaValue& omega, const Int& p) {
    json out;
    switch (omega.kind) {
    case OmegaValue::Kind::GeneratorClass:
        out["type"] = "generator_class";
        break;
    case OmegaValue::Kind::Exact:
        out["type"] = "exact";
        out["value"] = to_string(omega.residues.front());
        break;
    case OmegaValue::Kind::InSet: {
        out["type"] = "in_set";
        json vals = json::array();
        for (const Int& k : omega.residues) {
            vals.push_back(to_string(k));
        }
        out["values"] = std::move(vals);
        break;
    }
    }
    out["modulus"] = to_string(p);
    return out;
}

json to_json(const PairCandidate& c, const Int& p) {
    json out;
    out["kind"] = pair_kind_name(c.kind.tag);
    if (c.kind.tag == PairKindTag::Extra) {
        out["inversion"] = c.kind.extra_index;
        out["arc_slope"] = c.kind.arc_slope->str();
    }
    out["omega"] = to_json(c.omega, p);
    out["generates"] = c.generates;
    out["note"] = c.equivalence_note;
    return out;
}

json to_json(const ClassificationReport& rep) {
    json out;
    out["slope"] = rep.slope.str();
    out["link"] = {{"kind", link_variant_name(rep.kind.variant)},
                   {"components", rep.kind.components}};
    out["isometry_group"] = isom_group_name(rep.isom);
    json ledger = json::array();
    for (const PairCandidate& c : rep.ledger) {
        ledger.push_back(to_json(c, rep.slope.den()));
    }
    out["candidates"] = std::move(ledger);
    json verdict = json::array();
    for (PairKindTag t : rep.verdict) {
        verdict.push_back(pair_kind_name(t));
    }
    out["verdict"] = std::move(verdict);
    out["upper_lower_equivalent"] = rep.upper_lower_equivalent;
    out["notes"] = rep.notes;
    return out;
}

json to_json(const HeckoidDescriptor& d) {
    json out;
    out["family"] = heckoid_family_name(d.family);
    out["slope"] = d.slope.str();
    out["index"] = d.index;
    json weights;
    for (const HeckoidWeight& w : d.weights) {
        if (w.infinite) {
            weights[heckoid_edge_name(w.edge)] = "inf";
        } else {
            weights[heckoid_edge_name(w.edge)] = w.value;
        }
    }
    out["weights"] = std::move(weights);
    out["parabolic_locus"] = parabolic_locus_name(d.locus);
    out["isometry_group"] = heckoid_isom_name(d.isom);
    out["fuchsian_degenerate"] = d.fuchsian_degenerate;
    if (d.fuchsian_degenerate) {
        out["degenerate_note"] = d.degenerate_note;
    }
    return out;
}

json to_json(const HeckoidReport& rep) {
    json out = to_json(rep.descriptor);
    out["unique_pair"] = rep.unique_pair;
    out["figure_type"] = rep.figure_type;
    out["notes"] = rep.notes;
    return out;
}

json to_json(const EpiVerdict& v) {
    json out;
    out["exists"] = v.exists;
    if (v.clause) {
        out["clause"] = epi_clause_name(*v.clause);
    } else {
        out["clause"] = nullptr;
    }
    out["tested"] = v.tested.str();
    out["target"] = v.target.str();
    if (v.witness) {
        out["witness"] = to_json(*v.witness);
        out["witness_length"] = v.witness->length();
    } else {
        out["witness"] = nullptr;
    }
    if (v.obstruction) {
        out["obstruction"] = *v.obstruction;
    } else {
        out["obstruction"] = nullptr;
    }
    return out;
}

json to_json(const MembershipVerdict& v) {
    json out;
    switch (v.kind) {
    case MembershipVerdict::Kind::InOrbitOfR:
        out["verdict"] = "in_orbit_of_r";
        break;
    case MembershipVerdict::Kind::InOrbitOfInfinity:
        out["verdict"] = "in_orbit_of_infinity";
        break;
    case MembershipVerdict::Kind::NotInOrbit:
        out["verdict"] = "not_in_orbit";
        break;
    }
    if (v.positive()) {
        out["witness"] = to_json(v.word);
    }
    out["reduced_rep"] = v.reduced_rep.str();
    return out;
}

json to_json(const selfcheck::CheckResult& r) {
    json out;
    out["name"] = r.name;
    out["pass"] = r.pass;
    out["cases"] = r.cases;
    if (!r.pass) {
        out["detail"] = r.detail;
    }
    return out;
}

json error_json(const error& e) {
    return json{{"error", {{"kind", e.name()}, {"message", e.what()}}}};
}

} // namespace tb
