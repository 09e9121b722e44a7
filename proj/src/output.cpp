#include "mhp/output.hpp"

#include <stdexcept>

namespace mhp {

nlohmann::ordered_json poly_record(const GroupDescriptor& group, const InvariantRequest& request,
                                   const RationalPoly& poly) {
    nlohmann::ordered_json rec;
    if (group.atoms.size() == 1 && !group.quotient) {
        std::string atom = group.atoms.front().str();
        rec["family"] = atom.substr(0, atom.find(':'));
        rec["n"] = group.atoms.front().size;
    } else {
        rec["family"] = group.str();
        rec["n"] = 0;
    }
    rec["r"] = request.rank_r;
    rec["kind"] = invariant_kind_name(request.kind);
    rec["vars"] = poly.vars();
    if (request.kind == InvariantKind::equivariant_mu) rec["order"] = request.series_order;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : poly.terms()) {
        nlohmann::ordered_json term = nlohmann::ordered_json::array();
        term.push_back(mpq_class(c).get_str());
        term.push_back(e);
        terms.push_back(std::move(term));
    }
    rec["terms"] = std::move(terms);
    return rec;
}

RationalPoly poly_from_record(const nlohmann::json& record) {
    try {
        VarList vars = record.at("vars").get<VarList>();
        RationalPoly p(vars);
        for (const auto& term : record.at("terms")) {
            if (!term.is_array() || term.size() != 2)
                throw std::invalid_argument("term is not a [coefficient, exponents] pair");
            mpq_class c(term[0].get<std::string>());
            c.canonicalize();
            Exponents e = term[1].get<Exponents>();
            p.add_term(e, c);
        }
        return p;
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("malformed record: ") + err.what());
    }
}

}  // namespace mhp
