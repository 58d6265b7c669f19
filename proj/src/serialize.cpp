#include "sds/serialize.hpp"

namespace sds {

json to_json(const AbelianGroup& g) {
    return json{{"moduli", g.moduli()}};
}

AbelianGroup group_from_json(const json& j) {
    return AbelianGroup(j.at("moduli").get<std::vector<Coord>>());
}

json to_json(const FiniteField& f) {
    return json{{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

FiniteField field_from_json(const json& j) {
    return FiniteField(j.at("p").get<std::int64_t>(), j.at("n").get<int>(),
                       j.at("modulus").get<std::vector<std::int64_t>>());
}

json to_json(const GroupElement& e) { return json(e.coords); }

GroupElement element_from_json(const json& j) {
    return GroupElement{j.get<std::vector<Coord>>()};
}

json to_json(const DifferenceSet& D, const json& provenance) {
    json elems = json::array();
    for (const auto& e : D.elements()) elems.push_back(e.coords);
    return json{{"group", to_json(D.group())},
                {"elements", std::move(elems)},
                {"params",
                 {{"v", D.params().v},
                  {"k", D.params().k},
                  {"lambda", D.params().lambda}}},
                {"family", D.family()},
                {"provenance", provenance}};
}

DifferenceSet diffset_from_json(const json& j) {
    AbelianGroup group = group_from_json(j.at("group"));
    std::vector<GroupElement> elems;
    for (const auto& e : j.at("elements"))
        elems.push_back(group.reduce(e.get<std::vector<Coord>>()));
    std::string family = j.value("family", "custom");
    return DifferenceSet(std::move(group), std::move(elems), std::move(family));
}

json to_json(const SpectrumReport& rep) {
    return json{{"trivial_value", rep.trivial_value},
                {"target_magnitude", rep.target_magnitude},
                {"max_abs_deviation", rep.max_abs_deviation},
                {"pass", rep.pass}};
}

json to_json(const WhiteBoxSingerInstance& wb, bool include_secret) {
    json j{{"semidirect", true},
           {"oracle", "whitebox-singer"},
           {"d", wb.d},
           {"N", wb.N},
           {"field", to_json(wb.field)},
           {"alpha", wb.alpha.element.coeffs},
           {"whitebox", {{"beta", wb.beta.coeffs}}}};
    if (include_secret && wb.secret) j["secret"] = *wb.secret;
    return j;
}

WhiteBoxSingerInstance whitebox_from_json(const json& j) {
    FiniteField field = field_from_json(j.at("field"));
    FieldElement alpha{j.at("alpha").get<std::vector<std::int64_t>>()};
    FieldElement beta{
        j.at("whitebox").at("beta").get<std::vector<std::int64_t>>()};
    WhiteBoxSingerInstance wb{field,
                              PrimitiveElement{alpha, field.size() - 1},
                              j.at("d").get<int>(),
                              j.at("N").get<std::uint64_t>(),
                              beta,
                              std::nullopt};
    if (j.contains("secret")) wb.secret = j.at("secret").get<std::uint64_t>();
    return wb;
}

}  // namespace sds
