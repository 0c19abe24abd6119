#include "domset/report.hpp"

namespace domset {

Json count_json(const BigInt& value) {
    if (value >= 0 && value <= kMaxJsonSafeInteger)
        return Json(value.convert_to<std::uint64_t>());
    return Json(value.str());
}

Json count_json(std::uint64_t value) { return count_json(BigInt(value)); }

Json rational_json(const Rational& value) {
    Json j = Json::object();
    j["num"] = count_json(BigInt(boost::multiprecision::numerator(value)));
    j["den"] = count_json(BigInt(boost::multiprecision::denominator(value)));
    return j;
}

Json plan_json(const PartitionPlan& plan) {
    Json arr = Json::array();
    for (const auto& c : plan.components) {
        Json j = Json::object();
        j["kind"] = std::string(to_string(c.kind));
        j["size"] = c.size;
        j["count"] = count_json(c.count);
        arr.push_back(std::move(j));
    }
    return arr;
}

Json witnesses_json(const std::vector<VertexSet>& sets) {
    Json arr = Json::array();
    for (const auto& s : sets)
        arr.push_back(s.members());
    return arr;
}

int exit_code_for(Errc code) {
    switch (code) {
    case Errc::parse:
    case Errc::invalid_edge:
    case Errc::out_of_range:
    case Errc::input:
        return 2;
    case Errc::infeasible_order:
    case Errc::domain:
    case Errc::undefined_total_domination:
        return 3;
    case Errc::size_limit:
        return 4;
    }
    return 1;
}

} // namespace domset
