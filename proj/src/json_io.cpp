#include "povs/json_io.hpp"

#include "povs/errors.hpp"

namespace povs {

namespace {

Json coeffs_to_json(const CoeffMap& coeffs) {
    Json j = Json::object();
    for (const auto& [k, c] : coeffs)
        j[std::to_string(k == 0 ? 1 : prime_at(k))] = c.str();
    return j;
}

CoeffMap coeffs_from_json(const Json& j) {
    if (!j.is_object())
        throw InputError("element must be a JSON object keyed by radicand");
    CoeffMap out;
    for (const auto& [key, value] : j.items()) {
        std::int64_t radicand = std::stoll(key);
        BasisIndex k = 0;
        if (radicand != 0 && radicand != 1) {
            auto idx = index_of_prime(radicand);
            if (!idx)
                throw InputError("radicand " + key + " is not prime");
            k = *idx;
        }
        out[k] = out[k] + Rational::parse(value.get<std::string>());
    }
    return out;
}

Json cosets_json(const CosetSet& c) {
    Json members = Json::array();
    for (const auto& w : c.members())
        members.push_back(to_json(w));
    return members;
}

Json piece_json(const Endpoint& a, const Endpoint& b, const CosetSet& c) {
    return {{"a", to_json(a)},
            {"b", to_json(b)},
            {"polarity", c.polarity() == Polarity::Finite ? "finite" : "cofinite"},
            {"cosets", cosets_json(c)}};
}

} // namespace

Json to_json(const ModelElement& m) {
    // The rational part is keyed "0" to keep it apart from genuine radicands.
    Json j = Json::object();
    for (const auto& [k, c] : m.coeffs())
        j[std::to_string(k == 0 ? 0 : prime_at(k))] = c.str();
    return j;
}

Json to_json(const QuotientElement& w) { return coeffs_to_json(w.coeffs()); }

Json to_json(const Endpoint& e) {
    switch (e.kind) {
    case Endpoint::Kind::NegInf: return "-inf";
    case Endpoint::Kind::PosInf: return "+inf";
    case Endpoint::Kind::Value: return to_json(e.value);
    }
    return nullptr;
}

Json to_json(const CosetSet& c) {
    return {{"polarity", c.polarity() == Polarity::Finite ? "finite" : "cofinite"}, {"cosets", cosets_json(c)}};
}

Json to_json(const Decomposition& d) {
    Json points = Json::array();
    for (const auto& p : d.points)
        points.push_back(to_json(p));
    Json pieces = Json::array();
    for (const auto& p : d.pieces)
        pieces.push_back(piece_json(p.a, p.b, p.cosets));
    return {{"points", points}, {"pieces", pieces}};
}

Json to_json(const UnarySetCode& c) {
    Json frontier = Json::array();
    for (const auto& p : c.frontier)
        frontier.push_back(to_json(p));
    Json pieces = Json::array();
    for (const auto& p : c.pieces)
        pieces.push_back(piece_json(p.a, p.b, p.cosets));
    return {{"frontier", frontier}, {"pieces", pieces}};
}

Json to_json(const FunctionCode& c) {
    Json exceptional = Json::array();
    for (const auto& [x, y] : c.exceptional)
        exceptional.push_back({{"x", to_json(x)}, {"y", to_json(y)}});
    Json pieces = Json::array();
    for (const auto& p : c.pieces)
        pieces.push_back({{"slope", p.slope.str()}, {"intercept", to_json(p.intercept)}, {"domain", to_json(p.domain)}});
    return {{"exceptional", exceptional}, {"pieces", pieces}};
}

Json to_json(const MeasureValue& m, unsigned digits) {
    return {{"value", to_json(m.value)}, {"text", m.value.str()}, {"approx", m.value.decimal(digits)}};
}

Json to_json(const Assignment& sigma) {
    Json j = Json::object();
    for (const auto& [v, value] : sigma.values())
        j[v.str()] = std::visit([](const auto& x) { return to_json(x); }, value);
    return j;
}

Json to_json(const BucketReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.assignments)
        entries.push_back({{"params", to_json(e.params)}, {"bucket", e.bucket}, {"mu", to_json(e.mu)}});
    return {{"k", r.k}, {"assignments", entries}};
}

ModelElement element_from_json(const Json& j) { return ModelElement(coeffs_from_json(j)); }

QuotientElement quotient_from_json(const Json& j) {
    CoeffMap c = coeffs_from_json(j);
    if (c.count(0))
        throw InputError("quotient element has a rational part");
    return QuotientElement(c);
}

Endpoint endpoint_from_json(const Json& j) {
    if (j.is_string()) {
        if (j == "-inf")
            return Endpoint::neg_inf();
        if (j == "+inf")
            return Endpoint::pos_inf();
        throw InputError("bad endpoint " + j.dump());
    }
    return Endpoint::at(element_from_json(j));
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    for (const auto& p : j.at("points"))
        d.points.push_back(element_from_json(p));
    for (const auto& p : j.at("pieces")) {
        std::vector<QuotientElement> members;
        for (const auto& w : p.at("cosets"))
            members.push_back(quotient_from_json(w));
        Polarity pol = p.at("polarity") == "finite" ? Polarity::Finite : Polarity::Cofinite;
        d.pieces.push_back({endpoint_from_json(p.at("a")), endpoint_from_json(p.at("b")), CosetSet(pol, members)});
    }
    return d;
}

} // namespace povs
