#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cfree/convolution.hpp"
#include "cfree/fock.hpp"
#include "cfree/law.hpp"
#include "cfree/poly.hpp"
#include "cfree/scalar.hpp"
#include "cfree/series.hpp"
#include "cfree/two_level.hpp"

// JSON wire formats. Rationals are always strings ("p/q" or "p") so
// exactness survives serialization.
namespace cfree {

using nlohmann::json;

inline json scalars_to_json(const std::vector<Scalar>& v)
{
    json arr = json::array();
    for (const auto& s : v) {
        arr.push_back(to_string(s));
    }
    return arr;
}

inline std::vector<Scalar> scalars_from_json(const json& arr, const char* what)
{
    if (!arr.is_array()) {
        throw domain_error(std::string(what) + ": expected an array of rational strings");
    }
    std::vector<Scalar> out;
    out.reserve(arr.size());
    for (const auto& item : arr) {
        if (item.is_number_integer()) {
            out.push_back(Scalar(item.get<long long>()));
        } else if (item.is_string()) {
            out.push_back(scalar_from_string(item.get<std::string>()));
        } else {
            throw domain_error(std::string(what) + ": entries must be strings or integers");
        }
    }
    return out;
}

// {"order": N, "psi": [...], "phi": [...]}
inline json law_to_json(const TwoStateLaw& law)
{
    return json{{"order", law.order()},
                {"psi", scalars_to_json(law.psi_moments())},
                {"phi", scalars_to_json(law.phi_moments())}};
}

inline TwoStateLaw law_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("psi") || !j.contains("phi")) {
        throw domain_error("law: expected {\"order\", \"psi\", \"phi\"}");
    }
    TwoStateLaw law(scalars_from_json(j.at("psi"), "law.psi"),
                    scalars_from_json(j.at("phi"), "law.phi"));
    if (j.contains("order") && j.at("order").get<std::size_t>() != law.order()) {
        throw domain_error("law: order field does not match moment count");
    }
    return law;
}

// {"order": N, "coeffs": [...]}
inline json series_to_json(const TruncatedSeries& s)
{
    return json{{"order", s.order()}, {"coeffs", scalars_to_json(s.coeffs())}};
}

inline TruncatedSeries series_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("coeffs")) {
        throw domain_error("series: expected {\"order\", \"coeffs\"}");
    }
    std::vector<Scalar> coeffs = scalars_from_json(j.at("coeffs"), "series.coeffs");
    if (coeffs.empty()) {
        throw domain_error("series: coeffs must be nonempty");
    }
    if (j.contains("order") && j.at("order").get<std::size_t>() != coeffs.size() - 1) {
        throw domain_error("series: order field does not match coefficient count");
    }
    const std::size_t order = coeffs.size() - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

// Operator expressions: compact tagged trees, e.g.
//   {"op":"pi","arg":{"op":"sum","terms":[{"op":"create","letter":0}, ...]}}
inline json fock_op_to_json(const FockOpPtr& op)
{
    switch (op->kind()) {
    case FockOp::Kind::Zero:
        return json{{"op", "zero"}};
    case FockOp::Kind::Identity:
        return json{{"op", "id"}};
    case FockOp::Kind::Create:
        return json{{"op", "create"}, {"letter", op->letter()}};
    case FockOp::Kind::Annihilate:
        return json{{"op", "annihilate"}, {"letter", op->letter()}};
    case FockOp::Kind::Sum: {
        json terms = json::array();
        for (const auto& c : op->children()) {
            terms.push_back(fock_op_to_json(c));
        }
        return json{{"op", "sum"}, {"terms", terms}};
    }
    case FockOp::Kind::Product: {
        json factors = json::array();
        for (const auto& c : op->children()) {
            factors.push_back(fock_op_to_json(c));
        }
        return json{{"op", "product"}, {"factors", factors}};
    }
    case FockOp::Kind::Scale:
        return json{{"op", "scale"},
                    {"by", to_string(op->factor())},
                    {"of", fock_op_to_json(op->children()[0])}};
    }
    throw domain_error("unserializable fock operator");
}

inline FockOpPtr fock_op_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("op")) {
        throw domain_error("operator: expected an object with an \"op\" tag");
    }
    const std::string tag = j.at("op").get<std::string>();
    if (tag == "zero") {
        return FockOp::zero();
    }
    if (tag == "id") {
        return FockOp::identity();
    }
    if (tag == "create") {
        return FockOp::create(j.at("letter").get<unsigned>());
    }
    if (tag == "annihilate") {
        return FockOp::annihilate(j.at("letter").get<unsigned>());
    }
    if (tag == "sum" || tag == "product") {
        std::vector<FockOpPtr> children;
        for (const auto& c : j.at(tag == "sum" ? "terms" : "factors")) {
            children.push_back(fock_op_from_json(c));
        }
        return tag == "sum" ? FockOp::sum(std::move(children))
                            : FockOp::product(std::move(children));
    }
    if (tag == "scale") {
        return FockOp::scale(scalar_from_string(j.at("by").get<std::string>()),
                             fock_op_from_json(j.at("of")));
    }
    throw domain_error("operator: unknown fock tag '" + tag + "'");
}

inline json e_op_to_json(const EOpPtr& op)
{
    switch (op->kind()) {
    case EOp::Kind::Zero:
        return json{{"op", "zero"}};
    case EOp::Kind::Identity:
        return json{{"op", "id"}};
    case EOp::Kind::Pi:
        return json{{"op", "pi"}, {"arg", fock_op_to_json(op->fock())}};
    case EOp::Kind::AStar:
        return json{{"op", "a_star"}, {"letter", op->letter()}};
    case EOp::Kind::AN:
        return json{{"op", "a_n"}, {"letter", op->letter()}, {"n", op->power()}};
    case EOp::Kind::AF:
        return json{{"op", "a_f"},
                    {"letter", op->letter()},
                    {"poly", scalars_to_json(op->poly().coeffs())}};
    case EOp::Kind::Sum: {
        json terms = json::array();
        for (const auto& c : op->children()) {
            terms.push_back(e_op_to_json(c));
        }
        return json{{"op", "sum"}, {"terms", terms}};
    }
    case EOp::Kind::Product: {
        json factors = json::array();
        for (const auto& c : op->children()) {
            factors.push_back(e_op_to_json(c));
        }
        return json{{"op", "product"}, {"factors", factors}};
    }
    case EOp::Kind::Scale:
        return json{{"op", "scale"},
                    {"by", to_string(op->factor())},
                    {"of", e_op_to_json(op->children()[0])}};
    }
    throw domain_error("unserializable operator");
}

inline EOpPtr e_op_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("op")) {
        throw domain_error("operator: expected an object with an \"op\" tag");
    }
    const std::string tag = j.at("op").get<std::string>();
    if (tag == "zero") {
        return EOp::zero();
    }
    if (tag == "id") {
        return EOp::identity();
    }
    if (tag == "pi") {
        return EOp::pi(fock_op_from_json(j.at("arg")));
    }
    if (tag == "a_star") {
        return EOp::a_star(j.at("letter").get<unsigned>());
    }
    if (tag == "a_n") {
        return EOp::a_n(j.at("letter").get<unsigned>(), j.at("n").get<std::size_t>());
    }
    if (tag == "a_f") {
        return EOp::a_f(j.at("letter").get<unsigned>(),
                        Poly{scalars_from_json(j.at("poly"), "a_f.poly")});
    }
    if (tag == "sum" || tag == "product") {
        std::vector<EOpPtr> children;
        for (const auto& c : j.at(tag == "sum" ? "terms" : "factors")) {
            children.push_back(e_op_from_json(c));
        }
        return tag == "sum" ? EOp::sum(std::move(children))
                            : EOp::product(std::move(children));
    }
    if (tag == "scale") {
        return EOp::scale(scalar_from_string(j.at("by").get<std::string>()),
                          e_op_from_json(j.at("of")));
    }
    throw domain_error("operator: unknown tag '" + tag + "'");
}

inline json cross_check_report_to_json(const CrossCheckReport& report)
{
    json j;
    j["kind"] = report.kind == ConvolutionKind::Add ? "add" : "mul";
    j["order"] = report.order;
    j["agree"] = report.agree;
    json paths = json::object();
    if (report.transform_path) {
        paths["transform"] = law_to_json(*report.transform_path);
    }
    if (report.axiomatic_path) {
        paths["axiomatic"] = law_to_json(*report.axiomatic_path);
    }
    if (report.operator_path) {
        paths["operator"] = law_to_json(*report.operator_path);
    }
    j["paths"] = paths;
    if (report.first_mismatch) {
        const auto& mm = *report.first_mismatch;
        j["first_mismatch"] = json{{"paths", {mm.path_a, mm.path_b}},
                                   {"state", mm.state},
                                   {"n", mm.n},
                                   {"values", {to_string(mm.value_a), to_string(mm.value_b)}}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    if (report.precondition_failure) {
        j["precondition_failure"] = *report.precondition_failure;
    }
    return j;
}

} // namespace cfree
