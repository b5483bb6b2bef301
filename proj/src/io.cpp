#include "efxpo/io.hpp"

#include <json.hpp>

#include "efxpo/errors.hpp"

namespace efxpo {

namespace {

using nlohmann::json;

json big_to_json(const BigInt& v) {
    static const BigInt i64_min = std::numeric_limits<std::int64_t>::min();
    static const BigInt u64_max = std::numeric_limits<std::uint64_t>::max();
    if (v >= 0 && v <= u64_max) return v.convert_to<std::uint64_t>();
    if (v < 0 && v >= i64_min) return v.convert_to<std::int64_t>();
    return v.str();
}

BigInt json_to_big(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const std::string& s = j.get_ref<const std::string&>();
        Rational r = parse_rational(s);
        if (!r.is_integer()) throw ParseError(where + " must be an integer, got '" + s + "'");
        return r.num();
    }
    throw ParseError(where + " must be an integer or a digit string");
}

Rational json_to_rational(const json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Rational(BigInt(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Rational(BigInt(j.get<std::int64_t>()));
    if (j.is_number_float()) {
        throw ParseError(where + ": floating-point values are not accepted; " +
                         "write a fraction \"a/b\" or a decimal string");
    }
    if (j.is_string()) return parse_rational(j.get_ref<const std::string&>());
    throw ParseError(where + " must be a number or string");
}

json rational_to_json(const Rational& r) {
    if (r.is_integer()) return big_to_json(r.num());
    return to_string(r);
}

json parse_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON document");
    return j;
}

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

}  // namespace

RawInstance parse_instance(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw ParseError("instance document must be an object");
    RawInstance raw;
    raw.m1 = json_to_big(field(j, "m1"), "m1");
    raw.m2 = json_to_big(field(j, "m2"), "m2");
    const json& agents = field(j, "agents");
    if (!agents.is_array()) throw ParseError("'agents' must be an array");
    for (std::size_t i = 0; i < agents.size(); ++i) {
        const json& a = agents[i];
        std::string where = "agent " + std::to_string(i + 1);
        raw.valuations.emplace_back(json_to_rational(field(a, "v1"), where + " v1"),
                                    json_to_rational(field(a, "v2"), where + " v2"));
    }
    return raw;
}

std::string serialize_instance(const RawInstance& raw) {
    json agents = json::array();
    for (const auto& [v1, v2] : raw.valuations) {
        agents.push_back({{"v1", rational_to_json(v1)}, {"v2", rational_to_json(v2)}});
    }
    json j{{"m1", big_to_json(raw.m1)}, {"m2", big_to_json(raw.m2)}, {"agents", agents}};
    return j.dump(2) + "\n";
}

namespace {

std::string kind_name(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::TrivialFewItems: return "trivial-too-few-items";
        case CertificateKind::TrivialOneType: return "trivial-one-type";
        case CertificateKind::Split: return "split";
        case CertificateKind::Realloc: return "realloc";
    }
    throw InternalInvariantError("unknown certificate kind");
}

CertificateKind kind_from_name(const std::string& name) {
    if (name == "trivial-too-few-items") return CertificateKind::TrivialFewItems;
    if (name == "trivial-one-type") return CertificateKind::TrivialOneType;
    if (name == "split") return CertificateKind::Split;
    if (name == "realloc") return CertificateKind::Realloc;
    throw ParseError("unknown certificate kind '" + name + "'");
}

}  // namespace

ResultDoc make_result_doc(const SolveResult& result, const VerificationInfo& verification) {
    return {result.allocation, result.certificate, verification, result.stats};
}

std::string serialize_result(const ResultDoc& doc) {
    json allocation = json::array();
    for (const Bundle& b : doc.allocation.bundles) {
        allocation.push_back({{"x1", big_to_json(b.x1)}, {"x2", big_to_json(b.x2)}});
    }
    const Certificate& cert = doc.certificate;
    json certificate{
        {"kind", kind_name(cert.kind)},
        {"t", cert.t ? json(*cert.t + 1) : json(nullptr)},
        {"k", cert.k ? big_to_json(*cert.k) : json(nullptr)},
        {"proper_witness", cert.proper_witness ? json(*cert.proper_witness + 1) : json(nullptr)},
    };
    const VerificationInfo& v = doc.verification;
    json verification{
        {"efx", v.efx ? json(*v.efx) : json(nullptr)},
        {"proper", v.proper ? json(*v.proper) : json(nullptr)},
        {"oracle_po", v.oracle_po ? json(*v.oracle_po) : json(nullptr)},
    };
    json stats{
        {"split_builds", doc.stats.split_builds},
        {"classifier_calls", doc.stats.classifier_calls},
        {"elapsed_ns", doc.stats.elapsed_ns},
    };
    json j{{"allocation", allocation},
           {"certificate", certificate},
           {"verification", verification},
           {"stats", stats}};
    return j.dump(2) + "\n";
}

ResultDoc parse_result(const std::string& text) {
    json j = parse_text(text);
    ResultDoc doc;
    for (const json& b : field(j, "allocation")) {
        doc.allocation.bundles.push_back(
            {json_to_big(field(b, "x1"), "x1"), json_to_big(field(b, "x2"), "x2")});
    }
    const json& cert = field(j, "certificate");
    doc.certificate.kind = kind_from_name(field(cert, "kind").get<std::string>());
    if (!field(cert, "t").is_null()) {
        doc.certificate.t = field(cert, "t").get<std::size_t>() - 1;
    }
    if (!field(cert, "k").is_null()) {
        doc.certificate.k = json_to_big(field(cert, "k"), "k");
    }
    if (!field(cert, "proper_witness").is_null()) {
        doc.certificate.proper_witness = field(cert, "proper_witness").get<std::size_t>() - 1;
    }
    const json& v = field(j, "verification");
    if (!field(v, "efx").is_null()) doc.verification.efx = field(v, "efx").get<bool>();
    if (!field(v, "proper").is_null()) doc.verification.proper = field(v, "proper").get<bool>();
    if (!field(v, "oracle_po").is_null()) {
        doc.verification.oracle_po = field(v, "oracle_po").get<std::string>();
    }
    const json& s = field(j, "stats");
    doc.stats.split_builds = field(s, "split_builds").get<std::uint64_t>();
    doc.stats.classifier_calls = field(s, "classifier_calls").get<std::uint64_t>();
    doc.stats.elapsed_ns = field(s, "elapsed_ns").get<std::uint64_t>();
    return doc;
}

}  // namespace efxpo
