#include "qslice/io.hpp"

#include <cstdio>

#include <json.hpp>

namespace qslice {

namespace {

using nlohmann::json;

void append_quat(std::string& out, const Quaternion& q) {
    out += '[';
    out += format_double(q.w);
    out += ',';
    out += format_double(q.x);
    out += ',';
    out += format_double(q.y);
    out += ',';
    out += format_double(q.z);
    out += ']';
}

void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (const char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON: " + text.substr(0, 120));
    return j;
}

Quaternion quat_from(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ParseError("quaternion must be a 4-array of numbers");
    for (const auto& v : j)
        if (!v.is_number()) throw ParseError("quaternion components must be numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

RegPoly poly_from(const json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw ParseError("polynomial JSON must be an object with a 'coeffs' array");
    const json& coeffs = j["coeffs"];
    if (!coeffs.is_array()) throw ParseError("'coeffs' must be an array");
    std::vector<Quaternion> c;
    c.reserve(coeffs.size());
    for (const auto& e : coeffs) c.push_back(quat_from(e));
    // preserve the input exactly; only trailing exact zeros are dropped
    return RegPoly(std::move(c), 0.0);
}

RationalExpr rational_from(const json& j) {
    if (j.is_object() && j.contains("coeffs")) return RationalExpr::leaf(poly_from(j));
    if (!j.is_object() || !j.contains("op"))
        throw ParseError("rational expression node must carry 'op' or be a polynomial leaf");
    const std::string op = j["op"].get<std::string>();
    if (!j.contains("args") || !j["args"].is_array() || j["args"].empty())
        throw ParseError("rational expression node needs a nonempty 'args' array");
    const json& args = j["args"];
    if (op == "sum" || op == "star") {
        std::vector<RationalExpr> sub;
        sub.reserve(args.size());
        for (const auto& a : args) sub.push_back(rational_from(a));
        return op == "sum" ? RationalExpr::sum(std::move(sub)) : RationalExpr::star(std::move(sub));
    }
    if (op == "recip") {
        if (args.size() != 1) throw ParseError("'recip' takes exactly one polynomial leaf");
        const RationalExpr sub = rational_from(args[0]);
        if (sub.kind() != RationalExpr::Kind::Leaf)
            throw ParseError("'recip' applies to polynomial leaves only");
        return RationalExpr::reciprocal(sub.leaf_poly());
    }
    if (op == "const-shift") {
        if (args.size() != 2) throw ParseError("'const-shift' takes [expression, constant leaf]");
        const RationalExpr sub = rational_from(args[0]);
        const RationalExpr shift = rational_from(args[1]);
        if (shift.kind() != RationalExpr::Kind::Leaf || shift.leaf_poly().degree() > 0)
            throw ParseError("'const-shift' second argument must be a degree-0 leaf");
        return RationalExpr::const_shift(sub, shift.leaf_poly().coeff(0));
    }
    throw ParseError("unknown rational expression op '" + op + "'");
}

} // namespace

std::string to_json(const Quaternion& q) {
    std::string out;
    append_quat(out, q);
    return out;
}

std::string to_json(const RegPoly& f) {
    std::string out = "{\"coeffs\":[";
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        if (n) out += ',';
        append_quat(out, f.coeffs()[n]);
    }
    out += "]}";
    return out;
}

std::string to_json(const SphereLocus& s) {
    return "{\"x\":" + format_double(s.x) + ",\"y\":" + format_double(s.y) + "}";
}

std::string to_json(const SpherePair& p) {
    std::string out = "{\"b\":";
    append_quat(out, p.b);
    out += ",\"c\":";
    append_quat(out, p.c);
    out += "}";
    return out;
}

std::string to_json(const std::vector<ZeroEntry>& zeros) {
    std::string out = "{\"zeros\":[";
    bool first = true;
    for (const auto& z : zeros) {
        if (!first) out += ',';
        first = false;
        switch (z.kind) {
            case ZeroKind::IsolatedPoint:
                out += "{\"kind\":\"point\",\"point\":";
                append_quat(out, z.point);
                out += '}';
                break;
            case ZeroKind::RealPoint:
                out += "{\"kind\":\"real\",\"point\":";
                append_quat(out, z.point);
                out += '}';
                break;
            case ZeroKind::SphericalZero:
                out += "{\"kind\":\"sphere\",\"locus\":" + to_json(z.locus) + "}";
                break;
        }
    }
    out += "]}";
    return out;
}

std::string to_json(const ProbeReport& report) {
    std::string out = "{\"verdict\":\"";
    out += report.pass ? "pass" : "fail";
    out += "\",\"witness\":";
    append_quat(out, report.witness);
    out += ",\"residual\":";
    out += format_double(report.residual);
    if (!report.note.empty()) {
        out += ",\"note\":";
        append_escaped(out, report.note);
    }
    out += '}';
    return out;
}

std::string to_json(const RationalExpr& e) {
    switch (e.kind()) {
        case RationalExpr::Kind::Leaf:
            return to_json(e.leaf_poly());
        case RationalExpr::Kind::Sum:
        case RationalExpr::Kind::Star: {
            std::string out = e.kind() == RationalExpr::Kind::Sum ? "{\"op\":\"sum\",\"args\":["
                                                                  : "{\"op\":\"star\",\"args\":[";
            for (std::size_t n = 0; n < e.args().size(); ++n) {
                if (n) out += ',';
                out += to_json(e.args()[n]);
            }
            out += "]}";
            return out;
        }
        case RationalExpr::Kind::Recip:
            return "{\"op\":\"recip\",\"args\":[" + to_json(e.leaf_poly()) + "]}";
        case RationalExpr::Kind::ConstShift:
            return "{\"op\":\"const-shift\",\"args\":[" + to_json(e.args().front()) + "," +
                   to_json(RegPoly::constant(e.shift())) + "]}";
    }
    throw InconsistencyError("unreachable expression kind");
}

Quaternion quaternion_from_json(const std::string& text) { return quat_from(parse_or_throw(text)); }

RegPoly poly_from_json(const std::string& text) { return poly_from(parse_or_throw(text)); }

SphereLocus locus_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j["x"].is_number() ||
        !j["y"].is_number())
        throw ParseError("sphere locus must be {\"x\": number, \"y\": number}");
    SphereLocus s{j["x"].get<double>(), j["y"].get<double>()};
    if (s.y < 0.0) throw ParseError("sphere locus needs y >= 0");
    return s;
}

std::vector<ZeroEntry> zeros_from_json(const std::string& text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("zeros") || !j["zeros"].is_array())
        throw ParseError("zero set must be {\"zeros\": [...]}");
    std::vector<ZeroEntry> out;
    for (const auto& e : j["zeros"]) {
        if (!e.is_object() || !e.contains("kind")) throw ParseError("zero entry must carry 'kind'");
        const std::string kind = e["kind"].get<std::string>();
        ZeroEntry entry{};
        if (kind == "point" || kind == "real") {
            entry.kind = kind == "point" ? ZeroKind::IsolatedPoint : ZeroKind::RealPoint;
            if (!e.contains("point")) throw ParseError("'" + kind + "' zero entry needs 'point'");
            entry.point = quat_from(e["point"]);
            const SliceCoords sc = decompose(entry.point);
            entry.locus = {sc.x, sc.y};
        } else if (kind == "sphere") {
            entry.kind = ZeroKind::SphericalZero;
            if (!e.contains("locus")) throw ParseError("'sphere' zero entry needs 'locus'");
            entry.locus = locus_from_json(e["locus"].dump());
        } else {
            throw ParseError("unknown zero kind '" + kind + "'");
        }
        out.push_back(entry);
    }
    return out;
}

RationalExpr rational_from_json(const std::string& text) { return rational_from(parse_or_throw(text)); }

} // namespace qslice
