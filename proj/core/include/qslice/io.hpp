#pragma once

#include <string>
#include <vector>

#include "qslice/rational.hpp"
#include "qslice/verify.hpp"
#include "qslice/zeros.hpp"

namespace qslice {

// JSON interchange formats. Writers emit shortest round-trip numbers
// (via std::to_chars), so every emitted document re-parses to identical
// values; parsers accept any valid JSON number.

/// [w, x, y, z]
std::string to_json(const Quaternion& q);
/// {"coeffs": [[w,x,y,z], ...]} in ascending degree
std::string to_json(const RegPoly& f);
/// {"x": ..., "y": ...}
std::string to_json(const SphereLocus& s);
/// {"b": [...], "c": [...]}
std::string to_json(const SpherePair& p);
/// {"zeros": [{"kind": "point"|"sphere"|"real", ...}, ...]}
std::string to_json(const std::vector<ZeroEntry>& zeros);
/// {"verdict": "pass"|"fail", "witness": [...], "residual": ..., "note"?}
std::string to_json(const ProbeReport& report);
/// Nested {"op": ..., "args": [...]} with polynomial leaves
std::string to_json(const RationalExpr& e);

Quaternion quaternion_from_json(const std::string& text);
RegPoly poly_from_json(const std::string& text);
SphereLocus locus_from_json(const std::string& text);
std::vector<ZeroEntry> zeros_from_json(const std::string& text);
/// Accepts leaves ({"coeffs": ...}) and the node kinds sum, star, recip
/// and const-shift; const-shift takes [expression, degree-0 leaf].
RationalExpr rational_from_json(const std::string& text);

} // namespace qslice
