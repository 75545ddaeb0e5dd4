#ifndef POLYCERT_CERTIFICATE_IO_HPP
#define POLYCERT_CERTIFICATE_IO_HPP

// Serialization of certificates and search results.
//
// JSON never uses native numbers for mathematical values: a rational is the
// pair ["numerator", "denominator"] of decimal strings and indices are
// decimal strings too. Coefficient arrays are in descending powers.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "polycert/classical_bounds.hpp"
#include "polycert/error.hpp"
#include "polycert/format.hpp"
#include "polycert/polynomial.hpp"
#include "polycert/rational.hpp"
#include "polycert/shift_division.hpp"
#include "polycert/shift_search.hpp"

namespace polycert {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kCertificateSchema = "polycert-cert-v1";
inline constexpr std::string_view kThresholdSchema = "polycert-threshold-v1";
inline constexpr std::string_view kBoundSchema = "polycert-bound-v1";

// ---------------------------------------------------------------------------
// JSON

inline json rat_to_json(const Rat& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

inline json rats_to_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const Rat& r : v)
        a.push_back(rat_to_json(r));
    return a;
}

inline json index_to_json(std::size_t i) { return std::to_string(i); }

namespace detail {

[[noreturn]] inline void malformed(const std::string& what) { throw Error(ErrorKind::MalformedInput, what); }

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::string string_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string())
        malformed(std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace detail

inline Rat rat_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        detail::malformed("a rational must be a [\"numerator\", \"denominator\"] pair of strings, got " + j.dump());
    Int num = parse_integer(j[0].get<std::string>());
    Int den = parse_integer(j[1].get<std::string>());
    if (den <= 0)
        detail::malformed("denominator must be positive, got " + j.dump());
    return make_rat(num, den);
}

inline std::vector<Rat> rats_from_json(const json& j, const char* what) {
    if (!j.is_array())
        detail::malformed(std::string("'") + what + "' must be an array");
    std::vector<Rat> out;
    out.reserve(j.size());
    for (const json& e : j)
        out.push_back(rat_from_json(e));
    return out;
}

inline std::size_t index_from_json(const json& j) {
    if (!j.is_string())
        detail::malformed("an index must be a decimal string, got " + j.dump());
    Int v = parse_integer(j.get<std::string>());
    if (v < 0 || !v.fits_ulong_p())
        detail::malformed("index out of range: " + j.dump());
    return static_cast<std::size_t>(v.get_ui());
}

inline json verdict_to_json(const Verdict& v) {
    if (v.ok())
        return json{{"kind", "AllNonnegative"}};
    return json{{"kind", "HasNegative"}, {"index", index_to_json(v.index)}};
}

inline Verdict verdict_from_json(const json& j) {
    std::string kind = detail::string_field(j, "kind");
    if (kind == "AllNonnegative")
        return Verdict::all_nonnegative();
    if (kind == "HasNegative")
        return Verdict::has_negative(index_from_json(detail::field(j, "index")));
    detail::malformed("unknown verdict kind '" + kind + "'");
}

inline json certificate_to_json(const Certificate& c) {
    json j;
    j["schema"] = kCertificateSchema;
    j["variable"] = c.input.variable();
    j["input"] = rats_to_json(c.input.descending_coefficients());
    j["shift"] = rat_to_json(c.shift);
    j["quotient"] = rats_to_json(c.quotient);
    j["remainder"] = rat_to_json(c.remainder);
    j["verdict"] = verdict_to_json(c.verdict);
    return j;
}

/// Reads a certificate as written by certificate_to_json. Only the shape is
/// validated here; the mathematics is left to verify().
inline Certificate certificate_from_json(const json& j) {
    if (!j.is_object())
        detail::malformed("certificate must be a JSON object");
    std::string schema = detail::string_field(j, "schema");
    if (schema != kCertificateSchema)
        detail::malformed("unsupported schema '" + schema + "', expected '" + std::string(kCertificateSchema) + "'");
    Certificate c;
    c.input = Poly::from_descending(rats_from_json(detail::field(j, "input"), "input"),
                                    detail::string_field(j, "variable"));
    c.shift = rat_from_json(detail::field(j, "shift"));
    c.quotient = rats_from_json(detail::field(j, "quotient"), "quotient");
    c.remainder = rat_from_json(detail::field(j, "remainder"));
    c.verdict = verdict_from_json(detail::field(j, "verdict"));
    return c;
}

inline Certificate certificate_from_json_text(std::string_view text) {
    json j = json::parse(text.begin(), text.end(), nullptr, false);
    if (j.is_discarded())
        detail::malformed("certificate is not valid JSON");
    return certificate_from_json(j);
}

inline json threshold_to_json(const Poly& f, const ThresholdBracket& t, const Int& minimal_integer) {
    json j;
    j["schema"] = kThresholdSchema;
    j["variable"] = f.variable();
    j["input"] = rats_to_json(f.descending_coefficients());
    j["lo"] = rat_to_json(t.lo);
    j["hi"] = rat_to_json(t.hi);
    j["epsilon"] = rat_to_json(t.epsilon);
    j["exact"] = t.exact ? rat_to_json(*t.exact) : json(nullptr);
    j["witness_index_p"] = index_to_json(t.witness_index_p);
    json zeros = json::array();
    for (std::size_t k : t.zero_indices_at_hi)
        zeros.push_back(index_to_json(k));
    j["zero_indices_at_hi"] = zeros;
    j["degenerate"] = t.degenerate;
    j["minimal_integer_shift"] = minimal_integer.get_str();
    return j;
}

inline json bound_to_json(const Poly& f, const std::optional<BoundReport>& r) {
    json j;
    j["schema"] = kBoundSchema;
    j["variable"] = f.variable();
    j["input"] = rats_to_json(f.descending_coefficients());
    if (!r) {
        j["no_negative_coefficients"] = true;
        return j;
    }
    j["no_negative_coefficients"] = false;
    j["first_negative_index_k"] = index_to_json(r->first_negative_index_k);
    j["magnitude_B"] = rat_to_json(r->magnitude_B);
    j["bound_overestimate"] = rat_to_json(r->bound_overestimate);
    j["slack"] = rat_to_json(r->slack);
    j["exact"] = r->exact;
    return j;
}

// ---------------------------------------------------------------------------
// Human-readable renderings. Zero quotient terms are omitted.

namespace detail {

inline std::string latex_rat(const Rat& r) {
    std::string sign = sgn(r) < 0 ? "-" : "";
    return sign + format_magnitude(abs(r), Style::latex);
}

inline std::string signed_tail(const Rat& r, Style style) {
    Rat mag = abs(r);
    std::string m = style == Style::latex ? format_magnitude(mag, Style::latex) : to_string(mag);
    return (sgn(r) < 0 ? " - " : " + ") + m;
}

} // namespace detail

/// "f(n) \equiv (2842 n^4 + ... + 433747)(n - 5) + 2166128"
inline std::string render_latex(const Certificate& c) {
    const std::string& v = c.input.variable();
    return "f(" + v + ") \\equiv (" + format(c.quotient_poly(), Style::latex) + ")(" + v + " - " +
           detail::latex_rat(c.shift) + ")" + detail::signed_tail(c.remainder, Style::latex);
}

/// The identity in the plain syntax accepted by parse():
/// "(2842*n^4 + ... + 433747)*(n - 5) + 2166128".
inline std::string render_identity(const Certificate& c) {
    const std::string& v = c.input.variable();
    return "(" + format(c.quotient_poly(), Style::plain) + ")*(" + v + " - " + to_string(c.shift) + ")" +
           detail::signed_tail(c.remainder, Style::plain);
}

inline std::string describe(const Verdict& v, const Certificate& c) {
    if (v.ok())
        return "AllNonnegative";
    std::vector<Rat> values = c.values();
    std::string value = v.index < values.size() ? to_string(values[v.index]) : "?";
    return "HasNegative(" + std::to_string(v.index) + "): f_" + std::to_string(v.index) + "(" + to_string(c.shift) +
           ") = " + value;
}

inline std::string render_text(const Certificate& c) {
    const std::string& v = c.input.variable();
    std::string out;
    out += "polynomial: " + format(c.input) + "\n";
    out += "shift: " + to_string(c.shift) + "\n";
    out += "identity: f(" + v + ") = " + render_identity(c) + "\n";
    out += "verdict: " + describe(c.verdict, c) + "\n";
    if (c.verdict.ok())
        out += "f(" + v + ") > 0 for all " + v + " > " + to_string(c.shift) + "\n";
    return out;
}

} // namespace polycert

#endif // POLYCERT_CERTIFICATE_IO_HPP
