#ifndef PPOLY_IO_HPP
#define PPOLY_IO_HPP

#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include <json.hpp>

#include <ppoly/bigint.hpp>
#include <ppoly/bounds.hpp>
#include <ppoly/certify.hpp>
#include <ppoly/construct.hpp>
#include <ppoly/egfinv.hpp>
#include <ppoly/errors.hpp>
#include <ppoly/recur.hpp>
#include <ppoly/sequence.hpp>

// Text and JSON formats. Integers are always decimal strings; JSON objects
// use nlohmann's default std::map ordering, so dump() is canonical.
namespace ppoly::io {

using json = nlohmann::json;

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

inline BigInt json_int(const json &v)
{
    if (v.is_string()) {
        return parse_bigint(v.get<std::string>());
    }
    if (v.is_number_integer()) {
        return BigInt(v.dump());
    }
    throw parse_error("expected an integer as a decimal string");
}

} // namespace detail

inline json to_json(const IntSequence &s)
{
    json terms = json::array();
    for (const auto &t : s.terms) {
        terms.push_back(to_decimal(t));
    }
    return json{{"offset", s.offset}, {"terms", std::move(terms)}};
}

inline IntSequence sequence_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw parse_error("sequence JSON needs a \"terms\" array");
    }
    IntSequence s;
    if (j.contains("offset")) {
        if (!j["offset"].is_number_unsigned()) {
            throw parse_error("sequence JSON \"offset\" must be a natural number");
        }
        s.offset = j["offset"].get<std::size_t>();
    }
    for (const auto &t : j["terms"]) {
        s.terms.push_back(detail::json_int(t));
    }
    return s;
}

/// One integer per line; '#' starts a comment line; blank lines are skipped.
/// A whole-input JSON object is accepted as well. "# offset K" sets the offset.
inline IntSequence parse_sequence(std::string_view text)
{
    const auto body = detail::trim(text);
    if (!body.empty() && body.front() == '{') {
        try {
            return sequence_from_json(json::parse(body));
        } catch (const json::exception &e) {
            throw parse_error(std::string("bad sequence JSON: ") + e.what());
        }
    }
    IntSequence s;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        ++line_no;
        const auto line = detail::trim(text.substr(pos, nl - pos));
        pos = nl + 1;
        if (line.empty()) {
            continue;
        }
        if (line.front() == '#') {
            const auto rest = detail::trim(line.substr(1));
            if (rest.rfind("offset", 0) == 0) {
                const auto num = detail::trim(rest.substr(6));
                try {
                    s.offset = parse_bigint(num).get_ui();
                } catch (const parse_error &) {
                    throw parse_error("line " + std::to_string(line_no) + ": bad offset");
                }
            }
            continue;
        }
        try {
            s.terms.push_back(parse_bigint(line));
        } catch (const parse_error &e) {
            throw parse_error("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return s;
}

inline IntSequence read_sequence(std::istream &in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_sequence(text);
}

inline std::string format_sequence(const IntSequence &s)
{
    std::string out;
    if (s.offset != 0) {
        out += "# offset " + std::to_string(s.offset) + "\n";
    }
    for (const auto &t : s.terms) {
        out += to_decimal(t);
        out += '\n';
    }
    return out;
}

inline json to_json(const CertReport &r)
{
    json ces = json::array();
    for (const auto &c : r.counterexamples) {
        ces.push_back({{"n", c.n}, {"modulus", to_decimal(c.modulus)}, {"witness", to_decimal(c.witness)}});
    }
    return json{{"check", r.check},
                {"verdict", r.verdict_text()},
                {"N", r.N},
                {"counterexamples", std::move(ces)},
                {"truncated", r.truncated}};
}

inline json to_json(const PolyRecurrence &r)
{
    json polys = json::array();
    for (const auto &p : r.polys) {
        json coeffs = json::array();
        for (const auto &c : p) {
            coeffs.push_back(to_decimal(c));
        }
        polys.push_back(std::move(coeffs));
    }
    return json{{"order", r.order}, {"polys", std::move(polys)}};
}

inline PolyRecurrence recurrence_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("order") || !j.contains("polys") || !j["polys"].is_array()) {
        throw parse_error("recurrence JSON needs \"order\" and \"polys\"");
    }
    PolyRecurrence r;
    r.order = j["order"].get<std::size_t>();
    for (const auto &p : j["polys"]) {
        if (!p.is_array()) {
            throw parse_error("recurrence polynomial must be an array of coefficients");
        }
        IntPoly poly;
        for (const auto &c : p) {
            poly.push_back(detail::json_int(c));
        }
        r.polys.push_back(std::move(poly));
    }
    if (r.polys.size() != r.order + 1) {
        throw parse_error("recurrence of order " + std::to_string(r.order) + " needs "
                          + std::to_string(r.order + 1) + " polynomials");
    }
    return r;
}

inline PolyRecurrence parse_recurrence(std::string_view text)
{
    try {
        return recurrence_from_json(json::parse(text));
    } catch (const json::exception &e) {
        throw parse_error(std::string("bad recurrence JSON: ") + e.what());
    }
}

inline json to_json(const EgfTriple &t) { return json{{"b", to_json(t.b)}, {"c", to_json(t.c)}, {"u", to_json(t.u)}}; }

inline json to_json(const ConstructStep &s)
{
    return json{{"n", s.n},
                {"C", to_decimal(s.C)},
                {"u", to_decimal(s.u)},
                {"v", to_decimal(s.v)},
                {"w", to_decimal(s.w)},
                {"B", to_decimal(s.B)},
                {"A", to_decimal(s.A)}};
}

inline json to_json(const Construction &c, bool with_trace)
{
    json out{{"A", to_json(c.A)}, {"B", to_json(c.B)}};
    if (with_trace) {
        json steps = json::array();
        for (const auto &s : c.trace) {
            steps.push_back(to_json(s));
        }
        out["trace"] = std::move(steps);
    }
    return out;
}

/// Whitespace-aligned trace table, one row per n.
inline std::string format_trace(const ConstructTrace &trace)
{
    std::ostringstream os;
    os << "# n\tC\tu\tv\tw\tB\tA\n";
    for (const auto &s : trace) {
        os << "# " << s.n << '\t' << s.C << '\t' << s.u << '\t' << s.v << '\t' << s.w << '\t' << s.B << '\t' << s.A
           << '\n';
    }
    return os.str();
}

/// {lo, hi, width} with lo rounded down, hi rounded up.
inline json to_json(const Interval &x, std::size_t digits = 40)
{
    Real w(x.lo().prec());
    mpfr_sub(w.get(), x.hi().get(), x.lo().get(), MPFR_RNDU);
    return json{{"lo", x.lo().to_string(digits, MPFR_RNDD)},
                {"hi", x.hi().to_string(digits, MPFR_RNDU)},
                {"width", w.to_string(6, MPFR_RNDU)}};
}

inline json to_json(const bounds::EffectiveBounds &b)
{
    const auto &p = b.params;
    const auto &h = b.h_search;
    json out;
    out["c"] = to_decimal(p.c);
    out["delta"] = p.delta.to_string();
    out["ell"] = to_json(p.ell);
    out["epsilon"] = to_decimal(p.epsilon);
    out["epsilon_halvings"] = std::to_string(p.eps_halvings);
    out["omega"] = to_json(p.omega);
    out["log_inv_omega"] = to_json(p.log_inv_omega);
    out["J"] = std::to_string(b.j_scan.J);
    out["J_scanned_to"] = std::to_string(b.j_scan.scanned_to);
    out["J_pnt_heuristic"] = b.j_scan.pnt_heuristic;
    out["d_initial"] = std::to_string(p.d_initial);
    out["d"] = std::to_string(p.d);
    out["rho"] = to_decimal(p.rho);
    out["rho_interval"] = json{{"lo", to_json(p.rho_root_lo)}, {"hi", to_json(p.rho_clip_hi)}};
    out["Delta"] = to_json(p.discriminant);
    out["rho2_value"] = to_json(p.rho2_value);
    out["rho1_lhs"] = to_json(p.rho1_lhs);
    out["rho1_rhs"] = to_json(p.rho1_rhs);
    out["j0"] = to_json(b.j0);
    out["floor_j0"] = to_decimal(b.floor_j0);
    out["H"] = to_decimal(h.H);
    out["log_H"] = to_json(h.log_H);
    out["log_A"] = to_json(h.log_A);
    out["log_H_lower"] = to_json(h.log_H_lower);
    out["H_search"] = json{{"evaluations", std::to_string(h.evaluations)},
                           {"doubling_steps", std::to_string(h.doubling_steps)},
                           {"bisection_steps", std::to_string(h.bisection_steps)},
                           {"downward_scan", std::to_string(h.downward_scan)},
                           {"max_precision_bits", std::to_string(h.max_prec_used)}};
    if (b.upper.available) {
        out["upper_bound"] = json{{"available", true},
                                  {"alpha", to_json(b.upper.alpha)},
                                  {"beta", to_json(b.upper.beta)},
                                  {"gamma_prime", to_json(b.upper.gamma_prime)},
                                  {"log_H_upper", to_json(b.upper.log_H_upper)},
                                  {"H_le_upper", b.H_le_upper}};
    } else {
        out["upper_bound"] = json{{"available", false}};
    }
    out["deg_bound_theorem"] = std::to_string(b.deg_bound_theorem);
    out["deg_bound_construction"] = std::to_string(b.deg_bound_construction);
    out["order_bound"] = std::to_string(b.order_bound);
    out["H_ge_lower"] = b.H_ge_lower;
    out["notes"] = b.notes;
    return out;
}

} // namespace ppoly::io

#endif // PPOLY_IO_HPP
