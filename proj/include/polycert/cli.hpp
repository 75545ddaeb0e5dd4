#ifndef POLYCERT_CLI_HPP
#define POLYCERT_CLI_HPP

// The polycert command line:
//
//   polycert <command> [--var x] [--shift R] [--mode integer|real]
//            [--epsilon R] [--format text|json|latex] [--gallop]
//            [--input FILE | EXPR]
//
// Exit status: 0 success, 1 mathematical negative result (certify-at found a
// negative coefficient, verify rejected the certificate), 2 usage or input
// error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polycert/certificate_io.hpp"
#include "polycert/classical_bounds.hpp"
#include "polycert/error.hpp"
#include "polycert/format.hpp"
#include "polycert/parser.hpp"
#include "polycert/shift_division.hpp"
#include "polycert/shift_search.hpp"

namespace polycert::cli {

enum class Command { certify, certify_at, threshold, bound, verify };
enum class Mode { integer, real };
enum class OutputFormat { text, json, latex };

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

struct CliRequest {
    Command command = Command::certify;
    /// Expression text (or certificate JSON for verify) given positionally.
    std::optional<std::string> expression;
    std::optional<std::string> input_file;
    std::optional<std::string> variable;
    std::optional<std::string> shift;
    Mode mode = Mode::integer;
    std::optional<std::string> epsilon;
    OutputFormat format = OutputFormat::text;
    bool gallop = false;
};

namespace detail {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_source(const CliRequest& req, std::istream& in) {
    if (req.input_file && req.expression)
        throw UsageError("give either --input FILE or an inline argument, not both");
    if (req.expression)
        return *req.expression;
    std::string text;
    if (req.input_file && *req.input_file != "-") {
        std::ifstream file(*req.input_file);
        if (!file)
            throw UsageError("cannot open input file '" + *req.input_file + "'");
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    } else {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    return text;
}

inline Rat parse_cli_rational(const std::string& flag, const std::string& text) {
    try {
        return parse_rational(text);
    } catch (const Error&) {
        throw UsageError(flag + " expects an exact rational such as 5 or 1/1048576, got '" + text + "'");
    }
}

inline void emit_certificate(const Certificate& c, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
    case OutputFormat::json: out << certificate_to_json(c).dump(2) << "\n"; break;
    case OutputFormat::latex: out << render_latex(c) << "\n"; break;
    case OutputFormat::text: out << render_text(c); break;
    }
}

inline std::string approx(const Rat& r) {
    std::ostringstream s;
    s.precision(12);
    s << r.get_d();
    return s.str();
}

inline void emit_threshold(const Poly& f, const ThresholdBracket& t, const Int& minimal, OutputFormat fmt,
                           std::ostream& out) {
    switch (fmt) {
    case OutputFormat::json: out << threshold_to_json(f, t, minimal).dump(2) << "\n"; return;
    case OutputFormat::latex:
        if (t.exact)
            out << "b^* = " << polycert::detail::latex_rat(*t.exact);
        else
            out << "b^* \\in \\left(" << polycert::detail::latex_rat(t.lo) << ", "
                << polycert::detail::latex_rat(t.hi) << "\\right]";
        out << ", \\quad b_{\\mathrm{int}} = " << minimal.get_str() << "\n";
        return;
    case OutputFormat::text: break;
    }
    out << "polynomial: " << polycert::format(f) << "\n";
    if (t.degenerate)
        out << "no negative coefficients: every shift b >= 0 works\n";
    if (t.exact)
        out << "optimal shift: b* = " << to_string(*t.exact) << " (exact)\n";
    else
        out << "optimal shift: b* in (" << to_string(t.lo) << ", " << to_string(t.hi) << "]  (~" << approx(t.hi)
            << ")\n";
    out << "bracket: lo = " << to_string(t.lo) << ", hi = " << to_string(t.hi) << ", epsilon = " << to_string(t.epsilon)
        << "\n";
    if (t.witness_index_p > 0) {
        out << "witness index p: " << t.witness_index_p << " (f_" << t.witness_index_p << " is the binding constraint)\n";
    }
    if (!t.zero_indices_at_hi.empty()) {
        out << "zero coefficients at hi:";
        for (std::size_t k : t.zero_indices_at_hi)
            out << " f_" << k;
        out << "\n";
    }
    out << "minimal integer shift: " << minimal.get_str() << "\n";
}

inline void emit_bound(const Poly& f, const std::optional<BoundReport>& r, OutputFormat fmt, std::ostream& out) {
    switch (fmt) {
    case OutputFormat::json: out << bound_to_json(f, r).dump(2) << "\n"; return;
    case OutputFormat::latex:
        if (!r) {
            out << "\\text{no negative coefficients}\n";
            return;
        }
        {
            std::string ratio = "\\frac{" + polycert::detail::latex_rat(r->magnitude_B) + "}{" +
                                polycert::detail::latex_rat(f.leading_coefficient()) + "}";
            std::string term = r->first_negative_index_k == 1
                                   ? ratio
                                   : "\\sqrt[" + std::to_string(r->first_negative_index_k) + "]{" + ratio + "}";
            out << f.variable() << " > 1 + " << term << " \\implies f(" << f.variable() << ") > 0, \\quad 1 + "
                << term << " \\le " << polycert::detail::latex_rat(r->bound_overestimate) << "\n";
        }
        return;
    case OutputFormat::text: break;
    }
    out << "polynomial: " << polycert::format(f) << "\n";
    if (!r) {
        out << "no negative coefficients: f has no positive root\n";
        return;
    }
    out << "first negative coefficient: a_" << r->first_negative_index_k << "\n";
    out << "largest negative magnitude B: " << to_string(r->magnitude_B) << "\n";
    out << "bound: " << to_string(r->bound_overestimate) << " (~" << approx(r->bound_overestimate) << ")"
        << (r->exact ? " exact" : "") << "\n";
    out << "slack: <= " << to_string(r->slack) << "\n";
}

} // namespace detail

/// Executes one request. Output goes to `out`, diagnostics to `err`, and
/// `in` supplies input when neither an argument nor a file is given.
inline int run(const CliRequest& req, std::istream& in, std::ostream& out, std::ostream& err) {
    try {
        if (req.command == Command::certify_at && !req.shift)
            throw detail::UsageError("certify-at requires --shift");
        if (req.command != Command::certify_at && req.shift)
            throw detail::UsageError("--shift is only accepted by certify-at");

        SearchOptions opts;
        opts.gallop = req.gallop;
        const std::string source = detail::read_source(req, in);

        if (req.command == Command::verify) {
            Certificate c = certificate_from_json_text(source);
            VerifyResult r = verify(c);
            if (req.format == OutputFormat::json)
                out << json{{"result", to_string(r)}}.dump(2) << "\n";
            else
                out << to_string(r) << "\n";
            return r == VerifyResult::Valid ? kExitOk : kExitNegative;
        }

        ParseOptions popts;
        popts.variable = req.variable;
        Poly f = parse(source, popts).poly;

        switch (req.command) {
        case Command::certify: {
            CertifyMode mode = CertifyMode::integer();
            if (req.mode == Mode::real)
                mode = CertifyMode::real(req.epsilon ? detail::parse_cli_rational("--epsilon", *req.epsilon)
                                                     : default_threshold_epsilon());
            detail::emit_certificate(certify_minimal(f, mode, opts), req.format, out);
            return kExitOk;
        }
        case Command::certify_at: {
            Certificate c = certify_at(f, detail::parse_cli_rational("--shift", *req.shift));
            detail::emit_certificate(c, req.format, out);
            return c.verdict.ok() ? kExitOk : kExitNegative;
        }
        case Command::threshold: {
            Rat eps = req.epsilon ? detail::parse_cli_rational("--epsilon", *req.epsilon) : default_threshold_epsilon();
            ThresholdBracket t = optimal_threshold(f, eps, opts);
            detail::emit_threshold(f, t, minimal_integer_shift(f, opts), req.format, out);
            return kExitOk;
        }
        case Command::bound: {
            Rat eps = req.epsilon ? detail::parse_cli_rational("--epsilon", *req.epsilon) : default_root_epsilon();
            detail::emit_bound(f, lagrange_bound(f, eps), req.format, out);
            return kExitOk;
        }
        case Command::verify: break;
        }
        return kExitOk;
    } catch (const detail::UsageError& e) {
        err << "polycert: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "polycert: " << e.what() << "\n";
        return kExitUsage;
    }
}

/// Parses argv (without the program name) into a request and runs it.
inline int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact positivity certificates for univariate polynomials", "polycert"};
    app.require_subcommand(1);

    CliRequest req;
    std::string mode = "integer";
    std::string format = "text";

    struct Spec {
        const char* name;
        const char* help;
        Command command;
    };
    const Spec specs[] = {
        {"certify", "certificate at the minimal integer (or near-optimal real) shift", Command::certify},
        {"certify-at", "certificate at a given shift", Command::certify_at},
        {"threshold", "bracket the optimal shift and report the minimal integer shift", Command::threshold},
        {"bound", "Lagrange upper bound on the positive roots", Command::bound},
        {"verify", "check a JSON certificate", Command::verify},
    };
    for (const Spec& s : specs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("--var", req.variable, "variable name expected in the expression");
        sub->add_option("--shift", req.shift, "shift b as an exact rational (certify-at only)");
        sub->add_option("--mode", mode, "integer or real")->check(CLI::IsMember({"integer", "real"}));
        sub->add_option("--epsilon", req.epsilon, "bracket width as an exact rational, e.g. 1/1048576");
        sub->add_option("--format", format, "text, json or latex")->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--input", req.input_file, "read the expression (or certificate) from FILE; '-' for stdin");
        sub->add_flag("--gallop", req.gallop, "use doubling plus bisection in the integer searches");
        sub->add_option("source", req.expression, "polynomial expression (certificate JSON for verify)");
        Command cmd = s.command;
        sub->callback([&req, cmd] { req.command = cmd; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        err << "polycert: " << e.what() << "\n";
        return kExitUsage;
    }

    req.mode = mode == "real" ? Mode::real : Mode::integer;
    req.format = format == "json" ? OutputFormat::json : format == "latex" ? OutputFormat::latex : OutputFormat::text;
    if (req.mode == Mode::real && req.command != Command::certify) {
        err << "polycert: --mode is only accepted by certify\n";
        return kExitUsage;
    }
    return run(req, in, out, err);
}

} // namespace polycert::cli

#endif // POLYCERT_CLI_HPP
