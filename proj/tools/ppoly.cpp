// ppoly: command-line front end for the ppoly library.
//
// Exit codes: 0 success / certified, 1 refuted or nothing found,
// 2 usage or input error, 3 certifier disagreement.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <ppoly/ppoly.hpp>

namespace {

using namespace ppoly;
using io::json;

constexpr int exit_ok = 0;
constexpr int exit_refuted = 1;
constexpr int exit_usage = 2;
constexpr int exit_disagree = 3;

std::string slurp(const std::string &path)
{
    if (path.empty() || path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw parse_error("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

IntSequence read_input(const std::string &path) { return io::parse_sequence(slurp(path)); }

GrowthFn parse_phi(const std::string &spec)
{
    if (spec == "primorial") {
        return GrowthFn::primorial();
    }
    if (spec.rfind("geometric:", 0) == 0) {
        const auto ratio = parse_rational(spec.substr(10));
        if (ratio <= 0) {
            throw domain_error("geometric ratio must be positive");
        }
        return GrowthFn::geometric(ratio);
    }
    if (spec.rfind("file:", 0) == 0) {
        std::istringstream in(slurp(spec.substr(5)));
        std::vector<BigRational> values;
        std::string line;
        while (std::getline(in, line)) {
            const auto t = io::detail::trim(line);
            if (t.empty() || t.front() == '#') {
                continue;
            }
            values.push_back(parse_rational(t));
        }
        return GrowthFn::table(std::move(values));
    }
    throw parse_error("--phi must be primorial, geometric:NUM/DEN or file:PATH");
}

// Transforms the terms as listed and carries the starting index through, so
// piping transform into inverse-transform is the identity on any input file.
IntSequence keep_offset(IntSequence (*f)(const IntSequence &), IntSequence s)
{
    const std::size_t offset = s.offset;
    s.offset = 0;
    IntSequence out = f(s);
    out.offset = offset;
    return out;
}

bounds::Delta parse_delta(const std::string &spec)
{
    if (spec.rfind("exp:", 0) == 0) {
        return bounds::Delta::exp_of(parse_rational(spec.substr(4)));
    }
    return bounds::Delta::rational(parse_rational(spec));
}

void print_report(const CertReport &r, bool as_json)
{
    if (as_json) {
        std::cout << io::to_json(r).dump() << '\n';
        return;
    }
    std::cout << r.verdict_text() << '\n' << r.summary() << '\n';
    for (const auto &c : r.counterexamples) {
        std::cout << "counterexample n=" << c.n << " modulus=" << c.modulus << " witness=" << c.witness << '\n';
    }
    if (r.truncated) {
        std::cout << "(more counterexamples omitted)\n";
    }
}

int verdict_code(const CertReport &r) { return r.certified() ? exit_ok : exit_refuted; }

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Primary pseudo-polynomial toolkit"};
    app.require_subcommand(1);
    int code = exit_ok;

    std::string input;
    const auto add_input = [&](CLI::App *sub) {
        sub->add_option("-i,--input", input, "Sequence file (default: stdin)");
    };

    // sieve
    auto *sieve = app.add_subcommand("sieve", "Print P_0..P_N or d_0..d_N");
    std::string kind;
    std::size_t sieve_n = 0;
    sieve->add_option("--kind", kind)->required()->check(CLI::IsMember({"primorial", "lcm"}));
    sieve->add_option("--n", sieve_n)->required();
    sieve->callback([&] {
        const auto values = kind == "primorial" ? PrimorialTable(sieve_n).values() : LcmTable(sieve_n).values();
        std::cout << io::format_sequence(IntSequence(values));
    });

    auto *transform = app.add_subcommand("transform", "b_n = sum (-1)^(n-k) C(n,k) a_k");
    add_input(transform);
    transform->callback([&] { std::cout << io::format_sequence(keep_offset(binomial_transform, read_input(input))); });

    auto *inverse = app.add_subcommand("inverse-transform", "a_n = sum C(n,k) b_k");
    add_input(inverse);
    inverse->callback([&] { std::cout << io::format_sequence(keep_offset(inverse_binomial_transform, read_input(input))); });

    auto *reindex = app.add_subcommand("reindex", "Drop leading terms and restart the index at 0");
    add_input(reindex);
    std::size_t drop = 0;
    reindex->add_option("--drop", drop, "Number of leading terms to drop");
    reindex->callback([&] {
        auto s = read_input(input);
        if (drop > s.size()) {
            throw domain_error("--drop exceeds the sequence length");
        }
        s.terms.erase(s.terms.begin(), s.terms.begin() + static_cast<std::ptrdiff_t>(drop));
        s.offset = 0;
        std::cout << io::format_sequence(s);
    });

    auto *certify = app.add_subcommand("certify", "Certify a prefix");
    add_input(certify);
    std::string mode = "both";
    bool certify_json = false;
    certify->add_option("--mode", mode)->check(
        CLI::IsMember({"primary-direct", "primary-hall", "pseudo-hall", "both"}));
    certify->add_flag("--json", certify_json);
    certify->callback([&] {
        const auto a = read_input(input);
        if (mode == "primary-direct") {
            const auto r = certify_primary_direct(a);
            print_report(r, certify_json);
            code = verdict_code(r);
        } else if (mode == "primary-hall") {
            const auto r = certify_primary_hall(a);
            print_report(r, certify_json);
            code = verdict_code(r);
        } else if (mode == "pseudo-hall") {
            const auto r = certify_pseudo_hall(a);
            print_report(r, certify_json);
            code = verdict_code(r);
        } else {
            const auto direct = certify_primary_direct(a);
            const auto hall = certify_primary_hall(a);
            if (certify_json) {
                std::cout << json{{"direct", io::to_json(direct)}, {"hall", io::to_json(hall)}}.dump() << '\n';
            } else {
                print_report(direct, false);
                print_report(hall, false);
            }
            if (direct.certified() != hall.certified()) {
                std::cerr << "internal error: direct and Hall certifiers disagree\n";
                code = exit_disagree;
            } else {
                code = verdict_code(direct);
            }
        }
    });

    auto *detect = app.add_subcommand("detect", "Detect an eventually polynomial sequence");
    add_input(detect);
    std::size_t tail = 3;
    detect->add_option("--tail", tail, "Number of trailing zero b_n required");
    detect->callback([&] {
        const auto d = detect_polynomial(read_input(input), tail);
        json poly = json::array();
        for (const auto &[k, bk] : d.poly) {
            poly.push_back({{"k", k}, {"b", to_decimal(bk)}});
        }
        json out{{"eventually_polynomial", d.is_eventually_polynomial}};
        if (d.is_eventually_polynomial) {
            out["M"] = d.M;
            out["binomial_coefficients"] = std::move(poly);
        }
        std::cout << out.dump() << '\n';
        code = d.is_eventually_polynomial ? exit_ok : exit_refuted;
    });

    auto *growth = app.add_subcommand("growth", "Empirical log|a_n|/n");
    add_input(growth);
    growth->callback([&] {
        const auto g = growth_exponent(read_input(input));
        json out = json::object();
        out["last"] = g.last ? json(g.last->to_fixed(20)) : json(nullptr);
        out["max_last_quarter"] = g.max_last_quarter ? json(g.max_last_quarter->to_fixed(20)) : json(nullptr);
        std::cout << out.dump() << '\n';
    });

    auto *construct = app.add_subcommand("construct", "Build a genuine primary pseudo-polynomial");
    std::string phi_spec;
    std::size_t construct_n = 0;
    bool with_trace = false;
    bool construct_json = false;
    std::string emit = "A";
    construct->add_option("--phi", phi_spec)->required();
    construct->add_option("--n", construct_n)->required();
    construct->add_flag("--trace", with_trace);
    construct->add_flag("--json", construct_json);
    construct->add_option("--emit", emit, "Sequence to print: A or B")->check(CLI::IsMember({"A", "B"}));
    construct->callback([&] {
        const auto c = construct_genuine(parse_phi(phi_spec), construct_n);
        if (construct_json) {
            std::cout << io::to_json(c, with_trace).dump() << '\n';
            return;
        }
        if (with_trace) {
            std::cout << io::format_trace(c.trace);
        }
        std::cout << io::format_sequence(emit == "A" ? c.A : c.B);
    });

    auto *egf = app.add_subcommand("egf-invert", "b, c = EGF reciprocal of b, u = inverse transform of c");
    add_input(egf);
    std::optional<std::size_t> ratio_digits;
    egf->add_option("--ratios", ratio_digits, "Also print u_n/n! with this many digits");
    egf->callback([&] {
        const auto t = theorem51_u(read_input(input));
        json out = io::to_json(t);
        if (ratio_digits) {
            out["u_over_factorial"] = u_over_factorial(t.u, *ratio_digits);
        }
        std::cout << out.dump() << '\n';
    });

    auto *guess = app.add_subcommand("guess", "Guess a polynomial-coefficient recurrence");
    add_input(guess);
    GuessBudget budget;
    guess->add_option("--smax", budget.S_max);
    guess->add_option("--dmax", budget.D_max);
    guess->add_option("--margin", budget.verify_margin, "Equations held back for verification");
    guess->callback([&] {
        const auto a = read_input(input);
        const auto rec = guess_recurrence(a, budget);
        if (!rec) {
            std::cout << "none\n";
            code = exit_refuted;
            return;
        }
        std::cout << io::to_json(*rec).dump() << '\n';
        std::cerr << "verified on the prefix 0.." << a.last_index() << " only\n";
    });

    std::string rec_path;
    auto *verify = app.add_subcommand("verify", "Check a recurrence on a prefix");
    add_input(verify);
    bool verify_json = false;
    verify->add_option("--recurrence", rec_path)->required();
    verify->add_flag("--json", verify_json);
    verify->callback([&] {
        const auto rec = io::parse_recurrence(slurp(rec_path));
        const auto r = verify_recurrence(read_input(input), rec);
        print_report(r, verify_json);
        code = verdict_code(r);
    });

    auto *apply = app.add_subcommand("apply", "Extend initial terms by a recurrence");
    add_input(apply);
    std::size_t apply_n = 0;
    apply->add_option("--recurrence", rec_path)->required();
    apply->add_option("--n", apply_n, "Last index to produce")->required();
    apply->callback([&] {
        const auto rec = io::parse_recurrence(slurp(rec_path));
        std::cout << io::format_sequence(apply_recurrence(rec, read_input(input), apply_n));
    });

    auto *bounds_cmd = app.add_subcommand("bounds", "Effective degree and order bounds");
    std::string c_text;
    std::string delta_text;
    std::optional<long> precision;
    bounds_cmd->add_option("--c", c_text, "NUM/DEN")->required();
    bounds_cmd->add_option("--delta", delta_text, "NUM/DEN or exp:NUM/DEN")->required();
    bounds_cmd->add_option("--precision", precision, "Starting precision in bits");
    bounds_cmd->callback([&] {
        bounds::PrecisionCtx ctx;
        if (const char *env = std::getenv("PPP_PRECISION_BITS")) {
            ctx.bits = std::stol(env);
        }
        if (precision) {
            ctx.bits = *precision;
        }
        if (ctx.bits < MPFR_PREC_MIN || ctx.bits > ctx.max_bits) {
            throw domain_error("precision out of range");
        }
        const auto report = bounds::bounds_report(parse_rational(c_text), parse_delta(delta_text), ctx);
        std::cout << io::to_json(report).dump() << '\n';
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return code;
}
