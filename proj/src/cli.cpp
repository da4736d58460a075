#include "hh/cli.hpp"

#include "hh/bounds.hpp"
#include "hh/error.hpp"
#include "hh/means.hpp"
#include "hh/oracle.hpp"
#include "hh/search.hpp"
#include "hh/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <sstream>

namespace hh::cli {

namespace {

constexpr double kDefectSlack = 1e-9;
constexpr double kMeanOracleTolerance = 1e-12;

Json real(double v)
{
    if (!std::isfinite(v))
        return nullptr;
    return v;
}

Json enclosure(const Enclosure& e)
{
    return Json{{"lower", real(e.lower)}, {"upper", real(e.upper)}};
}

Json profile_json(const ConvexityProfile& p)
{
    return Json{{"f_convex", to_string(p.f_convex)},
                {"f2_shape", to_string(p.f2_shape)},
                {"min_f2", real(p.min_f2)},
                {"samples", p.samples}};
}

Json ratio_json(const RatioReport& r)
{
    return Json{{"value", r.degenerate ? Json(nullptr) : real(r.value)},
                {"numerator", real(r.numerator)},
                {"denominator", real(r.denominator)},
                {"degenerate", r.degenerate}};
}

std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

void render(const std::string& prefix, const Json& j, std::ostringstream& os)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            render(prefix.empty() ? key : prefix + "." + key, value, os);
        return;
    }
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i)
            render(prefix + "[" + std::to_string(i) + "]", j[i], os);
        return;
    }
    os << "  " << prefix << ": ";
    if (j.is_number_float())
        os << format_real(j.get<double>());
    else if (j.is_string())
        os << j.get<std::string>();
    else
        os << j.dump();
    os << '\n';
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

struct EncloseArgs
{
    std::string f;
    double a = 0.0;
    double b = 0.0;
    std::string method = "classic";
    double tol = 1e-8;
};

Report enclose(const EncloseArgs& args)
{
    Report r;
    r.command = "enclose";
    r.inputs = {{"f", args.f}, {"a", args.a}, {"b", args.b}, {"method", args.method}, {"tol", args.tol}};

    const Expression f = Expression::parse(args.f);
    const Interval iv(args.a, args.b);
    const ConvexityProfile prof = convexity_profile(f, iv);

    Enclosure e;
    if (args.method == "classic") {
        e = classic_hh(f, iv);
        r.citations = {"hermite-hadamard"};
    } else if (args.method == "n14") {
        e = {classic_hh(f, iv).lower, theorem1_upper(f, iv)};
        r.citations = {"hermite-hadamard (lower)", "n14-upper"};
    } else if (args.method == "simpson") {
        const SimpsonEstimate s = simpson_estimate(f, iv);
        e = {s.estimate - s.err_bound, s.estimate + s.err_bound};
        r.outputs["simpson_estimate"] = real(s.estimate);
        r.outputs["err_bound"] = real(s.err_bound);
        r.citations = {"simpson-error"};
    } else {
        e = adaptive_enclosure(f, iv, args.tol, prof);
        r.citations = {"hermite-hadamard (lower)", "n14-upper", "self-improving bisection"};
    }

    const double mean = integrate_mean(f, iv, kMeanOracleTolerance).value;
    r.outputs["lower"] = real(e.lower);
    r.outputs["upper"] = real(e.upper);
    r.outputs["width"] = real(e.width());
    r.outputs["oracle_mean"] = real(mean);
    r.outputs["contains_oracle_mean"] = e.contains(mean, 1e-10);
    r.outputs["certified"] = args.method == "simpson" || prof.f_convex == Convexity::yes;
    r.outputs["profile"] = profile_json(prof);
    return r;
}

struct DefectArgs
{
    std::string f;
    double a = 0.0;
    double b = 0.0;
    int theorem = 2;
};

Report defect(const DefectArgs& args)
{
    Report r;
    r.command = "defect";
    r.inputs = {{"f", args.f}, {"a", args.a}, {"b", args.b}, {"theorem", args.theorem}};

    const Expression f = Expression::parse(args.f);
    const Interval iv(args.a, args.b);
    const ConvexityProfile prof = convexity_profile(f, iv);
    const DefectSandwich s = args.theorem == 2 ? theorem2_defect_sandwich(f, iv, prof)
                                               : theorem4_defect_sandwich(f, iv, prof);
    const double mean = integrate_mean(f, iv, kMeanOracleTolerance).value;
    const double oracle_defect =
        s.orientation == DefectOrientation::bound_minus_mean ? s.bound - mean : mean - s.bound;
    const bool contained = s.defect.contains(oracle_defect, kDefectSlack);

    r.citations = {args.theorem == 2 ? "n14-defect-sandwich" : "simpson-defect-sandwich"};
    r.outputs["bound"] = real(s.bound);
    r.outputs["orientation"] =
        s.orientation == DefectOrientation::bound_minus_mean ? "bound-minus-mean" : "mean-minus-bound";
    r.outputs["defect"] = enclosure(s.defect);
    r.outputs["mean_enclosure"] = enclosure(s.mean_enclosure());
    r.outputs["oracle_defect"] = real(oracle_defect);
    r.outputs["contained"] = contained;
    r.outputs["profile"] = profile_json(prof);
    r.status = contained ? "ok" : "verification_failed";
    return r;
}

struct MeansArgs
{
    double a = 0.0;
    double b = 0.0;
    std::string enclose;
    bool printed_constant = false;
};

Report means(const MeansArgs& args)
{
    Report r;
    r.command = "means";
    r.inputs = {{"a", args.a}, {"b", args.b}};
    if (!args.enclose.empty())
        r.inputs["enclose"] = args.enclose;
    if (args.printed_constant)
        r.inputs["printed_constant"] = true;

    const MeanSet m = all_means(args.a, args.b);
    r.outputs["H"] = real(m.H);
    r.outputs["G"] = real(m.G);
    r.outputs["L"] = real(m.L);
    r.outputs["I"] = real(m.I);
    r.outputs["A"] = real(m.A);
    r.outputs["S"] = real(m.S);
    r.citations = {"elementary-means"};
    if (args.enclose.empty())
        return r;

    Enclosure e;
    double target = 0.0;
    if (args.enclose == "L") {
        e = theorem5_L_enclosure(args.a, args.b);
        target = m.L;
        r.citations.push_back("logmean-bounds");
    } else if (args.enclose == "recipL") {
        e = theorem5_recipL_enclosure(args.a, args.b);
        target = reciprocal_log_defect(args.a, args.b);
        r.citations.push_back("recip-logmean-bounds");
    } else if (args.enclose == "I") {
        e = theorem6_I_enclosure(args.a, args.b, args.printed_constant);
        target = m.I;
        r.outputs["exponent"] = real(args.printed_constant ? theorem6_printed_exponent(args.a, args.b)
                                                           : theorem6_exponent(args.a, args.b));
        r.citations.push_back(args.printed_constant ? "identric-bounds (printed exponent)"
                                                    : "identric-bounds");
    } else {
        e = theorem6_Isq_enclosure(args.a, args.b);
        target = all_means(args.a * args.a, args.b * args.b).I;
        r.citations.push_back("identric-square-bounds");
    }
    const bool contained = e.contains(target, 1e-12 * std::abs(target));
    r.outputs["enclosure"] = enclosure(e);
    r.outputs["target"] = real(target);
    r.outputs["contained"] = contained;
    r.status = contained ? "ok" : "verification_failed";
    return r;
}

Report ratio(const std::string& text, double a, double b)
{
    Report r;
    r.command = "ratio";
    r.inputs = {{"f", text}, {"a", a}, {"b", b}};
    const RatioReport rr = f_ratio(Expression::parse(text), Interval(a, b));
    r.outputs = ratio_json(rr);
    r.citations = {"endpoint-weight-ratio"};
    return r;
}

Report search_alpha(const std::string& family_name, std::size_t budget, std::uint64_t seed)
{
    Report r;
    r.command = "search-alpha";
    r.inputs = {{"family", family_name}, {"budget", budget}, {"seed", seed}};
    const std::optional<Family> family = parse_family(family_name);
    if (!family)
        throw InvalidArgument("unknown family '" + family_name + "'");

    const SearchResult s = alpha_star_search(*family, budget, seed);
    const FamilyBox box = family_box(*family);
    Json witness = Json::object();
    for (std::size_t i = 0; i < s.witness.size(); ++i)
        witness[box.names[i]] = real(s.witness[i]);

    r.outputs["best_ratio"] = real(s.best_ratio);
    r.outputs["witness"] = witness;
    r.outputs["witness_expression"] = s.witness_expression;
    r.outputs["evaluations"] = s.evaluations;
    r.outputs["feasible"] = s.feasible;
    r.outputs["seed"] = s.seed;
    r.citations = {"endpoint-weight-ratio", "n14-upper (cap 1/4)"};
    return r;
}

Report verify(const std::string& suite_name, std::size_t samples, std::uint64_t seed, bool printed)
{
    Report r;
    r.command = "verify";
    r.inputs = {{"suite", suite_name}, {"samples", samples}, {"seed", seed}};
    if (printed)
        r.inputs["printed_constant"] = true;
    const std::optional<Suite> suite = parse_suite(suite_name);
    if (!suite)
        throw InvalidArgument("unknown suite '" + suite_name + "'");

    VerifyOptions options;
    options.suite = *suite;
    options.samples = samples;
    options.seed = seed;
    options.printed_constant = printed;

    bool ok = true;
    Json properties = Json::array();
    for (const PropertyOutcome& p : run_verification(options)) {
        ok = ok && p.failed == 0;
        Json entry = {{"name", p.name},        {"checked", p.checked},
                      {"passed", p.checked - p.failed}, {"failed", p.failed},
                      {"worst", real(p.worst)}};
        if (p.failed != 0)
            entry["first_failure"] = p.first_failure;
        properties.push_back(entry);
        r.citations.push_back(p.name + ": " + p.citation);
    }
    r.outputs["properties"] = properties;
    r.outputs["all_passed"] = ok;
    r.status = ok ? "ok" : "verification_failed";
    return r;
}

void emit(const Report& report, bool json, std::ostream& out)
{
    if (json)
        out << to_json(report).dump(2) << '\n';
    else
        out << to_table(report);
}

} // namespace

Json to_json(const Report& report)
{
    return Json{{"command", report.command},
                {"inputs", report.inputs},
                {"outputs", report.outputs},
                {"citations", report.citations},
                {"status", report.status}};
}

Report report_from_json(const Json& j)
{
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.outputs = j.at("outputs");
    r.citations = j.at("citations").get<std::vector<std::string>>();
    r.status = j.at("status").get<std::string>();
    return r;
}

std::string to_table(const Report& report)
{
    std::ostringstream os;
    os << "command: " << report.command << '\n';
    os << "status: " << report.status << '\n';
    os << "inputs:\n";
    render("", report.inputs, os);
    os << "outputs:\n";
    render("", report.outputs, os);
    if (!report.citations.empty()) {
        os << "citations:\n";
        for (const auto& c : report.citations)
            os << "  " << c << '\n';
    }
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Certified Hermite-Hadamard enclosures, special means and ratio search", "hhb"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    bool json = false;
    app.add_flag("--json", json, "Emit the JSON report instead of a table");

    EncloseArgs enc;
    auto* enclose_cmd = app.add_subcommand("enclose", "Enclose the mean value of f over [a, b]");
    enclose_cmd->add_option("--f", enc.f, "Integrand expression in x")->required();
    enclose_cmd->add_option("--a", enc.a, "Left endpoint")->required();
    enclose_cmd->add_option("--b", enc.b, "Right endpoint")->required();
    enclose_cmd->add_option("--method", enc.method, "classic | n14 | simpson | adaptive")
        ->check(CLI::IsMember({"classic", "n14", "simpson", "adaptive"}));
    enclose_cmd->add_option("--tol", enc.tol, "Target width for --method adaptive");

    DefectArgs def;
    auto* defect_cmd = app.add_subcommand("defect", "Defect sandwich with oracle check");
    defect_cmd->add_option("--f", def.f, "Integrand expression in x")->required();
    defect_cmd->add_option("--a", def.a, "Left endpoint")->required();
    defect_cmd->add_option("--b", def.b, "Right endpoint")->required();
    defect_cmd->add_option("--theorem", def.theorem, "2 (N(1/4,1/2) defect) or 4 (Simpson defect)")
        ->required()
        ->check(CLI::IsMember({2, 4}));

    MeansArgs mea;
    auto* means_cmd = app.add_subcommand("means", "Elementary means and their enclosures");
    means_cmd->add_option("--a", mea.a, "First argument (> 0)")->required();
    means_cmd->add_option("--b", mea.b, "Second argument (> 0)")->required();
    means_cmd->add_option("--enclose", mea.enclose, "L | I | Isq | recipL")
        ->check(CLI::IsMember({"L", "I", "Isq", "recipL"}));
    means_cmd->add_flag("--printed-constant", mea.printed_constant,
                        "Use the quarter-size exponent in the identric upper bound");

    std::string ratio_f;
    double ratio_a = 0.0;
    double ratio_b = 0.0;
    auto* ratio_cmd = app.add_subcommand("ratio", "Endpoint-weight ratio F_f(a, b)");
    ratio_cmd->add_option("--f", ratio_f, "Integrand expression in x")->required();
    ratio_cmd->add_option("--a", ratio_a, "Left endpoint")->required();
    ratio_cmd->add_option("--b", ratio_b, "Right endpoint")->required();

    std::string family;
    std::size_t budget = 0;
    std::uint64_t search_seed = 0;
    auto* search_cmd = app.add_subcommand("search-alpha", "Maximize F over a convex family on [0, 1]");
    search_cmd->add_option("--family", family, "power | power-combo | smoothed-tent")->required();
    search_cmd->add_option("--budget", budget, "Candidate evaluations (>= 100)")->required();
    search_cmd->add_option("--seed", search_seed, "Grid jitter seed")->required();

    std::string suite;
    std::size_t samples = 200;
    std::uint64_t verify_seed = 1;
    bool verify_printed = false;
    auto* verify_cmd = app.add_subcommand("verify", "Randomized property suites");
    verify_cmd->add_option("--suite", suite, "identities | inequalities | means | all")->required();
    verify_cmd->add_option("--samples", samples, "Cases per property");
    verify_cmd->add_option("--seed", verify_seed, "Random seed");
    verify_cmd->add_flag("--printed-constant", verify_printed,
                         "Check the identric bound with the quarter-size exponent");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    Report report;
    try {
        if (*enclose_cmd)
            report = enclose(enc);
        else if (*defect_cmd)
            report = defect(def);
        else if (*means_cmd)
            report = means(mea);
        else if (*ratio_cmd)
            report = ratio(ratio_f, ratio_a, ratio_b);
        else if (*search_cmd)
            report = search_alpha(family, budget, search_seed);
        else
            report = verify(suite, samples, verify_seed, verify_printed);
    } catch (const Error& e) {
        const CLI::App* sub = app.get_subcommands().front();
        report.command = sub->get_name();
        report.status = "error";
        report.outputs = {{"error", e.what()}};
        if (json)
            emit(report, true, out);
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    emit(report, json, out);
    return report.status == "ok" ? kExitOk : kExitVerificationFailed;
}

} // namespace hh::cli
