// Command-line front end: transforms, inversions, convolutions, operator
// simulation and the verification suites, all over exact rationals.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cfree/json_io.hpp"
#include "cfree/verify.hpp"

namespace {

using namespace cfree;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

// Safety cap on truncation ranks, settable via CFREE_MAX_RANK.
std::size_t max_rank_cap()
{
    if (const char* env = std::getenv("CFREE_MAX_RANK")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) {
            return static_cast<std::size_t>(v);
        }
    }
    return 64;
}

std::size_t capped_rank(std::size_t requested)
{
    const std::size_t cap = max_rank_cap();
    if (requested > cap) {
        throw domain_error("requested truncation rank " + std::to_string(requested)
                           + " exceeds CFREE_MAX_RANK cap " + std::to_string(cap));
    }
    return requested;
}

json load_json(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw domain_error("cannot open file '" + path + "'");
    }
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw domain_error("malformed JSON in '" + path + "': " + e.what());
    }
    return j;
}

std::string law_to_csv(const TwoStateLaw& law)
{
    std::ostringstream out;
    out << "n,psi,phi\n";
    for (std::size_t n = 1; n <= law.order(); ++n) {
        out << n << "," << to_string(law.psi_moment(n)) << ","
            << to_string(law.phi_moment(n)) << "\n";
    }
    return out.str();
}

std::string series_to_csv(const TruncatedSeries& s)
{
    std::ostringstream out;
    out << "k,coeff\n";
    for (std::size_t k = 0; k <= s.order(); ++k) {
        out << k << "," << to_string(s[k]) << "\n";
    }
    return out.str();
}

std::string moments_to_csv(const std::vector<Scalar>& m)
{
    std::ostringstream out;
    out << "n,moment\n";
    for (std::size_t n = 1; n <= m.size(); ++n) {
        out << n << "," << to_string(m[n - 1]) << "\n";
    }
    return out.str();
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << "\n";
        }
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw domain_error("cannot write file '" + out_path + "'");
    }
    out << text;
    if (!text.empty() && text.back() != '\n') {
        out << "\n";
    }
}

// Accepts {"order","psi","phi"}, {"order","coeffs"} or a bare array as a
// moment sequence; for a law the psi side is taken.
std::vector<Scalar> load_moments(const std::string& path)
{
    const json j = load_json(path);
    if (j.is_array()) {
        return scalars_from_json(j, "moments");
    }
    if (j.is_object() && j.contains("psi")) {
        return scalars_from_json(j.at("psi"), "psi moments");
    }
    if (j.is_object() && j.contains("coeffs")) {
        return scalars_from_json(j.at("coeffs"), "moments");
    }
    throw domain_error("'" + path + "': expected a moment array, a law, or a series");
}

struct Options {
    std::string kind;
    std::string law_path;
    std::string series_path;
    std::string psi_path;
    std::string x_path;
    std::string y_path;
    std::string op_path;
    std::string out_path;
    std::string path_choice = "all";
    std::string suite;
    std::string format = "json";
    std::size_t order = 6;
    std::size_t lh = 8;
    std::size_t lk = 8;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
};

int run_transform(const Options& opt)
{
    const auto kind = transform_kind_from_name(opt.kind);
    if (!kind) {
        throw domain_error("unknown transform kind '" + opt.kind + "'");
    }
    TwoStateLaw law = law_from_json(load_json(opt.law_path));
    if (law.order() < opt.order) {
        throw domain_error("law provides " + std::to_string(law.order())
                           + " moments, need " + std::to_string(opt.order));
    }
    const TruncatedSeries s = transform_from_moments(*kind, law.truncated(opt.order));
    emit(opt.format == "csv" ? series_to_csv(s) : series_to_json(s).dump(), opt.out_path);
    return kExitPass;
}

int run_invert(const Options& opt)
{
    const auto kind = transform_kind_from_name(opt.kind);
    if (!kind
        || (*kind != TransformKind::R && *kind != TransformKind::T
            && *kind != TransformKind::cR && *kind != TransformKind::cT)) {
        throw domain_error("invert supports kinds R, T, cR, cT");
    }
    const TruncatedSeries s = series_from_json(load_json(opt.series_path));
    std::vector<Scalar> psi;
    if (*kind == TransformKind::cR || *kind == TransformKind::cT) {
        if (opt.psi_path.empty()) {
            throw domain_error("inverting " + opt.kind + " requires --psi");
        }
        psi = load_moments(opt.psi_path);
        if (psi.size() < opt.order) {
            throw domain_error("--psi provides " + std::to_string(psi.size())
                               + " moments, need " + std::to_string(opt.order));
        }
        psi.resize(opt.order);
    }
    // R at order N and T at order N-1 both determine N moments.
    const std::size_t window =
        (*kind == TransformKind::T) ? opt.order - 1 : opt.order;
    if (s.order() < window) {
        throw domain_error("series order " + std::to_string(s.order())
                           + " too low for N=" + std::to_string(opt.order));
    }
    const std::vector<Scalar> moments =
        moments_from_transform(*kind, s.truncated(window), psi);
    if (opt.format == "csv") {
        emit(moments_to_csv(moments), opt.out_path);
    } else {
        emit(json{{"order", moments.size()}, {"moments", scalars_to_json(moments)}}.dump(),
             opt.out_path);
    }
    return kExitPass;
}

int run_convolve(const Options& opt)
{
    const ConvolutionKind kind = [&] {
        if (opt.kind == "add") return ConvolutionKind::Add;
        if (opt.kind == "mul") return ConvolutionKind::Mul;
        throw domain_error("unknown convolution kind '" + opt.kind + "'");
    }();
    const TwoStateLaw x = law_from_json(load_json(opt.x_path));
    const TwoStateLaw y = law_from_json(load_json(opt.y_path));

    if (opt.path_choice == "all") {
        const CrossCheckReport report = cross_check(kind, x, y, opt.order);
        emit(cross_check_report_to_json(report).dump(), opt.out_path);
        if (report.precondition_failure) {
            return kExitUsage;
        }
        return report.agree ? kExitPass : kExitVerifyFail;
    }

    TwoStateLaw out = TwoStateLaw::zero(0);
    if (opt.path_choice == "transform") {
        out = cfree_convolve(kind, x, y, opt.order);
    } else if (opt.path_choice == "axiomatic") {
        out = convolve_axiomatic(kind, x, y, opt.order);
    } else if (opt.path_choice == "operator") {
        const EOpPtr op_x = realize_law(kind, x, 0, 0, opt.order);
        const EOpPtr op_y = realize_law(kind, y, 1, 1, opt.order);
        const EOpPtr combined = kind == ConvolutionKind::Add ? op_x + op_y : op_x * op_y;
        const std::size_t lh = capped_rank(
            opt.order * std::max<std::size_t>(1, h_rank_increase(combined)) + 1);
        const std::size_t lk = capped_rank(
            opt.order * std::max<std::size_t>(1, k_rank_increase(combined)) + 1);
        out = state_pair_moments(combined, opt.order, lh, lk);
    } else {
        throw domain_error("unknown path '" + opt.path_choice + "'");
    }
    emit(opt.format == "csv" ? law_to_csv(out) : law_to_json(out).dump(), opt.out_path);
    return kExitPass;
}

int run_simulate(const Options& opt)
{
    const EOpPtr op = e_op_from_json(load_json(opt.op_path));
    if (opt.lh < opt.order || opt.lk < opt.order) {
        throw domain_error("truncation ranks must be at least N");
    }
    const TwoStateLaw law =
        state_pair_moments(op, opt.order, capped_rank(opt.lh), capped_rank(opt.lk));
    emit(opt.format == "csv" ? law_to_csv(law) : law_to_json(law).dump(), opt.out_path);
    return kExitPass;
}

int run_verify(const Options& opt)
{
    const VerifyReport report =
        run_verify_suite(opt.suite, opt.trials, opt.seed, opt.order);
    json j{{"suite", report.suite},
           {"pass", report.pass},
           {"checks", report.checks}};
    if (!report.pass) {
        j["detail"] = report.detail;
    }
    emit(j.dump(), opt.out_path);
    return report.pass ? kExitPass : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Exact c-free transform calculus and its operator models"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("-N,--order", opt.order, "truncation order")->capture_default_str();
        cmd->add_option("-o,--output", opt.out_path, "output file (default stdout)");
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    CLI::App* transform = app.add_subcommand("transform", "law -> transform series");
    transform->add_option("--kind", opt.kind, "R|T|S|cR|cT|cS")->required();
    transform->add_option("--law", opt.law_path, "law JSON file")->required();
    add_common(transform);

    CLI::App* invert = app.add_subcommand("invert", "transform series -> moments");
    invert->add_option("--kind", opt.kind, "R|T|cR|cT")->required();
    invert->add_option("--series", opt.series_path, "series JSON file")->required();
    invert->add_option("--psi", opt.psi_path, "psi-moment file (required for cR/cT)");
    add_common(invert);

    CLI::App* convolve = app.add_subcommand("convolve", "two laws -> convolved law");
    convolve->add_option("--kind", opt.kind, "add|mul")->required();
    convolve->add_option("--x", opt.x_path, "first law JSON file")->required();
    convolve->add_option("--y", opt.y_path, "second law JSON file")->required();
    convolve->add_option("--path", opt.path_choice, "transform|axiomatic|operator|all")
        ->check(CLI::IsMember({"transform", "axiomatic", "operator", "all"}))
        ->capture_default_str();
    add_common(convolve);

    CLI::App* simulate = app.add_subcommand("simulate", "operator JSON -> state-pair law");
    simulate->add_option("--op", opt.op_path, "operator expression JSON file")->required();
    simulate->add_option("--lh", opt.lh, "H truncation rank")->capture_default_str();
    simulate->add_option("--lk", opt.lk, "K truncation rank")->capture_default_str();
    add_common(simulate);

    CLI::App* verify = app.add_subcommand("verify", "run a seeded verification suite");
    verify->add_option("--suite", opt.suite,
                       "remark1|lemma1|eqiii|crthm|ct|algcfree|mainthm-add|"
                       "mainthm-mul|crosscheck|collapse")
        ->required();
    verify->add_option("--trials", opt.trials, "number of trials")->capture_default_str();
    verify->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e); // --help
        }
        std::cerr << json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(transform)) return run_transform(opt);
        if (app.got_subcommand(invert)) return run_invert(opt);
        if (app.got_subcommand(convolve)) return run_convolve(opt);
        if (app.got_subcommand(simulate)) return run_simulate(opt);
        if (app.got_subcommand(verify)) return run_verify(opt);
        std::cerr << json{{"error", "usage"}, {"message", "missing subcommand"}}.dump()
                  << "\n";
        return kExitUsage;
    } catch (const domain_error& e) {
        std::cerr << json{{"error", "domain"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    } catch (const truncation_error& e) {
        std::cerr << json{{"error", "truncation"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return kExitUsage;
    }
}
