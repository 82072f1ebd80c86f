// Command-line interface for exact-arithmetic computations on Siegel domains
// of the second kind.
//
//   siegel dims   --spec FILE [--json]            graded component dimensions
//   siegel cone   --name NAME                     cone algebra dimension + basis
//   siegel lemma  --id ID [--params FILE]         one named spot check
//   siegel verify --target T [--format json|md]   classification verification
//
// Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage
// errors (bad flags, unreadable files, malformed specs, unknown names).

#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <siegel/domain_spec.hpp>
#include <siegel/report.hpp>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

// Thrown by handlers for problems with the invocation or its input files, as
// opposed to checks that ran and failed.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format_matrix(const siegel::MatR& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) out += ", ";
        out += "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += siegel::to_string(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

int run_dims(const std::string& spec_path, bool as_json) {
    siegel::SiegelDomainSpec spec;
    try {
        spec = siegel::parse_domain_spec(read_file(spec_path));
    } catch (const siegel::DomainSpecError& e) {
        throw UsageError(spec_path + ": " + e.what());
    }
    const auto gd = siegel::graded_dims(spec);
    if (as_json) {
        nlohmann::json j{{"n", spec.n},          {"k", spec.k},       {"cone", siegel::cone_name(spec.cone)},
                         {"g_m1", gd.g_m1},      {"g_mhalf", gd.g_mhalf}, {"g_0", gd.g_0},
                         {"g_half", gd.g_half},  {"g_1", gd.g_1},     {"d", gd.d}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "domain: n = " << spec.n << ", k = " << spec.k << ", m = " << spec.m()
                  << ", cone = " << siegel::cone_name(spec.cone) << "\n"
                  << "g_{-1}   = " << gd.g_m1 << "\n"
                  << "g_{-1/2} = " << gd.g_mhalf << "\n"
                  << "g_0      = " << gd.g_0 << "\n"
                  << "g_{1/2}  = " << gd.g_half << "\n"
                  << "g_1      = " << gd.g_1 << "\n"
                  << "d        = " << gd.d << "\n";
    }
    return kExitPass;
}

int run_cone(const std::string& name) {
    siegel::ConeSpec cone;
    try {
        cone = siegel::parse_cone_name(name);
    } catch (const siegel::ConeNameError& e) {
        throw UsageError(e.what());
    }
    const auto alg = siegel::lie_algebra_basis(cone);
    std::cout << "cone: " << siegel::cone_name(cone) << " (ambient dimension " << cone.ambient_dim() << ")\n"
              << "dim g(Omega) = " << alg.basis.size() << "\n"
              << "basis:\n";
    for (std::size_t i = 0; i < alg.basis.size(); ++i)
        std::cout << "  g[" << i << "] = " << format_matrix(alg.basis[i]) << "\n";
    return kExitPass;
}

siegel::ObstructionParams parse_lemma_params(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("params: malformed JSON: ") + e.what());
    }
    try {
        const auto& a2 = siegel::detail::spec_field(j, "a2");
        const auto& v = siegel::detail::spec_field(j, "v");
        if (!a2.is_array() || a2.size() != 2 || !v.is_array() || v.size() != 3)
            throw UsageError("params: expected {\"a2\": [re, im], \"v\": [v1, v2, v3]}");
        siegel::ObstructionParams p;
        p.a2 = {siegel::detail::spec_rational(a2[0]), siegel::detail::spec_rational(a2[1])};
        for (std::size_t i = 0; i < 3; ++i) p.v[i] = siegel::detail::spec_rational(v[i]);
        return p;
    } catch (const siegel::DomainSpecError& e) {
        throw UsageError(std::string("params: ") + e.what());
    }
}

int run_lemma_command(const std::string& id, const std::string& params_path) {
    siegel::LemmaCheck check;
    try {
        check = params_path.empty() ? siegel::run_lemma(id)
                                    : siegel::run_lemma_at(id, parse_lemma_params(read_file(params_path)));
    } catch (const std::invalid_argument& e) {
        std::string msg = e.what();
        msg += "; available ids:";
        for (const auto& known : siegel::lemma_ids()) msg += " " + known;
        throw UsageError(msg);
    }
    std::cout << check.id << ": " << (check.pass ? "pass" : "fail") << " — " << check.detail << "\n";
    return check.pass ? kExitPass : kExitCheckFailed;
}

std::size_t ncap_from_env() {
    const char* env = std::getenv("SIEGEL_NCAP");
    if (env == nullptr || *env == '\0') return 64;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v < 6)
        throw UsageError(std::string("SIEGEL_NCAP must be an integer >= 6, got '") + env + "'");
    return static_cast<std::size_t>(v);
}

siegel::Report theorem_report(int theorem, std::size_t ncap) {
    std::vector<siegel::CaseRecord> records;
    const std::string prefix = "T" + std::to_string(theorem) + "-";
    for (const auto& id : siegel::all_case_ids())
        if (id.compare(0, prefix.size(), prefix) == 0) records.push_back(siegel::run_case(id, ncap));
    auto report = siegel::report_from_cases(records);
    report.items.push_back(siegel::exclusion_info_item(theorem, ncap));
    return siegel::make_report(std::move(report.items));
}

int run_verify(const std::string& target, const std::string& format) {
    const std::size_t ncap = ncap_from_env();
    siegel::Report report;
    if (target == "table") {
        report = siegel::report_from_classification(siegel::verify_classification());
    } else if (target == "n2-7") {
        report = theorem_report(1, ncap);
    } else if (target == "n2-8") {
        report = theorem_report(2, ncap);
    } else if (target == "all") {
        report = siegel::merge_reports({siegel::report_from_classification(siegel::verify_classification()),
                                        siegel::report_from_lemmas(siegel::verify_lemma_suite()),
                                        theorem_report(1, ncap), theorem_report(2, ncap)});
    } else {
        throw UsageError("unknown verify target '" + target + "' (expected n2-7, n2-8, table, or all)");
    }

    if (format == "json")
        std::cout << siegel::emit_report_json(report) << "\n";
    else if (format == "md")
        std::cout << siegel::emit_report_markdown(report);
    else
        std::cout << siegel::emit_report_lines(report);
    return report.all_pass() ? kExitPass : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact dimension computations for Siegel domains of the second kind"};
    app.require_subcommand(1);

    std::string spec_path;
    bool dims_json = false;
    auto* dims = app.add_subcommand("dims", "Graded automorphism-algebra dimensions of a domain spec");
    dims->add_option("--spec", spec_path, "Path to a domain-spec JSON file")->required();
    dims->add_flag("--json", dims_json, "Emit the dimensions as JSON");

    std::string cone_name_arg;
    auto* cone = app.add_subcommand("cone", "Linear automorphism algebra of a catalog cone");
    cone->add_option("--name", cone_name_arg, "Cone name, e.g. lorentz:5 or product:[lorentz:3,orthant:1]")
        ->required();

    std::string lemma_id, lemma_params_path;
    auto* lemma = app.add_subcommand("lemma", "Run one named computational spot check");
    lemma->add_option("--id", lemma_id, "Check id; see error output for the list")->required();
    lemma->add_option("--params", lemma_params_path, "JSON file {\"a2\": [re, im], \"v\": [v1, v2, v3]}");

    std::string verify_target, verify_format;
    auto* verify = app.add_subcommand("verify", "Re-run the classification verification");
    verify->add_option("--target", verify_target, "n2-7, n2-8, table, or all")->required();
    verify->add_option("--format", verify_format, "json or md (default: one line per item)")
        ->check(CLI::IsMember({"json", "md"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // help/version exit 0, any parse error is a usage error
    }

    try {
        if (dims->parsed()) return run_dims(spec_path, dims_json);
        if (cone->parsed()) return run_cone(cone_name_arg);
        if (lemma->parsed()) return run_lemma_command(lemma_id, lemma_params_path);
        return run_verify(verify_target, verify_format);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
