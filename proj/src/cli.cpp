// Copyright 2026 The QECCD Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qeccd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "qeccd/channels.hpp"
#include "qeccd/errors.hpp"
#include "qeccd/estimation.hpp"
#include "qeccd/protocol.hpp"
#include "qeccd/serialization.hpp"
#include "qeccd/stabilizer_code.hpp"

namespace qeccd {

namespace {

struct Options {
    std::string code;
    std::string channel;
    std::vector<double> params;
    std::string beta;
    std::string mode = "exact";
    std::uint64_t shots = SamplingPolicy{}.shots_per_configuration;
    std::uint64_t seed = 0;
    std::string out;
    std::string format;
};

bool is_builtin(const std::vector<std::string>& names, const std::string& name) {
    return std::find(names.begin(), names.end(), name) != names.end();
}

StabilizerCode load_code(const std::string& ref) {
    if (is_builtin(builtin_code_names(), ref)) {
        return builtin_code(ref);
    }
    if (!std::filesystem::exists(ref)) {
        throw ParseError("'" + ref + "' is neither a built-in code nor a readable file");
    }
    return build_code(code_spec_from_json(read_json_file(ref)));
}

Channel load_channel(const std::string& ref, const std::vector<double>& params) {
    if (is_builtin(builtin_channel_names(), ref)) {
        return builtin_channel(ref, params);
    }
    if (!std::filesystem::exists(ref)) {
        throw ParseError("'" + ref + "' is neither a built-in channel nor a readable file");
    }
    return channel_from_json(read_json_file(ref));
}

/// Accepts a JSON list whose entries are real numbers or [re, im] pairs.
std::vector<Complex> parse_beta(const std::string& text, const StabilizerCode& code) {
    if (text.empty()) {
        return uniform_beta(code);
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("--beta is not valid JSON: ") + e.what());
    }
    if (!j.is_array()) {
        throw ParseError("--beta must be a JSON list of amplitudes");
    }
    std::vector<Complex> beta;
    for (const auto& entry : j) beta.push_back(complex_from_json(entry));
    return beta;
}

std::string fmt(double v) {
    std::ostringstream s;
    s << std::setprecision(10) << v;
    return s.str();
}

std::string fmt(Complex c) {
    std::ostringstream s;
    s << std::setprecision(6) << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i";
    return s.str();
}

void emit(const std::string& text, const Options& opt, std::ostream& out) {
    if (opt.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
        throw ParseError("cannot write '" + opt.out + "'");
    }
    file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_validate(const Options& opt, std::ostream& out) {
    StabilizerCode code = load_code(opt.code);
    const ErrorBasis& basis = code.error_basis();
    KnillLaflammeReport kl = knill_laflamme(code);
    HammingBound hb = hamming_bound(code.n(), code.k(), basis.num_local_qubits());
    const bool kl_pass = kl.residual < default_policy().knill_laflamme;
    const bool pass = kl_pass && hb.satisfied;

    if (opt.format == "json") {
        Json gens = Json::array();
        for (const auto& g : code.generators()) gens.push_back(g.str());
        Json table = Json::array();
        for (std::size_t i = 0; i < basis.size(); ++i) {
            table.push_back(Json{{"error", basis.label(i)}, {"syndrome", code.syndrome(i).str()}});
        }
        Json report{{"code", code.name()},
                    {"n", code.n()},
                    {"k", code.k()},
                    {"generators", std::move(gens)},
                    {"noisy_coords", code.noisy_coords()},
                    {"generators_commute", true},
                    {"knill_laflamme_residual", kl.residual},
                    {"knill_laflamme_pass", kl_pass},
                    {"syndrome_table", std::move(table)},
                    {"injective", true},
                    {"hamming_bound", Json{{"satisfied", hb.satisfied}, {"perfect", hb.perfect}}},
                    {"pass", pass}};
        emit(dump(report), opt, out);
    } else {
        std::ostringstream s;
        s << "code " << code.name() << " [[" << code.n() << "," << code.k() << "]], noisy qubits";
        for (auto q : code.noisy_coords()) s << ' ' << q;
        s << "\ngenerators:";
        for (const auto& g : code.generators()) s << ' ' << g.str();
        s << "\ngenerators commute: yes\n";
        s << "Knill-Laflamme residual: " << fmt(kl.residual) << (kl_pass ? " (pass)" : " (FAIL)") << "\n";
        s << "syndrome table (" << basis.size() << " entries, injective):\n";
        for (std::size_t i = 0; i < basis.size(); ++i) {
            s << "  " << basis.label(i) << "  " << code.syndrome(i).str() << "\n";
        }
        s << "Hamming bound: " << (hb.satisfied ? "satisfied" : "violated") << (hb.perfect ? ", perfect" : "")
          << "\n";
        s << "result: " << (pass ? "PASS" : "FAIL") << "\n";
        emit(s.str(), opt, out);
    }
    return pass ? kExitOk : kExitValidation;
}

int cmd_plan(const Options& opt, std::ostream& out) {
    StabilizerCode code = load_code(opt.code);
    Plan plan = plan_configurations(code);
    if (opt.format == "text") {
        std::ostringstream s;
        s << plan.configurations.size() << " configurations for " << code.name() << "\n";
        for (std::size_t c = 0; c < plan.configurations.size(); ++c) {
            const auto& cfg = plan.configurations[c];
            s << "  " << std::setw(3) << c << "  " << to_string(cfg.kind);
            if (cfg.kind != ConfigurationKind::kBare) {
                s << " (" << code.error_basis().label(cfg.a) << ", " << code.error_basis().label(cfg.b) << ")";
            }
            s << "\n";
        }
        emit(s.str(), opt, out);
    } else {
        emit(dump(plan_to_json(code, plan)), opt, out);
    }
    return kExitOk;
}

int cmd_characterize(const Options& opt, std::ostream& out) {
    StabilizerCode code = load_code(opt.code);
    Channel channel = load_channel(opt.channel, opt.params);
    check_support(code, channel);
    std::vector<Complex> beta = parse_beta(opt.beta, code);
    const bool sampled = opt.mode == "sampled";

    Plan plan = plan_configurations(code);
    std::vector<MeasurementRecord> records = simulate_plan(code, beta, channel, plan);
    if (sampled) {
        records = sample_records(records, SamplingPolicy{opt.shots, opt.seed});
    }
    Reconstruction rec = reconstruct(code, plan, records);
    ProcessMatrix oracle = chi_from_kraus(channel, code.error_basis());
    ErrorReport error = compare(rec.chi, oracle);
    const ErrorBasis& basis = code.error_basis();

    if (opt.format == "text") {
        std::ostringstream s;
        s << "code " << code.name() << ", channel " << channel.label() << ", mode " << opt.mode;
        if (sampled) s << " (" << opt.shots << " shots, seed " << opt.seed << ")";
        s << "\n" << plan.configurations.size() << " configurations\nchi:\n";
        for (std::size_t m = 0; m < basis.size(); ++m) {
            s << "  " << std::setw(static_cast<int>(basis.num_local_qubits())) << basis.label(m);
            for (std::size_t n = 0; n < basis.size(); ++n) s << "  " << fmt(rec.chi(m, n));
            s << "\n";
        }
        s << "trace " << fmt(rec.validity.trace) << ", min eigenvalue " << fmt(rec.validity.min_eigenvalue)
          << ", hermiticity defect " << fmt(rec.validity.hermiticity_defect) << "\n";
        s << "error vs oracle: frobenius " << fmt(error.frobenius_error) << ", max entry "
          << fmt(error.max_entry_error) << "\n";
        emit(s.str(), opt, out);
        return kExitOk;
    }

    Json beta_json = Json::array();
    for (auto b : beta) beta_json.push_back(complex_to_json(b));
    Json labels = Json::array();
    for (std::size_t m = 0; m < basis.size(); ++m) labels.push_back(basis.label(m));
    Json configs = Json::array();
    for (std::size_t c = 0; c < plan.configurations.size(); ++c) {
        Json entry = configuration_to_json(code, plan.configurations[c]);
        entry["index"] = c;
        entry["residual"] = rec.residuals.at(c);
        Json r = record_to_json(code, records[c]);
        entry["distribution"] = std::move(r["distribution"]);
        if (sampled) {
            entry["no_detection"] = records[c].no_detection;
        }
        configs.push_back(std::move(entry));
    }
    Json report{{"code", code.name()},
                {"channel", channel.label()},
                {"mode", opt.mode},
                {"beta", std::move(beta_json)},
                {"basis", std::move(labels)},
                {"chi", process_matrix_to_json(rec.chi)},
                {"validity", validity_to_json(rec.validity)},
                {"max_readout_spread", rec.max_readout_spread},
                {"configurations", std::move(configs)},
                {"oracle_chi", process_matrix_to_json(oracle)},
                {"error_report", error_report_to_json(error)}};
    if (sampled) {
        report["shots"] = opt.shots;
        report["seed"] = opt.seed;
    }
    emit(dump(report), opt, out);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characterize error channels from stabilizer syndrome statistics", "qeccd"};
    app.require_subcommand(1);
    Options opt;

    auto* validate = app.add_subcommand("validate", "Check a code: commutation, Knill-Laflamme, syndromes, Hamming bound");
    validate->add_option("--code", opt.code, "Built-in code (code3, code5) or JSON file")->required();
    validate->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    validate->add_option("--out", opt.out, "Write the report to this file");

    auto* plan = app.add_subcommand("plan", "Emit the measurement configurations for a code");
    plan->add_option("--code", opt.code, "Built-in code (code3, code5) or JSON file")->required();
    plan->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    plan->add_option("--out", opt.out, "Write the plan to this file");

    auto* characterize = app.add_subcommand("characterize", "Reconstruct the process matrix of a channel");
    characterize->add_option("--code", opt.code, "Built-in code (code3, code5) or JSON file")->required();
    characterize->add_option("--channel", opt.channel, "Built-in channel name or JSON file")->required();
    characterize->add_option("--params", opt.params, "Built-in channel parameters, comma separated")->delimiter(',');
    characterize->add_option("--beta", opt.beta, "Logical amplitudes as a JSON list (default: uniform)");
    characterize->add_option("--mode", opt.mode, "exact or sampled")->check(CLI::IsMember({"exact", "sampled"}));
    characterize->add_option("--shots", opt.shots, "Shots per configuration (sampled mode)")->check(CLI::PositiveNumber);
    characterize->add_option("--seed", opt.seed, "Sampling seed");
    characterize->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    characterize->add_option("--out", opt.out, "Write the report to this file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (validate->parsed()) {
            if (opt.format.empty()) opt.format = "text";
            return cmd_validate(opt, out);
        }
        if (opt.format.empty()) opt.format = "json";
        if (plan->parsed()) {
            return cmd_plan(opt, out);
        }
        return cmd_characterize(opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

}  // namespace qeccd
