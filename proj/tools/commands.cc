// Copyright 2026 The bellscope Authors
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

#include "commands.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include "CLI11.hpp"
#include "bellscope/chsh.h"
#include "bellscope/hvm.h"
#include "bellscope/io.h"
#include "bellscope/projection.h"
#include "bellscope/quantum.h"
#include "bellscope/rotation_model.h"

namespace bellscope::cli {

namespace {

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Output {
    std::string format = "plain";
    std::string path;
};

void add_output_options(CLI::App *cmd, Output &o, const std::vector<std::string> &formats) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats))->capture_default_str();
    cmd->add_option("--out", o.path, "Write the report to this file instead of stdout");
}

double parse_number(std::string_view text, const std::string &flag) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
    }
    while (!text.empty() && text.back() == ' ') {
        text.remove_suffix(1);
    }
    double x = 0.0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    if (ec != std::errc() || end != text.data() + text.size() || !std::isfinite(x)) {
        throw UsageError(flag + ": '" + std::string(text) + "' is not a finite number");
    }
    return x;
}

/// "30" is an angle in degrees in the x-y plane; "x,y,z" is a direction,
/// renormalized to unit length.
UnitVector3 parse_setting(const std::string &text, const std::string &flag) {
    if (text.find(',') == std::string::npos) {
        return UnitVector3::from_angle_deg(parse_number(text, flag));
    }
    std::vector<double> parts;
    std::string_view rest(text);
    for (;;) {
        auto comma = rest.find(',');
        parts.push_back(parse_number(rest.substr(0, comma), flag));
        if (comma == std::string_view::npos) {
            break;
        }
        rest.remove_prefix(comma + 1);
    }
    if (parts.size() != 3) {
        throw UsageError(flag + ": a vector needs exactly three components");
    }
    Vector3 v{parts[0], parts[1], parts[2]};
    if (norm(v) < 1e-12) {
        throw UsageError(flag + ": direction must be nonzero");
    }
    return UnitVector3::normalize(v);
}

/// Fixed 12 decimals with trailing zeros removed; negative zero prints as 0.
std::string num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", x);
    std::string s(buf);
    while (s.back() == '0') {
        s.pop_back();
    }
    if (s.back() == '.') {
        s.pop_back();
    }
    if (s == "-0") {
        s = "0";
    }
    return s;
}

std::string vec_text(const Vector3 &v) { return "(" + num(v.x) + ", " + num(v.y) + ", " + num(v.z) + ")"; }

std::string signed_outcome(Outcome o) { return o == Outcome::up ? "+1" : "-1"; }

void emit(const Output &o, const std::string &text, std::ostream &out) {
    if (o.path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw UsageError("cannot open '" + o.path + "' for writing");
    }
    file << text;
    file.flush();
    if (!file) {
        throw UsageError("failed writing '" + o.path + "'");
    }
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- qm

struct QmArgs {
    std::string a;
    std::string b;
    Output output;
};

std::string run_qm(const QmArgs &args) {
    auto a = parse_setting(args.a, "--a");
    auto b = parse_setting(args.b, "--b");
    double ea = qm_single_expectation(Side::alice, a);
    double eb = qm_single_expectation(Side::bob, b);
    double eab = qm_product_expectation(a, b);

    std::ostringstream s;
    if (args.output.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "qm";
        j["a"] = to_json(a.vec());
        j["b"] = to_json(b.vec());
        j["e_a"] = ea;
        j["e_b"] = eb;
        j["e_ab"] = eab;
        s << dump(j);
    } else if (args.output.format == "csv") {
        s << "a_x,a_y,a_z,b_x,b_y,b_z,e_a,e_b,e_ab\n";
        s << num(a[0]) << ',' << num(a[1]) << ',' << num(a[2]) << ',' << num(b[0]) << ',' << num(b[1]) << ','
          << num(b[2]) << ',' << num(ea) << ',' << num(eb) << ',' << num(eab) << '\n';
    } else {
        s << "a      " << vec_text(a) << "\n";
        s << "b      " << vec_text(b) << "\n";
        s << "E(A)   " << num(ea) << "\n";
        s << "E(B)   " << num(eb) << "\n";
        s << "E(AB)  " << num(eab) << "\n";
    }
    return s.str();
}

// ---------------------------------------------------------------- rotation

std::string run_rotation(const QmArgs &args) {
    auto a = parse_setting(args.a, "--a");
    auto b = parse_setting(args.b, "--b");
    RotationTensorModel model;
    auto g = rotation_tensor_ghvm(model);
    double pre = model.tensor_product_expectation(a, b);
    double post = projected_product_expectation(g, a, b);
    double quantum = qm_product_expectation(a, b);

    std::ostringstream s;
    if (args.output.format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "rotation";
        j["a"] = to_json(a.vec());
        j["b"] = to_json(b.vec());
        j["pre_projection"] = pre;
        Json rows = Json::array();
        for (auto state : RotationTensorModel::states()) {
            Json row;
            row["state"] = describe(state);
            row["a"] = value(g.projected(Side::alice, a, state));
            row["b"] = value(g.projected(Side::bob, b, state));
            rows.push_back(row);
        }
        j["projected_outcomes"] = rows;
        j["post_projection"] = post;
        j["quantum"] = quantum;
        s << dump(j);
    } else if (args.output.format == "csv") {
        s << "a_x,a_y,a_z,b_x,b_y,b_z,pre_projection,post_projection,quantum\n";
        s << num(a[0]) << ',' << num(a[1]) << ',' << num(a[2]) << ',' << num(b[0]) << ',' << num(b[1]) << ','
          << num(b[2]) << ',' << num(pre) << ',' << num(post) << ',' << num(quantum) << '\n';
    } else {
        s << "a                         " << vec_text(a) << "\n";
        s << "b                         " << vec_text(b) << "\n";
        s << "pre-projection  E(A.B)    " << num(pre) << "\n";
        s << "projected outcomes\n";
        for (auto state : RotationTensorModel::states()) {
            s << "  " << describe(state) << "   P(A) = " << signed_outcome(g.projected(Side::alice, a, state))
              << "   P(B) = " << signed_outcome(g.projected(Side::bob, b, state)) << "\n";
        }
        s << "post-projection E(AB)     " << num(post) << "\n";
        s << "quantum         E(AB)     " << num(quantum) << "\n";
    }
    return s.str();
}

// ---------------------------------------------------------------- chsh

struct ChshArgs {
    std::string source;
    bool optimize = false;
    std::string a = "0";
    std::string a_prime = "90";
    std::string b = "45";
    std::string b_prime = "135";
    std::size_t n = 1000000;
    std::uint64_t seed = 1;
    std::string mode = "coplanar";
    double grid = 0.0;
    double sweep_step = 0.0;
    unsigned workers = 1;
    Output output;
};

Correlator exact_source(const std::string &source) {
    if (source == "qm") {
        return [](const UnitVector3 &a, const UnitVector3 &b) { return qm_product_expectation(a, b); };
    }
    if (source == "sign-model") {
        return exact_correlator(make_sign_model());
    }
    if (source == "rotation-projected") {
        return exact_correlator(reduce_to_hvm(rotation_tensor_ghvm()));
    }
    throw UsageError("source '" + source + "' has no exact correlator; use qm, sign-model or rotation-projected");
}

std::string render_report(const ChshReport &r, const std::string &format) {
    std::ostringstream s;
    if (format == "json") {
        s << dump(to_json(r));
    } else if (format == "csv") {
        write_sweep_csv(s, std::span<const ChshReport>(&r, 1));
    } else {
        s << "source    " << r.source << "\n";
        s << "a         " << vec_text(r.settings.a) << "\n";
        s << "a'        " << vec_text(r.settings.a_prime) << "\n";
        s << "b         " << vec_text(r.settings.b) << "\n";
        s << "b'        " << vec_text(r.settings.b_prime) << "\n";
        s << "E(a,b)    " << num(r.e_ab) << "\n";
        s << "E(a,b')   " << num(r.e_ab_prime) << "\n";
        s << "E(a',b)   " << num(r.e_a_prime_b) << "\n";
        s << "E(a',b')  " << num(r.e_a_prime_b_prime) << "\n";
        s << "S         " << num(r.s) << "\n";
        s << "bound     " << num(kClassicalBound) << (r.bound_satisfied ? " (satisfied)" : " (violated)") << "\n";
    }
    return s.str();
}

std::string render_optimum(const ChshOptimum &opt, const ChshArgs &args) {
    std::ostringstream s;
    if (args.output.format == "json") {
        Json j = to_json(opt);
        j["source"] = args.source;
        j["mode"] = args.mode;
        s << dump(versioned(j));
    } else if (args.output.format == "csv") {
        s << "mode";
        for (std::size_t i = 0; i < opt.coordinates_deg.size(); ++i) {
            s << ",coordinate_" << i;
        }
        s << ",s_max,correlator_evaluations\n" << args.mode;
        for (double c : opt.coordinates_deg) {
            s << ',' << num(c);
        }
        s << ',' << num(opt.s_max) << ',' << opt.correlator_evaluations << '\n';
    } else {
        s << "source       " << args.source << "\n";
        s << "mode         " << args.mode << "\n";
        s << "a            " << vec_text(opt.settings.a) << "\n";
        s << "a'           " << vec_text(opt.settings.a_prime) << "\n";
        s << "b            " << vec_text(opt.settings.b) << "\n";
        s << "b'           " << vec_text(opt.settings.b_prime) << "\n";
        s << "angles (deg)";
        for (double c : opt.coordinates_deg) {
            s << ' ' << num(c);
        }
        s << "\n";
        s << "S_max        " << num(opt.s_max) << "\n";
        s << "evaluations  " << opt.correlator_evaluations << "\n";
    }
    return s.str();
}

std::string render_sweep(const std::vector<ChshReport> &rows, double step, const std::string &format) {
    std::ostringstream s;
    if (format == "json") {
        Json j;
        j["schema_version"] = kSchemaVersion;
        j["family"] = "a=0, b=t, a'=2t, b'=3t";
        j["step_deg"] = step;
        Json list = Json::array();
        for (const auto &r : rows) {
            list.push_back(to_json(r));
        }
        j["rows"] = list;
        s << dump(j);
    } else if (format == "csv") {
        write_sweep_csv(s, rows);
    } else {
        s << "t_deg        S\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            s << num(step * static_cast<double>(i)) << "  " << num(rows[i].s) << "\n";
        }
    }
    return s.str();
}

std::string run_chsh(const ChshArgs &args) {
    if (args.optimize && args.sweep_step > 0.0) {
        throw UsageError("--optimize and --sweep-step are mutually exclusive");
    }
    if (args.source == "qm-sampled") {
        if (args.optimize || args.sweep_step > 0.0) {
            throw UsageError("qm-sampled supports fixed settings only; use --source qm to optimize or sweep");
        }
        auto settings = ChshSettings{parse_setting(args.a, "--a"), parse_setting(args.a_prime, "--a-prime"),
                                     parse_setting(args.b, "--b"), parse_setting(args.b_prime, "--b-prime")};
        std::size_t n = args.n;
        auto sampler = [n](const UnitVector3 &a, const UnitVector3 &b, std::uint64_t seed) {
            return simulate_qm_trials(a, b, n, seed);
        };
        return render_report(empirical_chsh(sampler, settings, args.seed, args.source), args.output.format);
    }

    const Correlator correlator = exact_source(args.source);
    if (args.optimize) {
        SearchConfig config;
        config.mode = args.mode == "sphere" ? SearchConfig::Mode::sphere : SearchConfig::Mode::coplanar;
        config.grid_step_deg = args.grid > 0.0 ? args.grid : (args.mode == "sphere" ? 10.0 : 1.0);
        config.workers = args.workers;
        return render_optimum(maximize_chsh(correlator, config), args);
    }
    if (args.sweep_step > 0.0) {
        return render_sweep(chsh_angle_sweep(correlator, args.sweep_step, args.source), args.sweep_step,
                            args.output.format);
    }
    auto settings = ChshSettings{parse_setting(args.a, "--a"), parse_setting(args.a_prime, "--a-prime"),
                                 parse_setting(args.b, "--b"), parse_setting(args.b_prime, "--b-prime")};
    return render_report(chsh_statistic(correlator, settings, args.source), args.output.format);
}

// ---------------------------------------------------------------- trials

struct TrialsArgs {
    std::string source;
    std::string a;
    std::string b;
    std::size_t n = 1000;
    std::uint64_t seed = 1;
    Output output{"csv", ""};
};

std::string summary_text(const TrialRecord &record, const std::string &source) {
    auto e = summarize(record);
    std::ostringstream s;
    s << "source     " << source << "\n";
    s << "a          " << vec_text(record.a) << "\n";
    s << "b          " << vec_text(record.b) << "\n";
    s << "seed       " << record.seed << "\n";
    s << "n_trials   " << e.n_trials << "\n";
    s << "mean A     " << num(e.mean_a) << "\n";
    s << "mean B     " << num(e.mean_b) << "\n";
    s << "mean AB    " << num(e.mean_ab) << "\n";
    s << "std error  " << num(e.std_error_ab) << "\n";
    return s.str();
}

int run_trials(const TrialsArgs &args, std::ostream &out) {
    auto a = parse_setting(args.a, "--a");
    auto b = parse_setting(args.b, "--b");
    TrialRecord record = [&] {
        if (args.source == "qm-sampled") {
            return simulate_qm_trials(a, b, args.n, args.seed);
        }
        if (args.source == "sign-model") {
            return simulate_trials(make_sign_model(), a, b, args.n, args.seed);
        }
        return simulate_trials(reduce_to_hvm(rotation_tensor_ghvm()), a, b, args.n, args.seed);
    }();

    std::ostringstream s;
    if (args.output.format == "json") {
        Json j = to_json(record);
        j["source"] = args.source;
        s << dump(j);
    } else if (args.output.format == "csv") {
        write_trials_csv(s, record);
    } else {
        s << summary_text(record, args.source);
    }
    emit(args.output, s.str(), out);
    if (!args.output.path.empty() && args.output.format != "plain") {
        out << summary_text(record, args.source);
    }
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app("Bell-test toolkit: quantum predictions, hidden variable models and CHSH analysis", "bellscope");
    app.require_subcommand(1);
    const std::vector<std::string> text_formats{"plain", "json", "csv"};

    QmArgs qm;
    auto *qm_cmd = app.add_subcommand("qm", "Singlet-state expectation values for settings a and b");
    qm_cmd->add_option("--a", qm.a, "Alice's setting: angle in degrees or x,y,z")->required();
    qm_cmd->add_option("--b", qm.b, "Bob's setting: angle in degrees or x,y,z")->required();
    add_output_options(qm_cmd, qm.output, text_formats);

    QmArgs rotation;
    auto *rot_cmd = app.add_subcommand(
        "rotation", "Rotation-tensor model before and after projection, next to the quantum value");
    rot_cmd->add_option("--a", rotation.a, "Alice's setting: angle in degrees or x,y,z")->required();
    rot_cmd->add_option("--b", rotation.b, "Bob's setting: angle in degrees or x,y,z")->required();
    add_output_options(rot_cmd, rotation.output, text_formats);

    ChshArgs chsh;
    auto *chsh_cmd = app.add_subcommand("chsh", "CHSH statistic, optimum or angle sweep for a correlation source");
    chsh_cmd->add_option("--source", chsh.source, "Correlation source")
        ->required()
        ->check(CLI::IsMember({"qm", "qm-sampled", "sign-model", "rotation-projected"}));
    chsh_cmd->add_flag("--optimize", chsh.optimize, "Search for the settings maximizing S");
    chsh_cmd->add_option("--a", chsh.a, "Setting a (degrees or x,y,z)")->capture_default_str();
    chsh_cmd->add_option("--a-prime", chsh.a_prime, "Setting a'")->capture_default_str();
    chsh_cmd->add_option("--b", chsh.b, "Setting b")->capture_default_str();
    chsh_cmd->add_option("--b-prime", chsh.b_prime, "Setting b'")->capture_default_str();
    chsh_cmd->add_option("--n", chsh.n, "Trials per settings pair (qm-sampled)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    chsh_cmd->add_option("--seed", chsh.seed, "Random seed")->capture_default_str();
    chsh_cmd->add_option("--mode", chsh.mode, "Search space for --optimize")
        ->check(CLI::IsMember({"coplanar", "sphere"}))
        ->capture_default_str();
    chsh_cmd->add_option("--grid", chsh.grid, "Grid step in degrees for --optimize (default 1 coplanar, 10 sphere)")
        ->check(CLI::PositiveNumber);
    chsh_cmd->add_option("--sweep-step", chsh.sweep_step, "Sweep a=0, b=t, a'=2t, b'=3t over t in [0, 180]")
        ->check(CLI::PositiveNumber);
    chsh_cmd->add_option("--workers", chsh.workers, "Threads for grid tabulation")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    add_output_options(chsh_cmd, chsh.output, text_formats);

    TrialsArgs trials;
    auto *t_cmd = app.add_subcommand("trials", "Record of +-1 outcome pairs for fixed settings");
    t_cmd->add_option("--source", trials.source, "Trial source")
        ->required()
        ->check(CLI::IsMember({"rotation-projected", "qm-sampled", "sign-model"}));
    t_cmd->add_option("--a", trials.a, "Alice's setting: angle in degrees or x,y,z")->required();
    t_cmd->add_option("--b", trials.b, "Bob's setting: angle in degrees or x,y,z")->required();
    t_cmd->add_option("--n", trials.n, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
    t_cmd->add_option("--seed", trials.seed, "Random seed")->capture_default_str();
    add_output_options(t_cmd, trials.output, text_formats);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (qm_cmd->parsed()) {
            emit(qm.output, run_qm(qm), out);
        } else if (rot_cmd->parsed()) {
            emit(rotation.output, run_rotation(rotation), out);
        } else if (chsh_cmd->parsed()) {
            emit(chsh.output, run_chsh(chsh), out);
        } else {
            return run_trials(trials, out);
        }
        return kExitOk;
    } catch (const UsageError &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ReductionError &e) {
        err << to_json(e).dump(2) << "\n";
        return kExitModel;
    } catch (const DomainError &e) {
        err << "domain error: " << e.what() << "\n";
        return kExitModel;
    } catch (const ContractViolation &e) {
        err << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const UnsupportedExact &e) {
        err << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace bellscope::cli
