// Copyright 2026 The nmrqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nmrqc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "nmrqc/error.hpp"
#include "nmrqc/metrics.hpp"
#include "nmrqc/readout.hpp"
#include "nmrqc/sequences.hpp"
#include "nmrqc/tomography.hpp"

namespace nmrqc::cli {

namespace {

namespace fs = std::filesystem;

SpinSystem profile_or_default(const std::string& path) {
    return path.empty() ? chloroform_zli1167() : load_profile(path);
}

bool parse_switch(const std::string& value) {
    return value == "on";
}

void prepare_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw Error("cannot create output directory '" + dir.string() + "'");
    }
}

// Writes through a temporary stream and reports failure as an Error.
template <class Fn>
void write_file(const fs::path& path, Fn&& fn) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error("cannot write '" + path.string() + "'");
    }
    fn(f);
    f.flush();
    if (!f) {
        throw Error("failed writing '" + path.string() + "'");
    }
}

nlohmann::json readout_channel(const DensityMatrix& state, const SpinSystem& sys, int spin, const fs::path& dir) {
    const AcquisitionParams acq = default_acquisition(sys, spin);
    const Spectrum spec = spectrum(fid(state, sys, acq, RelaxationParams::from(sys, true), ReadoutPulse::y90), acq);
    const std::string name = "spectrum_" + sys.spin(spin).label + ".csv";
    write_file(dir / name, [&](std::ostream& o) { write_spectrum_csv(o, spec); });
    return {{"spin", sys.spin(spin).label},
            {"file", name},
            {"lines", to_json(line_table(spec, line_frequencies(sys, spin)))},
            {"peaks", to_json(spec.peaks)}};
}

nlohmann::json populations(const DensityMatrix& rho) {
    nlohmann::json p;
    for (int k = 0; k < rho.dim(); ++k) {
        p[basis_label(k, rho.n_spins())] = rho(k, k).real();
    }
    return p;
}

struct GroverOptions {
    std::string x0;
    std::string profile;
    std::string relaxation = "on";
    std::string out = ".";
};

int cmd_grover(const GroverOptions& o, std::ostream& out) {
    const SpinSystem sys = profile_or_default(o.profile);
    const bool relax_on = parse_switch(o.relaxation);
    const GroverResult result = run_grover(sys, o.x0, RelaxationParams::from(sys, relax_on));
    const fs::path dir(o.out);
    prepare_dir(dir);

    nlohmann::json channels = nlohmann::json::array();
    for (int s = 0; s < sys.n_spins(); ++s) {
        channels.push_back(readout_channel(result.state, sys, s, dir));
    }
    write_file(dir / "state.json", [&](std::ostream& f) { f << to_json(result.state).dump(2) << '\n'; });
    const nlohmann::json summary{{"x0", result.x0},
                                 {"solvent", sys.solvent()},
                                 {"relaxation", o.relaxation},
                                 {"fidelity", result.fidelity},
                                 {"grover_duration_s", result.duration_s},
                                 {"oracle_queries", count_oracle_queries(grover_circuit(o.x0))},
                                 {"deviation_populations", populations(result.state.deviation_part())},
                                 {"channels", channels}};
    write_file(dir / "summary.json", [&](std::ostream& f) { f << summary.dump(2) << '\n'; });
    char line[128];
    std::snprintf(line, sizeof(line), "x0=%s solvent=%s relaxation=%s fidelity=%.6f\n", result.x0.c_str(),
                  sys.solvent().c_str(), o.relaxation.c_str(), result.fidelity);
    out << line;
    return 0;
}

int cmd_tomography(const GroverOptions& o, std::ostream& out) {
    const SpinSystem sys = profile_or_default(o.profile);
    const GroverResult result = run_grover(sys, o.x0, RelaxationParams::from(sys, parse_switch(o.relaxation)));
    const TomographySettings settings = TomographySettings::defaults(sys);
    const Tomographer tomo(sys, settings);
    const DensityMatrix dev = tomo.reconstruct(simulate_measurements(result.state, sys, settings));
    const fs::path dir(o.out);
    prepare_dir(dir);
    write_file(dir / "deviation.json", [&](std::ostream& f) { f << to_json(dev).dump(2) << '\n'; });
    write_file(dir / "deviation_bars.txt", [&](std::ostream& f) { f << render_bar_table(dev); });

    Eigen::Index r = 0;
    Eigen::Index c = 0;
    dev.matrix().cwiseAbs().maxCoeff(&r, &c);
    out << "x0=" << result.x0 << " dominant element |" << basis_label(static_cast<int>(r), 2) << "><"
        << basis_label(static_cast<int>(c), 2) << "|\n"
        << render_bar_table(dev);
    return 0;
}

int cmd_metrics(const std::string& profile, const std::string& reference, const std::string& out_file,
                std::ostream& out) {
    const SpinSystem sys = profile_or_default(profile);
    std::optional<SpinSystem> ref;
    if (!reference.empty()) {
        ref = load_profile(reference);
    }
    const std::string text = to_json(metrics_report(sys, ref)).dump(2) + "\n";
    if (!out_file.empty()) {
        write_file(out_file, [&](std::ostream& f) { f << text; });
    }
    out << text;
    return 0;
}

int cmd_spectrum(const std::string& state_file, const std::string& observe, const std::string& profile,
                 const std::string& out_file, bool no_pulse, std::ostream& out) {
    const SpinSystem sys = profile_or_default(profile);
    std::ifstream in(state_file);
    if (!in) {
        throw Error("cannot open state file '" + state_file + "'");
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error("cannot parse state file: " + std::string(e.what()));
    }
    const DensityMatrix rho = density_matrix_from_json(j);
    const int spin = sys.find_spin(observe);
    const AcquisitionParams acq = default_acquisition(sys, spin);
    const Spectrum spec = spectrum(
        fid(rho, sys, acq, RelaxationParams::from(sys, true), no_pulse ? ReadoutPulse::none : ReadoutPulse::y90), acq);
    if (out_file.empty()) {
        write_spectrum_csv(out, spec);
    } else {
        write_file(out_file, [&](std::ostream& f) { write_spectrum_csv(f, spec); });
    }
    return 0;
}

int cmd_secular(const std::string& profile, double separation, const std::string& regime, std::ostream& out) {
    const SpinSystem sys = profile_or_default(profile);
    const CouplingRegime r = regime == "iso" ? CouplingRegime::isotropic : CouplingRegime::liquid_crystal;
    const double coupling = r == CouplingRegime::isotropic ? sys.j_hz(0, 1) : effective_coupling(sys, SpinPair{0, 1});
    const nlohmann::json j{{"solvent", sys.solvent()},
                           {"regime", regime},
                           {"separation_hz", separation},
                           {"time_s", coupling != 0.0 ? 1.0 / (2.0 * std::abs(coupling)) : 0.0},
                           {"max_norm_discrepancy", secular_discrepancy(sys, separation, r)}};
    out << j.dump(2) << '\n';
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Density-matrix simulator for two-spin NMR quantum computing"};
    app.name("nmrqc");
    app.require_subcommand(1);

    const std::vector<std::string> labels{"00", "01", "10", "11"};
    const std::vector<std::string> switches{"on", "off"};

    GroverOptions grover;
    auto* g = app.add_subcommand("grover", "Run the Grover search and write spectra, state and summary");
    g->add_option("--x0", grover.x0, "Marked element")->required()->check(CLI::IsMember(labels));
    g->add_option("--profile", grover.profile, "Spin-system profile JSON (default: built-in ZLI-1167)");
    g->add_option("--relaxation", grover.relaxation, "Relaxation during the sequence")->check(CLI::IsMember(switches));
    g->add_option("--out", grover.out, "Output directory");

    GroverOptions tomo;
    auto* t = app.add_subcommand("tomography", "Reconstruct the deviation matrix after the Grover search");
    t->add_option("--x0", tomo.x0, "Marked element")->required()->check(CLI::IsMember(labels));
    t->add_option("--profile", tomo.profile, "Spin-system profile JSON (default: built-in ZLI-1167)");
    t->add_option("--relaxation", tomo.relaxation, "Relaxation during the sequence")->check(CLI::IsMember(switches));
    t->add_option("--out", tomo.out, "Output directory")->required();

    std::string m_profile;
    std::string m_reference;
    std::string m_out;
    auto* m = app.add_subcommand("metrics", "Clock frequency, figure of merit and wait time");
    m->add_option("--profile", m_profile, "Spin-system profile JSON (default: built-in ZLI-1167)");
    m->add_option("--reference", m_reference, "Reference profile for ratios");
    m->add_option("--out", m_out, "Also write the report to this file");

    std::string s_state;
    std::string s_observe;
    std::string s_profile;
    std::string s_out;
    bool s_no_pulse = false;
    auto* s = app.add_subcommand("spectrum", "Spectrum of a stored density matrix");
    s->add_option("--state", s_state, "Density matrix JSON")->required();
    s->add_option("--observe", s_observe, "Observed channel label (H or C)")->required();
    s->add_option("--profile", s_profile, "Spin-system profile JSON (default: built-in ZLI-1167)");
    s->add_option("--out", s_out, "CSV output file (default: stdout)");
    s->add_flag("--no-readout-pulse", s_no_pulse, "Acquire without the 90-degree y readout pulse");

    std::string c_profile;
    double c_separation = 0.0;
    std::string c_regime = "lc";
    auto* c = app.add_subcommand("secular-check", "Full vs weak-coupling propagator discrepancy");
    c->add_option("--profile", c_profile, "Spin-system profile JSON (default: built-in ZLI-1167)");
    c->add_option("--separation", c_separation, "Frequency separation of the two spins, Hz")->required();
    c->add_option("--regime", c_regime, "lc (J + 2D) or iso (J)")->check(CLI::IsMember({"lc", "iso"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*g) return cmd_grover(grover, out);
        if (*t) return cmd_tomography(tomo, out);
        if (*m) return cmd_metrics(m_profile, m_reference, m_out, out);
        if (*s) return cmd_spectrum(s_state, s_observe, s_profile, s_out, s_no_pulse, out);
        if (*c) return cmd_secular(c_profile, c_separation, c_regime, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace nmrqc::cli
