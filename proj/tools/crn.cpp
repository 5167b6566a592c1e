#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>

#include "crn/dynamics.hpp"
#include "crn/inheritance.hpp"
#include "crn/parse.hpp"
#include "crn/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitNumericalError = 3;

bool color_enabled(bool writing_to_file) {
    if (writing_to_file) return false;
    if (const char* env = std::getenv("CRN_COLOR"); env && std::string(env) == "0") return false;
    return isatty(1) != 0;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
}

std::string json_text(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::vector<double> parse_number_list(const std::string& text, const char* what) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(token, &used));
            if (used != token.size()) throw std::invalid_argument(token);
        } catch (const std::exception&) {
            throw std::runtime_error(std::string("bad ") + what + " entry: \"" + token + "\"");
        }
    }
    if (values.empty()) throw std::runtime_error(std::string(what) + " list is empty");
    return values;
}

// Downsampled polyline plot of every species against time.
void write_svg(const std::string& path, const crn::ReactionNetwork& net,
               const crn::Trajectory& traj) {
    static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                     "#ff7f0e", "#8c564b", "#e377c2", "#7f7f7f"};
    const int width = 800, height = 480;
    const double left = 60, right = 780, top = 20, bottom = 440;
    const double t_max = traj.times.back() > 0 ? traj.times.back() : 1.0;
    double y_max = 0;
    for (const auto& state : traj.states) y_max = std::max(y_max, state.maxCoeff());
    if (y_max <= 0) y_max = 1.0;
    y_max *= 1.05;
    const auto sx = [&](double t) { return left + (right - left) * t / t_max; };
    const auto sy = [&](double y) { return bottom - (bottom - top) * y / y_max; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\""
        << bottom << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << bottom << "\" stroke=\"black\"/>\n";
    char label[64];
    for (int tick = 0; tick <= 5; ++tick) {
        const double t = t_max * tick / 5, y = y_max * tick / 5 / 1.05;
        std::snprintf(label, sizeof label, "%g", t);
        svg << "<line x1=\"" << sx(t) << "\" y1=\"" << bottom << "\" x2=\"" << sx(t)
            << "\" y2=\"" << bottom + 5 << "\" stroke=\"black\"/>"
            << "<text x=\"" << sx(t) << "\" y=\"" << bottom + 20
            << "\" font-size=\"12\" text-anchor=\"middle\">" << label << "</text>\n";
        std::snprintf(label, sizeof label, "%g", y);
        svg << "<line x1=\"" << left - 5 << "\" y1=\"" << sy(y) << "\" x2=\"" << left
            << "\" y2=\"" << sy(y) << "\" stroke=\"black\"/>"
            << "<text x=\"" << left - 8 << "\" y=\"" << sy(y) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << label << "</text>\n";
    }
    svg << "<text x=\"" << (left + right) / 2 << "\" y=\"" << height - 8
        << "\" font-size=\"13\" text-anchor=\"middle\">t</text>\n";

    const std::size_t samples = traj.times.size();
    const std::size_t stride = std::max<std::size_t>(1, samples / 2000);
    for (int species = 0; species < net.species_count(); ++species) {
        const char* stroke = kPalette[species % 8];
        svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < samples; i += stride)
            svg << sx(traj.times[i]) << "," << sy(traj.states[i](species)) << " ";
        svg << sx(traj.times.back()) << "," << sy(traj.states.back()(species));
        svg << "\"/>\n";
        svg << "<text x=\"" << right - 10 << "\" y=\"" << top + 16 + 16 * species
            << "\" font-size=\"13\" text-anchor=\"end\" fill=\"" << stroke << "\">"
            << net.species_name(species) << "</text>\n";
    }
    svg << "</svg>\n";

    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << svg.str();
}

struct AnalyzeResult {
    std::string text;
    nlohmann::json json;
    int exit_code = kExitOk;
};

AnalyzeResult analyze_file(const std::string& file, bool require_cst, bool json, bool color) {
    AnalyzeResult result;
    try {
        const crn::ReactionNetwork net = crn::load_network(file);
        const crn::AnalysisReport report = crn::analyze(net);
        if (require_cst && !report.cst) {
            result.text = file + ": not a recognizable cycle: " + report.not_cst_reason + "\n";
            result.json = {{"file", file}, {"error", result.text}};
            result.exit_code = kExitInputError;
            return result;
        }
        if (json) {
            result.json = crn::to_json(report);
            result.json["file"] = file;
        } else {
            result.text = crn::human_text(report, color);
        }
    } catch (const std::exception& e) {
        result.text = file + ": " + e.what() + "\n";
        result.json = {{"file", file}, {"error", e.what()}};
        result.exit_code = kExitInputError;
    }
    return result;
}

int run_parse(const std::string& file, bool json, const std::string& out_path) {
    const crn::ReactionNetwork net = crn::load_network(file);
    if (json) {
        nlohmann::json j = crn::to_json(net);
        j["schema"] = 1;
        j["kind"] = "network";
        emit(json_text(j), out_path);
    } else {
        emit(crn::format_network(net), out_path);
    }
    return kExitOk;
}

int run_analyze(const std::string& file, const std::string& batch_dir, bool require_cst,
                bool json, const std::string& out_path) {
    const bool color = color_enabled(!out_path.empty());
    if (batch_dir.empty()) {
        const AnalyzeResult result = analyze_file(file, require_cst, json, color);
        if (result.exit_code != kExitOk) {
            std::cerr << result.text;
            return result.exit_code;
        }
        emit(json ? json_text(result.json) : result.text, out_path);
        return kExitOk;
    }

    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(batch_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".crn")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw std::runtime_error("no .crn files in " + batch_dir);

    std::vector<std::future<AnalyzeResult>> futures;
    futures.reserve(files.size());
    for (const std::string& f : files)
        futures.push_back(std::async(std::launch::async, analyze_file, f, require_cst, json,
                                     color && !json));
    int exit_code = kExitOk;
    nlohmann::json reports = nlohmann::json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < files.size(); ++i) {
        AnalyzeResult result = futures[i].get();
        exit_code = std::max(exit_code, result.exit_code);
        if (json) {
            reports.push_back(result.json);
        } else {
            text << "== " << files[i] << " ==\n" << result.text << "\n";
        }
    }
    if (json)
        emit(json_text({{"schema", 1}, {"kind", "batch"}, {"reports", reports}}), out_path);
    else
        emit(text.str(), out_path);
    return exit_code;
}

int run_lift(const std::string& file, bool json, const std::string& out_path) {
    const crn::LiftingPlan plan = crn::load_lifting_plan(file);
    const crn::PlanReport report = crn::verify_lifting_plan(plan);
    if (json)
        emit(json_text(crn::to_json(report)), out_path);
    else
        emit(crn::human_text(report, color_enabled(!out_path.empty())), out_path);
    return report.passed() ? kExitOk : kExitVerificationFailed;
}

int run_witness(const std::string& file, bool json, const std::string& out_path) {
    const crn::ReactionNetwork net = crn::load_network(file);
    const crn::AnalysisReport report = crn::analyze(net);
    if (!report.cst) {
        std::cerr << file << ": not a recognizable cycle: " << report.not_cst_reason << "\n";
        return kExitInputError;
    }
    if (!report.verdict || report.verdict->multistationary != crn::Multistationarity::Yes) {
        std::cerr << file << ": verdict is not multistationary ("
                  << (report.verdict ? crn::to_string(report.verdict->multistationary) : "none")
                  << "), nothing to witness\n";
        return kExitInputError;
    }
    if (!report.construction_note.empty()) {
        std::cerr << file << ": evidence construction failed: " << report.construction_note
                  << "\n";
        return kExitVerificationFailed;
    }
    const bool color = color_enabled(!out_path.empty());
    bool verified = true;
    nlohmann::json j = {{"schema", 1}, {"kind", "witness"}, {"rule", report.verdict->rule}};
    std::ostringstream text;
    if (report.witness) {
        verified = report.witness_report && report.witness_report->passed();
        if (json) {
            j["witness"] = crn::to_json(*report.witness);
            j["verification"] = crn::to_json(*report.witness_report);
        } else {
            text << crn::human_text(report, color) << crn::human_text(*report.witness_report, color);
        }
    } else {
        const crn::CertificateCheck check = crn::verify_determinant_certificate(*report.certificate);
        verified = check.passed;
        if (json) {
            j["certificate"] = crn::to_json(*report.certificate);
            j["verification"] = {{"passed", check.passed}, {"failure", check.failure}};
        } else {
            text << crn::human_text(report, color)
                 << (check.passed ? "certificate verified\n"
                                  : "certificate check failed: " + check.failure + "\n");
        }
    }
    emit(json ? json_text(j) : text.str(), out_path);
    return verified ? kExitOk : kExitVerificationFailed;
}

int run_simulate(const std::string& file, const std::string& x0_text, const std::string& rates_text,
                 double t_end, double tol, const std::string& out_path,
                 const std::string& plot_path) {
    const crn::ReactionNetwork net = crn::load_network(file);
    const std::vector<double> x0_values = parse_number_list(x0_text, "--x0");
    if (static_cast<int>(x0_values.size()) != net.species_count())
        throw std::runtime_error("--x0 needs " + std::to_string(net.species_count()) +
                                 " values (species order: " +
                                 [&] {
                                     std::string names;
                                     for (const auto& s : net.species())
                                         names += (names.empty() ? "" : ", ") + s;
                                     return names;
                                 }() +
                                 ")");
    Eigen::VectorXd x0(net.species_count());
    for (int i = 0; i < net.species_count(); ++i) x0(i) = x0_values[static_cast<std::size_t>(i)];

    Eigen::VectorXd k(net.reaction_count());
    if (!rates_text.empty()) {
        const std::vector<double> rates = parse_number_list(rates_text, "--rates");
        if (static_cast<int>(rates.size()) != net.reaction_count())
            throw std::runtime_error("--rates needs " + std::to_string(net.reaction_count()) +
                                     " values, one per reaction");
        for (int j = 0; j < net.reaction_count(); ++j) k(j) = rates[static_cast<std::size_t>(j)];
    } else {
        for (int j = 0; j < net.reaction_count(); ++j) {
            const auto& rate = net.reactions()[static_cast<std::size_t>(j)].rate;
            if (!rate)
                throw std::runtime_error("reaction " + std::to_string(j + 1) +
                                         " has no rate constant; annotate the file or pass --rates");
            k(j) = crn::to_double(*rate);
        }
    }

    const crn::Trajectory traj = crn::simulate(net, k, x0, t_end, tol);
    emit(traj.to_csv(net), out_path);
    if (!plot_path.empty()) write_svg(plot_path, net, traj);
    std::cerr << "accepted " << traj.accepted_steps << " steps, rejected " << traj.rejected_steps
              << ", conservation drift " << traj.conservation_drift << ", clipped mass "
              << traj.clipped_mass << "\n";
    return kExitOk;
}

int run_embed(const std::string& file, const std::vector<std::string>& drop_species,
              const std::vector<int>& drop_reactions, bool json, const std::string& out_path) {
    const crn::ReactionNetwork net = crn::load_network(file);
    crn::EmbeddingSpec spec;
    spec.removed_species = drop_species;
    for (int index : drop_reactions) {
        if (index < 1)
            throw std::runtime_error("reaction indices count from 1");
        spec.removed_reactions.push_back(index - 1);
    }
    const crn::ReactionNetwork embedded = crn::embed_network(net, spec);
    if (json) {
        nlohmann::json j = crn::to_json(embedded);
        j["schema"] = 1;
        j["kind"] = "network";
        emit(json_text(j), out_path);
    } else {
        emit(crn::format_network(embedded), out_path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"injectivity and multistationarity toolkit for cyclic reaction networks"};
    app.require_subcommand(1);

    std::string file, out_path, batch_dir, x0_text, rates_text, plot_path;
    bool json = false, require_cst = false;
    double t_end = 0, tol = 1e-6;
    std::vector<std::string> drop_species;
    std::vector<int> drop_reactions;

    auto* parse_cmd = app.add_subcommand("parse", "parse a network file and reprint it");
    parse_cmd->add_option("file", file, "network file (.crn)")->required();
    parse_cmd->add_flag("--json", json, "emit JSON");
    parse_cmd->add_option("--out", out_path, "write output to this file");

    auto* analyze_cmd =
        app.add_subcommand("analyze", "injectivity and multistationarity analysis");
    analyze_cmd->add_option("file", file, "network file (.crn)");
    analyze_cmd->add_option("--batch", batch_dir, "analyze every .crn file in a directory");
    analyze_cmd->add_flag("--json", json, "emit JSON");
    analyze_cmd->add_flag("--require-cst", require_cst,
                          "fail (exit 2) when the network is not a recognizable cycle");
    analyze_cmd->add_option("--out", out_path, "write output to this file");

    auto* lift_cmd = app.add_subcommand("lift", "verify a lifting plan (.plan)");
    lift_cmd->add_option("file", file, "plan file")->required();
    lift_cmd->add_flag("--json", json, "emit JSON");
    lift_cmd->add_option("--out", out_path, "write output to this file");

    auto* witness_cmd =
        app.add_subcommand("witness", "construct and verify multistationarity evidence");
    witness_cmd->add_option("file", file, "network file (.crn)")->required();
    witness_cmd->add_flag("--json", json, "emit JSON");
    witness_cmd->add_option("--out", out_path, "write output to this file");

    auto* simulate_cmd = app.add_subcommand("simulate", "integrate mass-action dynamics");
    simulate_cmd->add_option("file", file, "network file (.crn)")->required();
    simulate_cmd->add_option("--x0", x0_text, "initial state, comma-separated, species order")
        ->required();
    simulate_cmd->add_option("--t-end", t_end, "integration end time")->required();
    simulate_cmd->add_option("--rates", rates_text,
                             "rate constants, comma-separated (default: from the file)");
    simulate_cmd->add_option("--tol", tol, "relative tolerance, in (0, 1e-2]");
    simulate_cmd->add_option("--out", out_path, "write the CSV here instead of stdout");
    simulate_cmd->add_option("--plot", plot_path, "also write an SVG plot");

    auto* embed_cmd = app.add_subcommand("embed", "remove species/reactions, keeping the rest");
    embed_cmd->add_option("file", file, "network file (.crn)")->required();
    embed_cmd->add_option("--drop-species", drop_species, "species name to remove");
    embed_cmd->add_option("--drop-reaction", drop_reactions, "reaction index to remove (from 1)");
    embed_cmd->add_flag("--json", json, "emit JSON");
    embed_cmd->add_option("--out", out_path, "write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*parse_cmd) return run_parse(file, json, out_path);
        if (*analyze_cmd) {
            if (file.empty() == batch_dir.empty())
                throw std::runtime_error("analyze takes either a file or --batch DIR");
            return run_analyze(file, batch_dir, require_cst, json, out_path);
        }
        if (*lift_cmd) return run_lift(file, json, out_path);
        if (*witness_cmd) return run_witness(file, json, out_path);
        if (*simulate_cmd)
            return run_simulate(file, x0_text, rates_text, t_end, tol, out_path, plot_path);
        if (*embed_cmd) return run_embed(file, drop_species, drop_reactions, json, out_path);
    } catch (const crn::SimulationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
