// cayt command-line front end: reproducible experiments over built-in and
// user-supplied automatic presentations.

#include "cayt/characteristics.hpp"
#include "cayt/iso.hpp"
#include "cayt/oracles.hpp"
#include "cayt/presentation.hpp"
#include "cayt/series.hpp"
#include "cayt/transducer.hpp"
#include "cayt/version.hpp"
#include "cayt/walks.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cayt;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

constexpr const char* kPresetNames[] = {"z1", "z2", "z3", "f2", "f3", "lamplighter", "lamplighter-s1"};
constexpr const char* kGroupNames[] = {"z1", "z2", "z3", "f2", "f3", "lamplighter", "g2"};

GraphPresentation load_preset(const std::string& name) {
    if (name == "z1") return GraphPresentation::zm(1);
    if (name == "z2") return GraphPresentation::zm(2);
    if (name == "z3") return GraphPresentation::zm(3);
    if (name == "f2") return GraphPresentation::free_group(2);
    if (name == "f3") return GraphPresentation::free_group(3);
    if (name == "lamplighter") return GraphPresentation::lamplighter();
    if (name == "lamplighter-s1") return GraphPresentation::lamplighter_s1();
    throw ConfigError("unknown preset '" + name + "'");
}

GraphPresentation resolve_presentation(const std::string& preset, const std::string& bundle) {
    if (!preset.empty() && !bundle.empty()) throw ConfigError("give either --preset or --bundle");
    if (!preset.empty()) return load_preset(preset);
    if (!bundle.empty()) {
        if (!fs::exists(fs::path(bundle) / "meta.json"))
            throw ConfigError("bundle '" + bundle + "' not found");
        return GraphPresentation::load_bundle(bundle);
    }
    throw ConfigError("a presentation is required: --preset NAME or --bundle DIR");
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ConfigError("cannot parse rational '" + text + "'");
    }
}

std::vector<int> parse_grid(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw ConfigError("bad grid entry '" + tok + "'");
        }
    }
    if (out.empty()) throw ConfigError("empty grid");
    return out;
}

// output stream honoring --out and CAYT_OUT_DIR
class Output {
public:
    explicit Output(const std::string& path) {
        if (path.empty()) return;
        fs::path p(path);
        if (p.is_relative()) {
            if (const char* dir = std::getenv("CAYT_OUT_DIR")) p = fs::path(dir) / p;
        }
        file_.open(p);
        if (!file_) throw ConfigError("cannot open output file '" + p.string() + "'");
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void csv_header(std::ostream& os, const std::string& command, const std::string& config,
                std::uint64_t seed) {
    os << "# cayt " << command << " v" << kVersion << '\n';
    os << "# config: " << config << '\n';
    os << "# seed: " << seed << '\n';
}

json meta_json(const std::string& command, const std::string& config, std::uint64_t seed) {
    return json{{"tool", "cayt"},
                {"version", kVersion},
                {"command", command},
                {"config", config},
                {"seed", seed}};
}

std::string rational_str(const Rational& r) {
    return to_string(rat_num(r)) + "/" + to_string(rat_den(r));
}

struct Common {
    std::string format = "csv";
    std::string out_path;
    std::uint64_t seed = 1;
    int threads = 1;
};

void add_common(CLI::App* cmd, Common& c, bool with_seed = true) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", c.out_path,
                    "Output file (default stdout; relative paths resolve under CAYT_OUT_DIR)");
    if (with_seed) cmd->add_option("--seed", c.seed, "RNG seed (echoed into the output)");
    cmd->add_option("--threads", c.threads, "Worker cap; does not change results")
        ->check(CLI::PositiveNumber);
}

template <class Fn>
void with_group(const std::string& name, const std::string& gens, Fn&& fn) {
    if (name == "z1") return fn(ZmGroup(1));
    if (name == "z2") return fn(ZmGroup(2));
    if (name == "z3") return fn(ZmGroup(3));
    if (name == "f2") return fn(FreeGroup(2));
    if (name == "f3") return fn(FreeGroup(3));
    if (name == "lamplighter") {
        if (gens.empty() || gens == "S1prime" || gens == "s1prime")
            return fn(LamplighterGroup(LamplighterGroup::GenSet::S1Prime));
        if (gens == "S1" || gens == "s1") return fn(LamplighterGroup(LamplighterGroup::GenSet::S1));
        throw ConfigError("unknown generator set '" + gens + "' (use S1prime or S1)");
    }
    if (name == "g2") return fn(make_g2());
    throw ConfigError("unknown group '" + name + "'");
}

int run_walk_command(const std::string& which, const std::string& group, const std::string& gens,
                     const std::string& grid_text, std::size_t samples, const Common& c) {
    auto grid = parse_grid(grid_text);
    Output out(c.out_path);
    std::ostringstream config;
    config << which << " --group " << group;
    if (!gens.empty()) config << " --gens " << gens;
    config << " --n-grid " << grid_text << " --samples " << samples;

    std::vector<WalkEstimate> rows;
    with_group(group, gens, [&](const auto& g) {
        for (int n : grid) {
            if (which == "drift") rows.push_back(walk_drift(g, n, samples, c.seed, c.threads));
            else rows.push_back(walk_range(g, n, samples, c.seed, c.threads));
        }
    });
    if (c.format == "json") {
        json doc;
        doc["meta"] = meta_json(which, config.str(), c.seed);
        doc["rows"] = json::array();
        for (const auto& r : rows)
            doc["rows"].push_back({{"n", r.n},
                                   {"mean", r.mean},
                                   {"stderr", r.std_error},
                                   {"samples", r.samples},
                                   {"invalid", r.invalid}});
        out.stream() << doc.dump(2) << '\n';
    } else {
        csv_header(out.stream(), which, config.str(), c.seed);
        out.stream() << "n,mean,stderr,samples,invalid\n";
        for (const auto& r : rows)
            out.stream() << r.n << ',' << r.mean << ',' << r.std_error << ',' << r.samples << ','
                         << r.invalid << '\n';
    }
    return 0;
}

struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::size_t column_index(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return i;
        throw ConfigError("column '" + name + "' not found in the input");
    }
};

CsvTable read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open input '" + path + "'");
    CsvTable table;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (table.columns.empty()) table.columns = std::move(cells);
        else table.rows.push_back(std::move(cells));
    }
    if (table.columns.empty()) throw ConfigError("input '" + path + "' has no header row");
    return table;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"synchronous-automata presentations of Cayley graphs: growth, Folner and "
                 "average-length characteristics"};
    app.require_subcommand(1);

    auto* cmd_list = app.add_subcommand("list", "List built-in presets, groups and set families");

    std::string preset, bundle;

    Common c_validate;
    auto* cmd_validate = app.add_subcommand("validate", "Validate a presentation bundle or preset");
    cmd_validate->add_option("--preset", preset, "Built-in presentation");
    cmd_validate->add_option("--bundle", bundle, "Bundle directory");
    add_common(cmd_validate, c_validate, false);

    std::string export_preset, export_dir;
    auto* cmd_export = app.add_subcommand("export-bundle", "Write a preset as a bundle directory");
    cmd_export->add_option("--preset", export_preset, "Built-in presentation")->required();
    cmd_export->add_option("--dir", export_dir, "Target directory")->required();

    std::string tr_word;
    Common c_translate;
    c_translate.format = "json";
    auto* cmd_translate = app.add_subcommand("translate", "Apply every edge function to a word");
    cmd_translate->add_option("--preset", preset, "Built-in presentation");
    cmd_translate->add_option("--bundle", bundle, "Bundle directory");
    cmd_translate->add_option("--word", tr_word,
                              "Input word in the presentation's text form (empty = identity)");
    add_common(cmd_translate, c_translate, false);

    int growth_n = 10;
    Common c_growth;
    auto* cmd_growth = app.add_subcommand("growth", "Growth function b_n by iterated translation");
    cmd_growth->add_option("--preset", preset, "Built-in presentation");
    cmd_growth->add_option("--bundle", bundle, "Bundle directory");
    cmd_growth->add_option("--N", growth_n, "Horizon")->required();
    add_common(cmd_growth, c_growth);

    std::string folner_eps = "1/2", folner_mode = "upper", folner_family = "balls";
    int folner_max_index = 12, folner_size_budget = 12, folner_radius_budget = 10;
    bool folner_emit_set = false;
    Common c_folner;
    auto* cmd_folner = app.add_subcommand("folner", "Folner set search (boundary ratio below epsilon)");
    cmd_folner->add_option("--preset", preset, "Built-in presentation");
    cmd_folner->add_option("--bundle", bundle, "Bundle directory");
    cmd_folner->add_option("--epsilon", folner_eps, "Target ratio, e.g. 1/5")->required();
    cmd_folner->add_option("--mode", folner_mode, "upper (family scan) or exact (subset search)")
        ->check(CLI::IsMember({"upper", "exact"}));
    cmd_folner->add_option("--family", folner_family, "Candidate family for --mode upper")
        ->check(CLI::IsMember({"balls", "rectangles"}));
    cmd_folner->add_option("--max-index", folner_max_index, "Largest family index to try");
    cmd_folner->add_option("--size-budget", folner_size_budget, "Exact search: largest |W|");
    cmd_folner->add_option("--radius-budget", folner_radius_budget, "Exact search: universe ball radius");
    cmd_folner->add_flag("--emit-set", folner_emit_set, "Include the witness set in the output");
    add_common(cmd_folner, c_folner, false);

    int avg_n = 10;
    bool avg_mc = false;
    int avg_mc_n = 10;
    std::size_t avg_samples = 100000;
    Common c_avg;
    auto* cmd_avg = app.add_subcommand("avglen", "Average length growth l_n (exact or Monte Carlo)");
    cmd_avg->add_option("--preset", preset, "Built-in presentation");
    cmd_avg->add_option("--bundle", bundle, "Bundle directory");
    cmd_avg->add_option("--N", avg_n, "Exact horizon");
    cmd_avg->add_flag("--mc", avg_mc, "Monte Carlo estimate instead of the exact recursion");
    cmd_avg->add_option("--n", avg_mc_n, "Monte Carlo step count");
    cmd_avg->add_option("--samples", avg_samples, "Monte Carlo sample count");
    add_common(cmd_avg, c_avg);

    std::string walk_group, walk_gens, walk_grid = "100,300,1000,3000,10000";
    std::size_t walk_samples = 2000;
    Common c_drift, c_range;
    auto* cmd_drift = app.add_subcommand("drift", "Random-walk drift E[l_S] over an n-grid");
    cmd_drift->add_option("--group", walk_group, "Oracle group")->required();
    cmd_drift->add_option("--gens", walk_gens, "Generator set (lamplighter: S1prime or S1)");
    cmd_drift->add_option("--n-grid", walk_grid, "Comma-separated walk lengths");
    cmd_drift->add_option("--samples", walk_samples, "Samples per grid point");
    add_common(cmd_drift, c_drift);

    auto* cmd_range = app.add_subcommand("range", "Random-walk range E[R_n] over an n-grid");
    cmd_range->add_option("--group", walk_group, "Oracle group")->required();
    cmd_range->add_option("--gens", walk_gens, "Generator set (lamplighter: S1prime or S1)");
    cmd_range->add_option("--n-grid", walk_grid, "Comma-separated walk lengths");
    cmd_range->add_option("--samples", walk_samples, "Samples per grid point");
    add_common(cmd_range, c_range);

    std::string fit_input, fit_mode = "recurrence", fit_x_col = "n", fit_y_col, fit_window;
    int fit_max_order = 6;
    std::size_t fit_holdout = 10;
    Common c_fit;
    c_fit.format = "json";
    auto* cmd_fit = app.add_subcommand("fit", "Fit a recurrence or power law to a CSV column");
    cmd_fit->add_option("--input", fit_input, "CSV produced by growth/avglen/drift")->required();
    cmd_fit->add_option("--mode", fit_mode, "recurrence, power or classify")
        ->check(CLI::IsMember({"recurrence", "power", "classify"}));
    cmd_fit->add_option("--x-col", fit_x_col, "x column name (power mode)");
    cmd_fit->add_option("--y-col", fit_y_col, "value column name (default: second column)");
    cmd_fit->add_option("--max-order", fit_max_order, "Recurrence order cap");
    cmd_fit->add_option("--holdout", fit_holdout, "Recurrence holdout terms");
    cmd_fit->add_option("--window", fit_window, "Power fit window 'begin,end' (row indices)");
    add_common(cmd_fit, c_fit, false);

    std::string ball_group, ball_gens;
    int ball_radius = 5;
    Common c_ball;
    auto* cmd_ball = app.add_subcommand("ball", "Oracle ball sizes |B_r|");
    cmd_ball->add_option("--group", ball_group, "Oracle group")->required();
    cmd_ball->add_option("--gens", ball_gens, "Generator set (lamplighter: S1prime or S1)");
    cmd_ball->add_option("--radius", ball_radius, "Largest radius")->required();
    add_common(cmd_ball, c_ball, false);

    int iso_radius = 8;
    Common c_iso;
    auto* cmd_iso = app.add_subcommand("iso-check", "Check a preset against its oracle Cayley graph");
    cmd_iso->add_option("--preset", preset, "Built-in presentation")->required();
    cmd_iso->add_option("--radius", iso_radius, "Ball radius to verify");
    add_common(cmd_iso, c_iso, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (cmd_list->parsed()) {
            std::cout << "presets:";
            for (const char* p : kPresetNames) std::cout << ' ' << p;
            std::cout << "\ngroups:";
            for (const char* g : kGroupNames) std::cout << ' ' << g;
            std::cout << " (lamplighter gens: S1prime, S1)\nfamilies: balls rectangles\n";
            return 0;
        }

        if (cmd_export->parsed()) {
            load_preset(export_preset).save_bundle(export_dir);
            std::cout << "bundle written to " << export_dir << '\n';
            return 0;
        }

        if (cmd_validate->parsed()) {
            GraphPresentation p = resolve_presentation(preset, bundle);
            auto report = p.validate();
            Output out(c_validate.out_path);
            if (c_validate.format == "json") {
                json doc;
                doc["meta"] = meta_json("validate", preset + bundle, 0);
                doc["ok"] = report.ok();
                doc["checks"] = json::array();
                for (const auto& ch : report.checks)
                    doc["checks"].push_back(
                        {{"name", ch.name}, {"passed", ch.passed}, {"detail", ch.detail}});
                out.stream() << doc.dump(2) << '\n';
            } else {
                out.stream() << report.summary();
                out.stream() << (report.ok() ? "presentation OK\n" : "presentation INVALID\n");
            }
            return report.ok() ? 0 : 1;
        }

        if (cmd_translate->parsed()) {
            GraphPresentation p = resolve_presentation(preset, bundle);
            auto t = ClassTTransducer::from_presentation(std::move(p));
            Word x = t.presentation().alphabet()->parse_word(tr_word);
            auto r = t.translate(x);
            json doc;
            doc["meta"] = meta_json("translate", "word=" + tr_word, 0);
            doc["input"] = tr_word;
            doc["accepted"] = r.accepted;
            doc["outputs"] = json::array();
            if (r.accepted) {
                for (int j = 0; j < t.label_count(); ++j)
                    doc["outputs"].push_back(
                        {{"label", t.presentation().edge_names()[static_cast<std::size_t>(j)]},
                         {"word", t.presentation().alphabet()->format_word(
                                      r.outputs[static_cast<std::size_t>(j)])}});
            }
            Output out(c_translate.out_path);
            out.stream() << doc.dump(2) << '\n';
            return r.accepted ? 0 : 1;
        }

        if (cmd_growth->parsed()) {
            auto t = ClassTTransducer::from_presentation(resolve_presentation(preset, bundle));
            auto g = growth(t, growth_n);
            std::ostringstream config;
            config << "preset=" << preset << bundle << " N=" << growth_n;
            Output out(c_growth.out_path);
            if (c_growth.format == "json") {
                json doc;
                doc["meta"] = meta_json("growth", config.str(), c_growth.seed);
                doc["rows"] = json::array();
                for (int n = 0; n <= growth_n; ++n)
                    doc["rows"].push_back(
                        {{"n", n},
                         {"b_n", to_string(g.ball_sizes[static_cast<std::size_t>(n)])},
                         {"frontier", to_string(g.frontier_sizes[static_cast<std::size_t>(n)])}});
                out.stream() << doc.dump(2) << '\n';
            } else {
                csv_header(out.stream(), "growth", config.str(), c_growth.seed);
                out.stream() << "n,b_n,frontier\n";
                for (int n = 0; n <= growth_n; ++n)
                    out.stream() << n << ',' << to_string(g.ball_sizes[static_cast<std::size_t>(n)])
                                 << ',' << to_string(g.frontier_sizes[static_cast<std::size_t>(n)])
                                 << '\n';
            }
            return 0;
        }

        if (cmd_folner->parsed()) {
            auto t = ClassTTransducer::from_presentation(resolve_presentation(preset, bundle));
            const Rational eps = parse_rational(folner_eps);
            FolnerReport report;
            if (folner_mode == "exact") {
                report = folner_exact(t, eps, folner_size_budget, folner_radius_budget);
            } else if (folner_family == "rectangles") {
                report = folner_upper(t, lamplighter_rectangle_family(t, folner_max_index), eps);
            } else {
                report = folner_upper(t, ball_family(t, folner_max_index), eps);
            }
            std::ostringstream config;
            config << "preset=" << preset << bundle << " epsilon=" << folner_eps
                   << " mode=" << folner_mode;
            if (folner_mode != "exact") config << " family=" << folner_family;
            Output out(c_folner.out_path);
            if (c_folner.format == "json") {
                json doc;
                doc["meta"] = meta_json("folner", config.str(), 0);
                doc["found"] = report.found;
                doc["epsilon"] = folner_eps;
                doc["note"] = report.note;
                if (report.found) {
                    doc["set_size"] = report.witness.size();
                    doc["boundary_size"] = report.boundary_size;
                    doc["ratio"] = rational_str(report.ratio);
                    if (folner_emit_set) {
                        doc["set"] = json::array();
                        for (const auto& word : report.witness)
                            doc["set"].push_back(t.presentation().alphabet()->format_word(word));
                    }
                }
                out.stream() << doc.dump(2) << '\n';
            } else {
                csv_header(out.stream(), "folner", config.str(), 0);
                out.stream() << "found,set_size,boundary_size,ratio_num,ratio_den,note\n";
                out.stream() << (report.found ? 1 : 0) << ',' << report.witness.size() << ','
                             << report.boundary_size << ','
                             << (report.found ? to_string(rat_num(report.ratio)) : "0") << ','
                             << (report.found ? to_string(rat_den(report.ratio)) : "1") << ',' << '"'
                             << report.note << '"' << '\n';
                if (folner_emit_set && report.found) {
                    for (const auto& word : report.witness)
                        out.stream() << "# member: " << t.presentation().alphabet()->format_word(word)
                                     << '\n';
                }
            }
            return report.found ? 0 : 1;
        }

        if (cmd_avg->parsed()) {
            auto t = ClassTTransducer::from_presentation(resolve_presentation(preset, bundle));
            Output out(c_avg.out_path);
            if (avg_mc) {
                auto est = avg_length_mc(t, avg_mc_n, avg_samples, c_avg.seed, c_avg.threads);
                std::ostringstream config;
                config << "preset=" << preset << bundle << " mc n=" << avg_mc_n
                       << " samples=" << avg_samples;
                if (c_avg.format == "json") {
                    json doc;
                    doc["meta"] = meta_json("avglen", config.str(), c_avg.seed);
                    doc["rows"] = json::array({{{"n", est.n},
                                                {"mean", est.mean},
                                                {"stderr", est.std_error},
                                                {"samples", est.samples}}});
                    out.stream() << doc.dump(2) << '\n';
                } else {
                    csv_header(out.stream(), "avglen", config.str(), c_avg.seed);
                    out.stream() << "n,mean,stderr,samples\n";
                    out.stream() << est.n << ',' << est.mean << ',' << est.std_error << ','
                                 << est.samples << '\n';
                }
                return 0;
            }
            auto records = avg_length_exact(t, avg_n);
            std::ostringstream config;
            config << "preset=" << preset << bundle << " N=" << avg_n;
            if (c_avg.format == "json") {
                json doc;
                doc["meta"] = meta_json("avglen", config.str(), c_avg.seed);
                doc["rows"] = json::array();
                for (const auto& r : records)
                    doc["rows"].push_back({{"n", r.n},
                                           {"l_n_num", to_string(rat_num(r.value))},
                                           {"l_n_den", to_string(rat_den(r.value))},
                                           {"l_n_float", to_double(r.value)},
                                           {"distinct_words", to_string(r.distinct_words)}});
                out.stream() << doc.dump(2) << '\n';
            } else {
                csv_header(out.stream(), "avglen", config.str(), c_avg.seed);
                out.stream() << "n,l_n_num,l_n_den,l_n_float\n";
                for (const auto& r : records)
                    out.stream() << r.n << ',' << to_string(rat_num(r.value)) << ','
                                 << to_string(rat_den(r.value)) << ',' << to_double(r.value) << '\n';
            }
            return 0;
        }

        if (cmd_drift->parsed())
            return run_walk_command("drift", walk_group, walk_gens, walk_grid, walk_samples, c_drift);
        if (cmd_range->parsed())
            return run_walk_command("range", walk_group, walk_gens, walk_grid, walk_samples, c_range);

        if (cmd_fit->parsed()) {
            CsvTable table = read_csv(fit_input);
            if (table.columns.size() < 2) throw ConfigError("input needs at least two columns");
            const std::size_t ycol = fit_y_col.empty() ? 1 : table.column_index(fit_y_col);
            json doc;
            doc["meta"] = meta_json("fit", "input=" + fit_input + " mode=" + fit_mode, 0);
            doc["mode"] = fit_mode;
            if (fit_mode == "recurrence" || fit_mode == "classify") {
                std::vector<BigInt> seq;
                for (const auto& row : table.rows) seq.emplace_back(row.at(ycol));
                if (fit_mode == "recurrence") {
                    auto fit = fit_recurrence(seq, fit_max_order, fit_holdout);
                    doc["found"] = fit.has_value();
                    if (fit) {
                        doc["order"] = fit->order;
                        doc["coefficients"] = json::array();
                        for (const auto& coef : fit->coefficients)
                            doc["coefficients"].push_back(rational_str(coef));
                        doc["fitted_prefix"] = fit->fitted_prefix;
                        doc["holdout_verified"] = fit->holdout_verified;
                    }
                } else {
                    auto cls = classify_growth(seq);
                    doc["classification"] = cls.kind == GrowthClass::Kind::polynomial ? "polynomial"
                                            : cls.kind == GrowthClass::Kind::exponential
                                                ? "exponential"
                                                : "inconclusive";
                    if (cls.kind == GrowthClass::Kind::polynomial) doc["degree"] = cls.degree;
                    if (cls.kind == GrowthClass::Kind::exponential) doc["rate"] = cls.rate;
                }
            } else {
                const std::size_t xcol = table.column_index(fit_x_col);
                std::vector<double> xs, ys;
                for (const auto& row : table.rows) {
                    xs.push_back(std::stod(row.at(xcol)));
                    ys.push_back(std::stod(row.at(ycol)));
                }
                std::optional<std::pair<std::size_t, std::size_t>> window;
                if (!fit_window.empty()) {
                    auto grid = parse_grid(fit_window);
                    if (grid.size() != 2) throw ConfigError("--window needs 'begin,end'");
                    window = {static_cast<std::size_t>(grid[0]), static_cast<std::size_t>(grid[1])};
                }
                auto fit = fit_power(xs, ys, window);
                doc["exponent"] = fit.exponent;
                doc["log_intercept"] = fit.log_intercept;
                doc["window_begin"] = fit.window_begin;
                doc["window_end"] = fit.window_end;
                doc["residual_rms"] = fit.residual_rms;
            }
            Output out(c_fit.out_path);
            out.stream() << doc.dump(2) << '\n';
            return 0;
        }

        if (cmd_ball->parsed()) {
            Output out(c_ball.out_path);
            std::ostringstream config;
            config << "group=" << ball_group << " radius=" << ball_radius;
            std::vector<std::size_t> sizes;
            with_group(ball_group, ball_gens,
                       [&](const auto& g) { sizes = ball(g, ball_radius).ball_sizes; });
            if (c_ball.format == "json") {
                json doc;
                doc["meta"] = meta_json("ball", config.str(), 0);
                doc["sizes"] = sizes;
                out.stream() << doc.dump(2) << '\n';
            } else {
                csv_header(out.stream(), "ball", config.str(), 0);
                out.stream() << "r,ball_size\n";
                for (std::size_t r = 0; r < sizes.size(); ++r)
                    out.stream() << r << ',' << sizes[r] << '\n';
            }
            return 0;
        }

        if (cmd_iso->parsed()) {
            GraphPresentation p = load_preset(preset);
            bool ok = false;
            std::string detail;
            std::size_t vertices = 0;
            auto run = [&](const auto& g) {
                auto iso = isomorphic_to_oracle(p, p.base_word(), g, iso_radius);
                ok = iso.ok;
                detail = iso.detail;
                vertices = iso.vertices_checked;
            };
            if (preset == "z1") run(ZmGroup(1));
            else if (preset == "z2") run(ZmGroup(2));
            else if (preset == "z3") run(ZmGroup(3));
            else if (preset == "f2") run(FreeGroup(2));
            else if (preset == "f3") run(FreeGroup(3));
            else if (preset == "lamplighter") run(LamplighterGroup(LamplighterGroup::GenSet::S1Prime));
            else if (preset == "lamplighter-s1") run(LamplighterGroup(LamplighterGroup::GenSet::S1));
            else throw ConfigError("no oracle for preset '" + preset + "'");
            Output out(c_iso.out_path);
            if (c_iso.format == "json") {
                json doc;
                doc["meta"] = meta_json("iso-check", "preset=" + preset, 0);
                doc["ok"] = ok;
                doc["radius"] = iso_radius;
                doc["vertices_checked"] = vertices;
                doc["detail"] = detail;
                out.stream() << doc.dump(2) << '\n';
            } else {
                out.stream() << "iso-check preset=" << preset << " radius=" << iso_radius << ": "
                             << (ok ? "PASS" : "FAIL") << " (" << vertices << " vertices)";
                if (!detail.empty()) out.stream() << ' ' << detail;
                out.stream() << '\n';
            }
            return ok ? 0 : 1;
        }

        throw ConfigError("no subcommand given");
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
