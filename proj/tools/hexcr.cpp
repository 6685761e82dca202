// hexcr: verify, search for, classify and render distance-regular
// colourings of the hexagonal grid.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hexcr/arrays.hpp"
#include "hexcr/catalog.hpp"
#include "hexcr/coloring.hpp"
#include "hexcr/hexcol.hpp"
#include "hexcr/render.hpp"
#include "hexcr/search.hpp"

namespace fs = std::filesystem;
using namespace hexcr;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUndecided = 2;
constexpr int kUsage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntersectionArray array_arg(const std::string& text) {
    try {
        return parse_array(text);
    } catch (const ArrayParseError& e) {
        throw UsageError("bad array '" + text + "': " + e.what());
    }
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_verify(const std::string& file) {
    const HexcolFile f = load_hexcol(file);
    const MatrixOrWitness m = parameter_matrix(f.coloring);
    if (const auto* w = std::get_if<NotPerfect>(&m)) {
        std::cout << "FAIL not perfect: " << describe(*w, f.coloring.colors()) << "\n";
        return kFailed;
    }
    const auto& matrix = std::get<ParameterMatrix>(m);
    const auto measured = as_intersection_array(matrix);
    if (!measured) {
        std::cout << "FAIL perfect but not an intersection array:\n" << to_string(matrix) << "\n";
        return kFailed;
    }
    if (*measured != f.array) {
        std::cout << "FAIL file claims " << format_array(f.array) << " but the colouring has " << format_array(*measured)
                  << "\n";
        return kFailed;
    }
    if (!is_distance_regular(f.coloring)) {
        std::cout << "FAIL colour classes are not the distance layers of class 0\n";
        return kFailed;
    }
    std::cout << format_array(f.array) << "\n";
    return kOk;
}

struct ClassifyArgs {
    int colors = 0;
    Budgets budgets;
    bool json = false;
    int threads = 1;
    std::string witness_dir;
};

std::string file_stem(const IntersectionArray& a) {
    std::string s = format_array(a);
    return s.substr(1, s.size() - 2);
}

int cmd_classify(const ClassifyArgs& args) {
    if (args.colors < 2 || args.colors > kMaxColors) throw UsageError("--colors must be in 2..10");
    const Classification c = classify(args.colors, args.budgets, args.threads);
    std::vector<std::string> files;
    if (!args.witness_dir.empty()) {
        fs::create_directories(args.witness_dir);
        for (const auto& e : c.entries) {
            std::string path;
            if (const auto* f = std::get_if<Feasible>(&e.outcome)) {
                path = (fs::path(args.witness_dir) / (file_stem(e.array) + ".hexcol")).string();
                save_hexcol(path, e.array, f->witness);
            }
            files.push_back(path);
        }
    }
    std::cout << (args.json ? format_report_jsonl(c, files) : format_report(c, files));
    return c.count_undecided() ? kUndecided : kOk;
}

int cmd_search(const std::string& array_text, const Budgets& budgets, const std::string& out) {
    const IntersectionArray a = array_arg(array_text);
    const SearchOutcome o = decide(a, budgets);
    if (const auto* f = std::get_if<Feasible>(&o)) {
        if (out.empty()) {
            std::cout << format_hexcol(a, f->witness);
        } else {
            save_hexcol(out, a, f->witness);
            std::cout << "FEASIBLE " << out << "\n";
        }
        return kOk;
    }
    std::cout << status_word(o) << "\n";
    return std::holds_alternative<Undecided>(o) ? kUndecided : kOk;
}

int cmd_refute(const std::string& array_text, int radius) {
    const IntersectionArray a = array_arg(array_text);
    if (const auto r = refute(a, radius)) {
        std::cout << *r << "\n";
        return kOk;
    }
    std::cout << "not refuted up to radius " << radius << "\n";
    return kUndecided;
}

int cmd_equiv(const std::string& f1, const std::string& f2, bool allow_swap) {
    const PeriodicColoring c1 = load_hexcol(f1).coloring;
    const PeriodicColoring c2 = load_hexcol(f2).coloring;
    if (const auto phi = find_equivalence(c1, c2)) {
        std::cout << "equivalent target=" << to_string(phi->target) << " perm=" << to_string(phi->perm) << "\n";
        return kOk;
    }
    if (allow_swap && c1.colors() == c2.colors()) {
        if (const auto phi = find_equivalence(reverse_colors(c1), c2)) {
            std::cout << "equivalent after colour reversal target=" << to_string(phi->target)
                      << " perm=" << to_string(phi->perm) << "\n";
            return kOk;
        }
    }
    std::cout << "nonequivalent\n";
    return kFailed;
}

int cmd_shift(const std::string& file, const std::string& pattern, const std::string& out) {
    const HexcolFile f = load_hexcol(file);
    ShiftSelection sel;
    try {
        sel = ShiftSelection::from_pattern(pattern, f.coloring);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    PeriodicColoring shifted = f.coloring;
    try {
        shifted = shift_cosets(f.coloring, sel);
    } catch (const ShiftPreconditionError& e) {
        std::cerr << "hexcr: " << e.what() << "\n";
        return kFailed;
    }
    const MatrixOrWitness before = parameter_matrix(f.coloring);
    const MatrixOrWitness after = parameter_matrix(shifted);
    if (!std::holds_alternative<ParameterMatrix>(after) || std::get<ParameterMatrix>(after) != std::get<ParameterMatrix>(before)) {
        std::cerr << "hexcr: shifted colouring has a different parameter matrix\n";
        return kFailed;
    }
    write_text(out, format_hexcol(f.array, shifted));
    std::cerr << (equivalent(shifted, f.coloring) ? "equivalent to the input\n" : "nonequivalent to the input\n");
    return kOk;
}

int cmd_render(const std::string& file, const std::string& format, const std::string& window, const std::string& out) {
    const PeriodicColoring c = load_hexcol(file).coloring;
    Window w;
    if (!window.empty()) {
        try {
            w = parse_window(window);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    std::string text;
    try {
        text = render(c, format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii, w);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (format == "ascii") text += "\n";
    write_text(out, text);
    return kOk;
}

int cmd_catalog(const std::string& action, const std::string& dir, int threads) {
    if (action == "list") {
        for (const auto& name : list_catalog(dir)) std::cout << name << "\n";
        return kOk;
    }
    const CatalogReport report = verify_catalog(load_catalog(dir), threads);
    std::cout << format_catalog_report(report);
    return report.ok() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-regular colourings of the hexagonal grid"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hexcr 1.0");

    std::string file, file2, array_text, out, pattern, format = "ascii", window, action;
    std::string data_dir = default_data_dir().string();
    ClassifyArgs cargs;
    Budgets budgets;
    int radius = 6;
    int threads = 1;
    bool allow_swap = false;

    auto* verify = app.add_subcommand("verify", "Check a HEXCOL file against its claimed array");
    verify->add_option("FILE", file, "HEXCOL file")->required();

    auto* cls = app.add_subcommand("classify", "Classify every reversal class of arrays with K colours");
    cls->add_option("--colors", cargs.colors, "Number of colours K")->required();
    cls->add_option("--refute-radius", cargs.budgets.max_radius, "Largest ball radius tried")->capture_default_str();
    cls->add_option("--torus-cells", cargs.budgets.cell_max, "Largest torus (H*W) tried")->capture_default_str();
    cls->add_option("--quick-cells", cargs.budgets.quick_cells, "Torus cells tried before refutation")->capture_default_str();
    cls->add_option("--threads", cargs.threads, "Worker threads")->capture_default_str()->check(CLI::Range(1, 256));
    cls->add_option("--witness-dir", cargs.witness_dir, "Write each witness as a HEXCOL file here");
    cls->add_flag("--json", cargs.json, "JSON-lines report");

    auto* search = app.add_subcommand("search", "Find a periodic witness or refute an array");
    search->add_option("ARRAY", array_text, "Array, e.g. \"[03-102-30]\"")->required();
    search->add_option("--torus-cells", budgets.cell_max, "Largest torus (H*W) tried")->capture_default_str();
    search->add_option("--refute-radius", budgets.max_radius, "Largest ball radius tried")->capture_default_str();
    search->add_option("-o,--output", out, "Write the witness here instead of stdout");

    auto* ref = app.add_subcommand("refute", "Search for a ball radius with no consistent colouring");
    ref->add_option("ARRAY", array_text, "Array")->required();
    ref->add_option("--radius", radius, "Largest radius tried")->capture_default_str()->check(CLI::Range(1, 64));

    auto* eq = app.add_subcommand("equiv", "Decide whether two colourings differ by a grid automorphism");
    eq->add_option("FILE1", file, "HEXCOL file")->required();
    eq->add_option("FILE2", file2, "HEXCOL file")->required();
    eq->add_flag("--allow-color-swap", allow_swap, "Also accept colour reversal i -> k-1-i");

    auto* sh = app.add_subcommand("shift", "Shift selected yz coset lines");
    sh->add_option("FILE", file, "HEXCOL file")->required();
    sh->add_option("--select", pattern, "0/1 pattern; character j selects lines c-r = 2j mod 2*len")->required();
    sh->add_option("-o,--output", out, "Output HEXCOL file")->required();

    auto* rd = app.add_subcommand("render", "Draw a colouring");
    rd->add_option("FILE", file, "HEXCOL file")->required();
    rd->add_option("--format", format, "ascii or svg")->check(CLI::IsMember({"ascii", "svg"}))->capture_default_str();
    rd->add_option("--window", window, "RxC window, at least one domain");
    rd->add_option("-o,--output", out, "Output file (default stdout)");

    auto* cat = app.add_subcommand("catalog", "List or verify the shipped colourings");
    cat->add_option("ACTION", action, "list or verify")->required()->check(CLI::IsMember({"list", "verify"}));
    cat->add_option("--data", data_dir, "Catalog directory")->capture_default_str();
    cat->add_option("--threads", threads, "Worker threads")->capture_default_str()->check(CLI::Range(1, 256));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*verify) return cmd_verify(file);
        if (*cls) return cmd_classify(cargs);
        if (*search) return cmd_search(array_text, budgets, out);
        if (*ref) return cmd_refute(array_text, radius);
        if (*eq) return cmd_equiv(file, file2, allow_swap);
        if (*sh) return cmd_shift(file, pattern, out);
        if (*rd) return cmd_render(file, format, window, out);
        if (*cat) return cmd_catalog(action, data_dir, threads);
    } catch (const UsageError& e) {
        std::cerr << "hexcr: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hexcr: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}
