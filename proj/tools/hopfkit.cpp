#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "hopfkit/builtins.hpp"

namespace fs = std::filesystem;
using hopfkit::io::json;

namespace {

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_atomic(const fs::path& target, const std::string& data) {
    fs::create_directories(target.parent_path());
    std::random_device rd;
    const fs::path tmp = target.parent_path() / (target.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary);
        out << data;
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, target);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_atomic(fs::absolute(out_path), text);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with finite-dimensional Hopf algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "json";
    std::string cache_dir;
    std::string out_path;
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--cache-dir", cache_dir, "report cache directory (HOPFKIT_CACHE overrides)");
    app.add_option("--out", out_path, "write the report here instead of stdout");
    app.add_flag_function("--version", [](std::int64_t) {
        std::cout << hopfkit::cli::kVersion << "\n";
        std::exit(0);
    }, "print the version");

    hopfkit::cli::Invocation inv;
    std::vector<std::string> inputs;

    auto* verify = app.add_subcommand("verify", "check the axioms of a Hopf algebra, map, comodule algebra or bimodule");
    verify->add_option("input", inputs, "file or builtin:DESCRIPTOR")->required()->expected(1);

    auto* invariants = app.add_subcommand("invariants", "integrals, modular function, distinguished grouplike");
    invariants->add_option("hopf", inputs, "file or builtin:DESCRIPTOR")->required()->expected(1);
    std::vector<std::string> pivots;
    invariants->add_option("--pivot", pivots, "candidate pivotal element (repeatable)");

    auto* bi = app.add_subcommand("builtin", "emit the spec file of a builtin object");
    std::string bname;
    std::vector<std::string> params;
    bi->add_option("name", bname, "builtin name or full descriptor")->required();
    bi->add_option("--param", params, "parameter k=v (repeatable)");

    auto* classify = app.add_subcommand("classify-map", "Frobenius / tensor-Frobenius classification of a map");
    classify->add_option("map", inputs, "file or builtin:DESCRIPTOR")->required()->expected(1);
    std::string perfect = "auto";
    classify->add_option("--perfect", perfect, "auto|split|assert|skip")
        ->check(CLI::IsMember({"auto", "split", "assert", "skip"}));

    auto* ff = app.add_subcommand("f-frobenius", "search for an f-Frobenius element of a comodule algebra");
    ff->add_option("inputs", inputs, "map and comodule algebra")->required()->expected(2);
    std::uint64_t seed = 0;
    int attempts = 64;
    ff->add_option("--seed", seed, "seed of the random-combination search");
    ff->add_option("--attempts", attempts, "number of random combinations")->check(CLI::NonNegativeNumber);

    auto* nat = app.add_subcommand("nat", "internal natural transformation algebra and its Frobenius form");
    nat->add_option("inputs", inputs, "Hopf algebra and comodule algebra")->required()->expected(2);
    std::string bimodule;
    std::string pivot;
    std::string form = "auto";
    nat->add_option("--bimodule", bimodule, "bimodule P (default P = L)");
    nat->add_option("--pivot", pivot, "pivotal element for the symmetry check");
    nat->add_option("--form", form, "auto|integral|right-integral|cointegral|yd");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (bi->parsed()) {
            emit(hopfkit::io::pretty(hopfkit::cli::builtin_document(bname, params)), out_path);
            return 0;
        }
        inv.command = app.get_subcommands().front()->get_name();
        inv.inputs = inputs;
        if (invariants->parsed() && !pivots.empty()) inv.options["pivot"] = pivots;
        if (classify->parsed()) inv.options["perfect"] = perfect;
        if (ff->parsed()) {
            inv.options["seed"] = seed;
            inv.options["attempts"] = attempts;
        }
        if (nat->parsed()) {
            if (!bimodule.empty()) inv.options["bimodule"] = bimodule;
            if (!pivot.empty()) inv.options["pivot"] = pivot;
            inv.options["form"] = form;
        }

        if (const char* env = std::getenv("HOPFKIT_CACHE"); env != nullptr && *env != '\0') cache_dir = env;
        fs::path cached;
        if (!cache_dir.empty()) {
            cached = fs::path(cache_dir) / (hopfkit::cli::cache_key(inv) + ".json");
            if (fs::exists(cached)) {
                const json report = hopfkit::io::parse_json_text(read_file(cached), cached.string());
                emit(hopfkit::cli::render(report, format), out_path);
                return hopfkit::cli::exit_code(report);
            }
        }
        const json report = hopfkit::cli::run_command(inv);
        if (!cached.empty()) write_atomic(cached, hopfkit::cli::render(report, "json"));
        emit(hopfkit::cli::render(report, format), out_path);
        const int code = hopfkit::cli::exit_code(report);
        if (code != 0) std::cerr << "hopfkit: " << report.at("status").get<std::string>() << "\n";
        return code;
    } catch (const hopfkit::io::ParseError& e) {
        std::cerr << "hopfkit: parse error: " << e.what() << "\n";
        return hopfkit::cli::kUsage;
    } catch (const std::exception& e) {
        std::cerr << "hopfkit: " << e.what() << "\n";
        return hopfkit::cli::kUsage;
    }
}
