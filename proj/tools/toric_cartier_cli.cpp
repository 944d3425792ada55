#include "toric/error.hpp"
#include "toric/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw toric::Error(toric::ErrorKind::ParseError, "cannot read instance file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fixed ideals of toric Cartier algebras"};
    app.require_subcommand(1);

    std::string instance_path, out_path;
    toric::CommandOptions opt;
    std::int64_t n = 0, margin = 0;

    const char *commands[][2] = {
        {"enumerate", "list every fixed ideal with its generating faces"},
        {"verify", "check whether --ideal is fixed"},
        {"non-lc", "the non-LC ideal of the instance"},
        {"test-ideal", "the smallest nonzero fixed ideal"},
        {"stable-image", "the stable image of phi and its chain"},
        {"cross-validate", "run every engine and oracle and compare"},
        {"plot", "SVG panels of the fixed ideals (dimension 2)"},
    };
    for (auto &c : commands) {
        auto *sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--instance", instance_path, "instance file")->required();
        sub->add_option("--ideal", opt.ideal, "ideal such as [(1,1),(1,2)], 0 or R");
        sub->add_option("--N", n, "largest exponent n in the Cartier sum");
        sub->add_option("--margin", margin, "oracle box margin in lattice units");
        sub->add_option("--out", out_path, "write the result here instead of stdout");
        sub->add_option("--format", opt.format, "doc or svg")->check(CLI::IsMember({"doc", "svg"}));
        sub->add_flag("--timing", opt.timing, "include wall-clock time in the document");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto *sub = app.get_subcommands().front();
    if (sub->count("--N")) opt.N = n;
    if (sub->count("--margin")) opt.margin = margin;

    try {
        auto inst = toric::build_instance(toric::parse_instance(read_file(instance_path)));
        auto res = toric::run_command(sub->get_name(), inst, opt);
        if (out_path.empty()) {
            std::cout << res.output;
        } else {
            std::ofstream out(out_path);
            out << res.output;
            if (!out) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return 2;
            }
        }
        return res.exit_code;
    } catch (const toric::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
