#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qcat/qcat.hpp"

namespace {

constexpr int kInputError = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw qcat::InputError(qcat::ErrorCode::MalformedDocument, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string base_name(const std::string& path) {
    const auto slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

void describe(const qcat::InstanceDoc& doc, std::ostream& out) {
    out << "kind     " << to_string(doc.kind) << "\n";
    out << "tensor   " << doc.tensor.name() << "\n";
    out << "grid     " << (doc.grid ? std::to_string(*doc.grid) : "-") << "\n";
    if (doc.poset) out << "points   " << doc.poset->size() << "\n";
    if (doc.target) out << "target   " << doc.target->size() << " points\n";
    if (doc.category) {
        const auto& x = *doc.category;
        out << "points   " << x.size() << "\n";
        out << "separated " << (qcat::is_separated(x) ? "yes" : "no") << "\n";
        out << "two-valued " << (qcat::is_two_valued(x) ? "yes" : "no") << "\n";
        for (std::size_t i = 0; i < x.size(); ++i) out << "  " << x.label(i) << "  " << qcat::table_str(x.a[i]) << "\n";
    }
    if (doc.relation) out << "relation " << qcat::relation_str(*doc.relation) << "\n";
    if (!doc.generators.empty()) {
        out << "generators\n";
        for (const auto& g : doc.generators) out << "  " << qcat::table_str(g) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for [0,1]-enriched categories, the Vietoris monad and the duality functor C"};
    app.require_subcommand(1);

    qcat::SuiteConfig cfg;
    std::string tnorm = "lukasiewicz";
    std::string format = "table";
    std::string instance_path;
    bool no_timing = false;

    auto* verify = app.add_subcommand("verify", "Run an audit suite");
    std::string suites_help = "Suite name:";
    for (const auto& s : qcat::suite_names()) suites_help += " " + s;
    verify->add_option("--suite", cfg.suite, suites_help)->required();
    verify->add_option("--tnorm", tnorm, "min | product | lukasiewicz | ordinal:a,b,inner;...")->capture_default_str();
    verify->add_option("--grid", cfg.grid, "Grid size n of Q_n")->capture_default_str();
    verify->add_option("--max-size", cfg.max_size, "Largest carrier in sweeps")->capture_default_str();
    verify->add_option("--seed", cfg.seed, "Seed for sampled modes")->capture_default_str();
    verify->add_option("--corpus", cfg.corpus, "Sample count")->capture_default_str();
    verify->add_option("--report", format, "table | json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
    verify->add_option("--instance", instance_path, "Run on one instance file instead of a sweep");
    verify->add_flag("--no-timing", no_timing, "Leave out the timing section");

    std::string inspect_path;
    auto* inspect = app.add_subcommand("inspect", "Validate an instance file and describe it");
    inspect->add_option("file", inspect_path, "Instance file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (*inspect) {
            describe(qcat::parse_instance(read_file(inspect_path)), std::cout);
            return 0;
        }
        cfg.tnorm = qcat::TNormSpec::parse(tnorm);
        if (!instance_path.empty()) {
            cfg.instance = qcat::parse_instance(read_file(instance_path));
            cfg.instance_name = base_name(instance_path);
            if (verify->count("--tnorm") == 0) cfg.tnorm = cfg.instance->tensor;
            else if (cfg.tnorm.name() != cfg.instance->tensor.name())
                throw qcat::InputError(qcat::ErrorCode::MalformedDocument,
                                       "--tnorm " + cfg.tnorm.name() + " disagrees with the instance tensor " +
                                           cfg.instance->tensor.name());
            if (cfg.instance->grid) cfg.grid = *cfg.instance->grid;
        }
        const auto result = qcat::run_suite(cfg);
        std::cout << qcat::emit_report(result, format == "json" ? qcat::ReportFormat::Json : qcat::ReportFormat::Table,
                                       !no_timing);
        return qcat::exit_code(result);
    } catch (const qcat::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
}
