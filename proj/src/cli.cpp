#include "thickset/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "thickset/json_io.hpp"

namespace thickset {

namespace {

using io::json;

std::vector<CatalogEntry> full_catalog() {
    std::vector<CatalogEntry> entries = builtin_catalog();
    const char* dir = std::getenv("THICKSET_CATALOG_DIR");
    if (!dir || !std::filesystem::is_directory(dir))
        return entries;
    std::vector<std::filesystem::path> files;
    for (const auto& item : std::filesystem::directory_iterator(dir))
        if (item.path().extension() == ".json")
            files.push_back(item.path());
    std::sort(files.begin(), files.end());
    for (const auto& path : files) {
        std::ifstream in(path);
        io::PosetFile file = io::poset_from_json(json::parse(in));
        entries.push_back({path.stem().string(), file.poset, file.cone_point});
    }
    return entries;
}

struct ModelChoice {
    ModelRef model;
    std::optional<std::string> cone_point;
};

ModelChoice resolve_model(const std::string& model_name, const std::string& poset_path) {
    if (model_name.empty() == poset_path.empty())
        throw CLI::ValidationError("give exactly one of --model and --poset");
    if (!poset_path.empty()) {
        std::ifstream in(poset_path);
        if (!in)
            throw io::JsonFormatError("cannot read poset file '" + poset_path + "'");
        io::PosetFile file = io::poset_from_json(json::parse(in));
        return {ModelRef::finite(file.poset), file.cone_point};
    }
    if (model_name == "Z")
        return {ModelRef::spec_z(), std::nullopt};
    for (const auto& entry : full_catalog())
        if (entry.name == model_name)
            return {ModelRef::finite(entry.poset), entry.cone_point};
    throw UnknownCatalogEntry("no catalog model named '" + model_name + "'");
}

DecompositionMode resolve_mode(const std::string& mode_name, const ModelChoice& choice) {
    if (mode_name == "plain")
        return DecompositionMode::plain();
    if (mode_name == "punctured") {
        if (!choice.cone_point)
            throw InvalidArgument("punctured mode needs a model with a cone point");
        return DecompositionMode::punctured(*choice.cone_point);
    }
    throw CLI::ValidationError("--mode must be plain or punctured");
}

// --input and --support take a file path or inline JSON.
std::string read_payload(const std::string& spec) {
    if (!spec.empty() && (spec[0] == '{' || spec[0] == '[' || spec[0] == '"' || spec == "whole"))
        return spec == "whole" ? "\"whole\"" : spec;
    std::ifstream in(spec);
    if (!in)
        throw io::JsonFormatError("cannot read input file '" + spec + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_payload(const std::string& spec) { return json::parse(read_payload(spec)); }

void emit(std::ostream& out, const json& payload) { out << payload.dump(2) << "\n"; }

void run_decompose(std::ostream& out, const std::string& model_name, const std::string& poset_path,
                   const std::string& mode_name, const std::string& support_spec,
                   const std::string& format) {
    ModelChoice choice = resolve_model(model_name, poset_path);
    DecompositionMode mode = resolve_mode(mode_name, choice);
    ThickSupport s = io::support_from_json(choice.model, parse_payload(support_spec));
    if (format == "dot") {
        out << to_dot(support_graph(s, mode));
        return;
    }
    if (format != "json")
        throw CLI::ValidationError("decompose supports --format json|dot");
    json payload = io::decomposition_to_json(ks_decompose(s, mode));
    payload["mode"] = mode.is_punctured() ? "punctured" : "plain";
    payload["support"] = io::support_to_json(s);
    emit(out, payload);
}

void run_enumerate(std::ostream& out, const std::string& model_name, const std::string& poset_path,
                   bool nonempty, const std::string& format) {
    ModelChoice choice = resolve_model(model_name, poset_path);
    std::vector<ThickSupport> supports = enumerate_thick_supports(choice.model, nonempty);

    std::vector<json> rows;
    for (const ThickSupport& s : supports) {
        json row;
        row["points"] = io::support_to_json(s)["points"];
        json flags;
        flags["plain"] = is_indecomposable(s, DecompositionMode::plain());
        if (choice.cone_point)
            flags["punctured"] =
                is_indecomposable(s, DecompositionMode::punctured(*choice.cone_point));
        row["indecomposable"] = std::move(flags);
        rows.push_back(std::move(row));
    }

    if (format == "json") {
        emit(out, json{{"supports", rows}});
        return;
    }
    if (format != "table")
        throw CLI::ValidationError("enumerate supports --format json|table");
    out << "support\tplain" << (choice.cone_point ? "\tpunctured" : "") << "\n";
    for (const json& row : rows) {
        std::string pts = "{";
        for (const auto& p : row["points"]) {
            if (pts.size() > 1)
                pts += ",";
            pts += p.get<std::string>();
        }
        pts += "}";
        out << pts << "\t" << (row["indecomposable"]["plain"].get<bool>() ? "true" : "false");
        if (choice.cone_point)
            out << "\t"
                << (row["indecomposable"]["punctured"].get<bool>() ? "true" : "false");
        out << "\n";
    }
}

void run_verify(std::ostream& out, const std::string& model_name, const std::string& poset_path,
                const std::string& input_spec, int& status) {
    ModelChoice choice = resolve_model(model_name, poset_path);
    json payload = parse_payload(input_spec);
    if (!payload.is_object() || !payload.contains("support") || !payload.contains("components") ||
        !payload.contains("mode"))
        throw io::JsonFormatError("verify expects the JSON emitted by decompose");

    DecompositionMode mode = resolve_mode(payload.at("mode").get<std::string>(), choice);
    ThickSupport s = io::support_from_json(choice.model, payload.at("support"));
    std::vector<ThickSupport> components;
    for (const auto& c : payload.at("components"))
        components.push_back(io::support_from_json(choice.model, c));

    std::string reason;
    try {
        if (!(join_supports(choice.model, components, mode) == s))
            reason = "components do not join back to the support";
        for (const auto& c : components)
            if (reason.empty() && !is_indecomposable(c, mode))
                reason = "a listed component is not indecomposable";
        if (reason.empty() && !(ks_decompose(s, mode).components ==
                                components))
            reason = "components differ from the canonical decomposition";
    } catch (const Error& e) {
        reason = e.what();
    }
    if (reason.empty()) {
        emit(out, json{{"ok", true}});
    } else {
        emit(out, json{{"ok", false}, {"reason", reason}});
        status = 1;
    }
}

void run_complex(std::ostream& out, const std::string& verb, const std::string& input_spec,
                 const std::string& support_spec) {
    PerfectComplexZ c = io::complex_from_json(parse_payload(input_spec));
    if (verb == "homology") {
        validate(c);
        emit(out, io::homology_to_json(homology(c)));
    } else if (verb == "support") {
        emit(out, io::support_to_json(support(c)));
    } else if (verb == "split") {
        emit(out, io::split_to_json(split_complex(c)));
    } else if (verb == "dual") {
        emit(out, io::complex_to_json(dual(c)));
    } else if (verb == "k0") {
        if (support_spec.empty())
            throw CLI::ValidationError("complex k0 needs --support for the ambient primes");
        ThickSupport ambient =
            io::support_from_json(ModelRef::spec_z(), parse_payload(support_spec));
        emit(out, io::k0_to_json(k0_class(c, ambient)));
    }
}

void run_spectra(std::ostream& out, const std::string& verb, const std::string& input_spec) {
    json payload = parse_payload(input_spec);
    if (verb == "decompose") {
        json components = json::array();
        for (const SpectraThick& piece : decompose_spectra(io::spectra_from_json(payload)))
            components.push_back(io::spectra_to_json(piece));
        emit(out, json{{"components", std::move(components)}});
        return;
    }
    if (!payload.is_object() || !payload.contains("a") || !payload.contains("b"))
        throw io::JsonFormatError("spectra " + verb + " expects {\"a\": ..., \"b\": ...}");
    SpectraThick a = io::spectra_from_json(payload.at("a"));
    SpectraThick b = io::spectra_from_json(payload.at("b"));
    if (verb == "intersect")
        emit(out, io::spectra_to_json(intersect_spectra(a, b)));
    else
        emit(out, json{{"contains", contains(a, b)}});
}

void run_catalog_list(std::ostream& out, const std::string& format) {
    json models = json::array();
    for (const auto& entry : full_catalog()) {
        json row;
        row["name"] = entry.name;
        row["elements"] = entry.poset->size();
        row["cone_point"] = entry.cone_point ? json(*entry.cone_point) : json(nullptr);
        models.push_back(std::move(row));
    }
    if (format == "json") {
        emit(out, json{{"models", models}});
        return;
    }
    if (format != "table")
        throw CLI::ValidationError("catalog list supports --format json|table");
    out << "name\telements\tcone_point\n";
    for (const json& row : models)
        out << row["name"].get<std::string>() << "\t" << row["elements"].get<std::size_t>()
            << "\t" << (row["cone_point"].is_null() ? "-" : row["cone_point"].get<std::string>())
            << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Krull-Schmidt decompositions of thick supports over prime spectra"};
    app.name("thickset");
    app.require_subcommand(1);

    std::string model_name, poset_path, mode_name = "plain", support_spec, input_spec,
                              format = "json";
    bool nonempty = false;
    int status = 0;

    auto add_model_flags = [&](CLI::App* cmd) {
        cmd->add_option("--model", model_name, "catalog model name, or Z for Spec Z");
        cmd->add_option("--poset", poset_path, "poset JSON file");
    };

    CLI::App* decompose = app.add_subcommand("decompose", "Krull-Schmidt decompose a support");
    add_model_flags(decompose);
    decompose->add_option("--mode", mode_name, "plain or punctured");
    decompose->add_option("--support", support_spec, "support JSON (inline or file)")->required();
    decompose->add_option("--format", format, "json or dot");
    decompose->callback(
        [&] { run_decompose(out, model_name, poset_path, mode_name, support_spec, format); });

    CLI::App* enumerate = app.add_subcommand("enumerate", "list all thick supports of a poset");
    add_model_flags(enumerate);
    enumerate->add_flag("--nonempty", nonempty, "skip the empty support");
    enumerate->add_option("--format", format, "json or table");
    enumerate->callback([&] { run_enumerate(out, model_name, poset_path, nonempty, format); });

    CLI::App* verify = app.add_subcommand("verify", "re-check a decompose output");
    add_model_flags(verify);
    verify->add_option("--input", input_spec, "decompose JSON (inline or file)")->required();
    verify->callback([&] { run_verify(out, model_name, poset_path, input_spec, status); });

    CLI::App* complex_cmd = app.add_subcommand("complex", "perfect-complex pipelines");
    complex_cmd->require_subcommand(1);
    for (const char* verb : {"homology", "support", "split", "k0", "dual"}) {
        CLI::App* sub = complex_cmd->add_subcommand(verb);
        sub->add_option("--input", input_spec, "complex JSON (inline or file)")->required();
        if (std::string(verb) == "k0")
            sub->add_option("--support", support_spec, "ambient support over Spec Z");
        sub->callback([&, verb] { run_complex(out, verb, input_spec, support_spec); });
    }

    CLI::App* spectra = app.add_subcommand("spectra", "finite-spectra lattice operations");
    spectra->require_subcommand(1);
    for (const char* verb : {"decompose", "intersect", "contains"}) {
        CLI::App* sub = spectra->add_subcommand(verb);
        sub->add_option("--input", input_spec, "payload JSON (inline or file)")->required();
        sub->callback([&, verb] { run_spectra(out, verb, input_spec); });
    }

    CLI::App* catalog = app.add_subcommand("catalog", "built-in model catalog");
    CLI::App* list = catalog->add_subcommand("list");
    list->add_option("--format", format, "json or table");
    list->callback([&] { run_catalog_list(out, format); });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const io::JsonFormatError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const json::parse_error& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return status;
}

}  // namespace thickset
