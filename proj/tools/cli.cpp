#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include <diffcyc/diffcyc.hpp>

namespace diffcyc::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct InputOptions {
    std::string input;
    std::string registry_dir;
    std::optional<int> n;
    std::optional<int> index;
};

struct OutputOptions {
    std::string format = "text";
    std::string out;
};

std::filesystem::path registry_path(const InputOptions& in) {
    return in.registry_dir.empty() ? default_registry_path() : std::filesystem::path(in.registry_dir);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read " + path.string());
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

CyclicComplex resolve_complex(const InputOptions& in) {
    const bool has_text = !in.input.empty();
    const bool has_address = in.n.has_value() || in.index.has_value();
    if (has_text == has_address) throw UsageError("give exactly one input: --input, or --n together with --index");
    if (has_address) {
        if (!in.n || !in.index) throw UsageError("--n and --index must be given together");
        return registry(registry_path(in), *in.n, *in.index);
    }

    const std::string text = trim(in.input);
    static const std::regex address(R"((\d+):(\d+))");
    std::smatch m;
    if (std::regex_match(text, m, address)) return registry(registry_path(in), std::stoi(m[1]), std::stoi(m[2]));
    if (!text.empty() && (text.front() == '(' || text.front() == '{')) return parse_complex(strip_table_markup(text));
    if (std::filesystem::exists(text)) return parse_complex(strip_table_markup(trim(read_text_file(text))));
    throw UsageError("input '" + text + "' is neither complex text, an n:index address, nor a readable file");
}

SeriesSpec resolve_spec(const std::string& spec) {
    const std::string text = trim(spec);
    if (!text.empty() && text.front() == '{' && text.find('"') != std::string::npos) return parse_series(text);
    if (std::filesystem::exists(text)) return parse_series(read_text_file(text));
    throw UsageError("--spec must be series JSON or a readable JSON file");
}

class Emitter {
public:
    Emitter(const OutputOptions& o, std::ostream& out) : options_(o), out_(out) {}

    bool json() const { return options_.format == "json"; }

    void emit(const Json& j, const std::string& text) {
        const std::string body = json() ? j.dump(2) + "\n" : text;
        if (options_.out.empty()) {
            out_ << body;
            return;
        }
        std::ofstream file(options_.out);
        if (!file) throw UsageError("cannot write " + options_.out);
        file << body;
    }

private:
    const OutputOptions& options_;
    std::ostream& out_;
};

std::string join(const std::vector<long long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

Json tagged(const char* schema) {
    Json j;
    j["schema"] = std::string("diffcyc/") + schema + "/v1";
    return j;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("-i,--input", in.input, "Complex text, a file holding it, or an n:index registry address");
    cmd->add_option("--registry", in.registry_dir, "Registry directory (default: $DIFFCYC_REGISTRY or ./registry)");
    cmd->add_option("--n", in.n, "Registry vertex count");
    cmd->add_option("--index", in.index, "Registry index");
}

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "Write the report to this file");
}

// ---------------------------------------------------------------- verify

void cmd_verify(const InputOptions& in, const OutputOptions& o, std::ostream& out) {
    const CyclicComplex c = resolve_complex(in);
    const FacetComplex k = expand(c);
    const bool manifold = c.dimension() <= 3 && c.dimension() >= 2 && is_combinatorial_manifold(c);
    const FVector f = f_vector(k);
    const bool connected = is_connected(k);
    const bool neighborly = is_2_neighborly(k);

    Json j = tagged("verify");
    j["complex"] = format(c);
    j["n"] = c.vertex_count();
    j["d"] = c.dimension();
    j["manifold"] = manifold;
    j["fvector"] = f;
    j["euler_characteristic"] = f.euler_characteristic();
    j["connected"] = connected;
    j["neighborly"] = neighborly;

    std::ostringstream t;
    t << "complex       " << format(c) << "\n"
      << "vertices      " << c.vertex_count() << "\n"
      << "manifold      " << yes_no(manifold) << "\n"
      << "f-vector      " << join(f.counts) << "\n"
      << "euler         " << f.euler_characteristic() << "\n"
      << "connected     " << yes_no(connected) << "\n"
      << "2-neighborly  " << yes_no(neighborly) << "\n";
    Emitter(o, out).emit(j, t.str());
}

// ---------------------------------------------------------------- invariants

void cmd_invariants(const InputOptions& in, const OutputOptions& o, const std::string& export_path, int budget,
                    std::ostream& out) {
    const CyclicComplex c = resolve_complex(in);
    const FacetComplex k = expand(c);
    const HomologyGroups h = homology(k);

    Json j = tagged("invariants");
    j["complex"] = format(c);
    j["homology"] = h;
    std::ostringstream t;
    t << "complex       " << format(c) << "\n"
      << "homology      " << h.to_string() << "\n";

    std::optional<bool> orientable;
    try {
        orientable = is_orientable(k);
    } catch (const NotApplicable&) {
    }
    j["orientable"] = orientable ? Json(*orientable) : Json(nullptr);
    t << "orientable    " << (orientable ? yes_no(*orientable) : "n/a") << "\n";

    if (k.dimension() >= 2 && is_connected(k)) {
        const GroupPresentation raw = fundamental_group(k);
        const GroupPresentation small = tietze_simplify(raw, budget);
        const Abelianization ab = abelianization(raw);
        Json pi;
        pi["raw"] = {{"generators", raw.generators}, {"relators", raw.relators.size()}};
        pi["simplified"] = {{"generators", small.generators}, {"relators", small.relators.size()}};
        pi["presentation"] = export_presentation(small);
        pi["abelianization"] = ab;
        pi["trivial"] = small.generators == 0;
        j["fundamental_group"] = pi;

        std::string abel;
        if (ab.rank > 0) abel = ab.rank == 1 ? "Z" : "Z^" + std::to_string(ab.rank);
        for (long long tor : ab.torsion) abel += (abel.empty() ? "" : " + ") + ("Z_" + std::to_string(tor));
        t << "pi1           "
          << (small.generators == 0 ? std::string("trivial")
                                    : "generators " + std::to_string(small.generators) + ", relators " +
                                          std::to_string(small.relators.size()) + " after simplification")
          << "\n"
          << "pi1 abelian   " << (abel.empty() ? "0" : abel) << "\n";
        if (!export_path.empty()) {
            std::ofstream file(export_path);
            if (!file) throw UsageError("cannot write " + export_path);
            file << export_presentation(small) << "\n";
        }
    } else {
        j["fundamental_group"] = nullptr;
        t << "pi1           n/a (disconnected or low-dimensional)\n";
    }
    Emitter(o, out).emit(j, t.str());
}

// ---------------------------------------------------------------- series

void cmd_series_check(const InputOptions& in, const std::string& spec_text, const OutputOptions& o, std::ostream& out) {
    if (!spec_text.empty()) {
        const SeriesSpec spec = resolve_spec(spec_text);
        const bool ok = order_l_admissible(spec);
        Json j = tagged("series-check");
        j["spec"] = spec;
        j["order"] = spec.l;
        j["admissible"] = ok;
        Emitter(o, out).emit(j, std::string(ok ? "ADMISSIBLE" : "NOT ADMISSIBLE (criterion is sufficient only)") +
                                    " order " + std::to_string(spec.l) + "\n");
        return;
    }
    const DenseSeriesReport r = dense_extendable(resolve_complex(in));
    Json j = tagged("series-check");
    j["dense"] = r;
    std::ostringstream t;
    t << (r.passes ? "PASS" : "FAIL") << " margins [";
    for (std::size_t i = 0; i < r.margins.size(); ++i) t << (i ? "," : "") << r.margins[i];
    t << "]" << (r.minimal_start ? " minimal-start" : "") << "\n";
    Emitter(o, out).emit(j, t.str());
}

void cmd_series_extend(const InputOptions& in, const std::string& spec_text, long long k, const OutputOptions& o,
                       std::ostream& out) {
    const CyclicComplex c = spec_text.empty() ? extend_dense(resolve_complex(in), k)
                                              : extend_order_l(resolve_spec(spec_text), k);
    Json j = tagged("complex");
    j["complex"] = format(c);
    j["n"] = c.vertex_count();
    Emitter(o, out).emit(j, format(c) + "\n");
}

void cmd_series_minimal(const InputOptions& in, const OutputOptions& o, std::ostream& out) {
    const MinimalStart m = minimal_start(resolve_complex(in));
    Json j = tagged("series-minimal");
    j["k_min"] = m.k_min;
    j["start"] = format(m.start);
    j["n"] = m.start.vertex_count();
    Emitter(o, out).emit(j, format(m.start) + " n=" + std::to_string(m.start.vertex_count()) +
                                " k_min=" + std::to_string(m.k_min) + "\n");
}

void cmd_series_reduce(const std::string& spec_text, const OutputOptions& o, std::ostream& out) {
    if (spec_text.empty()) throw UsageError("series reduce needs --spec");
    const UnitReduction r = reduce_by_unit(resolve_spec(spec_text));
    Json j = tagged("series-reduce");
    j["dense"] = r.dense;
    j["k0"] = r.k0;
    j["stride"] = r.stride;
    Emitter(o, out).emit(j, format_series(r.dense) + " k0=" + std::to_string(r.k0) + " stride=" +
                                std::to_string(r.stride) + "\n");
}

// ---------------------------------------------------------------- lens

void cmd_lens(const std::string& action, int k, const std::string& fixture, const OutputOptions& o, std::ostream& out) {
    Emitter e(o, out);
    if (action == "gen") {
        const CyclicComplex c = lens_series(k);
        Json j = tagged("complex");
        j["complex"] = format(c);
        j["n"] = c.vertex_count();
        e.emit(j, format(c) + "\n");
    } else if (action == "type") {
        const LensParams p = lens_type_of_series(k);
        Json j = tagged("lens-type");
        j["k"] = k;
        j["type"] = p;
        j["winding"] = winding_solve(k);
        e.emit(j, p.to_string() + "\n");
    } else if (!fixture.empty()) {
        const FixtureReport r = verify_fixture_complex(fixture);
        Json j = tagged("lens-verify");
        j["report"] = r;
        std::ostringstream t;
        t << r.name << " " << (r.ok() ? "OK" : "FAILED") << " H_* = " << r.splitting.homology.to_string() << "\n";
        e.emit(j, t.str());
    } else {
        const LensMemberReport r = verify_lens_member(k);
        Json j = tagged("lens-verify");
        j["report"] = r;
        std::ostringstream t;
        t << "L_" << k << " n=" << r.n << " " << (r.ok() ? "OK" : "FAILED") << "\n"
          << "  manifold " << yes_no(r.splitting.manifold) << ", 2-neighborly " << yes_no(r.neighborly) << "\n"
          << "  solid tori even/odd " << yes_no(r.splitting.even_span_certified) << "/"
          << yes_no(r.splitting.odd_span_certified) << "\n"
          << "  slicing " << join(r.splitting.slicing_fvector) << " expected " << join(r.expected_slicing) << "\n"
          << "  H_* = " << r.splitting.homology.to_string() << "\n";
        e.emit(j, t.str());
    }
}

// ---------------------------------------------------------------- classify

struct ClassifyArgs {
    int n = 0;
    std::string registry_dir;
    int jobs = 1;
    double time_limit = 0;
    int checkpoint_every = 1;
    std::string checkpoint;
};

void cmd_classify(const ClassifyArgs& a, const OutputOptions& o, std::ostream& out, std::ostream& err) {
    const std::filesystem::path dir = a.registry_dir.empty() ? default_registry_path() : std::filesystem::path(a.registry_dir);
    ClassifyOptions options;
    options.jobs = a.jobs;
    options.time_limit = std::chrono::duration<double>(a.time_limit);
    options.checkpoint_every = a.checkpoint_every;
    options.checkpoint = a.checkpoint.empty() ? registry_file(dir, a.n).replace_extension(".checkpoint.jsonl")
                                              : std::filesystem::path(a.checkpoint);

    const EnumerationResult r = classify(a.n, options);
    if (!r.complete) {
        err << "time limit reached: " << r.stats.seeds_done << " of " << r.stats.seeds_total
            << " seeds done; rerun with the same checkpoint to resume: " << options.checkpoint.string() << "\n";
        throw ResourceLimit("classification interrupted");
    }
    store(dir, r);
    std::filesystem::remove(options.checkpoint);

    Json j = tagged("classify");
    j["n"] = r.n;
    j["complexes"] = r.complexes.size();
    j["multiplier_classes"] = r.multiplier_classes.size();
    j["iso_classes"] = r.iso_classes.size();
    j["registry"] = registry_file(dir, r.n).string();
    j["stats"] = {{"nodes", r.stats.nodes},
                  {"pseudomanifolds", r.stats.pseudomanifolds},
                  {"rejected_links", r.stats.rejected_links},
                  {"disconnected", r.stats.disconnected},
                  {"seeds", r.stats.seeds_total},
                  {"seeds_resumed", r.stats.seeds_resumed},
                  {"seconds", r.stats.seconds}};
    Emitter(o, out).emit(j, std::to_string(r.n) + " " + std::to_string(r.complexes.size()) + " " +
                                std::to_string(r.iso_classes.size()) + "\n");
}

// ---------------------------------------------------------------- slicing

std::vector<Vertex> parse_part(const std::string& part, int n) {
    if (part == "odd") return parity_class(n, 1);
    if (part == "even") return parity_class(n, 0);
    std::vector<Vertex> out;
    std::stringstream s(part);
    std::string item;
    while (std::getline(s, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw UsageError("--part must be odd, even or a comma-separated vertex list");
        }
    }
    return out;
}

void cmd_slicing(const InputOptions& in, const std::string& part, const std::string& off_path, const OutputOptions& o,
                 std::ostream& out) {
    const CyclicComplex c = resolve_complex(in);
    const PolyhedralSlicing s = slicing(expand(c), parse_part(part, c.vertex_count()));
    Json j = tagged("slicing");
    j["complex"] = format(c);
    j["part"] = part;
    j["slicing"] = s;

    std::ostringstream t;
    t << "f-vector      " << join(s.f_vector()) << " (cut-vertices, edges, triangles, quadrilaterals)\n"
      << "euler         " << s.euler_characteristic() << "\n";
    try {
        const SurfaceType st = surface_type(s);
        t << "surface       " << (st.orientable ? "orientable" : "non-orientable") << " genus " << st.genus << "\n";
    } catch (const NotASurface& e) {
        t << "surface       not a surface: " << e.what() << "\n";
    }
    if (!off_path.empty()) {
        std::ofstream file(off_path);
        if (!file) throw UsageError("cannot write " + off_path);
        file << to_off(s);
    }
    Emitter(o, out).emit(j, t.str());
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Difference cycles and cyclic combinatorial 3-manifolds", "diffcyc"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "diffcyc 1.0.0");

    InputOptions in;
    OutputOptions o;

    auto* verify = app.add_subcommand("verify", "Manifold verdict, f-vector, connectivity, neighborliness");
    add_input_options(verify, in);
    add_output_options(verify, o);

    std::string export_path;
    int budget = kDefaultTietzeBudget;
    auto* invariants = app.add_subcommand("invariants", "Homology, orientability and fundamental group");
    add_input_options(invariants, in);
    add_output_options(invariants, o);
    invariants->add_option("--export", export_path, "Write the simplified presentation in GAP syntax");
    invariants->add_option("--tietze-budget", budget, "Rewrite steps for presentation simplification")
        ->check(CLI::PositiveNumber);

    std::string spec_text;
    long long k_series = 0;
    auto* series = app.add_subcommand("series", "Infinite series tools");
    series->require_subcommand(1);
    auto* s_check = series->add_subcommand("check", "Dense criterion for a complex, or order-l criterion for --spec");
    auto* s_extend = series->add_subcommand("extend", "Member k of the dense series, or of --spec");
    auto* s_minimal = series->add_subcommand("minimal", "Smallest member of the dense series through the input");
    auto* s_reduce = series->add_subcommand("reduce", "Dense series containing a unit-order --spec");
    for (auto* cmd : {s_check, s_extend, s_minimal, s_reduce}) {
        add_output_options(cmd, o);
        if (cmd != s_reduce) add_input_options(cmd, in);
        if (cmd != s_minimal) cmd->add_option("--spec", spec_text, "Series JSON or a file holding it");
    }
    s_extend->add_option("--k", k_series, "Series index")->check(CLI::NonNegativeNumber);

    int k_lens = 0;
    std::string fixture;
    auto* lens = app.add_subcommand("lens", "Lens space series L_k");
    lens->require_subcommand(1);
    auto* l_gen = lens->add_subcommand("gen", "Print L_k");
    auto* l_verify = lens->add_subcommand("verify", "Verify the genus-one splitting of L_k or of a fixture");
    auto* l_type = lens->add_subcommand("type", "Lens space type of L_k");
    for (auto* cmd : {l_gen, l_verify, l_type}) {
        add_output_options(cmd, o);
        cmd->add_option("--k", k_lens, "Series index")->check(CLI::NonNegativeNumber);
    }
    l_verify->add_option("--fixture", fixture, "Verify a stored complex instead")->check(CLI::IsMember({"C18", "D22"}));

    ClassifyArgs ca;
    auto* classify_cmd = app.add_subcommand("classify", "Classify cyclic 3-manifolds on n vertices into the registry");
    classify_cmd->add_option("--n", ca.n, "Vertex count")->required()->check(CLI::Range(5, 64));
    classify_cmd->add_option("--registry", ca.registry_dir, "Registry directory");
    classify_cmd->add_option("--jobs", ca.jobs, "Worker threads")->check(CLI::PositiveNumber);
    classify_cmd->add_option("--time-limit", ca.time_limit, "Seconds before stopping with a checkpoint")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_option("--checkpoint-every", ca.checkpoint_every, "Finished seeds between checkpoint flushes")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_option("--checkpoint", ca.checkpoint, "Checkpoint log (default: next to the registry file)");
    add_output_options(classify_cmd, o);

    std::string part = "odd";
    std::string off_path;
    auto* slicing_cmd = app.add_subcommand("slicing", "Slicing surface between a vertex set and its complement");
    add_input_options(slicing_cmd, in);
    add_output_options(slicing_cmd, o);
    slicing_cmd->add_option("--part", part, "odd, even, or a comma-separated vertex list");
    slicing_cmd->add_option("--off", off_path, "Also write the cell complex as OFF");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (verify->parsed()) cmd_verify(in, o, out);
        else if (invariants->parsed()) cmd_invariants(in, o, export_path, budget, out);
        else if (s_check->parsed()) cmd_series_check(in, spec_text, o, out);
        else if (s_extend->parsed()) cmd_series_extend(in, spec_text, k_series, o, out);
        else if (s_minimal->parsed()) cmd_series_minimal(in, o, out);
        else if (s_reduce->parsed()) cmd_series_reduce(spec_text, o, out);
        else if (l_gen->parsed()) cmd_lens("gen", k_lens, fixture, o, out);
        else if (l_verify->parsed()) cmd_lens("verify", k_lens, fixture, o, out);
        else if (l_type->parsed()) cmd_lens("type", k_lens, fixture, o, out);
        else if (classify_cmd->parsed()) cmd_classify(ca, o, out, err);
        else if (slicing_cmd->parsed()) cmd_slicing(in, part, off_path, o, out);
        return kOk;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ResourceLimit& e) {
        err << e.what() << "\n";
        return kResourceLimit;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kInput;
    } catch (const InvalidCycle& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInput;
    } catch (const RegistryError& e) {
        err << "registry error: " << e.what() << "\n";
        return kInput;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace diffcyc::cli
