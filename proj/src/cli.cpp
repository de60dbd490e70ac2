#include "hochhom/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "hochhom/presets.hpp"
#include "hochhom/verify.hpp"

namespace hochhom {

using Json = nlohmann::ordered_json;

namespace {

const std::vector<std::string> config_keys{"n", "r", "scalar", "w_min", "w_max", "trunc", "bound", "suite", "format"};

int json_int(const Json& j, const std::string& key)
{
    if (!j.is_number_integer())
        throw ConfigError("'" + key + "' must be an integer");
    return j.get<int>();
}

std::string json_string(const Json& j, const std::string& key)
{
    if (!j.is_string())
        throw ConfigError("'" + key + "' must be a string");
    return j.get<std::string>();
}

const Json& json_matrix(const Json& j, const std::string& key, int n)
{
    if (!j.is_array() || j.size() != static_cast<std::size_t>(n))
        throw ConfigError("'" + key + "' must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    for (const auto& row : j)
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n))
            throw ConfigError("'" + key + "' must be a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
    return j;
}

Rational json_rational(const Json& j)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (!j.is_string())
        throw ConfigError("rational values must be strings such as \"1/2\"");
    try
    {
        return parse_rational(j.get<std::string>());
    }
    catch (const std::exception& e)
    {
        throw ConfigError("bad rational '" + j.get<std::string>() + "': " + e.what());
    }
}

ScalarModel parse_model(const Json& j, int n)
{
    if (!j.is_object() || !j.contains("type"))
        throw ConfigError("'scalar' must be an object with a 'type'");
    const std::string type = json_string(j["type"], "type");
    if (type == "cyclotomic")
    {
        for (const auto& [key, value] : j.items())
            if (key != "type" && key != "order" && key != "exponents")
                throw ConfigError("unknown scalar key '" + key + "'");
        if (!j.contains("order") || !j.contains("exponents"))
            throw ConfigError("cyclotomic scalar needs 'order' and 'exponents'");
        CyclotomicModel m;
        m.order = json_int(j["order"], "order");
        if (m.order < 1)
            throw ConfigError("'order' must be positive");
        for (const auto& row : json_matrix(j["exponents"], "exponents", n))
        {
            m.exponents.emplace_back();
            for (const auto& e : row)
                m.exponents.back().push_back(json_int(e, "exponents"));
        }
        return m;
    }
    if (type == "rational")
    {
        for (const auto& [key, value] : j.items())
            if (key != "type" && key != "values")
                throw ConfigError("unknown scalar key '" + key + "'");
        if (!j.contains("values"))
            throw ConfigError("rational scalar needs 'values'");
        RationalModel m;
        for (const auto& row : json_matrix(j["values"], "values", n))
        {
            m.values.emplace_back();
            for (const auto& v : row)
                m.values.back().push_back(json_rational(v));
        }
        return m;
    }
    throw ConfigError("unknown scalar type '" + type + "'");
}

Json model_json(const ScalarModel& model)
{
    Json j;
    if (const auto* cm = std::get_if<CyclotomicModel>(&model))
    {
        j["type"] = "cyclotomic";
        j["order"] = cm->order;
        j["exponents"] = cm->exponents;
        return j;
    }
    const auto& rm = std::get<RationalModel>(model);
    j["type"] = "rational";
    Json rows = Json::array();
    for (const auto& row : rm.values)
    {
        Json out = Json::array();
        for (const auto& v : row)
            out.push_back(rational_to_string(v));
        rows.push_back(out);
    }
    j["values"] = rows;
    return j;
}

Json config_json(const RunConfig& c)
{
    Json j;
    j["n"] = c.n;
    j["r"] = c.r;
    j["scalar"] = model_json(c.model);
    if (c.w_min)
        j["w_min"] = *c.w_min;
    if (c.w_max)
        j["w_max"] = *c.w_max;
    if (c.trunc)
        j["trunc"] = *c.trunc;
    if (c.bound)
        j["bound"] = *c.bound;
    if (c.suite)
        j["suite"] = *c.suite;
    if (c.format)
        j["format"] = *c.format;
    return j;
}

void validate(const RunConfig& c)
{
    if (c.n < 1)
        throw ConfigError("n must be at least 1");
    if (c.r < 0 || c.r > c.n)
        throw ConfigError("r must satisfy 0 <= r <= n");
    if (c.n + c.r > max_desk_dim)
        throw ConfigError("n + r must be at most " + std::to_string(max_desk_dim));
    if (c.format && *c.format != "table" && *c.format != "json")
        throw ConfigError("format must be 'table' or 'json'");
    if (c.suite && *c.suite != "all" &&
        std::find(suite_names().begin(), suite_names().end(), *c.suite) == suite_names().end())
        throw ConfigError("unknown suite '" + *c.suite + "'");
    if (c.trunc && *c.trunc < 0)
        throw ConfigError("trunc must be non-negative");
    if (c.bound && *c.bound < 0)
        throw ConfigError("bound must be non-negative");
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, sep))
        out.push_back(part);
    return out;
}

int preset_int(const std::string& s, const std::string& name)
{
    try
    {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size())
            return v;
    }
    catch (const std::exception&)
    {
    }
    throw ConfigError("bad integer '" + s + "' in preset '" + name + "'");
}

Rational preset_rational(const std::string& s, const std::string& name)
{
    try
    {
        return parse_rational(s);
    }
    catch (const std::exception&)
    {
        throw ConfigError("bad rational '" + s + "' in preset '" + name + "'");
    }
}

struct Resolved
{
    RunConfig config;
    AlgebraSpec spec;
    std::string format;
};

struct CommonOptions
{
    std::string config_path;
    std::string preset;
    std::string format;
};

void add_common(CLI::App* sub, CommonOptions& o)
{
    sub->add_option("--config", o.config_path, "JSON configuration file");
    sub->add_option("--preset", o.preset, "named preset such as weyl:1 or free:2:1");
    sub->add_option("--format", o.format, "table or json")->check(CLI::IsMember({"table", "json"}));
}

Resolved resolve(const CommonOptions& o)
{
    if (o.config_path.empty() == o.preset.empty())
        throw ConfigError("exactly one of --config and --preset is required");
    RunConfig c = o.config_path.empty() ? preset_config(o.preset) : load_config(o.config_path);
    if (!o.format.empty())
        c.format = o.format;
    AlgebraSpec spec = spec_from_config(c);
    return {c, spec, c.format.value_or("table")};
}

Json report_header(const std::string& command, const Resolved& res)
{
    Json j;
    j["schema"] = report_schema;
    j["command"] = command;
    j["config"] = config_json(res.config);
    j["spec"] = res.spec.describe();
    j["regime"] = regime_name(detect_regime(res.spec));
    return j;
}

void print_json(std::ostream& out, const Json& j)
{
    out << j.dump(2) << "\n";
}

void print_table_header(std::ostream& out, const Json& j)
{
    out << "# " << j["schema"].get<std::string>() << " " << j["command"].get<std::string>() << "\n";
    out << "# spec   " << j["spec"].get<std::string>() << "\n";
    out << "# regime " << j["regime"].get<std::string>() << "\n";
}

std::string dims_text(const std::vector<std::size_t>& dims)
{
    std::string s = "(";
    for (std::size_t k = 0; k < dims.size(); ++k)
        s += (k ? "," : "") + std::to_string(dims[k]);
    return s + ")";
}

int command_hh(Resolved res, int w_min, int w_max, bool reps, unsigned threads, std::ostream& out)
{
    res.config.w_min = w_min;
    res.config.w_max = w_max;
    HomologyReport report;
    try
    {
        report = hh_report(res.spec, w_min, w_max, reps, threads);
    }
    catch (const InvalidSpec& e)
    {
        throw ConfigError(e.what());
    }
    Json j = report_header("hh", res);
    Json entries = Json::array();
    for (const auto& s : report.strands)
    {
        for (std::size_t k = 0; k < s.dims.size(); ++k)
        {
            if (s.dims[k] == 0)
                continue;
            Json e;
            e["w"] = s.weight;
            e["k"] = k;
            e["dim"] = s.dims[k];
            if (reps)
            {
                Json list = Json::array();
                for (const auto& c : s.representatives[k])
                    list.push_back(to_string(res.spec, c));
                e["representatives"] = list;
            }
            entries.push_back(e);
        }
    }
    Json totals = Json::array();
    for (int k = 0; k <= res.spec.dim(); ++k)
        totals.push_back(report.total(k));
    j["results"] = {{"w_min", w_min}, {"w_max", w_max}, {"entries", entries}, {"totals", totals}};

    if (res.format == "json")
    {
        print_json(out, j);
        return 0;
    }
    print_table_header(out, j);
    out << "# window w in [" << w_min << ", " << w_max << "]\n";
    out << std::setw(6) << "w" << std::setw(4) << "k" << std::setw(6) << "dim" << "\n";
    for (const auto& e : entries)
    {
        out << std::setw(6) << e["w"].get<int>() << std::setw(4) << e["k"].get<int>() << std::setw(6)
            << e["dim"].get<std::size_t>() << "\n";
        if (reps)
            for (const auto& rep : e["representatives"])
                out << "        " << rep.get<std::string>() << "\n";
    }
    out << "totals";
    for (int k = 0; k <= res.spec.dim(); ++k)
        out << " HH_" << k << "=" << totals[k].get<std::size_t>();
    out << "\n";
    return 0;
}

int command_cohh(Resolved res, int trunc, std::ostream& out)
{
    res.config.trunc = trunc;
    std::vector<int> degrees;
    for (int d = 0; d <= res.spec.dim(); ++d)
        degrees.push_back(d);
    CohomologyReport report = cohomology_report(res.spec, degrees, trunc);
    Json j = report_header("cohh", res);
    Json entries = Json::array();
    for (const auto& e : report.entries)
    {
        Json x;
        x["degree"] = e.degree;
        x["dim"] = e.dimension;
        x["method"] = e.method;
        if (!e.note.empty())
            x["note"] = e.note;
        entries.push_back(x);
    }
    j["results"] = {{"trunc", trunc}, {"entries", entries}};
    if (res.format == "json")
    {
        print_json(out, j);
        return 0;
    }
    print_table_header(out, j);
    out << "# window N = " << trunc << "\n";
    out << std::setw(6) << "deg" << std::setw(6) << "dim" << "  method\n";
    for (const auto& e : report.entries)
    {
        out << std::setw(6) << e.degree << std::setw(6) << e.dimension << "  " << e.method;
        if (!e.note.empty())
            out << "  (" << e.note << ")";
        out << "\n";
    }
    return 0;
}

int command_oracle(Resolved res, int w_min, int w_max, unsigned threads, std::ostream& out)
{
    res.config.w_min = w_min;
    res.config.w_max = w_max;
    if (!expected_hh_oracle(res.spec, w_min))
        throw ConfigError("no oracle for regime " + regime_name(detect_regime(res.spec)));
    HomologyReport report;
    try
    {
        report = hh_report(res.spec, w_min, w_max, false, threads);
    }
    catch (const InvalidSpec& e)
    {
        throw ConfigError(e.what());
    }
    Json j = report_header("oracle", res);
    Json strands = Json::array();
    bool pass = true;
    for (const auto& s : report.strands)
    {
        std::vector<std::size_t> expected = *expected_hh_oracle(res.spec, s.weight);
        bool match = expected == s.dims;
        pass = pass && match;
        strands.push_back({{"w", s.weight}, {"computed", s.dims}, {"expected", expected}, {"match", match}});
    }
    j["results"] = {{"w_min", w_min}, {"w_max", w_max}, {"pass", pass}, {"strands", strands}};
    if (res.format == "json")
        print_json(out, j);
    else
    {
        print_table_header(out, j);
        out << std::setw(6) << "w" << "  computed  expected\n";
        for (const auto& s : strands)
        {
            out << std::setw(6) << s["w"].get<int>() << "  "
                << dims_text(s["computed"].get<std::vector<std::size_t>>()) << "  "
                << dims_text(s["expected"].get<std::vector<std::size_t>>())
                << (s["match"].get<bool>() ? "" : "  MISMATCH") << "\n";
        }
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

SuiteResult run_suite(const AlgebraSpec& spec, const std::string& name, std::optional<int> bound, int trunc)
{
    if (name == "complex")
        return verify_complex(spec, bound.value_or(6), std::min(bound.value_or(6), 6));
    if (name == "chainmaps")
        return verify_chainmaps(spec, bound.value_or(6));
    if (name == "braiding")
        return verify_braiding(spec, bound.value_or(4));
    if (name == "quotient")
        return verify_quotient(spec, bound.value_or(6));
    return verify_duality(spec, trunc);
}

int command_verify(Resolved res, const std::string& suite, std::optional<int> bound, int trunc, std::ostream& out)
{
    res.config.suite = suite;
    res.config.trunc = trunc;
    if (bound)
        res.config.bound = *bound;
    std::vector<std::string> names = suite == "all" ? suite_names() : std::vector<std::string>{suite};
    Json j = report_header("verify", res);
    Json suites = Json::array();
    bool pass = true;
    for (const auto& name : names)
    {
        SuiteResult r;
        if (suite == "all" && name == "duality" && detect_regime(res.spec) != Regime::SemiClassical)
        {
            r.name = name;
            r.applicable = false;
        }
        else
            r = run_suite(res.spec, name, bound, trunc);
        pass = pass && r.pass;
        Json x;
        x["name"] = r.name;
        x["status"] = !r.applicable ? "skipped" : (r.pass ? "pass" : "fail");
        x["checked"] = r.checked;
        if (!r.pass)
            x["witness"] = r.witness;
        suites.push_back(x);
    }
    j["results"] = {{"pass", pass}, {"suites", suites}};
    if (res.format == "json")
        print_json(out, j);
    else
    {
        print_table_header(out, j);
        for (const auto& s : suites)
        {
            out << std::left << std::setw(10) << s["name"].get<std::string>() << std::right << std::setw(8)
                << s["status"].get<std::string>() << std::setw(10) << s["checked"].get<std::size_t>();
            if (s.contains("witness"))
                out << "  " << s["witness"].get<std::string>();
            out << "\n";
        }
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? 0 : 1;
}

}   // namespace

RunConfig parse_config(const std::string& text)
{
    Json j;
    try
    {
        j = Json::parse(text);
    }
    catch (const Json::parse_error& e)
    {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        throw ConfigError("configuration must be a JSON object");
    for (const auto& [key, value] : j.items())
        if (std::find(config_keys.begin(), config_keys.end(), key) == config_keys.end())
            throw ConfigError("unknown key '" + key + "'");
    if (!j.contains("n") || !j.contains("r") || !j.contains("scalar"))
        throw ConfigError("configuration needs 'n', 'r' and 'scalar'");
    RunConfig c;
    c.n = json_int(j["n"], "n");
    c.r = json_int(j["r"], "r");
    if (c.n < 1 || c.n > max_desk_dim)
        throw ConfigError("n must lie in [1, " + std::to_string(max_desk_dim) + "]");
    c.model = parse_model(j["scalar"], c.n);
    if (j.contains("w_min"))
        c.w_min = json_int(j["w_min"], "w_min");
    if (j.contains("w_max"))
        c.w_max = json_int(j["w_max"], "w_max");
    if (j.contains("trunc"))
        c.trunc = json_int(j["trunc"], "trunc");
    if (j.contains("bound"))
        c.bound = json_int(j["bound"], "bound");
    if (j.contains("suite"))
        c.suite = json_string(j["suite"], "suite");
    if (j.contains("format"))
        c.format = json_string(j["format"], "format");
    validate(c);
    return c;
}

std::string emit_config(const RunConfig& config)
{
    return config_json(config).dump(2) + "\n";
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read configuration '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

RunConfig config_from_spec(const AlgebraSpec& spec)
{
    RunConfig c;
    c.n = spec.n();
    c.r = spec.r();
    c.model = spec.model();
    return c;
}

RunConfig preset_config(const std::string& name)
{
    std::vector<std::string> parts = split(name, ':');
    const std::string kind = parts.empty() ? "" : parts[0];
    auto arity = [&](std::size_t k) {
        if (parts.size() != k + 1)
            throw ConfigError("preset '" + kind + "' takes " + std::to_string(k) + " argument(s)");
    };
    auto n_arg = [&](const std::string& s) {
        int n = preset_int(s, name);
        if (n < 1 || 2 * n > max_desk_dim)
            throw ConfigError("preset '" + name + "' exceeds the desk-scale limit");
        return n;
    };
    try
    {
        if (kind == "weyl")
        {
            arity(1);
            return config_from_spec(weyl_spec(n_arg(parts[1])));
        }
        if (kind == "semiclassical")
        {
            arity(2);
            return config_from_spec(semiclassical_spec(n_arg(parts[1]), preset_int(parts[2], name)));
        }
        if (kind == "semiclassical-rational")
        {
            arity(2);
            return config_from_spec(semiclassical_rational_spec(n_arg(parts[1]), preset_rational(parts[2], name)));
        }
        if (kind == "free")
        {
            arity(2);
            int n = preset_int(parts[1], name);
            int r = preset_int(parts[2], name);
            if (n < 1 || r < 0 || r > n || n + r > max_desk_dim)
                throw ConfigError("preset '" + name + "' is out of range");
            return config_from_spec(free_spec(n, r));
        }
        if (kind == "mixed-minimal")
        {
            arity(1);
            return config_from_spec(mixed_minimal_spec(preset_int(parts[1], name)));
        }
        if (kind == "mixed-minimal-rational")
        {
            arity(1);
            return config_from_spec(mixed_minimal_rational_spec(preset_rational(parts[1], name)));
        }
    }
    catch (const ConfigError&)
    {
        throw;
    }
    catch (const Error& e)
    {
        throw ConfigError("preset '" + name + "': " + e.what());
    }
    throw ConfigError("unknown preset '" + name + "'");
}

AlgebraSpec spec_from_config(const RunConfig& config)
{
    validate(config);
    try
    {
        return AlgebraSpec(config.n, config.r, config.model);
    }
    catch (const Error& e)
    {
        throw ConfigError(e.what());
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hochschild homology and cohomology of quantum Weyl algebras", "hochhom"};
    app.require_subcommand(1);

    CommonOptions hh_o, co_o, or_o, ve_o;
    int hh_wmin = 0, hh_wmax = 4, or_wmin = 0, or_wmax = 4, co_trunc = 4, ve_trunc = 4, ve_bound = 0;
    unsigned hh_threads = 1, or_threads = 1;
    bool hh_reps = false;
    std::string ve_suite = "all";

    CLI::App* hh = app.add_subcommand("hh", "homology report over a weight range");
    add_common(hh, hh_o);
    CLI::Option* hh_wmin_opt = hh->add_option("--wmin", hh_wmin, "lowest weight (default -(n+r))");
    CLI::Option* hh_wmax_opt = hh->add_option("--wmax", hh_wmax, "highest weight (default 4)");
    hh->add_flag("--representatives", hh_reps, "print cycle representatives");
    hh->add_option("--threads", hh_threads, "worker threads for strands")->check(CLI::Range(1u, 64u));

    CLI::App* cohh = app.add_subcommand("cohh", "windowed cohomology in every degree");
    add_common(cohh, co_o);
    CLI::Option* co_trunc_opt = cohh->add_option("--trunc", co_trunc, "window N (default 4)");

    CLI::App* oracle = app.add_subcommand("oracle", "compare homology with the closed-form dimensions");
    add_common(oracle, or_o);
    CLI::Option* or_wmin_opt = oracle->add_option("--wmin", or_wmin, "lowest weight (default -(n+r))");
    CLI::Option* or_wmax_opt = oracle->add_option("--wmax", or_wmax, "highest weight (default 4)");
    oracle->add_option("--threads", or_threads, "worker threads for strands")->check(CLI::Range(1u, 64u));

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify, ve_o);
    CLI::Option* ve_suite_opt = verify->add_option("--suite", ve_suite, "complex, chainmaps, braiding, quotient, duality or all");
    CLI::Option* ve_bound_opt = verify->add_option("--bound", ve_bound, "degree or length bound of the suite");
    CLI::Option* ve_trunc_opt = verify->add_option("--trunc", ve_trunc, "value-degree bound N of the duality suite");

    std::vector<const char*> argv{"hochhom"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::ParseError& e)
    {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try
    {
        if (hh->parsed())
        {
            Resolved res = resolve(hh_o);
            int w_min = hh_wmin_opt->count() ? hh_wmin : res.config.w_min.value_or(-res.spec.dim());
            int w_max = hh_wmax_opt->count() ? hh_wmax : res.config.w_max.value_or(4);
            return command_hh(res, w_min, w_max, hh_reps, hh_threads, out);
        }
        if (cohh->parsed())
        {
            Resolved res = resolve(co_o);
            int trunc = co_trunc_opt->count() ? co_trunc : res.config.trunc.value_or(4);
            if (trunc < 1)
                throw ConfigError("trunc must be at least 1");
            return command_cohh(res, trunc, out);
        }
        if (oracle->parsed())
        {
            Resolved res = resolve(or_o);
            int w_min = or_wmin_opt->count() ? or_wmin : res.config.w_min.value_or(-res.spec.dim());
            int w_max = or_wmax_opt->count() ? or_wmax : res.config.w_max.value_or(4);
            return command_oracle(res, w_min, w_max, or_threads, out);
        }
        Resolved res = resolve(ve_o);
        std::string suite = ve_suite_opt->count() ? ve_suite : res.config.suite.value_or("all");
        std::optional<int> bound = res.config.bound;
        if (ve_bound_opt->count())
            bound = ve_bound;
        int trunc = ve_trunc_opt->count() ? ve_trunc : res.config.trunc.value_or(4);
        RunConfig check = res.config;
        check.suite = suite;
        check.bound = bound;
        check.trunc = trunc;
        validate(check);
        return command_verify(res, suite, bound, trunc, out);
    }
    catch (const ConfigError& e)
    {
        err << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const ComplexBroken& e)
    {
        err << "verification failure: " << e.what() << "\n";
        return 1;
    }
    catch (const Error& e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}   // namespace hochhom
