// Command-line front end: validation, classification, composition,
// simulation and DOT export over .cmp documents.
//
// Exit codes: 0 success, 1 domain rejection (reported as named violations),
// 2 usage or I/O errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <computon/classify.hpp>
#include <computon/compose.hpp>
#include <computon/dot.hpp>
#include <computon/dsl.hpp>
#include <computon/interface.hpp>
#include <computon/semantics.hpp>
#include <computon/validate.hpp>

using json = nlohmann::ordered_json;
using namespace computon;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

struct UsageError {
    std::string message;
};

struct Rejection {
    std::vector<std::string> violations;
};

dsl::SourceDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in.good())
        throw UsageError{"cannot open '" + path + "'"};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    dsl::ParseResult result = dsl::parse(buffer.str());
    if (!result.ok()) {
        std::string message = path;
        for (const dsl::Diagnostic& d : result.diagnostics)
            message += ":" + d.to_string();
        throw UsageError{message};
    }
    return std::move(*result.document);
}

const Computon& named_computon(const dsl::SourceDocument& doc, const std::string& name) {
    try {
        return doc.computon(name);
    } catch (const ElementNotFoundError& e) {
        throw UsageError{e.what()};
    }
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out.good())
        throw UsageError{"cannot write '" + path + "'"};
    out << content;
}

std::string port_list(const Computon& c, const std::set<Id>& ports, bool with_colour) {
    std::string out;
    for (const Id& p : ports) {
        if (!out.empty())
            out += ", ";
        out += p;
        if (with_colour)
            out += ":" + std::to_string(c.colour_of(p).value);
    }
    return out;
}

// Interface slices spliced into the payload as flat top-level keys.
void add_interface_keys(json& payload, const Computon& c) {
    auto list = [&](const std::set<Id>& ports) {
        json arr = json::array();
        for (const Id& p : ports)
            arr.push_back(p + ":" + std::to_string(c.colour_of(p).value));
        return arr;
    };
    payload["ec_inports"] = list(ec_inports(c));
    payload["ed_inports"] = list(ed_inports(c));
    payload["ec_outports"] = list(ec_outports(c));
    payload["ed_outports"] = list(ed_outports(c));
    payload["i_ports"] = list(i_ports(c));
}

struct Output {
    bool as_json = false;
    json payload = json::object();
    std::vector<std::string> lines;

    void say(const std::string& line) { lines.push_back(line); }

    void flush() const {
        if (as_json) {
            std::cout << payload.dump(2) << "\n";
        } else {
            for (const std::string& line : lines)
                std::cout << line << "\n";
        }
    }
};

int run_validate(const std::string& file, const std::string& name, Output& out) {
    dsl::SourceDocument doc = load_document(file);
    std::vector<std::pair<std::string, ValidationReport>> reports;
    if (!name.empty()) {
        reports.emplace_back(name, validate_computon(named_computon(doc, name)));
    } else {
        for (const dsl::Declaration& d : doc.declarations)
            if (d.kind == dsl::Declaration::Kind::computon)
                reports.emplace_back(d.name, validate_computon(d.computon));
    }

    bool all_ok = true;
    json items = json::array();
    for (const auto& [decl, report] : reports) {
        all_ok = all_ok && report.ok();
        json violations = json::array();
        for (const Violation& v : report.violations)
            violations.push_back({{"clause", v.clause}, {"element", v.element}, {"message", v.message}});
        items.push_back({{"name", decl}, {"ok", report.ok()}, {"violations", violations}});
        if (report.ok()) {
            out.say(decl + ": ok");
        } else {
            out.say(decl + ": invalid");
            for (const Violation& v : report.violations)
                out.say("  " + v.clause + (v.element.empty() ? "" : " [" + v.element + "]") + ": " +
                        v.message);
        }
    }
    out.payload = {{"command", "validate"}, {"ok", all_ok}, {"computons", items}};
    return all_ok ? kExitOk : kExitRejected;
}

int run_classify(const std::string& file, const std::string& name, Output& out) {
    dsl::SourceDocument doc = load_document(file);
    const Computon& c = named_computon(doc, name);
    ValidationReport report = validate_computon(c);
    if (!report.ok())
        throw Rejection{{name + " is not a valid computon:\n" + report.to_string()}};

    ComputonClass cls = classify(c);
    out.say(name + ": " + to_string(cls));
    out.say("  ec-inports: " + port_list(c, ec_inports(c), false));
    out.say("  ed-inports: " + port_list(c, ed_inports(c), true));
    out.say("  ec-outports: " + port_list(c, ec_outports(c), false));
    out.say("  ed-outports: " + port_list(c, ed_outports(c), true));
    out.say("  i-ports: " + port_list(c, i_ports(c), true));
    out.payload = {{"command", "classify"},
                   {"name", name},
                   {"class", to_string(cls)},
                   {"connected", is_connected(c)}};
    add_interface_keys(out.payload, c);
    return kExitOk;
}

std::vector<std::pair<Id, Id>> parse_pairs(const std::vector<std::string>& raw) {
    std::vector<std::pair<Id, Id>> pairs;
    for (const std::string& s : raw) {
        std::size_t eq = s.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 >= s.size())
            throw UsageError{"--pair expects LPORT=RPORT, got '" + s + "'"};
        pairs.emplace_back(s.substr(0, eq), s.substr(eq + 1));
    }
    return pairs;
}

int run_compose_seq(const std::string& file, const std::string& left, const std::string& right,
                    const std::vector<std::string>& raw_pairs, const std::string& out_path,
                    Output& out) {
    dsl::SourceDocument doc = load_document(file);
    const Computon& l = named_computon(doc, left);
    const Computon& r = named_computon(doc, right);

    SequentialResult seq = sequential_compose(l, r, parse_pairs(raw_pairs));
    std::string composite_name = left + "_seq_" + right;
    write_file(out_path, dsl::serialize(seq.pushout.result, composite_name));

    out.say("mode: " + to_string(seq.report.mode));
    json fused = json::array();
    for (const auto& [lp, rp] : seq.report.fused_ports) {
        out.say("fused: " + lp + " = " + rp);
        fused.push_back({{"left", lp}, {"right", rp}});
    }
    out.say("wrote " + out_path);
    out.payload = {{"command", "compose-seq"},
                   {"left", left},
                   {"right", right},
                   {"mode", to_string(seq.report.mode)},
                   {"fused_ports", fused},
                   {"composite", composite_name},
                   {"output", out_path}};
    add_interface_keys(out.payload, seq.pushout.result);
    return kExitOk;
}

int run_compose_par(const std::string& file, const std::string& a, const std::string& b,
                    bool provenance, const std::string& out_path, Output& out) {
    dsl::SourceDocument doc = load_document(file);
    ParallelResult par = parallel_compose(named_computon(doc, a), named_computon(doc, b));

    std::string composite_name = a + "_par_" + b;
    std::ostringstream text;
    text << dsl::serialize(par.result, composite_name);
    if (provenance) {
        for (const auto& [role, obj] : par.objects) {
            if (role == "result")
                continue;
            text << "\n" << dsl::serialize(obj, composite_name + "." + role);
        }
    }
    write_file(out_path, text.str());

    out.say("units: " + std::to_string(par.result.units.size()));
    json objects = json::array();
    for (const auto& [role, obj] : par.objects) {
        if (provenance)
            out.say("object " + role + ": " + std::to_string(obj.units.size()) + " units, " +
                    std::to_string(obj.ports.size()) + " ports");
        objects.push_back({{"role", role},
                           {"units", obj.units.size()},
                           {"ports", obj.ports.size()}});
    }
    json arrows = json::array();
    for (const auto& [role, m] : par.morphisms) {
        (void)m;
        arrows.push_back(role);
    }
    out.say("wrote " + out_path);
    out.payload = {{"command", "compose-par"},
                   {"a", a},
                   {"b", b},
                   {"composite", composite_name},
                   {"output", out_path},
                   {"objects", objects},
                   {"morphisms", arrows}};
    add_interface_keys(out.payload, par.result);
    return kExitOk;
}

int run_pushout(const std::string& file, const std::string& span_name, const std::string& out_path,
                Output& out) {
    dsl::SourceDocument doc = load_document(file);
    const Span* span = nullptr;
    try {
        span = &doc.span(span_name);
    } catch (const ElementNotFoundError& e) {
        throw UsageError{e.what()};
    }

    PushabilityReport report = is_pushable(*span);
    if (!report.pushable)
        throw Rejection{report.violations};

    PushoutResult po = pushout(*span);
    std::string composite_name = span_name + "_pushout";
    write_file(out_path, dsl::serialize(po.result, composite_name));
    out.say("pushable: yes");
    out.say("wrote " + out_path);
    out.payload = {{"command", "pushout"},
                   {"span", span_name},
                   {"pushable", true},
                   {"composite", composite_name},
                   {"output", out_path}};
    add_interface_keys(out.payload, po.result);
    return kExitOk;
}

int run_iso(const std::string& file, const std::string& a, const std::string& b, Output& out) {
    dsl::SourceDocument doc = load_document(file);
    auto witness = find_isomorphism(named_computon(doc, a), named_computon(doc, b));
    if (!witness) {
        out.payload = {{"command", "iso"},
                       {"a", a},
                       {"b", b},
                       {"isomorphic", false},
                       {"violations", json::array({"not isomorphic"})}};
        if (out.as_json) {
            out.flush();
            return kExitRejected;
        }
        std::cout << "not isomorphic\n";
        return kExitRejected;
    }

    auto map_json = [](const std::map<Id, Id>& m) {
        json obj = json::object();
        for (const auto& [k, v] : m)
            obj[k] = v;
        return obj;
    };
    out.say("isomorphic");
    for (const auto& [k, v] : witness->unit_map)
        out.say("  unit " + k + " => " + v);
    for (const auto& [k, v] : witness->port_map)
        out.say("  port " + k + " => " + v);
    out.payload = {{"command", "iso"},
                   {"a", a},
                   {"b", b},
                   {"isomorphic", true},
                   {"units", map_json(witness->unit_map)},
                   {"ports", map_json(witness->port_map)},
                   {"out_edges", map_json(witness->out_edge_map)},
                   {"in_edges", map_json(witness->in_edge_map)}};
    return kExitOk;
}

int run_simulate(const std::string& file, const std::string& name, const std::string& marking_name,
                 const std::string& policy_name, std::uint64_t seed, std::uint64_t steps,
                 const std::string& trace_path, Output& out) {
    dsl::SourceDocument doc = load_document(file);
    const Computon& c = named_computon(doc, name);
    const MarkedComputon* marking = nullptr;
    try {
        marking = &doc.marking(marking_name);
    } catch (const ElementNotFoundError& e) {
        throw UsageError{e.what()};
    }
    if (!(marking->computon == c))
        throw UsageError{"marking '" + marking_name + "' is not on computon '" + name + "'"};

    RunPolicy policy =
        policy_name == "random" ? RunPolicy::seeded_random(seed) : RunPolicy::least_id();
    Trace trace = run(*marking, policy, steps);

    if (!trace_path.empty())
        write_file(trace_path, format_trace(trace));

    json events = json::array();
    for (const FiringEvent& event : trace.events) {
        out.say(format_event(event));
        events.push_back(format_event(event));
    }
    out.say("termination: " + to_string(trace.termination));
    json final_tokens = json::object();
    std::string final_text;
    for (const auto& [port, queue] : trace.final_marking.queues) {
        final_tokens[port] = queue.size();
        if (!final_text.empty())
            final_text += ", ";
        final_text += port + "=" + std::to_string(queue.size());
    }
    out.say("final: " + final_text);
    out.payload = {{"command", "simulate"},
                   {"computon", name},
                   {"marking", marking_name},
                   {"policy", policy_name},
                   {"seed", seed},
                   {"events", events},
                   {"termination", to_string(trace.termination)},
                   {"final", final_tokens}};
    return kExitOk;
}

int run_export(const std::string& file, const std::string& name, const std::string& syntax_name,
               const std::string& out_path, Output& out) {
    dsl::SourceDocument doc = load_document(file);
    dot::Syntax syntax = syntax_name == "petri" ? dot::Syntax::petri : dot::Syntax::computon;

    const dsl::Declaration* decl = doc.find(name);
    if (!decl)
        throw UsageError{"document has no declaration named '" + name + "'"};
    std::string text;
    if (decl->kind == dsl::Declaration::Kind::computon)
        text = dot::export_dot(decl->computon, syntax, name);
    else if (decl->kind == dsl::Declaration::Kind::marking)
        text = dot::export_dot(decl->marking, syntax, name);
    else
        throw UsageError{"'" + name + "' is neither a computon nor a marking"};

    write_file(out_path, text);
    out.say("wrote " + out_path);
    out.payload = {{"command", "export"},
                   {"name", name},
                   {"syntax", syntax_name},
                   {"output", out_path},
                   {"valid_dot", dot::is_valid_dot(text)}};
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computons: control/data-separated composition and the token game"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string file, name, left, right, out_path, span_name, marking_name, trace_path;
    std::string policy = "least-id", syntax = "petri";
    std::vector<std::string> raw_pairs;
    bool provenance = false;
    std::uint64_t seed = 0, steps = 10000;

    CLI::App* validate = app.add_subcommand("validate", "Check computon declarations");
    validate->add_option("file", file)->required();
    validate->add_option("name", name);

    CLI::App* classify_cmd = app.add_subcommand("classify", "Class and interface of a computon");
    classify_cmd->add_option("file", file)->required();
    classify_cmd->add_option("name", name)->required();

    CLI::App* compose = app.add_subcommand("compose", "Build composites");
    compose->require_subcommand(1);
    CLI::App* seq = compose->add_subcommand("seq", "Sequential composition");
    seq->add_option("file", file)->required();
    seq->add_option("left", left)->required();
    seq->add_option("right", right)->required();
    seq->add_option("--pair", raw_pairs, "LPORT=RPORT fusion pair (repeatable)");
    seq->add_option("-o,--output", out_path, "Composite document")->required();
    CLI::App* par = compose->add_subcommand("par", "Parallel composition");
    par->add_option("file", file)->required();
    par->add_option("a", left)->required();
    par->add_option("b", right)->required();
    par->add_flag("--provenance", provenance, "Also dump every intermediate object");
    par->add_option("-o,--output", out_path, "Composite document")->required();

    CLI::App* push = app.add_subcommand("pushout", "Glue a span");
    push->add_option("file", file)->required();
    push->add_option("span", span_name)->required();
    push->add_option("-o,--output", out_path, "Composite document")->required();

    CLI::App* iso = app.add_subcommand("iso", "Search for an isomorphism");
    iso->add_option("file", file)->required();
    iso->add_option("a", left)->required();
    iso->add_option("b", right)->required();

    CLI::App* simulate = app.add_subcommand("simulate", "Run the token game");
    simulate->add_option("file", file)->required();
    simulate->add_option("name", name)->required();
    simulate->add_option("--marking", marking_name, "Marking declaration")->required();
    simulate->add_option("--policy", policy)->check(CLI::IsMember({"least-id", "random"}));
    simulate->add_option("--seed", seed);
    simulate->add_option("--steps", steps);
    simulate->add_option("--trace", trace_path, "Write the event lines here");

    CLI::App* export_cmd = app.add_subcommand("export", "Emit DOT");
    export_cmd->add_option("file", file)->required();
    export_cmd->add_option("name", name)->required();
    export_cmd->add_option("--syntax", syntax)->check(CLI::IsMember({"petri", "computon"}));
    export_cmd->add_option("-o,--output", out_path, "DOT file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Output out;
    out.as_json = format == "json";
    try {
        int code = kExitUsage;
        if (*validate)
            code = run_validate(file, name, out);
        else if (*classify_cmd)
            code = run_classify(file, name, out);
        else if (*seq)
            code = run_compose_seq(file, left, right, raw_pairs, out_path, out);
        else if (*par)
            code = run_compose_par(file, left, right, provenance, out_path, out);
        else if (*push)
            code = run_pushout(file, span_name, out_path, out);
        else if (*iso)
            code = run_iso(file, left, right, out);
        else if (*simulate)
            code = run_simulate(file, name, marking_name, policy, seed, steps, trace_path, out);
        else if (*export_cmd)
            code = run_export(file, name, syntax, out_path, out);
        if (code != kExitRejected || *validate)
            out.flush();
        return code;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.message << "\n";
        return kExitUsage;
    } catch (const Rejection& e) {
        json violations = json::array();
        for (const std::string& v : e.violations) {
            violations.push_back(v);
            if (!out.as_json)
                std::cout << "rejected: " << v << "\n";
        }
        if (out.as_json)
            std::cout << json{{"ok", false}, {"violations", violations}}.dump(2) << "\n";
        return kExitRejected;
    } catch (const Error& e) {
        // Domain rejections raised inside the library.
        if (out.as_json)
            std::cout << json{{"ok", false}, {"violations", json::array({e.what()})}}.dump(2)
                      << "\n";
        else
            std::cout << "rejected: " << e.what() << "\n";
        return kExitRejected;
    }
}
