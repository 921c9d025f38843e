#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <computon/dsl.hpp>
#include <computon/validate.hpp>

using namespace computon;
namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;

    bool contains(const std::string& needle) const {
        return output.find(needle) != std::string::npos;
    }
};

std::string cli_binary() {
    const char* env = std::getenv("COMPUTON_CLI");
    REQUIRE_MESSAGE(env != nullptr, "COMPUTON_CLI must point at the binary");
    return env;
}

std::string data_dir() {
    const char* env = std::getenv("COMPUTON_TEST_DATA");
    REQUIRE_MESSAGE(env != nullptr, "COMPUTON_TEST_DATA must point at tests/data");
    return env;
}

CliResult run_cli(const std::string& args) {
    CliResult result;
    std::string command = cli_binary() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (std::size_t n = fread(buffer, 1, sizeof buffer, pipe))
        result.output.append(buffer, n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() / "computon_cli_tests";
    fs::create_directories(dir);
    return dir;
}

std::string fig4() { return data_dir() + "/fig4.cmp"; }
std::string fig6() { return data_dir() + "/fig6.cmp"; }

} // namespace

TEST_CASE("cli: validate reports ok per declaration") {
    CliResult r = run_cli("validate " + fig4());
    CHECK(r.exit_code == 0);
    CHECK(r.contains("Lambda1: ok"));
    CHECK(r.contains("Apex0: ok"));
}

TEST_CASE("cli: validate surfaces violations with exit 1") {
    fs::path bad = scratch_dir() / "bad.cmp";
    std::ofstream(bad) << "computon Bad { colours: 0; ports: p: 0, q: 0; units: u; "
                          "edges: u -> q; }\n";
    CliResult r = run_cli("validate " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(r.contains("tau-surjective"));
}

TEST_CASE("cli: missing files and unknown names exit 2") {
    CHECK(run_cli("validate /nonexistent.cmp").exit_code == 2);
    CHECK(run_cli("classify " + fig4() + " Ghost").exit_code == 2);
    CHECK(run_cli("simulate " + fig4() + " Lambda1 --marking ghost").exit_code == 2);
}

TEST_CASE("cli: classify prints the class and the split interface") {
    CliResult r = run_cli("classify " + fig4() + " Lambda1");
    CHECK(r.exit_code == 0);
    CHECK(r.contains("primitive-functional"));
    CHECK(r.contains("ec-inports: q0"));
    CHECK(r.contains("ed-outports: o1:3, o2:4"));
}

TEST_CASE("cli: compose seq reports partial mode and writes the composite") {
    fs::path out = scratch_dir() / "seq.cmp";
    CliResult r = run_cli("compose seq " + fig4() + " Lambda1 Lambda2 --pair q1=r0 --pair o1=j1 -o " +
                          out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.contains("mode: partial"));

    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    dsl::ParseResult parsed = dsl::parse(text.str());
    REQUIRE(parsed.ok());
    const Computon& composite = parsed.document->computon("Lambda1_seq_Lambda2");
    CHECK(composite.units.size() == 2);
    CHECK(validate_computon(composite).ok());
}

TEST_CASE("cli: compose seq rejects a disconnected operand with exit 1") {
    fs::path out = scratch_dir() / "never.cmp";
    CliResult r = run_cli("compose seq " + fig4() + " Unit Lambda1 -o " + out.string());
    CHECK(r.exit_code == 1);
    CHECK(r.contains("not connected"));
}

TEST_CASE("cli: compose par writes the composite and dumps provenance on request") {
    fs::path out = scratch_dir() / "par.cmp";
    CliResult r = run_cli("compose par " + fig4() + " Lambda1 Lambda2 --provenance -o " +
                          out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.contains("units: 4"));
    CHECK(r.contains("object chain-a"));

    std::ifstream in(out);
    std::ostringstream text;
    text << in.rdbuf();
    dsl::ParseResult parsed = dsl::parse(text.str());
    REQUIRE(parsed.ok());
    CHECK(parsed.document->computon("Lambda1_par_Lambda2").units.size() == 4);
    CHECK(parsed.document->has("Lambda1_par_Lambda2.fork-a"));
    CHECK(parsed.document->has("Lambda1_par_Lambda2.chain-b"));
}

TEST_CASE("cli: pushout composes the fixture span") {
    fs::path out = scratch_dir() / "po.cmp";
    CliResult r = run_cli("pushout " + fig4() + " fig4 -o " + out.string());
    CHECK(r.exit_code == 0);
    CHECK(r.contains("pushable: yes"));
}

TEST_CASE("cli: pushout names the violated clause for a blocked span") {
    fs::path doc = scratch_dir() / "blocked.cmp";
    std::ofstream(doc) << R"(computon Chain {
  colours: 0;
  ports: pin: 0, mid: 0, pout: 0;
  units: c1, c2;
  edges: pin -> c1, c1 -> mid, mid -> c2, c2 -> pout;
}
computon Probe { colours: 0; ports: z: 0; units: ; edges: ; }
morphism into_mid : Probe -> Chain { ports: z => mid; units: ; edges: ; }
morphism into_pin : Probe -> Chain { ports: z => pin; units: ; edges: ; }
span blocked { apex: Probe; left: into_mid; right: into_pin; }
)";
    fs::path out = scratch_dir() / "blocked_out.cmp";
    CliResult r = run_cli("pushout " + doc.string() + " blocked -o " + out.string());
    CHECK(r.exit_code == 1);
    CHECK(r.contains("internal"));
}

TEST_CASE("cli: iso finds witnesses and names the rejection otherwise") {
    CliResult same = run_cli("iso " + fig4() + " Lambda1 Lambda1");
    CHECK(same.exit_code == 0);
    CHECK(same.contains("isomorphic"));

    CliResult diff = run_cli("iso " + fig4() + " Lambda1 Lambda2");
    CHECK(diff.exit_code == 1);
    CHECK(diff.contains("not isomorphic"));
}

TEST_CASE("cli: simulate runs the token game and writes traces") {
    fs::path trc = scratch_dir() / "l1.trc";
    CliResult r = run_cli("simulate " + fig4() + " Lambda1 --marking allins --trace " + trc.string());
    CHECK(r.exit_code == 0);
    CHECK(r.contains("termination: quiescent"));

    std::ifstream in(trc);
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line))
        ++lines;
    CHECK(lines == 1);
}

TEST_CASE("cli: simulate drives the parallel fixture for four events") {
    CliResult r = run_cli("simulate " + fig6() + " Par --marking allins --policy least-id --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.contains("\"termination\": \"quiescent\""));
    CHECK(std::count(r.output.begin(), r.output.end(), ' ') > 0);

    // Four event strings in the JSON array.
    std::size_t events = 0, pos = 0;
    while ((pos = r.output.find("consumed{", pos)) != std::string::npos) {
        ++events;
        pos += 1;
    }
    CHECK(events == 4);
}

TEST_CASE("cli: export emits DOT in both syntaxes") {
    fs::path dot_file = scratch_dir() / "l1.dot";
    CliResult petri = run_cli("export " + fig4() + " Lambda1 --syntax petri -o " + dot_file.string());
    CHECK(petri.exit_code == 0);
    std::ifstream in(dot_file);
    std::string first;
    std::getline(in, first);
    CHECK(first.find("digraph") == 0);

    CliResult marked = run_cli("export " + fig4() + " allins --syntax computon -o " + dot_file.string());
    CHECK(marked.exit_code == 0);
}

TEST_CASE("cli: json output is byte-identical across runs") {
    std::string cmd = "classify " + fig4() + " Lambda1 --format json";
    CliResult a = run_cli(cmd);
    CliResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);

    fs::path out = scratch_dir() / "seq_json.cmp";
    std::string compose_cmd = "compose seq " + fig4() + " Lambda1 Lambda2 -o " + out.string() +
                              " --format json";
    CliResult c = run_cli(compose_cmd);
    CliResult d = run_cli(compose_cmd);
    CHECK(c.exit_code == 0);
    CHECK(c.output == d.output);

    std::string sim_cmd = "simulate " + fig6() + " Par --marking allins --policy random --seed 42" +
                          " --format json";
    CliResult e = run_cli(sim_cmd);
    CliResult f = run_cli(sim_cmd);
    CHECK(e.exit_code == 0);
    CHECK(e.output == f.output);
}
