#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_dir() {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() / "spintrace_cli_tests";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path out = scratch_dir() / ("out" + std::to_string(counter) + ".txt");
    const fs::path err = scratch_dir() / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd =
        std::string(SPINTRACE_CLI_PATH) + " " + args + " > " + out.string() + " 2> " + err.string();
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Parses the CSV produced by the CLI: skips '#' metadata, returns header + rows.
struct Csv {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    int column(const std::string& name) const {
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (columns[i] == name) return static_cast<int>(i);
        return -1;
    }
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool header_done = false;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!header_done) {
            csv.columns = cells;
            header_done = true;
        } else {
            std::vector<double> row;
            for (const auto& c : cells) row.push_back(std::stod(c));
            csv.rows.push_back(std::move(row));
        }
    }
    return csv;
}

}  // namespace

TEST_CASE("multiplicity table and identities") {
    const auto r = run_cli("multiplicity --n 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0 2"));
    CHECK(contains(r.out, "1 3"));
    CHECK(contains(r.out, "2 1"));
    CHECK(contains(r.out, "Catalan"));
    CHECK(!contains(r.out, "FAIL"));

    const auto single = run_cli("multiplicity --n 3 --j 1/2");
    CHECK(single.exit_code == 0);
    CHECK(contains(single.out, "1/2 2"));
}

TEST_CASE("multiplicity: single spin and large exact counts") {
    const auto one = run_cli("multiplicity --n 1");
    CHECK(one.exit_code == 0);
    CHECK(contains(one.out, "1/2 1"));

    // Pascal-table path at N = 200 and the multiplicative fallback at N = 600
    CHECK(run_cli("multiplicity --n 200").exit_code == 0);
    const auto big = run_cli("multiplicity --n 600 --j 300");
    CHECK(big.exit_code == 0);
    CHECK(contains(big.out, "300 1"));  // stretched multiplet is unique
}

TEST_CASE("multiplicity rejects malformed or out-of-range j with exit 2") {
    CHECK(run_cli("multiplicity --n 4 --j 0.7").exit_code == 2);
    CHECK(run_cli("multiplicity --n 4 --j 1/2").exit_code == 2);  // parity mismatch
    CHECK(run_cli("multiplicity --n 4 --j 5").exit_code == 2);
}

TEST_CASE("wigner3j prints the exact surd") {
    const auto r = run_cli("wigner3j 1/2 1/2 0 1/2 -1/2 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "+sqrt(1/2)"));

    const auto neg = run_cli("wigner3j 1/2 1/2 1 1/2 1/2 -1");
    CHECK(neg.exit_code == 0);
    CHECK(contains(neg.out, "-sqrt(1/3)"));

    CHECK(run_cli("wigner3j 1/2 1/2 0 1/2").exit_code == 2);       // wrong arity
    CHECK(run_cli("wigner3j a b c d e f").exit_code == 2);         // not numbers
    CHECK(run_cli("wigner3j 1 1 0 2 -2 0").exit_code == 2);        // |m| > j
}

TEST_CASE("verify-decomposition") {
    const auto r22 = run_cli("verify-decomposition --n1 2 --n2 2");
    CHECK(r22.exit_code == 0);
    CHECK(contains(r22.out, "0 2 2 pass"));

    const auto r44 = run_cli("verify-decomposition --n1 4 --n2 4");
    CHECK(r44.exit_code == 0);
    CHECK(contains(r44.out, "0 14 14 pass"));
    CHECK(contains(r44.out, "all rows pass"));

    CHECK(run_cli("verify-decomposition --n1 10 --n2 3").exit_code == 2);  // budget
}

TEST_CASE("simulate: uncoupled corner state keeps full concurrence") {
    const auto r = run_cli("simulate --gamma 0 --n 4 --initial bell-outer --steps 5 --t-stop 2");
    CHECK(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    const int c = csv.column("concurrence");
    REQUIRE(c >= 0);
    REQUIRE(csv.rows.size() == 5);
    for (const auto& row : csv.rows) CHECK(row[static_cast<std::size_t>(c)] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("simulate: central bell state starts at concurrence 1 with rho23 = 1/2") {
    const auto r = run_cli("simulate --lambda 2 --gamma 1 --hbeta 1 --n 10 --initial bell-inner --steps 3 --t-stop 1");
    CHECK(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    REQUIRE(csv.rows.size() == 3);
    CHECK(csv.rows[0][static_cast<std::size_t>(csv.column("concurrence"))] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(csv.rows[0][static_cast<std::size_t>(csv.column("rho23_re"))] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(csv.rows[0][static_cast<std::size_t>(csv.column("rho23_im"))] == doctest::Approx(0.0));
}

TEST_CASE("simulate: central bell state decays toward a partial plateau") {
    const auto r =
        run_cli("simulate --lambda 2 --gamma 1 --hbeta 1 --n 100 --initial bell-inner --steps 80 --t-stop 10");
    CHECK(r.exit_code == 0);
    const Csv csv = parse_csv(r.out);
    const int c = csv.column("concurrence");
    REQUIRE(c >= 0);
    double lo = 1.0, hi = 0.0;
    for (std::size_t i = csv.rows.size() / 2; i < csv.rows.size(); ++i) {
        lo = std::min(lo, csv.rows[i][static_cast<std::size_t>(c)]);
        hi = std::max(hi, csv.rows[i][static_cast<std::size_t>(c)]);
    }
    CHECK(hi < 0.95);  // damped below the initial value
    CHECK(lo > 0.0);   // but not to zero: oscillates about a finite plateau
}

TEST_CASE("simulate: bad time grids exit with the usage code") {
    CHECK(run_cli("simulate --gamma 1 --n 4 --steps 1").exit_code == 2);
    CHECK(run_cli("simulate --gamma 1 --n 4 --t-start 2 --t-stop 1").exit_code == 2);
}

TEST_CASE("simulate: custom non-block-form state exits with the model-violation code") {
    const fs::path cfg = scratch_dir() / "bad_state.json";
    {
        nlohmann::json doc;
        doc["initial"] = "custom";
        // |+><+| x |-><-|-like coherences outside the two blocks
        doc["initial_matrix"] = {
            {0.5, 0.5, 0.0, 0.0},
            {0.5, 0.5, 0.0, 0.0},
            {0.0, 0.0, 0.0, 0.0},
            {0.0, 0.0, 0.0, 0.0},
        };
        std::ofstream(cfg) << doc.dump();
    }
    const auto r = run_cli("simulate --n 2 --gamma 1 --initial custom --config " + cfg.string());
    CHECK(r.exit_code == 4);
}

TEST_CASE("simulate: config file fills values, flags override") {
    const fs::path cfg = scratch_dir() / "run.json";
    {
        nlohmann::json doc;
        doc["lambda"] = 2.0;
        doc["gamma"] = 1.5;
        doc["n"] = 8;
        doc["steps"] = 4;
        doc["t_stop"] = 1.0;
        doc["initial"] = "bell-inner";
        std::ofstream(cfg) << doc.dump();
    }
    const auto r = run_cli("simulate --config " + cfg.string() + " --gamma 0.5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "# lambda = 2"));
    CHECK(contains(r.out, "# gamma = 0.5"));  // flag wins
    CHECK(contains(r.out, "# n = 8"));
}

TEST_CASE("simulate: json output format") {
    const auto r = run_cli("simulate --gamma 1 --n 4 --steps 3 --t-stop 1 --format json");
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.contains("columns"));
    CHECK(doc.at("rows").size() == 3);
}

TEST_CASE("figure outputs are deterministic and shaped as advertised") {
    const fs::path f4a = scratch_dir() / "fig4a.csv";
    const fs::path f4b = scratch_dir() / "fig4b.csv";
    CHECK(run_cli("figure 4 --steps 60 --out " + f4a.string()).exit_code == 0);
    CHECK(run_cli("figure 4 --steps 60 --out " + f4b.string()).exit_code == 0);
    const std::string a = slurp(f4a);
    CHECK(a == slurp(f4b));  // byte-identical across runs

    const Csv csv = parse_csv(a);
    const int conc = csv.column("concurrence");
    const int cinf = csv.column("c_inf");
    const int finf = csv.column("f_inf");
    const int fcol = csv.column("f");
    REQUIRE(conc >= 0);
    REQUIRE(cinf >= 0);
    const auto& last = csv.rows.back();
    CHECK(last[static_cast<std::size_t>(cinf)] == doctest::Approx(0.9713).epsilon(1e-4));
    CHECK(last[static_cast<std::size_t>(conc)] == doctest::Approx(last[static_cast<std::size_t>(cinf)]).epsilon(0.03));
    for (const auto& row : csv.rows)
        CHECK(std::abs(row[static_cast<std::size_t>(fcol)] - row[static_cast<std::size_t>(finf)]) <= 0.02);
}

TEST_CASE("figure 1: concurrence envelopes the oscillating coherence") {
    const fs::path f1 = scratch_dir() / "fig1.csv";
    CHECK(run_cli("figure 1 --steps 120 --out " + f1.string()).exit_code == 0);
    const Csv csv = parse_csv(slurp(f1));
    const int re = csv.column("re_rho14_ratio");
    const int conc = csv.column("concurrence");
    const int env = csv.column("envelope_inf");
    REQUIRE(re >= 0);
    for (const auto& row : csv.rows) {
        CHECK(std::abs(row[static_cast<std::size_t>(re)]) <=
              row[static_cast<std::size_t>(conc)] + 1e-12);
        CHECK(std::abs(row[static_cast<std::size_t>(conc)] - row[static_cast<std::size_t>(env)]) <= 1e-3);
    }
}

TEST_CASE("figure 5 sweep starts at zero concurrence for zero exchange") {
    const fs::path f5 = scratch_dir() / "fig5.csv";
    CHECK(run_cli("figure 5 --gamma 2 --lambda 0 --out " + f5.string()).exit_code == 0);
    const Csv csv = parse_csv(slurp(f5));
    REQUIRE(!csv.rows.empty());
    CHECK(csv.rows.front()[0] == 0.0);
    CHECK(csv.rows.front()[1] == 0.0);
    for (std::size_t i = 1; i < csv.rows.size(); ++i) CHECK(csv.rows[i][1] > csv.rows[i - 1][1]);
}

TEST_CASE("oracle-check passes at 1e-10 and fails below the noise floor") {
    const auto ok = run_cli("oracle-check --n 1 --seed 1 --tol 1e-10");
    CHECK(ok.exit_code == 0);
    CHECK(contains(ok.out, "all draws pass"));

    const auto noisy = run_cli("oracle-check --n 2 --seed 1 --tol 1e-16");
    CHECK(noisy.exit_code == 1);
    CHECK(contains(noisy.out, "MISMATCH"));

    CHECK(run_cli("oracle-check --n 4 --seed 1").exit_code == 2);
}

TEST_CASE("asymptote") {
    const auto r = run_cli("asymptote --lambda 2 --gamma 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "0.9713"));
    CHECK(run_cli("asymptote --lambda 2 --gamma 0").exit_code == 2);
}

TEST_CASE("unknown flags and missing subcommands exit with the usage code") {
    CHECK(run_cli("multiplicity --n 4 --bogus 7").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}
