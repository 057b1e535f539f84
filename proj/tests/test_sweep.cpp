#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rscl/io.hpp"
#include "rscl/solver.hpp"
#include "rscl/sweep.hpp"

using namespace rscl;

namespace {

ScenarioConfig smooth_base() {
    ScenarioConfig c;
    c.flux_name = "burgers";
    c.ic_name = "sine";
    c.ic_params = {{"a", 0.3}, {"k", 1.0}};
    c.x_min = 0.0;
    c.x_max = 2.0 * M_PI;
    c.n = 128;
    c.ell = 0.5;
    c.epsilon = 0.0;
    c.t_final = 0.3;
    return c;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("sweep spec validation") {
    SweepSpec spec;
    spec.base = smooth_base();
    spec.axis = SweepAxis::ell;
    spec.values = {0.2};
    CHECK_THROWS(run_sweep(spec));  // one value

    spec.values = {0.2, 0.4, 0.3};
    CHECK_THROWS(run_sweep(spec));  // not monotone

    spec.values = {0.2, 0.1};
    spec.comparison = SweepComparison::self;
    CHECK_THROWS(run_sweep(spec));  // self needs axis = n

    spec.axis = SweepAxis::n;
    spec.values = {128, 256};
    spec.max_cell_steps = 10.0;
    CHECK_THROWS(run_sweep(spec));  // resource cap
}

TEST_CASE("self comparison Richardson ladder on smooth data") {
    SweepSpec spec;
    spec.base = smooth_base();
    spec.axis = SweepAxis::n;
    spec.values = {128, 256, 512};
    spec.comparison = SweepComparison::self;
    SweepReport rep = run_sweep(spec);
    REQUIRE(rep.points.size() == 3);
    CHECK(rep.distances_decreasing);
    REQUIRE(rep.observed_orders.size() == 1);
    // the monotone local flux carries O(dx) dissipation, so the order sits near 1
    CHECK(rep.observed_orders.front() > 0.8);
}

TEST_CASE("sweep report NDJSON round-trips the ladder order") {
    SweepSpec spec;
    spec.base = smooth_base();
    spec.axis = SweepAxis::n;
    spec.values = {128, 256, 512};
    spec.comparison = SweepComparison::self;
    SweepReport rep = run_sweep(spec);
    const std::string path = "sweep_test_report.ndjson";
    write_sweep_ndjson(path, spec, rep);
    std::ifstream in(path);
    std::string line;
    int points = 0;
    bool summary = false;
    while (std::getline(in, line)) {
        if (line.find("\"summary\"") != std::string::npos)
            summary = true;
        else if (!line.empty())
            ++points;
    }
    CHECK(points == 3);
    CHECK(summary);
    std::remove(path.c_str());
}

TEST_CASE("epsilon-axis sweep produces one point per ladder value in order") {
    SweepSpec spec;
    spec.base = smooth_base();
    spec.base.n = 128;
    spec.axis = SweepAxis::epsilon;
    spec.values = {0.2, 0.1, 0.05};
    spec.comparison = SweepComparison::entropy;
    spec.reference_n = 512;
    SweepReport rep = run_sweep(spec);
    REQUIRE(rep.points.size() == 3);
    for (size_t j = 0; j < rep.points.size(); ++j) {
        CHECK(rep.points[j].value == spec.values[j]);
        CHECK(rep.points[j].l1 >= 0.0);
    }
}

TEST_CASE("solver_workers honors the environment cap") {
    setenv("SOLVER_WORKERS", "3", 1);
    CHECK(solver_workers() == 3);
    unsetenv("SOLVER_WORKERS");
    CHECK(solver_workers() >= 1);
}

TEST_CASE("empty trajectory serializes to a header-only CSV") {
    Trajectory empty;
    CHECK(diagnostics_csv_text(empty) ==
          "t,energy,hamiltonian,mean,tv,max_slope,oleinik_margin,energy_balance_residual\n");
}

TEST_CASE("field CSV rows are x,value pairs") {
    Grid1D g(0.0, 1.0, 8);
    Field f = Field::from_function(g, [](double x) { return 2.0 * x; });
    std::istringstream rows(field_csv_text(f));
    std::string line;
    std::getline(rows, line);
    CHECK(line == "x,value");
    int i = 0;
    while (std::getline(rows, line)) {
        const auto comma = line.find(',');
        REQUIRE(comma != std::string::npos);
        CHECK(std::strtod(line.c_str(), nullptr) == doctest::Approx(g.center(i)).epsilon(1e-15));
        CHECK(std::strtod(line.c_str() + comma + 1, nullptr) ==
              doctest::Approx(2.0 * g.center(i)).epsilon(1e-15));
        ++i;
    }
    CHECK(i == g.n);
}

TEST_CASE("p_mass report NDJSON carries ell, mass and the fitted slope") {
    PMassReport rep;
    rep.points = {{0.2, 1.0}, {0.1, 0.4}, {0.05, 0.15}};
    rep.fitted_slope = 1.37;
    const std::string path = "pmass_test.ndjson";
    write_pmass_ndjson(path, rep);
    std::ifstream in(path);
    std::string line;
    int rows = 0;
    while (std::getline(in, line)) {
        CHECK(line.find("\"ell\":") != std::string::npos);
        CHECK(line.find("\"p_mass\":") != std::string::npos);
        CHECK(line.find("\"slope_fit\":1.37") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 3);
    std::remove(path.c_str());
}

TEST_CASE("identical runs give byte-identical outputs; csv and ndjson agree") {
    ScenarioConfig c = smooth_base();
    c.record_every = 4;
    RunResult a = run(c);
    RunResult b = run(c);
    const std::string csv_a = diagnostics_csv_text(a.trajectory);
    const std::string csv_b = diagnostics_csv_text(b.trajectory);
    CHECK(csv_a == csv_b);

    const std::string path = "sweep_test_snaps.ndjson";
    write_snapshots_ndjson(path, a.trajectory, 1);
    std::ifstream in(path);
    std::string line;
    size_t count = 0;
    std::vector<double> ts;
    while (std::getline(in, line)) {
        ++count;
        const auto pos = line.find("\"t\":");
        REQUIRE(pos != std::string::npos);
        ts.push_back(std::strtod(line.c_str() + pos + 4, nullptr));
    }
    CHECK(count == a.trajectory.states.size());
    // same time grid in both sinks
    std::istringstream csv(csv_a);
    std::string row;
    std::getline(csv, row);  // header
    size_t j = 0;
    while (std::getline(csv, row)) {
        REQUIRE(j < ts.size());
        CHECK(std::strtod(row.c_str(), nullptr) == doctest::Approx(ts[j]).epsilon(1e-15));
        ++j;
    }
    std::remove(path.c_str());
}
