// Command-line front end: dispatches to the library, echoes the resolved
// configuration, and writes one canonical JSON report per run.
//
// Exit codes: 0 success (axiom/probe outcomes are data), 1 assertion failure
// or diverged series, 2 usage/configuration error.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ifba/convergence.hpp"
#include "ifba/divisors.hpp"
#include "ifba/errors.hpp"
#include "ifba/inversion.hpp"
#include "ifba/serialize.hpp"

namespace {

using ifba::report::json_of;

using ifba::report::ojson;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailure = 1;
constexpr int kExitUsage = 2;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct ElementInput {
    std::optional<double> inline_value;
    std::string file;

    ifba::AlgebraElement resolve(const ifba::AlgebraModel& model, const std::string& flag) const {
        if (inline_value && !file.empty())
            throw ifba::ConfigError(flag + ": give either an inline value or a CSV file, not both");
        if (inline_value) {
            if (model.kind != ifba::AlgebraKind::scalar)
                throw ifba::ConfigError(flag + ": inline values are for the scalar model; use " +
                                        flag + "-file for " + model.spec_string());
            return ifba::AlgebraElement::from_scalar(*inline_value);
        }
        if (!file.empty()) return ifba::load_element_csv(model, file);
        throw ifba::ConfigError(flag + ": required (inline value or " + flag + "-file)");
    }

    bool provided() const { return inline_value.has_value() || !file.empty(); }
};

void add_element_flags(CLI::App* cmd, const std::string& flag, ElementInput& input,
                       const std::string& what) {
    cmd->add_option(flag, input.inline_value, what + " (scalar model: inline value)");
    cmd->add_option(flag + "-file", input.file, what + " (CSV file)");
}

ojson config_entry(const ifba::AlgebraElement& x) { return ifba::report::json_of(x); }

void write_report(const std::string& out_path, const std::string& command, ojson config,
                  ojson result) {
    ojson report{{"command", command},
                 {"timestamp", ifba::report::utc_timestamp()},
                 {"config", std::move(config)},
                 {"result", std::move(result)}};
    ifba::report::write_atomic(out_path, report);
    std::cout << out_path << "\n";
}

// ---------------------------------------------------------------------------
// summarize: flatten headline fields of same-kind reports into a CSV.

struct CsvSpec {
    std::vector<std::string> header;
    std::vector<std::string> (*row)(const ojson& rep);
};

std::string jstr(const ojson& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return std::to_string(j.get<std::uint64_t>());
    if (j.is_number_float()) return format_double(j.get<double>());
    return j.dump();
}

std::string config_model(const ojson& rep) {
    const auto& cfg = rep.at("config");
    if (cfg.contains("model")) return jstr(cfg.at("model"));
    return "";
}

const CsvSpec& csv_spec_for(const std::string& kind) {
    static const std::map<std::string, CsvSpec> specs = {
        {"check-tnorm",
         {{"command", "op", "grid_resolution", "all_pass", "idempotent"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{
                  jstr(rep.at("command")), jstr(res.at("axiom_report").at("op")),
                  jstr(res.at("axiom_report").at("grid_resolution")),
                  jstr(res.at("axiom_report").at("all_pass")),
                  jstr(res.at("idempotency").at("idempotent"))};
          }}},
        {"check-axioms",
         {{"command", "model", "seed", "samples", "pass", "fail", "vacuous", "failed_ids"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              std::int64_t npass = 0, nfail = 0, nvac = 0;
              std::string failed;
              for (const auto& ax : res.at("axioms")) {
                  const std::string status = ax.at("status").get<std::string>();
                  if (status == "pass") ++npass;
                  if (status == "vacuous") ++nvac;
                  if (status == "fail") {
                      ++nfail;
                      if (!failed.empty()) failed += ";";
                      failed += ax.at("id").get<std::string>();
                  }
              }
              return std::vector<std::string>{jstr(rep.at("command")), jstr(res.at("model")),
                                              jstr(res.at("seed")), jstr(res.at("samples")),
                                              std::to_string(npass), std::to_string(nfail),
                                              std::to_string(nvac), failed};
          }}},
        {"converge",
         {{"command", "model", "family", "r", "t", "horizon", "status", "n0"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{
                  jstr(rep.at("command")), config_model(rep), jstr(rep.at("config").at("family")),
                  jstr(res.at("r")), jstr(res.at("t")), jstr(res.at("horizon")),
                  jstr(res.at("status")), res.contains("n0") ? jstr(res.at("n0")) : ""};
          }}},
        {"cauchy",
         {{"command", "model", "family", "r", "t", "horizon", "p_max", "status", "n0"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{
                  jstr(rep.at("command")), config_model(rep), jstr(rep.at("config").at("family")),
                  jstr(res.at("r")), jstr(res.at("t")), jstr(res.at("horizon")),
                  jstr(res.at("p_max")), jstr(res.at("status")),
                  res.contains("n0") ? jstr(res.at("n0")) : ""};
          }}},
        {"product-limit",
         {{"command", "model", "r", "t", "x_status", "y_status", "product_status", "consistent"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{
                  jstr(rep.at("command")), config_model(rep),
                  jstr(res.at("x_verdict").at("r")), jstr(res.at("x_verdict").at("t")),
                  jstr(res.at("x_verdict").at("status")), jstr(res.at("y_verdict").at("status")),
                  res.contains("product_verdict") ? jstr(res.at("product_verdict").at("status"))
                                                  : "",
                  jstr(res.at("consistent"))};
          }}},
        {"neumann",
         {{"command", "model", "norm_x", "terms_used", "residual"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{
                  jstr(rep.at("command")), config_model(rep),
                  jstr(res.at("crisp_certificate").at("norm_x")), jstr(res.at("terms_used")),
                  jstr(res.at("residual"))};
          }}},
        {"probe-open",
         {{"command", "model", "t", "r_star", "r", "crisp_radius", "samples",
           "noninvertible_count", "uncertified_count"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{
                  jstr(rep.at("command")), jstr(res.at("model")), jstr(res.at("t")),
                  jstr(res.at("r_star")), jstr(res.at("r")), jstr(res.at("crisp_radius")),
                  jstr(res.at("samples")), jstr(res.at("noninvertible_count")),
                  jstr(res.at("uncertified_count"))};
          }}},
        {"probe-continuity",
         {{"command", "model", "epsilon", "samples", "holds_count", "fails_count"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{jstr(rep.at("command")), jstr(res.at("model")),
                                              jstr(res.at("epsilon")), jstr(res.at("samples")),
                                              jstr(res.at("holds_count")),
                                              jstr(res.at("fails_count"))};
          }}},
        {"tdz",
         {{"command", "model", "found", "side", "r", "t", "annihilation_norm", "separation_mu"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              const bool found = res.at("found").get<bool>();
              return std::vector<std::string>{
                  jstr(rep.at("command")), config_model(rep), jstr(res.at("found")),
                  found ? jstr(res.at("witness").at("side")) : "",
                  jstr(rep.at("config").at("r")), jstr(rep.at("config").at("t")),
                  found ? jstr(res.at("witness").at("annihilation_norm")) : "",
                  found ? jstr(res.at("witness").at("separation_mu")) : ""};
          }}},
        {"tdz-population",
         {{"command", "model", "samples", "witness_count", "constructed_singular_count",
           "violation_count", "consistent"},
          [](const ojson& rep) {
              const auto& res = rep.at("result");
              return std::vector<std::string>{
                  jstr(rep.at("command")), jstr(res.at("model")), jstr(res.at("samples")),
                  jstr(res.at("witness_count")), jstr(res.at("constructed_singular_count")),
                  jstr(res.at("violation_count")), jstr(res.at("consistent"))};
          }}},
    };
    auto it = specs.find(kind);
    if (it == specs.end()) {
        // inverse/resolvent share neumann's headline shape
        if (kind == "inverse" || kind == "resolvent") return specs.at("neumann");
        throw ifba::ConfigError("no CSV summary defined for command kind: " + kind);
    }
    return it->second;
}

int run_summarize(const std::vector<std::string>& report_paths, const std::string& out,
                  const std::string& kind_hint) {
    std::string kind = kind_hint;
    std::vector<ojson> reports;
    for (const auto& path : report_paths) {
        auto rep = ifba::report::read_json_file(path);
        const std::string this_kind = rep.at("command").get<std::string>();
        if (kind.empty()) kind = this_kind;
        if (this_kind != kind)
            throw ifba::ConfigError("mixed report kinds: expected '" + kind + "', got '" +
                                    this_kind + "' in " + path);
        reports.push_back(std::move(rep));
    }

    std::string text;
    if (kind.empty()) {
        text = "command\n"; // nothing to infer from an empty list
    } else {
        const auto& spec = csv_spec_for(kind);
        for (std::size_t i = 0; i < spec.header.size(); ++i)
            text += spec.header[i] + (i + 1 < spec.header.size() ? "," : "\n");
        for (const auto& rep : reports) {
            const auto row = spec.row(rep);
            for (std::size_t i = 0; i < row.size(); ++i)
                text += row[i] + (i + 1 < row.size() ? "," : "\n");
        }
    }

    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw ifba::IoError("cannot write CSV summary: " + out);
    f << text;
    std::cout << out << "\n";
    return kExitOk;
}

ifba::TriangularNorm make_tnorm(const std::string& name, const std::string& table_file) {
    ifba::TriangularNorm op{ifba::tnorm_kind_from_string(name), std::nullopt};
    if (op.kind == ifba::TNormKind::tabulated) {
        if (table_file.empty())
            throw ifba::ConfigError("tnorm: tabulated kind needs --tnorm-table <csv>");
        op.table = ifba::TabulatedGrid::from_csv(table_file);
    }
    return op;
}

ifba::TriangularConorm make_tconorm(const std::string& name, const std::string& table_file) {
    ifba::TriangularConorm op{ifba::tconorm_kind_from_string(name), std::nullopt};
    if (op.kind == ifba::TConormKind::tabulated) {
        if (table_file.empty())
            throw ifba::ConfigError("tconorm: tabulated kind needs --tconorm-table <csv>");
        op.table = ifba::TabulatedGrid::from_csv(table_file);
    }
    return op;
}

ifba::SequenceSpec make_sequence(const ifba::AlgebraModel& model, const std::string& family_name,
                                 const ElementInput& base, const ElementInput& pert,
                                 const std::string& seq_file, std::int64_t horizon,
                                 const std::string& suffix) {
    ifba::SequenceSpec seq;
    seq.family = ifba::sequence_family_from_string(family_name);
    seq.horizon = horizon;
    if (seq.family == ifba::SequenceFamily::explicit_list) {
        if (seq_file.empty())
            throw ifba::ConfigError("--seq-file" + suffix + ": required for the csv family");
        seq.list = ifba::load_sequence_csv(model, seq_file);
        seq.base = seq.list.front();
        seq.horizon = std::min<std::int64_t>(horizon, static_cast<std::int64_t>(seq.list.size()));
    } else {
        seq.base = base.resolve(model, "--base" + suffix);
        if (seq.family == ifba::SequenceFamily::perturbation)
            seq.perturbation = pert.resolve(model, "--pert" + suffix);
    }
    return seq;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intuitionistic fuzzy Banach algebra toolkit"};
    app.require_subcommand(1);

    // --- shared option storage -------------------------------------------
    std::string model_spec = "scalar";
    std::uint64_t seed = 0;
    std::string out_path;
    std::string tnorm_name = "minimum", tconorm_name = "maximum";
    std::string tnorm_table, tconorm_table;
    // Defaults that differ between subcommands get their own storage: CLI11
    // applies default_val eagerly, so shared variables would cross-talk.
    std::int64_t ax_samples = 10000, probe_samples = 1000, pop_samples = 1000;
    double seq_r = 0.1, tdz_r = 0.4, pop_r = 0.4;
    std::int64_t seq_horizon = 0, tdz_horizon = 64;
    double t = 1.0, tol = 1e-8, epsilon = 1.0, lambda = 0.0;
    std::int64_t p_max = 16, max_terms = ifba::kDefaultMaxTerms;
    std::optional<double> r_override;
    std::optional<double> ball_r, ball_t;
    ElementInput x_in, x0_in, z_in;
    ElementInput base_x, pert_x, limit_x, base_y, pert_y, limit_y;
    std::string family_x = "constant", family_y = "constant", seq_file_x, seq_file_y;
    std::string op_name, op_class = "tnorm", op_table;
    int grid_resolution = 11;
    std::string tdz_side = "left";
    std::vector<std::string> summarize_inputs;
    std::string summarize_kind;

    std::map<const CLI::App*, std::string> default_out;
    auto add_common = [&](CLI::App* cmd, const char* out_name) {
        cmd->add_option("--model", model_spec, "model spec: scalar | matrix:n=N | series:d=D | nullprod:m=M");
        cmd->add_option("--seed", seed, "random seed")->envname("IFBA_SEED");
        cmd->add_option("--out", out_path, "report path");
        default_out[cmd] = out_name;
    };

    // --- check-tnorm ------------------------------------------------------
    auto* cmd_tnorm = app.add_subcommand("check-tnorm", "triangular-operation axiom grid check");
    cmd_tnorm->add_option("--op", op_name, "operation kind")->required();
    cmd_tnorm->add_option("--class", op_class, "tnorm | tconorm (for tabulated kinds)");
    cmd_tnorm->add_option("--table", op_table, "CSV table for tabulated kinds");
    cmd_tnorm->add_option("--grid", grid_resolution, "grid resolution (>= 3)");
    cmd_tnorm->add_option("--out", out_path, "report path");

    // --- check-axioms -----------------------------------------------------
    auto* cmd_axioms = app.add_subcommand("check-axioms", "full fuzzy-norm axiom checker");
    add_common(cmd_axioms, "check_axioms_report.json");
    cmd_axioms->add_option("--samples", ax_samples, "sample count")->default_val(10000);
    cmd_axioms->add_option("--tnorm", tnorm_name, "t-norm kind");
    cmd_axioms->add_option("--tconorm", tconorm_name, "t-conorm kind");
    cmd_axioms->add_option("--tnorm-table", tnorm_table, "CSV table for a tabulated t-norm");
    cmd_axioms->add_option("--tconorm-table", tconorm_table, "CSV table for a tabulated t-conorm");

    // --- converge ---------------------------------------------------------
    auto* cmd_converge = app.add_subcommand("converge", "fuzzy convergence verdict");
    add_common(cmd_converge, "converge_report.json");
    cmd_converge->add_option("--family", family_x, "sequence family");
    add_element_flags(cmd_converge, "--base", base_x, "sequence base element");
    add_element_flags(cmd_converge, "--pert", pert_x, "perturbation element");
    cmd_converge->add_option("--seq-file", seq_file_x, "explicit sequence CSV");
    add_element_flags(cmd_converge, "--limit", limit_x, "claimed limit");
    cmd_converge->add_option("--r", seq_r, "radius in (0,1)")->default_val(0.1);
    cmd_converge->add_option("--t", t, "time parameter > 0")->default_val(1.0);
    cmd_converge->add_option("--horizon", seq_horizon, "max index explored (0 = model default)");

    // --- cauchy -----------------------------------------------------------
    auto* cmd_cauchy = app.add_subcommand("cauchy", "fuzzy Cauchy verdict");
    add_common(cmd_cauchy, "cauchy_report.json");
    cmd_cauchy->add_option("--family", family_x, "sequence family");
    add_element_flags(cmd_cauchy, "--base", base_x, "sequence base element");
    add_element_flags(cmd_cauchy, "--pert", pert_x, "perturbation element");
    cmd_cauchy->add_option("--seq-file", seq_file_x, "explicit sequence CSV");
    cmd_cauchy->add_option("--r", seq_r, "radius in (0,1)")->default_val(0.1);
    cmd_cauchy->add_option("--t", t, "time parameter > 0")->default_val(1.0);
    cmd_cauchy->add_option("--horizon", seq_horizon, "max index explored (0 = model default)");
    cmd_cauchy->add_option("--p-max", p_max, "gap bound p");

    // --- product-limit ----------------------------------------------------
    auto* cmd_product = app.add_subcommand("product-limit", "product-of-limits check");
    add_common(cmd_product, "product_limit_report.json");
    cmd_product->add_option("--family-x", family_x, "first sequence family");
    add_element_flags(cmd_product, "--base-x", base_x, "first base element");
    add_element_flags(cmd_product, "--pert-x", pert_x, "first perturbation");
    cmd_product->add_option("--seq-file-x", seq_file_x, "first explicit sequence CSV");
    add_element_flags(cmd_product, "--limit-x", limit_x, "first limit");
    cmd_product->add_option("--family-y", family_y, "second sequence family");
    add_element_flags(cmd_product, "--base-y", base_y, "second base element");
    add_element_flags(cmd_product, "--pert-y", pert_y, "second perturbation");
    cmd_product->add_option("--seq-file-y", seq_file_y, "second explicit sequence CSV");
    add_element_flags(cmd_product, "--limit-y", limit_y, "second limit");
    cmd_product->add_option("--r", seq_r, "radius in (0,1)")->default_val(0.1);
    cmd_product->add_option("--t", t, "time parameter > 0")->default_val(1.0);
    cmd_product->add_option("--horizon", seq_horizon, "max index explored (0 = model default)");

    // --- neumann / inverse / resolvent -------------------------------------
    auto* cmd_neumann = app.add_subcommand("neumann", "series inverse of (e - x)");
    add_common(cmd_neumann, "neumann_report.json");
    add_element_flags(cmd_neumann, "--x", x_in, "series argument x");
    cmd_neumann->add_option("--tol", tol, "stopping tolerance")->default_val(1e-8);
    cmd_neumann->add_option("--max-terms", max_terms, "term budget");
    cmd_neumann->add_option("--ball-r", ball_r, "fuzzy certificate radius");
    cmd_neumann->add_option("--ball-t", ball_t, "fuzzy certificate t");

    auto* cmd_inverse = app.add_subcommand("inverse", "series inverse of x via the shifted argument e - x");
    add_common(cmd_inverse, "inverse_report.json");
    add_element_flags(cmd_inverse, "--x", x_in, "element to invert");
    cmd_inverse->add_option("--tol", tol, "stopping tolerance")->default_val(1e-8);
    cmd_inverse->add_option("--max-terms", max_terms, "term budget");
    cmd_inverse->add_option("--ball-r", ball_r, "fuzzy certificate radius");
    cmd_inverse->add_option("--ball-t", ball_t, "fuzzy certificate t");

    auto* cmd_resolvent = app.add_subcommand("resolvent", "series inverse of (lambda e - x)");
    add_common(cmd_resolvent, "resolvent_report.json");
    add_element_flags(cmd_resolvent, "--x", x_in, "element x");
    cmd_resolvent->add_option("--lambda", lambda, "nonzero scalar lambda")->required();
    cmd_resolvent->add_option("--tol", tol, "stopping tolerance")->default_val(1e-8);
    cmd_resolvent->add_option("--max-terms", max_terms, "term budget");
    cmd_resolvent->add_option("--ball-r", ball_r, "fuzzy certificate radius");
    cmd_resolvent->add_option("--ball-t", ball_t, "fuzzy certificate t");

    // --- probe-open -------------------------------------------------------
    auto* cmd_open = app.add_subcommand("probe-open", "invertible-set openness probe");
    add_common(cmd_open, "probe_open_report.json");
    add_element_flags(cmd_open, "--x0", x0_in, "invertible center");
    cmd_open->add_option("--t", t, "time parameter > 0")->default_val(1.0);
    cmd_open->add_option("--samples", probe_samples, "sample count")->default_val(1000);
    cmd_open->add_option("--r", r_override, "radius override (default 0.95 * r_star)");

    // --- probe-continuity ---------------------------------------------------
    auto* cmd_cont = app.add_subcommand("probe-continuity", "inversion continuity probe");
    add_common(cmd_cont, "probe_continuity_report.json");
    add_element_flags(cmd_cont, "--x0", x0_in, "invertible center");
    cmd_cont->add_option("--epsilon", epsilon, "epsilon > 0")->default_val(1.0);
    cmd_cont->add_option("--samples", probe_samples, "sample count")->default_val(1000);

    // --- tdz ----------------------------------------------------------------
    auto* cmd_tdz = app.add_subcommand("tdz", "topological-divisor-of-zero witness search");
    add_common(cmd_tdz, "tdz_report.json");
    add_element_flags(cmd_tdz, "--z", z_in, "candidate element z");
    cmd_tdz->add_option("--r", tdz_r, "separation radius in (0,1)")->default_val(0.4);
    cmd_tdz->add_option("--t", t, "time parameter > 0")->default_val(1.0);
    cmd_tdz->add_option("--horizon", tdz_horizon, "trace horizon")->default_val(64);
    cmd_tdz->add_option("--side", tdz_side, "left (z*zn) or right (zn*z)");

    // --- tdz-population -----------------------------------------------------
    auto* cmd_tdzpop = app.add_subcommand("tdz-population", "witness-implies-singular population check");
    add_common(cmd_tdzpop, "tdz_population_report.json");
    cmd_tdzpop->add_option("--samples", pop_samples, "population size")->default_val(1000);
    cmd_tdzpop->add_option("--r", pop_r, "separation radius in (0,1)")->default_val(0.4);
    cmd_tdzpop->add_option("--t", t, "time parameter > 0")->default_val(1.0);

    // --- summarize ----------------------------------------------------------
    auto* cmd_sum = app.add_subcommand("summarize", "flatten JSON reports into a CSV");
    cmd_sum->add_option("reports", summarize_inputs, "report JSON paths");
    cmd_sum->add_option("--kind", summarize_kind, "expected command kind (needed for empty input)");
    cmd_sum->add_option("--out", out_path, "CSV output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (out_path.empty())
            for (const auto& [cmd, name] : default_out)
                if (cmd->parsed()) out_path = name;
        const auto model = ifba::AlgebraModel::parse(model_spec);
        const auto fuzzy = [&]() {
            ifba::IFNormModel m = ifba::IFNormModel::induced(model);
            m.tnorm = make_tnorm(tnorm_name, tnorm_table);
            m.tconorm = make_tconorm(tconorm_name, tconorm_table);
            return m;
        };
        if (seq_horizon == 0) seq_horizon = ifba::default_horizon(model);
        std::optional<ifba::BallParams> ball;
        if (ball_r || ball_t) {
            if (!(ball_r && ball_t))
                throw ifba::ConfigError("ball-r and ball-t must be given together");
            ball = ifba::BallParams{*ball_r, *ball_t};
        }

        if (cmd_tnorm->parsed()) {
            if (out_path.empty()) out_path = "check_tnorm_report.json";
            ojson config{{"op", op_name}, {"class", op_class}, {"grid", grid_resolution}};
            ojson result;
            const bool is_conorm =
                op_name == "maximum" || op_name == "probabilistic_sum" ||
                op_name == "bounded_sum" || (op_name == "tabulated" && op_class == "tconorm");
            if (is_conorm) {
                const auto op = make_tconorm(op_name, op_table);
                result["axiom_report"] = json_of(check_triangular_axioms(op, grid_resolution));
                result["idempotency"] = json_of(is_idempotent(op, grid_resolution));
            } else {
                const auto op = make_tnorm(op_name, op_table);
                result["axiom_report"] = json_of(check_triangular_axioms(op, grid_resolution));
                result["idempotency"] = json_of(is_idempotent(op, grid_resolution));
            }
            write_report(out_path, "check-tnorm", std::move(config), std::move(result));
            return kExitOk;
        }

        if (cmd_axioms->parsed()) {
            ojson config{{"model", model_spec}, {"seed", seed},      {"samples", ax_samples},
                         {"tnorm", tnorm_name}, {"tconorm", tconorm_name}};
            const auto report = ifba::check_ifna_axioms(fuzzy(), ax_samples, seed);
            write_report(out_path, "check-axioms", std::move(config), json_of(report));
            return kExitOk;
        }

        if (cmd_converge->parsed()) {
            const auto seq =
                make_sequence(model, family_x, base_x, pert_x, seq_file_x, seq_horizon, "");
            const auto limit = limit_x.resolve(model, "--limit");
            ojson config{{"model", model_spec}, {"family", family_x},
                         {"base", config_entry(seq.base)}, {"limit", config_entry(limit)},
                         {"r", seq_r}, {"t", t}, {"horizon", seq.horizon}};
            const auto verdict = ifba::fuzzy_converges(fuzzy(), seq, limit, seq_r, t);
            write_report(out_path, "converge", std::move(config), json_of(verdict));
            return kExitOk;
        }

        if (cmd_cauchy->parsed()) {
            const auto seq =
                make_sequence(model, family_x, base_x, pert_x, seq_file_x, seq_horizon, "");
            ojson config{{"model", model_spec}, {"family", family_x},
                         {"base", config_entry(seq.base)}, {"r", seq_r}, {"t", t},
                         {"horizon", seq.horizon}, {"p_max", p_max}};
            const auto verdict = ifba::fuzzy_cauchy(fuzzy(), seq, seq_r, t, p_max);
            write_report(out_path, "cauchy", std::move(config), json_of(verdict));
            return kExitOk;
        }

        if (cmd_product->parsed()) {
            const auto sx =
                make_sequence(model, family_x, base_x, pert_x, seq_file_x, seq_horizon, "-x");
            const auto sy =
                make_sequence(model, family_y, base_y, pert_y, seq_file_y, seq_horizon, "-y");
            const auto lx = limit_x.resolve(model, "--limit-x");
            const auto ly = limit_y.resolve(model, "--limit-y");
            ojson config{{"model", model_spec}, {"family_x", family_x}, {"family_y", family_y},
                         {"r", seq_r}, {"t", t}, {"horizon", seq_horizon}};
            const auto report = ifba::product_convergence_check(fuzzy(), sx, lx, sy, ly, seq_r, t);
            const bool ok = report.consistent;
            write_report(out_path, "product-limit", std::move(config), json_of(report));
            return ok ? kExitOk : kExitAssertionFailure;
        }

        auto series_command = [&](const std::string& name) -> int {
            const auto x = x_in.resolve(model, "--x");
            ojson config{{"model", model_spec}, {"x", config_entry(x)}, {"tol", tol},
                         {"max_terms", max_terms}};
            if (ball) {
                config["ball_r"] = ball->r;
                config["ball_t"] = ball->t;
            }
            if (name == "resolvent") config["lambda"] = lambda;
            try {
                ifba::NeumannResult result = name == "neumann"
                    ? ifba::neumann_inverse(fuzzy(), x, tol, max_terms, ball)
                    : name == "inverse"
                        ? ifba::inverse_via_neumann(fuzzy(), x, tol, max_terms, ball)
                        : ifba::resolvent_inverse(fuzzy(), x, lambda, tol, max_terms, ball);
                write_report(out_path, name, std::move(config), json_of(result));
                return kExitOk;
            } catch (const ifba::DivergedError& e) {
                ojson result{{"status", "diverged"}, {"message", e.what()}};
                ojson norms = ojson::array();
                for (double v : e.term_norms()) norms.push_back(v);
                result["term_norms"] = std::move(norms);
                write_report(out_path, name, std::move(config), std::move(result));
                return kExitAssertionFailure;
            }
        };
        if (cmd_neumann->parsed()) return series_command("neumann");
        if (cmd_inverse->parsed()) return series_command("inverse");
        if (cmd_resolvent->parsed()) return series_command("resolvent");

        if (cmd_open->parsed()) {
            const auto x0 = x0_in.resolve(model, "--x0");
            ojson config{{"model", model_spec}, {"x0", config_entry(x0)}, {"t", t},
                         {"samples", probe_samples}, {"seed", seed}};
            if (r_override) config["r"] = *r_override;
            const auto report =
                ifba::invertible_ball_probe(fuzzy(), x0, t, probe_samples, seed, r_override);
            const bool hard_failure = report.noninvertible_count > 0 && !report.bound_exceeded;
            write_report(out_path, "probe-open", std::move(config), json_of(report));
            return hard_failure ? kExitAssertionFailure : kExitOk;
        }

        if (cmd_cont->parsed()) {
            const auto x0 = x0_in.resolve(model, "--x0");
            ojson config{{"model", model_spec}, {"x0", config_entry(x0)}, {"epsilon", epsilon},
                         {"samples", probe_samples}, {"seed", seed}};
            const auto report =
                ifba::inversion_continuity_probe(fuzzy(), x0, epsilon, probe_samples, seed);
            write_report(out_path, "probe-continuity", std::move(config), json_of(report));
            return kExitOk;
        }

        if (cmd_tdz->parsed()) {
            const auto z = z_in.resolve(model, "--z");
            const auto side = tdz_side == "right" ? ifba::TdzSide::right : ifba::TdzSide::left;
            if (tdz_side != "left" && tdz_side != "right")
                throw ifba::ConfigError("side: must be 'left' or 'right'");
            ojson config{{"model", model_spec}, {"z", config_entry(z)}, {"r", tdz_r}, {"t", t},
                         {"horizon", tdz_horizon}, {"side", tdz_side}};
            const auto result = ifba::find_tdz_witness(fuzzy(), z, tdz_r, t, tdz_horizon, side);
            write_report(out_path, "tdz", std::move(config), json_of(result));
            return kExitOk;
        }

        if (cmd_tdzpop->parsed()) {
            ojson config{{"model", model_spec}, {"samples", pop_samples}, {"seed", seed},
                         {"r", pop_r}, {"t", t}};
            const auto report =
                ifba::verify_tdz_subset_singular(fuzzy(), pop_samples, seed, pop_r, t);
            const bool ok = report.violation_count == 0;
            write_report(out_path, "tdz-population", std::move(config), json_of(report));
            return ok ? kExitOk : kExitAssertionFailure;
        }

        if (cmd_sum->parsed()) return run_summarize(summarize_inputs, out_path, summarize_kind);

        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const ifba::DivergedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitAssertionFailure;
    } catch (const ifba::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
