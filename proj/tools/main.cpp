#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ganova/adjust.hpp"
#include "ganova/anova.hpp"
#include "ganova/dataset.hpp"
#include "ganova/errors.hpp"
#include "ganova/ganova.hpp"
#include "ganova/homogeneity.hpp"
#include "ganova/plot.hpp"
#include "ganova/simulate.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ganova::DataError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ganova::DataError("cannot write '" + path + "'");
    out << content;
}

// 4 significant digits for the text tables; JSON carries full precision.
std::string sig4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4g", v);
    return buf;
}

std::string pad_left(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    return s + std::string(width - s.size(), ' ');
}

ganova::GroupedData load_data(const std::string& path, const std::string& group_col,
                              const std::string& value_col, const std::string& transform,
                              bool sort) {
    ganova::GroupedData data = ganova::parse_long_csv(read_file(path), group_col, value_col);
    if (sort) data = ganova::sort_groups(data);
    if (transform == "sqrt") data = ganova::transform(data, ganova::Transform::sqrt);
    else if (transform == "log") data = ganova::transform(data, ganova::Transform::log);
    return data;
}

json anova_json(const ganova::AnovaTable& t) {
    return json{{"df_treat", t.df_treat}, {"df_err", t.df_err}, {"sstr", t.sstr},
                {"sse", t.sse},           {"mstr", t.mstr},     {"mse", t.mse},
                {"f", t.f},               {"p", t.p}};
}

void print_anova_text(const ganova::AnovaTable& t) {
    std::printf("Analysis of variance\n");
    std::printf("%-12s %5s %10s %10s %10s %9s\n", "Source", "Df", "Sum Sq", "Mean Sq",
                "F value", "Pr(>F)");
    std::printf("%-12s %5zu %10s %10s %10s %9s\n", "Treatments", t.df_treat,
                sig4(t.sstr).c_str(), sig4(t.mstr).c_str(), sig4(t.f).c_str(),
                sig4(t.p).c_str());
    std::printf("%-12s %5zu %10s %10s\n", "Residuals", t.df_err, sig4(t.sse).c_str(),
                sig4(t.mse).c_str());
}

void print_run_text(const ganova::GanovaResult& r) {
    print_anova_text(r.anova);
    std::printf("\nGroup tests (alpha=%s, method=%s)\n", sig4(r.alpha).c_str(),
                std::string(ganova::adjust_method_name(r.method)).c_str());
    std::size_t label_w = 5;
    for (const std::string& l : r.labels) label_w = std::max(label_w, l.size());
    std::printf("%s %10s %10s %10s %10s %10s  %s\n", pad_right("group", label_w).c_str(), "K",
                "p_raw", "p_adj", "K_adj", "DL", "flag");
    for (std::size_t g = 0; g < r.labels.size(); g++) {
        std::printf("%s %10s %10s %10s %10s %10s  %s\n", pad_right(r.labels[g], label_w).c_str(),
                    sig4(r.k[g]).c_str(), sig4(r.p_raw[g]).c_str(), sig4(r.p_adj[g]).c_str(),
                    sig4(r.k_adj[g]).c_str(), sig4(r.dl_k[g]).c_str(),
                    r.flags[g] ? "*" : "");
    }
    if (r.reject) {
        std::string flagged;
        for (std::size_t g = 0; g < r.labels.size(); g++)
            if (r.flags[g]) flagged += (flagged.empty() ? "" : ", ") + r.labels[g];
        std::printf("\nverdict: reject (outside the decision limit: %s)\n", flagged.c_str());
    } else {
        std::printf("\nverdict: fail to reject\n");
    }
}

int run_command(const std::string& path, const std::string& group_col,
                const std::string& value_col, const std::string& transform, bool sort,
                double alpha, const std::string& method_name, const std::string& format,
                const std::string& svg_k, const std::string& svg_p) {
    const ganova::GroupedData data = load_data(path, group_col, value_col, transform, sort);
    const ganova::AdjustMethod method = *ganova::parse_adjust_method(method_name);
    const ganova::GanovaResult r = ganova::run_ganova(data, alpha, method);

    if (!svg_k.empty())
        write_file(svg_k, ganova::render_chart(
                              r, ganova::ChartSpec{ganova::ChartMode::k_scale, 640.0, 480.0,
                                                   "K_adjusted by group"}));
    if (!svg_p.empty())
        write_file(svg_p, ganova::render_chart(
                              r, ganova::ChartSpec{ganova::ChartMode::p_scale, 640.0, 480.0,
                                                   "1 - p_adjusted by group"}));

    if (format == "json") {
        json out{{"labels", r.labels},
                 {"k", r.k},
                 {"p_raw", r.p_raw},
                 {"p_adj", r.p_adj},
                 {"k_adj", r.k_adj},
                 {"dl_k", r.dl_k},
                 {"dl_p", r.dl_p},
                 {"alpha", r.alpha},
                 {"method", std::string(ganova::adjust_method_name(r.method))},
                 {"flags", std::vector<bool>(r.flags.begin(), r.flags.end())},
                 {"reject", r.reject},
                 {"anova", anova_json(r.anova)}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        print_run_text(r);
    }
    return 0;
}

int table_command(const std::string& path, const std::string& group_col,
                  const std::string& value_col, const std::string& transform, bool sort,
                  const std::string& format) {
    const ganova::GroupedData data = load_data(path, group_col, value_col, transform, sort);
    const ganova::AnovaTable t = ganova::anova_table(ganova::decompose(data));
    if (format == "json")
        std::printf("%s\n", json{{"anova", anova_json(t)}}.dump(2).c_str());
    else
        print_anova_text(t);
    return 0;
}

int bartlett_command(const std::string& path, const std::string& group_col,
                     const std::string& value_col, const std::string& transform, bool sort,
                     const std::string& format) {
    const ganova::GroupedData data = load_data(path, group_col, value_col, transform, sort);
    const ganova::BartlettResult r = ganova::bartlett(data);
    if (format == "json")
        std::printf("%s\n",
                    json{{"statistic", r.statistic}, {"df", r.df}, {"p", r.p}}.dump(2).c_str());
    else
        std::printf("Bartlett test of homogeneity of variances\nstatistic = %s, df = %zu, "
                    "p = %s\n",
                    sig4(r.statistic).c_str(), r.df, sig4(r.p).c_str());
    return 0;
}

int simulate_command(std::size_t groups, std::size_t n, double alpha,
                     const std::vector<std::string>& method_names, std::size_t reps,
                     std::uint64_t seed, const std::string& format) {
    ganova::SimConfig cfg;
    cfg.groups = groups;
    cfg.group_size = n;
    cfg.alpha = alpha;
    cfg.reps = reps;
    cfg.seed = seed;
    if (!method_names.empty()) {
        cfg.methods.clear();
        for (const std::string& name : method_names)
            cfg.methods.push_back(*ganova::parse_sim_method(name));
    }
    const ganova::SimResult r = ganova::simulate_type1(cfg);

    if (format == "json") {
        json methods = json::array();
        for (const ganova::MethodEstimate& e : r.estimates)
            methods.push_back(json{{"method", std::string(ganova::sim_method_name(e.method))},
                                   {"rate", e.rate},
                                   {"se", e.se}});
        json out{{"groups", groups}, {"n", n},       {"alpha", alpha},
                 {"reps", r.reps},   {"seed", r.seed}, {"estimates", methods}};
        std::printf("%s\n", out.dump(2).c_str());
    } else {
        std::printf("Type I error simulation: G=%zu, n=%zu, alpha=%s, reps=%zu, seed=%llu\n",
                    groups, n, sig4(alpha).c_str(), r.reps,
                    static_cast<unsigned long long>(r.seed));
        std::printf("%-12s %8s %8s\n", "method", "rate", "se");
        for (const ganova::MethodEstimate& e : r.estimates)
            std::printf("%-12s %8s %8s\n",
                        std::string(ganova::sim_method_name(e.method)).c_str(),
                        sig4(e.rate).c_str(), sig4(e.se).c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gANOVA: per-group decomposition of the one-way ANOVA F test"};
    app.require_subcommand(1);

    std::string input, group_col = "group", value_col = "value", transform = "none";
    std::string format = "text", method = "bh", svg_k, svg_p;
    bool sort = false;
    double alpha = 0.05;

    const std::vector<std::string> transforms{"none", "sqrt", "log"};
    const std::vector<std::string> formats{"text", "json"};
    const std::vector<std::string> adjust_methods{"bonferroni", "sidak",  "holm", "hochberg",
                                                  "hommel",     "bh",     "by"};
    const std::vector<std::string> sim_methods{"bonferroni", "hommel", "bh", "anova"};

    auto add_data_options = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "CSV file in long format (group,value)")->required();
        cmd->add_option("--group-col", group_col, "group column name")->capture_default_str();
        cmd->add_option("--value-col", value_col, "value column name")->capture_default_str();
        cmd->add_option("--transform", transform, "value transform")
            ->transform(CLI::IsMember(transforms))
            ->capture_default_str();
        cmd->add_flag("--sort-groups", sort, "order groups lexicographically");
        cmd->add_option("--format", format, "output format")
            ->transform(CLI::IsMember(formats))
            ->capture_default_str();
    };

    CLI::App* run = app.add_subcommand("run", "simultaneous group test with decision limits");
    add_data_options(run);
    run->add_option("--alpha", alpha, "family-wise significance level")->capture_default_str();
    run->add_option("--method", method, "p-value adjustment")
        ->transform(CLI::IsMember(adjust_methods))
        ->capture_default_str();
    run->add_option("--svg-k", svg_k, "write the K_adjusted chart to this path");
    run->add_option("--svg-p", svg_p, "write the 1 - p_adjusted chart to this path");

    CLI::App* table = app.add_subcommand("table", "classical ANOVA table only");
    add_data_options(table);

    CLI::App* bart = app.add_subcommand("bartlett", "Bartlett variance homogeneity test");
    add_data_options(bart);

    CLI::App* sim = app.add_subcommand("simulate", "empirical Type I error under H0");
    std::size_t sim_groups = 3, sim_n = 10, sim_reps = 10000;
    std::uint64_t sim_seed = 1;
    std::vector<std::string> sim_method_names;
    sim->add_option("--groups", sim_groups, "number of groups")->capture_default_str();
    sim->add_option("--n", sim_n, "observations per group")->capture_default_str();
    sim->add_option("--alpha", alpha, "significance level")->capture_default_str();
    sim->add_option("--methods", sim_method_names, "rejection rules to tabulate")
        ->transform(CLI::IsMember(sim_methods));
    sim->add_option("--reps", sim_reps, "number of replications")->capture_default_str();
    sim->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
    sim->add_option("--format", format, "output format")
        ->transform(CLI::IsMember(formats))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }

    if (!(alpha > 0.0 && alpha < 1.0)) {
        std::cerr << "error: --alpha must lie in (0,1)" << std::endl;
        return 1;
    }

    try {
        if (*run)
            return run_command(input, group_col, value_col, transform, sort, alpha, method,
                               format, svg_k, svg_p);
        if (*table)
            return table_command(input, group_col, value_col, transform, sort, format);
        if (*bart)
            return bartlett_command(input, group_col, value_col, transform, sort, format);
        return simulate_command(sim_groups, sim_n, alpha, sim_method_names, sim_reps, sim_seed,
                                format);
    } catch (const ganova::DataError& e) {
        std::cerr << "data error: " << e.what() << std::endl;
        return 2;
    } catch (const ganova::DesignError& e) {
        std::cerr << "design error: " << e.what() << std::endl;
        return 2;
    } catch (const ganova::NumericError& e) {
        std::cerr << "numeric error: " << e.what() << std::endl;
        return 3;
    } catch (const ganova::DomainError& e) {
        std::cerr << "numeric error: " << e.what() << std::endl;
        return 3;
    }
}
