// Command-line front end: order grids, distinguished-parabolic and table
// generation, Witt-vector arithmetic, Artin-Hasse coefficients, commuting-
// variety censuses, and the verification suites. All output is UTF-8 JSON
// (single document, or JSON lines for verify) or RFC 4180 CSV; every
// randomized run is reproducible from the single --seed value.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "unip/suites.hpp"

using json = nlohmann::ordered_json;
using namespace unip;

namespace {

struct OutputOptions {
    std::string format = "json";
    std::string path;  // empty: stdout
};

void emit(const std::string& text, const OutputOptions& opts) {
    if (opts.path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opts.path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + opts.path);
    f << text;
}

std::string csv_escape(const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += "\"\"";
        else
            out += c;
    }
    out += "\"";
    return out;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream out;
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << csv_escape(header[i]);
    out << "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
        out << "\r\n";
    }
    return out.str();
}

std::vector<std::uint64_t> parse_primes(const std::string& csv) {
    std::vector<std::uint64_t> primes;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::uint64_t p = std::stoull(item);
        if (!is_prime(p)) throw std::invalid_argument("not a prime: " + item);
        primes.push_back(p);
    }
    if (primes.empty()) throw std::invalid_argument("empty prime list");
    return primes;
}

std::vector<long> parse_coords(const std::string& csv) {
    std::vector<long> coords;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) coords.push_back(std::stol(item));
    return coords;
}

json root_system_dump(const RootSystem& rs) {
    json roots = json::array();
    for (const Root& r : rs.positive_roots()) {
        json row;
        row["coeffs"] = r.coeffs;
        row["height"] = r.height;
        row["coroot"] = r.coroot;
        row["long"] = r.is_long;
        row["short"] = r.is_short;
        roots.push_back(row);
    }
    json out;
    out["name"] = rs.name();
    out["rank"] = rs.rank();
    out["cartan"] = rs.cartan();
    out["positive_roots"] = roots;
    return out;
}

int cmd_ordergrid(const std::string& family, const std::vector<std::uint64_t>& primes,
                  const OutputOptions& opts) {
    RootSystem rs = parse_root_system(family);
    std::vector<std::vector<std::string>> csv_rows;
    json rows = json::array();
    for (const auto& levi : enumerate_distinguished(rs)) {
        GradedParabolic gp = grade(rs, levi);
        int nP = n_of_P(gp);
        for (std::uint64_t p : primes) {
            int m = order_exponent(p, nP);
            Integer order = ipow(p, static_cast<unsigned long>(m));
            bool good = rs.is_good_prime(p);
            json row;
            row["family"] = family;
            row["levi"] = gp.levi_string();
            row["nP"] = nP;
            row["p"] = p;
            row["m"] = m;
            row["predicted_order"] = order.get_str();
            row["good_prime"] = good;
            rows.push_back(row);
            csv_rows.push_back({family, gp.levi_string(), std::to_string(nP), std::to_string(p),
                                std::to_string(m), order.get_str(), good ? "true" : "false"});
        }
    }
    if (opts.format == "csv") {
        emit(to_csv({"family", "levi", "nP", "p", "m", "predicted_order", "good_prime"}, csv_rows),
             opts);
    } else {
        json doc;
        doc["command"] = "ordergrid";
        doc["family"] = family;
        doc["rows"] = rows;
        emit(doc.dump(2) + "\n", opts);
    }
    return 0;
}

int cmd_distinguished(const std::string& family, bool include_roots, const OutputOptions& opts) {
    RootSystem rs = parse_root_system(family);
    json list = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const auto& levi : enumerate_distinguished(rs)) {
        GradedParabolic gp = grade(rs, levi);
        json row;
        row["levi"] = gp.levi_string();
        row["nP"] = n_of_P(gp);
        row["lcs_class"] = lcs_class(gp);
        json dims;
        for (const auto& [deg, dim] : gp.graded_dims())
            if (deg >= 0) dims[std::to_string(deg)] = dim;
        row["graded_dims"] = dims;
        list.push_back(row);
        csv_rows.push_back({family, gp.levi_string(), std::to_string(n_of_P(gp)),
                            std::to_string(lcs_class(gp))});
    }
    if (opts.format == "csv") {
        emit(to_csv({"family", "levi", "nP", "lcs_class"}, csv_rows), opts);
    } else {
        json doc;
        doc["command"] = "distinguished";
        doc["family"] = family;
        doc["distinguished"] = list;
        if (include_roots) doc["root_system"] = root_system_dump(rs);
        emit(doc.dump(2) + "\n", opts);
    }
    return 0;
}

int cmd_tables(const OutputOptions& opts) {
    json rows = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (const char* family : {"G2", "F4", "E6", "E7", "E8"}) {
        RootSystem rs = parse_root_system(family);
        const auto& comp = rs.components()[0];
        int two_h = 2 * rs.coxeter_number() - 2;
        int weight_index = minimal_module_weight_index(comp.family, comp.rank);
        long n_vmin = n_of_minimal_module(rs);
        std::uint64_t p0 = exponential_type_threshold(rs).p0;
        json row;
        row["family"] = family;
        row["two_h_minus_2"] = two_h;
        row["vmin"] = "w" + std::to_string(weight_index);
        row["n_vmin"] = n_vmin;
        row["p0"] = p0;
        rows.push_back(row);
        csv_rows.push_back({family, std::to_string(two_h), "w" + std::to_string(weight_index),
                            std::to_string(n_vmin), std::to_string(p0)});
    }
    if (opts.format == "csv") {
        emit(to_csv({"family", "two_h_minus_2", "vmin", "n_vmin", "p0"}, csv_rows), opts);
    } else {
        json doc;
        doc["command"] = "tables";
        doc["rows"] = rows;
        emit(doc.dump(2) + "\n", opts);
    }
    return 0;
}

WittVector<Fp> witt_from_coords(std::uint64_t p, int n, const std::vector<long>& coords) {
    if (static_cast<int>(coords.size()) != n)
        throw std::invalid_argument("coordinate count does not match --n");
    WittVector<Fp> w = witt_zero(p, n, Fp(0, p));
    for (int i = 0; i < n; ++i) w.coords[i] = Fp::from_int(coords[i], p);
    return w;
}

json witt_json(const WittVector<Fp>& w) {
    json coords = json::array();
    for (const auto& c : w.coords) coords.push_back(c.value());
    return coords;
}

int cmd_witt_add(std::uint64_t p, int n, const std::string& a_csv, const std::string& b_csv,
                 const OutputOptions& opts) {
    WittVector<Fp> a = witt_from_coords(p, n, parse_coords(a_csv));
    WittVector<Fp> b = witt_from_coords(p, n, parse_coords(b_csv));
    WittVector<Fp> sum = witt_add(a, b);
    json doc;
    doc["command"] = "witt add";
    doc["p"] = p;
    doc["n"] = n;
    doc["a"] = witt_json(a);
    doc["b"] = witt_json(b);
    doc["sum"] = witt_json(sum);
    emit(doc.dump(2) + "\n", opts);
    return 0;
}

int cmd_witt_order(std::uint64_t p, int n, const std::string& a_csv, const OutputOptions& opts) {
    WittVector<Fp> a = witt_from_coords(p, n, parse_coords(a_csv));
    json doc;
    doc["command"] = "witt order";
    doc["p"] = p;
    doc["n"] = n;
    doc["a"] = witt_json(a);
    doc["order"] = witt_order(a).get_str();
    emit(doc.dump(2) + "\n", opts);
    return 0;
}

int cmd_witt_sumpolys(std::uint64_t p, int n, const OutputOptions& opts) {
    const auto& polys = witt_sum_polynomials(p, n);
    json doc;
    doc["command"] = "witt sumpolys";
    doc["p"] = p;
    doc["n"] = n;
    json list = json::array();
    for (const auto& s : polys) list.push_back(s.str());
    doc["polynomials"] = list;
    emit(doc.dump(2) + "\n", opts);
    return 0;
}

int cmd_ah(std::uint64_t p, unsigned terms, const OutputOptions& opts) {
    AHSeries f = ah_series(p, terms);
    json rows = json::array();
    std::vector<std::vector<std::string>> csv_rows;
    for (unsigned m = 0; m <= terms; ++m) {
        const Rational& c = f.series[m];
        int valuation = c == 0 ? 0 : vp(c, p);
        json row;
        row["m"] = m;
        row["coefficient"] = rational_string(c);
        row["vp"] = c == 0 ? json(nullptr) : json(valuation);
        rows.push_back(row);
        csv_rows.push_back(
            {std::to_string(m), rational_string(c), c == 0 ? "" : std::to_string(valuation)});
    }
    if (opts.format == "csv") {
        emit(to_csv({"m", "coefficient", "vp"}, csv_rows), opts);
    } else {
        json doc;
        doc["command"] = "ah";
        doc["p"] = p;
        doc["terms"] = terms;
        doc["coefficients"] = rows;
        emit(doc.dump(2) + "\n", opts);
    }
    return 0;
}

AmbientBasis parse_ambient(const std::string& spec, std::uint64_t p) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("ambient must look like strict-upper:3 or gl:2");
    std::string kind = spec.substr(0, colon);
    int n = std::stoi(spec.substr(colon + 1));
    if (kind == "strict-upper") return strict_upper_ambient(n, p);
    if (kind == "gl") return gl_ambient(n, p);
    throw std::invalid_argument("unknown ambient kind: " + kind);
}

int cmd_census(std::uint64_t p, int d, const std::string& ambient_spec, const OutputOptions& opts) {
    AmbientBasis ambient = parse_ambient(ambient_spec, p);
    auto start = std::chrono::steady_clock::now();
    Integer count = census(ambient, d);
    auto end = std::chrono::steady_clock::now();
    json doc;
    doc["command"] = "commvar census";
    doc["p"] = p;
    doc["d"] = d;
    doc["ambient"] = ambient.label;
    doc["ambient_dim"] = ambient.basis.size();
    doc["count"] = count.get_str();
    doc["wall_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    emit(doc.dump(2) + "\n", opts);
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteConfig& cfg, const OutputOptions& opts) {
    std::vector<CheckResult> results = run_suite(suite, cfg);
    bool all_pass = true;
    std::ostringstream out;
    if (opts.format == "csv") {
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : results) {
            rows.push_back({r.id, r.pass ? "true" : "false", r.detail});
            all_pass = all_pass && r.pass;
        }
        out << to_csv({"id", "pass", "detail"}, rows);
    } else {
        for (const auto& r : results) {
            json row;
            row["id"] = r.id;
            row["pass"] = r.pass;
            row["detail"] = r.detail;
            out << row.dump() << "\n";
            all_pass = all_pass && r.pass;
        }
    }
    emit(out.str(), opts);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic computational Lie theory: unipotent orders, Witt vectors, "
                 "Artin-Hasse exponentials"};
    app.require_subcommand(1);

    OutputOptions opts;
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", opts.path, "output path (default: stdout)");

    // ordergrid
    auto* ordergrid =
        app.add_subcommand("ordergrid", "order predictions per distinguished parabolic");
    std::string og_family;
    std::string og_primes = "2,3,5,7";
    ordergrid->add_option("--family", og_family, "root system, e.g. G2")->required();
    ordergrid->add_option("--primes", og_primes, "comma-separated primes")->capture_default_str();

    // distinguished
    auto* distinguished =
        app.add_subcommand("distinguished", "distinguished parabolics of a family");
    std::string di_family;
    bool di_roots = false;
    distinguished->add_option("--family", di_family, "root system, e.g. F4")->required();
    distinguished->add_flag("--include-roots", di_roots, "include the root system dump");

    // tables
    auto* tables = app.add_subcommand("tables", "exceptional-type thresholds");

    // witt
    auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
    witt->require_subcommand(1);
    std::uint64_t w_p = 2;
    int w_n = 2;
    std::string w_a, w_b;
    auto* witt_add_cmd = witt->add_subcommand("add", "add two Witt vectors over F_p");
    witt_add_cmd->add_option("--p", w_p)->required();
    witt_add_cmd->add_option("--n", w_n)->required();
    witt_add_cmd->add_option("--a", w_a, "comma-separated coordinates")->required();
    witt_add_cmd->add_option("--b", w_b, "comma-separated coordinates")->required();
    auto* witt_order_cmd = witt->add_subcommand("order", "order of a Witt vector over F_p");
    witt_order_cmd->add_option("--p", w_p)->required();
    witt_order_cmd->add_option("--n", w_n)->required();
    witt_order_cmd->add_option("--a", w_a, "comma-separated coordinates")->required();
    auto* witt_sum_cmd = witt->add_subcommand("sumpolys", "universal sum polynomials");
    witt_sum_cmd->add_option("--p", w_p)->required();
    witt_sum_cmd->add_option("--n", w_n)->required();

    // ah
    auto* ah = app.add_subcommand("ah", "Artin-Hasse series coefficients");
    std::uint64_t ah_p = 2;
    unsigned ah_terms = 20;
    ah->add_option("--p", ah_p)->required();
    ah->add_option("--terms", ah_terms)->required();

    // commvar census
    auto* commvar = app.add_subcommand("commvar", "commuting-variety operations");
    commvar->require_subcommand(1);
    auto* census_cmd = commvar->add_subcommand("census", "count commuting p-nilpotent tuples");
    std::uint64_t cv_p = 2;
    int cv_d = 1;
    std::string cv_ambient = "strict-upper:3";
    census_cmd->add_option("--p", cv_p)->required();
    census_cmd->add_option("--d", cv_d)->required();
    census_cmd->add_option("--ambient", cv_ambient, "strict-upper:N or gl:N")
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string v_suite;
    SuiteConfig cfg;
    std::string v_primes = "2,3,5,7";
    verify->add_option("--suite", v_suite, "orders|witt|artinhasse|bch|commvar|all")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--seed", cfg.seed, "seed for every randomized stream")->required();
    verify->add_option("--trials", cfg.trials, "sampling trials per case")->capture_default_str();
    verify->add_option("--max-rank", cfg.max_rank, "largest gl rank in the orders grid")
        ->capture_default_str();
    verify->add_option("--primes", v_primes, "primes for the gl orders grid")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*ordergrid) return cmd_ordergrid(og_family, parse_primes(og_primes), opts);
        if (*distinguished) return cmd_distinguished(di_family, di_roots, opts);
        if (*tables) return cmd_tables(opts);
        if (*witt_add_cmd) return cmd_witt_add(w_p, w_n, w_a, w_b, opts);
        if (*witt_order_cmd) return cmd_witt_order(w_p, w_n, w_a, opts);
        if (*witt_sum_cmd) return cmd_witt_sumpolys(w_p, w_n, opts);
        if (*ah) return cmd_ah(ah_p, ah_terms, opts);
        if (*census_cmd) return cmd_census(cv_p, cv_d, cv_ambient, opts);
        if (*verify) {
            cfg.primes = parse_primes(v_primes);
            return cmd_verify(v_suite, cfg, opts);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
