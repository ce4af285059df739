#ifndef SIEVELAB_CLI_HPP
#define SIEVELAB_CLI_HPP

// Command-line front end: enumerate, verify and audit over (n, k) ranges.

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "actions.hpp"
#include "clusterlab.hpp"
#include "cspverify.hpp"
#include "parallel.hpp"
#include "polygons.hpp"
#include "tableaux.hpp"

namespace sievelab {

enum class ExitCode { Ok = 0, VerificationFailed = 1, Usage = 2 };

enum class OutputFormat { Json, Csv, Text };

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Inclusive integer range written as "5", "2..5" or "2,4,7".
inline std::vector<int> parse_range(const std::string& s) {
    std::vector<int> out;
    auto to_int = [&](const std::string& t) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(t, &used);
        } catch (const std::exception&) {
            throw UsageError("bad range '" + s + "'");
        }
        if (used != t.size()) throw UsageError("bad range '" + s + "'");
        return v;
    };
    if (const auto dots = s.find(".."); dots != std::string::npos) {
        const int lo = to_int(s.substr(0, dots));
        const int hi = to_int(s.substr(dots + 2));
        for (int v = lo; v <= hi; ++v) out.push_back(v);
    } else {
        std::stringstream ss(s);
        std::string part;
        while (std::getline(ss, part, ',')) out.push_back(to_int(part));
    }
    if (out.empty()) throw UsageError("empty range '" + s + "'");
    return out;
}

struct RunConfig {
    std::string command;
    std::string selector;  // theorem for verify, audit name for audit
    std::optional<Family> family;
    std::vector<int> ns;
    std::vector<int> ks;
    ClassicalVariant variant = ClassicalVariant::Printed;
    int bc_step = RotationAction::kDefaultBcStep;
    OutputFormat format = OutputFormat::Json;
    int workers = 1;
    std::string out_path;
    bool exploratory = false;
    long limit = 0;  // 0: unlimited
};

namespace cli_detail {

using Json = nlohmann::ordered_json;

struct Outcome {
    Json json;
    bool pass = true;
    std::string csv;   // one or more rows, newline-terminated
    std::string text;  // one or more lines, newline-terminated
};

inline std::vector<std::pair<int, int>> grid(const RunConfig& c) {
    std::vector<std::pair<int, int>> g;
    for (int n : c.ns)
        for (int k : c.ks) g.emplace_back(n, k);
    return g;
}

inline std::string scalar_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

// Flat CSV/text rendering from the scalar fields of a JSON report.
inline std::vector<std::string> scalar_keys(const Json& j) {
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!it.value().is_structured()) keys.push_back(it.key());
    return keys;
}

inline std::string csv_field(std::string s) {
    if (s.find_first_of(",\" ") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

inline std::string scalar_csv_row(const Json& j) {
    std::string row;
    bool first = true;
    for (const auto& key : scalar_keys(j)) {
        if (!first) row += ',';
        first = false;
        row += csv_field(scalar_string(j[key]));
    }
    return row + "\n";
}

inline std::string scalar_text_line(const std::string& prefix, const Json& j) {
    std::string line = prefix;
    for (const auto& key : scalar_keys(j))
        if (key != "n" && key != "k") line += " " + key + "=" + scalar_string(j[key]);
    return line + "\n";
}

inline Outcome scalar_outcome(const std::string& prefix, Json j, bool pass) {
    Outcome o;
    o.csv = scalar_csv_row(j);
    o.text = scalar_text_line(prefix, j);
    o.json = std::move(j);
    o.pass = pass;
    return o;
}

inline Outcome run_enumerate(const RunConfig& c, int n, int k) {
    const Family f = *c.family;
    check_polygon_parameter(f, n);
    if (k < 0) throw UsageError("k must be nonnegative");
    const auto xs = enumerate(f, n, k);
    Outcome o;
    Json items = Json::array();
    std::ostringstream csv, text;
    text << family_name(f) << " n=" << n << " k=" << k << "\n";
    const std::size_t shown = c.limit > 0 ? std::min<std::size_t>(xs.size(), c.limit) : xs.size();
    for (std::size_t i = 0; i < shown; ++i) {
        items.push_back(to_json(xs[i]));
        csv << family_name(f) << ',' << n << ',' << k << ',' << i << ',' << csv_field(to_string(xs[i])) << '\n';
        text << "  " << to_string(xs[i]) << "\n";
    }
    text << "  count: " << xs.size() << "\n";
    o.json["family"] = family_name(f);
    o.json["n"] = n;
    o.json["k"] = k;
    o.json["count"] = xs.size();
    o.json["truncated"] = shown < xs.size();
    o.json["items"] = std::move(items);
    o.csv = csv.str();
    o.text = text.str();
    return o;
}

inline Outcome run_verify(const RunConfig& c, int n, int k) {
    const Theorem t = parse_theorem(c.selector);
    if (t == Theorem::OrbitPoly && !c.family) throw UsageError("verify --theorem orbit-poly needs --family");
    const std::optional<Family> fam = t == Theorem::OrbitPoly ? c.family : std::nullopt;
    if (t != Theorem::OrbitPoly && c.family && *c.family != *theorem_family(t))
        throw UsageError("--family does not match --theorem");
    if (k < 0) throw UsageError("k must be nonnegative");
    const CspReport r = verify(make_instance(t, n, k, fam, c.variant, c.bc_step));
    Outcome o;
    o.json = to_json(r);
    o.pass = r.csp_holds;
    o.csv = to_csv_rows(r);
    std::ostringstream text;
    text << theorem_name(t) << ' ' << family_name(r.instance.family) << " n=" << n << " k=" << k;
    if (r.instance.variant) text << " variant=" << variant_name(*r.instance.variant);
    text << ": " << (r.csp_holds ? "holds" : "FAILS") << "\n";
    for (const auto& ch : r.checks)
        text << "  d=" << ch.d << " fixed=" << ch.fixed << " eval=" << ch.evaluation.to_string()
             << (ch.pass ? "" : "  MISMATCH") << "\n";
    o.text = text.str();
    return o;
}

inline Family audit_family(const RunConfig& c, Family fallback) {
    const Family f = c.family.value_or(fallback);
    if (is_classical(f)) throw UsageError("audit needs family A, C or D");
    return f;
}

inline Outcome run_audit(const RunConfig& c, int n, int k) {
    if (k < 0) throw UsageError("k must be nonnegative");
    const std::string& a = c.selector;
    const std::string prefix = a + " n=" + std::to_string(n) + " k=" + std::to_string(k) + ":";
    if (a == "basis-A") {
        if (n < 3) throw UsageError("basis-A needs n >= 3");
        const auto r = check_basis_A(n, k);
        return scalar_outcome(prefix, to_json(r), r.pass);
    }
    if (a == "basis-C") {
        if (n < 2) throw UsageError("basis-C needs n >= 2");
        const auto r = check_basis_C(n, k);
        return scalar_outcome(prefix, to_json(r), r.pass);
    }
    if (a == "conjecture-D") {
        if (n < 2) throw UsageError("conjecture-D needs n >= 2");
        const auto r = check_conjecture_D(n, k);
        return scalar_outcome(prefix, to_json(r), r.pass);
    }
    if (a == "equivariance") {
        const Family f = audit_family(c, Family::A);
        check_polygon_parameter(f, n);
        const auto r = verify_equivariance(f, n, k);
        return scalar_outcome(prefix, to_json(r), r.pass);
    }
    if (a == "characters") {
        const Family f = audit_family(c, Family::A);
        check_polygon_parameter(f, n);
        Json j;
        j["family"] = family_name(f);
        j["n"] = n;
        j["k"] = k;
        bool pass = true;
        if (f == Family::A) {
            const bool principal = character_check_A(n, k, principal_point(n));
            const bool ones = character_check_A(n, k, ones_point(n));
            j["principal_point"] = principal;
            j["ones_point"] = ones;
            pass = principal && ones;
        } else if (f == Family::C) {
            std::vector<long> y;
            for (int i = 0; i < n; ++i) y.push_back(i + 2);
            const auto r = character_check_C(n, k, y);
            j["trace"] = r.trace.to_string();
            j["expected"] = r.expected.to_string();
            pass = r.pass;
        } else {
            const SpecPoint z{IntLaurentPoly(1), IntLaurentPoly::monomial(n)};
            const bool principal = character_check_D(n, k, principal_point(n, 2), z);
            const bool ones = character_check_D(n, k, ones_point(n), ones_point(2));
            j["principal_point"] = principal;
            j["ones_point"] = ones;
            pass = principal && ones;
        }
        j["pass"] = pass;
        return scalar_outcome(prefix, std::move(j), pass);
    }
    if (a == "folding") {
        if (n < 2) throw UsageError("folding needs n >= 2");
        const auto consistency = verify_folding_consistency(n, k);
        Json j;
        j["n"] = n;
        j["k"] = k;
        j["consistency"] = to_json(consistency);
        Json bij = Json::array();
        bool pass = consistency.pass;
        for (int d = 2; d <= 2 * n; d += 2) {
            if ((2 * n) % d != 0) continue;
            const auto r = fold_bijection_check(n, d, k);
            pass = pass && r.pass;
            bij.push_back(to_json(r));
        }
        for (int d = 1; d <= 2 * n; d += 2) {
            if ((2 * n) % d != 0) continue;
            const auto w = odd_power_correspondence(n, d, k);
            pass = pass && w.is_bijection;
            bij.push_back({{"d", d}, {"d_side_count", w.d_side_count}, {"c_side_count", w.c_side_count},
                           {"all_balanced", w.all_balanced}, {"pass", w.is_bijection}});
        }
        j["bijections"] = std::move(bij);
        j["pass"] = pass;
        return scalar_outcome(prefix, std::move(j), pass);
    }
    throw UsageError("unknown audit '" + a + "'");
}

}  // namespace cli_detail

/// Runs one command over its (n, k) grid. Throws UsageError for bad
/// configurations discovered before any output is written.
inline int run_config(const RunConfig& c, std::ostream& out) {
    using cli_detail::Outcome;
    const auto cells = cli_detail::grid(c);
    const auto outcomes = parallel_map(cells, resolve_workers(c.workers), [&](const std::pair<int, int>& nk) {
        if (c.command == "enumerate") return cli_detail::run_enumerate(c, nk.first, nk.second);
        if (c.command == "verify") return cli_detail::run_verify(c, nk.first, nk.second);
        return cli_detail::run_audit(c, nk.first, nk.second);
    });
    bool all = true;
    for (const auto& o : outcomes) all = all && o.pass;

    std::ostringstream buf;
    switch (c.format) {
        case OutputFormat::Json: {
            cli_detail::Json doc;
            doc["command"] = c.command;
            if (!c.selector.empty()) doc[c.command == "verify" ? "theorem" : "audit"] = c.selector;
            cli_detail::Json results = cli_detail::Json::array();
            for (const auto& o : outcomes) results.push_back(o.json);
            doc["results"] = std::move(results);
            if (c.command != "enumerate") doc["all_pass"] = all;
            if (c.exploratory) doc["exploratory"] = true;
            buf << doc.dump(2) << "\n";
            break;
        }
        case OutputFormat::Csv: {
            if (c.command == "verify") buf << csp_csv_header() << "\n";
            else if (c.command == "enumerate") buf << "family,n,k,index,multidissection\n";
            else if (!outcomes.empty()) {
                const auto keys = cli_detail::scalar_keys(outcomes.front().json);
                for (std::size_t i = 0; i < keys.size(); ++i) buf << (i ? "," : "") << keys[i];
                buf << "\n";
            }
            for (const auto& o : outcomes) buf << o.csv;
            break;
        }
        case OutputFormat::Text:
            for (const auto& o : outcomes) buf << o.text;
            if (c.command != "enumerate") buf << (all ? "all checks hold" : "some checks FAIL") << "\n";
            break;
    }
    if (c.out_path.empty()) {
        out << buf.str();
    } else {
        std::ofstream file(c.out_path, std::ios::binary);
        if (!file) throw UsageError("cannot open --out file '" + c.out_path + "'");
        file << buf.str();
    }
    if (all || c.exploratory) return static_cast<int>(ExitCode::Ok);
    return static_cast<int>(ExitCode::VerificationFailed);
}

/// Parses argv-style arguments (without the program name) and runs the
/// command. Returns the process exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic sieving experiments on polygon multidissections", "sievelab"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string family, n_range, k_range, variant = "printed", format = "json";

    auto add_common = [&](CLI::App* sub, bool family_required) {
        auto* fam = sub->add_option("--family", family, "A, C, D, classicalA, classicalBC or classicalD");
        if (family_required) fam->required();
        sub->add_option("--n", n_range, "polygon parameter: 5, 2..5 or 2,4")->required();
        sub->add_option("--k", k_range, "edge count: 3, 0..4 or 1,3")->required();
        sub->add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
        sub->add_option("--workers", cfg.workers, "worker threads (SIEVE_LAB_WORKERS overrides)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out_path, "write output here instead of stdout");
        sub->add_option("--step", cfg.bc_step, "classicalBC generator step in vertices of P_2n")
            ->check(CLI::Range(1, 1 << 20));
    };

    auto* en = app.add_subcommand("enumerate", "list k-edge (multi)dissections");
    add_common(en, true);
    en->add_option("--limit", cfg.limit, "list at most this many items per (n,k); the count stays exact")
        ->check(CLI::NonNegativeNumber);

    auto* ve = app.add_subcommand("verify", "check a cyclic sieving statement");
    add_common(ve, false);
    ve->add_option("--theorem", cfg.selector, "thm2.5, thm3.4, thm4.6, thm1.1-1, thm1.1-2, thm1.1-3 or orbit-poly")
        ->required()
        ->check(CLI::IsMember({"thm2.5", "thm3.4", "thm4.6", "thm1.1-1", "thm1.1-2", "thm1.1-3", "orbit-poly"}));
    ve->add_option("--variant", variant, "classicalBC product formula: printed or shifted")
        ->check(CLI::IsMember({"printed", "shifted"}));
    ve->add_flag("--exploratory", cfg.exploratory, "exit 0 even when a check fails");

    auto* au = app.add_subcommand("audit", "exact algebra audits");
    au->add_option("selector", cfg.selector, "basis-A, basis-C, conjecture-D, equivariance, characters or folding")
        ->required()
        ->check(CLI::IsMember({"basis-A", "basis-C", "conjecture-D", "equivariance", "characters", "folding"}));
    add_common(au, false);
    au->add_flag("--exploratory", cfg.exploratory, "exit 0 even when a check fails");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ExitCode::Usage);
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        if (!family.empty()) cfg.family = parse_family(family);
        cfg.ns = parse_range(n_range);
        cfg.ks = parse_range(k_range);
        cfg.variant = parse_variant(variant);
        cfg.format = format == "csv" ? OutputFormat::Csv : format == "text" ? OutputFormat::Text : OutputFormat::Json;
        return run_config(cfg, out);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    }
}

}  // namespace sievelab

#endif  // SIEVELAB_CLI_HPP
